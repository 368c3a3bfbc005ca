//! Chordal graphs: recognition, perfect elimination orderings, clique number,
//! elimination fill-in, and the minimum over chordal completions of the
//! largest clique.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Vertex counts up to this are solved by trying every elimination ordering.
pub const EXHAUSTIVE_ORDERING_BOUND: usize = 8;

/// Default size limit of [`is_chordal_bruteforce`].
pub const BRUTE_FORCE_CYCLE_BOUND: usize = 10;

/// A permutation of `0..vertex_count`; `order[i]` is eliminated `i`-th.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EliminationOrdering(Vec<usize>);

impl EliminationOrdering {
    pub fn new(order: Vec<usize>, vertex_count: usize) -> Result<Self> {
        if !crate::graph::is_permutation(&order, vertex_count) {
            return Err(Error::PreconditionViolation(format!(
                "{order:?} is not an ordering of {vertex_count} vertices"
            )));
        }
        Ok(EliminationOrdering(order))
    }

    pub fn identity(vertex_count: usize) -> Self {
        EliminationOrdering((0..vertex_count).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordalCompletion {
    pub base: SimpleGraph,
    /// Sorted, each `(u, v)` with `u < v`, disjoint from `base.edges()`.
    pub fill_edges: Vec<(usize, usize)>,
    pub completed: SimpleGraph,
}

/// Whether every vertex's neighbors later in `ordering` are pairwise adjacent.
pub fn is_perfect_elimination_ordering(g: &SimpleGraph, ordering: &EliminationOrdering) -> bool {
    if ordering.len() != g.vertex_count() {
        return false;
    }
    let pos = ordering.positions();
    ordering.as_slice().iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| pos[u] > pos[v]).collect();
        later
            .iter()
            .enumerate()
            .all(|(i, &a)| later[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}

/// Maximum cardinality search; returns vertices in visit order.
fn maximum_cardinality_search(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("an unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    order
}

/// A perfect elimination ordering if `g` is chordal: the reverse of a
/// maximum cardinality search order, verified.
pub fn perfect_elimination_ordering(g: &SimpleGraph) -> Option<EliminationOrdering> {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    let peo = EliminationOrdering(order);
    is_perfect_elimination_ordering(g, &peo).then_some(peo)
}

pub fn is_chordal(g: &SimpleGraph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

/// Chordality by scanning every cycle of length at least four for a chord.
/// Exponential; refuses graphs above [`BRUTE_FORCE_CYCLE_BOUND`] vertices.
pub fn is_chordal_bruteforce(g: &SimpleGraph) -> Result<bool> {
    is_chordal_bruteforce_bounded(g, BRUTE_FORCE_CYCLE_BOUND)
}

pub fn is_chordal_bruteforce_bounded(g: &SimpleGraph, bound: usize) -> Result<bool> {
    if g.vertex_count() > bound {
        return Err(Error::BoundExceeded {
            what: "brute-force cycle scan",
            size: g.vertex_count(),
            bound,
        });
    }

    fn has_chord(g: &SimpleGraph, cycle: &[usize]) -> bool {
        let k = cycle.len();
        (0..k).any(|i| {
            (i + 2..k)
                .filter(|&j| !(i == 0 && j == k - 1))
                .any(|j| g.has_edge(cycle[i], cycle[j]))
        })
    }

    // Each cycle is rooted at its smallest vertex and walked in both directions.
    fn extend(g: &SimpleGraph, path: &mut Vec<usize>, on_path: &mut [bool]) -> bool {
        let start = path[0];
        let last = *path.last().expect("path is nonempty");
        for &w in g.neighbors(last) {
            if w == start && path.len() >= 4 && !has_chord(g, path) {
                return false;
            }
            if w > start && !on_path[w] {
                path.push(w);
                on_path[w] = true;
                let ok = extend(g, path, on_path);
                on_path[w] = false;
                path.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    let mut on_path = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        on_path[s] = true;
        let ok = extend(g, &mut vec![s], &mut on_path);
        on_path[s] = false;
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

fn neighbor_sets(g: &SimpleGraph) -> Vec<FixedBitSet> {
    let n = g.vertex_count();
    (0..n)
        .map(|v| {
            let mut s = FixedBitSet::with_capacity(n);
            for &u in g.neighbors(v) {
                s.insert(u);
            }
            s
        })
        .collect()
}

/// A largest clique, by Bron–Kerbosch with Tomita pivoting.
pub fn maximum_clique(g: &SimpleGraph) -> Vec<usize> {
    fn expand(
        adj: &[FixedBitSet],
        clique: &mut Vec<usize>,
        mut candidates: FixedBitSet,
        mut excluded: FixedBitSet,
        best: &mut Vec<usize>,
    ) {
        if candidates.is_clear() {
            if excluded.is_clear() && clique.len() > best.len() {
                *best = clique.clone();
            }
            return;
        }
        if clique.len() + candidates.count_ones(..) <= best.len() {
            return;
        }
        let pivot = candidates
            .ones()
            .chain(excluded.ones())
            .max_by_key(|&u| candidates.intersection(&adj[u]).count())
            .expect("candidates is nonempty");
        let branch: Vec<usize> = candidates.difference(&adj[pivot]).collect();
        for v in branch {
            let mut next_c = candidates.clone();
            next_c.intersect_with(&adj[v]);
            let mut next_x = excluded.clone();
            next_x.intersect_with(&adj[v]);
            clique.push(v);
            expand(adj, clique, next_c, next_x, best);
            clique.pop();
            candidates.set(v, false);
            excluded.insert(v);
        }
    }

    let n = g.vertex_count();
    let adj = neighbor_sets(g);
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let mut best = Vec::new();
    expand(&adj, &mut Vec::new(), all, FixedBitSet::with_capacity(n), &mut best);
    best.sort_unstable();
    best
}

/// Size of the largest complete subgraph; `0` for the empty graph.
pub fn clique_number(g: &SimpleGraph) -> usize {
    maximum_clique(g).len()
}

/// Eliminates vertices in `ordering`, turning each vertex's later neighbors
/// into a clique. `ordering` is a perfect elimination ordering of the result.
pub fn fill_in(g: &SimpleGraph, ordering: &EliminationOrdering) -> Result<ChordalCompletion> {
    let n = g.vertex_count();
    if ordering.len() != n {
        return Err(Error::PreconditionViolation(format!(
            "ordering has {} vertices, graph has {n}",
            ordering.len()
        )));
    }
    let pos = ordering.positions();
    let mut adj = neighbor_sets(g);
    let mut fill = Vec::new();
    for &v in ordering.as_slice() {
        let later: Vec<usize> = adj[v].ones().filter(|&u| pos[u] > pos[v]).collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                if !adj[a].contains(b) {
                    adj[a].insert(b);
                    adj[b].insert(a);
                    fill.push((a.min(b), a.max(b)));
                }
            }
        }
    }
    fill.sort_unstable();
    let completed = g.with_edges(fill.iter().copied())?;
    Ok(ChordalCompletion {
        base: g.clone(),
        fill_edges: fill,
        completed,
    })
}

/// Width of an elimination ordering: the clique number of its fill-in graph.
pub fn ordering_width(g: &SimpleGraph, ordering: &EliminationOrdering) -> Result<usize> {
    Ok(clique_number(&fill_in(g, ordering)?.completed))
}

/// Minimum over chordal completions of `g` of the largest clique size
/// (treewidth + 1 for nonempty graphs, 0 for the empty graph).
pub fn min_completion_width(g: &SimpleGraph) -> usize {
    if g.vertex_count() <= EXHAUSTIVE_ORDERING_BOUND {
        min_completion_width_exhaustive(g)
    } else {
        min_completion_width_branch_and_bound(g)
    }
}

/// Tries all `n!` orderings. Intended for small graphs only.
///
/// Orderings sharing a prefix share its elimination, so each prefix is
/// processed once. Panics above 64 vertices.
pub fn min_completion_width_exhaustive(g: &SimpleGraph) -> usize {
    let adj = g
        .adjacency_masks()
        .expect("exhaustive search needs at most 64 vertices");
    let all = if adj.len() == 64 {
        u64::MAX
    } else {
        (1u64 << adj.len()) - 1
    };
    every_ordering(&adj, all, 0)
}

fn every_ordering(adj: &[u64], remaining: u64, running: usize) -> usize {
    if remaining == 0 {
        return running;
    }
    let mut best = usize::MAX;
    let mut rest = remaining;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let later = adj[v] & remaining & !(1 << v);
        let size = 1 + later.count_ones() as usize;
        let mut next = adj.to_vec();
        let mut ns = later;
        while ns != 0 {
            let u = ns.trailing_zeros() as usize;
            ns &= ns - 1;
            next[u] |= later & !(1 << u);
        }
        best = best.min(every_ordering(&next, remaining & !(1 << v), running.max(size)));
    }
    best
}

/// Depth-first search over elimination orderings on the shrinking
/// elimination graph.
///
/// A branch is cut when its running clique size or the degeneracy bound of the
/// remaining graph reaches the incumbent, or when the same eliminated set was
/// already reached with a running size no larger. Simplicial vertices are
/// eliminated without branching.
pub fn min_completion_width_branch_and_bound(g: &SimpleGraph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let adj = neighbor_sets(g);
    let mut remaining = FixedBitSet::with_capacity(n);
    remaining.insert_range(..);

    let mut search = BranchAndBound {
        best: greedy_upper_bound(&adj, &remaining),
        seen: HashMap::new(),
    };
    search.descend(adj, remaining, 0);
    search.best
}

struct BranchAndBound {
    best: usize,
    seen: HashMap<FixedBitSet, usize>,
}

fn eliminate(adj: &mut [FixedBitSet], remaining: &mut FixedBitSet, v: usize) {
    let row = adj[v].clone();
    for a in row.ones() {
        adj[a].union_with(&row);
        adj[a].set(a, false);
        adj[a].set(v, false);
    }
    adj[v].clear();
    remaining.set(v, false);
}

fn is_simplicial(adj: &[FixedBitSet], v: usize) -> bool {
    adj[v].ones().all(|a| {
        let mut rest = adj[v].clone();
        rest.set(a, false);
        rest.is_subset(&adj[a])
    })
}

/// Largest minimum degree over successive minimum-degree deletions.
fn degeneracy(adj: &[FixedBitSet], remaining: &FixedBitSet) -> usize {
    let mut alive = remaining.clone();
    let mut best = 0;
    while let Some(v) = alive.ones().min_by_key(|&v| adj[v].intersection(&alive).count()) {
        best = best.max(adj[v].intersection(&alive).count());
        alive.set(v, false);
    }
    best
}

/// Better of the min-degree and min-fill greedy orderings.
fn greedy_upper_bound(adj: &[FixedBitSet], remaining: &FixedBitSet) -> usize {
    let fill_count = |adj: &[FixedBitSet], v: usize| -> usize {
        let nbrs: Vec<usize> = adj[v].ones().collect();
        nbrs.iter()
            .enumerate()
            .map(|(i, &a)| nbrs[i + 1..].iter().filter(|&&b| !adj[a].contains(b)).count())
            .sum()
    };
    let run = |by_fill: bool| -> usize {
        let mut adj = adj.to_vec();
        let mut rem = remaining.clone();
        let mut width = 0;
        while let Some(v) = rem.ones().min_by_key(|&v| {
            if by_fill {
                (fill_count(&adj, v), adj[v].count_ones(..))
            } else {
                (adj[v].count_ones(..), fill_count(&adj, v))
            }
        }) {
            width = width.max(adj[v].count_ones(..) + 1);
            eliminate(&mut adj, &mut rem, v);
        }
        width
    };
    run(false).min(run(true))
}

impl BranchAndBound {
    fn descend(&mut self, mut adj: Vec<FixedBitSet>, mut remaining: FixedBitSet, mut running: usize) {
        // eliminate simplicial vertices greedily; this never hurts
        while let Some(v) = remaining.ones().find(|&v| is_simplicial(&adj, v)) {
            running = running.max(adj[v].count_ones(..) + 1);
            eliminate(&mut adj, &mut remaining, v);
        }
        if running >= self.best {
            return;
        }
        let left = remaining.count_ones(..);
        if left <= running {
            // any order of the rest stays within `running`
            self.best = running;
            return;
        }
        if running.max(degeneracy(&adj, &remaining) + 1) >= self.best {
            return;
        }
        let eliminated = {
            let mut e = remaining.clone();
            e.toggle_range(..);
            e
        };
        match self.seen.get(&eliminated) {
            Some(&r) if r <= running => return,
            _ => {
                self.seen.insert(eliminated, running);
            }
        }

        let mut branch: Vec<usize> = remaining.ones().collect();
        branch.sort_by_key(|&v| (adj[v].count_ones(..), v));
        for v in branch {
            let step = running.max(adj[v].count_ones(..) + 1);
            if step >= self.best {
                continue;
            }
            let mut next_adj = adj.clone();
            let mut next_rem = remaining.clone();
            eliminate(&mut next_adj, &mut next_rem, v);
            self.descend(next_adj, next_rem, step);
        }
    }
}

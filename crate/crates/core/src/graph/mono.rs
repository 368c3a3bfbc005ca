//! Backtracking search for injective homomorphisms (non-induced subgraph
//! monomorphisms).

use std::sync::Arc;

use super::{GraphMorphism, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoEnumeration {
    /// Lexicographic in the vertex map.
    pub morphisms: Vec<GraphMorphism>,
    pub truncated: bool,
}

struct Search<'a> {
    pattern: &'a SimpleGraph,
    host: &'a SimpleGraph,
    host_adj: Vec<bool>,
    order: Vec<usize>,
    /// For each position in `order`, the pattern neighbors placed earlier.
    placed_neighbors: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(pattern: &'a SimpleGraph, host: &'a SimpleGraph, order: Vec<usize>) -> Self {
        let hn = host.vertex_count();
        let mut host_adj = vec![false; hn * hn];
        for &(u, v) in host.edges() {
            host_adj[u * hn + v] = true;
            host_adj[v * hn + u] = true;
        }
        let mut position = vec![0; pattern.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let placed_neighbors = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                pattern
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&u| position[u] < i)
                    .collect()
            })
            .collect();
        Search {
            pattern,
            host,
            host_adj,
            order,
            placed_neighbors,
            map: vec![usize::MAX; pattern.vertex_count()],
            used: vec![false; hn],
        }
    }

    /// Calls `visit` on every complete map; stops when it returns `false`.
    /// Returns `false` if stopped early.
    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.map);
        }
        let v = self.order[depth];
        let hn = self.host.vertex_count();
        let need = self.pattern.degree(v);
        for c in 0..hn {
            if self.used[c] || self.host.degree(c) < need {
                continue;
            }
            let fits = self.placed_neighbors[depth]
                .iter()
                .all(|&u| self.host_adj[self.map[u] * hn + c]);
            if !fits {
                continue;
            }
            self.map[v] = c;
            self.used[c] = true;
            let go_on = self.run(depth + 1, visit);
            self.used[c] = false;
            self.map[v] = usize::MAX;
            if !go_on {
                return false;
            }
        }
        true
    }
}

fn obviously_impossible(pattern: &SimpleGraph, host: &SimpleGraph) -> bool {
    if pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return true;
    }
    let mut pd: Vec<usize> = (0..pattern.vertex_count()).map(|v| pattern.degree(v)).collect();
    let mut hd: Vec<usize> = (0..host.vertex_count()).map(|v| host.degree(v)).collect();
    pd.sort_unstable_by(|a, b| b.cmp(a));
    hd.sort_unstable_by(|a, b| b.cmp(a));
    pd.iter().zip(&hd).any(|(p, h)| p > h)
}

/// All injective homomorphisms `pattern -> host`, lexicographic by vertex map,
/// truncated after `limit` results.
pub fn enumerate_monomorphisms(pattern: &SimpleGraph, host: &SimpleGraph, limit: Option<usize>) -> MonoEnumeration {
    let mut out = MonoEnumeration {
        morphisms: Vec::new(),
        truncated: false,
    };
    if limit == Some(0) {
        out.truncated = !obviously_impossible(pattern, host);
        return out;
    }
    if obviously_impossible(pattern, host) {
        return out;
    }
    let source = Arc::new(pattern.clone());
    let target = Arc::new(host.clone());
    let mut search = Search::new(pattern, host, (0..pattern.vertex_count()).collect());
    let mut found = Vec::new();
    let complete = search.run(0, &mut |map| {
        if limit.is_some_and(|l| found.len() >= l) {
            return false;
        }
        found.push(map.to_vec());
        true
    });
    out.truncated = !complete;
    out.morphisms = found
        .into_iter()
        .map(|map| GraphMorphism::new(source.clone(), target.clone(), map))
        .collect();
    out
}

/// Pattern vertices ordered so each one (after the first of its component)
/// has as many already-placed neighbors as possible.
fn constrained_order(pattern: &SimpleGraph) -> Vec<usize> {
    let n = pattern.vertex_count();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], pattern.degree(v), std::cmp::Reverse(v)))
            .expect("an unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for &u in pattern.neighbors(next) {
            links[u] += 1;
        }
    }
    order
}

/// A vertex map of some monomorphism `pattern -> host`, if one exists.
pub fn find_monomorphism(pattern: &SimpleGraph, host: &SimpleGraph) -> Option<Vec<usize>> {
    if obviously_impossible(pattern, host) {
        return None;
    }
    let mut search = Search::new(pattern, host, constrained_order(pattern));
    let mut witness = None;
    search.run(0, &mut |map| {
        witness = Some(map.to_vec());
        false
    });
    witness
}

pub fn exists_monomorphism(pattern: &SimpleGraph, host: &SimpleGraph) -> bool {
    find_monomorphism(pattern, host).is_some()
}

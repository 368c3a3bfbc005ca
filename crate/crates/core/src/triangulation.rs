//! The triangulation functor Δ: the least S-functor value over pseudo-chordal
//! targets admitting a morphism, together with an independent exact treewidth
//! computation to compare against.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::category::{NatCategory, SFunctor, SpinedCategory};
use crate::chordal::{clique_number, fill_in, min_completion_width, EliminationOrdering};
use crate::error::{Error, Result};
use crate::graph::{GraphMonoCategory, SimpleGraph};
use crate::hypergraph::{primal_graph, Hypergraph};

/// Largest graph accepted by [`treewidth_oracle`].
pub const ORACLE_MAX_VERTICES: usize = 16;

/// Which way a width is counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Convention {
    /// Largest clique of the best chordal completion.
    #[serde(rename = "paper")]
    PaperMaxClique,
    /// Classical treewidth: largest bag size minus one.
    #[serde(rename = "standard")]
    StandardTreewidth,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::PaperMaxClique => "paper",
            Convention::StandardTreewidth => "standard",
        })
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Convention::PaperMaxClique),
            "standard" => Ok(Convention::StandardTreewidth),
            other => Err(Error::PreconditionViolation(format!("unknown convention `{other}`"))),
        }
    }
}

/// A width together with the convention it is counted in. The two conventions
/// differ by one, except that the empty graph has width 0 in both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WidthValue {
    pub value: usize,
    pub convention: Convention,
}

impl WidthValue {
    pub fn paper(value: usize) -> Self {
        WidthValue {
            value,
            convention: Convention::PaperMaxClique,
        }
    }

    pub fn standard(value: usize) -> Self {
        WidthValue {
            value,
            convention: Convention::StandardTreewidth,
        }
    }

    /// Re-expresses the width for a graph with `vertex_count` vertices.
    pub fn to_convention(self, target: Convention, vertex_count: usize) -> Self {
        let value = match (self.convention, target) {
            (a, b) if a == b => self.value,
            (Convention::PaperMaxClique, _) => self.value.saturating_sub(1),
            (Convention::StandardTreewidth, _) if vertex_count == 0 => 0,
            (Convention::StandardTreewidth, _) => self.value + 1,
        };
        WidthValue {
            value,
            convention: target,
        }
    }
}

/// Δ on graphs: the least clique number of a chordal graph receiving a
/// monomorphism from `g`.
///
/// An induced subgraph of a chordal graph is chordal, so the optimum is always
/// attained by a chordal completion of `g` on its own vertex set.
pub fn delta_graph(g: &SimpleGraph) -> WidthValue {
    WidthValue::paper(min_completion_width(g))
}

/// Δ of a hypergraph: Δ of its primal graph. Every hyperedge is a clique of the
/// primal graph, so each completion covers every hyperedge with one clique.
pub fn hypergraph_delta(h: &Hypergraph) -> WidthValue {
    delta_graph(&primal_graph(h))
}

/// Exact treewidth by dynamic programming over vertex subsets:
/// `tw(S) = min over v in S of max(tw(S - v), |Q(S - v, v)|)` where `Q(S, v)`
/// is the set of vertices outside `S + v` reachable from `v` through `S`.
pub fn treewidth_oracle(g: &SimpleGraph) -> Result<WidthValue> {
    let n = g.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::BoundExceeded {
            what: "subset dynamic program",
            size: n,
            bound: ORACLE_MAX_VERTICES,
        });
    }
    let adj: Vec<u32> = g
        .adjacency_masks()
        .expect("at most 16 vertices")
        .into_iter()
        .map(|m| m as u32)
        .collect();
    let neighborhood = |set: u32| -> u32 {
        let mut out = 0;
        let mut rest = set;
        while rest != 0 {
            out |= adj[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        out
    };
    let q_size = |eliminated: u32, v: usize| -> u32 {
        let mut component = 1u32 << v;
        loop {
            let grown = component | (neighborhood(component) & eliminated);
            if grown == component {
                break;
            }
            component = grown;
        }
        (neighborhood(component) & !eliminated & !(1 << v)).count_ones()
    };

    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let mut tw = vec![u8::MAX; 1usize << n];
    tw[0] = 0;
    for set in 1..=full {
        let mut best = u8::MAX;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let before = set & !(1 << v);
            let cost = tw[before as usize].max(q_size(before, v) as u8);
            best = best.min(cost);
        }
        tw[set as usize] = best;
    }
    Ok(WidthValue::standard(tw[full as usize] as usize))
}

/// Whether `f(g) <= Δ(g)` (both in the max-clique convention).
pub fn check_domination<F>(g: &SimpleGraph, f: &F) -> bool
where
    F: SFunctor<GraphMonoCategory> + ?Sized,
{
    f.value(&GraphMonoCategory, g) <= delta_graph(g).value
}

/// Source of pseudo-chordal targets for [`delta_generic`].
pub trait CandidateSource<C: SpinedCategory + ?Sized> {
    /// Targets for `x` that might have S-functor value `level`. Must be finite;
    /// every returned object must be pseudo-chordal.
    fn candidates(&self, category: &C, x: &C::Object, level: usize) -> Vec<C::Object>;
}

/// Δ by direct search: the first `level` for which some candidate `h` with
/// `s(h) = level` receives a morphism from `x`.
///
/// With `budget = None` the search only terminates if some level produces a
/// witness; for graphs the fill-in completions guarantee one by `|V(x)|`.
pub fn delta_generic<C, S, P>(
    category: &C,
    x: &C::Object,
    s: &S,
    candidates: &P,
    budget: Option<usize>,
) -> Result<usize>
where
    C: SpinedCategory + ?Sized,
    S: SFunctor<C> + ?Sized,
    P: CandidateSource<C> + ?Sized,
{
    let mut level = 0;
    loop {
        if budget.is_some_and(|b| level > b) {
            return Err(Error::BudgetExhausted {
                budget: budget.unwrap_or_default(),
            });
        }
        let hit = candidates
            .candidates(category, x, level)
            .iter()
            .any(|h| s.value(category, h) == level && category.has_morphism(x, h));
        if hit {
            return Ok(level);
        }
        level += 1;
    }
}

/// Chordal completions of the input graph produced by every elimination ordering.
///
/// The enumeration is over all `n!` orderings, so this is for small graphs.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompletionCandidates;

impl CompletionCandidates {
    pub fn completions(g: &SimpleGraph) -> Vec<SimpleGraph> {
        let n = g.vertex_count();
        let mut out = Vec::new();
        let mut order: Vec<usize> = (0..n).collect();
        let mut c = vec![0; n];
        let mut push = |order: &[usize]| {
            let o = EliminationOrdering::new(order.to_vec(), n).expect("a permutation");
            out.push(fill_in(g, &o).expect("ordering matches").completed);
        };
        push(&order);
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    order.swap(0, i);
                } else {
                    order.swap(c[i], i);
                }
                push(&order);
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        out.sort_by(|a, b| a.edges().cmp(b.edges()));
        out.dedup();
        out
    }
}

impl CandidateSource<GraphMonoCategory> for CompletionCandidates {
    fn candidates(&self, _category: &GraphMonoCategory, x: &SimpleGraph, level: usize) -> Vec<SimpleGraph> {
        Self::completions(x)
            .into_iter()
            .filter(|h| clique_number(h) == level)
            .collect()
    }
}

/// In `Nat` every object is pseudo-chordal; the only candidate at a level is
/// the level itself.
#[derive(Debug, Clone, Copy, Default)]
pub struct NatCandidates;

impl CandidateSource<NatCategory> for NatCandidates {
    fn candidates(&self, _category: &NatCategory, _x: &usize, level: usize) -> Vec<usize> {
        vec![level]
    }
}

/// ω: size of the largest complete subgraph.
#[derive(Debug, Clone, Copy, Default)]
pub struct CliqueNumber;

impl SFunctor<GraphMonoCategory> for CliqueNumber {
    fn name(&self) -> &str {
        "omega"
    }

    fn value(&self, _category: &GraphMonoCategory, x: &SimpleGraph) -> usize {
        clique_number(x)
    }
}

/// Δ on graphs as an S-functor.
#[derive(Debug, Clone, Copy, Default)]
pub struct Triangulation;

impl SFunctor<GraphMonoCategory> for Triangulation {
    fn name(&self) -> &str {
        "delta"
    }

    fn value(&self, _category: &GraphMonoCategory, x: &SimpleGraph) -> usize {
        delta_graph(x).value
    }
}

//! Hypergraphs with injective containment-preserving maps, organized as a
//! spined category mirroring the graph one.
//!
//! A morphism sends every source hyperedge into some target hyperedge. The
//! spine object `Ω_n` has all 2-element hyperedges plus the full vertex set,
//! so every hypergraph on `n` vertices embeds into it and its primal graph is
//! `K_n`. Proxy pushouts glue along the image of the spine and take the union
//! of the hyperedge images.

use std::fmt;
use std::fmt::Write as _;
use std::sync::Arc;

use rand::seq::index::sample;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::category::{ExtendedSpan, ProxyPushout, SFunctor, Span, SpinedCategory};
use crate::chordal::clique_number;
use crate::error::{Error, Result};
use crate::graph::families::random_permutation;
use crate::graph::io::json_error;
use crate::graph::{glue_labels, SimpleGraph};
use crate::triangulation::hypergraph_delta;

/// Hyperedges are nonempty, sorted, deduplicated vertex lists; the family is
/// sorted and has no repeats.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "HypergraphRepr", into = "HypergraphRepr")]
pub struct Hypergraph {
    vertex_count: usize,
    hyperedges: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergraphRepr {
    vertices: usize,
    hyperedges: Vec<Vec<usize>>,
}

impl TryFrom<HypergraphRepr> for Hypergraph {
    type Error = Error;

    fn try_from(r: HypergraphRepr) -> Result<Self> {
        Hypergraph::new(r.vertices, r.hyperedges)
    }
}

impl From<Hypergraph> for HypergraphRepr {
    fn from(h: Hypergraph) -> Self {
        HypergraphRepr {
            vertices: h.vertex_count,
            hyperedges: h.hyperedges,
        }
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H{}{:?}", self.vertex_count, self.hyperedges)
    }
}

impl Hypergraph {
    pub fn new(vertex_count: usize, hyperedges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let mut family = Vec::new();
        for mut e in hyperedges {
            if e.is_empty() {
                return Err(Error::PreconditionViolation("empty hyperedge".into()));
            }
            if let Some(&x) = e.iter().find(|&&x| x >= vertex_count) {
                return Err(Error::Range {
                    vertex: x,
                    vertex_count,
                    line: 0,
                });
            }
            e.sort_unstable();
            e.dedup();
            family.push(e);
        }
        family.sort();
        family.dedup();
        Ok(Hypergraph {
            vertex_count,
            hyperedges: family,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    /// The hypergraph whose hyperedges are the edges of `g`.
    pub fn from_graph(g: &SimpleGraph) -> Self {
        Hypergraph::new(g.vertex_count(), g.edges().iter().map(|&(u, v)| vec![u, v]))
            .expect("graph edges are valid hyperedges")
    }

    /// Whether `set` lies inside some hyperedge.
    pub fn covers(&self, set: &[usize]) -> bool {
        self.hyperedges
            .iter()
            .any(|e| set.iter().all(|x| e.binary_search(x).is_ok()))
    }
}

/// Graph on the same vertices joining every pair that shares a hyperedge.
pub fn primal_graph(h: &Hypergraph) -> SimpleGraph {
    let edges = h.hyperedges.iter().flat_map(|e| {
        e.iter()
            .enumerate()
            .flat_map(move |(i, &a)| e[i + 1..].iter().map(move |&b| (a, b)))
    });
    SimpleGraph::new(h.vertex_count, edges).expect("hyperedge vertices are in range")
}

/// All 2-element subsets of `0..n`, plus `0..n` itself when `n >= 1`.
pub fn hyper_spine(n: usize) -> Hypergraph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| vec![u, v]));
    let full = (n >= 1).then(|| (0..n).collect());
    Hypergraph::new(n, pairs.chain(full)).expect("spine hyperedges are in range")
}

#[derive(Clone, PartialEq, Eq)]
pub struct HypergraphMorphism {
    source: Arc<Hypergraph>,
    target: Arc<Hypergraph>,
    map: Vec<usize>,
}

impl fmt::Debug for HypergraphMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -{:?}-> {:?}", self.source, self.map, self.target)
    }
}

impl HypergraphMorphism {
    pub fn new(source: impl Into<Arc<Hypergraph>>, target: impl Into<Arc<Hypergraph>>, map: Vec<usize>) -> Self {
        HypergraphMorphism {
            source: source.into(),
            target: target.into(),
            map,
        }
    }

    pub fn mono(
        source: impl Into<Arc<Hypergraph>>,
        target: impl Into<Arc<Hypergraph>>,
        map: Vec<usize>,
    ) -> Result<Self> {
        let m = Self::new(source, target, map);
        match m.defect() {
            None => Ok(m),
            Some(d) => Err(Error::PreconditionViolation(d)),
        }
    }

    pub fn identity(h: impl Into<Arc<Hypergraph>>) -> Self {
        let h = h.into();
        let map = (0..h.vertex_count).collect();
        HypergraphMorphism {
            source: h.clone(),
            target: h,
            map,
        }
    }

    pub fn source(&self) -> &Hypergraph {
        &self.source
    }

    pub fn target(&self) -> &Hypergraph {
        &self.target
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }

    fn image(&self, e: &[usize]) -> Vec<usize> {
        e.iter().map(|&v| self.map[v]).collect()
    }

    /// Reason this is not an injective containment-preserving map, if any.
    pub fn defect(&self) -> Option<String> {
        if self.map.len() != self.source.vertex_count {
            return Some(format!(
                "vertex map has length {}, expected {}",
                self.map.len(),
                self.source.vertex_count
            ));
        }
        let mut used = vec![false; self.target.vertex_count];
        for (v, &x) in self.map.iter().enumerate() {
            if x >= self.target.vertex_count {
                return Some(format!("vertex {v} maps to out-of-range {x}"));
            }
            if std::mem::replace(&mut used[x], true) {
                return Some(format!("vertex {v} collides with an earlier vertex at {x}"));
            }
        }
        self.source
            .hyperedges
            .iter()
            .find(|e| !self.target.covers(&self.image(e)))
            .map(|e| format!("hyperedge {e:?} is not contained in any target hyperedge"))
    }

    pub fn is_monomorphism(&self) -> bool {
        self.defect().is_none()
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &HypergraphMorphism) -> Result<HypergraphMorphism> {
        if !(Arc::ptr_eq(&inner.target, &self.source) || inner.target == self.source) {
            return Err(Error::NotComposable(format!(
                "target {:?} differs from source {:?}",
                inner.target, self.source
            )));
        }
        Ok(HypergraphMorphism {
            source: inner.source.clone(),
            target: self.target.clone(),
            map: inner.map.iter().map(|&v| self.map[v]).collect(),
        })
    }
}

/// All monomorphisms `from -> to`, lexicographic by vertex map.
pub fn enumerate_hypergraph_monomorphisms(
    from: &Hypergraph,
    to: &Hypergraph,
    limit: Option<usize>,
) -> Vec<HypergraphMorphism> {
    struct State<'a> {
        from: &'a Hypergraph,
        to: &'a Hypergraph,
        incident: Vec<Vec<usize>>,
        map: Vec<usize>,
        used: Vec<bool>,
        found: Vec<Vec<usize>>,
        limit: Option<usize>,
    }

    impl State<'_> {
        // partial images of incident hyperedges must still fit in some target hyperedge
        fn consistent(&self, v: usize) -> bool {
            self.incident[v].iter().all(|&i| {
                let image: Vec<usize> = self.from.hyperedges[i]
                    .iter()
                    .filter(|&&x| self.map[x] != usize::MAX)
                    .map(|&x| self.map[x])
                    .collect();
                self.to.covers(&image)
            })
        }

        fn run(&mut self, v: usize) -> bool {
            if self.limit.is_some_and(|l| self.found.len() >= l) {
                return false;
            }
            if v == self.from.vertex_count {
                self.found.push(self.map.clone());
                return true;
            }
            for c in 0..self.to.vertex_count {
                if self.used[c] {
                    continue;
                }
                self.map[v] = c;
                self.used[c] = true;
                let go_on = !self.consistent(v) || self.run(v + 1);
                self.used[c] = false;
                self.map[v] = usize::MAX;
                if !go_on {
                    return false;
                }
            }
            true
        }
    }

    if limit == Some(0) || from.vertex_count > to.vertex_count {
        return Vec::new();
    }
    let mut incident = vec![Vec::new(); from.vertex_count];
    for (i, e) in from.hyperedges.iter().enumerate() {
        for &v in e {
            incident[v].push(i);
        }
    }
    let mut state = State {
        from,
        to,
        incident,
        map: vec![usize::MAX; from.vertex_count],
        used: vec![false; to.vertex_count],
        found: Vec::new(),
        limit,
    };
    state.run(0);
    let (s, t) = (Arc::new(from.clone()), Arc::new(to.clone()));
    state
        .found
        .into_iter()
        .map(|map| HypergraphMorphism::new(s.clone(), t.clone(), map))
        .collect()
}

fn spine_arity(m: &HypergraphMorphism) -> Result<usize> {
    let n = m.source().vertex_count();
    if m.source() != &hyper_spine(n) {
        return Err(Error::PreconditionViolation(format!(
            "source {:?} is not a spine object",
            m.source()
        )));
    }
    if let Some(d) = m.defect() {
        return Err(Error::PreconditionViolation(d));
    }
    Ok(n)
}

/// Glues `G` and `H` along the images of `Ω_n`; hyperedges are the union of
/// the images of both families.
pub fn hyper_clique_sum(
    g: &HypergraphMorphism,
    h: &HypergraphMorphism,
) -> Result<ProxyPushout<Hypergraph, HypergraphMorphism>> {
    let n = spine_arity(g)?;
    if spine_arity(h)? != n {
        return Err(Error::PreconditionViolation(
            "span legs start at different spine objects".into(),
        ));
    }
    let (left, right) = (&g.target, &h.target);
    let offset = left.vertex_count;
    let (label, count) = glue_labels(offset, right.vertex_count, (0..n).map(|v| (g.apply(v), h.apply(v))));
    let edges = left
        .hyperedges
        .iter()
        .map(|e| e.iter().map(|&x| label[x]).collect())
        .chain(
            right
                .hyperedges
                .iter()
                .map(|e| e.iter().map(|&x| label[offset + x]).collect()),
        );
    let apex = Arc::new(Hypergraph::new(count, edges)?);
    Ok(ProxyPushout {
        apex: (*apex).clone(),
        leg_g: HypergraphMorphism::new(left.clone(), apex.clone(), label[..offset].to_vec()),
        leg_h: HypergraphMorphism::new(right.clone(), apex, label[offset..].to_vec()),
    })
}

pub fn hyper_mediating_morphism(
    g: &HypergraphMorphism,
    h: &HypergraphMorphism,
    g_ext: &HypergraphMorphism,
    h_ext: &HypergraphMorphism,
) -> Result<HypergraphMorphism> {
    for m in [g_ext, h_ext] {
        if let Some(d) = m.defect() {
            return Err(Error::PreconditionViolation(d));
        }
    }
    let inner = hyper_clique_sum(g, h)?;
    let outer = hyper_clique_sum(&g_ext.after(g)?, &h_ext.after(h)?)?;
    let mut map = vec![usize::MAX; inner.apex.vertex_count];
    for (leg, ext, outer_leg) in [(&inner.leg_g, g_ext, &outer.leg_g), (&inner.leg_h, h_ext, &outer.leg_h)] {
        for (x, &p) in leg.vertex_map().iter().enumerate() {
            let image = outer_leg.apply(ext.apply(x));
            if map[p] != usize::MAX && map[p] != image {
                return Err(Error::ConstructionInconsistent(format!(
                    "apex vertex {p} sent to both {} and {image}",
                    map[p]
                )));
            }
            map[p] = image;
        }
    }
    let m = HypergraphMorphism::new(inner.apex, outer.apex, map);
    match m.defect() {
        None => Ok(m),
        Some(d) => Err(Error::ConstructionInconsistent(d)),
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct HypergraphMonoCategory;

impl SpinedCategory for HypergraphMonoCategory {
    type Object = Hypergraph;
    type Morphism = HypergraphMorphism;

    fn source<'a>(&self, m: &'a HypergraphMorphism) -> &'a Hypergraph {
        m.source()
    }

    fn target<'a>(&self, m: &'a HypergraphMorphism) -> &'a Hypergraph {
        m.target()
    }

    fn identity(&self, x: &Hypergraph) -> HypergraphMorphism {
        HypergraphMorphism::identity(x.clone())
    }

    fn compose(&self, outer: &HypergraphMorphism, inner: &HypergraphMorphism) -> Result<HypergraphMorphism> {
        outer.after(inner)
    }

    fn is_valid_morphism(&self, m: &HypergraphMorphism) -> bool {
        m.is_monomorphism()
    }

    fn spine(&self, n: usize) -> Hypergraph {
        hyper_spine(n)
    }

    fn spine_index(&self, x: &Hypergraph) -> usize {
        x.vertex_count
    }

    fn spine_witness(&self, x: &Hypergraph) -> Option<HypergraphMorphism> {
        let n = x.vertex_count;
        Some(HypergraphMorphism::new(x.clone(), hyper_spine(n), (0..n).collect()))
    }

    fn proxy_pushout(
        &self,
        g: &HypergraphMorphism,
        h: &HypergraphMorphism,
    ) -> Result<ProxyPushout<Hypergraph, HypergraphMorphism>> {
        hyper_clique_sum(g, h)
    }

    fn mediating(
        &self,
        g: &HypergraphMorphism,
        h: &HypergraphMorphism,
        g_ext: &HypergraphMorphism,
        h_ext: &HypergraphMorphism,
    ) -> Result<HypergraphMorphism> {
        hyper_mediating_morphism(g, h, g_ext, h_ext)
    }

    fn hom_set(&self, from: &Hypergraph, to: &Hypergraph, limit: Option<usize>) -> Vec<HypergraphMorphism> {
        enumerate_hypergraph_monomorphisms(from, to, limit)
    }
}

/// ω of the primal graph.
#[derive(Debug, Clone, Copy, Default)]
pub struct PrimalCliqueNumber;

impl SFunctor<HypergraphMonoCategory> for PrimalCliqueNumber {
    fn name(&self) -> &str {
        "omega-primal"
    }

    fn value(&self, _category: &HypergraphMonoCategory, x: &Hypergraph) -> usize {
        clique_number(&primal_graph(x))
    }
}

/// Δ on hypergraphs as an S-functor.
#[derive(Debug, Clone, Copy, Default)]
pub struct HypergraphTriangulation;

impl SFunctor<HypergraphMonoCategory> for HypergraphTriangulation {
    fn name(&self) -> &str {
        "delta"
    }

    fn value(&self, _category: &HypergraphMonoCategory, x: &Hypergraph) -> usize {
        hypergraph_delta(x).value
    }
}

/// Text form: vertex count on the first line, then one hyperedge per line.
pub fn parse_hypergraph_text(text: &str) -> Result<Hypergraph> {
    let mut vertex_count = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut edge = Vec::new();
        let mut offset = 0;
        for tok in content.split_whitespace() {
            let column = content[offset..].find(tok).expect("token from this line") + offset + 1;
            offset = column - 1 + tok.len();
            let x: usize = tok
                .parse()
                .map_err(|_| Error::parse(line, column, format!("expected a non-negative integer, found `{tok}`")))?;
            edge.push((column, x));
        }
        match (vertex_count, edge.as_slice()) {
            (_, []) => {}
            (None, [(_, n)]) => vertex_count = Some(*n),
            (None, [_, (c, _), ..]) => {
                return Err(Error::parse(
                    line,
                    *c,
                    "expected the vertex count alone on the first line",
                ))
            }
            (Some(n), vs) => {
                if let Some(&(_, x)) = vs.iter().find(|(_, x)| *x >= n) {
                    return Err(Error::Range {
                        vertex: x,
                        vertex_count: n,
                        line,
                    });
                }
                edges.push(vs.iter().map(|&(_, x)| x).collect());
            }
        }
    }
    let n = vertex_count.ok_or_else(|| Error::parse(1, 1, "missing vertex count"))?;
    Hypergraph::new(n, edges)
}

pub fn emit_hypergraph_text(h: &Hypergraph) -> String {
    let mut out = format!("{}\n", h.vertex_count);
    for e in &h.hyperedges {
        let line: Vec<String> = e.iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

pub fn parse_hypergraph_json(text: &str) -> Result<Hypergraph> {
    serde_json::from_str(text).map_err(|e| {
        if e.is_data() {
            // range and emptiness errors surface through try_from as data errors
            Error::parse(e.line(), e.column(), e.to_string())
        } else {
            json_error(e)
        }
    })
}

/// Random hypergraph with hyperedges of size 1 to 4.
pub fn random_hypergraph<R: Rng + ?Sized>(rng: &mut R, vertex_count: usize, edge_count: usize) -> Hypergraph {
    if vertex_count == 0 {
        return Hypergraph::new(0, Vec::new()).expect("empty");
    }
    let edges: Vec<Vec<usize>> = (0..edge_count)
        .map(|_| {
            let size = rng.gen_range(1..=vertex_count.min(4));
            sample(rng, vertex_count, size).into_vec()
        })
        .collect();
    Hypergraph::new(vertex_count, edges).expect("sampled vertices are in range")
}

fn random_spine_target<R: Rng + ?Sized>(rng: &mut R, n: usize, size: usize) -> HypergraphMorphism {
    let m = rng.gen_range(0..=size);
    let base = random_hypergraph(rng, size, m);
    let chosen: Vec<usize> = sample(rng, size, n).into_vec();
    let mut edges = base.hyperedges.clone();
    if n > 0 {
        edges.push(chosen.clone());
    }
    let target = Hypergraph::new(size, edges).expect("in range");
    HypergraphMorphism::new(hyper_spine(n), target, chosen)
}

/// Random span out of `Ω_n` whose gluing has exactly `apex` vertices.
pub fn random_hyper_span<R: Rng + ?Sized>(rng: &mut R, apex: usize) -> Span<HypergraphMorphism> {
    let n = rng.gen_range(0..=apex.min(3));
    let left = rng.gen_range(n..=apex);
    Span {
        g: random_spine_target(rng, n, left),
        h: random_spine_target(rng, n, apex + n - left),
    }
}

/// Random mono `h -> h'` adding `extra` vertices, some hyperedges, enlarging
/// some existing hyperedges, and shuffling labels.
pub fn random_hyper_extension<R: Rng + ?Sized>(rng: &mut R, h: &Hypergraph, extra: usize) -> HypergraphMorphism {
    let size = h.vertex_count + extra;
    let mut edges: Vec<Vec<usize>> = h
        .hyperedges
        .iter()
        .map(|e| {
            let mut e = e.clone();
            if rng.gen_bool(0.3) {
                e.push(rng.gen_range(0..size));
            }
            e
        })
        .collect();
    let m = rng.gen_range(0..=2);
    edges.extend(random_hypergraph(rng, size, m).hyperedges);
    let perm = random_permutation(size, rng);
    let relabeled = edges.into_iter().map(|e| e.into_iter().map(|x| perm[x]).collect());
    let target = Hypergraph::new(size, relabeled).expect("in range");
    HypergraphMorphism::new(h.clone(), target, perm[..h.vertex_count].to_vec())
}

pub fn random_hyper_extended_span<R: Rng + ?Sized>(rng: &mut R, max_apex: usize) -> ExtendedSpan<HypergraphMorphism> {
    let inner = rng.gen_range(0..=max_apex);
    let outer = rng.gen_range(inner..=max_apex);
    let span = random_hyper_span(rng, inner);
    let grow = outer - inner;
    let extra_g = rng.gen_range(0..=grow);
    let g_ext = random_hyper_extension(rng, span.g.target(), extra_g);
    let h_ext = random_hyper_extension(rng, span.h.target(), grow - extra_g);
    ExtendedSpan {
        g: span.g,
        h: span.h,
        g_ext,
        h_ext,
    }
}

/// Every hypergraph on `n` vertices whose hyperedges are drawn from the
/// nonempty subsets (`2^(2^n - 1)` of them); `n <= 4` is practical.
pub fn all_hypergraphs(n: usize) -> impl Iterator<Item = Hypergraph> {
    let subsets: Vec<Vec<usize>> = (1u32..1 << n)
        .map(|s| (0..n).filter(|&v| s >> v & 1 == 1).collect())
        .collect();
    let count = 1u64 << subsets.len();
    (0..count).map(move |family| {
        let edges = subsets
            .iter()
            .enumerate()
            .filter(|(i, _)| family >> i & 1 == 1)
            .map(|(_, e)| e.clone());
        Hypergraph::new(n, edges).expect("subsets are in range")
    })
}

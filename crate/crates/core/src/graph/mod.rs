//! Simple graphs, graph morphisms, and the spined category of graphs with
//! monomorphisms (complete-graph spine, clique-sum proxy pushouts).

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::category::{ProxyPushout, SpinedCategory};
use crate::error::{Error, Result};

pub mod families;
pub mod io;
mod mono;
pub mod sample;

pub use mono::{enumerate_monomorphisms, exists_monomorphism, find_monomorphism, MonoEnumeration};

/// A finite irreflexive graph on vertices `0..vertex_count`.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted. Equality is
/// equality of this canonical form, not isomorphism.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertices: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphRepr> for SimpleGraph {
    type Error = Error;

    fn try_from(repr: GraphRepr) -> Result<Self> {
        SimpleGraph::new(repr.vertices, repr.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<SimpleGraph> for GraphRepr {
    fn from(g: SimpleGraph) -> Self {
        GraphRepr {
            vertices: g.vertex_count,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl PartialEq for SimpleGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.edges == other.edges
    }
}

impl Eq for SimpleGraph {}

impl std::hash::Hash for SimpleGraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.vertex_count.hash(state);
        self.edges.hash(state);
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G{}{:?}", self.vertex_count, self.edges)
    }
}

impl SimpleGraph {
    /// Builds a graph, normalizing edge orientation and dropping duplicates.
    /// Self-loops and out-of-range endpoints are rejected.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canonical = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= vertex_count {
                    return Err(Error::Range {
                        vertex: x,
                        vertex_count,
                        line: 0,
                    });
                }
            }
            if u == v {
                return Err(Error::PreconditionViolation(format!("self-loop at vertex {u}")));
            }
            canonical.push((u.min(v), u.max(v)));
        }
        canonical.sort_unstable();
        canonical.dedup();
        Ok(Self::from_canonical(vertex_count, canonical))
    }

    fn from_canonical(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        SimpleGraph {
            vertex_count,
            edges,
            adjacency,
        }
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self::from_canonical(vertex_count, Vec::new())
    }

    /// `K_n`; `K_0` is the graph with no vertices.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_canonical(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count;
        self.edges.len() == n * n.saturating_sub(1) / 2
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if !is_permutation(perm, self.vertex_count) {
            return Err(Error::PreconditionViolation(
                "relabeling is not a permutation of the vertex set".into(),
            ));
        }
        Self::new(self.vertex_count, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Same vertex set, union of the edge sets.
    pub fn with_edges(&self, extra: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::new(self.vertex_count, self.edges.iter().copied().chain(extra))
    }

    /// Adjacency rows as bitmasks; `None` above 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.vertex_count > 64 {
            return None;
        }
        Some(
            self.adjacency
                .iter()
                .map(|ns| ns.iter().fold(0u64, |m, &v| m | (1 << v)))
                .collect(),
        )
    }
}

pub(crate) fn is_permutation(perm: &[usize], n: usize) -> bool {
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return false;
        }
    }
    true
}

/// Why a vertex map fails to be a homomorphism or monomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismDefect {
    LengthMismatch { expected: usize, found: usize },
    OutOfRange { vertex: usize, image: usize },
    EdgeNotPreserved { u: usize, v: usize },
    NotInjective { a: usize, b: usize },
}

impl fmt::Display for MorphismDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismDefect::LengthMismatch { expected, found } => {
                write!(f, "vertex map has length {found}, expected {expected}")
            }
            MorphismDefect::OutOfRange { vertex, image } => {
                write!(f, "vertex {vertex} maps to out-of-range {image}")
            }
            MorphismDefect::EdgeNotPreserved { u, v } => {
                write!(f, "edge {u}-{v} is not mapped to an edge")
            }
            MorphismDefect::NotInjective { a, b } => {
                write!(f, "vertices {a} and {b} have the same image")
            }
        }
    }
}

/// A vertex map between two graphs. Construction does not validate; use
/// [`GraphMorphism::homomorphism_defect`] or [`GraphMorphism::mono`].
#[derive(Clone, PartialEq, Eq)]
pub struct GraphMorphism {
    source: Arc<SimpleGraph>,
    target: Arc<SimpleGraph>,
    map: Vec<usize>,
}

impl fmt::Debug for GraphMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -{:?}-> {:?}", self.source, self.map, self.target)
    }
}

impl GraphMorphism {
    pub fn new(source: impl Into<Arc<SimpleGraph>>, target: impl Into<Arc<SimpleGraph>>, map: Vec<usize>) -> Self {
        GraphMorphism {
            source: source.into(),
            target: target.into(),
            map,
        }
    }

    /// Builds a morphism and checks that it is an injective homomorphism.
    pub fn mono(
        source: impl Into<Arc<SimpleGraph>>,
        target: impl Into<Arc<SimpleGraph>>,
        map: Vec<usize>,
    ) -> Result<Self> {
        let m = Self::new(source, target, map);
        match m.monomorphism_defect() {
            None => Ok(m),
            Some(d) => Err(Error::PreconditionViolation(d.to_string())),
        }
    }

    pub fn identity(g: impl Into<Arc<SimpleGraph>>) -> Self {
        let g = g.into();
        let map = (0..g.vertex_count()).collect();
        GraphMorphism {
            source: g.clone(),
            target: g,
            map,
        }
    }

    pub fn source(&self) -> &SimpleGraph {
        &self.source
    }

    pub fn target(&self) -> &SimpleGraph {
        &self.target
    }

    pub(crate) fn target_arc(&self) -> &Arc<SimpleGraph> {
        &self.target
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn homomorphism_defect(&self) -> Option<MorphismDefect> {
        let n = self.source.vertex_count();
        if self.map.len() != n {
            return Some(MorphismDefect::LengthMismatch {
                expected: n,
                found: self.map.len(),
            });
        }
        if let Some((vertex, &image)) = self
            .map
            .iter()
            .enumerate()
            .find(|(_, &x)| x >= self.target.vertex_count())
        {
            return Some(MorphismDefect::OutOfRange { vertex, image });
        }
        self.source
            .edges()
            .iter()
            .find(|&&(u, v)| !self.target.has_edge(self.map[u], self.map[v]))
            .map(|&(u, v)| MorphismDefect::EdgeNotPreserved { u, v })
    }

    pub fn monomorphism_defect(&self) -> Option<MorphismDefect> {
        if let Some(d) = self.homomorphism_defect() {
            return Some(d);
        }
        let mut preimage = vec![usize::MAX; self.target.vertex_count()];
        for (v, &x) in self.map.iter().enumerate() {
            if preimage[x] != usize::MAX {
                return Some(MorphismDefect::NotInjective { a: preimage[x], b: v });
            }
            preimage[x] = v;
        }
        None
    }

    pub fn is_homomorphism(&self) -> bool {
        self.homomorphism_defect().is_none()
    }

    pub fn is_monomorphism(&self) -> bool {
        self.monomorphism_defect().is_none()
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &GraphMorphism) -> Result<GraphMorphism> {
        if !same_graph(&inner.target, &self.source) {
            return Err(Error::NotComposable(format!(
                "target {:?} differs from source {:?}",
                inner.target, self.source
            )));
        }
        Ok(GraphMorphism {
            source: inner.source.clone(),
            target: self.target.clone(),
            map: inner.map.iter().map(|&v| self.map[v]).collect(),
        })
    }
}

fn same_graph(a: &Arc<SimpleGraph>, b: &Arc<SimpleGraph>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Least `n` with a monomorphism `g -> K_n`: the vertex count.
pub fn spine_index(g: &SimpleGraph) -> usize {
    g.vertex_count()
}

fn spine_arity(m: &GraphMorphism) -> Result<usize> {
    let s = m.source();
    if !s.is_complete() {
        return Err(Error::PreconditionViolation(format!(
            "source {s:?} is not a complete graph"
        )));
    }
    if let Some(d) = m.monomorphism_defect() {
        return Err(Error::PreconditionViolation(d.to_string()));
    }
    Ok(s.vertex_count())
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            cur = std::mem::replace(&mut self.0[cur], root);
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // smaller index wins so classes are named by their first member
        if ra < rb {
            self.0[rb] = ra;
        } else {
            self.0[ra] = rb;
        }
    }
}

/// Labels for the disjoint union of `left` and `right` vertices after
/// identifying each pair `(a, b)` (left index, right index). Classes are
/// numbered in order of their smallest disjoint-union index.
pub(crate) fn glue_labels(
    left: usize,
    right: usize,
    identified: impl IntoIterator<Item = (usize, usize)>,
) -> (Vec<usize>, usize) {
    let total = left + right;
    let mut classes = UnionFind::new(total);
    for (a, b) in identified {
        classes.union(a, left + b);
    }
    let mut label = vec![usize::MAX; total];
    let mut next = 0;
    for x in 0..total {
        let root = classes.find(x);
        if label[root] == usize::MAX {
            label[root] = next;
            next += 1;
        }
        label[x] = label[root];
    }
    (label, next)
}

/// Clique-sum of `G` and `H` along the images of `K_n`: the pushout of the span
/// in the category of all graph homomorphisms.
///
/// Vertices of `G` keep their indices; vertices of `H` not identified with a
/// vertex of `G` follow in increasing order.
pub fn clique_sum_pushout(g: &GraphMorphism, h: &GraphMorphism) -> Result<ProxyPushout<SimpleGraph, GraphMorphism>> {
    let n = spine_arity(g)?;
    if spine_arity(h)? != n {
        return Err(Error::PreconditionViolation(format!(
            "span legs start at K_{n} and K_{}",
            h.source().vertex_count()
        )));
    }
    let (left, right) = (g.target_arc(), h.target_arc());
    let offset = left.vertex_count();
    let (label, count) = glue_labels(offset, right.vertex_count(), (0..n).map(|v| (g.apply(v), h.apply(v))));

    let edges = left.edges().iter().map(|&(u, v)| (label[u], label[v])).chain(
        right
            .edges()
            .iter()
            .map(|&(u, v)| (label[offset + u], label[offset + v])),
    );
    let apex = Arc::new(SimpleGraph::new(count, edges)?);
    let leg_g = GraphMorphism::new(left.clone(), apex.clone(), label[..offset].to_vec());
    let leg_h = GraphMorphism::new(right.clone(), apex.clone(), label[offset..].to_vec());
    Ok(ProxyPushout {
        apex: (*apex).clone(),
        leg_g,
        leg_h,
    })
}

/// The morphism `P(g, h) -> P(g' ∘ g, h' ∘ h)` acting as `g'` on the part coming
/// from `G` and as `h'` on the part coming from `H`.
pub fn mediating_morphism(
    g: &GraphMorphism,
    h: &GraphMorphism,
    g_ext: &GraphMorphism,
    h_ext: &GraphMorphism,
) -> Result<GraphMorphism> {
    for m in [g_ext, h_ext] {
        if let Some(d) = m.monomorphism_defect() {
            return Err(Error::PreconditionViolation(d.to_string()));
        }
    }
    let inner = clique_sum_pushout(g, h)?;
    let outer = clique_sum_pushout(&g_ext.after(g)?, &h_ext.after(h)?)?;

    let mut map = vec![usize::MAX; inner.apex.vertex_count()];
    let parts = [(&inner.leg_g, g_ext, &outer.leg_g), (&inner.leg_h, h_ext, &outer.leg_h)];
    for (leg, ext, outer_leg) in parts {
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
    let m = GraphMorphism::new(inner.apex, outer.apex, map);
    match m.monomorphism_defect() {
        None => Ok(m),
        Some(d) => Err(Error::ConstructionInconsistent(d.to_string())),
    }
}

/// Graphs with injective homomorphisms, spine `Ω_n = K_n`, clique-sums as
/// proxy pushouts.
#[derive(Debug, Clone, Copy, Default)]
pub struct GraphMonoCategory;

impl SpinedCategory for GraphMonoCategory {
    type Object = SimpleGraph;
    type Morphism = GraphMorphism;

    fn source<'a>(&self, m: &'a GraphMorphism) -> &'a SimpleGraph {
        m.source()
    }

    fn target<'a>(&self, m: &'a GraphMorphism) -> &'a SimpleGraph {
        m.target()
    }

    fn identity(&self, x: &SimpleGraph) -> GraphMorphism {
        GraphMorphism::identity(x.clone())
    }

    fn compose(&self, outer: &GraphMorphism, inner: &GraphMorphism) -> Result<GraphMorphism> {
        outer.after(inner)
    }

    fn is_valid_morphism(&self, m: &GraphMorphism) -> bool {
        m.is_monomorphism()
    }

    fn spine(&self, n: usize) -> SimpleGraph {
        SimpleGraph::complete(n)
    }

    fn spine_index(&self, x: &SimpleGraph) -> usize {
        spine_index(x)
    }

    fn spine_witness(&self, x: &SimpleGraph) -> Option<GraphMorphism> {
        let n = spine_index(x);
        Some(GraphMorphism::new(
            x.clone(),
            SimpleGraph::complete(n),
            (0..n).collect(),
        ))
    }

    fn proxy_pushout(&self, g: &GraphMorphism, h: &GraphMorphism) -> Result<ProxyPushout<SimpleGraph, GraphMorphism>> {
        clique_sum_pushout(g, h)
    }

    fn mediating(
        &self,
        g: &GraphMorphism,
        h: &GraphMorphism,
        g_ext: &GraphMorphism,
        h_ext: &GraphMorphism,
    ) -> Result<GraphMorphism> {
        mediating_morphism(g, h, g_ext, h_ext)
    }

    fn hom_set(&self, from: &SimpleGraph, to: &SimpleGraph, limit: Option<usize>) -> Vec<GraphMorphism> {
        enumerate_monomorphisms(from, to, limit).morphisms
    }

    fn has_morphism(&self, from: &SimpleGraph, to: &SimpleGraph) -> bool {
        exists_monomorphism(from, to)
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;
    use crate::category::{check_sc1, check_sc2, ExtendedSpan};

    fn triangle() -> SimpleGraph {
        SimpleGraph::complete(3)
    }

    fn edge_into_triangle(a: usize, b: usize) -> GraphMorphism {
        GraphMorphism::mono(SimpleGraph::complete(2), triangle(), vec![a, b]).unwrap()
    }

    #[test]
    fn construction_normalizes_and_rejects() {
        let g = SimpleGraph::new(3, [(1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert!(matches!(
            SimpleGraph::new(2, [(1, 1)]),
            Err(Error::PreconditionViolation(_))
        ));
        assert!(matches!(SimpleGraph::new(2, [(0, 2)]), Err(Error::Range { .. })));
    }

    #[test]
    fn complete_graph_edge_counts() {
        for n in 0..8 {
            assert_eq!(SimpleGraph::complete(n).edge_count(), n * n.saturating_sub(1) / 2);
        }
        assert_eq!(SimpleGraph::complete(0).vertex_count(), 0);
    }

    #[test]
    fn homomorphism_validation() {
        let c4 = cycle(4).unwrap();
        assert!(GraphMorphism::identity(c4.clone()).is_homomorphism());

        let collapse = GraphMorphism::new(SimpleGraph::complete(2), c4.clone(), vec![1, 1]);
        assert_eq!(
            collapse.homomorphism_defect(),
            Some(MorphismDefect::EdgeNotPreserved { u: 0, v: 1 })
        );

        let p3 = path(3);
        let along = GraphMorphism::new(p3.clone(), c4.clone(), vec![1, 2, 3]);
        assert!(along.is_homomorphism());
        assert!(along.is_monomorphism());

        let short = GraphMorphism::new(p3.clone(), c4.clone(), vec![0, 1]);
        assert!(matches!(
            short.homomorphism_defect(),
            Some(MorphismDefect::LengthMismatch { .. })
        ));
        let far = GraphMorphism::new(p3.clone(), c4.clone(), vec![0, 1, 9]);
        assert!(matches!(
            far.homomorphism_defect(),
            Some(MorphismDefect::OutOfRange { .. })
        ));
        // folding P_3 onto an edge is a homomorphism but not injective
        let fold = GraphMorphism::new(p3, c4, vec![0, 1, 0]);
        assert!(fold.is_homomorphism());
        assert!(matches!(
            fold.monomorphism_defect(),
            Some(MorphismDefect::NotInjective { .. })
        ));
    }

    #[test]
    fn triangles_glued_along_an_edge() {
        let p = clique_sum_pushout(&edge_into_triangle(0, 1), &edge_into_triangle(1, 2)).unwrap();
        assert_eq!(p.apex.vertex_count(), 4);
        assert_eq!(p.apex.edge_count(), 5);
        assert!(!p.apex.is_complete());
        assert!(p.leg_g.is_monomorphism() && p.leg_h.is_monomorphism());
        assert_eq!(
            p.leg_g.after(&edge_into_triangle(0, 1)).unwrap(),
            p.leg_h.after(&edge_into_triangle(1, 2)).unwrap()
        );
    }

    #[test]
    fn gluing_along_k0_is_disjoint_union() {
        let k0 = SimpleGraph::complete(0);
        let g = GraphMorphism::mono(k0.clone(), path(3), vec![]).unwrap();
        let h = GraphMorphism::mono(k0, triangle(), vec![]).unwrap();
        let p = clique_sum_pushout(&g, &h).unwrap();
        assert_eq!(
            p.apex,
            SimpleGraph::new(6, [(0, 1), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap()
        );
        assert_eq!(p.leg_h.vertex_map(), &[3, 4, 5]);
    }

    #[test]
    fn gluing_along_everything_is_identity() {
        let id = GraphMorphism::identity(triangle());
        let p = clique_sum_pushout(&id, &id).unwrap();
        assert_eq!(p.apex, triangle());
        assert_eq!(p.leg_g, GraphMorphism::identity(triangle()));
        assert_eq!(p.leg_h, GraphMorphism::identity(triangle()));
    }

    #[test]
    fn pushout_rejects_non_spine_sources() {
        let g = GraphMorphism::mono(path(2), triangle(), vec![0, 1]).unwrap();
        assert!(clique_sum_pushout(&g, &g).is_ok());
        let p3 = GraphMorphism::mono(path(3), triangle(), vec![0, 1, 2]).unwrap();
        assert!(matches!(
            clique_sum_pushout(&p3, &p3),
            Err(Error::PreconditionViolation(_))
        ));
        let not_mono = GraphMorphism::new(SimpleGraph::complete(2), triangle(), vec![0, 0]);
        assert!(clique_sum_pushout(&not_mono, &not_mono).is_err());
    }

    #[test]
    fn mediating_with_identity_extensions_is_identity() {
        let g = edge_into_triangle(0, 1);
        let h = edge_into_triangle(0, 2);
        let id = GraphMorphism::identity(triangle());
        let m = mediating_morphism(&g, &h, &id, &id).unwrap();
        let apex = clique_sum_pushout(&g, &h).unwrap().apex;
        assert_eq!(m, GraphMorphism::identity(apex));
    }

    #[test]
    fn mediating_into_larger_gluing() {
        let g = edge_into_triangle(0, 1);
        let h = edge_into_triangle(1, 2);
        let g_ext = GraphMorphism::mono(triangle(), SimpleGraph::complete(4), vec![3, 1, 0]).unwrap();
        let h_ext = GraphMorphism::identity(triangle());
        let m = mediating_morphism(&g, &h, &g_ext, &h_ext).unwrap();
        assert_eq!(m.source().vertex_count(), 4);
        assert_eq!(m.target().vertex_count(), 5);
        assert!(m.is_monomorphism());

        let report = check_sc2(&GraphMonoCategory, &[ExtendedSpan { g, h, g_ext, h_ext }], 10_000);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn mediating_over_disjoint_union_is_coproduct_map() {
        let k0 = SimpleGraph::complete(0);
        let g = GraphMorphism::mono(k0.clone(), path(2), vec![]).unwrap();
        let h = GraphMorphism::mono(k0, path(2), vec![]).unwrap();
        let g_ext = GraphMorphism::mono(path(2), path(3), vec![1, 2]).unwrap();
        let h_ext = GraphMorphism::mono(path(2), path(3), vec![1, 0]).unwrap();
        let m = mediating_morphism(&g, &h, &g_ext, &h_ext).unwrap();
        assert_eq!(m.vertex_map(), &[1, 2, 4, 3]);
    }

    #[test]
    fn mediating_rejects_mismatched_extension() {
        let g = edge_into_triangle(0, 1);
        let wrong = GraphMorphism::identity(path(4));
        assert!(mediating_morphism(&g, &g, &wrong, &wrong).is_err());
    }

    #[test]
    fn spine_index_examples() {
        assert_eq!(spine_index(&SimpleGraph::complete(1)), 1);
        assert_eq!(spine_index(&cycle(5).unwrap()), 5);
        assert_eq!(spine_index(&SimpleGraph::empty(0)), 0);
    }

    #[test]
    fn sc1_single_vertex() {
        let r = check_sc1(&GraphMonoCategory, &[SimpleGraph::empty(1)], 8);
        assert!(r.passed());
        assert_eq!(r.witnesses[0].1, 1);
    }

    #[test]
    fn serde_uses_vertices_edges_shape() {
        let g = path(3);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"vertices":3,"edges":[[0,1],[1,2]]}"#);
        let back: SimpleGraph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<SimpleGraph>(r#"{"vertices":2,"edges":[[0,5]]}"#).is_err());
    }
}

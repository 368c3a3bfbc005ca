//! Finite populations of graphs and random diagrams for the law checks.

use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::Rng;

use super::families::{random_gnp, random_permutation};
use super::{GraphMorphism, SimpleGraph};
use crate::category::{ExtendedSpan, Span};
use crate::error::{Error, Result};

/// Canonical-class enumeration tries every permutation; beyond this it is too slow.
pub const MAX_CLASS_VERTICES: usize = 6;

fn unordered_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Every labeled graph on exactly `n` vertices (`2^(n(n-1)/2)` of them).
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = SimpleGraph> {
    let pairs = unordered_pairs(n);
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        SimpleGraph::new(n, edges).expect("pairs are in range")
    })
}

fn heap_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    out.push(perm.clone());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            out.push(perm.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// One representative per isomorphism class of graphs on `0..=max_vertices`
/// vertices, ordered by vertex count then by canonical code.
pub fn graph_classes(max_vertices: usize) -> Result<Vec<SimpleGraph>> {
    if max_vertices > MAX_CLASS_VERTICES {
        return Err(Error::BoundExceeded {
            what: "isomorphism-class enumeration",
            size: max_vertices,
            bound: MAX_CLASS_VERTICES,
        });
    }
    let mut out = Vec::new();
    for n in 0..=max_vertices {
        let pairs = unordered_pairs(n);
        let mut index = vec![vec![0usize; n]; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            index[u][v] = i;
            index[v][u] = i;
        }
        let perms = heap_permutations(n);
        let mut seen = vec![false; 1 << pairs.len()];
        let mut codes = BTreeSet::new();
        for mask in 0..(1u32 << pairs.len()) {
            if seen[mask as usize] {
                continue;
            }
            let mut best = mask;
            for p in &perms {
                let image = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(0u32, |acc, (_, &(u, v))| acc | 1 << index[p[u]][p[v]]);
                seen[image as usize] = true;
                best = best.min(image);
            }
            codes.insert(best);
        }
        for code in codes {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| code >> i & 1 == 1)
                .map(|(_, &e)| e);
            out.push(SimpleGraph::new(n, edges).expect("pairs are in range"));
        }
    }
    Ok(out)
}

/// A random graph on `size` vertices together with a mono `K_n -> G` whose image
/// is a random ordered `n`-subset made into a clique.
fn random_spine_target<R: Rng + ?Sized>(rng: &mut R, n: usize, size: usize) -> GraphMorphism {
    let base = random_gnp(size, 0.5, rng);
    let chosen: Vec<usize> = sample(rng, size, n).into_vec();
    let clique = chosen
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| chosen[i + 1..].iter().map(move |&b| (a, b)));
    let target = base.with_edges(clique).expect("clique is in range");
    GraphMorphism::new(SimpleGraph::complete(n), target, chosen)
}

/// A random mono `G -> G'` where `G'` has `extra` more vertices, extra random
/// edges, and a shuffled labeling.
pub fn random_extension<R: Rng + ?Sized>(rng: &mut R, g: &SimpleGraph, extra: usize) -> GraphMorphism {
    let size = g.vertex_count() + extra;
    let added: Vec<(usize, usize)> = unordered_pairs(size)
        .into_iter()
        .filter(|_| rng.gen_bool(0.3))
        .collect();
    let grown = SimpleGraph::new(size, g.edges().iter().copied().chain(added)).expect("in range");
    let perm = random_permutation(size, rng);
    let target = grown.relabel(&perm).expect("perm is a permutation");
    GraphMorphism::new(g.clone(), target, perm[..g.vertex_count()].to_vec())
}

/// Random span out of `K_n` whose clique-sum has at most `max_apex` vertices.
pub fn random_span<R: Rng + ?Sized>(rng: &mut R, max_apex: usize) -> Span<GraphMorphism> {
    let apex = rng.gen_range(0..=max_apex);
    random_spine_target_pair(rng, apex)
}

/// Random data for the mediating-morphism law; both clique-sums have at most
/// `max_apex` vertices.
pub fn random_extended_span<R: Rng + ?Sized>(rng: &mut R, max_apex: usize) -> ExtendedSpan<GraphMorphism> {
    let inner = rng.gen_range(0..=max_apex);
    let outer = rng.gen_range(inner..=max_apex);
    let span = random_spine_target_pair(rng, inner);
    let grow = outer - inner;
    let extra_g = rng.gen_range(0..=grow);
    let g_ext = random_extension(rng, span.g.target(), extra_g);
    let h_ext = random_extension(rng, span.h.target(), grow - extra_g);
    ExtendedSpan {
        g: span.g,
        h: span.h,
        g_ext,
        h_ext,
    }
}

/// Sizes are chosen so that `|G| + |H| - n = apex`.
fn random_spine_target_pair<R: Rng + ?Sized>(rng: &mut R, apex: usize) -> Span<GraphMorphism> {
    let n = rng.gen_range(0..=apex.min(4));
    let left = rng.gen_range(n..=apex);
    Span {
        g: random_spine_target(rng, n, left),
        h: random_spine_target(rng, n, apex + n - left),
    }
}

/// A pair `(G, H)` with a monomorphism `G -> H`, `|V(H)| <= max_vertices`.
pub fn random_mono_pair<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize) -> (SimpleGraph, SimpleGraph) {
    let host_size = rng.gen_range(1..=max_vertices.max(1));
    let size = rng.gen_range(0..=host_size);
    let g = random_gnp(size, 0.5, rng);
    let ext = random_extension(rng, &g, host_size - size);
    (g, ext.target().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::SpinedCategory;
    use crate::graph::GraphMonoCategory;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn class_counts_match_known_sequence() {
        // 1, 1, 2, 4, 11, 34, 156 graphs on 0..=6 vertices
        let classes = graph_classes(6).unwrap();
        let mut per_size = [0usize; 7];
        for g in &classes {
            per_size[g.vertex_count()] += 1;
        }
        assert_eq!(per_size, [1, 1, 2, 4, 11, 34, 156]);
        assert!(graph_classes(7).is_err());
    }

    #[test]
    fn labeled_counts() {
        assert_eq!(all_labeled_graphs(0).count(), 1);
        assert_eq!(all_labeled_graphs(4).count(), 64);
    }

    #[test]
    fn random_diagrams_are_well_formed() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let s = random_span(&mut rng, 10);
            assert!(s.g.is_monomorphism() && s.h.is_monomorphism());
            let p = GraphMonoCategory.proxy_pushout(&s.g, &s.h).unwrap();
            assert!(p.apex.vertex_count() <= 10);

            let d = random_extended_span(&mut rng, 5);
            for m in [&d.g, &d.h, &d.g_ext, &d.h_ext] {
                assert!(m.is_monomorphism(), "{m:?}");
            }
            let gg = d.g_ext.after(&d.g).unwrap();
            let hh = d.h_ext.after(&d.h).unwrap();
            assert!(GraphMonoCategory.proxy_pushout(&gg, &hh).unwrap().apex.vertex_count() <= 5);

            let (g, h) = random_mono_pair(&mut rng, 8);
            assert!(crate::graph::exists_monomorphism(&g, &h));
        }
    }
}

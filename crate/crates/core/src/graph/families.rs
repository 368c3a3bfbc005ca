//! Named graph families and seeded random generators.

use rand::seq::SliceRandom;
use rand::Rng;

use super::SimpleGraph;
use crate::error::{Error, Result};

pub fn path(n: usize) -> SimpleGraph {
    SimpleGraph::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are in range")
}

/// `C_n` for `n >= 3`.
pub fn cycle(n: usize) -> Result<SimpleGraph> {
    if n < 3 {
        return Err(Error::PreconditionViolation(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    SimpleGraph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn complete(n: usize) -> SimpleGraph {
    SimpleGraph::complete(n)
}

/// `rows × cols` grid, vertex `(r, c)` at index `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    SimpleGraph::new(rows * cols, edges).expect("grid edges are in range")
}

pub fn star(leaves: usize) -> SimpleGraph {
    SimpleGraph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star edges are in range")
}

pub fn petersen() -> SimpleGraph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    SimpleGraph::new(10, outer.chain(spokes).chain(inner)).expect("petersen edges are in range")
}

/// Uniform labeled tree on `n` vertices, decoded from a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> SimpleGraph {
    if n <= 2 {
        return path(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    SimpleGraph::new(n, edges).expect("tree edges are in range")
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, edges).expect("random edges are in range")
}

pub fn random_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

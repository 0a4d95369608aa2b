//! Seeded generators for graphs and matrices.
//!
//! Every generator is a deterministic function of its parameters and a `u64`
//! seed. Randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`, so a given build reproduces the same corpus bit for bit.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::BinaryMatrix;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Builds the threshold graph in which vertex `k` is added universal when
/// `universal[k]` is true and isolated otherwise.
pub fn threshold_from_choices(universal: &[bool]) -> Graph {
    Graph::from_fn(universal.len(), |u, v| universal[u.max(v)])
}

/// A random threshold graph: `n` coin flips between "add isolated" and "add
/// universal", followed by a random relabelling of the vertices.
pub fn gen_threshold(n: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let choices: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(&mut rng);
    let base = threshold_from_choices(&choices);
    let mut g = Graph::empty(n);
    for (u, v) in base.edges() {
        g.set_edge(label[u], label[v], true);
    }
    g
}

/// Toggles a random set of vertex pairs whose edit graph has maximum degree at most `d`.
pub fn gen_perturbed(g: &Graph, d: usize, seed: u64) -> Graph {
    let n = g.n();
    let mut out = g.clone();
    if d == 0 || n < 2 {
        return out;
    }
    let mut rng = rng(seed);
    let mut budget = vec![0usize; n];
    let mut toggled = HashSet::new();
    for _ in 0..4 * n * d {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || budget[u] >= d || budget[v] >= d {
            continue;
        }
        if !toggled.insert((u.min(v), u.max(v))) {
            continue;
        }
        budget[u] += 1;
        budget[v] += 1;
        out.toggle_edge(u, v);
    }
    out
}

/// An Erdős–Rényi graph where each pair is an edge with probability `p`.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = rng(seed);
    Graph::from_fn(n, |_, _| rng.gen_bool(p.clamp(0.0, 1.0)))
}

/// A random monotone staircase with at most `d` flipped cells in every row and column.
///
/// The result is `2d`-restricted: a "1 before 0" pair of cells in two lines of
/// a monotone matrix needs a flip in one of the two lines.
pub fn gen_t_restricted(m: usize, n: usize, d: usize, seed: u64) -> BinaryMatrix {
    let mut rng = rng(seed);
    let mut starts: Vec<usize> = (0..m).map(|_| rng.gen_range(0..=n)).collect();
    starts.sort_unstable_by(|a, b| b.cmp(a));
    let mut a = BinaryMatrix::from_fn(m, n, |i, j| j >= starts[i]);
    if d == 0 || m == 0 || n == 0 {
        return a;
    }
    let mut row_flips = vec![0usize; m];
    let mut col_flips = vec![0usize; n];
    let mut flipped = HashSet::new();
    for _ in 0..2 * (m + n) * d {
        let i = rng.gen_range(0..m);
        let j = rng.gen_range(0..n);
        if row_flips[i] >= d || col_flips[j] >= d || !flipped.insert((i, j)) {
            continue;
        }
        row_flips[i] += 1;
        col_flips[j] += 1;
        let bit = a.get(i, j);
        a.set(i, j, !bit);
    }
    a
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StairVariant {
    /// `n/2` zero rows, the half-ones row, then `n/2` all-one rows.
    Plain,
    /// The plain matrix with an upper diagonal of ones and a lower diagonal of
    /// zeros added, so that row and column sums are nondecreasing.
    Tweaked,
}

/// The `(n + 1) × n` padded staircase built around the row `1…1 0…0`.
pub fn gen_stair(n: usize, variant: StairVariant) -> Result<BinaryMatrix> {
    if !n.is_multiple_of(2) || n < 4 {
        return Err(Error::Input(format!("stair size must be even and at least 4, got {n}")));
    }
    let half = n / 2;
    let mut a = BinaryMatrix::from_fn(n + 1, n, |i, j| match i.cmp(&half) {
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => j < half,
        std::cmp::Ordering::Greater => true,
    });
    if variant == StairVariant::Tweaked {
        for k in 0..half {
            a.set(k, half + k, true);
            a.set(half + 1 + k, k, false);
        }
    }
    Ok(a)
}

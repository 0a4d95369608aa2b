//! t-domination between vertices and graphs.
//!
//! `u` t-dominates `v` when at most `t` vertices other than `u` and `v` are
//! adjacent to `v` but not to `u`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The vertices adjacent to `v` and not to `u`, excluding `u` and `v` themselves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationCertificate {
    pub u: usize,
    pub v: usize,
    pub witnesses: Vec<usize>,
}

/// Number of vertices outside `{u, v}` adjacent to `v` and not to `u`.
#[inline]
pub(crate) fn witness_count(g: &Graph, u: usize, v: usize) -> usize {
    // u is never in N(u), and v is never in N(v); u ∈ N(v) \ N(u) exactly when u ~ v.
    g.neighbors(v).difference_count(g.neighbors(u)) - usize::from(g.has_edge(u, v))
}

/// Decides whether `u` t-dominates `v` and returns the witness set either way.
pub fn dominates(g: &Graph, u: usize, v: usize, t: usize) -> Result<(bool, DominationCertificate)> {
    let n = g.n();
    if u >= n || v >= n {
        return Err(Error::Input(format!("vertex out of range for n = {n}")));
    }
    if u == v {
        return Err(Error::Input(format!("domination needs distinct vertices, got {u} twice")));
    }
    let witnesses: Vec<usize> = g
        .neighbors(v)
        .difference(g.neighbors(u))
        .filter(|&w| w != u)
        .collect();
    let holds = witnesses.len() <= t;
    Ok((holds, DominationCertificate { u, v, witnesses }))
}

/// True when every pair of distinct vertices has one t-dominating the other.
pub fn is_t_dominating(g: &Graph, t: usize) -> bool {
    let n = g.n();
    (0..n).all(|u| {
        (u + 1..n).all(|v| witness_count(g, u, v) <= t || witness_count(g, v, u) <= t)
    })
}

/// The least `t` for which `g` is t-dominating.
pub fn min_domination(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    for u in 0..n {
        for v in u + 1..n {
            let need = witness_count(g, u, v).min(witness_count(g, v, u));
            best = best.max(need);
        }
    }
    best
}

/// A pair `(u, v)` attaining [`min_domination`], if the graph has at least two vertices.
pub fn hardest_pair(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.n();
    let mut best: Option<(usize, usize, usize)> = None;
    for u in 0..n {
        for v in u + 1..n {
            let need = witness_count(g, u, v).min(witness_count(g, v, u));
            if best.is_none_or(|(_, _, b)| need > b) {
                best = Some((u, v, need));
            }
        }
    }
    best
}

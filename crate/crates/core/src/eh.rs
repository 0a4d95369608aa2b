//! Clique-or-stable-set bounds for graphs excluding threshold patterns.

use serde::Serialize;

use crate::domination::is_t_dominating;
use crate::error::{ensure_invariant, Error, Result};
use crate::graph::Graph;
use crate::induced::has_induced;
use crate::pipeline::reduce_to_split;
use crate::recognize::is_threshold;
use crate::Verify;

/// Largest vertex count accepted by [`rho`], [`clique_number`] and [`stability_number`].
pub const MAX_RHO_VERTICES: usize = 64;

fn bitsets(g: &Graph) -> Result<Vec<u64>> {
    if g.n() > MAX_RHO_VERTICES {
        return Err(Error::Resource(format!(
            "exact clique search supports at most {MAX_RHO_VERTICES} vertices, got {}",
            g.n()
        )));
    }
    Ok((0..g.n())
        .map(|v| g.neighbors(v).ones().fold(0u64, |acc, w| acc | 1 << w))
        .collect())
}

/// Maximum clique size, by branch and bound with a greedy colouring bound.
pub fn clique_number(g: &Graph) -> Result<usize> {
    let adj = bitsets(g)?;
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut best = 0;
    expand(&adj, 0, all, &mut best);
    Ok(best)
}

pub fn stability_number(g: &Graph) -> Result<usize> {
    clique_number(&g.complement())
}

/// `max(ω(G), α(G))`.
pub fn rho(g: &Graph) -> Result<usize> {
    Ok(clique_number(g)?.max(stability_number(g)?))
}

/// Grows a clique of size `size` using candidates `cand`.
fn expand(adj: &[u64], size: usize, mut cand: u64, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    // Colour classes give an upper bound on the clique that `cand` can add.
    let (order, colours) = colour_sort(adj, cand);
    for (&v, &c) in order.iter().zip(&colours).rev() {
        if size + c <= *best {
            return;
        }
        expand(adj, size + 1, cand & adj[v], best);
        cand &= !(1 << v);
    }
}

/// Greedy sequential colouring of `cand`; returns vertices in colour order
/// with the number of colours used up to and including each one.
fn colour_sort(adj: &[u64], cand: u64) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut colours = Vec::with_capacity(order.capacity());
    let mut uncoloured = cand;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut avail = uncoloured;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v) & !adj[v];
            uncoloured &= !(1 << v);
            order.push(v);
            colours.push(colour);
        }
    }
    (order, colours)
}

/// A nonnegative rational `num / den` with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Ratio {
    pub num: u128,
    pub den: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Premises {
    pub h1_threshold: bool,
    pub h2_threshold: bool,
    pub g_avoids_h1: bool,
    pub g_avoids_h2: bool,
}

impl Premises {
    pub fn all(&self) -> bool {
        self.h1_threshold && self.h2_threshold && self.g_avoids_h1 && self.g_avoids_h2
    }
}

/// Inputs and outcome of one check of `|V(G)| <= (2^m - 1)·ρ(G)^(k-2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    /// `|V(H1)| + |V(H2)|`.
    pub m: usize,
    /// `ω(H1) + α(H2)`.
    pub k: usize,
    pub rho: usize,
    pub n: usize,
    pub bound: Ratio,
    pub premises: Premises,
    /// `None` when some premise fails.
    pub holds: Option<bool>,
}

/// `(2^m - 1)·rho^(k-2)` as an exact ratio.
pub fn eh_bound(m: usize, k: usize, rho: usize) -> Result<Ratio> {
    let overflow = || Error::Resource(format!("bound overflows for m = {m}, k = {k}, rho = {rho}"));
    if m >= 128 {
        return Err(overflow());
    }
    let lead = (1u128 << m) - 1;
    let power = |e: usize| -> Result<u128> {
        (rho as u128).checked_pow(e as u32).ok_or_else(overflow)
    };
    if k >= 2 {
        let num = lead.checked_mul(power(k - 2)?).ok_or_else(overflow)?;
        Ok(Ratio { num, den: 1 })
    } else if rho == 0 {
        Err(Error::Input("rho(G)^(k-2) is undefined for the empty graph when k < 2".into()))
    } else {
        Ok(Ratio { num: lead, den: power(2 - k)? })
    }
}

/// Checks the bound on `G` when it excludes the threshold graphs `H1` and `H2`
/// as induced subgraphs. A failing inequality under valid premises is an
/// invariant error.
pub fn check_thresholds2(h1: &Graph, h2: &Graph, g: &Graph) -> Result<BoundReport> {
    let premises = Premises {
        h1_threshold: is_threshold(h1),
        h2_threshold: is_threshold(h2),
        g_avoids_h1: !has_induced(g, h1)?,
        g_avoids_h2: !has_induced(g, h2)?,
    };
    let m = h1.n() + h2.n();
    let k = clique_number(h1)? + stability_number(h2)?;
    let rho = rho(g)?;
    let n = g.n();
    let bound = eh_bound(m, k, rho)?;
    let holds = if premises.all() {
        let ok = (n as u128)
            .checked_mul(bound.den)
            .is_some_and(|lhs| lhs <= bound.num);
        ensure_invariant!(
            ok,
            "{n} > (2^{m} - 1)·{rho}^({k} - 2) for a graph excluding both threshold patterns"
        );
        Some(true)
    } else {
        None
    };
    Ok(BoundReport { m, k, rho, n, bound, premises, holds })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SetKind {
    Clique,
    Stable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extracted {
    pub kind: SetKind,
    pub vertices: Vec<usize>,
}

/// `⌈n / (4t + 2)⌉`.
pub fn extraction_target(n: usize, t: usize) -> usize {
    n.div_ceil(4 * t + 2)
}

/// Finds a clique or stable set of size at least `⌈n / (4t + 2)⌉` in a t-dominating graph.
///
/// The larger side `X` of the split reduction (the stable side on ties) has
/// at least `n/2` vertices, and `G[X]` (stable side) or its complement (clique
/// side) has maximum degree at most `2t`. Repeatedly taking a vertex of
/// minimum residual degree and discarding its neighbours then yields a stable
/// set of that graph with at least `|X| / (2t + 1)` vertices.
pub fn extract_clique_or_stable(g: &Graph, t: usize) -> Result<Extracted> {
    if !is_t_dominating(g, t) {
        return Err(Error::Input(format!("graph is not {t}-dominating")));
    }
    let (_, partition) = reduce_to_split(g, t, Verify::Off)?;
    let (kind, x) = if partition.stable.len() >= partition.clique.len() {
        (SetKind::Stable, partition.stable)
    } else {
        (SetKind::Clique, partition.clique)
    };
    // Conflicts are edges for a stable set and non-edges for a clique.
    let conflict = |u: usize, v: usize| g.has_edge(u, v) == (kind == SetKind::Stable);
    let mut alive = x.clone();
    let mut chosen = Vec::new();
    while !alive.is_empty() {
        let residual = |v: usize, alive: &[usize]| alive.iter().filter(|&&w| w != v && conflict(v, w)).count();
        let &pick = alive
            .iter()
            .min_by_key(|&&v| (residual(v, &alive), v))
            .expect("alive is nonempty");
        chosen.push(pick);
        alive.retain(|&w| w != pick && !conflict(pick, w));
    }
    chosen.sort_unstable();

    let genuine = match kind {
        SetKind::Clique => g.is_clique(&chosen),
        SetKind::Stable => g.is_stable(&chosen),
    };
    ensure_invariant!(genuine, "extracted set is not a {kind:?}");
    let target = extraction_target(g.n(), t);
    ensure_invariant!(
        chosen.len() >= target,
        "extracted {} vertices, fewer than the guaranteed {target}",
        chosen.len()
    );
    Ok(Extracted { kind, vertices: chosen })
}

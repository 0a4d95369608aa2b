//! Recognizers for threshold, split, and split half-graphs.
//!
//! The three notions of "0-dominating" implemented here (peeling, forbidden
//! induced subgraphs, split half-graph) are computed independently so they can
//! be cross-checked against each other.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{patterns, Graph};
use crate::induced::has_induced;

/// One step of building a threshold graph from the null graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BuildStep {
    Isolated(usize),
    Universal(usize),
}

impl BuildStep {
    pub fn vertex(self) -> usize {
        match self {
            BuildStep::Isolated(v) | BuildStep::Universal(v) => v,
        }
    }
}

/// Peels isolated or universal vertices until the graph is empty.
///
/// Returns the build sequence (the reverse of the peel order) when peeling
/// succeeds. When both kinds of vertex are available, the lowest-indexed
/// isolated vertex goes first.
pub fn threshold_build_sequence(g: &Graph) -> Option<Vec<BuildStep>> {
    let n = g.n();
    let mut deg = g.degrees();
    let mut alive = vec![true; n];
    let mut peeled = Vec::with_capacity(n);
    for remaining in (1..=n).rev() {
        let pick = (0..n)
            .find(|&v| alive[v] && deg[v] == 0)
            .map(BuildStep::Isolated)
            .or_else(|| {
                (0..n)
                    .find(|&v| alive[v] && deg[v] == remaining - 1)
                    .map(BuildStep::Universal)
            })?;
        let v = pick.vertex();
        alive[v] = false;
        for w in g.neighbors(v).ones() {
            deg[w] -= 1;
        }
        peeled.push(pick);
    }
    peeled.reverse();
    Some(peeled)
}

pub fn is_threshold(g: &Graph) -> bool {
    threshold_build_sequence(g).is_some()
}

/// Rebuilds a graph from a threshold build sequence. Each vertex of `0..n` must appear once.
pub fn graph_from_build_sequence(steps: &[BuildStep]) -> Result<Graph> {
    let n = steps.len();
    let mut seen = vec![false; n];
    let mut g = Graph::empty(n);
    for (i, step) in steps.iter().enumerate() {
        let v = step.vertex();
        if v >= n || seen[v] {
            return Err(Error::Input(format!("vertex {v} out of range or repeated")));
        }
        seen[v] = true;
        if let BuildStep::Universal(_) = step {
            for prev in &steps[..i] {
                g.set_edge(v, prev.vertex(), true);
            }
        }
    }
    Ok(g)
}

/// Induced witnesses for the three forbidden subgraphs of threshold graphs.
pub fn threshold_obstruction(g: &Graph) -> bool {
    [patterns::c4(), patterns::two_k2(), patterns::p4()]
        .iter()
        .any(|p| has_induced(g, p).expect("pattern within size limit"))
}

/// A partition of the vertex set into a clique and a stable set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub stable: Vec<usize>,
}

impl SplitPartition {
    /// Checks that the two sides partition `0..g.n()`, and that `clique` is a
    /// clique and `stable` a stable set of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let mut seen = vec![false; n];
        for &v in self.clique.iter().chain(&self.stable) {
            if v >= n || seen[v] {
                return Err(Error::Input(format!(
                    "split partition mentions vertex {v} twice or out of range"
                )));
            }
            seen[v] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Input("split partition does not cover every vertex".into()));
        }
        if !g.is_clique(&self.clique) {
            return Err(Error::Input("clique side is not a clique".into()));
        }
        if !g.is_stable(&self.stable) {
            return Err(Error::Input("stable side is not a stable set".into()));
        }
        Ok(())
    }
}

/// Finds a split partition from the degree sequence, or `None` if `g` is not split.
///
/// With degrees `d_1 >= ... >= d_n` and `m` the largest index such that
/// `d_m >= m - 1`, the graph is split exactly when
/// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`, and then the first `m`
/// vertices form a clique and the rest a stable set.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.n();
    let deg = g.degrees();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
    let m = order
        .iter()
        .enumerate()
        .take_while(|&(i, &v)| deg[v] >= i)
        .count();
    let head: usize = order[..m].iter().map(|&v| deg[v]).sum();
    let tail: usize = order[m..].iter().map(|&v| deg[v]).sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let mut clique = order[..m].to_vec();
    let mut stable = order[m..].to_vec();
    clique.sort_unstable();
    stable.sort_unstable();
    let p = SplitPartition { clique, stable };
    debug_assert!(p.validate(g).is_ok());
    Some(p)
}

pub fn is_split(g: &Graph) -> bool {
    split_partition(g).is_some()
}

/// Decides whether `g` is a split graph whose clique-to-stable edges form a half-graph.
///
/// Whether the stable-side neighbourhoods form a chain does not depend on which
/// split partition is used, since any two split partitions differ by moving a
/// vertex that is complete to the clique or anticomplete to the stable set.
pub fn is_split_half_graph(g: &Graph) -> bool {
    let Some(p) = split_partition(g) else {
        return false;
    };
    let mut stable = p.stable;
    stable.sort_by_key(|&v| g.degree(v));
    // Stable vertices only have clique neighbours, so N(v) is already N(v) ∩ M.
    stable
        .windows(2)
        .all(|w| g.neighbors(w[0]).is_subset(g.neighbors(w[1])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::is_t_dominating;

    fn c4_with_chord() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap()
    }

    #[test]
    fn threshold_examples() {
        assert!(is_threshold(&Graph::complete(1)));
        assert!(is_threshold(&Graph::empty(0)));
        assert!(!is_threshold(&patterns::p4()));
        assert!(!is_threshold(&patterns::c4()));
        assert!(!is_threshold(&patterns::two_k2()));
    }

    #[test]
    fn chorded_c4_peel_trace() {
        let seq = threshold_build_sequence(&c4_with_chord()).unwrap();
        // peel order: universal 0, universal 2, isolated 1, isolated 3
        assert_eq!(
            seq,
            vec![
                BuildStep::Isolated(3),
                BuildStep::Isolated(1),
                BuildStep::Universal(2),
                BuildStep::Universal(0),
            ]
        );
        assert_eq!(graph_from_build_sequence(&seq).unwrap(), c4_with_chord());
    }

    #[test]
    fn split_examples() {
        let k5 = split_partition(&Graph::complete(5)).unwrap();
        assert_eq!(k5.clique, vec![0, 1, 2, 3, 4]);
        assert!(k5.stable.is_empty());
        assert!(split_partition(&patterns::c4()).is_none());
        assert!(split_partition(&patterns::c5()).is_none());
        assert!(split_partition(&patterns::two_k2()).is_none());
        let p = split_partition(&c4_with_chord()).unwrap();
        assert_eq!(p.clique, vec![0, 1, 2]);
        assert_eq!(p.stable, vec![3]);
        let null = split_partition(&Graph::empty(0)).unwrap();
        assert!(null.clique.is_empty() && null.stable.is_empty());
    }

    #[test]
    fn split_half_graph_examples() {
        assert!(is_split_half_graph(&Graph::complete(1)));
        assert!(!is_split_half_graph(&patterns::two_k2()));
        assert!(!is_split_half_graph(&patterns::p4()));
        assert!(is_split_half_graph(&c4_with_chord()));
    }

    #[test]
    fn partition_validation_errors() {
        let g = c4_with_chord();
        let bad = SplitPartition { clique: vec![0, 1], stable: vec![2, 3] };
        assert!(bad.validate(&g).is_err());
        let missing = SplitPartition { clique: vec![0, 1, 2], stable: vec![] };
        assert!(missing.validate(&g).is_err());
    }

    #[test]
    fn recognizers_agree_on_all_five_vertex_graphs() {
        let pairs: Vec<(usize, usize)> =
            (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let g = Graph::from_fn(5, |u, v| {
                let k = pairs.iter().position(|&p| p == (u, v)).unwrap();
                mask >> k & 1 == 1
            });
            let t = is_threshold(&g);
            assert_eq!(t, is_t_dominating(&g, 0), "{g:?}");
            assert_eq!(t, !threshold_obstruction(&g), "{g:?}");
            assert_eq!(t, is_split_half_graph(&g), "{g:?}");
        }
    }
}

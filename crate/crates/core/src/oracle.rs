//! Exhaustive ground truth for small instances.
//!
//! Graphs on `n <= 7` labelled vertices are handled as bitmasks over the
//! `n(n-1)/2` vertex pairs, ordered `(0,1), (0,2), …, (0,n-1), (1,2), …`.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::BinaryMatrix;

/// Largest vertex count accepted by the graph enumerators.
pub const MAX_ENUM_VERTICES: usize = 7;
/// Largest `m + n` accepted by [`oracle_min_monotone_distance`].
pub const MAX_STAIRCASE_SPAN: usize = 24;

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn check_enum_size(n: usize) -> Result<()> {
    if n > MAX_ENUM_VERTICES {
        return Err(Error::Input(format!(
            "exhaustive enumeration supports at most {MAX_ENUM_VERTICES} vertices, got {n}"
        )));
    }
    Ok(())
}

/// Graph with the edges selected by `mask` under the pair order above.
pub fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let pairs = pair_list(n);
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|&(k, _)| mask >> k & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    Graph::from_edges(n, &edges).expect("pairs are in range")
}

pub fn mask_from_graph(g: &Graph) -> Result<u32> {
    check_enum_size(g.n())?;
    Ok(pair_list(g.n())
        .iter()
        .enumerate()
        .filter(|&(_, &(u, v))| g.has_edge(u, v))
        .fold(0, |acc, (k, _)| acc | 1 << k))
}

/// Every graph on `n` labelled vertices, once each, in increasing mask order.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_enum_size(n)?;
    let count = 1u32 << (n * n.saturating_sub(1) / 2);
    Ok((0..count).map(move |mask| graph_from_mask(n, mask)))
}

/// Masks of all threshold graphs on `n` labelled vertices.
///
/// Built straight from the definition: every ordering of the vertices combined
/// with every isolated/universal choice, deduplicated.
pub fn threshold_masks(n: usize) -> Result<&'static [u32]> {
    check_enum_size(n)?;
    static CACHE: OnceLock<Mutex<HashMap<usize, &'static [u32]>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().expect("cache lock");
    if let Some(&masks) = guard.get(&n) {
        return Ok(masks);
    }
    let index = pair_index_table(n);
    let mut found = BTreeSet::new();
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        // Choice bit k: the k-th vertex in `order` is added universal.
        // The first vertex's choice is irrelevant, so only 2^(n-1) choices are tried.
        for choice in 0u32..(1 << n.saturating_sub(1)) {
            let mut mask = 0u32;
            for later in 1..n {
                if choice >> (later - 1) & 1 == 1 {
                    for &earlier in &order[..later] {
                        mask |= 1 << index[order[later]][earlier];
                    }
                }
            }
            found.insert(mask);
        }
        if !next_permutation(&mut order) {
            break;
        }
    }
    let masks: &'static [u32] = Box::leak(found.into_iter().collect::<Vec<_>>().into_boxed_slice());
    guard.insert(n, masks);
    Ok(masks)
}

fn pair_index_table(n: usize) -> Vec<Vec<usize>> {
    let mut table = vec![vec![usize::MAX; n]; n];
    for (k, (u, v)) in pair_list(n).into_iter().enumerate() {
        table[u][v] = k;
        table[v][u] = k;
    }
    table
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p.iter().rposition(|&x| x > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Minimum local difference from `g` to any threshold graph on the same vertices.
pub fn oracle_min_threshold_distance(g: &Graph) -> Result<usize> {
    let n = g.n();
    let target = mask_from_graph(g)?;
    let index = pair_index_table(n);
    // star[v]: pairs incident to v.
    let star: Vec<u32> = (0..n)
        .map(|v| (0..n).filter(|&w| w != v).fold(0, |acc, w| acc | 1 << index[v][w]))
        .collect();
    let mut best = usize::MAX;
    for &mask in threshold_masks(n)? {
        let diff = mask ^ target;
        let mut worst = 0;
        for &s in &star {
            worst = worst.max((diff & s).count_ones() as usize);
            if worst >= best {
                break;
            }
        }
        best = best.min(worst);
        if best == 0 {
            break;
        }
    }
    Ok(if n == 0 { 0 } else { best })
}

/// Minimum matrix local difference from `a` to any monotone matrix of the same shape.
///
/// Monotone matrices are staircases: row `i` is one exactly from column
/// `start[i]` on, with `start` nonincreasing. The search walks these
/// staircases row by row and prunes on the running row and column maxima.
pub fn oracle_min_monotone_distance(a: &BinaryMatrix) -> Result<usize> {
    let (m, n) = (a.m(), a.n());
    if m + n > MAX_STAIRCASE_SPAN {
        return Err(Error::Input(format!(
            "staircase enumeration supports m + n <= {MAX_STAIRCASE_SPAN}, got {}",
            m + n
        )));
    }
    if m == 0 || n == 0 {
        return Ok(0);
    }
    // row_cost[i][s]: mismatches in row i if it is one exactly on columns >= s.
    let row_cost: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            (0..=n)
                .map(|s| (0..n).filter(|&j| a.get(i, j) != (j >= s)).count())
                .collect()
        })
        .collect();
    let mut search = StairSearch {
        a,
        row_cost,
        col_cost: vec![0; n],
        best: usize::MAX,
    };
    search.descend(0, n, 0);
    Ok(search.best)
}

struct StairSearch<'a> {
    a: &'a BinaryMatrix,
    row_cost: Vec<Vec<usize>>,
    col_cost: Vec<usize>,
    best: usize,
}

impl StairSearch<'_> {
    fn descend(&mut self, i: usize, max_start: usize, worst: usize) {
        if i == self.a.m() {
            self.best = self.best.min(worst);
            return;
        }
        let n = self.a.n();
        for s in 0..=max_start {
            let rc = self.row_cost[i][s];
            if rc.max(worst) >= self.best {
                continue;
            }
            let mut col_worst = worst.max(rc);
            for j in 0..n {
                if self.a.get(i, j) != (j >= s) {
                    self.col_cost[j] += 1;
                    col_worst = col_worst.max(self.col_cost[j]);
                }
            }
            if col_worst < self.best {
                self.descend(i + 1, s, col_worst);
            }
            for j in 0..n {
                if self.a.get(i, j) != (j >= s) {
                    self.col_cost[j] -= 1;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::patterns;
    use crate::matrix::matrix_local_difference;
    use crate::recognize::is_threshold;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(0).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(1).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(4).unwrap().count(), 64);
        assert!(enumerate_graphs(8).is_err());
    }

    #[test]
    fn enumeration_is_distinct() {
        let all: std::collections::HashSet<Graph> = enumerate_graphs(4).unwrap().collect();
        assert_eq!(all.len(), 64);
    }

    #[test]
    fn mask_round_trip() {
        for g in enumerate_graphs(4).unwrap() {
            let mask = mask_from_graph(&g).unwrap();
            assert_eq!(graph_from_mask(4, mask), g);
        }
    }

    #[test]
    fn threshold_masks_match_recognizer() {
        // Labelled threshold graph counts: 1, 1, 2, 8, 46, 332.
        for (n, expected) in [(0, 1), (1, 1), (2, 2), (3, 8), (4, 46), (5, 332)] {
            let masks = threshold_masks(n).unwrap();
            assert_eq!(masks.len(), expected, "n = {n}");
            let filtered: Vec<u32> = (0..1u32 << (n * n.saturating_sub(1) / 2))
                .filter(|&mask| is_threshold(&graph_from_mask(n, mask)))
                .collect();
            assert_eq!(masks, filtered.as_slice());
        }
    }

    #[test]
    fn threshold_distance_examples() {
        assert_eq!(oracle_min_threshold_distance(&Graph::complete(5)).unwrap(), 0);
        assert_eq!(oracle_min_threshold_distance(&patterns::c4()).unwrap(), 1);
        assert_eq!(oracle_min_threshold_distance(&patterns::two_k2()).unwrap(), 1);
        assert!(oracle_min_threshold_distance(&Graph::empty(8)).is_err());
    }

    #[test]
    fn threshold_distance_zero_iff_threshold_up_to_five() {
        for n in 0..=5 {
            for g in enumerate_graphs(n).unwrap() {
                let d = oracle_min_threshold_distance(&g).unwrap();
                assert_eq!(d == 0, is_threshold(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn monotone_distance_examples() {
        let row = BinaryMatrix::from_strs(&["1100"]).unwrap();
        assert_eq!(oracle_min_monotone_distance(&row).unwrap(), 2);
        let mono = BinaryMatrix::from_strs(&["0011", "0111"]).unwrap();
        assert_eq!(oracle_min_monotone_distance(&mono).unwrap(), 0);
        assert!(oracle_min_monotone_distance(&BinaryMatrix::zeros(12, 13)).is_err());
    }

    /// Brute force over all 2^(mn) matrices, keeping the monotone ones.
    #[test]
    fn monotone_distance_matches_subset_brute_force_3x3() {
        let all: Vec<BinaryMatrix> = (0u32..512)
            .map(|mask| BinaryMatrix::from_fn(3, 3, |i, j| mask >> (3 * i + j) & 1 == 1))
            .collect();
        let monotone: Vec<&BinaryMatrix> = all.iter().filter(|a| a.is_monotone()).collect();
        assert_eq!(monotone.len(), 20); // C(6, 3)
        for a in &all {
            let brute = monotone
                .iter()
                .map(|b| matrix_local_difference(a, b).unwrap())
                .min()
                .unwrap();
            assert_eq!(oracle_min_monotone_distance(a).unwrap(), brute, "{a:?}");
            assert_eq!(brute == 0, a.is_monotone());
        }
    }
}

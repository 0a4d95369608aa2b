//! Graph-level repair: t-dominating graph → split graph → matrix → threshold graph.

use serde::Serialize;

use crate::domination::{is_t_dominating, min_domination};
use crate::error::{ensure_invariant, Error, Result};
use crate::graph::{local_difference, Graph};
use crate::matrix::{repair_matrix, BinaryMatrix};
use crate::recognize::{is_split_half_graph, is_threshold, split_partition, SplitPartition};
use crate::Verify;

/// `2t`, the split-reduction bound.
pub fn split_bound(t: usize) -> u64 {
    2 * t as u64
}

/// `644t⁴`, the matrix repair bound.
pub fn matrix_bound(t: usize) -> u64 {
    644u64.saturating_mul((t as u64).saturating_pow(4))
}

/// `646t⁴`, the end-to-end bound.
pub fn total_bound(t: usize) -> u64 {
    646u64.saturating_mul((t as u64).saturating_pow(4))
}

/// Turns a t-dominating graph into a t-dominating split graph within local difference `2t`.
///
/// Threshold inputs are returned as they are. Otherwise vertices are taken in
/// nondecreasing degree order (ties by index) and the shortest prefix in which
/// some vertex has `2t + 1` neighbours inside the prefix is found. Everything
/// before that vertex becomes the stable side (its internal edges are deleted)
/// and the rest becomes a clique. If no such prefix exists every degree is at
/// most `2t` and the edgeless graph is returned.
pub fn reduce_to_split(g: &Graph, t: usize, verify: Verify) -> Result<(Graph, SplitPartition)> {
    if !is_t_dominating(g, t) {
        return Err(Error::Input(format!("graph is not {t}-dominating")));
    }
    if is_threshold(g) {
        let p = split_partition(g)
            .ok_or_else(|| Error::Invariant("threshold graph has no split partition".into()))?;
        return Ok((g.clone(), p));
    }

    let n = g.n();
    let order = g.degree_order();
    let mut in_prefix = vec![false; n];
    let mut inner = vec![0usize; n];
    let mut cut = None;
    'scan: for (pos, &v) in order.iter().enumerate() {
        in_prefix[v] = true;
        for w in g.neighbors(v).ones().filter(|&w| in_prefix[w]) {
            inner[v] += 1;
            inner[w] += 1;
        }
        let crowded = inner[v] > 2 * t
            || g.neighbors(v).ones().any(|w| in_prefix[w] && inner[w] > 2 * t);
        if crowded {
            cut = Some(pos);
            break 'scan;
        }
    }

    let (h, partition) = match cut {
        None => (
            Graph::empty(n),
            SplitPartition { clique: Vec::new(), stable: (0..n).collect() },
        ),
        Some(pos) => {
            let mut stable = order[..pos].to_vec();
            let mut clique = order[pos..].to_vec();
            stable.sort_unstable();
            clique.sort_unstable();
            let mut h = g.clone();
            for (a, &u) in stable.iter().enumerate() {
                for &v in &stable[a + 1..] {
                    h.set_edge(u, v, false);
                }
            }
            for (a, &u) in clique.iter().enumerate() {
                for &v in &clique[a + 1..] {
                    h.set_edge(u, v, true);
                }
            }
            (h, SplitPartition { clique, stable })
        }
    };

    if verify != Verify::Off {
        partition
            .validate(&h)
            .map_err(|e| Error::Invariant(format!("reduced graph partition: {e}")))?;
        ensure_invariant!(is_t_dominating(&h, t), "reduced split graph is not {t}-dominating");
        let diff = local_difference(g, &h)?;
        ensure_invariant!(diff <= 2 * t, "split reduction moved {diff} > 2t edges at a vertex");
    }
    Ok((h, partition))
}

/// The clique-versus-stable adjacency matrix of a split graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMatrix {
    pub matrix: BinaryMatrix,
    /// Clique vertices in row order.
    pub rows: Vec<usize>,
    /// Stable vertices in column order.
    pub cols: Vec<usize>,
}

/// Encodes a split graph as a matrix with clique vertices as rows and stable
/// vertices as columns, each side in nondecreasing degree order (ties by index).
pub fn split_to_matrix(g: &Graph, p: &SplitPartition) -> Result<SplitMatrix> {
    p.validate(g)?;
    let by_degree = |side: &[usize]| {
        let mut s = side.to_vec();
        s.sort_by_key(|&v| (g.degree(v), v));
        s
    };
    let rows = by_degree(&p.clique);
    let cols = by_degree(&p.stable);
    let matrix = BinaryMatrix::from_fn(rows.len(), cols.len(), |i, j| g.has_edge(rows[i], cols[j]));
    Ok(SplitMatrix { matrix, rows, cols })
}

/// Rebuilds a split graph from an inclusive matrix: `rows` become a clique,
/// `cols` a stable set, and cross edges follow the matrix.
pub fn matrix_to_graph(b: &BinaryMatrix, rows: &[usize], cols: &[usize]) -> Result<Graph> {
    if b.m() != rows.len() || b.n() != cols.len() {
        return Err(Error::Input(format!(
            "matrix is {}x{} but orders have {} rows and {} columns",
            b.m(),
            b.n(),
            rows.len(),
            cols.len()
        )));
    }
    let n = rows.len() + cols.len();
    let mut seen = vec![false; n];
    for &v in rows.iter().chain(cols) {
        if v >= n || seen[v] {
            return Err(Error::Input(format!("vertex {v} repeated or out of range in orders")));
        }
        seen[v] = true;
    }
    if !b.is_inclusive() {
        return Err(Error::Precondition("matrix is not inclusive".into()));
    }
    let mut h = Graph::empty(n);
    for (a, &u) in rows.iter().enumerate() {
        for &v in &rows[a + 1..] {
            h.set_edge(u, v, true);
        }
        for (j, &v) in cols.iter().enumerate() {
            if b.get(a, j) {
                h.set_edge(u, v, true);
            }
        }
    }
    Ok(h)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageDiffs {
    pub to_split: usize,
    pub to_halfgraph: usize,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub split: u64,
    pub matrix: u64,
    pub total: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub output_threshold: bool,
    pub bounds_hold: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orders {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// Matrices before and after the matrix stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageMatrices {
    pub encoded: BinaryMatrix,
    pub reduced: BinaryMatrix,
    pub repaired: BinaryMatrix,
}

/// Everything a repair run measured and checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepairReport {
    pub t: usize,
    pub stage_diffs: StageDiffs,
    pub bounds: Bounds,
    pub verified: Verdicts,
    pub orders: Orders,
    pub partition: SplitPartition,
    #[serde(skip)]
    pub matrices: Option<StageMatrices>,
}

impl RepairReport {
    pub fn is_verified(&self) -> bool {
        self.verified.output_threshold && self.verified.bounds_hold
    }
}

/// Repairs a t-dominating graph into a threshold graph within local difference `646t⁴`.
///
/// When `t` is `None` the smallest valid `t` is computed. Threshold inputs are
/// returned unchanged.
pub fn repair_graph(g: &Graph, t: Option<usize>, verify: Verify) -> Result<(Graph, RepairReport)> {
    let t = match t {
        Some(t) => {
            if !is_t_dominating(g, t) {
                return Err(Error::Input(format!("graph is not {t}-dominating")));
            }
            t
        }
        None => min_domination(g),
    };
    let stage = verify.stage();

    let (split, partition) = reduce_to_split(g, t, stage)?;
    let encoded = split_to_matrix(&split, &partition)?;
    let (output, matrices) = if is_threshold(g) {
        (g.clone(), None)
    } else {
        if t == 0 {
            return Err(Error::Input("non-threshold graph cannot be repaired with t = 0".into()));
        }
        if stage == Verify::Full {
            ensure_invariant!(
                encoded.matrix.is_t_restricted(t),
                "encoded split graph matrix is not {t}-restricted"
            );
        }
        let repaired = repair_matrix(&encoded.matrix, t, stage)?;
        let h = matrix_to_graph(&repaired.output, &encoded.rows, &encoded.cols)?;
        if stage == Verify::Full {
            ensure_invariant!(is_split_half_graph(&h), "rebuilt graph is not a split half-graph");
        }
        let matrices = StageMatrices {
            encoded: encoded.matrix.clone(),
            reduced: repaired.reduced,
            repaired: repaired.output,
        };
        (h, Some(matrices))
    };

    let stage_diffs = StageDiffs {
        to_split: local_difference(g, &split)?,
        to_halfgraph: local_difference(&split, &output)?,
        total: local_difference(g, &output)?,
    };
    let bounds = Bounds {
        split: split_bound(t),
        matrix: matrix_bound(t),
        total: total_bound(t),
    };
    let verified = Verdicts {
        output_threshold: is_threshold(&output),
        bounds_hold: stage_diffs.to_split as u64 <= bounds.split
            && stage_diffs.to_halfgraph as u64 <= bounds.matrix
            && stage_diffs.total as u64 <= bounds.total,
    };
    let report = RepairReport {
        t,
        stage_diffs,
        bounds,
        verified,
        orders: Orders { rows: encoded.rows, cols: encoded.cols },
        partition,
        matrices,
    };
    if verify != Verify::Off {
        ensure_invariant!(report.verified.output_threshold, "repaired graph is not threshold");
        ensure_invariant!(
            report.verified.bounds_hold,
            "repair exceeded its bounds: {:?}",
            report.stage_diffs
        );
    }
    Ok((output, report))
}

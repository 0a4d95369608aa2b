use std::collections::HashMap;

use serde::Serialize;

use super::{breadth, breadth_reduce, matrix_local_difference, region_decomposition, BinaryMatrix, RegionDecomposition};
use crate::error::{ensure_invariant, Error, Result};
use crate::Verify;

/// Counts of `Z` cells before and after a cell in its column and row.
///
/// `p_*` count along the column (posts), `q_*` along the row (beams).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ZCounts {
    pub p_minus: usize,
    pub p_plus: usize,
    pub q_minus: usize,
    pub q_plus: usize,
}

/// Posts (column slices of `Z`), beams (row slices of `Z`), and their multiplicities.
///
/// Two posts are parallel when they cover the same rows and carry the same
/// entries there; the multiplicity of a post counts its parallel class,
/// including itself. Beams are treated the same way with rows and columns
/// exchanged.
#[derive(Debug, Clone)]
pub struct PostBeamIndex {
    n: usize,
    regions: RegionDecomposition,
    counts: Vec<ZCounts>,
    post_multiplicity: Vec<usize>,
    beam_multiplicity: Vec<usize>,
}

impl PostBeamIndex {
    pub fn new(a: &BinaryMatrix) -> Self {
        let regions = region_decomposition(a);
        let (m, n) = (a.m(), a.n());
        let mut counts = vec![ZCounts::default(); m * n];

        for j in 0..n {
            let rows: Vec<usize> = (0..m).filter(|&i| regions.in_z(i, j)).collect();
            let len = rows.len();
            for (k, &i) in rows.iter().enumerate() {
                counts[i * n + j].p_minus = k;
                counts[i * n + j].p_plus = len - 1 - k;
            }
        }
        for i in 0..m {
            let cols: Vec<usize> = (0..n).filter(|&j| regions.in_z(i, j)).collect();
            let len = cols.len();
            for (k, &j) in cols.iter().enumerate() {
                counts[i * n + j].q_minus = k;
                counts[i * n + j].q_plus = len - 1 - k;
            }
        }

        let post_keys: Vec<Option<(Vec<usize>, Vec<bool>)>> = (0..n)
            .map(|j| {
                let rows: Vec<usize> = (0..m).filter(|&i| regions.in_z(i, j)).collect();
                (!rows.is_empty()).then(|| {
                    let bits = rows.iter().map(|&i| a.get(i, j)).collect();
                    (rows, bits)
                })
            })
            .collect();
        let beam_keys: Vec<Option<(Vec<usize>, Vec<bool>)>> = (0..m)
            .map(|i| {
                let cols: Vec<usize> = (0..n).filter(|&j| regions.in_z(i, j)).collect();
                (!cols.is_empty()).then(|| {
                    let bits = cols.iter().map(|&j| a.get(i, j)).collect();
                    (cols, bits)
                })
            })
            .collect();

        PostBeamIndex {
            n,
            counts,
            post_multiplicity: multiplicities(&post_keys),
            beam_multiplicity: multiplicities(&beam_keys),
            regions,
        }
    }

    pub fn regions(&self) -> &RegionDecomposition {
        &self.regions
    }

    /// Counts at a `Z` cell. Meaningless (all zero) outside `Z`.
    pub fn counts(&self, i: usize, j: usize) -> ZCounts {
        self.counts[i * self.n + j]
    }

    /// Multiplicity of the post in column `j`, or 0 when the column misses `Z`.
    pub fn post_multiplicity(&self, j: usize) -> usize {
        self.post_multiplicity[j]
    }

    /// Multiplicity of the beam in row `i`, or 0 when the row misses `Z`.
    pub fn beam_multiplicity(&self, i: usize) -> usize {
        self.beam_multiplicity[i]
    }

    /// `Z` cells where `min(p⁻, q⁺) >= w` or `min(q⁻, p⁺) >= w`.
    ///
    /// Empty whenever the matrix has breadth at most `w`.
    pub fn corner_violations(&self, w: usize) -> Vec<(usize, usize)> {
        self.regions
            .cells_in(super::Region::Z)
            .into_iter()
            .filter(|&(i, j)| {
                let c = self.counts(i, j);
                c.p_minus.min(c.q_plus) >= w || c.q_minus.min(c.p_plus) >= w
            })
            .collect()
    }

    /// Every rule that fires at `Z` cell `(i, j)` for width `w`, in rule order.
    pub fn fired_rules(&self, i: usize, j: usize, w: usize) -> Vec<RepairRule> {
        let c = self.counts(i, j);
        let post_short = c.p_minus < w && c.p_plus < w;
        let beam_short = c.q_minus < w && c.q_plus < w;
        let post_common = self.post_multiplicity(j) >= 2 * w;
        let beam_common = self.beam_multiplicity(i) >= 2 * w;
        [
            (c.p_minus >= w && c.q_minus >= w, RepairRule::DeepBehind),
            (c.p_plus >= w && c.q_plus >= w, RepairRule::DeepAhead),
            (post_short && post_common, RepairRule::KeepPost),
            (beam_short && beam_common, RepairRule::KeepBeam),
            (post_short && !post_common, RepairRule::ClearPost),
            (beam_short && !beam_common, RepairRule::ClearBeam),
        ]
        .into_iter()
        .filter_map(|(fires, rule)| fires.then_some(rule))
        .collect()
    }
}

fn multiplicities<K: std::hash::Hash + Eq>(keys: &[Option<K>]) -> Vec<usize> {
    let mut classes: HashMap<&K, usize> = HashMap::new();
    for key in keys.iter().flatten() {
        *classes.entry(key).or_insert(0) += 1;
    }
    keys.iter()
        .map(|k| k.as_ref().map_or(0, |k| classes[k]))
        .collect()
}

/// The six rules deciding a `Z` cell of the repaired matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RepairRule {
    /// At least `w` `Z` cells above and to the left: set to 1.
    DeepBehind,
    /// At least `w` `Z` cells below and to the right: set to 0.
    DeepAhead,
    /// Short post with multiplicity at least `2w`: keep.
    KeepPost,
    /// Short beam with multiplicity at least `2w`: keep.
    KeepBeam,
    /// Short post with multiplicity below `2w`: set to 0.
    ClearPost,
    /// Short beam with multiplicity below `2w`: set to 0.
    ClearBeam,
}

impl RepairRule {
    fn value(self, original: bool) -> bool {
        match self {
            RepairRule::DeepBehind => true,
            RepairRule::DeepAhead | RepairRule::ClearPost | RepairRule::ClearBeam => false,
            RepairRule::KeepPost | RepairRule::KeepBeam => original,
        }
    }
}

/// `2(t + w)w³`, saturating.
pub fn monotone_repair_bound(t: usize, w: usize) -> u64 {
    let (t, w) = (t as u64, w as u64);
    2u64.saturating_mul(t.saturating_add(w))
        .saturating_mul(w.saturating_pow(3))
}

/// Repairs a t-restricted matrix of breadth at most `w` into an inclusive
/// matrix, changing at most `2(t + w)w³` entries in any row or column.
///
/// Requires `2w >= t + 1`. Cells outside `Z` are copied. The rule set at every
/// `Z` cell is checked for consistency: a single rule fires, or exactly the two
/// clearing rules fire together.
pub fn monotone_repair(a: &BinaryMatrix, t: usize, w: usize, verify: Verify) -> Result<BinaryMatrix> {
    if w == 0 {
        return Err(Error::Input("repair width w must be positive".into()));
    }
    if 2 * w < t + 1 {
        return Err(Error::Input(format!("need 2w >= t + 1, got t = {t}, w = {w}")));
    }
    if !a.is_t_restricted(t) {
        return Err(Error::Input(format!("matrix is not {t}-restricted")));
    }
    let br = breadth(a);
    if br > w {
        return Err(Error::Input(format!("matrix breadth {br} exceeds w = {w}")));
    }

    let index = PostBeamIndex::new(a);
    if let Some(&(i, j)) = index.corner_violations(w).first() {
        return Err(Error::Invariant(format!(
            "cell ({i}, {j}) has w Z-cells on both sides of a diagonal"
        )));
    }

    let mut b = a.clone();
    for (i, j) in index.regions().cells_in(super::Region::Z) {
        let rules = index.fired_rules(i, j, w);
        let consistent = rules.len() == 1
            || rules == [RepairRule::ClearPost, RepairRule::ClearBeam];
        ensure_invariant!(consistent, "rules {rules:?} fire together at ({i}, {j})");
        b.set(i, j, rules[0].value(a.get(i, j)));
    }

    if verify != Verify::Off {
        ensure_invariant!(b.is_inclusive(), "repaired matrix is not inclusive");
        let diff = matrix_local_difference(a, &b)? as u64;
        let bound = monotone_repair_bound(t, w);
        ensure_invariant!(diff <= bound, "repair changed {diff} entries in a line, bound {bound}");
    }
    Ok(b)
}

/// Both stages of [`repair_matrix`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRepair {
    /// Output of breadth reduction (the input itself when `t = 0`).
    pub reduced: BinaryMatrix,
    /// The inclusive result.
    pub output: BinaryMatrix,
}

/// Repairs a t-restricted matrix into an inclusive one by breadth reduction
/// followed by [`monotone_repair`] with `w = 4t`.
///
/// The result is within `640t⁴ + 4t <= 644t⁴` of the input. A 0-restricted
/// matrix is already monotone and is returned unchanged.
pub fn repair_matrix(a: &BinaryMatrix, t: usize, verify: Verify) -> Result<MatrixRepair> {
    if !a.is_t_restricted(t) {
        return Err(Error::Input(format!("matrix is not {t}-restricted")));
    }
    if t == 0 {
        ensure_invariant!(a.is_monotone(), "0-restricted matrix is not monotone");
        return Ok(MatrixRepair { reduced: a.clone(), output: a.clone() });
    }
    let stage = verify.stage();
    let reduced = breadth_reduce(a, t, stage)?;
    let output = monotone_repair(&reduced, t, 4 * t, stage)?;
    if verify != Verify::Off {
        ensure_invariant!(output.is_inclusive(), "repaired matrix is not inclusive");
        let diff = matrix_local_difference(a, &output)? as u64;
        let proof_bound = monotone_repair_bound(t, 4 * t).saturating_add(4 * t as u64);
        ensure_invariant!(
            diff <= proof_bound,
            "matrix repair changed {diff} entries in a line, bound {proof_bound}"
        );
    }
    Ok(MatrixRepair { reduced, output })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&str]) -> BinaryMatrix {
        BinaryMatrix::from_strs(rows).unwrap()
    }

    #[test]
    fn counts_and_multiplicities_on_small_example() {
        let a = mat(&["10", "01"]);
        let idx = PostBeamIndex::new(&a);
        assert_eq!(idx.counts(0, 0), ZCounts { p_minus: 0, p_plus: 1, q_minus: 0, q_plus: 1 });
        assert_eq!(idx.counts(0, 1), ZCounts { p_minus: 0, p_plus: 0, q_minus: 1, q_plus: 0 });
        assert_eq!(idx.counts(1, 0), ZCounts { p_minus: 1, p_plus: 0, q_minus: 0, q_plus: 0 });
        // column 0 post covers rows {0,1} with bits 10; column 1 post covers row {0}.
        assert_eq!(idx.post_multiplicity(0), 1);
        assert_eq!(idx.post_multiplicity(1), 1);
        assert_eq!(idx.beam_multiplicity(0), 1);
        assert_eq!(idx.beam_multiplicity(1), 1);
    }

    #[test]
    fn six_rule_trace_on_small_example() {
        let a = mat(&["10", "01"]);
        let idx = PostBeamIndex::new(&a);
        assert_eq!(idx.fired_rules(0, 0, 1), vec![RepairRule::DeepAhead]);
        assert_eq!(idx.fired_rules(0, 1, 1), vec![RepairRule::ClearPost]);
        assert_eq!(idx.fired_rules(1, 0, 1), vec![RepairRule::ClearBeam]);
        let b = monotone_repair(&a, 1, 1, Verify::Full).unwrap();
        assert_eq!(b, mat(&["00", "01"]));
    }

    #[test]
    fn parallel_posts_counted() {
        // Columns 1 and 2 have identical posts.
        let a = mat(&["0110", "1001", "1111"]);
        let idx = PostBeamIndex::new(&a);
        assert_eq!(idx.post_multiplicity(1), idx.post_multiplicity(2));
        assert!(idx.post_multiplicity(1) >= 2);
    }

    #[test]
    fn z_free_input_is_copied() {
        let a = mat(&["0011", "0111"]);
        assert_eq!(monotone_repair(&a, 0, 1, Verify::Full).unwrap(), a);
    }

    #[test]
    fn precondition_errors() {
        let wide = mat(&["001", "010", "100"]);
        // breadth 2 > w = 1
        assert!(matches!(monotone_repair(&wide, 1, 1, Verify::Full), Err(Error::Input(_))));
        let a = mat(&["01", "10"]);
        // 2w < t + 1
        assert!(matches!(monotone_repair(&a, 5, 2, Verify::Full), Err(Error::Input(_))));
        assert!(matches!(monotone_repair(&a, 1, 0, Verify::Full), Err(Error::Input(_))));
        assert!(matches!(repair_matrix(&a, 0, Verify::Full), Err(Error::Input(_))));
    }

    #[test]
    fn composed_repair_examples() {
        let mono = mat(&["0011", "0111"]);
        assert_eq!(repair_matrix(&mono, 0, Verify::Full).unwrap().output, mono);

        let a = mat(&["10", "01"]);
        let r = repair_matrix(&a, 1, Verify::Full).unwrap();
        assert!(r.output.is_inclusive());
        assert!(matrix_local_difference(&a, &r.output).unwrap() <= 644);

        let row = mat(&["11110000"]);
        let r = repair_matrix(&row, 1, Verify::Full).unwrap();
        assert!(r.output.is_inclusive());
        assert!(matrix_local_difference(&row, &r.output).unwrap() <= 644);
    }

    #[test]
    fn bound_formula() {
        assert_eq!(monotone_repair_bound(1, 4), 640);
        assert_eq!(monotone_repair_bound(2, 8), 2 * 10 * 512);
    }
}

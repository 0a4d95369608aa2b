use super::{breadth, matrix_local_difference, region_decomposition, BinaryMatrix};
use crate::error::{ensure_invariant, Error, Result};
use crate::Verify;

/// Reduces a t-restricted matrix to breadth at most `4t` while staying
/// t-restricted, changing at most `4t` entries per row and per column.
///
/// Only `Z` cells are touched. A `Z` cell becomes 1 when no cell weakly
/// below-right of it has `2t` zeros further down its column or further right in
/// its row; otherwise it becomes 0 when no cell weakly above-left of it has
/// `2t` ones further up its column or further left in its row; otherwise it
/// keeps its value.
pub fn breadth_reduce(a: &BinaryMatrix, t: usize, verify: Verify) -> Result<BinaryMatrix> {
    if t == 0 {
        return Err(Error::Input("breadth reduction needs t >= 1".into()));
    }
    if !a.is_t_restricted(t) {
        return Err(Error::Input(format!("matrix is not {t}-restricted")));
    }
    let (m, n) = (a.m(), a.n());
    if m == 0 || n == 0 {
        return Ok(a.clone());
    }
    let need = 2 * t;
    let idx = |i: usize, j: usize| i * n + j;

    // heavy_one[i,j]: at least 2t ones above in the column or to the left in the row.
    let mut heavy_one = vec![false; m * n];
    // heavy_zero[i,j]: at least 2t zeros below in the column or to the right in the row.
    let mut heavy_zero = vec![false; m * n];
    for j in 0..n {
        let mut ones = 0;
        for i in 0..m {
            heavy_one[idx(i, j)] |= ones >= need;
            ones += usize::from(a.get(i, j));
        }
        let mut zeros = 0;
        for i in (0..m).rev() {
            heavy_zero[idx(i, j)] |= zeros >= need;
            zeros += usize::from(!a.get(i, j));
        }
    }
    for i in 0..m {
        let mut ones = 0;
        for j in 0..n {
            heavy_one[idx(i, j)] |= ones >= need;
            ones += usize::from(a.get(i, j));
        }
        let mut zeros = 0;
        for j in (0..n).rev() {
            heavy_zero[idx(i, j)] |= zeros >= need;
            zeros += usize::from(!a.get(i, j));
        }
    }

    // zero_ahead[i,j]: some heavy_zero cell (i0, j0) with i0 >= i and j0 >= j.
    let mut zero_ahead = heavy_zero;
    for i in (0..m).rev() {
        for j in (0..n).rev() {
            let below = i + 1 < m && zero_ahead[idx(i + 1, j)];
            let right = j + 1 < n && zero_ahead[idx(i, j + 1)];
            zero_ahead[idx(i, j)] |= below || right;
        }
    }
    // one_behind[i,j]: some heavy_one cell (i1, j1) with i1 <= i and j1 <= j.
    let mut one_behind = heavy_one;
    for i in 0..m {
        for j in 0..n {
            let above = i > 0 && one_behind[idx(i - 1, j)];
            let left = j > 0 && one_behind[idx(i, j - 1)];
            one_behind[idx(i, j)] |= above || left;
        }
    }

    let regions = region_decomposition(a);
    let b = BinaryMatrix::from_fn(m, n, |i, j| {
        if !regions.in_z(i, j) {
            a.get(i, j)
        } else if !zero_ahead[idx(i, j)] {
            true
        } else if !one_behind[idx(i, j)] {
            false
        } else {
            a.get(i, j)
        }
    });

    if verify != Verify::Off {
        ensure_invariant!(b.is_t_restricted(t), "breadth reduction lost {t}-restriction");
        let br = breadth(&b);
        ensure_invariant!(br <= 4 * t, "breadth {br} after reduction exceeds 4t = {}", 4 * t);
        let diff = matrix_local_difference(a, &b)?;
        ensure_invariant!(diff <= 4 * t, "breadth reduction changed {diff} > 4t entries in a line");
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monotone_input_is_unchanged() {
        let a = BinaryMatrix::from_strs(&["0011", "0111", "1111"]).unwrap();
        assert_eq!(breadth_reduce(&a, 1, Verify::Full).unwrap(), a);
    }

    #[test]
    fn small_example_meets_postconditions() {
        let a = BinaryMatrix::from_strs(&["10", "01"]).unwrap();
        let b = breadth_reduce(&a, 1, Verify::Full).unwrap();
        assert!(b.is_t_restricted(1));
        assert!(breadth(&b) <= 4);
        assert!(matrix_local_difference(&a, &b).unwrap() <= 4);
    }

    #[test]
    fn rejects_bad_input() {
        let a = BinaryMatrix::from_strs(&["1100", "0011"]).unwrap();
        assert!(matches!(breadth_reduce(&a, 1, Verify::Full), Err(Error::Input(_))));
        assert!(matches!(breadth_reduce(&a, 0, Verify::Full), Err(Error::Input(_))));
    }

    #[test]
    fn wide_low_breadth_matrix_keeps_shape() {
        // A single far-from-monotone row surrounded by padding rows.
        let a = BinaryMatrix::from_strs(&["00000000", "11110000", "11111111"]).unwrap();
        let b = breadth_reduce(&a, 1, Verify::Full).unwrap();
        assert_eq!(b.m(), 3);
        assert_eq!(b.n(), 8);
    }
}

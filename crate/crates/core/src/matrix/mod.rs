//! 0/1 matrices and their repair into inclusive matrices.
//!
//! Indices are 0-based: entry `(i, j)` is row `i`, column `j`. "Up" means
//! towards larger indices, so a monotone matrix has its ones in the
//! bottom-right staircase.

mod reduce;
mod region;
mod repair;

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub use reduce::breadth_reduce;
pub use region::{breadth, region_decomposition, Region, RegionDecomposition};
pub use repair::{
    monotone_repair, monotone_repair_bound, repair_matrix, MatrixRepair, PostBeamIndex, RepairRule, ZCounts,
};

/// An immutable `m × n` matrix of bits, stored both by row and by column.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: Vec<FixedBitSet>,
    cols: Vec<FixedBitSet>,
}

impl BinaryMatrix {
    pub fn zeros(m: usize, n: usize) -> Self {
        BinaryMatrix {
            rows: vec![FixedBitSet::with_capacity(n); m],
            cols: vec![FixedBitSet::with_capacity(m); n],
        }
    }

    pub fn from_fn(m: usize, n: usize, mut entry: impl FnMut(usize, usize) -> bool) -> Self {
        let mut a = BinaryMatrix::zeros(m, n);
        for i in 0..m {
            for j in 0..n {
                if entry(i, j) {
                    a.set(i, j, true);
                }
            }
        }
        a
    }

    /// Builds a matrix from row strings over `{0, 1}`, e.g. `["10", "01"]`.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        let mut a = BinaryMatrix::zeros(m, n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Input(format!("row {i} has length {}, expected {n}", row.len())));
            }
            for (j, c) in row.bytes().enumerate() {
                match c {
                    b'0' => {}
                    b'1' => a.set(i, j, true),
                    _ => return Err(Error::Input(format!("bad matrix character {:?}", c as char))),
                }
            }
        }
        Ok(a)
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, bit: bool) {
        self.rows[i].set(j, bit);
        self.cols[j].set(i, bit);
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.cols.len()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    /// Support of row `i` as a set of column indices.
    pub fn row(&self, i: usize) -> &FixedBitSet {
        &self.rows[i]
    }

    /// Support of column `j` as a set of row indices.
    pub fn col(&self, j: usize) -> &FixedBitSet {
        &self.cols[j]
    }

    /// Positions holding a one, in row-major order.
    pub fn support(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.ones().map(move |j| (i, j)))
            .collect()
    }

    pub fn transpose(&self) -> BinaryMatrix {
        BinaryMatrix {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
        }
    }

    /// Reorders rows and columns: output row `r` is input row `row_perm[r]`.
    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> BinaryMatrix {
        BinaryMatrix::from_fn(self.m(), self.n(), |i, j| self.get(row_perm[i], col_perm[j]))
    }

    /// Row strings over `{0, 1}`.
    pub fn to_strings(&self) -> Vec<String> {
        (0..self.m())
            .map(|i| (0..self.n()).map(|j| if self.get(i, j) { '1' } else { '0' }).collect())
            .collect()
    }

    /// True when the support is up-closed.
    pub fn is_monotone(&self) -> bool {
        // Up-closed iff each one has a one directly below and directly right of it.
        (0..self.m()).all(|i| {
            self.rows[i].ones().all(|j| {
                (i + 1 >= self.m() || self.get(i + 1, j)) && (j + 1 >= self.n() || self.get(i, j + 1))
            })
        })
    }

    /// The least `t` for which the matrix is t-restricted.
    pub fn min_restriction(&self) -> usize {
        fn worst(lines: &[FixedBitSet]) -> usize {
            let mut best = 0;
            for (a, early) in lines.iter().enumerate() {
                for late in &lines[a + 1..] {
                    best = best.max(early.difference_count(late));
                }
            }
            best
        }
        worst(&self.rows).max(worst(&self.cols))
    }

    /// For every ordered pair of rows (and of columns) the earlier line has at
    /// most `t` ones facing zeros in the later line.
    pub fn is_t_restricted(&self, t: usize) -> bool {
        fn ok(lines: &[FixedBitSet], t: usize) -> bool {
            lines
                .iter()
                .enumerate()
                .all(|(a, early)| lines[a + 1..].iter().all(|late| early.difference_count(late) <= t))
        }
        ok(&self.rows, t) && ok(&self.cols, t)
    }

    /// True when the row supports are pairwise nested.
    pub fn is_inclusive(&self) -> bool {
        let order = sorted_by_support(&self.rows);
        order
            .windows(2)
            .all(|w| self.rows[w[0]].is_subset(&self.rows[w[1]]))
    }

    /// Sorts rows and columns by ascending support size (ties by index).
    ///
    /// Returns the reordered matrix with `row_perm` and `col_perm`, where output
    /// row `r` is input row `row_perm[r]`. Requires an inclusive matrix.
    pub fn sort_to_monotone(&self) -> Result<(BinaryMatrix, Vec<usize>, Vec<usize>)> {
        if !self.is_inclusive() {
            return Err(Error::Precondition("matrix is not inclusive".into()));
        }
        let row_perm = sorted_by_support(&self.rows);
        let col_perm = sorted_by_support(&self.cols);
        let sorted = self.permute(&row_perm, &col_perm);
        if !sorted.is_monotone() {
            return Err(Error::Invariant("sorted inclusive matrix is not monotone".into()));
        }
        Ok((sorted, row_perm, col_perm))
    }
}

fn sorted_by_support(lines: &[FixedBitSet]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..lines.len()).collect();
    order.sort_by_key(|&k| (lines[k].count_ones(..), k));
    order
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix({}x{}", self.m(), self.n())?;
        for row in self.to_strings() {
            write!(f, " {row}")?;
        }
        write!(f, ")")
    }
}

/// Maximum, over all rows and all columns, of the number of positions where `a` and `b` differ.
pub fn matrix_local_difference(a: &BinaryMatrix, b: &BinaryMatrix) -> Result<usize> {
    if a.m() != b.m() || a.n() != b.n() {
        return Err(Error::Input(format!(
            "dimension mismatch: {}x{} vs {}x{}",
            a.m(),
            a.n(),
            b.m(),
            b.n()
        )));
    }
    let rows = a.rows.iter().zip(&b.rows).map(|(x, y)| x.symmetric_difference_count(y));
    let cols = a.cols.iter().zip(&b.cols).map(|(x, y)| x.symmetric_difference_count(y));
    Ok(rows.chain(cols).max().unwrap_or(0))
}

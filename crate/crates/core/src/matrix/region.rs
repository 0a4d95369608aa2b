use std::collections::HashMap;

use super::BinaryMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    /// Inside the maximal down-closed set of zeros.
    X,
    /// Inside the maximal up-closed set of ones.
    Y,
    Z,
}

/// The partition of `[m] × [n]` into the regions `X`, `Y` and `Z` of a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionDecomposition {
    m: usize,
    n: usize,
    cells: Vec<Region>,
}

impl RegionDecomposition {
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Region {
        self.cells[i * self.n + j]
    }

    #[inline]
    pub fn in_z(&self, i: usize, j: usize) -> bool {
        self.get(i, j) == Region::Z
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells_in(&self, region: Region) -> Vec<(usize, usize)> {
        (0..self.m)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.get(i, j) == region)
            .collect()
    }

    pub fn z_count(&self) -> usize {
        self.cells.iter().filter(|&&r| r == Region::Z).count()
    }

    /// Number of `Z` cells on each diagonal `j - i = c`, keyed by `c`.
    pub fn diagonal_counts(&self) -> HashMap<isize, usize> {
        let mut counts = HashMap::new();
        for i in 0..self.m {
            for j in 0..self.n {
                if self.in_z(i, j) {
                    *counts.entry(j as isize - i as isize).or_insert(0) += 1;
                }
            }
        }
        counts
    }
}

/// Computes `X` by a prefix pass from the top-left corner and `Y` by a suffix
/// pass from the bottom-right corner.
pub fn region_decomposition(a: &BinaryMatrix) -> RegionDecomposition {
    let (m, n) = (a.m(), a.n());
    let mut cells = vec![Region::Z; m * n];
    let mut in_x = vec![false; m * n];
    for i in 0..m {
        for j in 0..n {
            let up = i == 0 || in_x[(i - 1) * n + j];
            let left = j == 0 || in_x[i * n + j - 1];
            in_x[i * n + j] = !a.get(i, j) && up && left;
        }
    }
    let mut in_y = vec![false; m * n];
    for i in (0..m).rev() {
        for j in (0..n).rev() {
            let down = i + 1 == m || in_y[(i + 1) * n + j];
            let right = j + 1 == n || in_y[i * n + j + 1];
            in_y[i * n + j] = a.get(i, j) && down && right;
        }
    }
    for k in 0..m * n {
        if in_x[k] {
            cells[k] = Region::X;
        } else if in_y[k] {
            cells[k] = Region::Y;
        }
    }
    RegionDecomposition { m, n, cells }
}

/// Largest number of `Z` cells on a single diagonal.
pub fn breadth(a: &BinaryMatrix) -> usize {
    region_decomposition(a)
        .diagonal_counts()
        .into_values()
        .max()
        .unwrap_or(0)
}

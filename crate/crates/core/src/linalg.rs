//! Exact linear algebra over `Q(i)`: fraction-free rank and determinant for
//! small dense matrices, and an incremental sparse echelon form used by the
//! truncated local rings.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Rank by Bareiss fraction-free elimination. Every intermediate entry is a
/// minor of the input, and the division at each step is exact.
pub fn rank(matrix: &[Vec<Scalar>]) -> usize {
    let mut a: Vec<Vec<Scalar>> = matrix.to_vec();
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = Scalar::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let num = &(&a[r][c] * &a[i][j]) - &(&a[i][c] * &a[r][j]);
                a[i][j] = num.checked_div(&prev).expect("Bareiss pivot is nonzero");
            }
            a[i][c] = Scalar::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Determinant by Bareiss elimination.
pub fn det(matrix: &[Vec<Scalar>]) -> Scalar {
    let n = matrix.len();
    if n == 0 {
        return Scalar::one();
    }
    let mut a: Vec<Vec<Scalar>> = matrix.to_vec();
    let mut prev = Scalar::one();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Scalar::zero();
        };
        if p != k {
            a.swap(k, p);
            negate = !negate;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.checked_div(&prev).expect("Bareiss pivot is nonzero");
            }
            a[i][k] = Scalar::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Indices of the rows kept by scanning top to bottom and retaining each
/// row that is independent of those already kept.
pub fn greedy_independent_rows(matrix: &[Vec<Scalar>]) -> Vec<usize> {
    let mut space = RowSpace::new();
    let mut kept = Vec::new();
    for (i, row) in matrix.iter().enumerate() {
        let sparse = row
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, c.clone()))
            .collect();
        if space.insert(sparse).is_some() {
            kept.push(i);
        }
    }
    kept
}

pub type SparseRow = BTreeMap<usize, Scalar>;

/// Row echelon basis of a subspace of `Q(i)^columns`, kept with distinct
/// leading (smallest) columns and leading coefficient one.
#[derive(Debug, Clone, Default)]
pub struct RowSpace {
    pivots: BTreeMap<usize, Vec<(usize, Scalar)>>,
}

impl RowSpace {
    pub fn new() -> Self {
        RowSpace::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Leading columns of the basis rows, ascending.
    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Cancels leading entries against basis rows until the leading column
    /// is not a pivot. The result is zero iff the row lies in the span.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let Some((&col, lead)) = row.iter().next() else {
                return row;
            };
            let Some(basis) = self.pivots.get(&col) else {
                return row;
            };
            let factor = lead.clone();
            for (j, v) in basis {
                let delta = &factor * v;
                let remove = match row.get_mut(j) {
                    Some(slot) => {
                        *slot -= &delta;
                        slot.is_zero()
                    }
                    None => {
                        row.insert(*j, -delta);
                        false
                    }
                };
                if remove {
                    row.remove(j);
                }
            }
        }
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Adds a row; returns its new pivot column when it enlarges the span.
    pub fn insert(&mut self, row: SparseRow) -> Option<usize> {
        let reduced = self.reduce(row);
        let (&col, lead) = reduced.iter().next()?;
        let inv = lead.inv().expect("leading entry is nonzero");
        let normalized = reduced.iter().map(|(j, v)| (*j, v * &inv)).collect();
        self.pivots.insert(col, normalized);
        Some(col)
    }
}

//! Square supermatrices `[[p, q], [r, s]]` over a supercommutative ring of
//! polynomials, with inverse and Berezinian.
//!
//! A table with no even variables and `k` odd ones models the Grassmann
//! algebra `Λ[θ₁…θ_k]`; that is the setting in which invertibility is
//! always decidable.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::SuperPolynomial;
use crate::vars::{same_table, Parity, VarTable};

/// A dense matrix of polynomials over one table.
pub type PolyMatrix = Vec<Vec<SuperPolynomial>>;

/// An `(m+n)×(m+n)` supermatrix with the standard parity layout: even
/// entries in the diagonal blocks, odd entries off the diagonal.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperMatrix {
    vars: Arc<VarTable>,
    m: usize,
    n: usize,
    entries: PolyMatrix,
}

fn expected_parity(m: usize, row: usize, col: usize) -> Parity {
    if (row < m) == (col < m) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

impl SuperMatrix {
    pub fn new(vars: &Arc<VarTable>, m: usize, n: usize, entries: PolyMatrix) -> Result<Self> {
        let size = m + n;
        if entries.len() != size {
            return Err(Error::DimensionMismatch {
                expected: size,
                found: entries.len(),
            });
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != size {
                return Err(Error::DimensionMismatch {
                    expected: size,
                    found: row.len(),
                });
            }
            for (j, e) in row.iter().enumerate() {
                if !same_table(e.vars(), vars) {
                    return Err(Error::MixedTables);
                }
                if !e.is_zero() && e.parity() != Some(expected_parity(m, i, j)) {
                    return Err(Error::ParityLayout { row: i, col: j });
                }
            }
        }
        Ok(SuperMatrix {
            vars: Arc::clone(vars),
            m,
            n,
            entries,
        })
    }

    /// Assembles `[[p, q], [r, s]]`.
    pub fn from_blocks(
        vars: &Arc<VarTable>,
        p: PolyMatrix,
        q: PolyMatrix,
        r: PolyMatrix,
        s: PolyMatrix,
    ) -> Result<Self> {
        let m = p.len();
        let n = s.len();
        let shape = |b: &PolyMatrix, rows: usize, cols: usize| -> Result<()> {
            if b.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: b.len(),
                });
            }
            for row in b {
                if row.len() != cols {
                    return Err(Error::DimensionMismatch {
                        expected: cols,
                        found: row.len(),
                    });
                }
            }
            Ok(())
        };
        shape(&p, m, m)?;
        shape(&q, m, n)?;
        shape(&r, n, m)?;
        shape(&s, n, n)?;
        let mut entries = Vec::with_capacity(m + n);
        for (pi, qi) in p.into_iter().zip(q) {
            entries.push(pi.into_iter().chain(qi).collect());
        }
        for (ri, si) in r.into_iter().zip(s) {
            entries.push(ri.into_iter().chain(si).collect());
        }
        SuperMatrix::new(vars, m, n, entries)
    }

    pub fn identity(vars: &Arc<VarTable>, m: usize, n: usize) -> Self {
        SuperMatrix {
            vars: Arc::clone(vars),
            m,
            n,
            entries: identity_matrix(vars, m + n),
        }
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    /// `(m, n)`.
    pub fn dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn entries(&self) -> &PolyMatrix {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &SuperPolynomial {
        &self.entries[row][col]
    }

    fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> PolyMatrix {
        self.entries[rows]
            .iter()
            .map(|row| row[cols.clone()].to_vec())
            .collect()
    }

    pub fn p(&self) -> PolyMatrix {
        self.block(0..self.m, 0..self.m)
    }

    pub fn q(&self) -> PolyMatrix {
        self.block(0..self.m, self.m..self.m + self.n)
    }

    pub fn r(&self) -> PolyMatrix {
        self.block(self.m..self.m + self.n, 0..self.m)
    }

    pub fn s(&self) -> PolyMatrix {
        self.block(self.m..self.m + self.n, self.m..self.m + self.n)
    }

    pub fn matmul(&self, other: &SuperMatrix) -> Result<SuperMatrix> {
        if (self.m, self.n) != (other.m, other.n) {
            return Err(Error::DimensionMismatch {
                expected: self.m + self.n,
                found: other.m + other.n,
            });
        }
        if !same_table(&self.vars, &other.vars) {
            return Err(Error::MixedTables);
        }
        Ok(SuperMatrix {
            vars: Arc::clone(&self.vars),
            m: self.m,
            n: self.n,
            entries: mat_mul(&self.vars, &self.entries, &other.entries),
        })
    }

    /// Every entry with the odd variables set to zero.
    pub fn body(&self) -> SuperMatrix {
        SuperMatrix {
            vars: Arc::clone(&self.vars),
            m: self.m,
            n: self.n,
            entries: map_entries(&self.entries, SuperPolynomial::body),
        }
    }

    /// A supermatrix is invertible iff the bodies of `p` and `s` are.
    pub fn is_invertible(&self) -> Result<bool> {
        Ok(body_unit(&self.vars, &self.p())? && body_unit(&self.vars, &self.s())?)
    }

    pub fn inverse(&self) -> Result<SuperMatrix> {
        if !self.is_invertible()? {
            return Err(Error::NotInvertible);
        }
        Ok(SuperMatrix {
            vars: Arc::clone(&self.vars),
            m: self.m,
            n: self.n,
            entries: invert(&self.vars, &self.entries)?,
        })
    }

    /// `Ber = det(p − q s⁻¹ r)·det(s⁻¹)`; requires `s` invertible.
    pub fn berezinian(&self) -> Result<SuperPolynomial> {
        let vars = &self.vars;
        if self.n == 0 {
            return Ok(det(vars, &self.p()));
        }
        if !body_unit(vars, &self.s())? {
            return Err(Error::NotInvertible);
        }
        let s_inv = invert(vars, &self.s())?;
        let det_s_inv = det(vars, &s_inv);
        if self.m == 0 {
            return Ok(det_s_inv);
        }
        let correction = mat_mul(vars, &mat_mul(vars, &self.q(), &s_inv), &self.r());
        let schur = mat_sub(&self.p(), &correction);
        Ok(&det(vars, &schur) * &det_s_inv)
    }
}

impl fmt::Debug for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SuperMatrix {}|{} [", self.m, self.n)?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn identity_matrix(vars: &Arc<VarTable>, size: usize) -> PolyMatrix {
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if i == j {
                        SuperPolynomial::one(vars)
                    } else {
                        SuperPolynomial::zero(vars)
                    }
                })
                .collect()
        })
        .collect()
}

fn map_entries(a: &PolyMatrix, f: impl Fn(&SuperPolynomial) -> SuperPolynomial) -> PolyMatrix {
    a.iter().map(|row| row.iter().map(&f).collect()).collect()
}

/// Ordinary matrix product; entries multiply with their super signs.
pub fn mat_mul(vars: &Arc<VarTable>, a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = SuperPolynomial::zero(vars);
                    for k in 0..inner {
                        if row[k].is_zero() || b[k][j].is_zero() {
                            continue;
                        }
                        acc = &acc + &(&row[k] * &b[k][j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn mat_sub(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
        .collect()
}

/// Determinant of a square matrix with even (hence mutually commuting)
/// entries, by cofactor expansion along rows with memoized minors.
pub fn det(vars: &Arc<VarTable>, a: &PolyMatrix) -> SuperPolynomial {
    let n = a.len();
    debug_assert!(n <= 63, "cofactor expansion indexes columns by a u64 mask");
    let mut memo: HashMap<u64, SuperPolynomial> = HashMap::new();
    det_rec(vars, a, 0, (1u64 << n) - 1, &mut memo)
}

fn det_rec(
    vars: &Arc<VarTable>,
    a: &PolyMatrix,
    row: usize,
    cols: u64,
    memo: &mut HashMap<u64, SuperPolynomial>,
) -> SuperPolynomial {
    if cols == 0 {
        return SuperPolynomial::one(vars);
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = SuperPolynomial::zero(vars);
    let mut pos = 0;
    for j in 0..64 {
        if cols >> j & 1 == 0 {
            continue;
        }
        let entry = &a[row][j];
        if !entry.is_zero() {
            let minor = det_rec(vars, a, row + 1, cols & !(1u64 << j), memo);
            let term = entry * &minor;
            acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        pos += 1;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Adjugate of a square matrix with even entries: `A·adj(A) = det(A)·I`.
pub fn adjugate(vars: &Arc<VarTable>, a: &PolyMatrix) -> PolyMatrix {
    let n = a.len();
    let mut adj = vec![vec![SuperPolynomial::zero(vars); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: PolyMatrix = a
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != i)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, e)| e.clone())
                        .collect()
                })
                .collect();
            let d = det(vars, &minor);
            adj[j][i] = if (i + j) % 2 == 0 { d } else { -&d };
        }
    }
    adj
}

/// Whether the body of a square even block is invertible.
fn body_unit(vars: &Arc<VarTable>, block: &PolyMatrix) -> Result<bool> {
    let d = det(vars, &map_entries(block, SuperPolynomial::body));
    if d.is_zero() {
        return Ok(false);
    }
    if !d.is_constant() {
        return Err(Error::UndecidableUnits(format!(
            "body determinant {d} is not a constant"
        )));
    }
    Ok(true)
}

/// Inverse of a square matrix whose body is invertible: invert the body
/// through its adjugate, then correct by the Neumann series of the
/// nilpotent remainder. Every term of the remainder carries an odd
/// variable, so the series stops after at most `n_odd + 1` terms.
fn invert(vars: &Arc<VarTable>, a: &PolyMatrix) -> Result<PolyMatrix> {
    let body = map_entries(a, SuperPolynomial::body);
    let d = det(vars, &body);
    if d.is_zero() {
        return Err(Error::NotInvertible);
    }
    if !d.is_constant() {
        return Err(Error::UndecidableUnits(format!(
            "body determinant {d} is not a constant"
        )));
    }
    let scale = d.constant_term().inv().expect("nonzero constant");
    let body_inv = map_entries(&adjugate(vars, &body), |e| e.scale(&scale));
    let nil = mat_sub(a, &body);
    // (B + N)⁻¹ = Σ_k (−B⁻¹N)^k · B⁻¹
    let step = map_entries(&mat_mul(vars, &body_inv, &nil), |e| -e);
    let mut power = body_inv.clone();
    let mut sum = body_inv;
    loop {
        power = mat_mul(vars, &step, &power);
        if power.iter().flatten().all(SuperPolynomial::is_zero) {
            break;
        }
        sum = sum
            .iter()
            .zip(&power)
            .map(|(rs, rp)| rs.iter().zip(rp).map(|(x, y)| x + y).collect())
            .collect();
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn grassmann(k: usize) -> Arc<VarTable> {
        let names: Vec<String> = (1..=k).map(|i| format!("t{i}")).collect();
        VarTable::new(Vec::<String>::new(), names).unwrap()
    }

    fn c(t: &Arc<VarTable>, v: i64) -> SuperPolynomial {
        SuperPolynomial::constant(t, Scalar::from_int(v))
    }

    fn w(t: &Arc<VarTable>, coeff: i64, names: &[&str]) -> SuperPolynomial {
        SuperPolynomial::normalize(t, Scalar::from_int(coeff), names).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let t = grassmann(2);
        let a = SuperMatrix::from_blocks(
            &t,
            vec![vec![&c(&t, 2) + &w(&t, 1, &["t1", "t2"])]],
            vec![vec![w(&t, 1, &["t1"])]],
            vec![vec![w(&t, 3, &["t2"])]],
            vec![vec![c(&t, 5)]],
        )
        .unwrap();
        let id = SuperMatrix::identity(&t, 1, 1);
        assert_eq!(a.matmul(&id).unwrap(), a);
        assert_eq!(id.matmul(&a).unwrap(), a);
    }

    #[test]
    fn parity_layout_enforced() {
        let t = grassmann(2);
        let err = SuperMatrix::from_blocks(
            &t,
            vec![vec![w(&t, 1, &["t1"])]],
            vec![vec![SuperPolynomial::zero(&t)]],
            vec![vec![SuperPolynomial::zero(&t)]],
            vec![vec![c(&t, 1)]],
        )
        .unwrap_err();
        assert_eq!(err, Error::ParityLayout { row: 0, col: 0 });
    }

    #[test]
    fn product_matches_sign_tracking_oracle() {
        // [[1, θ1], [θ2, 1]]² has (0,0) entry 1 + θ1θ2 and (1,1) entry θ2θ1 + 1
        let t = grassmann(2);
        let a = SuperMatrix::from_blocks(
            &t,
            vec![vec![c(&t, 1)]],
            vec![vec![w(&t, 1, &["t1"])]],
            vec![vec![w(&t, 1, &["t2"])]],
            vec![vec![c(&t, 1)]],
        )
        .unwrap();
        let sq = a.matmul(&a).unwrap();
        assert_eq!(sq.entry(0, 0), &(&c(&t, 1) + &w(&t, 1, &["t1", "t2"])));
        assert_eq!(sq.entry(1, 1), &(&c(&t, 1) - &w(&t, 1, &["t1", "t2"])));
        assert_eq!(sq.entry(0, 1), &w(&t, 2, &["t1"]));
        assert_eq!(sq.entry(1, 0), &w(&t, 2, &["t2"]));
    }

    #[test]
    fn invertibility() {
        let t = grassmann(2);
        assert!(SuperMatrix::identity(&t, 2, 1).is_invertible().unwrap());
        let a = SuperMatrix::from_blocks(
            &t,
            vec![vec![c(&t, 1)]],
            vec![vec![w(&t, 1, &["t1"])]],
            vec![vec![w(&t, 1, &["t2"])]],
            vec![vec![SuperPolynomial::zero(&t)]],
        )
        .unwrap();
        assert!(!a.is_invertible().unwrap());
        assert_eq!(a.inverse().unwrap_err(), Error::NotInvertible);
        let unit = SuperMatrix::from_blocks(
            &t,
            vec![vec![c(&t, 1)]],
            vec![vec![SuperPolynomial::zero(&t)]],
            vec![vec![SuperPolynomial::zero(&t)]],
            vec![vec![&c(&t, 1) + &w(&t, 1, &["t1", "t2"])]],
        )
        .unwrap();
        assert!(unit.is_invertible().unwrap());
        let inv = unit.inverse().unwrap();
        assert_eq!(inv.entry(1, 1), &(&c(&t, 1) - &w(&t, 1, &["t1", "t2"])));
    }

    #[test]
    fn free_even_variables_are_undecidable() {
        let t = VarTable::new(["x"], Vec::<&str>::new()).unwrap();
        let a = SuperMatrix::new(&t, 1, 0, vec![vec![w(&t, 1, &["x"])]]).unwrap();
        assert!(matches!(a.is_invertible(), Err(Error::UndecidableUnits(_))));
    }

    #[test]
    fn numeric_inverse() {
        let t = grassmann(0);
        let a = SuperMatrix::new(&t, 0, 1, vec![vec![c(&t, 2)]]).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(
            inv.entry(0, 0),
            &SuperPolynomial::constant(&t, Scalar::ratio(1, 2))
        );
    }

    #[test]
    fn inverse_is_two_sided() {
        let t = grassmann(4);
        let a = SuperMatrix::from_blocks(
            &t,
            vec![
                vec![&c(&t, 2) + &w(&t, 1, &["t1", "t3"]), c(&t, 1)],
                vec![w(&t, -1, &["t2", "t4"]), c(&t, 1)],
            ],
            vec![vec![w(&t, 1, &["t1"])], vec![&w(&t, 1, &["t4"]) + &w(&t, 2, &["t1", "t2", "t3"])]],
            vec![vec![w(&t, 1, &["t2"]), w(&t, 1, &["t3"])]],
            vec![vec![&c(&t, 3) + &w(&t, 1, &["t1", "t2"])]],
        )
        .unwrap();
        let inv = a.inverse().unwrap();
        let id = SuperMatrix::identity(&t, 2, 1);
        assert_eq!(a.matmul(&inv).unwrap(), id);
        assert_eq!(inv.matmul(&a).unwrap(), id);
        assert_eq!(inv.inverse().unwrap(), a);
    }

    #[test]
    fn berezinian_examples() {
        let t = grassmann(2);
        assert_eq!(
            SuperMatrix::identity(&t, 2, 2).berezinian().unwrap(),
            c(&t, 1)
        );
        let diag = SuperMatrix::from_blocks(
            &t,
            vec![vec![c(&t, 2)]],
            vec![vec![SuperPolynomial::zero(&t)]],
            vec![vec![SuperPolynomial::zero(&t)]],
            vec![vec![c(&t, 3)]],
        )
        .unwrap();
        assert_eq!(
            diag.berezinian().unwrap(),
            SuperPolynomial::constant(&t, Scalar::ratio(2, 3))
        );
        let a = SuperMatrix::from_blocks(
            &t,
            vec![vec![&c(&t, 1) + &w(&t, 1, &["t1", "t2"])]],
            vec![vec![w(&t, 1, &["t1"])]],
            vec![vec![w(&t, 1, &["t2"])]],
            vec![vec![c(&t, 1)]],
        )
        .unwrap();
        assert_eq!(a.berezinian().unwrap(), c(&t, 1));
    }

    #[test]
    fn berezinian_degenerate_blocks() {
        let t = grassmann(0);
        let even = SuperMatrix::new(&t, 2, 0, vec![vec![c(&t, 1), c(&t, 2)], vec![c(&t, 3), c(&t, 4)]])
            .unwrap();
        assert_eq!(even.berezinian().unwrap(), c(&t, -2));
        let odd = SuperMatrix::new(&t, 0, 1, vec![vec![c(&t, 4)]]).unwrap();
        assert_eq!(
            odd.berezinian().unwrap(),
            SuperPolynomial::constant(&t, Scalar::ratio(1, 4))
        );
    }

    #[test]
    fn determinant_and_adjugate() {
        let t = VarTable::new(["a", "b", "c", "d"], Vec::<&str>::new()).unwrap();
        let v = |n: &str| SuperPolynomial::named(&t, n).unwrap();
        let m = vec![vec![v("a"), v("b")], vec![v("c"), v("d")]];
        assert_eq!(det(&t, &m), &(&v("a") * &v("d")) - &(&v("b") * &v("c")));
        let adj = adjugate(&t, &m);
        let prod = mat_mul(&t, &m, &adj);
        let d = det(&t, &m);
        assert_eq!(prod[0][0], d);
        assert_eq!(prod[1][1], d);
        assert!(prod[0][1].is_zero() && prod[1][0].is_zero());
        assert_eq!(det(&t, &Vec::new()), SuperPolynomial::one(&t));
    }
}

//! Even and odd partial derivatives, Jacobians at closed points and the
//! super rank `a|b` of a Jacobian.
//!
//! Odd derivatives are *left* derivatives: for a canonical monomial
//! `ξ_{i₁}⋯ξ_{i_k}` the derivative by `ξ_j` moves `ξ_j` to the front
//! (picking up `(−1)^{pos−1}`) and deletes it. With this convention
//! `∂_ξ(fg) = ∂_ξ(f)·g + (−1)^{p(f)} f·∂_ξ(g)`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::point::ClosedPoint;
use crate::poly::SuperPolynomial;
use crate::presentation::Presentation;
use crate::scalar::Scalar;

pub fn partial_even(p: &SuperPolynomial, i: usize) -> Result<SuperPolynomial> {
    let len = p.vars().n_even();
    if i >= len {
        return Err(Error::IndexOutOfRange { index: i, len });
    }
    let terms = p.terms().filter_map(|(m, c)| {
        let e = m.even_exponents()[i];
        (e > 0).then(|| (m.with_even_exponent(i, e - 1), c * &Scalar::from(e as i64)))
    });
    Ok(SuperPolynomial::from_terms(p.vars(), terms.collect::<Vec<_>>()))
}

pub fn partial_odd(p: &SuperPolynomial, j: usize) -> Result<SuperPolynomial> {
    let len = p.vars().n_odd();
    if j >= len {
        return Err(Error::IndexOutOfRange { index: j, len });
    }
    let bit = 1u64 << j;
    let terms = p.terms().filter_map(|(m, c)| {
        if m.odd_mask() & bit == 0 {
            return None;
        }
        // number of odd factors in front of ξ_j
        let before = (m.odd_mask() & (bit - 1)).count_ones();
        let c = if before % 2 == 1 { -c } else { c.clone() };
        Some((m.with_odd_mask(m.odd_mask() & !bit), c))
    });
    Ok(SuperPolynomial::from_terms(p.vars(), terms.collect::<Vec<_>>()))
}

/// The diagonal blocks of a Jacobian evaluated at a closed point. The mixed
/// blocks are parity-odd and vanish there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericBlockMatrix {
    /// `p × m`: even generators by even variables.
    pub even_block: Vec<Vec<Scalar>>,
    /// `q × n`: odd generators by odd variables.
    pub odd_block: Vec<Vec<Scalar>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SuperRank {
    pub even: usize,
    pub odd: usize,
}

impl fmt::Display for SuperRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.even, self.odd)
    }
}

pub fn jacobian_at(x: &Presentation, p: &ClosedPoint) -> Result<NumericBlockMatrix> {
    let vars = x.vars();
    if p.arity() != vars.n_even() {
        return Err(Error::DimensionMismatch {
            expected: vars.n_even(),
            found: p.arity(),
        });
    }
    let mut even_block = Vec::with_capacity(x.even_gens().len());
    for f in x.even_gens() {
        let row = (0..vars.n_even())
            .map(|i| partial_even(f, i)?.evaluate(p))
            .collect::<Result<Vec<_>>>()?;
        debug_assert!((0..vars.n_odd()).all(|j| partial_odd(f, j)
            .and_then(|d| d.evaluate(p))
            .map(|v| v.is_zero())
            .unwrap_or(false)));
        even_block.push(row);
    }
    let mut odd_block = Vec::with_capacity(x.odd_gens().len());
    for phi in x.odd_gens() {
        let row = (0..vars.n_odd())
            .map(|j| partial_odd(phi, j)?.evaluate(p))
            .collect::<Result<Vec<_>>>()?;
        debug_assert!((0..vars.n_even()).all(|i| partial_even(phi, i)
            .and_then(|d| d.evaluate(p))
            .map(|v| v.is_zero())
            .unwrap_or(false)));
        odd_block.push(row);
    }
    Ok(NumericBlockMatrix {
        even_block,
        odd_block,
    })
}

pub fn super_rank(m: &NumericBlockMatrix) -> SuperRank {
    SuperRank {
        even: linalg::rank(&m.even_block),
        odd: linalg::rank(&m.odd_block),
    }
}

/// Generators realizing the rank, chosen by scanning each block top to
/// bottom and keeping rows independent of those already kept.
pub fn rank_realizing_rows(m: &NumericBlockMatrix) -> (Vec<usize>, Vec<usize>) {
    (
        linalg::greedy_independent_rows(&m.even_block),
        linalg::greedy_independent_rows(&m.odd_block),
    )
}

//! Local rings at closed points: truncations `O_{X,P}/m_P^{k+1}`, Hilbert
//! functions of the associated graded ring, tangent dimensions and the
//! smoothness decision procedure.
//!
//! Everything is computed at the origin after translating the generators.
//! Since `k[x, ξ]/M^{N+1}` is already local, `O_{X,P}/m_P^{k+1}` is the
//! finite-dimensional quotient `k[x, ξ]/(I + M^{k+1})`. The image of `I` in
//! `k[x, ξ]/M^{N+1}` is the span of the truncated products `μ·g` for
//! monomials `μ` and generators `g`; one sparse row reduction with columns
//! ordered by ascending degree yields the dimension of every truncation
//! `k ≤ N` at once, because a reduced row survives truncation to degree `k`
//! exactly when its leading (lowest-degree) column does.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::calc::{jacobian_at, rank_realizing_rows, super_rank, SuperRank};
use crate::error::{Error, Result};
use crate::linalg::{RowSpace, SparseRow};
use crate::monomial::{monomials_up_to, Monomial};
use crate::point::ClosedPoint;
use crate::poly::SuperPolynomial;
use crate::presentation::{GenIndex, Presentation};
use crate::vars::{Parity, VarTable};

/// A super dimension `r|s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SuperDim {
    pub even: usize,
    pub odd: usize,
}

impl SuperDim {
    pub fn new(even: usize, odd: usize) -> Self {
        SuperDim { even, odd }
    }

    pub fn total(&self) -> usize {
        self.even + self.odd
    }
}

impl fmt::Display for SuperDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.even, self.odd)
    }
}

fn check_arity(x: &Presentation, p: &ClosedPoint) -> Result<()> {
    if p.arity() != x.vars().n_even() {
        return Err(Error::DimensionMismatch {
            expected: x.vars().n_even(),
            found: p.arity(),
        });
    }
    Ok(())
}

/// Whether `P ∈ |X|`: every even generator vanishes at `P`. Odd generators
/// vanish at every closed point.
pub fn point_on_variety(x: &Presentation, p: &ClosedPoint) -> Result<bool> {
    check_arity(x, p)?;
    for f in x.even_gens() {
        if !f.evaluate(p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_on_variety(x: &Presentation, p: &ClosedPoint) -> Result<()> {
    if point_on_variety(x, p)? {
        Ok(())
    } else {
        Err(Error::PointNotOnVariety)
    }
}

/// `dim m_P/m_P²`, split by parity: `m|n` minus the Jacobian super rank.
pub fn tangent_dim(x: &Presentation, p: &ClosedPoint) -> Result<SuperDim> {
    require_on_variety(x, p)?;
    let rank = super_rank(&jacobian_at(x, p)?);
    Ok(SuperDim {
        even: x.vars().n_even() - rank.even,
        odd: x.vars().n_odd() - rank.odd,
    })
}

/// Row-reduced model of `k[x, ξ]/(I + M^{N+1})` at the origin.
#[derive(Debug, Clone)]
pub struct TruncatedLocalRing {
    vars: Arc<VarTable>,
    order: usize,
    index: HashMap<Monomial, usize>,
    space: RowSpace,
    /// `[even, odd]` monomial counts per degree.
    monomials: Vec<[usize; 2]>,
    /// `[even, odd]` pivot counts per degree.
    pivots: Vec<[usize; 2]>,
}

fn parity_slot(p: Parity) -> usize {
    match p {
        Parity::Even => 0,
        Parity::Odd => 1,
    }
}

impl TruncatedLocalRing {
    /// Builds the model from generators already translated to the origin.
    fn build(vars: &Arc<VarTable>, gens: &[SuperPolynomial], order: usize) -> Self {
        let n = order as u32;
        let columns = monomials_up_to(vars.n_even(), vars.n_odd(), n);
        let mut monomials = vec![[0usize; 2]; order + 1];
        for m in &columns {
            monomials[m.degree() as usize][parity_slot(m.parity())] += 1;
        }
        let index: HashMap<Monomial, usize> = columns
            .iter()
            .enumerate()
            .map(|(k, m)| (m.clone(), k))
            .collect();
        let mut space = RowSpace::new();
        let gens: Vec<(&SuperPolynomial, u32)> = gens
            .iter()
            .filter_map(|g| g.low_degree().map(|d| (g, d)))
            .filter(|&(_, d)| d <= n)
            .collect();
        for mu in &columns {
            let dmu = mu.degree();
            for &(g, low) in &gens {
                if dmu + low > n {
                    continue;
                }
                let mut row = SparseRow::new();
                for (m, c) in g.terms() {
                    if dmu + m.degree() > n {
                        break;
                    }
                    if let Some((prod, negative)) = mu.mul(m) {
                        let col = index[&prod];
                        let v = if negative { -c } else { c.clone() };
                        row.insert(col, v);
                    }
                }
                space.insert(row);
            }
        }
        let mut pivots = vec![[0usize; 2]; order + 1];
        for col in space.pivot_columns() {
            let m = &columns[col];
            pivots[m.degree() as usize][parity_slot(m.parity())] += 1;
        }
        TruncatedLocalRing {
            vars: Arc::clone(vars),
            order,
            index,
            space,
            monomials,
            pivots,
        }
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.order {
            return Err(Error::IndexOutOfRange {
                index: d,
                len: self.order + 1,
            });
        }
        Ok(())
    }

    /// `dim m_P^d/m_P^{d+1}` split by parity.
    pub fn hilbert_split(&self, d: usize) -> Result<SuperDim> {
        self.check_degree(d)?;
        let [me, mo] = self.monomials[d];
        let [pe, po] = self.pivots[d];
        Ok(SuperDim {
            even: me - pe,
            odd: mo - po,
        })
    }

    /// `t(k) = dim k[x, ξ]/(I + M^{k+1})`.
    pub fn dimension(&self, k: usize) -> Result<usize> {
        self.check_degree(k)?;
        (0..=k)
            .map(|d| self.hilbert_split(d).map(|h| h.total()))
            .sum()
    }

    /// The table `t(0), …, t(N)`.
    pub fn dimension_table(&self) -> Vec<usize> {
        (0..=self.order)
            .map(|k| self.dimension(k).expect("k ≤ order"))
            .collect()
    }

    /// Whether a polynomial (already at the origin) lies in the ideal modulo
    /// `M^{N+1}`.
    fn contains_shifted(&self, g: &SuperPolynomial) -> bool {
        let row: SparseRow = g
            .terms()
            .filter(|(m, _)| m.degree() as usize <= self.order)
            .map(|(m, c)| (self.index[m], c.clone()))
            .collect();
        self.space.contains(row)
    }
}

/// Truncated local ring of `X` at `P` to order `N ≥ 1`.
pub fn truncated_quotient(
    x: &Presentation,
    p: &ClosedPoint,
    order: usize,
) -> Result<TruncatedLocalRing> {
    if order < 1 {
        return Err(Error::OrderTooSmall { order, min: 1 });
    }
    require_on_variety(x, p)?;
    let shifted = x
        .generators()
        .map(|(_, g)| g.shift_to_origin(p))
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncatedLocalRing::build(x.vars(), &shifted, order))
}

/// `h(d) = dim m_P^d/m_P^{d+1}`.
pub fn hilbert_function(r: &TruncatedLocalRing, d: usize) -> Result<usize> {
    r.hilbert_split(d).map(|h| h.total())
}

/// Number of monomials of degree `k` in `r` commuting variables.
fn multichoose(r: usize, k: usize) -> u64 {
    if k == 0 {
        return 1;
    }
    if r == 0 {
        return 0;
    }
    binomial((r + k - 1) as u64, k as u64)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Degree-`d` monomial count of `k[x₁…x_r, ξ₁…ξ_s]`:
/// `Σ_j C(s, j)·C(r + d − j − 1, d − j)`.
pub fn free_model_hilbert(r: usize, s: usize, d: usize) -> u64 {
    let split = free_model_hilbert_split(r, s, d);
    split.even + split.odd
}

/// [`free_model_hilbert`] split by parity of the monomials.
pub fn free_model_hilbert_split(r: usize, s: usize, d: usize) -> FreeCount {
    let mut out = FreeCount::default();
    for j in 0..=d.min(s) {
        let n = binomial(s as u64, j as u64) * multichoose(r, d - j);
        if j % 2 == 0 {
            out.even += n;
        } else {
            out.odd += n;
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FreeCount {
    pub even: u64,
    pub odd: u64,
}

/// Whether `g ∈ (selected) + M^{N+1}` in the local ring at `P`.
pub fn local_membership(
    g: &SuperPolynomial,
    selected: &[SuperPolynomial],
    p: &ClosedPoint,
    order: usize,
) -> Result<bool> {
    let vars = g.vars();
    if p.arity() != vars.n_even() {
        return Err(Error::DimensionMismatch {
            expected: vars.n_even(),
            found: p.arity(),
        });
    }
    let mut shifted = Vec::with_capacity(selected.len());
    for f in selected {
        if !crate::vars::same_table(f.vars(), vars) {
            return Err(Error::MixedTables);
        }
        if !f.evaluate(p)?.is_zero() {
            return Err(Error::PointNotOnVariety);
        }
        shifted.push(f.shift_to_origin(p)?);
    }
    let ring = TruncatedLocalRing::build(vars, &shifted, order);
    Ok(ring.contains_shifted(&g.shift_to_origin(p)?))
}

/// Minimal number of homogeneous generators of `m_P` (super Nakayama):
/// `h(1)` split by parity.
pub fn minimal_generator_count(r: &TruncatedLocalRing) -> Result<SuperDim> {
    if r.order() < 2 {
        return Err(Error::OrderTooSmall {
            order: r.order(),
            min: 2,
        });
    }
    r.hilbert_split(1)
}

/// `2·(max generator degree) + n + 2`.
pub fn default_order(x: &Presentation) -> usize {
    2 * x.max_degree() as usize + x.vars().n_odd() + 2
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// Complete intersection with full-rank Jacobian: smooth, no truncation.
    SmoothExact,
    /// Every finite check passed through the given truncation order.
    SmoothToOrder(usize),
    /// A finite certificate of non-smoothness.
    NotSmooth(NotSmoothCertificate),
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::SmoothExact => "SmoothExact",
            Verdict::SmoothToOrder(_) => "SmoothToOrder",
            Verdict::NotSmooth(_) => "NotSmooth",
        }
    }

    pub fn is_not_smooth(&self) -> bool {
        matches!(self, Verdict::NotSmooth(_))
    }
}

/// At least one field is set. Either one can be rechecked on its own: a
/// generator outside the ideal of the selected generators modulo
/// `M^{N+1}`, or a degree where the Hilbert function falls short of the
/// free model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotSmoothCertificate {
    pub witness_degree: Option<usize>,
    pub failed_generator: Option<GenIndex>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertRow {
    pub degree: usize,
    pub value: SuperDim,
    pub free_model: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothnessVerdict {
    pub verdict: Verdict,
    /// `r|s = dim m_P/m_P²`; the dimension of `X` at `P` when smooth.
    pub dim: SuperDim,
    /// Jacobian super rank `a|b = m|n − r|s`.
    pub rank: SuperRank,
    pub order: usize,
    pub complete_intersection: bool,
    /// Only computed off the complete-intersection path.
    pub hilbert: Option<Vec<HilbertRow>>,
}

/// Decides smoothness of `X` at `P` using truncation order `N ≥ 2`.
///
/// 1. `a|b` = Jacobian rank, `r|s = m|n − a|b`.
/// 2. Exactly `a` even and `b` odd nonzero generators: the presentation is
///    a complete intersection at `P` and `P` is smooth of dimension `r|s`.
/// 3. Otherwise keep a rank-realizing subset of generators. If `P` were
///    smooth the ideal would be generated locally by that subset, so any
///    other generator outside `(subset) + M^{N+1}` proves `P` singular.
/// 4. Independently, a degree `d ≤ N` with `h(d) < φ_{r|s}(d)` proves that
///    the associated graded ring is not free on `r|s` generators.
/// 5. If neither check fails the verdict is `SmoothToOrder(N)`.
pub fn smooth_test(x: &Presentation, p: &ClosedPoint, order: usize) -> Result<SmoothnessVerdict> {
    if order < 2 {
        return Err(Error::OrderTooSmall { order, min: 2 });
    }
    require_on_variety(x, p)?;
    let jac = jacobian_at(x, p)?;
    let rank = super_rank(&jac);
    let dim = SuperDim {
        even: x.vars().n_even() - rank.even,
        odd: x.vars().n_odd() - rank.odd,
    };
    let nonzero_even = x.even_gens().iter().filter(|g| !g.is_zero()).count();
    let nonzero_odd = x.odd_gens().iter().filter(|g| !g.is_zero()).count();
    if nonzero_even == rank.even && nonzero_odd == rank.odd {
        return Ok(SmoothnessVerdict {
            verdict: Verdict::SmoothExact,
            dim,
            rank,
            order,
            complete_intersection: true,
            hilbert: None,
        });
    }

    let (even_sel, odd_sel) = rank_realizing_rows(&jac);
    let selected: Vec<GenIndex> = even_sel
        .iter()
        .map(|&index| GenIndex {
            parity: Parity::Even,
            index,
        })
        .chain(odd_sel.iter().map(|&index| GenIndex {
            parity: Parity::Odd,
            index,
        }))
        .collect();
    let selected_shifted = selected
        .iter()
        .map(|&at| x.generator(at).expect("selected index exists").shift_to_origin(p))
        .collect::<Result<Vec<_>>>()?;
    let complete = TruncatedLocalRing::build(x.vars(), &selected_shifted, order);
    let mut failed_generator = None;
    for (at, g) in x.generators() {
        if selected.contains(&at) {
            continue;
        }
        if !complete.contains_shifted(&g.shift_to_origin(p)?) {
            failed_generator = Some(at);
            break;
        }
    }

    let ring = truncated_quotient(x, p, order)?;
    let mut hilbert = Vec::with_capacity(order + 1);
    let mut witness_degree = None;
    for d in 0..=order {
        let value = ring.hilbert_split(d)?;
        let free_model = free_model_hilbert(dim.even, dim.odd, d);
        if witness_degree.is_none() && (value.total() as u64) < free_model {
            witness_degree = Some(d);
        }
        hilbert.push(HilbertRow {
            degree: d,
            value,
            free_model,
        });
    }

    let verdict = if witness_degree.is_some() || failed_generator.is_some() {
        Verdict::NotSmooth(NotSmoothCertificate {
            witness_degree,
            failed_generator,
        })
    } else {
        Verdict::SmoothToOrder(order)
    };
    Ok(SmoothnessVerdict {
        verdict,
        dim,
        rank,
        order,
        complete_intersection: false,
        hilbert: Some(hilbert),
    })
}

/// Convenience: [`smooth_test`] at [`default_order`].
pub fn smooth_test_default(x: &Presentation, p: &ClosedPoint) -> Result<SmoothnessVerdict> {
    smooth_test(x, p, default_order(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn table() -> Arc<VarTable> {
        VarTable::new(["x", "y"], ["xi", "eta"]).unwrap()
    }

    fn poly(t: &Arc<VarTable>, words: &[(i64, &[&str])]) -> SuperPolynomial {
        let mut acc = SuperPolynomial::zero(t);
        for (c, w) in words {
            acc = &acc + &SuperPolynomial::normalize(t, Scalar::from_int(*c), w).unwrap();
        }
        acc
    }

    fn odd_product() -> Presentation {
        let t = table();
        Presentation::from_generators(&t, [poly(&t, &[(1, &["xi", "eta"])])]).unwrap()
    }

    fn odd_relation() -> Presentation {
        let t = table();
        Presentation::from_generators(&t, [poly(&t, &[(1, &["xi", "x"]), (1, &["eta", "y"])])])
            .unwrap()
    }

    #[test]
    fn points_on_varieties() {
        let t = table();
        let circle = Presentation::from_generators(
            &t,
            [poly(&t, &[(1, &["x", "x"]), (1, &["y", "y"]), (-1, &[])])],
        )
        .unwrap();
        assert!(point_on_variety(&circle, &ClosedPoint::from_ints(&[1, 0])).unwrap());
        assert!(!point_on_variety(&circle, &ClosedPoint::from_ints(&[0, 0])).unwrap());
        assert!(point_on_variety(&odd_product(), &ClosedPoint::from_ints(&[5, -3])).unwrap());
        assert!(point_on_variety(&circle, &ClosedPoint::from_ints(&[0])).is_err());
    }

    #[test]
    fn tangent_dims() {
        assert_eq!(
            tangent_dim(&odd_product(), &ClosedPoint::origin(2)).unwrap(),
            SuperDim::new(2, 2)
        );
        assert_eq!(
            tangent_dim(&odd_relation(), &ClosedPoint::from_ints(&[1, 0])).unwrap(),
            SuperDim::new(2, 1)
        );
        let free = Presentation::free(&VarTable::new(["x"], ["xi"]).unwrap());
        assert_eq!(
            tangent_dim(&free, &ClosedPoint::origin(1)).unwrap(),
            SuperDim::new(1, 1)
        );
    }

    #[test]
    fn tangent_requires_point_on_variety() {
        let t = VarTable::new(["x"], Vec::<&str>::new()).unwrap();
        let x = Presentation::from_generators(&t, [poly(&t, &[(1, &["x"]), (-1, &[])])]).unwrap();
        assert_eq!(
            tangent_dim(&x, &ClosedPoint::origin(1)).unwrap_err(),
            Error::PointNotOnVariety
        );
    }

    #[test]
    fn truncated_free_ring() {
        let free = Presentation::free(&VarTable::new(["x"], ["xi"]).unwrap());
        let r = truncated_quotient(&free, &ClosedPoint::origin(1), 2).unwrap();
        assert_eq!(r.dimension_table(), vec![1, 3, 5]);
    }

    #[test]
    fn truncated_odd_product() {
        let r = truncated_quotient(&odd_product(), &ClosedPoint::origin(2), 2).unwrap();
        // free 2|2 ring: 1 + 4 + 8 = 13 monomials of degree ≤ 2; ξη is killed
        assert_eq!(r.dimension(2).unwrap(), 12);
        assert_eq!(hilbert_function(&r, 2).unwrap(), 7);
        assert_eq!(hilbert_function(&r, 0).unwrap(), 1);
    }

    #[test]
    fn truncated_double_point() {
        let t = VarTable::new(["x"], Vec::<&str>::new()).unwrap();
        let x = Presentation::from_generators(&t, [poly(&t, &[(1, &["x", "x"])])]).unwrap();
        let r = truncated_quotient(&x, &ClosedPoint::origin(1), 3).unwrap();
        assert_eq!(r.dimension_table(), vec![1, 2, 2, 2]);
        assert_eq!(minimal_generator_count(&r).unwrap(), SuperDim::new(1, 0));
    }

    #[test]
    fn order_checks() {
        assert!(matches!(
            truncated_quotient(&odd_product(), &ClosedPoint::origin(2), 0),
            Err(Error::OrderTooSmall { order: 0, min: 1 })
        ));
        let r = truncated_quotient(&odd_product(), &ClosedPoint::origin(2), 1).unwrap();
        assert!(minimal_generator_count(&r).is_err());
        assert!(hilbert_function(&r, 2).is_err());
        assert!(smooth_test(&odd_product(), &ClosedPoint::origin(2), 1).is_err());
    }

    #[test]
    fn free_model_counts() {
        assert_eq!(free_model_hilbert(2, 2, 2), 8);
        assert_eq!(free_model_hilbert(2, 1, 2), 5);
        assert_eq!(free_model_hilbert(0, 0, 0), 1);
        assert_eq!(free_model_hilbert(3, 4, 0), 1);
        assert_eq!(free_model_hilbert(0, 0, 3), 0);
        // exterior algebra on 3 generators: C(3, d)
        assert_eq!(free_model_hilbert(0, 3, 2), 3);
        assert_eq!(free_model_hilbert(0, 3, 4), 0);
    }

    #[test]
    fn membership_examples() {
        let t = table();
        let origin = ClosedPoint::origin(2);
        let xi_eta = poly(&t, &[(1, &["xi", "eta"])]);
        assert!(!local_membership(&xi_eta, &[], &origin, 2).unwrap());

        let f = poly(&t, &[(1, &["x", "x"]), (-1, &["y"])]);
        let xf = &poly(&t, &[(1, &["x"])]) * &f;
        assert!(local_membership(&xf, std::slice::from_ref(&f), &origin, 5).unwrap());

        // x⁴ survives in the local ring k[x]_(x) of the parabola, so it is
        // visible from order 4 on
        let tail = poly(&t, &[(1, &["x", "x", "x", "x"])]);
        assert!(local_membership(&(&f + &tail), std::slice::from_ref(&f), &origin, 3).unwrap());
        assert!(!local_membership(&(&f + &tail), std::slice::from_ref(&f), &origin, 4).unwrap());

        let unit = poly(&t, &[(1, &[])]);
        assert_eq!(
            local_membership(&xi_eta, &[unit], &origin, 2).unwrap_err(),
            Error::PointNotOnVariety
        );
    }

    #[test]
    fn smooth_odd_product() {
        let v = smooth_test(&odd_product(), &ClosedPoint::origin(2), 4).unwrap();
        match v.verdict {
            Verdict::NotSmooth(c) => assert_eq!(c.witness_degree, Some(2)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn smooth_odd_relation() {
        let v = smooth_test(&odd_relation(), &ClosedPoint::from_ints(&[1, 0]), 4).unwrap();
        assert_eq!(v.verdict, Verdict::SmoothExact);
        assert_eq!(v.dim, SuperDim::new(2, 1));
        let v = smooth_test(&odd_relation(), &ClosedPoint::origin(2), 4).unwrap();
        assert!(v.verdict.is_not_smooth());
    }

    #[test]
    fn redundant_generator_is_smooth_to_order() {
        // (x, x²) in k[x]: not a complete intersection, but the point is smooth
        let t = VarTable::new(["x"], Vec::<&str>::new()).unwrap();
        let x = Presentation::from_generators(
            &t,
            [poly(&t, &[(1, &["x"])]), poly(&t, &[(1, &["x", "x"])])],
        )
        .unwrap();
        let v = smooth_test(&x, &ClosedPoint::origin(1), 5).unwrap();
        assert_eq!(v.verdict, Verdict::SmoothToOrder(5));
        assert_eq!(v.dim, SuperDim::new(0, 0));
    }

    #[test]
    fn cusp_fails_membership_and_hilbert() {
        // y² − x³ at the origin: rank 0, one generator left over
        let t = VarTable::new(["x", "y"], Vec::<&str>::new()).unwrap();
        let x = Presentation::from_generators(
            &t,
            [poly(&t, &[(1, &["y", "y"]), (-1, &["x", "x", "x"])])],
        )
        .unwrap();
        let v = smooth_test(&x, &ClosedPoint::origin(2), 4).unwrap();
        match v.verdict {
            Verdict::NotSmooth(c) => {
                assert_eq!(c.witness_degree, Some(2));
                assert_eq!(
                    c.failed_generator,
                    Some(GenIndex {
                        parity: Parity::Even,
                        index: 0
                    })
                );
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn default_order_formula() {
        assert_eq!(default_order(&odd_product()), 2 * 2 + 2 + 2);
    }
}

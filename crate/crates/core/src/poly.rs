//! Elements of the free commutative superalgebra `k[x₁…x_m, ξ₁…ξ_n]`.
//!
//! A [`SuperPolynomial`] is a finite map from sign-normalized monomials to
//! nonzero [`Scalar`] coefficients. Odd variables anticommute and square to
//! zero; every product is brought back to canonical form (odd factors in
//! ascending index order) with the Koszul sign absorbed into the coefficient.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::point::ClosedPoint;
use crate::scalar::Scalar;
use crate::vars::{same_table, Parity, Var, VarTable};

#[derive(Clone)]
pub struct SuperPolynomial {
    vars: Arc<VarTable>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl SuperPolynomial {
    pub fn zero(vars: &Arc<VarTable>) -> Self {
        SuperPolynomial {
            vars: Arc::clone(vars),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Arc<VarTable>) -> Self {
        Self::constant(vars, Scalar::one())
    }

    pub fn constant(vars: &Arc<VarTable>, c: Scalar) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::one(vars.n_even()), c);
        p
    }

    pub fn var(vars: &Arc<VarTable>, var: Var) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::var(var, vars.n_even()), Scalar::one());
        p
    }

    /// The variable called `name`.
    pub fn named(vars: &Arc<VarTable>, name: &str) -> Result<Self> {
        let v = vars
            .lookup(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var(vars, v))
    }

    pub fn from_terms(
        vars: &Arc<VarTable>,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            debug_assert_eq!(m.even_exponents().len(), vars.n_even());
            p.add_term(m, c);
        }
        p
    }

    /// Normalizes the raw product `coeff · v₁ · v₂ ⋯` given by variable
    /// names, in the order written. Odd factors are sorted with the Koszul
    /// sign; a repeated odd factor gives zero.
    pub fn normalize(vars: &Arc<VarTable>, coeff: Scalar, factors: &[&str]) -> Result<Self> {
        let mut acc = Self::constant(vars, coeff);
        for name in factors {
            let v = Self::named(vars, name)?;
            acc = &acc * &v;
        }
        Ok(acc)
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one(self.vars.n_even()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Parity when homogeneous; the zero polynomial counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(Monomial::parity);
        let first = match it.next() {
            None => return Some(Parity::Even),
            Some(p) => p,
        };
        it.all(|p| p == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.parity().is_some()
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Smallest total degree of a term; `None` for zero.
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_table(&self, other: &Self) -> Result<()> {
        if same_table(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(Error::MixedTables)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, negative)) = ma.mul(mb) {
                    let c = ca * cb;
                    let slot = acc.entry(m).or_insert_with(Scalar::zero);
                    if negative {
                        *slot -= &c;
                    } else {
                        *slot += &c;
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(SuperPolynomial {
            vars: Arc::clone(&self.vars),
            terms: acc,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        SuperPolynomial {
            vars: Arc::clone(&self.vars),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    fn check_point(&self, p: &ClosedPoint) -> Result<()> {
        if p.arity() != self.vars.n_even() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.n_even(),
                found: p.arity(),
            });
        }
        Ok(())
    }

    /// Value at a closed point: `x_i ↦ a_i`, every odd variable `↦ 0`.
    pub fn evaluate(&self, p: &ClosedPoint) -> Result<Scalar> {
        self.check_point(p)?;
        let mut total = Scalar::zero();
        for (m, c) in self.terms.iter().filter(|(m, _)| !m.has_odd()) {
            let mut v = c.clone();
            for (e, a) in m.even_exponents().iter().zip(p.coords()) {
                if *e > 0 {
                    v = &v * &a.pow(*e);
                }
            }
            total += &v;
        }
        Ok(total)
    }

    /// Substitutes `x_i ↦ x_i + a_i`, moving `p` to the origin.
    pub fn shift_to_origin(&self, p: &ClosedPoint) -> Result<Self> {
        self.check_point(p)?;
        if p.is_origin() {
            return Ok(self.clone());
        }
        let even_images: Vec<_> = p
            .coords()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let mut img = Self::var(&self.vars, Var::Even(i));
                img.add_term(Monomial::one(self.vars.n_even()), a.clone());
                img
            })
            .collect();
        let odd_images: Vec<_> = (0..self.vars.n_odd())
            .map(|j| Self::var(&self.vars, Var::Odd(j)))
            .collect();
        self.substitute(&self.vars, &even_images, &odd_images)
    }

    /// Drops every term of total degree above `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Self {
        SuperPolynomial {
            vars: Arc::clone(&self.vars),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Image modulo the ideal generated by the odd variables.
    pub fn body(&self) -> Self {
        SuperPolynomial {
            vars: Arc::clone(&self.vars),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.has_odd())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies the superalgebra morphism into `target` that sends the `i`-th
    /// even variable to `even_images[i]` and the `j`-th odd variable to
    /// `odd_images[j]`. Odd images must be odd and even images even for the
    /// map to be a morphism; that is checked.
    pub fn substitute(
        &self,
        target: &Arc<VarTable>,
        even_images: &[SuperPolynomial],
        odd_images: &[SuperPolynomial],
    ) -> Result<Self> {
        if even_images.len() != self.vars.n_even() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.n_even(),
                found: even_images.len(),
            });
        }
        if odd_images.len() != self.vars.n_odd() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.n_odd(),
                found: odd_images.len(),
            });
        }
        for (img, want) in even_images
            .iter()
            .map(|p| (p, Parity::Even))
            .chain(odd_images.iter().map(|p| (p, Parity::Odd)))
        {
            if !same_table(img.vars(), target) {
                return Err(Error::MixedTables);
            }
            if !img.is_zero() && img.parity() != Some(want) {
                return Err(Error::MixedParityGenerator(img.to_string()));
            }
        }
        let mut power_cache: Vec<Vec<SuperPolynomial>> = even_images
            .iter()
            .map(|img| vec![SuperPolynomial::one(target), img.clone()])
            .collect();
        let mut out = SuperPolynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = SuperPolynomial::constant(target, c.clone());
            for (i, &e) in m.even_exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut power_cache[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            for j in m.odd_indices() {
                t = &t * &odd_images[j];
                if t.is_zero() {
                    break;
                }
            }
            for (mm, cc) in t.terms {
                out.add_term(mm, cc);
            }
        }
        Ok(out)
    }

    /// Re-expresses `self` over a larger table that contains every variable
    /// of `self.vars()` under the same name and parity.
    pub fn embed(&self, target: &Arc<VarTable>) -> Result<Self> {
        let image = |name: &str, want: Parity| -> Result<SuperPolynomial> {
            match target.lookup(name) {
                Some(v) if v.parity() == want => Ok(SuperPolynomial::var(target, v)),
                _ => Err(Error::UnknownVariable(name.to_string())),
            }
        };
        let even: Vec<_> = self
            .vars
            .even_names()
            .iter()
            .map(|n| image(n, Parity::Even))
            .collect::<Result<_>>()?;
        let odd: Vec<_> = self
            .vars
            .odd_names()
            .iter()
            .map(|n| image(n, Parity::Odd))
            .collect::<Result<_>>()?;
        self.substitute(target, &even, &odd)
    }

    /// True when `self = c · other` for some nonzero scalar `c`.
    pub fn is_scalar_multiple_of(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() || self.terms.len() != other.terms.len() {
            return false;
        }
        let (m0, c0) = self.terms.iter().next().expect("nonzero");
        let Some(d0) = other.terms.get(m0) else {
            return false;
        };
        let ratio = c0.checked_div(d0).expect("stored coefficients are nonzero");
        other.terms.iter().all(|(m, d)| {
            self.terms
                .get(m)
                .map(|c| *c == d * &ratio)
                .unwrap_or(false)
        })
    }
}

impl PartialEq for SuperPolynomial {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for SuperPolynomial {}

impl<'a> Add<&'a SuperPolynomial> for &'a SuperPolynomial {
    type Output = SuperPolynomial;
    /// Panics on mixed tables; use [`SuperPolynomial::try_add`] to recover.
    fn add(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        self.try_add(rhs).expect("polynomials over different tables")
    }
}

impl<'a> Sub<&'a SuperPolynomial> for &'a SuperPolynomial {
    type Output = SuperPolynomial;
    fn sub(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        self.try_sub(rhs).expect("polynomials over different tables")
    }
}

impl<'a> Mul<&'a SuperPolynomial> for &'a SuperPolynomial {
    type Output = SuperPolynomial;
    fn mul(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        self.try_mul(rhs).expect("polynomials over different tables")
    }
}

impl Neg for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(self) -> SuperPolynomial {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Display for SuperPolynomial {
    /// Highest-degree terms first, in the syntax of the expression parser.
    /// Non-real coefficients are parenthesized: `(1+2*i)*x + (i)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_real() && c.re().is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = if negative { -c } else { c.clone() };
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.even_exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars.even_names()[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars.even_names()[i], e)),
                }
            }
            factors.extend(m.odd_indices().map(|j| self.vars.odd_names()[j].clone()));
            let coeff = if mag.is_real() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            if factors.is_empty() {
                write!(f, "{coeff}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", coeff, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

//! Presented superalgebras `k[x, ξ]/(f₁…f_p, φ₁…φ_q)`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::SuperPolynomial;
use crate::vars::{same_table, Parity, VarTable};

/// Position of a generator: its parity and index within that parity class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenIndex {
    pub parity: Parity,
    pub index: usize,
}

impl fmt::Display for GenIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} generator #{}", self.parity.as_str(), self.index)
    }
}

/// An affine supervariety given by its coordinate superalgebra: even
/// generators `f_i` and odd generators `φ_j` of a parity-homogeneous ideal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    vars: Arc<VarTable>,
    even_gens: Vec<SuperPolynomial>,
    odd_gens: Vec<SuperPolynomial>,
}

impl Presentation {
    pub fn new(
        vars: &Arc<VarTable>,
        even_gens: Vec<SuperPolynomial>,
        odd_gens: Vec<SuperPolynomial>,
    ) -> Result<Self> {
        for (g, want) in even_gens
            .iter()
            .map(|g| (g, Parity::Even))
            .chain(odd_gens.iter().map(|g| (g, Parity::Odd)))
        {
            if !same_table(g.vars(), vars) {
                return Err(Error::MixedTables);
            }
            if !g.is_zero() && g.parity() != Some(want) {
                return Err(Error::MixedParityGenerator(g.to_string()));
            }
        }
        Ok(Presentation {
            vars: Arc::clone(vars),
            even_gens,
            odd_gens,
        })
    }

    /// Sorts generators into the even and odd lists by their parity, keeping
    /// the relative order within each class. The zero polynomial is filed
    /// as even.
    pub fn from_generators(
        vars: &Arc<VarTable>,
        gens: impl IntoIterator<Item = SuperPolynomial>,
    ) -> Result<Self> {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for g in gens {
            match g.parity() {
                Some(Parity::Even) => even.push(g),
                Some(Parity::Odd) => odd.push(g),
                None => return Err(Error::MixedParityGenerator(g.to_string())),
            }
        }
        Presentation::new(vars, even, odd)
    }

    /// The free superalgebra on `vars` (no relations).
    pub fn free(vars: &Arc<VarTable>) -> Self {
        Presentation {
            vars: Arc::clone(vars),
            even_gens: Vec::new(),
            odd_gens: Vec::new(),
        }
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn even_gens(&self) -> &[SuperPolynomial] {
        &self.even_gens
    }

    pub fn odd_gens(&self) -> &[SuperPolynomial] {
        &self.odd_gens
    }

    /// All generators, even ones first.
    pub fn generators(&self) -> impl Iterator<Item = (GenIndex, &SuperPolynomial)> + '_ {
        let even = self.even_gens.iter().enumerate().map(|(index, g)| {
            (
                GenIndex {
                    parity: Parity::Even,
                    index,
                },
                g,
            )
        });
        let odd = self.odd_gens.iter().enumerate().map(|(index, g)| {
            (
                GenIndex {
                    parity: Parity::Odd,
                    index,
                },
                g,
            )
        });
        even.chain(odd)
    }

    pub fn generator(&self, at: GenIndex) -> Option<&SuperPolynomial> {
        match at.parity {
            Parity::Even => self.even_gens.get(at.index),
            Parity::Odd => self.odd_gens.get(at.index),
        }
    }

    pub fn n_generators(&self) -> usize {
        self.even_gens.len() + self.odd_gens.len()
    }

    /// Largest total degree among the generators (0 when there are none).
    pub fn max_degree(&self) -> u32 {
        self.generators()
            .filter_map(|(_, g)| g.degree())
            .max()
            .unwrap_or(0)
    }

    /// Appends generators, skipping zeros and scalar multiples of generators
    /// already present.
    pub fn with_relations(
        &self,
        extra: impl IntoIterator<Item = SuperPolynomial>,
    ) -> Result<Self> {
        let mut out = self.clone();
        for g in extra {
            if !same_table(g.vars(), &self.vars) {
                return Err(Error::MixedTables);
            }
            if g.is_zero() || out.generators().any(|(_, h)| g.is_scalar_multiple_of(h)) {
                continue;
            }
            match g.parity() {
                Some(Parity::Even) => out.even_gens.push(g),
                Some(Parity::Odd) => out.odd_gens.push(g),
                None => return Err(Error::MixedParityGenerator(g.to_string())),
            }
        }
        Ok(out)
    }

    /// The reduced (classical) variety: even variables only, every odd
    /// variable set to zero in the even generators. Odd generators lie in
    /// the ideal generated by the odd nilpotents and are dropped.
    pub fn reduce_even(&self) -> Presentation {
        let reduced_vars = self.vars.even_part();
        let zeros: Vec<SuperPolynomial> = (0..self.vars.n_odd())
            .map(|_| SuperPolynomial::zero(&reduced_vars))
            .collect();
        let evens: Vec<SuperPolynomial> = (0..self.vars.n_even())
            .map(|i| SuperPolynomial::var(&reduced_vars, crate::vars::Var::Even(i)))
            .collect();
        let even_gens = self
            .even_gens
            .iter()
            .map(|g| {
                g.substitute(&reduced_vars, &evens, &zeros)
                    .expect("images match the table")
            })
            .filter(|g| !g.is_zero())
            .collect();
        Presentation {
            vars: reduced_vars,
            even_gens,
            odd_gens: Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn p(t: &Arc<VarTable>, words: &[(i64, &[&str])]) -> SuperPolynomial {
        let mut acc = SuperPolynomial::zero(t);
        for (c, w) in words {
            acc = &acc + &SuperPolynomial::normalize(t, Scalar::from_int(*c), w).unwrap();
        }
        acc
    }

    #[test]
    fn odd_product_reduces_to_plane() {
        let t = VarTable::new(["x", "y"], ["xi", "eta"]).unwrap();
        let x = Presentation::from_generators(&t, [p(&t, &[(1, &["xi", "eta"])])]).unwrap();
        let red = x.reduce_even();
        assert_eq!(red.vars().even_names(), &["x", "y"]);
        assert_eq!(red.vars().n_odd(), 0);
        assert_eq!(red.n_generators(), 0);
    }

    #[test]
    fn odd_relation_reduces_to_plane() {
        let t = VarTable::new(["x", "y"], ["xi", "eta"]).unwrap();
        let g = p(&t, &[(1, &["xi", "x"]), (1, &["eta", "y"])]);
        let x = Presentation::from_generators(&t, [g]).unwrap();
        assert_eq!(x.odd_gens().len(), 1);
        assert_eq!(x.reduce_even().n_generators(), 0);
    }

    #[test]
    fn reduce_drops_odd_terms() {
        let t = VarTable::new(["x", "y"], ["xi", "eta"]).unwrap();
        let g = p(&t, &[(1, &["x", "x"]), (1, &["xi", "eta", "y"])]);
        let red = Presentation::from_generators(&t, [g]).unwrap().reduce_even();
        assert_eq!(red.even_gens().len(), 1);
        assert_eq!(red.even_gens()[0].to_string(), "x^2");
    }

    #[test]
    fn rejects_mixed_parity() {
        let t = VarTable::new(["x"], ["xi"]).unwrap();
        let g = p(&t, &[(1, &["x"]), (1, &["xi"])]);
        assert!(matches!(
            Presentation::from_generators(&t, [g]),
            Err(Error::MixedParityGenerator(_))
        ));
    }

    #[test]
    fn with_relations_skips_multiples() {
        let t = VarTable::new(["x"], ["xi"]).unwrap();
        let base = Presentation::from_generators(&t, [p(&t, &[(1, &["x"]), (-1, &[])])]).unwrap();
        let out = base
            .with_relations([
                p(&t, &[(2, &["x"]), (-2, &[])]),
                SuperPolynomial::zero(&t),
                p(&t, &[(1, &["x", "xi"])]),
            ])
            .unwrap();
        assert_eq!(out.even_gens().len(), 1);
        assert_eq!(out.odd_gens().len(), 1);
    }
}

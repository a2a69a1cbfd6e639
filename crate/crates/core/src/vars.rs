//! Variable tables for polynomial superalgebras `k[x₁…x_m, ξ₁…ξ_n]`.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Odd variables are stored as bits of a `u64`.
pub const MAX_ODD_VARS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_count(k: usize) -> Parity {
        if k % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A variable reference resolved against a [`VarTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    Even(usize),
    Odd(usize),
}

impl Var {
    pub fn parity(self) -> Parity {
        match self {
            Var::Even(_) => Parity::Even,
            Var::Odd(_) => Parity::Odd,
        }
    }
}

/// Names of the even and odd generators of a free commutative superalgebra.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarTable {
    even: Vec<String>,
    odd: Vec<String>,
}

impl VarTable {
    pub fn new<S: Into<String>>(
        even: impl IntoIterator<Item = S>,
        odd: impl IntoIterator<Item = S>,
    ) -> Result<Arc<Self>> {
        let even: Vec<String> = even.into_iter().map(Into::into).collect();
        let odd: Vec<String> = odd.into_iter().map(Into::into).collect();
        if odd.len() > MAX_ODD_VARS {
            return Err(Error::TooManyOddVariables {
                max: MAX_ODD_VARS,
                got: odd.len(),
            });
        }
        let mut seen = HashSet::new();
        for name in even.iter().chain(odd.iter()) {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(Arc::new(VarTable { even, odd }))
    }

    /// Table with no variables; its polynomial ring is just the scalars.
    pub fn empty() -> Arc<Self> {
        Arc::new(VarTable {
            even: Vec::new(),
            odd: Vec::new(),
        })
    }

    pub fn n_even(&self) -> usize {
        self.even.len()
    }

    pub fn n_odd(&self) -> usize {
        self.odd.len()
    }

    pub fn even_names(&self) -> &[String] {
        &self.even
    }

    pub fn odd_names(&self) -> &[String] {
        &self.odd
    }

    pub fn lookup(&self, name: &str) -> Option<Var> {
        if let Some(i) = self.even.iter().position(|n| n == name) {
            return Some(Var::Even(i));
        }
        self.odd.iter().position(|n| n == name).map(Var::Odd)
    }

    pub fn name(&self, var: Var) -> &str {
        match var {
            Var::Even(i) => &self.even[i],
            Var::Odd(j) => &self.odd[j],
        }
    }

    /// Disjoint union: `self`'s variables first, then `other`'s.
    pub fn concat(&self, other: &VarTable) -> Result<Arc<Self>> {
        VarTable::new(
            self.even.iter().chain(other.even.iter()).cloned(),
            self.odd.iter().chain(other.odd.iter()).cloned(),
        )
    }

    /// The even variables only (the ambient ring of the reduced variety).
    pub fn even_part(&self) -> Arc<Self> {
        Arc::new(VarTable {
            even: self.even.clone(),
            odd: Vec::new(),
        })
    }
}

impl fmt::Debug for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarTable[{} | {}]", self.even.join(" "), self.odd.join(" "))
    }
}

pub(crate) fn same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

use std::fmt;

use num_traits::Zero;

use crate::scalar::Scalar;

/// A closed point of an affine supervariety: one coordinate per even
/// variable. Odd coordinates vanish in the residue field and are not stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ClosedPoint {
    coords: Vec<Scalar>,
}

impl ClosedPoint {
    pub fn new(coords: Vec<Scalar>) -> Self {
        ClosedPoint { coords }
    }

    pub fn origin(n_even: usize) -> Self {
        ClosedPoint {
            coords: vec![Scalar::zero(); n_even],
        }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        ClosedPoint {
            coords: coords.iter().map(|&c| Scalar::from_int(c)).collect(),
        }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn arity(&self) -> usize {
        self.coords.len()
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for ClosedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

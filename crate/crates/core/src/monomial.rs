//! Sign-normalized monomials `x^α · ξ_{i₁}⋯ξ_{i_k}` with `i₁ < … < i_k`.

use std::cmp::Ordering;

use crate::vars::{Parity, Var};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Box<[u32]>,
    odd: u64,
}

impl Monomial {
    pub fn one(n_even: usize) -> Self {
        Monomial {
            exps: vec![0; n_even].into_boxed_slice(),
            odd: 0,
        }
    }

    pub fn new(exps: Vec<u32>, odd_mask: u64) -> Self {
        Monomial {
            exps: exps.into_boxed_slice(),
            odd: odd_mask,
        }
    }

    pub fn var(var: Var, n_even: usize) -> Self {
        let mut m = Monomial::one(n_even);
        match var {
            Var::Even(i) => m.exps[i] = 1,
            Var::Odd(j) => m.odd = 1 << j,
        }
        m
    }

    pub fn even_exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn odd_mask(&self) -> u64 {
        self.odd
    }

    /// Odd variable indices in ascending order.
    pub fn odd_indices(&self) -> impl Iterator<Item = usize> + '_ {
        let mut mask = self.odd;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let j = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                Some(j)
            }
        })
    }

    pub fn odd_degree(&self) -> u32 {
        self.odd.count_ones()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum::<u32>() + self.odd_degree()
    }

    pub fn parity(&self) -> Parity {
        Parity::from_count(self.odd_degree() as usize)
    }

    pub fn is_one(&self) -> bool {
        self.odd == 0 && self.exps.iter().all(|&e| e == 0)
    }

    pub fn has_odd(&self) -> bool {
        self.odd != 0
    }

    /// Product `self · rhs`. Returns `None` when an odd variable repeats
    /// (the product vanishes), otherwise the monomial and whether the Koszul
    /// sign of reordering the odd factors is negative.
    pub fn mul(&self, rhs: &Monomial) -> Option<(Monomial, bool)> {
        if self.odd & rhs.odd != 0 {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .zip(rhs.exps.iter())
            .map(|(a, b)| a + b)
            .collect::<Vec<_>>()
            .into_boxed_slice();
        let negative = koszul_sign(self.odd, rhs.odd);
        Some((
            Monomial {
                exps,
                odd: self.odd | rhs.odd,
            },
            negative,
        ))
    }

    pub(crate) fn with_even_exponent(&self, i: usize, e: u32) -> Monomial {
        let mut m = self.clone();
        m.exps[i] = e;
        m
    }

    pub(crate) fn with_odd_mask(&self, mask: u64) -> Monomial {
        Monomial {
            exps: self.exps.clone(),
            odd: mask,
        }
    }
}

/// Parity of the permutation sorting `ξ_A · ξ_B` (both ascending, disjoint)
/// into ascending order: the number of pairs `a ∈ A, b ∈ B` with `a > b`.
pub(crate) fn koszul_sign(a: u64, b: u64) -> bool {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        let above = if j >= 63 { 0 } else { a >> (j + 1) };
        swaps += above.count_ones();
    }
    swaps % 2 == 1
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
            .then_with(|| self.odd.cmp(&other.odd))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials in `n_even | n_odd` variables of total degree exactly `d`.
pub fn monomials_of_degree(n_even: usize, n_odd: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n_odd) {
        let k = mask.count_ones();
        if k > d {
            continue;
        }
        let mut exps = vec![0u32; n_even];
        compositions(&mut exps, 0, d - k, &mut |e| {
            out.push(Monomial::new(e.to_vec(), mask));
        });
    }
    out.sort();
    out
}

/// All monomials of total degree `≤ d`, in ascending graded order.
pub fn monomials_up_to(n_even: usize, n_odd: usize, d: u32) -> Vec<Monomial> {
    (0..=d)
        .flat_map(|k| monomials_of_degree(n_even, n_odd, k))
        .collect()
}

fn compositions(exps: &mut [u32], pos: usize, remaining: u32, f: &mut impl FnMut(&[u32])) {
    if exps.is_empty() {
        if remaining == 0 {
            f(exps);
        }
        return;
    }
    if pos == exps.len() - 1 {
        exps[pos] = remaining;
        f(exps);
        exps[pos] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[pos] = e;
        compositions(exps, pos + 1, remaining - e, f);
    }
    exps[pos] = 0;
}

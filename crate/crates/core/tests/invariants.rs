//! Algebraic invariants checked on random inputs. Proptest drives a seed;
//! a ChaCha generator turns the seed into polynomials and supermatrices.

use std::sync::Arc;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use supersmooth::dsl::parse_expression;
use supersmooth::groups::{generic_berezinian, gl_presentation, sl_presentation};
use supersmooth::local::{free_model_hilbert, truncated_quotient};
use supersmooth::monomial::{monomials_up_to, Monomial};
use supersmooth::{
    partial_even, partial_odd, Parity, Scalar, SuperMatrix, SuperPolynomial, VarTable,
};

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn table() -> Arc<VarTable> {
    VarTable::new(names(&["x", "y"]), names(&["a", "b", "c"])).unwrap()
}

fn grassmann() -> Arc<VarTable> {
    VarTable::new(Vec::<String>::new(), names(&["t1", "t2", "t3", "t4"])).unwrap()
}

fn coefficient(rng: &mut ChaCha8Rng) -> Scalar {
    let re = Scalar::ratio(rng.gen_range(-4i64..=4), rng.gen_range(1i64..=3));
    if rng.gen_bool(0.25) {
        &re + &(&Scalar::ratio(rng.gen_range(-2i64..=2), 1) * &Scalar::i())
    } else {
        re
    }
}

fn poly(
    rng: &mut ChaCha8Rng,
    vars: &Arc<VarTable>,
    parity: Option<Parity>,
    min_deg: u32,
    max_deg: u32,
) -> SuperPolynomial {
    let pool: Vec<Monomial> = monomials_up_to(vars.n_even(), vars.n_odd(), max_deg)
        .into_iter()
        .filter(|m| m.degree() >= min_deg && parity.map_or(true, |p| m.parity() == p))
        .collect();
    if pool.is_empty() {
        return SuperPolynomial::zero(vars);
    }
    let k = rng.gen_range(0..=4).min(pool.len());
    let terms: Vec<(Monomial, Scalar)> = pool
        .choose_multiple(rng, k)
        .map(|m| (m.clone(), coefficient(rng)))
        .collect();
    SuperPolynomial::from_terms(vars, terms)
}

fn parity_of(rng: &mut ChaCha8Rng) -> Parity {
    if rng.gen_bool(0.5) {
        Parity::Even
    } else {
        Parity::Odd
    }
}

fn sign(p: Parity, q: Parity) -> Scalar {
    if p == Parity::Odd && q == Parity::Odd {
        Scalar::from_int(-1)
    } else {
        Scalar::from_int(1)
    }
}

/// Invertible `m|n` supermatrix over the Grassmann algebra: integer bodies,
/// nilpotent even corrections, odd off-diagonal blocks.
fn supermatrix(rng: &mut ChaCha8Rng, vars: &Arc<VarTable>, m: usize, n: usize) -> SuperMatrix {
    let body = |rng: &mut ChaCha8Rng, k: usize| loop {
        let b: Vec<Vec<i64>> = (0..k)
            .map(|_| (0..k).map(|_| rng.gen_range(-2i64..=2)).collect())
            .collect();
        let d = match k {
            0 => 1,
            1 => b[0][0],
            _ => b[0][0] * b[1][1] - b[0][1] * b[1][0],
        };
        if d != 0 {
            return b;
        }
    };
    let p0 = body(rng, m);
    let s0 = body(rng, n);
    let size = m + n;
    let entries = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| match (i < m, j < m) {
                    (true, true) => {
                        &SuperPolynomial::constant(vars, Scalar::from_int(p0[i][j]))
                            + &poly(rng, vars, Some(Parity::Even), 2, 4)
                    }
                    (false, false) => {
                        &SuperPolynomial::constant(vars, Scalar::from_int(s0[i - m][j - m]))
                            + &poly(rng, vars, Some(Parity::Even), 2, 4)
                    }
                    _ => poly(rng, vars, Some(Parity::Odd), 1, 3),
                })
                .collect()
        })
        .collect();
    SuperMatrix::new(vars, m, n, entries).unwrap()
}

fn dims() -> impl Strategy<Value = (usize, usize)> {
    prop_oneof![Just((1, 1)), Just((2, 1)), Just((1, 2))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let vars = table();
        let f = poly(&mut rng, &vars, None, 0, 3);
        let g = poly(&mut rng, &vars, None, 0, 3);
        let h = poly(&mut rng, &vars, None, 0, 3);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        prop_assert_eq!(&f * &SuperPolynomial::one(&vars), f);
    }

    #[test]
    fn supercommutativity(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let vars = table();
        let (p, q) = (parity_of(&mut rng), parity_of(&mut rng));
        let f = poly(&mut rng, &vars, Some(p), 0, 3);
        let g = poly(&mut rng, &vars, Some(q), 0, 3);
        prop_assert_eq!(&f * &g, (&g * &f).scale(&sign(p, q)));
        if p == Parity::Odd {
            prop_assert!((&f * &f).is_zero());
        }
    }

    #[test]
    fn derivatives_obey_the_graded_leibniz_rule(seed in any::<u64>(), i in 0usize..2, j in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let vars = table();
        let p = parity_of(&mut rng);
        let f = poly(&mut rng, &vars, Some(p), 0, 3);
        let g = poly(&mut rng, &vars, None, 0, 3);
        let fg = &f * &g;

        let lhs = partial_even(&fg, i).unwrap();
        let rhs = &(&partial_even(&f, i).unwrap() * &g) + &(&f * &partial_even(&g, i).unwrap());
        prop_assert_eq!(lhs, rhs);

        let lhs = partial_odd(&fg, j).unwrap();
        let rhs = &(&partial_odd(&f, j).unwrap() * &g)
            + &(&f * &partial_odd(&g, j).unwrap()).scale(&sign(p, Parity::Odd));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn printed_polynomials_parse_back(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let vars = table();
        let f = poly(&mut rng, &vars, None, 0, 4);
        let back = parse_expression(&f.to_string(), &vars).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn berezinian_is_multiplicative(seed in any::<u64>(), (m, n) in dims()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let vars = grassmann();
        let a = supermatrix(&mut rng, &vars, m, n);
        let b = supermatrix(&mut rng, &vars, m, n);
        let ab = a.matmul(&b).unwrap();
        prop_assert_eq!(
            ab.berezinian().unwrap(),
            &a.berezinian().unwrap() * &b.berezinian().unwrap()
        );
    }

    #[test]
    fn inverse_is_two_sided(seed in any::<u64>(), (m, n) in dims()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let vars = grassmann();
        let a = supermatrix(&mut rng, &vars, m, n);
        let inv = a.inverse().unwrap();
        let id = SuperMatrix::identity(&vars, m, n);
        let (left, right) = (a.matmul(&inv).unwrap(), inv.matmul(&a).unwrap());
        prop_assert_eq!(left.entries(), id.entries());
        prop_assert_eq!(right.entries(), id.entries());
        prop_assert_eq!(
            &a.berezinian().unwrap() * &inv.berezinian().unwrap(),
            SuperPolynomial::one(&vars)
        );
    }

    #[test]
    fn generic_berezinian_specializes(seed in any::<u64>(), (m, n) in dims()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let vars = grassmann();
        let a = supermatrix(&mut rng, &vars, m, n);
        let gl = gl_presentation(m, n).unwrap();
        let generic = generic_berezinian(m, n).unwrap();

        // `z` and `w` are the inverse determinants of the diagonal blocks,
        // obtained as Berezinians of purely odd-sized matrices.
        let z = SuperMatrix::new(&vars, 0, n, a.s()).unwrap().berezinian().unwrap();
        let w = SuperMatrix::new(&vars, 0, m, a.p()).unwrap().berezinian().unwrap();
        let entry = |name: &str| -> SuperPolynomial {
            let (prefix, digits) = name.split_at(name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len()));
            let idx: Vec<usize> = digits.chars().map(|c| c.to_digit(10).unwrap() as usize - 1).collect();
            match prefix {
                "x" => a.entry(idx[0], idx[1]).clone(),
                "y" => a.entry(m + idx[0], m + idx[1]).clone(),
                "xi" => a.entry(idx[0], m + idx[1]).clone(),
                "ga" => a.entry(m + idx[0], idx[1]).clone(),
                "z" => z.clone(),
                "w" => w.clone(),
                other => panic!("unexpected variable {other}"),
            }
        };
        let (even_names, odd_names) = (gl.vars().even_names(), gl.vars().odd_names());
        let even: Vec<SuperPolynomial> = even_names.iter().map(|s| entry(s)).collect();
        let odd: Vec<SuperPolynomial> = odd_names.iter().map(|s| entry(s)).collect();
        let specialized = generic.substitute(&vars, &even, &odd).unwrap();
        prop_assert_eq!(specialized, a.berezinian().unwrap());
    }
}

#[test]
fn group_hilbert_functions_match_the_free_model() {
    for g in [gl_presentation(1, 1).unwrap(), sl_presentation(1, 1).unwrap()] {
        let d = g.lie_superdim().unwrap();
        let ring = truncated_quotient(g.base(), g.identity(), 4).unwrap();
        for k in 0..=4 {
            assert_eq!(
                ring.hilbert_split(k).unwrap().total() as u64,
                free_model_hilbert(d.even, d.odd, k),
                "{} degree {k}",
                g.name()
            );
        }
    }
}

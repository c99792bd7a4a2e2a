#![allow(dead_code)]

use apolar::catalecticant::is_compressed_level;
use apolar::monomial::monomials_of_degree;
use apolar::{DualPolynomial, Rational};
use proptest::prelude::*;
use rand::Rng;

pub fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

pub fn dual(n: usize, text: &str) -> DualPolynomial {
    DualPolynomial::parse(n, text).unwrap()
}

/// Random form of degree `d`; each monomial is kept with probability
/// `density` and gets a coefficient in -3..=3.
pub fn random_form<R: Rng>(rng: &mut R, n: usize, d: usize, density: f64) -> DualPolynomial {
    let mut terms = Vec::new();
    for e in monomials_of_degree(n, d) {
        if rng.gen_bool(density) {
            terms.push((e, q(rng.gen_range(-3..=3))));
        }
    }
    DualPolynomial::from_terms(n, terms).unwrap()
}

pub fn random_nonzero_form<R: Rng>(rng: &mut R, n: usize, d: usize, density: f64) -> DualPolynomial {
    loop {
        let g = random_form(rng, n, d, density);
        if !g.is_zero() {
            return g;
        }
    }
}

/// `t` dense forms of degree `s` whose leading algebra is compressed level.
pub fn compressed_level_forms<R: Rng>(rng: &mut R, n: usize, s: usize, t: usize) -> Vec<DualPolynomial> {
    loop {
        let forms: Vec<DualPolynomial> = (0..t).map(|_| random_form(rng, n, s, 1.0)).collect();
        if forms.iter().all(|g| !g.is_zero()) && is_compressed_level(&forms).unwrap_or(false) {
            return forms;
        }
    }
}

/// Adds random dense components of every degree in `degrees`.
pub fn with_tail<R: Rng>(rng: &mut R, g: &DualPolynomial, degrees: std::ops::Range<usize>) -> DualPolynomial {
    let n = g.num_vars();
    degrees.fold(g.clone(), |acc, d| acc.add(&random_form(rng, n, d, 1.0)))
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-3i64..=3).prop_map(q)
}

/// Strategy for a nonzero form of degree `d` in `n` variables.
pub fn form(n: usize, d: usize) -> impl Strategy<Value = DualPolynomial> {
    let basis = monomials_of_degree(n, d);
    proptest::collection::vec(small_rational(), basis.len())
        .prop_map(move |c| DualPolynomial::from_terms(n, basis.clone().into_iter().zip(c)).unwrap())
        .prop_filter("nonzero", |g| !g.is_zero())
}

/// `(n, s)` with `n` in 1..=3 and `s` in 1..=5, followed by a form.
pub fn any_form() -> impl Strategy<Value = (usize, usize, DualPolynomial)> {
    (1usize..=3, 1usize..=5).prop_flat_map(|(n, s)| (Just(n), Just(s), form(n, s)))
}

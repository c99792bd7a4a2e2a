//! Exponent vectors and the deg-lex enumeration shared by every matrix in the
//! crate.
//!
//! Within a fixed degree, monomials are listed from the deg-lex largest down
//! (with `x1 > x2 > ... > xn`), so in two variables the degree-2 block reads
//! `x1^2, x1*x2, x2^2`. Across degrees the basis of `R/M^{s+1}` is listed
//! degree-ascending. All row and column labels come from here.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

/// Multi-index `(a1, ..., an)` of a monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(parts: Vec<u32>) -> Self {
        Exponent(parts)
    }

    pub fn zero(num_vars: usize) -> Self {
        Exponent(vec![0; num_vars])
    }

    /// The unit vector `delta_i` (0-based `i`).
    pub fn unit(num_vars: usize, i: usize) -> Self {
        let mut parts = vec![0; num_vars];
        parts[i] = 1;
        Exponent(parts)
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` when every part stays nonnegative.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Exponent)
    }

    /// `self + delta_j - delta_i` style adjustments; `None` if a part would
    /// go negative.
    pub fn shifted(&self, plus: &Exponent, minus: &Exponent) -> Option<Exponent> {
        self.add(plus).checked_sub(minus)
    }

    /// `alpha!` = product of the factorials of the parts.
    pub fn factorial(&self) -> BigInt {
        self.0
            .iter()
            .fold(BigInt::one(), |acc, &a| acc * factorial(a))
    }

    /// `self! / (self - alpha)!`, assuming `alpha <= self` componentwise.
    pub fn falling_factorial(&self, alpha: &Exponent) -> BigInt {
        let mut acc = BigInt::one();
        for (&b, &a) in self.0.iter().zip(&alpha.0) {
            for k in (b - a + 1)..=b {
                acc *= k;
            }
        }
        acc
    }

    /// Position of this exponent inside its own degree block.
    pub fn index_in_degree(&self) -> usize {
        let n = self.0.len();
        let mut remaining = self.degree();
        let mut index = 0;
        for (i, &a) in self.0.iter().enumerate() {
            if i + 1 == n {
                break;
            }
            let a = a as usize;
            for v in (a + 1)..=remaining {
                index += monomial_count(n - i - 1, remaining - v);
            }
            remaining -= a;
        }
        index
    }

    /// Position of this exponent in the degree-ascending basis of
    /// `R/M^{s+1}` (independent of `s`).
    pub fn basis_index(&self) -> usize {
        let n = self.0.len();
        (0..self.degree()).map(|d| monomial_count(n, d)).sum::<usize>() + self.index_in_degree()
    }
}

impl Ord for Exponent {
    /// Deg-lex: total degree first, then lexicographic with `x1` largest.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn factorial(k: u32) -> BigInt {
    (2..=k).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of monomials of degree `d` in `n` variables, `binom(n-1+d, n-1)`.
pub fn monomial_count(n: usize, d: usize) -> usize {
    if n == 0 {
        return usize::from(d == 0);
    }
    binomial(n - 1 + d, n - 1)
}

/// Number of monomials of degree at most `s`, `binom(n+s, s)`.
pub fn monomial_count_up_to(n: usize, s: usize) -> usize {
    binomial(n + s, s)
}

/// All exponents of degree `d` in basis order.
pub fn monomials_of_degree(n: usize, d: usize) -> Vec<Exponent> {
    let mut out = Vec::with_capacity(monomial_count(n, d));
    let mut current = vec![0u32; n];
    fill(&mut out, &mut current, 0, d);
    out
}

fn fill(out: &mut Vec<Exponent>, current: &mut Vec<u32>, pos: usize, remaining: usize) {
    let n = current.len();
    if n == 0 {
        if remaining == 0 {
            out.push(Exponent(Vec::new()));
        }
        return;
    }
    if pos + 1 == n {
        current[pos] = remaining as u32;
        out.push(Exponent(current.clone()));
        current[pos] = 0;
        return;
    }
    for v in (0..=remaining).rev() {
        current[pos] = v as u32;
        fill(out, current, pos + 1, remaining - v);
    }
    current[pos] = 0;
}

/// All exponents of degree at most `s`, degree-ascending, each block in
/// basis order. This is the basis Omega of `R/M^{s+1}`.
pub fn monomials_up_to(n: usize, s: usize) -> Vec<Exponent> {
    (0..=s).flat_map(|d| monomials_of_degree(n, d)).collect()
}

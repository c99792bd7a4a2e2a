//! Dual polynomials, truncated power series and the contraction action.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::Rational;
use crate::monomial::{monomial_count, monomials_of_degree, Exponent};
use crate::parse::{self, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableMismatch { expected: usize, found: usize },
    #[error("polynomial is not homogeneous of degree {degree}")]
    NotHomogeneous { degree: usize },
    #[error("coordinate vector has length {found}, expected {expected}")]
    CoordinateLength { expected: usize, found: usize },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

type Terms = BTreeMap<Exponent, Rational>;

fn add_term(terms: &mut Terms, exp: Exponent, coef: Rational) {
    if coef.is_zero() {
        return;
    }
    let slot = terms.entry(exp.clone()).or_insert_with(Rational::zero);
    *slot += coef;
    if slot.is_zero() {
        terms.remove(&exp);
    }
}

fn check_vars(expected: usize, found: usize) -> Result<(), PolyError> {
    if expected != found {
        return Err(PolyError::VariableMismatch { expected, found });
    }
    Ok(())
}

/// Writes terms highest first: degree-descending, each degree in basis order.
fn write_terms(f: &mut fmt::Formatter<'_>, terms: &Terms, var: char) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (exp, coef)) in terms.iter().rev().enumerate() {
        let negative = coef.is_negative();
        let magnitude = coef.abs();
        match (i, negative) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let vars: Vec<String> = exp
            .parts()
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(k, &a)| {
                if a == 1 {
                    format!("{var}{}", k + 1)
                } else {
                    format!("{var}{}^{a}", k + 1)
                }
            })
            .collect();
        if vars.is_empty() {
            write!(f, "{magnitude}")?;
        } else if magnitude.is_one() {
            write!(f, "{}", vars.join("*"))?;
        } else {
            write!(f, "{magnitude}*{}", vars.join("*"))?;
        }
    }
    Ok(())
}

/// Element of the divided-power side `P = K[y1..yn]`, stored in the plain
/// monomial basis `y^a`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualPolynomial {
    num_vars: usize,
    terms: Terms,
}

impl DualPolynomial {
    pub fn zero(num_vars: usize) -> Self {
        Self {
            num_vars,
            terms: Terms::new(),
        }
    }

    pub fn monomial(exp: Exponent, coef: Rational) -> Self {
        let mut p = Self::zero(exp.num_vars());
        add_term(&mut p.terms, exp, coef);
        p
    }

    pub fn from_terms<I>(num_vars: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut p = Self::zero(num_vars);
        for (exp, coef) in terms {
            check_vars(num_vars, exp.num_vars())?;
            add_term(&mut p.terms, exp, coef);
        }
        Ok(p)
    }

    /// Parses the `y1^3*y2^2 + y2^4` grammar.
    pub fn parse(num_vars: usize, text: &str) -> Result<Self, PolyError> {
        let terms = parse::parse_terms(text, 'y', num_vars)?;
        Self::from_terms(num_vars, terms)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest term degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Exponent::degree).max()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &Exponent) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// The degree-`j` homogeneous component `g[j]`.
    pub fn homogeneous_component(&self, j: usize) -> Self {
        Self {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() == j)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Top-degree component; zero for the zero polynomial.
    pub fn leading_form(&self) -> Self {
        match self.degree() {
            Some(d) => self.homogeneous_component(d),
            None => self.clone(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Exponent::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            add_term(&mut out.terms, e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.num_vars);
        }
        Self {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }

    /// Coordinates of a degree-`d` form in the dual basis
    /// `(x^a)* = y^a / a!`: the entry at `a` is `a! * coeff(y^a)`.
    pub fn omega_star_coordinates(&self, d: usize) -> Result<Vec<Rational>, PolyError> {
        if self.terms.keys().any(|e| e.degree() != d) {
            return Err(PolyError::NotHomogeneous { degree: d });
        }
        Ok(monomials_of_degree(self.num_vars, d)
            .into_iter()
            .map(|a| {
                let c = self.coefficient(&a);
                if c.is_zero() {
                    c
                } else {
                    c * Rational::from_integer(a.factorial())
                }
            })
            .collect())
    }

    /// Inverse of [`omega_star_coordinates`](Self::omega_star_coordinates).
    pub fn from_omega_star(num_vars: usize, d: usize, coords: &[Rational]) -> Result<Self, PolyError> {
        let basis = monomials_of_degree(num_vars, d);
        if coords.len() != basis.len() {
            return Err(PolyError::CoordinateLength {
                expected: basis.len(),
                found: coords.len(),
            });
        }
        let mut p = Self::zero(num_vars);
        for (a, b) in basis.into_iter().zip(coords) {
            if !b.is_zero() {
                let f = Rational::from_integer(a.factorial());
                add_term(&mut p.terms, a, b / f);
            }
        }
        Ok(p)
    }

    /// Plain coefficients of the degree-`d` component in basis order.
    pub fn degree_coefficients(&self, d: usize) -> Vec<Rational> {
        monomials_of_degree(self.num_vars, d)
            .iter()
            .map(|a| self.coefficient(a))
            .collect()
    }

    pub fn from_degree_coefficients(num_vars: usize, d: usize, coeffs: &[Rational]) -> Self {
        debug_assert_eq!(coeffs.len(), monomial_count(num_vars, d));
        let mut p = Self::zero(num_vars);
        for (a, c) in monomials_of_degree(num_vars, d).into_iter().zip(coeffs) {
            add_term(&mut p.terms, a, c.clone());
        }
        p
    }
}

impl fmt::Display for DualPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, 'y')
    }
}

/// Element of `R / M^{order+1}` with `R = K[[x1..xn]]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JetPolynomial {
    num_vars: usize,
    order: usize,
    terms: Terms,
}

impl JetPolynomial {
    pub fn zero(num_vars: usize, order: usize) -> Self {
        Self {
            num_vars,
            order,
            terms: Terms::new(),
        }
    }

    pub fn one(num_vars: usize, order: usize) -> Self {
        Self::monomial(order, Exponent::zero(num_vars), Rational::one())
    }

    /// The variable `x_{i+1}`.
    pub fn variable(num_vars: usize, order: usize, i: usize) -> Self {
        Self::monomial(order, Exponent::unit(num_vars, i), Rational::one())
    }

    /// A single term; dropped if its degree exceeds `order`.
    pub fn monomial(order: usize, exp: Exponent, coef: Rational) -> Self {
        let mut p = Self::zero(exp.num_vars(), order);
        if exp.degree() <= order {
            add_term(&mut p.terms, exp, coef);
        }
        p
    }

    pub fn from_terms<I>(num_vars: usize, order: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut p = Self::zero(num_vars, order);
        for (exp, coef) in terms {
            check_vars(num_vars, exp.num_vars())?;
            if exp.degree() <= order {
                add_term(&mut p.terms, exp, coef);
            }
        }
        Ok(p)
    }

    pub fn parse(num_vars: usize, order: usize, text: &str) -> Result<Self, PolyError> {
        let terms = parse::parse_terms(text, 'x', num_vars)?;
        Self::from_terms(num_vars, order, terms)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Exponent::degree).max()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &Exponent) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Exponent::zero(self.num_vars))
    }

    pub fn homogeneous_component(&self, j: usize) -> Self {
        Self {
            num_vars: self.num_vars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() == j)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Same element viewed in `R / M^{order+1}` (terms above `order` drop).
    pub fn with_order(&self, order: usize) -> Self {
        Self {
            num_vars: self.num_vars,
            order,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() <= order)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
        let order = self.order.min(other.order);
        let mut out = self.with_order(order);
        for (e, c) in &other.terms {
            if e.degree() <= order {
                add_term(&mut out.terms, e.clone(), c.clone());
            }
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.num_vars, self.order);
        }
        Self {
            num_vars: self.num_vars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
        let order = self.order.min(other.order);
        let mut out = Self::zero(self.num_vars, order);
        for (a, ca) in &self.terms {
            let da = a.degree();
            for (b, cb) in &other.terms {
                if da + b.degree() <= order {
                    add_term(&mut out.terms, a.add(b), ca * cb);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.num_vars, self.order);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `self(images[0], ..., images[n-1])`, truncated at the images' order.
    pub fn substitute(&self, images: &[JetPolynomial]) -> Result<Self, PolyError> {
        check_vars(self.num_vars, images.len())?;
        let target_vars = images.first().map_or(self.num_vars, |p| p.num_vars);
        let order = images.iter().map(|p| p.order).min().unwrap_or(self.order);
        let mut out = Self::zero(target_vars, order);
        for (exp, coef) in &self.terms {
            let mut term = Self::monomial(order, Exponent::zero(target_vars), coef.clone());
            for (img, &a) in images.iter().zip(exp.parts()) {
                if a > 0 {
                    term = term.mul(&img.pow(a));
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }
}

impl fmt::Display for JetPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, 'x')
    }
}

/// `x^alpha ∘ g`: differentiate `g` by `alpha`.
pub fn contract_monomial(alpha: &Exponent, g: &DualPolynomial) -> DualPolynomial {
    let mut out = DualPolynomial::zero(g.num_vars);
    for (beta, coef) in &g.terms {
        if let Some(rest) = beta.checked_sub(alpha) {
            let factor = Rational::from_integer(beta.falling_factorial(alpha));
            add_term(&mut out.terms, rest, coef * factor);
        }
    }
    out
}

/// The contraction action `f ∘ g = f(∂/∂y1, ..., ∂/∂yn) g`.
pub fn contract(f: &JetPolynomial, g: &DualPolynomial) -> Result<DualPolynomial, PolyError> {
    check_vars(g.num_vars, f.num_vars)?;
    let mut out = DualPolynomial::zero(g.num_vars);
    for (alpha, fc) in &f.terms {
        for (beta, gc) in &g.terms {
            if let Some(rest) = beta.checked_sub(alpha) {
                let factor = Rational::from_integer(beta.falling_factorial(alpha));
                add_term(&mut out.terms, rest, fc * gc * factor);
            }
        }
    }
    Ok(out)
}

/// The pairing `<f, g>`: constant term of `f ∘ g`.
pub fn pairing(f: &JetPolynomial, g: &DualPolynomial) -> Result<Rational, PolyError> {
    check_vars(g.num_vars, f.num_vars)?;
    Ok(f.terms
        .iter()
        .filter_map(|(a, fc)| {
            g.terms
                .get(a)
                .map(|gc| fc * gc * Rational::from_integer(a.factorial()))
        })
        .fold(Rational::zero(), |acc, v| acc + v))
}

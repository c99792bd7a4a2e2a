//! Automorphisms of `R / M^{s+1}` given by the images of the variables,
//! their matrices in the monomial basis and the dual action on `P_{<=s}`.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{Matrix, Rational};
use crate::monomial::{monomial_count, monomial_count_up_to, monomials_of_degree, monomials_up_to, Exponent};
use crate::poly::{DualPolynomial, JetPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomorphismError {
    #[error("coefficient vector has length {found}, expected {expected}")]
    CoefficientLength { expected: usize, found: usize },
    #[error("perturbation order {p} must lie in 1..={s}")]
    OrderOutOfRange { p: usize, s: usize },
    #[error("linear part is singular")]
    SingularLinearPart,
    #[error("image of x{index} has a nonzero constant term")]
    ConstantTerm { index: usize },
    #[error("expected {expected} images, found {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("polynomial of degree {degree} exceeds truncation order {order}")]
    DegreeOverflow { degree: usize, order: usize },
    #[error("automorphisms do not match: ({n1}, {s1}) vs ({n2}, {s2})")]
    ShapeMismatch { n1: usize, s1: usize, n2: usize, s2: usize },
}

/// `x_j ↦ images[j]`, extended multiplicatively and truncated at degree `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedAutomorphism {
    num_vars: usize,
    order: usize,
    images: Vec<JetPolynomial>,
}

impl TruncatedAutomorphism {
    pub fn new(num_vars: usize, order: usize, images: Vec<JetPolynomial>) -> Result<Self, AutomorphismError> {
        if images.len() != num_vars {
            return Err(AutomorphismError::ImageCount {
                expected: num_vars,
                found: images.len(),
            });
        }
        let images: Vec<JetPolynomial> = images.into_iter().map(|p| p.with_order(order)).collect();
        for (index, img) in images.iter().enumerate() {
            if !img.constant_term().is_zero() {
                return Err(AutomorphismError::ConstantTerm { index: index + 1 });
            }
        }
        let phi = Self {
            num_vars,
            order,
            images,
        };
        if phi.jacobian().rank() < num_vars {
            return Err(AutomorphismError::SingularLinearPart);
        }
        Ok(phi)
    }

    pub fn identity(num_vars: usize, order: usize) -> Self {
        Self {
            num_vars,
            order,
            images: (0..num_vars).map(|i| JetPolynomial::variable(num_vars, order, i)).collect(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn images(&self) -> &[JetPolynomial] {
        &self.images
    }

    /// Linear parts: entry `(i, j)` is the coefficient of `x_i` in the image
    /// of `x_j`.
    pub fn jacobian(&self) -> Matrix {
        let columns: Vec<Vec<Rational>> = self
            .images
            .iter()
            .map(|img| {
                (0..self.num_vars)
                    .map(|i| img.coefficient(&Exponent::unit(self.num_vars, i)))
                    .collect()
            })
            .collect();
        Matrix::from_columns(self.num_vars, &columns).expect("one column per variable")
    }

    /// `φ(f)`.
    pub fn apply(&self, f: &JetPolynomial) -> JetPolynomial {
        f.with_order(self.order)
            .substitute(&self.images)
            .expect("image count equals the variable count")
    }

    /// Substitutes `other` into the images of `self`: the result sends `x_j`
    /// to `images[j](other(x_1), ..., other(x_n))`, i.e. applies `self` first
    /// and `other` second. Then `matrix_of(self.compose(other)) =
    /// matrix_of(other) * matrix_of(self)`.
    pub fn compose(&self, other: &Self) -> Result<Self, AutomorphismError> {
        if self.num_vars != other.num_vars || self.order != other.order {
            return Err(AutomorphismError::ShapeMismatch {
                n1: self.num_vars,
                s1: self.order,
                n2: other.num_vars,
                s2: other.order,
            });
        }
        let images = self.images.iter().map(|img| other.apply(img)).collect();
        Self::new(self.num_vars, self.order, images)
    }
}

/// Number of perturbation coefficients of `φ_{s-p}`: `n * binom(n+p, n-1)`.
pub fn coefficient_count(n: usize, p: usize) -> usize {
    n * monomial_count(n, p + 1)
}

/// `x_j ↦ x_j + sum_{|i| = p+1} a^j_i x^i`. The vector lists `a^1` in basis
/// order, then `a^2`, and so on.
pub fn make_phi(n: usize, s: usize, p: usize, a: &[Rational]) -> Result<TruncatedAutomorphism, AutomorphismError> {
    if p < 1 || p > s {
        return Err(AutomorphismError::OrderOutOfRange { p, s });
    }
    let expected = coefficient_count(n, p);
    if a.len() != expected {
        return Err(AutomorphismError::CoefficientLength {
            expected,
            found: a.len(),
        });
    }
    let perturbation = monomials_of_degree(n, p + 1);
    let images = (0..n)
        .map(|j| {
            let coeffs = &a[j * perturbation.len()..(j + 1) * perturbation.len()];
            let mut img = JetPolynomial::variable(n, s, j);
            for (i, c) in perturbation.iter().zip(coeffs) {
                if !c.is_zero() {
                    img = img.add(&JetPolynomial::monomial(s, i.clone(), c.clone()));
                }
            }
            img
        })
        .collect();
    Ok(TruncatedAutomorphism {
        num_vars: n,
        order: s,
        images,
    })
}

/// `M(φ)`: the column of `x^b` holds the coefficients of `φ(x^b)` over the
/// basis of monomials of degree at most `s`, degree-ascending.
pub fn matrix_of(phi: &TruncatedAutomorphism) -> Result<Matrix, AutomorphismError> {
    if phi.jacobian().rank() < phi.num_vars {
        return Err(AutomorphismError::SingularLinearPart);
    }
    let n = phi.num_vars;
    let basis = monomials_up_to(n, phi.order);
    let columns: Vec<Vec<Rational>> = basis
        .iter()
        .map(|b| {
            let img = phi.apply(&JetPolynomial::monomial(phi.order, b.clone(), Rational::one()));
            basis.iter().map(|e| img.coefficient(e)).collect()
        })
        .collect();
    Ok(Matrix::from_columns(basis.len(), &columns).expect("square by construction"))
}

/// Row offset of the degree-`d` block inside `M(φ)`.
pub fn block_offset(n: usize, d: usize) -> usize {
    if d == 0 {
        0
    } else {
        monomial_count_up_to(n, d - 1)
    }
}

/// `B_{s,s-p}` from its entry formula: rows `L` with `|L| = s`, columns `W`
/// with `|W| = s-p`, entry `sum_{W - δ_j + i = L} w_j a^j_i`.
pub fn b_block(n: usize, s: usize, p: usize, a: &[Rational]) -> Result<Matrix, AutomorphismError> {
    if p < 1 || p > s {
        return Err(AutomorphismError::OrderOutOfRange { p, s });
    }
    let expected = coefficient_count(n, p);
    if a.len() != expected {
        return Err(AutomorphismError::CoefficientLength {
            expected,
            found: a.len(),
        });
    }
    let rows = monomials_of_degree(n, s);
    let cols = monomials_of_degree(n, s - p);
    let perturbation = monomials_of_degree(n, p + 1);
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (c, w) in cols.iter().enumerate() {
        for j in 0..n {
            let wj = w.get(j);
            if wj == 0 {
                continue;
            }
            let lowered = w.checked_sub(&Exponent::unit(n, j)).expect("w_j > 0");
            for (k, i) in perturbation.iter().enumerate() {
                let coef = &a[j * perturbation.len() + k];
                if coef.is_zero() {
                    continue;
                }
                let l = lowered.add(i);
                let r = l.index_in_degree();
                let value = m.get(r, c) + coef * Rational::from_integer(wj.into());
                m.set(r, c, value);
            }
        }
    }
    Ok(m)
}

/// The dual action: `F` with `<w, F> = <φ(w), g>` for every monomial `w` of
/// degree at most `s`; in dual-basis coordinates `[F] = [g] · M(φ)`.
pub fn dual_apply(phi: &TruncatedAutomorphism, g: &DualPolynomial) -> Result<DualPolynomial, AutomorphismError> {
    let mut out = dual_apply_all(phi, std::slice::from_ref(g))?;
    Ok(out.pop().expect("one input, one output"))
}

/// [`dual_apply`] over a list, building `M(φ)` once.
pub fn dual_apply_all(phi: &TruncatedAutomorphism, gs: &[DualPolynomial]) -> Result<Vec<DualPolynomial>, AutomorphismError> {
    let s = phi.order;
    for g in gs {
        if let Some(d) = g.degree() {
            if d > s {
                return Err(AutomorphismError::DegreeOverflow { degree: d, order: s });
            }
        }
    }
    let m = matrix_of(phi)?;
    let basis = monomials_up_to(phi.num_vars, s);
    let factorials: Vec<Rational> = basis.iter().map(|a| Rational::from_integer(a.factorial())).collect();
    Ok(gs
        .iter()
        .map(|g| {
            let coords: Vec<Rational> = basis.iter().zip(&factorials).map(|(a, f)| g.coefficient(a) * f).collect();
            let image = m.vec_mul(&coords).expect("coordinate length matches");
            DualPolynomial::from_terms(
                phi.num_vars,
                basis
                    .iter()
                    .zip(image)
                    .zip(&factorials)
                    .filter(|((_, c), _)| !c.is_zero())
                    .map(|((a, c), f)| (a.clone(), c / f)),
            )
            .expect("exponents share the variable count")
        })
        .collect())
}

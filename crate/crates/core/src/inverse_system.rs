//! Artin algebras `A = R / Ann(G_1, ..., G_t)` given by dual generators:
//! annihilators, Hilbert function, socle type and compressedness.
//!
//! `A` is handled as a finite-dimensional vector space. The pairing identifies
//! `A` with the dual of the module `M` generated by the `G_r`: a truncated
//! series `f` maps to the vector `(<f, m_k>)_k` over a basis `m_k` of `M`, and
//! the kernel of that map is `I` modulo `M^{s+1}`.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::catalecticant::{compressed_hf, CatalecticantError, HilbertFunction};
use crate::dual_module::DualModule;
use crate::linalg::{rank_of_vectors, Matrix, Rational};
use crate::monomial::{monomial_count_up_to, monomials_of_degree, monomials_up_to, Exponent};
use crate::poly::{contract_monomial, DualPolynomial, JetPolynomial, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("no generators given")]
    NoGenerators,
    #[error("generator {index} is zero")]
    ZeroGenerator { index: usize },
    #[error("generator {index} has {found} variables, expected {expected}")]
    VariableMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("leading forms are linearly dependent (relation {})", join_rationals(relation))]
    DependentLeadingForms {
        /// Coefficients `c_r` with `sum c_r G_r[d_r] = 0`, rendered exactly.
        relation: Vec<Rational>,
    },
    #[error("degree {degree} out of range {min}..={max}")]
    DegreeOutOfRange {
        degree: usize,
        min: usize,
        max: usize,
    },
    #[error(transparent)]
    Catalecticant(#[from] CatalecticantError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn join_rationals(v: &[Rational]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Dual generators `G_1..G_t` of an Artin algebra in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    num_vars: usize,
    generators: Vec<DualPolynomial>,
}

impl AlgebraPresentation {
    /// Builds a presentation; checks variable counts and nonzero generators
    /// but not the independence of leading forms (see
    /// [`macaulay_validate`]).
    pub fn new(num_vars: usize, generators: Vec<DualPolynomial>) -> Result<Self, PresentationError> {
        if generators.is_empty() {
            return Err(PresentationError::NoGenerators);
        }
        for (index, g) in generators.iter().enumerate() {
            if g.num_vars() != num_vars {
                return Err(PresentationError::VariableMismatch {
                    index,
                    expected: num_vars,
                    found: g.num_vars(),
                });
            }
            if g.is_zero() {
                return Err(PresentationError::ZeroGenerator { index });
            }
        }
        Ok(Self {
            num_vars,
            generators,
        })
    }

    pub fn parse<S: AsRef<str>>(num_vars: usize, generators: &[S]) -> Result<Self, PresentationError> {
        let gens = generators
            .iter()
            .map(|g| DualPolynomial::parse(num_vars, g.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(num_vars, gens)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[DualPolynomial] {
        &self.generators
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.generators
            .iter()
            .map(|g| g.degree().expect("generators are nonzero"))
            .collect()
    }

    pub fn socle_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn leading_forms(&self) -> Vec<DualPolynomial> {
        self.generators.iter().map(DualPolynomial::leading_form).collect()
    }

    /// Presentation by the leading forms alone (the dual generators of the
    /// associated graded ring when `A` is compressed).
    pub fn leading_presentation(&self) -> Self {
        Self {
            num_vars: self.num_vars,
            generators: self.leading_forms(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(DualPolynomial::is_homogeneous)
    }

    pub fn module(&self) -> DualModule {
        DualModule::generate(self.num_vars, &self.generators)
    }
}

impl fmt::Display for AlgebraPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// `(e_0, ..., e_s)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SocleType(pub Vec<usize>);

impl SocleType {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `t = dim Soc(A)`.
    pub fn type_number(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_level(&self) -> bool {
        self.0.iter().rev().skip(1).all(|&e| e == 0)
    }
}

impl fmt::Display for SocleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Leading forms `G_r[d_r]` must be linearly independent.
pub fn macaulay_validate(pres: &AlgebraPresentation) -> Result<(), PresentationError> {
    let n = pres.num_vars;
    let s = pres.socle_degree();
    let basis = monomials_up_to(n, s);
    let columns: Vec<Vec<Rational>> = pres
        .leading_forms()
        .iter()
        .map(|g| basis.iter().map(|e| g.coefficient(e)).collect())
        .collect();
    let stack = Matrix::from_columns(basis.len(), &columns).expect("columns share the basis length");
    match stack.kernel_basis().into_iter().next() {
        None => Ok(()),
        Some(relation) => Err(PresentationError::DependentLeadingForms { relation }),
    }
}

/// Matrix of `f ↦ (f ∘ G_1, ..., f ∘ G_t)` on the span of `monomials`, in
/// plain coordinates of `P_{<= d_r}` per generator.
fn contraction_matrix(pres: &AlgebraPresentation, monomials: &[Exponent]) -> Matrix {
    let n = pres.num_vars;
    let mut blocks = Vec::new();
    for g in &pres.generators {
        let d = g.degree().unwrap_or(0);
        let targets = monomials_up_to(n, d);
        let columns: Vec<Vec<Rational>> = monomials
            .iter()
            .map(|a| {
                let c = contract_monomial(a, g);
                targets.iter().map(|e| c.coefficient(e)).collect()
            })
            .collect();
        blocks.push(Matrix::from_columns(targets.len(), &columns).expect("columns share the target length"));
    }
    Matrix::vstack(monomials.len(), &blocks).expect("blocks share the column count")
}

fn kernel_as_series(pres: &AlgebraPresentation, monomials: &[Exponent], order: usize) -> Vec<JetPolynomial> {
    contraction_matrix(pres, monomials)
        .kernel_basis()
        .into_iter()
        .map(|v| {
            JetPolynomial::from_terms(
                pres.num_vars,
                order,
                monomials
                    .iter()
                    .zip(v)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(e, c)| (e.clone(), c)),
            )
            .expect("exponents share the variable count")
        })
        .collect()
}

/// Basis of the homogeneous degree-`d` annihilators `{ f in R_d : f ∘ G_r = 0 }`.
pub fn annihilator_slice(pres: &AlgebraPresentation, d: usize) -> Result<Vec<JetPolynomial>, PresentationError> {
    let s = pres.socle_degree();
    if d > s + 1 {
        return Err(PresentationError::DegreeOutOfRange { degree: d, min: 0, max: s + 1 });
    }
    Ok(kernel_as_series(pres, &monomials_of_degree(pres.num_vars, d), s + 1))
}

/// Basis of `{ f in R_{<=d}, f(0) = 0 : f ∘ G_r = 0 }`, inhomogeneous
/// elements included.
pub fn annihilator_upto(pres: &AlgebraPresentation, d: usize) -> Result<Vec<JetPolynomial>, PresentationError> {
    let s = pres.socle_degree();
    if d < 1 || d > s + 1 {
        return Err(PresentationError::DegreeOutOfRange { degree: d, min: 1, max: s + 1 });
    }
    let monomials: Vec<Exponent> = (1..=d).flat_map(|k| monomials_of_degree(pres.num_vars, k)).collect();
    Ok(kernel_as_series(pres, &monomials, s + 1))
}

/// `h_i = dim (M ∩ P_{<=i} + P_{<i}) / P_{<i}`.
pub fn hilbert_function(pres: &AlgebraPresentation) -> Result<HilbertFunction, PresentationError> {
    macaulay_validate(pres)?;
    Ok(HilbertFunction(pres.module().graded_dimensions(pres.socle_degree())))
}

/// `A` as coordinates: each monomial of degree at most `s` maps to its
/// vector of pairings against a basis of the dual module.
struct QuotientModel {
    s: usize,
    num_vars: usize,
    module: DualModule,
}

impl QuotientModel {
    fn new(pres: &AlgebraPresentation) -> Self {
        QuotientModel {
            s: pres.socle_degree(),
            num_vars: pres.num_vars,
            module: pres.module(),
        }
    }

    fn dimension(&self) -> usize {
        self.module.dimension()
    }

    /// Image of `x^a` in `A`; zero above degree `s`.
    fn image(&self, a: &Exponent) -> Vec<Rational> {
        if a.degree() > self.s {
            return vec![Rational::zero(); self.dimension()];
        }
        let factor = Rational::from_integer(a.factorial());
        self.module
            .basis()
            .iter()
            .map(|m| {
                let c = m.coefficient(a);
                if c.is_zero() {
                    c
                } else {
                    c * &factor
                }
            })
            .collect()
    }

    /// Monomials whose images form a basis of `A` (pivot columns of the
    /// image matrix, in the degree-ascending basis order).
    fn standard_monomials(&self) -> Vec<Exponent> {
        let all = monomials_up_to(self.num_vars, self.s);
        let columns: Vec<Vec<Rational>> = all.iter().map(|a| self.image(a)).collect();
        let m = Matrix::from_columns(self.dimension(), &columns).expect("columns share the dimension");
        m.rref().pivots.into_iter().map(|p| all[p].clone()).collect()
    }

    /// Socle of `A` as a list of vectors spanning it in image coordinates.
    fn socle(&self) -> Vec<Vec<Rational>> {
        let basis = self.standard_monomials();
        let dim = self.dimension();
        // Multiplication by x_k, stacked over k, on the standard basis.
        let mut blocks = Vec::new();
        for k in 0..self.num_vars {
            let step = Exponent::unit(self.num_vars, k);
            let columns: Vec<Vec<Rational>> = basis.iter().map(|w| self.image(&w.add(&step))).collect();
            blocks.push(Matrix::from_columns(dim, &columns).expect("columns share the dimension"));
        }
        let mult = Matrix::vstack(basis.len(), &blocks).expect("blocks share the column count");
        let images: Vec<Vec<Rational>> = basis.iter().map(|w| self.image(w)).collect();
        mult.kernel_basis()
            .into_iter()
            .map(|c| {
                let mut v = vec![Rational::zero(); dim];
                for (coef, img) in c.iter().zip(&images) {
                    if coef.is_zero() {
                        continue;
                    }
                    for (slot, x) in v.iter_mut().zip(img) {
                        *slot += coef * x;
                    }
                }
                v
            })
            .collect()
    }

    /// Spanning set of the image of `m^i`: monomials of degree `i..=s`.
    fn power_of_maximal_ideal(&self, i: usize) -> Vec<Vec<Rational>> {
        (i..=self.s)
            .flat_map(|d| monomials_of_degree(self.num_vars, d))
            .map(|a| self.image(&a))
            .collect()
    }
}

fn intersection_dimension(len: usize, u: &[Vec<Rational>], v: &[Vec<Rational>]) -> usize {
    let du = rank_of_vectors(len, u);
    let dv = rank_of_vectors(len, v);
    let both: Vec<Vec<Rational>> = u.iter().chain(v).cloned().collect();
    du + dv - rank_of_vectors(len, &both)
}

/// `e_i = dim (Soc ∩ m^i) / (Soc ∩ m^{i+1})`, computed in `A` itself.
pub fn socle_type(pres: &AlgebraPresentation) -> Result<SocleType, PresentationError> {
    macaulay_validate(pres)?;
    let model = QuotientModel::new(pres);
    let dim = model.dimension();
    let socle = model.socle();
    let filtration: Vec<usize> = (0..=model.s + 1)
        .map(|i| intersection_dimension(dim, &socle, &model.power_of_maximal_ideal(i)))
        .collect();
    Ok(SocleType(
        (0..=model.s).map(|i| filtration[i] - filtration[i + 1]).collect(),
    ))
}

/// Whether the Hilbert function equals the compressed one for the computed
/// socle type.
pub fn is_compressed(pres: &AlgebraPresentation) -> Result<bool, PresentationError> {
    let hf = hilbert_function(pres)?;
    let socle = socle_type(pres)?;
    Ok(hf == compressed_hf(pres.num_vars, socle.values())?)
}

/// Everything the inverse system determines about `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSummary {
    pub hilbert: HilbertFunction,
    pub socle: SocleType,
    pub compressed: bool,
    pub length: usize,
    pub warnings: Vec<String>,
}

pub fn summarize(pres: &AlgebraPresentation) -> Result<AlgebraSummary, PresentationError> {
    let hilbert = hilbert_function(pres)?;
    let socle = socle_type(pres)?;
    let compressed = hilbert == compressed_hf(pres.num_vars, socle.values())?;
    let mut warnings = Vec::new();
    if socle.type_number() != pres.generators().len() {
        warnings.push(format!(
            "socle dimension {} differs from the number of generators {}",
            socle.type_number(),
            pres.generators().len()
        ));
    }
    let mut expected_degrees = pres.degrees();
    expected_degrees.sort_unstable();
    let mut socle_degrees: Vec<usize> = socle
        .values()
        .iter()
        .enumerate()
        .flat_map(|(i, &e)| std::iter::repeat_n(i, e))
        .collect();
    socle_degrees.sort_unstable();
    if socle.type_number() == pres.generators().len() && socle_degrees != expected_degrees {
        warnings.push(format!(
            "socle degrees {socle_degrees:?} differ from generator degrees {expected_degrees:?}"
        ));
    }
    Ok(AlgebraSummary {
        length: hilbert.length(),
        hilbert,
        socle,
        compressed,
        warnings,
    })
}

/// `dim R_{<=s}`, the length of `R / M^{s+1}`.
pub fn ambient_length(n: usize, s: usize) -> usize {
    monomial_count_up_to(n, s)
}

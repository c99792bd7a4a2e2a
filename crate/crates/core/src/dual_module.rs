//! The R-submodule of `P` generated by a list of dual polynomials under
//! contraction, kept as an echelon basis.
//!
//! Coordinates are plain monomial coefficients with columns ordered by degree
//! descending. Reduced echelon form in that order puts each basis element's
//! pivot on its top-degree term, so `M ∩ P_{<=j}` is spanned by the basis
//! elements of degree at most `j`, and their degree-`j` components give a
//! basis of `(M ∩ P_{<=j} + P_{<j}) / P_{<j}`.

use num_traits::Zero;

use crate::linalg::{Matrix, Rational};
use crate::monomial::{monomial_count, monomials_of_degree, monomials_up_to, Exponent};
use crate::poly::{contract_monomial, DualPolynomial};

#[derive(Clone, Debug)]
pub struct DualModule {
    num_vars: usize,
    max_degree: usize,
    /// Reduced echelon basis, highest pivot first.
    basis: Vec<DualPolynomial>,
    /// Column of each basis element's pivot.
    pivots: Vec<usize>,
    columns: Vec<Exponent>,
}

impl DualModule {
    /// Span of all contractions `x^g ∘ G_r`.
    pub fn generate(num_vars: usize, generators: &[DualPolynomial]) -> Self {
        let spanning: Vec<DualPolynomial> = generators
            .iter()
            .flat_map(|g| {
                let d = g.degree().unwrap_or(0);
                monomials_up_to(num_vars, d)
                    .into_iter()
                    .map(move |gamma| contract_monomial(&gamma, g))
            })
            .filter(|p| !p.is_zero())
            .collect();
        Self::span(num_vars, &spanning)
    }

    /// Plain linear span of the given polynomials (no closure under
    /// contraction).
    pub fn span(num_vars: usize, elements: &[DualPolynomial]) -> Self {
        let max_degree = elements.iter().filter_map(DualPolynomial::degree).max().unwrap_or(0);
        let columns: Vec<Exponent> = (0..=max_degree)
            .rev()
            .flat_map(|d| monomials_of_degree(num_vars, d))
            .collect();
        let rows: Vec<Vec<Rational>> = elements
            .iter()
            .map(|p| columns.iter().map(|e| p.coefficient(e)).collect())
            .collect();
        let rref = Matrix::from_rows(columns.len(), rows)
            .expect("rows built with the column count")
            .rref();
        let basis = rref
            .rows
            .iter()
            .map(|row| {
                DualPolynomial::from_terms(
                    num_vars,
                    columns
                        .iter()
                        .zip(row)
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(e, c)| (e.clone(), c.clone())),
                )
                .expect("exponents share the variable count")
            })
            .collect();
        DualModule {
            num_vars,
            max_degree,
            basis,
            pivots: rref.pivots,
            columns,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[DualPolynomial] {
        &self.basis
    }

    fn pivot_degree(&self, k: usize) -> usize {
        self.columns[self.pivots[k]].degree()
    }

    /// Basis of the degree-`j` associated graded piece, as forms of
    /// degree `j`.
    pub fn slice(&self, j: usize) -> Vec<DualPolynomial> {
        (0..self.basis.len())
            .filter(|&k| self.pivot_degree(k) == j)
            .map(|k| self.basis[k].homogeneous_component(j))
            .collect()
    }

    /// Dimensions of the graded pieces, degrees `0..=s`.
    pub fn graded_dimensions(&self, s: usize) -> Vec<usize> {
        let mut dims = vec![0; s + 1];
        for k in 0..self.basis.len() {
            let d = self.pivot_degree(k);
            if d <= s {
                dims[d] += 1;
            }
        }
        dims
    }

    /// Reduces `g` against the echelon basis; zero iff `g` lies in the span.
    pub fn normal_form(&self, g: &DualPolynomial) -> DualPolynomial {
        let mut out = g.clone();
        for (k, element) in self.basis.iter().enumerate() {
            let c = out.coefficient(&self.columns[self.pivots[k]]);
            if !c.is_zero() {
                out = out.sub(&element.scale(&c));
            }
        }
        out
    }

    pub fn contains(&self, g: &DualPolynomial) -> bool {
        if g.degree().is_some_and(|d| d > self.max_degree) {
            return false;
        }
        self.normal_form(g).is_zero()
    }

    /// Whether both modules are the same subspace of `P`.
    pub fn same_span(&self, other: &DualModule) -> bool {
        self.dimension() == other.dimension() && other.basis.iter().all(|g| self.contains(g))
    }
}

/// Basis of the degree-`j` slice of the module generated by `generators`:
/// the image of `M ∩ P_{<=j}` in `P_{<=j} / P_{<j}`, identified with forms of
/// degree `j`.
pub fn derivative_span(num_vars: usize, generators: &[DualPolynomial], j: usize) -> Vec<DualPolynomial> {
    DualModule::generate(num_vars, generators).slice(j)
}

/// Number of monomials of degree `j`, the ambient dimension of a slice.
pub fn slice_ambient_dimension(num_vars: usize, j: usize) -> usize {
    monomial_count(num_vars, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank_of_vectors;
    use crate::poly::{contract, JetPolynomial};

    fn dual(n: usize, s: &str) -> DualPolynomial {
        DualPolynomial::parse(n, s).unwrap()
    }

    #[test]
    fn pure_power_slices() {
        for k in 0..=5 {
            let span = derivative_span(2, &[dual(2, "y1^5")], k);
            assert_eq!(span.len(), 1);
            assert_eq!(span[0].leading_form().terms().count(), 1);
            assert_eq!(
                span[0].terms().next().unwrap().0,
                &Exponent::new(vec![k as u32, 0])
            );
        }
    }

    #[test]
    fn first_partials_of_monomial() {
        let span = derivative_span(2, &[dual(2, "y1^3*y2^2")], 4);
        assert_eq!(span.len(), 2);
        let module = DualModule::span(2, &span);
        assert!(module.contains(&dual(2, "y1^2*y2^2")));
        assert!(module.contains(&dual(2, "y1^3*y2")));
        assert!(!module.contains(&dual(2, "y2^4")));
    }

    /// Every order-2 contraction of `G` has degree at most 3, so its cubic
    /// part lies in the degree-3 slice; those cubic parts are the oracle.
    #[test]
    fn inhomogeneous_cubic_slice_by_brute_force() {
        let g = dual(2, "y1^3*y2^2 + y2^4");
        let mut vectors = Vec::new();
        for a in monomials_of_degree(2, 2) {
            let x = JetPolynomial::monomial(6, a, Rational::from_integer(1.into()));
            let c = contract(&x, &g).unwrap();
            vectors.push(c.homogeneous_component(3).degree_coefficients(3));
        }
        let oracle = rank_of_vectors(4, &vectors);
        assert_eq!(oracle, 3);
        assert_eq!(derivative_span(2, &[g], 3).len(), oracle);
    }

    #[test]
    fn hilbert_values_of_s5_generator() {
        let module = DualModule::generate(2, &[dual(2, "y1^3*y2^2 + y2^4")]);
        assert_eq!(module.graded_dimensions(5), vec![1, 2, 3, 3, 2, 1]);
        assert_eq!(module.dimension(), 12);
    }

    #[test]
    fn monotone_under_more_generators() {
        let a = dual(3, "y1^2*y2 + y3^2");
        let b = dual(3, "y2*y3^2");
        let one = DualModule::generate(3, std::slice::from_ref(&a)).graded_dimensions(3);
        let two = DualModule::generate(3, &[a, b]).graded_dimensions(3);
        assert!(one.iter().zip(&two).all(|(x, y)| x <= y));
    }
}

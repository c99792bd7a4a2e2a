//! Catalecticant matrices of forms, Hilbert functions by rank, and the
//! compressed Hilbert function of a socle type.

use std::fmt;

use thiserror::Error;

use crate::linalg::{Matrix, Rational};
use crate::monomial::{monomial_count, monomials_of_degree};
use crate::poly::{DualPolynomial, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalecticantError {
    #[error("form is not homogeneous of degree {degree}")]
    NotHomogeneous { degree: usize },
    #[error("order {order} out of range 0..={degree}")]
    OrderOutOfRange { order: usize, degree: usize },
    #[error("forms have different degrees ({first} and {other})")]
    MixedDegrees { first: usize, other: usize },
    #[error("the zero form has no Gorenstein quotient")]
    ZeroForm,
    #[error("no forms given")]
    Empty,
    #[error("leading forms are linearly dependent")]
    DependentForms,
    #[error("invalid socle type: {0}")]
    InvalidSocleType(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `(h_0, ..., h_s)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertFunction(pub Vec<usize>);

impl HilbertFunction {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn socle_degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// `sum h_i = dim_K A`.
    pub fn length(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl From<Vec<usize>> for HilbertFunction {
    fn from(values: Vec<usize>) -> Self {
        HilbertFunction(values)
    }
}

fn form_degree(g: &DualPolynomial) -> Option<usize> {
    g.degree()
}

/// `Δ^q(G)`: rows are exponents `L` with `|L| = s-q`, columns exponents `i`
/// with `|i| = q`, and the `(L, i)` entry is the dual-basis coordinate
/// `β_{L+i}` of `G`. Column `i` holds the coordinates of `∂^i G`.
pub fn delta_matrix(form: &DualPolynomial, s: usize, q: usize) -> Result<Matrix, CatalecticantError> {
    if q > s {
        return Err(CatalecticantError::OrderOutOfRange { order: q, degree: s });
    }
    let n = form.num_vars();
    let beta = form
        .omega_star_coordinates(s)
        .map_err(|_| CatalecticantError::NotHomogeneous { degree: s })?;
    let top = monomials_of_degree(n, s);
    let rows = monomials_of_degree(n, s - q);
    let cols = monomials_of_degree(n, q);
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (r, l) in rows.iter().enumerate() {
        for (c, i) in cols.iter().enumerate() {
            let sum = l.add(i);
            debug_assert_eq!(top[sum.index_in_degree()], sum);
            m.set(r, c, beta[sum.index_in_degree()].clone());
        }
    }
    Ok(m)
}

/// Common degree of a non-empty list of forms.
pub(crate) fn common_degree(forms: &[DualPolynomial]) -> Result<usize, CatalecticantError> {
    let first = forms.first().ok_or(CatalecticantError::Empty)?;
    let s = form_degree(first).ok_or(CatalecticantError::ZeroForm)?;
    for g in forms {
        let d = form_degree(g).ok_or(CatalecticantError::ZeroForm)?;
        if d != s {
            return Err(CatalecticantError::MixedDegrees { first: s, other: d });
        }
        if !g.is_homogeneous() {
            return Err(CatalecticantError::NotHomogeneous { degree: s });
        }
    }
    Ok(s)
}

/// Vertical stack of `Δ^q(G_r)` in generator order.
pub fn stacked_delta(forms: &[DualPolynomial], q: usize) -> Result<Matrix, CatalecticantError> {
    let s = common_degree(forms)?;
    let n = forms[0].num_vars();
    if q > s {
        return Err(CatalecticantError::OrderOutOfRange { order: q, degree: s });
    }
    let blocks = forms
        .iter()
        .map(|g| delta_matrix(g, s, q))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::vstack(monomial_count(n, q), &blocks).expect("blocks share the column count"))
}

/// Hilbert function of `P / Ann(G)` for a nonzero form: `h_j = rank Δ^{s-j}(G)`.
pub fn hilbert_from_delta(form: &DualPolynomial) -> Result<HilbertFunction, CatalecticantError> {
    let s = common_degree(std::slice::from_ref(form))?;
    (0..=s)
        .map(|j| delta_matrix(form, s, s - j).map(|m| m.rank()))
        .collect::<Result<Vec<_>, _>>()
        .map(HilbertFunction)
}

/// Hilbert function of the graded level algebra `P / Ann(G_1..G_t)`:
/// `h_i = rank` of the stacked `Δ^i`.
pub fn hilbert_from_stacked_delta(forms: &[DualPolynomial]) -> Result<HilbertFunction, CatalecticantError> {
    let s = common_degree(forms)?;
    (0..=s)
        .map(|i| stacked_delta(forms, i).map(|m| m.rank()))
        .collect::<Result<Vec<_>, _>>()
        .map(HilbertFunction)
}

/// Whether `P / Ann(G_1..G_t)` is a compressed level algebra: for every
/// `i = 1..s` the stacked `Δ^i` has rank `min(dim R_i, t * dim R_{s-i})`.
pub fn is_compressed_level(forms: &[DualPolynomial]) -> Result<bool, CatalecticantError> {
    let s = common_degree(forms)?;
    let n = forms[0].num_vars();
    let t = forms.len();
    let coords: Vec<Vec<Rational>> = forms
        .iter()
        .map(|g| g.omega_star_coordinates(s))
        .collect::<Result<_, _>>()?;
    if crate::linalg::rank_of_vectors(monomial_count(n, s), &coords) < t {
        return Err(CatalecticantError::DependentForms);
    }
    for i in 1..=s {
        let expected = monomial_count(n, i).min(t * monomial_count(n, s - i));
        if stacked_delta(forms, i)?.rank() != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Upper bound `sum_{u >= i} e_u dim R_{u-i}` from the socle type.
fn socle_bound(n: usize, socle: &[usize], i: usize) -> usize {
    socle
        .iter()
        .enumerate()
        .skip(i)
        .map(|(u, &e)| e * monomial_count(n, u - i))
        .sum()
}

fn check_socle_type(socle: &[usize]) -> Result<usize, CatalecticantError> {
    match socle.last() {
        None => Err(CatalecticantError::InvalidSocleType("empty".into())),
        Some(0) => Err(CatalecticantError::InvalidSocleType(
            "last entry e_s must be positive".into(),
        )),
        Some(_) => Ok(socle.len() - 1),
    }
}

/// Initial degree of the compressed algebra of socle type `E`: the first
/// degree where the socle bound drops below `dim R_i` (`s + 1` if it never
/// does).
pub fn compressed_initial_degree(n: usize, socle: &[usize]) -> Result<usize, CatalecticantError> {
    let s = check_socle_type(socle)?;
    Ok((0..=s)
        .find(|&i| socle_bound(n, socle, i) < monomial_count(n, i))
        .unwrap_or(s + 1))
}

/// Compressed Hilbert function for socle type `E = (e_0, ..., e_s)`:
/// `h_i = sum_{u>=i} e_u dim R_{u-i}` for `i >= v` and `dim R_i` below the
/// initial degree `v`.
pub fn compressed_hf(n: usize, socle: &[usize]) -> Result<HilbertFunction, CatalecticantError> {
    let s = check_socle_type(socle)?;
    let v = compressed_initial_degree(n, socle)?;
    Ok(HilbertFunction(
        (0..=s)
            .map(|i| {
                if i >= v {
                    socle_bound(n, socle, i)
                } else {
                    monomial_count(n, i)
                }
            })
            .collect(),
    ))
}

/// `e_{v-1} = max(0, dim R_{v-1} - sum_{u>=v} e_u dim R_{u-v+1})`.
pub fn socle_correction(n: usize, v: usize, socle: &[usize]) -> usize {
    assert!(v >= 1, "initial degree must be positive");
    let bound: usize = socle
        .iter()
        .enumerate()
        .skip(v)
        .map(|(u, &e)| e * monomial_count(n, u + 1 - v))
        .sum();
    monomial_count(n, v - 1).saturating_sub(bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual_module::DualModule;
    use crate::linalg::int;
    use crate::monomial::binomial;
    use crate::poly::{contract_monomial, DualPolynomial};
    use num_traits::Zero;

    fn dual(n: usize, s: &str) -> DualPolynomial {
        DualPolynomial::parse(n, s).unwrap()
    }

    #[test]
    fn delta_zero_order_is_coordinate_column() {
        let g = dual(2, "y1^3*y2 + 2*y2^4");
        let m = delta_matrix(&g, 4, 0).unwrap();
        assert_eq!(m.cols(), 1);
        assert_eq!(m.column(0), g.omega_star_coordinates(4).unwrap());
    }

    #[test]
    fn delta_transpose_pair() {
        let g = dual(3, "y1^2*y2*y3 + y2*y3^3 - 3*y1^4");
        for q in 0..=4 {
            assert_eq!(
                delta_matrix(&g, 4, q).unwrap(),
                delta_matrix(&g, 4, 4 - q).unwrap().transpose()
            );
        }
    }

    /// Second partials of y1^4 by hand: only ∂1∂1 survives, giving 12*y1^2,
    /// whose dual coordinate at (2,0) is 2! * 12 = 24.
    #[test]
    fn delta_of_pure_power() {
        let m = delta_matrix(&dual(2, "y1^4"), 4, 2).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 3));
        for r in 0..3 {
            for c in 0..3 {
                let expected = if (r, c) == (0, 0) { int(24) } else { int(0) };
                assert_eq!(m.get(r, c), &expected);
            }
        }
        let hand = contract_monomial(&crate::monomial::Exponent::new(vec![2, 0]), &dual(2, "y1^4"));
        assert_eq!(hand.omega_star_coordinates(2).unwrap()[0], int(24));
    }

    #[test]
    fn delta_errors() {
        assert!(matches!(
            delta_matrix(&dual(2, "y1^2 + y2"), 2, 1),
            Err(CatalecticantError::NotHomogeneous { .. })
        ));
        assert!(matches!(
            delta_matrix(&dual(2, "y1^2"), 2, 3),
            Err(CatalecticantError::OrderOutOfRange { .. })
        ));
        assert!(matches!(
            stacked_delta(&[dual(2, "y1^2"), dual(2, "y2^3")], 1),
            Err(CatalecticantError::MixedDegrees { .. })
        ));
        assert!(matches!(
            hilbert_from_delta(&DualPolynomial::zero(2)),
            Err(CatalecticantError::ZeroForm)
        ));
    }

    #[test]
    fn stacked_shapes() {
        let one = stacked_delta(&[dual(2, "y1*y2^2")], 1).unwrap();
        assert_eq!(one, delta_matrix(&dual(2, "y1*y2^2"), 3, 1).unwrap());
        let two = stacked_delta(&[dual(2, "y1^2"), dual(2, "y2^2")], 1).unwrap();
        assert_eq!((two.rows(), two.cols()), (4, 2));
    }

    /// The two quartic leading forms of a type-two level pair: ranks
    /// of the stacked catalecticants agree with brute-force slice
    /// dimensions of the module they generate.
    #[test]
    fn stacked_rank_matches_slices() {
        let forms = [dual(3, "y1^2*y2*y3"), dual(3, "y1*y2^2*y3 + y2*y3^3")];
        let slices = DualModule::generate(3, &forms).graded_dimensions(4);
        assert_eq!(slices, vec![1, 3, 6, 6, 2]);
        for (q, &dim) in slices.iter().enumerate() {
            assert_eq!(stacked_delta(&forms, q).unwrap().rank(), dim);
        }
        assert_eq!(stacked_delta(&forms, 1).unwrap().rank(), 3);
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(hilbert_from_delta(&dual(2, "y1^4")).unwrap().0, vec![1, 1, 1, 1, 1]);
        assert_eq!(
            hilbert_from_delta(&dual(2, "y1^3*y2^2")).unwrap().0,
            vec![1, 2, 3, 3, 2, 1]
        );
        assert_eq!(
            hilbert_from_delta(&dual(2, "y1^4 + y1*y2^3")).unwrap().0,
            vec![1, 2, 3, 2, 1]
        );
    }

    /// Divisor counting oracle for monomials: the order-k partials of y^a
    /// are the monomials y^b with b <= a, |b| = |a| - k.
    #[test]
    fn monomial_hilbert_by_divisor_count() {
        for a in [[3u32, 2], [4, 1], [2, 2], [5, 0]] {
            let g = DualPolynomial::monomial(crate::monomial::Exponent::new(a.to_vec()), int(1));
            let s = (a[0] + a[1]) as usize;
            let mut counts = vec![0usize; s + 1];
            for b0 in 0..=a[0] {
                for b1 in 0..=a[1] {
                    counts[(b0 + b1) as usize] += 1;
                }
            }
            assert_eq!(hilbert_from_delta(&g).unwrap().0, counts);
        }
    }

    #[test]
    fn compressed_level_examples() {
        assert!(is_compressed_level(&[dual(2, "y1^3*y2^2")]).unwrap());
        assert!(!is_compressed_level(&[dual(2, "y1^4*y2")]).unwrap());
        assert!(is_compressed_level(&[dual(3, "y1^2*y2*y3"), dual(3, "y1*y2^2*y3 + y2*y3^3")]).unwrap());
        assert!(matches!(
            is_compressed_level(&[dual(2, "y1^2"), dual(2, "2*y1^2")]),
            Err(CatalecticantError::DependentForms)
        ));
    }

    #[test]
    fn compressed_hf_examples() {
        assert_eq!(compressed_hf(3, &[0, 0, 0, 0, 2]).unwrap().0, vec![1, 3, 6, 6, 2]);
        for i in 2..=5 {
            assert_eq!(compressed_hf(2, &[0, 0, 0, 0, i]).unwrap().0, vec![1, 2, 3, 4, i]);
        }
        for n in 2..=5 {
            assert_eq!(
                compressed_hf(n, &[0, 0, 0, 0, 1]).unwrap().0,
                vec![1, n, binomial(n + 1, 2), n, 1]
            );
        }
        assert!(compressed_hf(2, &[]).is_err());
        assert!(compressed_hf(2, &[0, 1, 0]).is_err());
    }

    #[test]
    fn socle_correction_examples() {
        assert_eq!(socle_correction(2, 1, &[0, 1]), 0);
        assert_eq!(socle_correction(3, 3, &[0, 0, 0, 1]), 3);
        // s >= 2(v-1) forces zero.
        for n in 1..5 {
            for s in 1..7 {
                let mut socle = vec![0; s + 1];
                socle[s] = 1;
                for v in 1..=(s / 2 + 1) {
                    assert_eq!(socle_correction(n, v, &socle), 0, "n={n} s={s} v={v}");
                }
            }
        }
    }

    #[test]
    fn zero_rank_for_zero_columns() {
        let m = delta_matrix(&dual(2, "y1^2*y2"), 3, 3).unwrap();
        assert!(m.column(3).iter().all(Zero::is_zero));
    }
}

//! Obstruction matrices for removing lower-degree parts of dual generators
//! by automorphisms `x_j ↦ x_j + (terms of degree p+1)`, and the resulting
//! canonical-gradedness procedure.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::automorphism::{coefficient_count, dual_apply_all, make_phi, AutomorphismError};
use crate::catalecticant::{common_degree, delta_matrix, CatalecticantError};
use crate::dual_module::DualModule;
use crate::inverse_system::{macaulay_validate, AlgebraPresentation, PresentationError};
use crate::linalg::{Matrix, Rational};
use crate::monomial::{monomial_count, monomials_of_degree, monomials_up_to, Exponent};
use crate::poly::{contract_monomial, DualPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("step p = {p} outside 1..={max}")]
    StepOutOfRange { p: usize, max: usize },
    #[error("rank criterion only applies for socle degree at most 4, got {degree}")]
    SocleDegreeTooLarge { degree: usize },
    #[error("rank maximality disagrees: Δ^{q} maximal = {delta}, obstruction matrix maximal = {obstruction}")]
    RankCriterionMismatch { q: usize, delta: bool, obstruction: bool },
    #[error("generators have different top degrees")]
    MixedTopDegrees,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Catalecticant(#[from] CatalecticantError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Automorphism(#[from] AutomorphismError),
}

fn check_step(s: usize, p: usize) -> Result<(), GradingError> {
    if p < 1 || p + 1 > s {
        return Err(GradingError::StepOutOfRange {
            p,
            max: s.saturating_sub(1),
        });
    }
    Ok(())
}

/// `M^{[s-p]}(G)`: rows `W` with `|W| = s-p`, columns `(j, i)` with `j`
/// outer and `|i| = p+1`, entry `w_j α_{W - δ_j + i}` where `α` are the
/// dual-basis coordinates of `G`.
pub fn m_matrix(form: &DualPolynomial, p: usize) -> Result<Matrix, GradingError> {
    let s = common_degree(std::slice::from_ref(form))?;
    check_step(s, p)?;
    Ok(m_matrix_unchecked(form, s, p))
}

fn m_matrix_unchecked(form: &DualPolynomial, s: usize, p: usize) -> Matrix {
    let n = form.num_vars();
    let alpha = form.omega_star_coordinates(s).expect("homogeneous form");
    let rows = monomials_of_degree(n, s - p);
    let perturbation = monomials_of_degree(n, p + 1);
    let mut m = Matrix::zeros(rows.len(), n * perturbation.len());
    for (r, w) in rows.iter().enumerate() {
        for j in 0..n {
            let wj = w.get(j);
            if wj == 0 {
                continue;
            }
            let lowered = w.checked_sub(&Exponent::unit(n, j)).expect("w_j > 0");
            for (k, i) in perturbation.iter().enumerate() {
                let a = &alpha[lowered.add(i).index_in_degree()];
                if !a.is_zero() {
                    m.set(r, j * perturbation.len() + k, a * Rational::from_integer(wj.into()));
                }
            }
        }
    }
    m
}

/// Vertical stack of `M^{[s-p]}(G_r)` in generator order.
pub fn m_matrix_level(forms: &[DualPolynomial], p: usize) -> Result<Matrix, GradingError> {
    let s = common_degree(forms)?;
    check_step(s, p)?;
    let n = forms[0].num_vars();
    let blocks: Vec<Matrix> = forms.iter().map(|g| m_matrix_unchecked(g, s, p)).collect();
    Ok(Matrix::vstack(coefficient_count(n, p), &blocks).expect("blocks share the column count"))
}

/// A failed structural check of the obstruction matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockStructureViolation {
    pub row: Exponent,
    pub column: (usize, Exponent),
    pub description: String,
}

impl fmt::Display for BlockStructureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "row {} column (x{}, {}): {}",
            self.row,
            self.column.0 + 1,
            self.column.1,
            self.description
        )
    }
}

/// Index of the first nonzero part, i.e. the `t` with `x^W ∈ x_t (x_t..x_n)^{|W|-1}`.
fn leading_variable(w: &Exponent) -> Option<usize> {
    w.parts().iter().position(|&x| x > 0)
}

/// Checks the staircase shape of `M^{[s-p]}(G)`:
/// entries vanish at rows `W` led by `x_t` and column blocks `j < t`; the
/// `(x_1, block 1)` part is `w_1 Δ^{p+1}(G)_{(W - δ_1, i)}`; and each row of
/// block `j+1` is `w_{j+1}` times the matching row of block `j`.
pub fn verify_block_structure(form: &DualPolynomial, p: usize) -> Result<Result<(), BlockStructureViolation>, GradingError> {
    let s = common_degree(std::slice::from_ref(form))?;
    check_step(s, p)?;
    let n = form.num_vars();
    let m = m_matrix_unchecked(form, s, p);
    let delta = delta_matrix(form, s, p + 1)?;
    let rows = monomials_of_degree(n, s - p);
    let perturbation = monomials_of_degree(n, p + 1);
    let width = perturbation.len();
    let row_of = |w: &Exponent| w.index_in_degree();
    let fail = |w: &Exponent, j: usize, k: usize, description: String| BlockStructureViolation {
        row: w.clone(),
        column: (j, perturbation[k].clone()),
        description,
    };
    for w in &rows {
        let Some(t) = leading_variable(w) else { continue };
        let r = row_of(w);
        for j in 0..t {
            for k in 0..width {
                if !m.get(r, j * width + k).is_zero() {
                    return Ok(Err(fail(w, j, k, "expected zero left of the staircase".into())));
                }
            }
        }
        if t == 0 {
            let lowered = w.checked_sub(&Exponent::unit(n, 0)).expect("w_1 > 0");
            let w1 = Rational::from_integer(w.get(0).into());
            for k in 0..width {
                let expected = &w1 * delta.get(row_of(&lowered), k);
                if m.get(r, k) != &expected {
                    return Ok(Err(fail(w, 0, k, format!("expected w_1 Δ entry {expected}"))));
                }
            }
        } else {
            // Row W of block t equals w_t times row W - δ_t + δ_{t-1} of block t-1.
            let partner = w
                .checked_sub(&Exponent::unit(n, t))
                .expect("w_t > 0")
                .add(&Exponent::unit(n, t - 1));
            let wt = Rational::from_integer(w.get(t).into());
            for k in 0..width {
                let expected = &wt * m.get(row_of(&partner), (t - 1) * width + k);
                if m.get(r, t * width + k) != &expected {
                    return Ok(Err(fail(w, t, k, format!("expected scaled entry {expected}"))));
                }
            }
        }
    }
    Ok(Ok(()))
}

fn has_maximal_rank(m: &Matrix) -> bool {
    m.rank() == m.rows().min(m.cols())
}

/// Whether `Δ^{p+1}(G)` has maximal rank; also checks that this agrees
/// with maximality of `M^{[s-p]}(G)` and reports a mismatch as an error.
/// Only defined for `s <= 4`.
pub fn rank_criterion(form: &DualPolynomial, p: usize) -> Result<bool, GradingError> {
    let s = common_degree(std::slice::from_ref(form))?;
    if s >= 5 {
        return Err(GradingError::SocleDegreeTooLarge { degree: s });
    }
    check_step(s, p)?;
    let delta = has_maximal_rank(&delta_matrix(form, s, p + 1)?);
    let obstruction = has_maximal_rank(&m_matrix_unchecked(form, s, p));
    if delta != obstruction {
        return Err(GradingError::RankCriterionMismatch {
            q: p + 1,
            delta,
            obstruction,
        });
    }
    Ok(delta)
}

/// An unsolvable killing system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub p: usize,
    pub matrix: Matrix,
    pub rank: usize,
    /// Stacked dual-basis coordinates of the components to remove.
    pub target: Vec<Rational>,
    /// The same components as polynomials, one per generator in the stack.
    pub components: Vec<DualPolynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KillingOutcome {
    Solved(Vec<Rational>),
    Obstructed(Obstruction),
}

/// Solves `[G_r[s-p]] + M^{[s-p]}(G_r[s]) a = 0` for all `r` at once.
pub fn killing_step(gens: &[DualPolynomial], p: usize) -> Result<KillingOutcome, GradingError> {
    let tops: Vec<DualPolynomial> = gens.iter().map(DualPolynomial::leading_form).collect();
    let s = common_degree(&tops).map_err(|e| match e {
        CatalecticantError::MixedDegrees { .. } => GradingError::MixedTopDegrees,
        other => other.into(),
    })?;
    check_step(s, p)?;
    let n = gens[0].num_vars();
    let matrix = m_matrix_level(&tops, p)?;
    let components: Vec<DualPolynomial> = gens.iter().map(|g| g.homogeneous_component(s - p)).collect();
    let target: Vec<Rational> = components
        .iter()
        .flat_map(|c| c.omega_star_coordinates(s - p).expect("homogeneous component"))
        .collect();
    if target.iter().all(Zero::is_zero) {
        return Ok(KillingOutcome::Solved(vec![Rational::zero(); coefficient_count(n, p)]));
    }
    let rhs: Vec<Rational> = target.iter().map(|x| -x).collect();
    match matrix.solve(&rhs).expect("stacked target matches the row count") {
        Some(a) => Ok(KillingOutcome::Solved(a)),
        None => Ok(KillingOutcome::Obstructed(Obstruction {
            p,
            rank: matrix.rank(),
            matrix,
            target,
            components,
        })),
    }
}

/// Spanning set of the degree-`j` part of the module generated by the top
/// forms, each entry remembering `(generator, γ)` so that `x^γ ∘ G_k` is
/// the full element to subtract.
fn reducers(tops: &[DualPolynomial], degrees: &[usize], j: usize) -> Vec<(usize, Exponent, Vec<Rational>)> {
    let n = tops[0].num_vars();
    let mut out = Vec::new();
    for (k, (top, &d)) in tops.iter().zip(degrees).enumerate() {
        if d < j {
            continue;
        }
        for gamma in monomials_of_degree(n, d - j) {
            let v = contract_monomial(&gamma, top).degree_coefficients(j);
            if v.iter().any(|c| !c.is_zero()) {
                out.push((k, gamma, v));
            }
        }
    }
    out
}

/// Normal form of `target` modulo the span of `vectors`, with the
/// combination that was subtracted.
fn reduce_vector(vectors: &[Vec<Rational>], target: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let len = target.len();
    let count = vectors.len();
    let rows: Vec<Vec<Rational>> = vectors
        .iter()
        .enumerate()
        .map(|(idx, v)| {
            let mut row = v.clone();
            row.extend((0..count).map(|c| if c == idx { Rational::from_integer(1.into()) } else { Rational::zero() }));
            row
        })
        .collect();
    let rref = Matrix::from_rows(len + count, rows).expect("uniform row length").rref();
    let mut rest = target.to_vec();
    let mut combo = vec![Rational::zero(); count];
    for (row, &pivot) in rref.rows.iter().zip(&rref.pivots) {
        if pivot >= len {
            break;
        }
        let c = rest[pivot].clone();
        if c.is_zero() {
            continue;
        }
        for (x, y) in rest.iter_mut().zip(&row[..len]) {
            *x -= &c * y;
        }
        for (x, y) in combo.iter_mut().zip(&row[len..]) {
            *x += &c * y;
        }
    }
    (rest, combo)
}

/// Reduces every lower component `G_r[j]`, from `j = d_r - 1` down to 0,
/// modulo the degree-`j` part of the module generated by all top forms.
/// The subtraction uses whole module elements `x^γ ∘ G_k`, so the module
/// generated by the list is unchanged.
pub fn reduce_generators(gens: &[DualPolynomial]) -> Vec<DualPolynomial> {
    if gens.is_empty() {
        return Vec::new();
    }
    let tops: Vec<DualPolynomial> = gens.iter().map(DualPolynomial::leading_form).collect();
    let degrees: Vec<usize> = gens.iter().map(|g| g.degree().unwrap_or(0)).collect();
    let mut out = gens.to_vec();
    for r in 0..out.len() {
        for j in (0..degrees[r]).rev() {
            let component = out[r].degree_coefficients(j);
            if component.iter().all(Zero::is_zero) {
                continue;
            }
            let span = reducers(&tops, &degrees, j);
            if span.is_empty() {
                continue;
            }
            let vectors: Vec<Vec<Rational>> = span.iter().map(|(_, _, v)| v.clone()).collect();
            let (_, combo) = reduce_vector(&vectors, &component);
            let mut next = out[r].clone();
            for ((k, gamma, _), c) in span.iter().zip(combo) {
                if c.is_zero() {
                    continue;
                }
                let element = contract_monomial(gamma, &out[*k]);
                next = next.sub(&element.scale(&c));
            }
            out[r] = next;
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GradingOutcome {
    Graded,
    ObstructedRestricted,
    NotApplicable,
}

impl GradingOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            GradingOutcome::Graded => "GRADED",
            GradingOutcome::ObstructedRestricted => "OBSTRUCTED_RESTRICTED",
            GradingOutcome::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

impl fmt::Display for GradingOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One applied automorphism `φ_{s-p}(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KillingRecord {
    pub p: usize,
    pub coefficients: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingReport {
    pub outcome: GradingOutcome,
    pub num_vars: usize,
    pub socle_degree: usize,
    pub steps: Vec<KillingRecord>,
    /// Generators after the last step (homogeneous when graded).
    pub generators: Vec<DualPolynomial>,
    pub obstruction: Option<Obstruction>,
    pub notes: Vec<String>,
}

/// Runs the staircase: for `p = 1, 2, ..., s-1` remove the components of
/// degree `d_r - p` with one automorphism `φ_{s-p}`, reducing against the
/// top forms between steps.
///
/// The system at step `p` asks that `G_r[d_r-p] + M^{[d_r-p]}(G_r[d_r]) a`
/// lies in the degree-`(d_r-p)` part of the module of top forms for every
/// generator with `d_r - p >= 1`; whatever is left there is removed by the
/// following reduction.
pub fn canonically_graded(pres: &AlgebraPresentation) -> Result<GradingReport, GradingError> {
    macaulay_validate(pres)?;
    let n = pres.num_vars();
    let s = pres.socle_degree();
    let degrees = pres.degrees();
    let mut notes = vec!["steps run in ascending p".to_string()];
    if s == 0 {
        return Ok(GradingReport {
            outcome: GradingOutcome::NotApplicable,
            num_vars: n,
            socle_degree: s,
            steps: Vec::new(),
            generators: pres.generators().to_vec(),
            obstruction: None,
            notes: vec!["socle degree 0: A is the field".to_string()],
        });
    }
    if degrees.iter().any(|&d| d != s) {
        notes.push("generators of unequal degree: each is killed at degree d_r - p".to_string());
    }
    let tops = pres.leading_forms();
    let mut gens = reduce_generators(pres.generators());
    let mut steps = Vec::new();
    for p in 1..s {
        let active: Vec<usize> = (0..gens.len()).filter(|&r| degrees[r] > p).collect();
        let targets: Vec<Vec<Rational>> = active
            .iter()
            .map(|&r| gens[r].degree_coefficients(degrees[r] - p))
            .collect();
        if targets.iter().flatten().all(Zero::is_zero) {
            continue;
        }
        match relaxed_killing(&tops, &degrees, &gens, &active, p)? {
            Ok(a) => {
                let phi = make_phi(n, s, p, &a)?;
                gens = dual_apply_all(&phi, &gens)?;
                gens = reduce_generators(&gens);
                for &r in &active {
                    if gens[r].degree_coefficients(degrees[r] - p).iter().any(|c| !c.is_zero()) {
                        return Err(GradingError::Invariant(format!(
                            "step p = {p} left a degree-{} component in generator {}",
                            degrees[r] - p,
                            r + 1
                        )));
                    }
                }
                steps.push(KillingRecord { p, coefficients: a });
            }
            Err(obstruction) => {
                return Ok(GradingReport {
                    outcome: GradingOutcome::ObstructedRestricted,
                    num_vars: n,
                    socle_degree: s,
                    steps,
                    generators: gens,
                    obstruction: Some(obstruction),
                    notes,
                });
            }
        }
    }
    let gens = reduce_generators(&gens);
    if !gens.iter().all(DualPolynomial::is_homogeneous) {
        return Err(GradingError::Invariant("staircase finished with inhomogeneous generators".into()));
    }
    Ok(GradingReport {
        outcome: GradingOutcome::Graded,
        num_vars: n,
        socle_degree: s,
        steps,
        generators: gens,
        obstruction: None,
        notes,
    })
}

/// Solves for `a` and slack `c_r` with
/// `G_r[d_r-p] + M_r a = S_r c_r` over the active generators, where `S_r`
/// spans the reducible part. On failure returns the obstruction built from
/// the stacked matrix and the stacked targets.
fn relaxed_killing(
    tops: &[DualPolynomial],
    degrees: &[usize],
    gens: &[DualPolynomial],
    active: &[usize],
    p: usize,
) -> Result<Result<Vec<Rational>, Obstruction>, GradingError> {
    let n = tops[0].num_vars();
    let width = coefficient_count(n, p);
    let mut m_blocks = Vec::new();
    let mut slack_blocks = Vec::new();
    let mut target = Vec::new();
    let mut components = Vec::new();
    for &r in active {
        let j = degrees[r] - p;
        m_blocks.push(m_matrix_unchecked(&tops[r], degrees[r], p));
        let component = gens[r].homogeneous_component(j);
        target.extend(component.omega_star_coordinates(j).expect("homogeneous component"));
        components.push(component);
        let span: Vec<Vec<Rational>> = reducers(tops, degrees, j)
            .into_iter()
            .map(|(_, _, v)| {
                DualPolynomial::from_degree_coefficients(n, j, &v)
                    .omega_star_coordinates(j)
                    .expect("homogeneous")
            })
            .collect();
        slack_blocks.push((monomial_count(n, j), span));
    }
    let stacked = Matrix::vstack(width, &m_blocks).expect("blocks share the column count");
    let slack_total: usize = slack_blocks.iter().map(|(_, s)| s.len()).sum();
    let mut slack = Matrix::zeros(stacked.rows(), slack_total);
    let (mut row0, mut col0) = (0, 0);
    for (rows, span) in &slack_blocks {
        for (c, v) in span.iter().enumerate() {
            for (r, x) in v.iter().enumerate() {
                slack.set(row0 + r, col0 + c, -x.clone());
            }
        }
        row0 += rows;
        col0 += span.len();
    }
    let system = Matrix::hstack(stacked.rows(), &[stacked.clone(), slack]).expect("same row count");
    let rhs: Vec<Rational> = target.iter().map(|x| -x).collect();
    match system.solve(&rhs).expect("row count matches") {
        Some(x) => Ok(Ok(x[..width].to_vec())),
        None => Ok(Err(Obstruction {
            p,
            rank: stacked.rank(),
            matrix: stacked,
            target,
            components,
        })),
    }
}

/// Replays a graded report against the presentation it came from: the
/// recorded automorphisms carry the original module onto the module of the
/// final generators, which are homogeneous with the original leading forms.
pub fn replay_certificate(pres: &AlgebraPresentation, report: &GradingReport) -> Result<bool, GradingError> {
    if report.outcome != GradingOutcome::Graded {
        return Ok(false);
    }
    let n = pres.num_vars();
    let s = pres.socle_degree();
    let mut basis: Vec<DualPolynomial> = pres.module().basis().to_vec();
    for step in &report.steps {
        let phi = make_phi(n, s, step.p, &step.coefficients)?;
        basis = dual_apply_all(&phi, &basis)?;
    }
    let moved = DualModule::span(n, &basis);
    let target = DualModule::generate(n, &report.generators);
    let homogeneous = report.generators.iter().all(DualPolynomial::is_homogeneous);
    let leading_kept = report
        .generators
        .iter()
        .map(DualPolynomial::leading_form)
        .eq(pres.leading_forms());
    Ok(homogeneous && leading_kept && moved.same_span(&target))
}

/// Dual-basis coordinates over all degrees up to `s`, degree-ascending.
pub fn full_omega_star(g: &DualPolynomial, s: usize) -> Vec<Rational> {
    monomials_up_to(g.num_vars(), s)
        .iter()
        .map(|a| g.coefficient(a) * Rational::from_integer(a.factorial()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::{b_block, block_offset, dual_apply};
    use crate::linalg::int;

    fn dual(n: usize, s: &str) -> DualPolynomial {
        DualPolynomial::parse(n, s).unwrap()
    }

    fn pres(n: usize, gens: &[&str]) -> AlgebraPresentation {
        AlgebraPresentation::parse(n, gens).unwrap()
    }

    #[test]
    fn s5_matrix_pattern() {
        // Symbolic form: a generic quintic in two variables has coordinates
        // z_1..z_6; check the first row against the entry formula by hand.
        let g = dual(2, "y1^5 + 2*y1^4*y2 + 3*y1^3*y2^2 + 4*y1^2*y2^3 + 5*y1*y2^4 + 6*y2^5");
        let z = g.omega_star_coordinates(5).unwrap();
        let m = m_matrix(&g, 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (5, 6));
        let four = int(4);
        assert_eq!(m.row(0), &[&four * &z[0], &four * &z[1], &four * &z[2], int(0), int(0), int(0)][..]);
    }

    #[test]
    fn s5_rank_and_missing_target() {
        let g = dual(2, "y1^3*y2^2");
        let m = m_matrix(&g, 1).unwrap();
        assert_eq!(m.rank(), 4);
        let target = dual(2, "y2^4").omega_star_coordinates(4).unwrap();
        assert!(!m.column_space_contains(&target).unwrap());
    }

    #[test]
    fn quartic_with_zero_last_row() {
        let m = m_matrix(&dual(2, "y1^3*y2"), 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (4, 6));
        assert!(m.row(3).iter().all(Zero::is_zero));
        assert!(m.row(0).iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn level_stack() {
        let tops = [dual(3, "y1^2*y2*y3"), dual(3, "y1*y2^2*y3 + y2*y3^3")];
        let m = m_matrix_level(&tops, 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (20, 18));
        let single = m_matrix(&tops[0], 1).unwrap();
        assert_eq!(m_matrix_level(&tops[..1], 1).unwrap(), single);
        let twice = m_matrix_level(&[tops[0].clone(), tops[0].clone()], 1).unwrap();
        assert_eq!(twice.rank(), single.rank());
        assert!(m_matrix_level(&[tops[0].clone(), dual(3, "y1^3")], 1).is_err());
    }

    #[test]
    fn matrix_identity_against_b_block() {
        let g = dual(2, "y1^4 - 2*y1^2*y2^2 + 3*y1*y2^3");
        let a: Vec<Rational> = [1, -2, 3, 0, 5, -1].iter().map(|&x| int(x)).collect();
        let alpha = g.omega_star_coordinates(4).unwrap();
        let b = b_block(2, 4, 1, &a).unwrap();
        assert_eq!(block_offset(2, 4), 10);
        let lhs = b.vec_mul(&alpha).unwrap();
        let rhs = m_matrix(&g, 1).unwrap().mul_vec(&a).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn block_structure_holds() {
        assert_eq!(verify_block_structure(&dual(2, "y1^3*y2^2"), 1).unwrap(), Ok(()));
        let g = dual(3, "y1^4 + 2*y1*y2^2*y3 - y2^3*y3 + 5*y3^4 + y1^2*y2*y3");
        for p in 1..=3 {
            assert_eq!(verify_block_structure(&g, p).unwrap(), Ok(()));
        }
    }

    #[test]
    fn rank_criterion_cases() {
        assert!(rank_criterion(&dual(2, "y1^4 + y1*y2^3"), 1).unwrap());
        assert!(!rank_criterion(&dual(2, "y1^4"), 1).unwrap());
        assert_eq!(
            rank_criterion(&dual(2, "y1^3*y2^2"), 1),
            Err(GradingError::SocleDegreeTooLarge { degree: 5 })
        );
    }

    #[test]
    fn killing_zero_target() {
        let out = killing_step(&[dual(2, "y1^3*y2 + y1^2")], 1).unwrap();
        assert_eq!(out, KillingOutcome::Solved(vec![int(0); 6]));
    }

    #[test]
    fn killing_almost_stretched_obstructed() {
        match killing_step(&[dual(2, "y1^3*y2 + y2^3")], 1).unwrap() {
            KillingOutcome::Obstructed(o) => {
                assert_eq!(o.target, vec![int(0), int(0), int(0), int(6)]);
                assert!(o.matrix.row(3).iter().all(Zero::is_zero));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn killing_step_is_sound() {
        let g = dual(2, "y1^4 + y1*y2^3 + y1^2*y2 - 3*y2^3");
        let KillingOutcome::Solved(a) = killing_step(std::slice::from_ref(&g), 1).unwrap() else {
            panic!("expected a solution")
        };
        let f = dual_apply(&make_phi(2, 4, 1, &a).unwrap(), &g).unwrap();
        assert!(f.homogeneous_component(3).is_zero());
        assert_eq!(f.homogeneous_component(4), g.homogeneous_component(4));
    }

    #[test]
    fn reduction_examples() {
        let homogeneous = vec![dual(2, "y1^3*y2^2")];
        assert_eq!(reduce_generators(&homogeneous), homogeneous);
        let s5 = vec![dual(2, "y1^3*y2^2 + y2^4")];
        assert_eq!(reduce_generators(&s5), s5);
        let reduced = reduce_generators(&[dual(2, "y1^4 + y1*y2^3 + 3*y1*y2 - y2^2")]);
        assert_eq!(reduced, vec![dual(2, "y1^4 + y1*y2^3")]);
        // Not compressed: y1*y2 is not a second partial of y1^4 + y2^4.
        let reduced = reduce_generators(&[dual(2, "y1^4 + y2^4 + 3*y1*y2 - y2^2")]);
        assert_eq!(reduced, vec![dual(2, "y1^4 + y2^4 + 3*y1*y2")]);
    }

    #[test]
    fn reduction_keeps_module() {
        let gens = vec![dual(3, "y1^2*y2*y3 + y3^3 + y1^2"), dual(3, "y1*y2^2*y3 + y2*y3^3 + y2")];
        let reduced = reduce_generators(&gens);
        assert!(DualModule::generate(3, &gens).same_span(&DualModule::generate(3, &reduced)));
    }

    #[test]
    fn type_two_pair_is_graded() {
        let gens = vec![dual(3, "y1^2*y2*y3 + y3^3"), dual(3, "y1*y2^2*y3 + y2*y3^3")];
        let x1 = Exponent::new(vec![1, 0, 0]);
        let x2 = Exponent::new(vec![0, 1, 0]);
        let diff = contract_monomial(&x2, &gens[1]).sub(&contract_monomial(&x1, &gens[0]));
        assert_eq!(diff, dual(3, "y3^3"));
        let tops: Vec<DualPolynomial> = gens.iter().map(DualPolynomial::leading_form).collect();
        assert!(DualModule::generate(3, &gens).same_span(&DualModule::generate(3, &tops)));
        let p = pres(3, &["y1^2*y2*y3 + y3^3", "y1*y2^2*y3 + y2*y3^3"]);
        let report = canonically_graded(&p).unwrap();
        assert_eq!(report.outcome, GradingOutcome::Graded);
        assert!(replay_certificate(&p, &report).unwrap());
    }

    #[test]
    fn grading_examples() {
        let report = canonically_graded(&pres(2, &["y1^3*y2^2 + y2^4"])).unwrap();
        assert_eq!(report.outcome, GradingOutcome::ObstructedRestricted);
        assert_eq!(report.obstruction.as_ref().unwrap().p, 1);

        let report = canonically_graded(&pres(2, &["y1^3*y2 + y2^3"])).unwrap();
        assert_eq!(report.outcome, GradingOutcome::ObstructedRestricted);

        let p = pres(2, &["y1^3*y2"]);
        let report = canonically_graded(&p).unwrap();
        assert_eq!(report.outcome, GradingOutcome::Graded);
        assert!(report.steps.is_empty());
        assert!(replay_certificate(&p, &report).unwrap());

        let p = pres(2, &["y1^4 + y1*y2^3 + y1^2*y2 - 3*y2^3 + y1*y2"]);
        let report = canonically_graded(&p).unwrap();
        assert_eq!(report.outcome, GradingOutcome::Graded);
        assert!(replay_certificate(&p, &report).unwrap());
    }
}

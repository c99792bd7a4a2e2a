//! Pinned worked examples with their expected outcomes, plus a seeded
//! sample of compressed Gorenstein quartics with cubic tails.

use apolar::catalecticant::is_compressed_level;
use apolar::grading::{canonically_graded, m_matrix, m_matrix_level, replay_certificate, GradingOutcome};
use apolar::inverse_system::{hilbert_function, is_compressed, socle_type, AlgebraPresentation};
use apolar::monomial::monomials_of_degree;
use apolar::{DualPolynomial, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::analyses::{Analysis, AnalysisRequest};
use crate::report::Report;
use crate::CliError;

pub struct PaperExamples;

struct Expectation {
    name: String,
    expected: String,
    observed: String,
}

impl Expectation {
    fn new(name: &str, expected: impl ToString, observed: impl ToString) -> Self {
        Self {
            name: name.to_string(),
            expected: expected.to_string(),
            observed: observed.to_string(),
        }
    }

    fn passed(&self) -> bool {
        self.expected == self.observed
    }
}

fn pres(n: usize, gens: &[&str]) -> AlgebraPresentation {
    AlgebraPresentation::parse(n, gens).expect("pinned example parses")
}

fn outcome(p: &AlgebraPresentation) -> Result<String, CliError> {
    let report = canonically_graded(p)?;
    Ok(match report.obstruction {
        Some(o) => format!("{} at p = {}", report.outcome, o.p),
        None => report.outcome.to_string(),
    })
}

fn hf(p: &AlgebraPresentation) -> Result<String, CliError> {
    Ok(hilbert_function(p)?.to_string())
}

fn quintic() -> Result<Vec<Expectation>, CliError> {
    let p = pres(2, &["y1^3*y2^2 + y2^4"]);
    let top = DualPolynomial::parse(2, "y1^3*y2^2")?;
    let m = m_matrix(&top, 1)?;
    let tail = DualPolynomial::parse(2, "y2^4")?.omega_star_coordinates(4)?;
    Ok(vec![
        Expectation::new("quintic: Hilbert function", "1 2 3 3 2 1", hf(&p)?),
        Expectation::new("quintic: compressed", true, is_compressed(&p)?),
        Expectation::new("quintic: rank of M at p = 1", 4, m.rank()),
        Expectation::new(
            "quintic: y2^4 in the image of M",
            false,
            m.column_space_contains(&tail).expect("lengths match"),
        ),
        Expectation::new("quintic: grading", "OBSTRUCTED_RESTRICTED at p = 1", outcome(&p)?),
    ])
}

fn type_two() -> Result<Vec<Expectation>, CliError> {
    let p = pres(3, &["y1^2*y2*y3 + y3^3", "y1*y2^2*y3 + y2*y3^3"]);
    let stacked = m_matrix_level(&p.leading_forms(), 1)?;
    let mut target = DualPolynomial::parse(3, "y3^3")?.omega_star_coordinates(3)?;
    target.extend(vec![Rational::from_integer(0.into()); 10]);
    Ok(vec![
        Expectation::new("type two: Hilbert function", "1 3 6 6 2", hf(&p)?),
        Expectation::new("type two: socle type", "0 0 0 0 2", socle_type(&p)?),
        Expectation::new("type two: compressed", true, is_compressed(&p)?),
        Expectation::new(
            "type two: stacked M shape",
            "20x18",
            format!("{}x{}", stacked.rows(), stacked.cols()),
        ),
        Expectation::new(
            "type two: y3^3 in the image of stacked M",
            false,
            stacked.column_space_contains(&target).expect("lengths match"),
        ),
        Expectation::new("type two: grading", "OBSTRUCTED_RESTRICTED at p = 1", outcome(&p)?),
    ])
}

fn almost_stretched() -> Result<Vec<Expectation>, CliError> {
    let a = pres(2, &["y1^3*y2"]);
    let b = pres(2, &["y1^3*y2 + y2^3"]);
    let c = pres(2, &["y1^3*y2 - y1*y2^3"]);
    Ok(vec![
        Expectation::new("almost stretched (a): grading", "GRADED", outcome(&a)?),
        Expectation::new("almost stretched (b): Hilbert function", "1 2 2 2 1", hf(&b)?),
        Expectation::new("almost stretched (b): compressed", false, is_compressed(&b)?),
        Expectation::new("almost stretched (b): grading", "OBSTRUCTED_RESTRICTED at p = 1", outcome(&b)?),
        Expectation::new("almost stretched (c): grading", "GRADED", outcome(&c)?),
    ])
}

fn random_form(rng: &mut ChaCha8Rng, n: usize, d: usize) -> DualPolynomial {
    let terms = monomials_of_degree(n, d)
        .into_iter()
        .map(|e| (e, Rational::from_integer(rng.gen_range(-3i64..=3).into())))
        .collect::<Vec<_>>();
    DualPolynomial::from_terms(n, terms).expect("exponents share the variable count")
}

fn sampled_quartics(seed: u64) -> Result<Vec<Expectation>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for n in [2, 3] {
        let top = loop {
            let g = random_form(&mut rng, n, 4);
            if !g.is_zero() && is_compressed_level(std::slice::from_ref(&g))? {
                break g;
            }
        };
        let g = top.add(&random_form(&mut rng, n, 3));
        let p = AlgebraPresentation::new(n, vec![g])?;
        let report = canonically_graded(&p)?;
        let replays = replay_certificate(&p, &report)?;
        let observed = if report.outcome == GradingOutcome::Graded && replays {
            "GRADED".to_string()
        } else {
            format!("{} (replays: {replays}) for {p}", report.outcome)
        };
        out.push(Expectation::new(
            &format!("sampled compressed quartic with cubic tail, n = {n}"),
            "GRADED",
            observed,
        ));
    }
    Ok(out)
}

impl Analysis for PaperExamples {
    fn name(&self) -> &'static str {
        "paper-examples"
    }

    fn run(&self, request: &AnalysisRequest) -> Result<Report, CliError> {
        let mut all = Vec::new();
        all.extend(quintic()?);
        all.extend(type_two()?);
        all.extend(almost_stretched()?);
        all.extend(sampled_quartics(request.seed)?);
        let passed = all.iter().filter(|e| e.passed()).count();
        let rows: Vec<Value> = all
            .iter()
            .map(|e| {
                json!({
                    "name": e.name,
                    "expected": e.expected,
                    "observed": e.observed,
                    "pass": e.passed(),
                })
            })
            .collect();
        Ok(Report::new()
            .with("command", self.name())
            .with("seed", request.seed.to_string())
            .with("expectations", rows)
            .with("passed", passed)
            .with("failed", all.len() - passed))
    }
}

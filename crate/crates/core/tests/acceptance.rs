//! Acceptance criteria, one line of output each. Run with
//! `cargo test -p apolar-core --test acceptance`.

mod common;

use std::time::Instant;

use apolar::automorphism::{b_block, block_offset, coefficient_count, dual_apply, make_phi, matrix_of};
use apolar::catalecticant::{compressed_hf, delta_matrix, hilbert_from_delta};
use apolar::dual_module::derivative_span;
use apolar::grading::{
    canonically_graded, m_matrix, m_matrix_level, rank_criterion, replay_certificate, GradingError, GradingOutcome,
    GradingReport,
};
use apolar::inverse_system::{annihilator_upto, hilbert_function, is_compressed, socle_type, AlgebraPresentation};
use apolar::monomial::{binomial, monomial_count, monomials_up_to};
use apolar::poly::pairing;
use apolar::{DualPolynomial, JetPolynomial, Matrix, Rational};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion<'a> = (&'a str, Box<dyn FnOnce(&mut ChaCha8Rng) -> Check>);

fn ensure(ok: bool, what: impl Into<String>) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

/// Runs every sub-check and joins the failures.
fn all(checks: Vec<Check>) -> Check {
    let failures: Vec<String> = checks.into_iter().filter_map(Result::err).collect();
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures.join("; "))
    }
}

fn pres(n: usize, gens: &[&str]) -> AlgebraPresentation {
    AlgebraPresentation::parse(n, gens).unwrap()
}

fn jet_in_span(basis: &[JetPolynomial], f: &JetPolynomial) -> bool {
    let monos = monomials_up_to(f.num_vars(), f.order());
    let rows: Vec<Vec<Rational>> = basis
        .iter()
        .map(|b| monos.iter().map(|e| b.coefficient(e)).collect())
        .collect();
    let mut with = rows.clone();
    with.push(monos.iter().map(|e| f.coefficient(e)).collect());
    apolar::linalg::rank_of_vectors(monos.len(), &rows) == apolar::linalg::rank_of_vectors(monos.len(), &with)
}

fn outcome(report: &GradingReport) -> String {
    match &report.obstruction {
        Some(o) => format!("{} at p = {}", report.outcome, o.p),
        None => report.outcome.to_string(),
    }
}

fn graded_and_replays(p: &AlgebraPresentation, label: &str) -> Check {
    let report = canonically_graded(p).map_err(|e| format!("{label}: {e}"))?;
    if report.outcome != GradingOutcome::Graded {
        return Err(format!("{label}: {} gave {}", p, outcome(&report)));
    }
    ensure(
        replay_certificate(p, &report).map_err(|e| e.to_string())?,
        format!("{label}: certificate of {p} does not replay"),
    )
}

fn quintic_with_quartic_tail() -> Check {
    let p = pres(2, &["y1^3*y2^2 + y2^4"]);
    let ann = annihilator_upto(&p, 4).unwrap();
    let m = m_matrix(&dual(2, "y1^3*y2^2"), 1).unwrap();
    let tail = dual(2, "y2^4").omega_star_coordinates(4).unwrap();
    let report = canonically_graded(&p).unwrap();
    all(vec![
        ensure(hilbert_function(&p).unwrap().0 == [1, 2, 3, 3, 2, 1], "hilbert function"),
        ensure(jet_in_span(&ann, &JetPolynomial::parse(2, 6, "x1^4").unwrap()), "x1^4 not annihilating"),
        ensure(
            jet_in_span(&ann, &JetPolynomial::parse(2, 6, "x2^3 - 2*x1^3*x2").unwrap()),
            "x2^3 - 2*x1^3*x2 not annihilating",
        ),
        ensure(is_compressed(&p).unwrap(), "not compressed"),
        ensure(m.rank() == 4, format!("obstruction rank {}", m.rank())),
        ensure(!m.column_space_contains(&tail).unwrap(), "y2^4 reachable"),
        ensure(
            report.outcome == GradingOutcome::ObstructedRestricted && report.obstruction.as_ref().map(|o| o.p) == Some(1),
            format!("grading outcome {}", outcome(&report)),
        ),
    ])
}

fn type_two_quartics() -> Check {
    let p = pres(3, &["y1^2*y2*y3 + y3^3", "y1*y2^2*y3 + y2*y3^3"]);
    let tops = p.leading_forms();
    let stacked = m_matrix_level(&tops, 1).unwrap();
    let mut target = dual(3, "y3^3").omega_star_coordinates(3).unwrap();
    target.extend(vec![q(0); 10]);
    let report = canonically_graded(&p).unwrap();
    let same_as_leading = p.module().same_span(&p.leading_presentation().module());
    all(vec![
        ensure(hilbert_function(&p).unwrap().0 == [1, 3, 6, 6, 2], "hilbert function"),
        ensure(socle_type(&p).unwrap().0 == [0, 0, 0, 0, 2], "socle type"),
        ensure(is_compressed(&p).unwrap(), "not compressed"),
        ensure((stacked.rows(), stacked.cols()) == (20, 18), "stacked shape"),
        ensure(!stacked.column_space_contains(&target).unwrap(), "y3^3 reachable"),
        ensure(
            report.outcome == GradingOutcome::ObstructedRestricted,
            format!(
                "grading outcome {} (inverse system equals that of the leading forms: {same_as_leading})",
                outcome(&report)
            ),
        ),
    ])
}

fn almost_stretched_triple() -> Check {
    let a = pres(2, &["y1^3*y2"]);
    let b = pres(2, &["y1^3*y2 + y2^3"]);
    let c = pres(2, &["y1^3*y2 - y1*y2^3"]);
    let rb = canonically_graded(&b).unwrap();
    all(vec![
        graded_and_replays(&a, "(a)"),
        ensure(hilbert_function(&b).unwrap().0 == [1, 2, 2, 2, 1], "(b) hilbert function"),
        ensure(!is_compressed(&b).unwrap(), "(b) compressed"),
        ensure(rb.outcome == GradingOutcome::ObstructedRestricted, format!("(b) {}", outcome(&rb))),
        graded_and_replays(&c, "(c)"),
    ])
}

fn gorenstein_tails(rng: &mut ChaCha8Rng) -> Check {
    let mut checks = Vec::new();
    for (s, count) in [(4, 200), (3, 200)] {
        for k in 0..count {
            let n = 2 + k % 2;
            let top = compressed_level_forms(rng, n, s, 1).remove(0);
            let g = with_tail(rng, &top, s - 1..s);
            let p = AlgebraPresentation::new(n, vec![g]).unwrap();
            checks.push(graded_and_replays(&p, &format!("s = {s}")));
        }
    }
    all(checks)
}

fn level_cases(rng: &mut ChaCha8Rng) -> Check {
    // (n, s, t): s <= 3 any type; s = 4 Gorenstein; s = 4 in two variables.
    let shapes = [
        (2, 2, 2),
        (3, 2, 3),
        (2, 3, 1),
        (2, 3, 2),
        (2, 3, 3),
        (3, 3, 1),
        (3, 3, 2),
        (3, 3, 4),
        (4, 3, 2),
        (2, 4, 1),
        (3, 4, 1),
        (2, 4, 2),
        (2, 4, 3),
    ];
    let mut checks = Vec::new();
    for &(n, s, t) in &shapes {
        for _ in 0..12 {
            let p = loop {
                let tops = compressed_level_forms(rng, n, s, t);
                let gens = tops.iter().map(|g| with_tail(rng, g, 0..s)).collect();
                let p = AlgebraPresentation::new(n, gens).unwrap();
                if is_compressed(&p).unwrap() {
                    break p;
                }
            };
            checks.push(graded_and_replays(&p, &format!("n = {n}, s = {s}, t = {t}")));
        }
    }
    all(checks)
}

fn rank_maximality(rng: &mut ChaCha8Rng) -> Check {
    let mut mismatches = Vec::new();
    for _ in 0..500 {
        let n = rng.gen_range(2..=3);
        let s = rng.gen_range(2..=4);
        let density = rng.gen_range(0.1..1.0);
        let g = random_nonzero_form(rng, n, s, density);
        for p in 1..s {
            match rank_criterion(&g, p) {
                Ok(_) => {}
                Err(GradingError::RankCriterionMismatch { delta, obstruction, .. }) => {
                    mismatches.push(format!("{g} (p = {p}: Δ maximal {delta}, M maximal {obstruction})"))
                }
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    let g5 = dual(2, "y1^3*y2^2");
    // Second partials of y1^3*y2^2 by brute force: y1*y2^2, y1^2*y2, y1^3.
    let second_partials = derivative_span(2, std::slice::from_ref(&g5), 3).len();
    let delta = delta_matrix(&g5, 5, 2).unwrap();
    let m = m_matrix(&g5, 1).unwrap();
    all(vec![
        ensure(
            mismatches.is_empty(),
            format!(
                "{} of 500 forms disagree, first: {}",
                mismatches.len(),
                mismatches.first().cloned().unwrap_or_default()
            ),
        ),
        ensure(second_partials == 3 && delta.rank() == 3, "quintic Δ^2 not maximal"),
        ensure(m.rank() == 4 && m.rows() == 5, "quintic obstruction rank"),
        ensure(
            matches!(rank_criterion(&g5, 1), Err(GradingError::SocleDegreeTooLarge { degree: 5 })),
            "quintic accepted",
        ),
    ])
}

fn oracle_equivalence(rng: &mut ChaCha8Rng) -> Check {
    let mut checks = Vec::new();
    for _ in 0..500 {
        let n = rng.gen_range(1..=3);
        let s = rng.gen_range(1..=6);
        let density = rng.gen_range(0.1..1.0);
        let g = random_nonzero_form(rng, n, s, density);
        let hf = hilbert_from_delta(&g).unwrap();
        let brute: Vec<usize> = (0..=s).map(|j| derivative_span(n, std::slice::from_ref(&g), j).len()).collect();
        checks.push(ensure(hf.0 == brute, format!("{g}: {hf} vs {brute:?}")));
        for i in 0..=s {
            let ok = delta_matrix(&g, s, i).unwrap() == delta_matrix(&g, s, s - i).unwrap().transpose();
            checks.push(ensure(ok, format!("{g}: Δ^{i} transpose")));
        }
    }
    all(checks)
}

fn automorphism_algebra(rng: &mut ChaCha8Rng) -> Check {
    let mut checks = Vec::new();
    for _ in 0..100 {
        let n = rng.gen_range(2..=3);
        let s = rng.gen_range(2..=4);
        let p = rng.gen_range(1..s);
        let a: Vec<Rational> = (0..coefficient_count(n, p)).map(|_| q(rng.gen_range(-3..=3))).collect();
        let phi = make_phi(n, s, p, &a).unwrap();
        let m = matrix_of(&phi).unwrap();
        let sub: Matrix = m.submatrix(block_offset(n, s), monomial_count(n, s), block_offset(n, s - p), monomial_count(n, s - p));
        checks.push(ensure(sub == b_block(n, s, p, &a).unwrap(), "b_block differs from matrix block"));

        let g = DualPolynomial::from_terms(
            n,
            monomials_up_to(n, s).into_iter().map(|e| (e, q(rng.gen_range(-3..=3)))),
        )
        .unwrap();
        let f = dual_apply(&phi, &g).unwrap();
        for w in monomials_up_to(n, s) {
            let mono = JetPolynomial::monomial(s, w.clone(), q(1));
            let lhs = pairing(&mono, &f).unwrap();
            let rhs = pairing(&phi.apply(&mono), &g).unwrap();
            checks.push(ensure(lhs == rhs, format!("pairing at {w}")));
        }

        let top = random_nonzero_form(rng, n, s, 1.0);
        let alpha = top.omega_star_coordinates(s).unwrap();
        let lhs = b_block(n, s, p, &a).unwrap().vec_mul(&alpha).unwrap();
        let rhs = m_matrix(&top, p).unwrap().mul_vec(&a).unwrap();
        checks.push(ensure(lhs == rhs, "obstruction matrix identity"));
    }
    all(checks)
}

fn compressed_formulas() -> Check {
    let mut checks = vec![ensure(compressed_hf(3, &[0, 0, 0, 0, 2]).unwrap().0 == [1, 3, 6, 6, 2], "(3, E = 0 0 0 0 2)")];
    for i in 2..=5 {
        checks.push(ensure(
            compressed_hf(2, &[0, 0, 0, 0, i]).unwrap().0 == [1, 2, 3, 4, i],
            format!("(2, e_4 = {i})"),
        ));
    }
    for n in 2..=5 {
        checks.push(ensure(
            compressed_hf(n, &[0, 0, 0, 0, 1]).unwrap().0 == [1, n, binomial(n + 1, 2), n, 1],
            format!("Gorenstein n = {n}"),
        ));
    }
    all(checks)
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let criteria: Vec<Criterion> = vec![
        ("1 extremal Gorenstein quintic y1^3*y2^2 + y2^4", Box::new(|_| quintic_with_quartic_tail())),
        ("2 compressed type-two quartics", Box::new(|_| type_two_quartics())),
        ("3 almost stretched quartics", Box::new(|_| almost_stretched_triple())),
        ("4 compressed Gorenstein with tails", Box::new(gorenstein_tails)),
        ("5 compressed level presentations", Box::new(level_cases)),
        ("6 rank maximality of Δ vs obstruction matrix", Box::new(rank_maximality)),
        ("7 catalecticant vs derivative spans", Box::new(oracle_equivalence)),
        ("8 automorphism matrices and dual action", Box::new(automorphism_algebra)),
        ("9 compressed Hilbert functions", Box::new(|_| compressed_formulas())),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let result = run(&mut rng);
        let elapsed = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("PASS criterion {name} ({elapsed:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({elapsed:.2}s): {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

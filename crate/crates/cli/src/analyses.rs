//! The analyses behind each subcommand, registered by name.

use apolar::catalecticant::{compressed_hf, delta_matrix, stacked_delta};
use apolar::grading::{canonically_graded, m_matrix_level, GradingReport};
use apolar::inverse_system::{macaulay_validate, socle_type, summarize, AlgebraPresentation};
use serde_json::{json, Value};

use crate::hilbert::default_methods;
use crate::replication;
use crate::report::{counts, matrix, polynomial, polynomials, rationals, Report};
use crate::CliError;

/// Everything a subcommand may need.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AnalysisRequest {
    pub command: String,
    pub num_vars: usize,
    pub generators: Vec<String>,
    pub q: Option<usize>,
    pub p: Option<usize>,
    pub check: bool,
    pub method: Option<String>,
    pub seed: u64,
}

impl AnalysisRequest {
    pub fn presentation(&self) -> Result<AlgebraPresentation, CliError> {
        Ok(AlgebraPresentation::parse(self.num_vars, &self.generators)?)
    }

    /// Report header echoing the inputs.
    fn header(&self) -> Report {
        Report::new()
            .with("command", self.command.as_str())
            .with("num_vars", self.num_vars)
            .with("generators", self.generators.clone())
    }
}

pub trait Analysis: Send + Sync {
    fn name(&self) -> &'static str;
    fn run(&self, request: &AnalysisRequest) -> Result<Report, CliError>;
}

#[derive(Default)]
pub struct Registry {
    analyses: Vec<Box<dyn Analysis>>,
}

impl Registry {
    pub fn register(&mut self, analysis: Box<dyn Analysis>) {
        self.analyses.retain(|a| a.name() != analysis.name());
        self.analyses.push(analysis);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Analysis> {
        self.analyses.iter().find(|a| a.name() == name).map(|a| a.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.analyses.iter().map(|a| a.name()).collect()
    }

    pub fn run(&self, request: &AnalysisRequest) -> Result<Report, CliError> {
        let analysis = self
            .get(&request.command)
            .ok_or_else(|| CliError::Parse(format!("unknown command '{}'", request.command)))?;
        analysis.run(request)
    }
}

pub fn default_registry() -> Registry {
    let mut registry = Registry::default();
    registry.register(Box::new(Hilbert));
    registry.register(Box::new(Socle));
    registry.register(Box::new(Delta));
    registry.register(Box::new(ObstructionMatrix));
    registry.register(Box::new(Compressed));
    registry.register(Box::new(Graded));
    registry.register(Box::new(replication::PaperExamples));
    registry
}

struct Hilbert;

impl Analysis for Hilbert {
    fn name(&self) -> &'static str {
        "hilbert"
    }

    fn run(&self, request: &AnalysisRequest) -> Result<Report, CliError> {
        let pres = request.presentation()?;
        let methods = default_methods();
        let name = request.method.as_deref().unwrap_or("inverse-system");
        let method = methods.get(name).ok_or_else(|| {
            CliError::Parse(format!("unknown method '{name}', expected one of {}", methods.names().join(", ")))
        })?;
        let hf = method.compute(&pres)?;
        let mut report = request
            .header()
            .with("method", method.name())
            .with("hilbert_function", counts(hf.values()))
            .with("length", hf.length());
        if request.check {
            let mut check = Report::new();
            let mut values = Vec::new();
            for other in methods.all() {
                if other.applies_to(&pres) {
                    let h = other.compute(&pres)?;
                    check.insert(other.name(), counts(h.values()));
                    values.push(h);
                } else {
                    check.insert(other.name(), "not applicable");
                }
            }
            let agree = values.windows(2).all(|w| w[0] == w[1]);
            check.insert("agree", agree);
            if !agree {
                return Err(CliError::Invariant(format!(
                    "Hilbert function methods disagree: {}",
                    check.to_text().replace('\n', "; ")
                )));
            }
            report.insert("check", check);
        }
        Ok(report)
    }
}

struct Socle;

impl Analysis for Socle {
    fn name(&self) -> &'static str {
        "socle"
    }

    fn run(&self, request: &AnalysisRequest) -> Result<Report, CliError> {
        let pres = request.presentation()?;
        let e = socle_type(&pres)?;
        Ok(request
            .header()
            .with("socle_type", counts(e.values()))
            .with("type", e.type_number())
            .with("level", e.is_level()))
    }
}

fn homogeneous_forms(pres: &AlgebraPresentation) -> Result<usize, CliError> {
    let degrees = pres.degrees();
    if !pres.is_homogeneous() || degrees.iter().any(|&d| d != degrees[0]) {
        return Err(CliError::Validation("this command needs homogeneous generators of one degree".into()));
    }
    Ok(degrees[0])
}

struct Delta;

impl Analysis for Delta {
    fn name(&self) -> &'static str {
        "delta"
    }

    fn run(&self, request: &AnalysisRequest) -> Result<Report, CliError> {
        let q = request.q.ok_or_else(|| CliError::Parse("delta needs -q <order>".into()))?;
        let pres = request.presentation()?;
        let s = homogeneous_forms(&pres)?;
        let m = if pres.generators().len() == 1 {
            delta_matrix(&pres.generators()[0], s, q)?
        } else {
            stacked_delta(pres.generators(), q)?
        };
        Ok(request
            .header()
            .with("q", q)
            .with("shape", counts(&[m.rows(), m.cols()]))
            .with("rank", m.rank())
            .with("matrix", matrix(&m)))
    }
}

struct ObstructionMatrix;

impl Analysis for ObstructionMatrix {
    fn name(&self) -> &'static str {
        "mmatrix"
    }

    fn run(&self, request: &AnalysisRequest) -> Result<Report, CliError> {
        let p = request.p.ok_or_else(|| CliError::Parse("mmatrix needs -p <step>".into()))?;
        let pres = request.presentation()?;
        homogeneous_forms(&pres)?;
        let m = m_matrix_level(pres.generators(), p)?;
        let rank = m.rank();
        Ok(request
            .header()
            .with("p", p)
            .with("shape", counts(&[m.rows(), m.cols()]))
            .with("rank", rank)
            .with("maximal_rank", rank == m.rows().min(m.cols()))
            .with("matrix", matrix(&m)))
    }
}

struct Compressed;

impl Analysis for Compressed {
    fn name(&self) -> &'static str {
        "compressed"
    }

    fn run(&self, request: &AnalysisRequest) -> Result<Report, CliError> {
        let pres = request.presentation()?;
        let summary = summarize(&pres)?;
        let bound = compressed_hf(pres.num_vars(), summary.socle.values())?;
        Ok(request
            .header()
            .with("hilbert_function", counts(summary.hilbert.values()))
            .with("socle_type", counts(summary.socle.values()))
            .with("compressed_hilbert_function", counts(bound.values()))
            .with("compressed", summary.compressed)
            .with("warnings", summary.warnings))
    }
}

struct Graded;

impl Analysis for Graded {
    fn name(&self) -> &'static str {
        "graded"
    }

    fn run(&self, request: &AnalysisRequest) -> Result<Report, CliError> {
        let pres = request.presentation()?;
        macaulay_validate(&pres)?;
        let summary = summarize(&pres)?;
        let grading = canonically_graded(&pres)?;
        Ok(request
            .header()
            .with("hilbert_function", counts(summary.hilbert.values()))
            .with("socle_type", counts(summary.socle.values()))
            .with("compressed", summary.compressed)
            .with("grading", grading_document(&grading)))
    }
}

pub fn grading_document(grading: &GradingReport) -> Value {
    let steps: Vec<Value> = grading
        .steps
        .iter()
        .map(|step| json!({ "p": step.p, "coefficients": rationals(&step.coefficients) }))
        .collect();
    let mut doc = Report::new()
        .with("outcome", grading.outcome.as_str())
        .with("steps", steps)
        .with("generators", polynomials(&grading.generators));
    if let Some(o) = &grading.obstruction {
        let nonzero: Vec<Value> = o.components.iter().filter(|c| !c.is_zero()).map(polynomial).collect();
        doc.insert(
            "obstruction",
            Report::new()
                .with("p", o.p)
                .with("shape", counts(&[o.matrix.rows(), o.matrix.cols()]))
                .with("rank", o.rank)
                .with("target", nonzero)
                .with("target_vector", rationals(&o.target))
                .with("matrix", matrix(&o.matrix)),
        );
    }
    doc.insert("notes", grading.notes.clone());
    doc.into_value()
}

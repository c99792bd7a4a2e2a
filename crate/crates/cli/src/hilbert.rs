//! Interchangeable ways of computing a Hilbert function.

use apolar::catalecticant::hilbert_from_stacked_delta;
use apolar::inverse_system::{hilbert_function, AlgebraPresentation};
use apolar::HilbertFunction;

use crate::CliError;

pub trait HilbertMethod: Send + Sync {
    fn name(&self) -> &'static str;
    fn applies_to(&self, pres: &AlgebraPresentation) -> bool;
    fn compute(&self, pres: &AlgebraPresentation) -> Result<HilbertFunction, CliError>;
}

/// Graded pieces of the module generated under contraction.
pub struct InverseSystem;

impl HilbertMethod for InverseSystem {
    fn name(&self) -> &'static str {
        "inverse-system"
    }

    fn applies_to(&self, _pres: &AlgebraPresentation) -> bool {
        true
    }

    fn compute(&self, pres: &AlgebraPresentation) -> Result<HilbertFunction, CliError> {
        Ok(hilbert_function(pres)?)
    }
}

/// Ranks of stacked catalecticants; forms of one common degree only.
pub struct Catalecticant;

impl HilbertMethod for Catalecticant {
    fn name(&self) -> &'static str {
        "catalecticant"
    }

    fn applies_to(&self, pres: &AlgebraPresentation) -> bool {
        let degrees = pres.degrees();
        pres.is_homogeneous() && degrees.iter().all(|&d| d == degrees[0])
    }

    fn compute(&self, pres: &AlgebraPresentation) -> Result<HilbertFunction, CliError> {
        if !self.applies_to(pres) {
            return Err(CliError::Validation(
                "catalecticant method needs homogeneous generators of one degree".into(),
            ));
        }
        apolar::inverse_system::macaulay_validate(pres)?;
        Ok(hilbert_from_stacked_delta(pres.generators())?)
    }
}

#[derive(Default)]
pub struct HilbertMethods {
    methods: Vec<Box<dyn HilbertMethod>>,
}

impl HilbertMethods {
    pub fn register(&mut self, method: Box<dyn HilbertMethod>) {
        self.methods.retain(|m| m.name() != method.name());
        self.methods.push(method);
    }

    pub fn get(&self, name: &str) -> Option<&dyn HilbertMethod> {
        self.methods.iter().find(|m| m.name() == name).map(|m| m.as_ref())
    }

    pub fn all(&self) -> impl Iterator<Item = &dyn HilbertMethod> {
        self.methods.iter().map(|m| m.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.methods.iter().map(|m| m.name()).collect()
    }
}

pub fn default_methods() -> HilbertMethods {
    let mut methods = HilbertMethods::default();
    methods.register(Box::new(InverseSystem));
    methods.register(Box::new(Catalecticant));
    methods
}

//! Exact computations with Artin algebras given by Macaulay inverse systems:
//! Hilbert functions, socle types, catalecticant matrices and a procedure
//! deciding whether lower-degree parts of dual generators can be removed by
//! automorphisms.

pub mod automorphism;
pub mod catalecticant;
pub mod dual_module;
pub mod grading;
pub mod inverse_system;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;

pub use automorphism::{b_block, dual_apply, make_phi, matrix_of, TruncatedAutomorphism};
pub use catalecticant::{compressed_hf, delta_matrix, hilbert_from_delta, HilbertFunction};
pub use dual_module::{derivative_span, DualModule};
pub use grading::{canonically_graded, GradingOutcome, GradingReport};
pub use inverse_system::{hilbert_function, socle_type, AlgebraPresentation, SocleType};
pub use linalg::{Matrix, Rational};
pub use monomial::Exponent;
pub use poly::{contract, DualPolynomial, JetPolynomial};

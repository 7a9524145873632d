//! The self-map phi_{lambda,p} of P^1 induced by the Higgs-de Rham flow on
//! rank-2 parabolic Higgs bundles over (P^1, {0, 1, lambda, infinity}):
//! construction from the Hankel determinant closed form, orbit dynamics over
//! finite fields, and the lifting-torsor data (Artin-Schreier equation and
//! torsor coefficient).

pub mod build;
pub mod dynamics;
pub mod export;
pub mod torsor;

pub use build::{build_selfmap, build_selfmap_symbolic, SelfMap};
pub use dynamics::{extend_with_lambda, OrbitGraph, PeriodicPoint};
pub use torsor::{artin_schreier_solve, torsor_coefficient};

use std::fmt;

/// Errors across the flow-map layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlowError {
    /// lambda in {0, 1}.
    BadLambda,
    /// p is not an odd prime.
    BadPrime(u64),
    /// The coefficient field characteristic differs from p.
    CharMismatch { p: u64, char_of_field: u64 },
    /// Exhaustive sweeps are capped at q <= 10^6.
    FieldTooLarge(u64),
    /// The torsor coefficient was requested at a pole of phi-tilde'.
    PoleAtPoint,
    /// The determinant construction degenerated (not expected for any
    /// admissible lambda).
    Degenerate,
}

impl fmt::Display for FlowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlowError::BadLambda => write!(f, "lambda must avoid 0 and 1"),
            FlowError::BadPrime(p) => write!(f, "{} is not an odd prime", p),
            FlowError::CharMismatch { p, char_of_field } => {
                write!(f, "field characteristic {} does not match p = {}", char_of_field, p)
            }
            FlowError::FieldTooLarge(q) => write!(f, "field order {} above the desk cap", q),
            FlowError::PoleAtPoint => write!(f, "phi-tilde' has a pole at the requested point"),
            FlowError::Degenerate => write!(f, "determinant construction degenerated"),
        }
    }
}

impl std::error::Error for FlowError {}

/// The desk-scale cap shared by the exhaustive dynamics operations.
pub const FIELD_CAP: u64 = 1_000_000;

//! Error type shared by all modules of the crate.

use alloc::string::String;
use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Errors produced by geometry, embedding, solver, and parsing operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input too small or collapsed to carry out the operation (e.g. fewer
    /// than two distinct points, an empty secant set).
    DegenerateInput(String),
    /// A numeric parameter is outside its admissible range.
    Domain(String),
    /// Vector or matrix dimensions do not agree.
    Dimension { expected: usize, got: usize },
    /// Malformed IDX or CSV input; `line` is 1-based where applicable.
    Format { line: Option<usize>, message: String },
    /// A class does not contain enough members for the requested split.
    InsufficientData {
        class: i64,
        available: usize,
        needed: usize,
    },
    /// The constrained program stayed infeasible after all ε relaxations.
    Infeasible {
        best_residual: f64,
        eps_last: f64,
        relaxations: u32,
    },
    /// Floating-point state inconsistent with the solver's feasibility
    /// certificate (e.g. the last embedding coordinate would be imaginary
    /// beyond tolerance).
    Numerical(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegenerateInput(msg) => write!(f, "degenerate input: {msg}"),
            Error::Domain(msg) => write!(f, "parameter out of range: {msg}"),
            Error::Dimension { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::Format { line: Some(l), message } => {
                write!(f, "format error at line {l}: {message}")
            }
            Error::Format { line: None, message } => write!(f, "format error: {message}"),
            Error::InsufficientData {
                class,
                available,
                needed,
            } => write!(
                f,
                "class {class} has {available} members, {needed} needed for the split"
            ),
            Error::Infeasible {
                best_residual,
                eps_last,
                relaxations,
            } => write!(
                f,
                "constraints infeasible after {relaxations} relaxation(s) \
                 (last ε = {eps_last}, best residual = {best_residual:.3e})"
            ),
            Error::Numerical(msg) => write!(f, "numerical error: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

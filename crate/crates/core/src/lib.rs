//! Numerical laboratory for composition operators C_φ on the Hardy space H²
//! of Dirichlet series.
//!
//! A symbol ψ(s) = c₀s + φ(s) with φ a Dirichlet series induces the
//! composition operator C_ψ(f) = f ∘ ψ.  This crate provides the desk-scale
//! machinery to study such operators numerically:
//!
//! - [`series`] — exact-coefficient arithmetic on truncated Dirichlet series
//!   (convolution, exp/log, twists by polytorus characters);
//! - [`special`] — Riemann ζ, ζ'' and Γ to the accuracy the kernels need;
//! - [`symbols`] — construction and range validation of symbols, including
//!   closed-form disk-lift and sector-lift families;
//! - [`counting`] — the mean counting function M_φ, preimage enumeration by
//!   the argument principle, Green's functions, Littlewood-type bounds;
//! - [`operator`] — truncated operator matrices, singular values and Schatten
//!   norms, the Stanton identity, and the Toeplitz operator on (D₋₂)₀;
//! - [`criteria`] — Schatten-class integral criteria, Carleson box and Schur
//!   tests, embedding inequalities;
//! - [`polytorus`] — Monte Carlo over characters: boundary values, the
//!   boundary-value Schatten estimator, and H^p norms.
//!
//! The `dirichlet-hardy` binary exposes the same functionality as a small
//! CLI (see [`cli`]); the `examples/` directory has one runnable example per
//! capability.

pub mod cli;
pub mod counting;
pub mod criteria;
pub mod operator;
pub mod polytorus;
pub mod quad;
pub mod roots;
pub mod series;
pub mod special;
pub mod symbols;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("symbol class violation: {0}")]
    ClassViolation(String),
    #[error("numerical non-convergence: {0}")]
    Convergence(String),
    #[error("truncation overflow: {0}")]
    Truncation(String),
    #[error("boundary-root hazard persisted after {0} jittered retries")]
    BoundaryHazard(usize),
    #[error("character has too few primes: n = {n} does not factor over the first {have} primes")]
    InsufficientPrimes { n: usize, have: usize },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use counting::{green, mean_counting, mean_counting_exact_disk, CountingSample, GreenDomain};
pub use operator::{build_matrix, singular_values, OperatorMatrix, SchattenReport};
pub use series::{Character, DirichletSeries};
pub use special::{gamma_real, zeta, zeta_deriv2, ZetaEvalConfig};
pub use symbols::{Symbol, SymbolDescriptor};

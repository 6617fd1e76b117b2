//! Error type shared by every module.

use thiserror::Error;

/// Errors reported by evaluators, zero finders and solvers.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Gamma function evaluated at a pole (non-positive integer).
    #[error("gamma function pole at x = {0}")]
    GammaPole(f64),

    /// An order outside the validity window of the requested operation.
    #[error("order nu = {nu} outside window {window} for {what}")]
    OrderWindow {
        nu: f64,
        window: &'static str,
        what: &'static str,
    },

    /// Argument outside the admissible domain.
    #[error("argument {value} outside domain {domain} for {what}")]
    Domain {
        value: f64,
        domain: &'static str,
        what: &'static str,
    },

    /// Ascending series did not meet its tolerance within `max_terms`.
    #[error("series for order {nu} at |q| = {q_abs} did not converge in {max_terms} terms")]
    SeriesNonConvergence {
        nu: f64,
        q_abs: f64,
        max_terms: usize,
    },

    /// Invalid evaluation/expansion configuration.
    #[error("invalid configuration: {0}")]
    InvalidConfig(&'static str),

    /// No sign change found while bracketing a zero.
    #[error("bracket not found for zero #{index} of {family} (nu = {nu})")]
    BracketNotFound {
        family: &'static str,
        nu: f64,
        index: usize,
    },

    /// Dini family with gamma + nu < 0 has a pair of purely imaginary zeros;
    /// its real-zero table is rejected.
    #[error("dini family gamma + nu = {sum} < 0 has purely imaginary zeros")]
    ImaginaryDiniZeros { sum: f64 },

    /// A quotient denominator fell below the pole-proximity threshold.
    #[error("denominator magnitude {magnitude:e} below pole-proximity threshold at |z| = {z_abs}")]
    SingularityProximity { magnitude: f64, z_abs: f64 },

    /// Requested more table entries than available.
    #[error("zero table holds {have} entries, {want} requested")]
    TableTooShort { have: usize, want: usize },

    /// A critical-order search found no sign change inside its window.
    #[error("no root of the {what} equation inside the search window ({lo}, {hi})")]
    WindowSearchFailure { what: &'static str, lo: f64, hi: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

//! Radii of convexity and starlikeness of the normalized Bessel maps
//! f_nu, g_nu, h_nu and phi_nu.
//!
//! The library locates the Bessel, derivative and Dini zeros these radii
//! depend on, evaluates the convexity quotients 1 + z f''/f' both in closed
//! form and as Mittag-Leffler expansions over the zeros, solves the radius
//! and critical-order equations, and cross-checks every claim with an
//! independent boundary-scan verifier.
//!
//! Entry points:
//! * [`bessel`] — J_nu and friends (series, Poisson-integral oracle, Rayleigh sums)
//! * [`zeros`] — certified zero tables and reciprocal power sums
//! * [`maps`] — the four convexity quotients in closed form
//! * [`expansions`] — partial-fraction evaluation and the lower envelope
//! * [`radius`] — radii of convexity of order alpha and radii of starlikeness
//! * [`threshold`] — critical orders nu_alpha and the conjecture disproof
//! * [`disk`] — boundary scans and convexity certificates
//! * [`report`] — reproduction table, named checks, serialization

// reference constants keep their full printed digits
#![allow(clippy::excessive_precision)]
// negated comparisons like !(r > 0.0) deliberately reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bessel;
pub mod disk;
pub mod error;
pub mod expansions;
pub mod maps;
pub mod quad;
pub mod radius;
pub mod report;
pub mod threshold;
pub mod zeros;

pub use bessel::{bessel_j, bessel_j_derivative, dini, gamma_fn, rayleigh_sum, Order,
                 RayleighPower, SeriesConfig};
pub use disk::{boundary_min_real, convexity_certificate, BoundaryScan, Certificate};
pub use error::{Error, Result};
pub use expansions::{lower_envelope, ml_identity_residual, ml_quotient, ExpansionConfig, MlEval,
                     TailMode};
pub use maps::{convexity_quotient, phi_quotient_identity_check, MapKind};
pub use quad::bessel_j_poisson;
pub use radius::{radius_convexity, radius_convexity_with_terms, radius_starlikeness,
                 RadiusResult};
pub use threshold::{conjecture_disproof, critical_order, special_constants, ConjectureEvidence,
                    SpecialConstants, ThresholdResult, Verdict};
pub use zeros::{bessel_derivative_zero, bessel_zero, dini_zero, ZeroFamily, ZeroTable};

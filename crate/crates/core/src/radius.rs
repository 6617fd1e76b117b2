//! Radii of convexity of order alpha and the radii of starlikeness.
//!
//! The lower envelope r -> Q(r) is continuous on (0, first pole), starts at
//! 1 > alpha and decreases strictly to -inf at the pole, so bisection on
//! envelope(r) - alpha is unconditionally correct; a few Newton steps with
//! the expansion derivative polish the root.

use crate::bessel::Order;
use crate::error::{Error, Result};
use crate::expansions::{envelope_derivative, lower_envelope_unchecked};
use crate::maps::MapKind;
use crate::zeros::{bessel_derivative_zero, dini_zero};
use serde::{Deserialize, Serialize};

const RESIDUAL_TARGET: f64 = 1e-10;

/// Computed radius with its certificate data.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct RadiusResult {
    pub kind: MapKind,
    pub nu: f64,
    pub alpha: f64,
    /// Root of envelope(r) = alpha; for H and PHI this is the radius in the
    /// z-plane of the quotient (the variable of the sqrt-argument equations).
    pub radius: f64,
    pub bracket: (f64, f64),
    /// lower_envelope(radius) - alpha.
    pub residual: f64,
    pub iterations: u32,
}

/// Smallest positive root of envelope(r) = alpha on (0, first pole).
pub fn radius_convexity(kind: MapKind, nu: Order, alpha: f64) -> Result<RadiusResult> {
    radius_convexity_with_terms(kind, nu, alpha, 200)
}

/// [`radius_convexity`] with an explicit expansion depth for the Newton
/// polish derivative (the bisection itself uses the closed-form envelope).
pub fn radius_convexity_with_terms(
    kind: MapKind,
    nu: Order,
    alpha: f64,
    n_terms: usize,
) -> Result<RadiusResult> {
    if n_terms < 10 {
        return Err(Error::InvalidConfig("n_terms must be >= 10"));
    }
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::Domain {
            value: alpha,
            domain: "[0, 1)",
            what: "convexity order alpha",
        });
    }
    kind.validate_order(nu)?;
    let pole = kind.first_pole(nu)?;
    let mut lo = 0.0_f64;
    let mut hi = pole * (1.0 - 1e-9);
    let mut iterations = 0u32;
    // envelope(0+) = 1 > alpha; envelope(hi) -> -inf
    let f_hi = lower_envelope_unchecked(kind, nu, hi)? - alpha;
    if f_hi >= 0.0 {
        return Err(Error::WindowSearchFailure {
            what: "radius",
            lo: 0.0,
            hi,
        });
    }
    let width_target = 1e-12 * pole;
    while hi - lo > width_target {
        let mid = 0.5 * (lo + hi);
        let f_mid = lower_envelope_unchecked(kind, nu, mid)? - alpha;
        iterations += 1;
        if f_mid > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if iterations > 80 {
            break;
        }
    }
    let bracket = (lo, hi);
    let mut x = 0.5 * (lo + hi);
    for _ in 0..5 {
        let f = lower_envelope_unchecked(kind, nu, x)? - alpha;
        if f.abs() < 1e-15 {
            break;
        }
        let d = envelope_derivative(kind, nu, x, n_terms)?;
        let next = x - f / d;
        if !next.is_finite() || next <= lo || next >= hi {
            break;
        }
        iterations += 1;
        if (next - x).abs() <= f64::EPSILON * x {
            x = next;
            break;
        }
        x = next;
    }
    let residual = lower_envelope_unchecked(kind, nu, x)? - alpha;
    if residual.abs() > RESIDUAL_TARGET {
        return Err(Error::WindowSearchFailure {
            what: "radius residual",
            lo,
            hi,
        });
    }
    Ok(RadiusResult {
        kind,
        nu: nu.get(),
        alpha,
        radius: x,
        bracket,
        residual,
        iterations,
    })
}

/// Radius of starlikeness: j'_{nu,1} for f_nu (nu > 0), alpha_{nu,1} for
/// g_nu (nu > -1).
pub fn radius_starlikeness(kind: MapKind, nu: Order) -> Result<f64> {
    match kind {
        MapKind::F => {
            MapKind::F.validate_order(nu)?;
            bessel_derivative_zero(nu, 1)
        }
        MapKind::G => {
            MapKind::G.validate_order(nu)?;
            dini_zero(1.0 - nu.get(), nu, 1)
        }
        _ => Err(Error::Domain {
            value: f64::NAN,
            domain: "kinds f and g",
            what: "radius_starlikeness",
        }),
    }
}

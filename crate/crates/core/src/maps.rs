//! Closed-form convexity quotients Q(z) = 1 + z f''(z)/f'(z) of the four
//! normalized maps, assembled from Bessel ratios with all second derivatives
//! eliminated analytically.
//!
//! With f_mu(q) = sum (-1)^n q^n/(n! Gamma(n+mu+1)) (the analytic part of
//! J_mu at q = (z/2)^2) the quotients reduce to
//!
//! ```text
//! F:   -(z^2 - nu^2)/P + (1/nu - 1) P,  P = z J'/J = (nu f_nu - 2q f_{nu+1})/f_nu
//! G:   1 + 2q (2q f_{nu+2} - 3 f_{nu+1}) / (f_nu - 2q f_{nu+1})
//! H:   1 + u (u f_{nu+2} - 2 f_{nu+1}) / (f_nu - u f_{nu+1}),   u = z/4
//! PHI: f_nu(u)/f_{nu+1}(u) - nu,                                u = z/4
//! ```
//!
//! H and PHI are functions of z alone even though their defining formulas
//! put sqrt(z) inside Bessel arguments: the u-series form equals the
//! principal sqrt(z) evaluation off the negative real axis and its limit
//! from above on it, so boundary scans need no branch handling.

use crate::bessel::{series_part, Order, SeriesConfig};
use crate::error::{Error, Result};
use crate::zeros::{bessel_derivative_zero, bessel_zero, dini_zero};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Denominators below this magnitude flag genuine pole approach.
const DENOMINATOR_FLOOR: f64 = 1e-300;

/// Which normalized map's machinery applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    /// f_nu(z) = (2^nu Gamma(nu+1) J_nu(z))^(1/nu), nu > 0
    F,
    /// g_nu(z) = 2^nu Gamma(nu+1) z^(1-nu) J_nu(z), nu > -1
    G,
    /// h_nu(z) = 2^nu Gamma(nu+1) z^(1-nu/2) J_nu(sqrt z), nu > -1
    H,
    /// phi_nu(z) = 2^nu Gamma(nu+1) z^(-nu/2) J_nu(sqrt z), nu > -2
    Phi,
}

impl MapKind {
    pub const ALL: [MapKind; 4] = [MapKind::F, MapKind::G, MapKind::H, MapKind::Phi];

    pub fn name(self) -> &'static str {
        match self {
            MapKind::F => "f",
            MapKind::G => "g",
            MapKind::H => "h",
            MapKind::Phi => "phi",
        }
    }

    pub fn parse(s: &str) -> Option<MapKind> {
        match s.to_ascii_lowercase().as_str() {
            "f" => Some(MapKind::F),
            "g" => Some(MapKind::G),
            "h" => Some(MapKind::H),
            "phi" => Some(MapKind::Phi),
            _ => None,
        }
    }

    /// Validity window of the order for this map.
    pub fn validate_order(self, nu: Order) -> Result<()> {
        let v = nu.get();
        let (ok, window) = match self {
            MapKind::F => (v > 0.0, "(0, inf)"),
            MapKind::G | MapKind::H => (v > -1.0, "(-1, inf)"),
            MapKind::Phi => (v > -2.0, "(-2, inf)"),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::OrderWindow {
                nu: v,
                window,
                what: self.name(),
            })
        }
    }

    /// First singularity of the convexity quotient in the z-plane:
    /// F: j'_{nu,1}; G: alpha_{nu,1}; H: beta_{nu,1}^2; PHI: j_{nu+1,1}^2.
    pub fn first_pole(self, nu: Order) -> Result<f64> {
        self.validate_order(nu)?;
        let v = nu.get();
        Ok(match self {
            MapKind::F => bessel_derivative_zero(nu, 1)?,
            MapKind::G => dini_zero(1.0 - v, nu, 1)?,
            MapKind::H => dini_zero(2.0 - v, nu, 1)?.powi(2),
            MapKind::Phi => bessel_zero(Order::new(v + 1.0)?, 1)?.powi(2),
        })
    }
}

fn guard_denominator(d: Complex64, z: Complex64) -> Result<()> {
    if d.norm() < DENOMINATOR_FLOOR {
        return Err(Error::SingularityProximity {
            magnitude: d.norm(),
            z_abs: z.norm(),
        });
    }
    Ok(())
}

/// Q(z) = 1 + z f''(z)/f'(z) for the chosen map, z strictly inside the
/// quotient's first singularity.
pub fn convexity_quotient(kind: MapKind, nu: Order, z: Complex64) -> Result<Complex64> {
    kind.validate_order(nu)?;
    let cfg = SeriesConfig::default();
    let v = nu.get();
    match kind {
        MapKind::F => {
            let q = z * z / 4.0;
            let f0 = series_part(v, q, &cfg)?;
            let f1 = series_part(v + 1.0, q, &cfg)?;
            guard_denominator(f0, z)?;
            // P = z J'_nu(z)/J_nu(z)
            let p = (f0 * v - q * 2.0 * f1) / f0;
            guard_denominator(p, z)?;
            Ok(-(z * z - v * v) / p + p * (1.0 / v - 1.0))
        }
        MapKind::G => {
            let q = z * z / 4.0;
            let f0 = series_part(v, q, &cfg)?;
            let f1 = series_part(v + 1.0, q, &cfg)?;
            let f2 = series_part(v + 2.0, q, &cfg)?;
            let den = f0 - q * 2.0 * f1;
            guard_denominator(den, z)?;
            Ok(1.0 + (q * 2.0) * (q * 2.0 * f2 - f1 * 3.0) / den)
        }
        MapKind::H => {
            let u = z / 4.0;
            let f0 = series_part(v, u, &cfg)?;
            let f1 = series_part(v + 1.0, u, &cfg)?;
            let f2 = series_part(v + 2.0, u, &cfg)?;
            let den = f0 - u * f1;
            guard_denominator(den, z)?;
            Ok(1.0 + u * (u * f2 - f1 * 2.0) / den)
        }
        MapKind::Phi => {
            let u = z / 4.0;
            let f0 = series_part(v, u, &cfg)?;
            let f1 = series_part(v + 1.0, u, &cfg)?;
            guard_denominator(f1, z)?;
            Ok(f0 / f1 - v)
        }
    }
}

/// Absolute difference between the two equivalent forms of the phi quotient:
/// sqrt(z) J_nu(sqrt z)/(2 J_{nu+1}(sqrt z)) - nu versus
/// (1/2)[sqrt(z) J'_{nu+1}(sqrt z)/J_{nu+1}(sqrt z) - (nu - 1)].
pub fn phi_quotient_identity_check(nu: Order, z: Complex64) -> Result<f64> {
    MapKind::Phi.validate_order(nu)?;
    let cfg = SeriesConfig::default();
    let v = nu.get();
    let u = z / 4.0;
    let f0 = series_part(v, u, &cfg)?;
    let f1 = series_part(v + 1.0, u, &cfg)?;
    let f2 = series_part(v + 2.0, u, &cfg)?;
    guard_denominator(f1, z)?;
    let form1 = f0 / f1 - v;
    // w J'_{nu+1}(w)/J_{nu+1}(w) = ((nu+1) f_{nu+1} - 2u f_{nu+2}) / f_{nu+1}
    let log_deriv = (f1 * (v + 1.0) - u * 2.0 * f2) / f1;
    let form2 = (log_deriv - (v - 1.0)) / 2.0;
    Ok((form1 - form2).norm())
}

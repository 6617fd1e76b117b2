//! Independent geometric oracle: sample Re Q on circles |z| = r and certify
//! convexity claims without the monotone-envelope shortcut.
//!
//! By the minimum principle the minimum of Re Q over the closed disk sits on
//! the circle, and the envelope inequalities put it on the positive real
//! axis; the scan verifies both instead of assuming them. For H and PHI
//! the quotient is a single-valued function of z (see [`crate::maps`]), so
//! samples at angle pi equal the limit from above of the principal sqrt(z)
//! branch.

use crate::bessel::Order;
use crate::error::{Error, Result};
use crate::maps::{convexity_quotient, MapKind};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Result of an equiangular boundary scan.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct BoundaryScan {
    pub kind: MapKind,
    pub nu: f64,
    pub r: f64,
    pub n_samples: usize,
    pub min_real: f64,
    pub argmin_angle: f64,
}

/// Minimum of Re Q over n equiangular samples of |z| = r.
pub fn boundary_min_real(
    kind: MapKind,
    nu: Order,
    r: f64,
    n_samples: usize,
) -> Result<BoundaryScan> {
    if n_samples < 64 {
        return Err(Error::InvalidConfig("boundary scan needs n_samples >= 64"));
    }
    if !(r > 0.0) {
        return Err(Error::Domain {
            value: r,
            domain: "r > 0",
            what: "boundary scan radius",
        });
    }
    let pole = kind.first_pole(nu)?;
    if r >= pole {
        return Err(Error::Domain {
            value: r,
            domain: "r < first pole",
            what: "boundary scan radius",
        });
    }
    let mut min_real = f64::INFINITY;
    let mut argmin_angle = 0.0;
    for k in 0..n_samples {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / n_samples as f64;
        let z = Complex64::from_polar(r, theta);
        let q = convexity_quotient(kind, nu, z)?;
        if q.re < min_real {
            min_real = q.re;
            argmin_angle = theta;
        }
    }
    Ok(BoundaryScan {
        kind,
        nu: nu.get(),
        r,
        n_samples,
        min_real,
        argmin_angle,
    })
}

/// Convexity-of-order-alpha certificate on the disk |z| <= r.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Certificate {
    pub convex: bool,
    /// min Re Q - alpha over the boundary samples.
    pub margin: f64,
    pub scan: BoundaryScan,
}

/// True iff the sampled boundary minimum exceeds alpha, with the margin.
pub fn convexity_certificate(
    kind: MapKind,
    nu: Order,
    r: f64,
    alpha: f64,
) -> Result<Certificate> {
    let scan = boundary_min_real(kind, nu, r, 720)?;
    Ok(Certificate {
        convex: scan.min_real > alpha,
        margin: scan.min_real - alpha,
        scan,
    })
}

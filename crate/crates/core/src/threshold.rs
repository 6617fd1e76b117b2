//! Critical orders nu_alpha — the smallest orders at which each map becomes
//! convex of order alpha in the whole unit disk — plus the named constants
//! and the disproof of the -1.875 convexity conjecture for phi_nu.
//!
//! Each threshold equation is solved in division-free polynomial form (no
//! quotient poles during the nu-scan):
//!
//! ```text
//! F:   nu(nu^2-1) J_nu^2(1) + (1-nu) J'_nu(1)^2 = alpha nu J_nu(1) J'_nu(1)
//! G:   (2 nu + alpha - 2)  J_{nu+1}(1) = alpha J_nu(1)
//! H:   (2 nu + 2 alpha - 4) J_{nu+1}(1) = (4 alpha - 3) J_nu(1)
//! PHI: (2 nu + 2 alpha)    J_{nu+1}(1) = J_nu(1)
//! ```
//!
//! These are the unit-disk (r = 1) forms of the radius equations. The search
//! windows reach below zero where the roots do (H at small alpha is
//! negative); every result is validated by the radius-at-threshold = 1
//! consistency check.

use crate::bessel::{series_part_real, Order, SeriesConfig};
use crate::disk::boundary_min_real;
use crate::error::{Error, Result};
use crate::maps::{convexity_quotient, MapKind};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

const RESIDUAL_TARGET: f64 = 1e-10;
const SCAN_STEP: f64 = 0.02;
const WINDOW_TOP: f64 = 10.0;

/// J_mu(1) through the reduced series (exact (1/2)^mu prefactor).
fn j_at_one(mu: f64) -> Result<f64> {
    let cfg = SeriesConfig::default();
    Ok(0.5_f64.powf(mu) * series_part_real(mu, 0.25, &cfg)?)
}

/// J'_mu(1) = mu J_mu(1) - J_{mu+1}(1).
fn jprime_at_one(mu: f64) -> Result<f64> {
    Ok(mu * j_at_one(mu)? - j_at_one(mu + 1.0)?)
}

/// Last sign change of `f` on (lo, hi), scanned left to right, then bisected.
fn solve_in_window<F: Fn(f64) -> Result<f64>>(
    f: F,
    lo: f64,
    hi: f64,
    what: &'static str,
) -> Result<f64> {
    let steps = ((hi - lo) / SCAN_STEP).ceil() as usize;
    let mut bracket = None;
    let mut x_prev = lo;
    let mut f_prev = f(lo)?;
    for i in 1..=steps {
        let x = lo + (hi - lo) * i as f64 / steps as f64;
        let fx = f(x)?;
        if f_prev == 0.0 {
            bracket = Some((x_prev - SCAN_STEP * 1e-3, x));
        } else if fx.signum() != f_prev.signum() {
            bracket = Some((x_prev, x));
        }
        x_prev = x;
        f_prev = fx;
    }
    let (mut a, mut b) = bracket.ok_or(Error::WindowSearchFailure { what, lo, hi })?;
    let mut fa = f(a)?;
    for _ in 0..100 {
        let mid = 0.5 * (a + b);
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
        if b - a <= f64::EPSILON * a.abs().max(1.0) {
            break;
        }
    }
    Ok(0.5 * (a + b))
}

/// Critical order nu_alpha with its equation residual and search window.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ThresholdResult {
    pub kind: MapKind,
    pub alpha: f64,
    pub nu_critical: f64,
    pub equation_residual: f64,
    pub search_window: (f64, f64),
}

fn threshold_equation(kind: MapKind, alpha: f64, nu: f64) -> Result<f64> {
    match kind {
        MapKind::F => {
            let j = j_at_one(nu)?;
            let jp = jprime_at_one(nu)?;
            if alpha == 0.0 {
                // factored form (nu - 1)(nu(nu+1) J^2 - J'^2) = 0
                Ok((nu - 1.0) * (nu * (nu + 1.0) * j * j - jp * jp))
            } else {
                Ok(nu * (nu * nu - 1.0) * j * j + (1.0 - nu) * jp * jp - alpha * nu * j * jp)
            }
        }
        MapKind::G => Ok((2.0 * nu + alpha - 2.0) * j_at_one(nu + 1.0)? - alpha * j_at_one(nu)?),
        MapKind::H => {
            Ok((2.0 * nu + 2.0 * alpha - 4.0) * j_at_one(nu + 1.0)?
                - (4.0 * alpha - 3.0) * j_at_one(nu)?)
        }
        MapKind::Phi => Ok((2.0 * nu + 2.0 * alpha) * j_at_one(nu + 1.0)? - j_at_one(nu)?),
    }
}

/// Smallest order for which the map is convex of order alpha in the unit disk.
pub fn critical_order(kind: MapKind, alpha: f64) -> Result<ThresholdResult> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::Domain {
            value: alpha,
            domain: "[0, 1)",
            what: "convexity order alpha",
        });
    }
    let window = match kind {
        MapKind::F => (nu_star()? + 1e-6, WINDOW_TOP),
        MapKind::G | MapKind::H => (-0.99, WINDOW_TOP),
        MapKind::Phi => (nu_star_phi()? + 1e-6, WINDOW_TOP),
    };
    let root = solve_in_window(
        |nu| threshold_equation(kind, alpha, nu),
        window.0,
        window.1,
        "critical order",
    )?;
    let residual = threshold_equation(kind, alpha, root)?.abs();
    if residual > RESIDUAL_TARGET {
        return Err(Error::WindowSearchFailure {
            what: "critical-order residual",
            lo: window.0,
            hi: window.1,
        });
    }
    Ok(ThresholdResult {
        kind,
        alpha,
        nu_critical: root,
        equation_residual: residual,
        search_window: window,
    })
}

/// Root of J'_nu(1) = 0 in (0, 1).
pub(crate) fn nu_star() -> Result<f64> {
    solve_in_window(jprime_at_one, 1e-6, 1.0, "nu_star")
}

/// Root of J_{nu+1}(1) = 0 in (-2, -1).
pub(crate) fn nu_star_phi() -> Result<f64> {
    solve_in_window(|nu| j_at_one(nu + 1.0), -2.0 + 1e-9, -1.0, "nu_star_phi")
}

/// The named special orders with their equation residuals.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SpecialConstants {
    /// Root of J'_nu(1) = 0 in (0, 1).
    pub nu_star: f64,
    pub nu_star_residual: f64,
    /// Root of the quadratic factor nu(nu+1) J_nu^2(1) = J'_nu(1)^2 in (0, nu_star).
    pub nu_two: f64,
    pub nu_two_residual: f64,
    /// Root of J_{nu+1}(1) = 0 in (-2, -1).
    pub nu_star_phi: f64,
    pub nu_star_phi_residual: f64,
}

/// Solve the three defining equations of nu*, nu_2 and nu(star).
pub fn special_constants() -> Result<SpecialConstants> {
    let nu_star = nu_star()?;
    let nu_star_residual = jprime_at_one(nu_star)?.abs();
    let quad = |nu: f64| -> Result<f64> {
        let j = j_at_one(nu)?;
        let jp = jprime_at_one(nu)?;
        Ok(nu * (nu + 1.0) * j * j - jp * jp)
    };
    let nu_two = solve_in_window(quad, 1e-9, nu_star - 1e-6, "nu_two")?;
    let nu_two_residual = quad(nu_two)?.abs();
    let nsp = nu_star_phi()?;
    let nu_star_phi_residual = j_at_one(nsp + 1.0)?.abs();
    for (value, residual) in [
        (nu_star, nu_star_residual),
        (nu_two, nu_two_residual),
        (nsp, nu_star_phi_residual),
    ] {
        if residual > RESIDUAL_TARGET {
            return Err(Error::WindowSearchFailure {
                what: "special-constant residual",
                lo: value,
                hi: value,
            });
        }
    }
    Ok(SpecialConstants {
        nu_star,
        nu_star_residual,
        nu_two,
        nu_two_residual,
        nu_star_phi: nsp,
        nu_star_phi_residual,
    })
}

/// Convexity verdict of the conjecture probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Convex,
    NotConvex,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Convex => "CONVEX",
            Verdict::NotConvex => "NOT_CONVEX",
        })
    }
}

/// Evidence record for the conjecture probe: the boundary characterization
/// value Q_phi(1) and an independent boundary scan at r = 1.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ConjectureEvidence {
    pub nu_probe: f64,
    pub q_at_one: f64,
    pub boundary_min: f64,
    pub verdict: Verdict,
}

/// Probe unit-disk convexity of phi_nu at one order: convex iff
/// Q_phi(1) >= 0. Probes must lie above nu(star) so that r = 1 stays inside
/// the quotient's first pole. Orders in (-1.875, nu_0(phi)) witness the
/// failure of the "-1.875" conjecture.
pub fn conjecture_disproof(nu_probe: f64) -> Result<ConjectureEvidence> {
    let nsp = nu_star_phi()?;
    if !(nu_probe > nsp) {
        return Err(Error::Domain {
            value: nu_probe,
            domain: "(nu_star_phi, inf)",
            what: "conjecture probe",
        });
    }
    let nu = Order::new(nu_probe)?;
    let q1 = convexity_quotient(MapKind::Phi, nu, Complex64::new(1.0, 0.0))?.re;
    let scan = boundary_min_real(MapKind::Phi, nu, 1.0, 720)?;
    let verdict = if q1 < 0.0 {
        Verdict::NotConvex
    } else {
        Verdict::Convex
    };
    Ok(ConjectureEvidence {
        nu_probe,
        q_at_one: q1,
        boundary_min: scan.min_real,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radius::radius_convexity;
    use approx::assert_abs_diff_eq;

    #[test]
    fn g_threshold_is_one() {
        let t = critical_order(MapKind::G, 0.0).unwrap();
        assert_abs_diff_eq!(t.nu_critical, 1.0, epsilon = 1e-8);
    }

    #[test]
    fn f_threshold_is_one_from_factored_form() {
        let t = critical_order(MapKind::F, 0.0).unwrap();
        assert_abs_diff_eq!(t.nu_critical, 1.0, epsilon = 1e-8);
        assert!(t.search_window.0 > 0.39);
    }

    #[test]
    fn h_and_phi_thresholds_match_references() {
        // true roots of the printed equations (30-digit bisection references)
        let t = critical_order(MapKind::H, 0.0).unwrap();
        assert_abs_diff_eq!(t.nu_critical, -0.1438607404254301, epsilon = 1e-9);
        let t = critical_order(MapKind::Phi, 0.0).unwrap();
        assert_abs_diff_eq!(t.nu_critical, -1.5623028658318430, epsilon = 1e-9);
    }

    #[test]
    fn h_three_quarters_is_five_quarters() {
        let t = critical_order(MapKind::H, 0.75).unwrap();
        assert_abs_diff_eq!(t.nu_critical, 1.25, epsilon = 1e-8);
    }

    #[test]
    fn quarter_alpha_references() {
        let refs = [
            (MapKind::F, 1.160808720390259),
            (MapKind::G, 1.4756277546320352),
            (MapKind::H, 0.0035394544285490342),
            (MapKind::Phi, -1.4891510018964253),
        ];
        for (kind, want) in refs {
            let t = critical_order(kind, 0.25).unwrap();
            assert_abs_diff_eq!(t.nu_critical, want, epsilon = 1e-9);
        }
    }

    #[test]
    fn special_constants_match_equation_roots() {
        let c = special_constants().unwrap();
        assert_abs_diff_eq!(c.nu_star, 0.3900100533985773, epsilon = 1e-9);
        assert_abs_diff_eq!(c.nu_two, 0.1245857474653453, epsilon = 1e-9);
        assert_abs_diff_eq!(c.nu_star_phi, -1.7745645128439622, epsilon = 1e-9);
        assert!(c.nu_star_residual <= 1e-10);
        assert!(c.nu_two_residual <= 1e-10);
        assert!(c.nu_star_phi_residual <= 1e-10);
    }

    #[test]
    fn thresholds_increase_with_alpha() {
        for kind in MapKind::ALL {
            let mut last = f64::NEG_INFINITY;
            for alpha in [0.0, 0.2, 0.4, 0.6] {
                let t = critical_order(kind, alpha).unwrap();
                assert!(
                    t.nu_critical > last,
                    "{kind:?} threshold not increasing at alpha={alpha}"
                );
                last = t.nu_critical;
            }
        }
    }

    #[test]
    fn radius_at_threshold_is_unity() {
        for (kind, alpha) in [(MapKind::G, 0.5), (MapKind::Phi, 0.25)] {
            let t = critical_order(kind, alpha).unwrap();
            let r = radius_convexity(kind, Order::new(t.nu_critical).unwrap(), alpha).unwrap();
            assert!(
                (r.radius - 1.0).abs() <= 1e-6,
                "{kind:?} radius {} at threshold",
                r.radius
            );
        }
    }

    #[test]
    fn conjecture_probe_signs() {
        let e = conjecture_disproof(-1.6).unwrap();
        assert_eq!(e.verdict, Verdict::NotConvex);
        assert_abs_diff_eq!(e.q_at_one, -0.21022115509112826, epsilon = 1e-10);
        assert!(e.boundary_min < 0.0);

        let e = conjecture_disproof(-1.5).unwrap();
        assert_eq!(e.verdict, Verdict::Convex);
        assert_abs_diff_eq!(e.q_at_one, 0.22129613767254888, epsilon = 1e-10);
        assert!(e.boundary_min > 0.0);

        // at the threshold order the characterization value vanishes
        let e = conjecture_disproof(-1.5623028658318430).unwrap();
        assert!(e.q_at_one.abs() <= 1e-8);
    }

    #[test]
    fn conjecture_probe_window() {
        assert!(conjecture_disproof(-1.8).is_err());
        assert!(conjecture_disproof(-2.3).is_err());
    }

    #[test]
    fn g_threshold_divisor_positive_near_unit_order() {
        // the alpha = 0 root nu = 1 is only valid because J_{nu+1}(1) != 0 there
        for nu in [0.8, 0.9, 1.0, 1.1, 1.2] {
            assert!(j_at_one(nu + 1.0).unwrap() > 0.0);
        }
    }

    #[test]
    fn positivity_above_nu_star_phi() {
        // J_{nu+1}(1) > 0 for sampled nu > nu(star)
        let nsp = nu_star_phi().unwrap();
        for t in [1e-3, 0.1, 0.5, 1.5, 3.0, 6.0] {
            assert!(j_at_one(nsp + t + 1.0).unwrap() > 0.0);
        }
    }

    #[test]
    fn log_derivative_bound_constant() {
        // the positivity bound -log 2 - log(x+1) + 1/(2(x+1))
        // + (3x+5)/(4(x+1)^2(x+2)(x+3)) behind J_{nu+1}(1) > 0 evaluates to
        // ~0.0151 at x = 0 (its minimum over (-1, 0))
        let f0 = -(2.0_f64).ln() + 0.5 + 5.0 / 24.0;
        assert!((f0 - 0.0151).abs() < 5e-4);
    }

    #[test]
    fn invalid_alpha() {
        assert!(critical_order(MapKind::G, 1.0).is_err());
        assert!(critical_order(MapKind::G, -0.2).is_err());
    }
}

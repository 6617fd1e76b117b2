//! Reproduction table for the named constants, the timed verification
//! suite behind the `verify` subcommand and the acceptance tests, and
//! serialization helpers (text / CSV / JSON).

use crate::bessel::{bessel_j, Order, SeriesConfig};
use crate::disk::convexity_certificate;
use crate::error::Result;
use crate::expansions::{lower_envelope, ml_identity_residual, ExpansionConfig, TailMode};
use crate::maps::MapKind;
use crate::quad::bessel_j_poisson;
use crate::radius::radius_convexity;
use crate::threshold::{conjecture_disproof, critical_order, special_constants, Verdict};
use crate::zeros::{bessel_derivative_zero, bessel_zero, dini_zero, ZeroFamily, ZeroTable};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// Default tolerance for the published 4-decimal reference constants.
pub const FOUR_DECIMAL_TOL: f64 = 5e-5;
/// Tolerance for exact rational reference values (1, 5/4).
pub const EXACT_RATIONAL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RowStatus {
    Pass,
    Fail,
    NoRef,
}

/// One reproduced quantity compared against its printed reference.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportRow {
    pub quantity: String,
    pub computed: f64,
    pub paper_value: Option<f64>,
    pub abs_diff: Option<f64>,
    pub status: RowStatus,
}

impl ReportRow {
    fn compare(quantity: &str, computed: f64, paper_value: f64, tol: f64) -> ReportRow {
        let abs_diff = (computed - paper_value).abs();
        ReportRow {
            quantity: quantity.to_string(),
            computed,
            paper_value: Some(paper_value),
            abs_diff: Some(abs_diff),
            status: if abs_diff <= tol {
                RowStatus::Pass
            } else {
                RowStatus::Fail
            },
        }
    }
}

/// Reproduce every named constant against its printed value.
///
/// `four_decimal_tol` is the band around 4-decimal prints (default 5e-5);
/// exact rationals are always held to 1e-8.
pub fn reproduce(four_decimal_tol: f64) -> Result<Vec<ReportRow>> {
    let consts = special_constants()?;
    let t = four_decimal_tol;
    Ok(vec![
        ReportRow::compare("nu_star", consts.nu_star, 0.3901, t),
        ReportRow::compare("nu_2", consts.nu_two, 0.1246, t),
        ReportRow::compare(
            "nu_0(h)",
            critical_order(MapKind::H, 0.0)?.nu_critical,
            -0.1438,
            t,
        ),
        ReportRow::compare(
            "nu_0(phi)",
            critical_order(MapKind::Phi, 0.0)?.nu_critical,
            -1.5623,
            t,
        ),
        ReportRow::compare("nu_star_phi", consts.nu_star_phi, -1.7744, t),
        ReportRow::compare(
            "nu_0(f)",
            critical_order(MapKind::F, 0.0)?.nu_critical,
            1.0,
            EXACT_RATIONAL_TOL,
        ),
        ReportRow::compare(
            "nu_0(g)",
            critical_order(MapKind::G, 0.0)?.nu_critical,
            1.0,
            EXACT_RATIONAL_TOL,
        ),
        ReportRow::compare(
            "nu_3/4(h)",
            critical_order(MapKind::H, 0.75)?.nu_critical,
            1.25,
            EXACT_RATIONAL_TOL,
        ),
    ])
}

/// 17-significant-digit decimal form (round-trips f64 exactly).
pub fn format_f64(x: f64) -> String {
    format!("{x:.16e}")
}

// ---------------------------------------------------------------------------
// Verification suite (the acceptance criteria as named checks)
// ---------------------------------------------------------------------------

/// Outcome of one verification criterion.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CheckResult {
    fn finish(name: &'static str, start: Instant, passed: bool, detail: String) -> CheckResult {
        CheckResult {
            name,
            passed,
            detail,
            seconds: start.elapsed().as_secs_f64(),
        }
    }

    pub fn line(&self) -> String {
        format!(
            "{}: {} ({:.2}s) {}",
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.seconds,
            self.detail
        )
    }
}

/// Deterministic generator for the sampled checks.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    fn in_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

fn fail(errors: &mut Vec<String>, msg: String) {
    if errors.len() < 6 {
        errors.push(msg);
    }
}

fn detail(errors: &[String], ok_msg: &str) -> String {
    if errors.is_empty() {
        ok_msg.to_string()
    } else {
        errors.join("; ")
    }
}

/// Criterion 1: constant reproduction at the stated tolerances, under 5 s.
pub fn check_constant_reproduction() -> Result<CheckResult> {
    let start = Instant::now();
    let rows = reproduce(FOUR_DECIMAL_TOL)?;
    let mut errors = Vec::new();
    for row in &rows {
        if row.status != RowStatus::Pass {
            fail(
                &mut errors,
                format!(
                    "{} = {:.10} vs reference {} (|diff| = {:.2e})",
                    row.quantity,
                    row.computed,
                    row.paper_value.unwrap(),
                    row.abs_diff.unwrap()
                ),
            );
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    if elapsed >= 5.0 {
        fail(&mut errors, format!("runtime {elapsed:.2}s >= 5s"));
    }
    Ok(CheckResult::finish(
        "criterion 1: constant reproduction",
        start,
        errors.is_empty(),
        detail(&errors, "8 constants within tolerance"),
    ))
}

/// Criterion 2: conjecture disproof signs and boundary-scan agreement, under 1 s.
pub fn check_conjecture_disproof() -> Result<CheckResult> {
    let start = Instant::now();
    let mut errors = Vec::new();
    let at_16 = conjecture_disproof(-1.6)?;
    if !(at_16.q_at_one < -1e-3) {
        fail(&mut errors, format!("Q_phi(1) at -1.6 = {}", at_16.q_at_one));
    }
    if !(at_16.boundary_min < 0.0 && at_16.verdict == Verdict::NotConvex) {
        fail(&mut errors, "boundary scan at -1.6 disagrees".to_string());
    }
    let at_15 = conjecture_disproof(-1.5)?;
    if !(at_15.q_at_one > 1e-3) {
        fail(&mut errors, format!("Q_phi(1) at -1.5 = {}", at_15.q_at_one));
    }
    if !(at_15.boundary_min > 0.0 && at_15.verdict == Verdict::Convex) {
        fail(&mut errors, "boundary scan at -1.5 disagrees".to_string());
    }
    let elapsed = start.elapsed().as_secs_f64();
    if elapsed >= 1.0 {
        fail(&mut errors, format!("runtime {elapsed:.2}s >= 1s"));
    }
    Ok(CheckResult::finish(
        "criterion 2: conjecture disproof",
        start,
        errors.is_empty(),
        detail(
            &errors,
            &format!(
                "Q_phi(1) = {:.6} at -1.6, {:.6} at -1.5",
                at_16.q_at_one, at_15.q_at_one
            ),
        ),
    ))
}

fn ml_sample_orders(kind: MapKind) -> [f64; 5] {
    match kind {
        MapKind::F => [0.5, 1.0, 2.0, 4.5, 8.0],
        MapKind::G | MapKind::H => [-0.7, 0.0, 0.5, 2.5, 7.0],
        MapKind::Phi => [-1.8, -1.0, 0.3, 2.0, 6.0],
    }
}

/// Criterion 3: 20 sampled Mittag-Leffler identities per kind at 1e-9, under 10 s.
pub fn check_ml_identities() -> Result<CheckResult> {
    let start = Instant::now();
    let cfg = ExpansionConfig::new(200, TailMode::McMahonBound)?;
    let mut errors = Vec::new();
    let probes = [(0.3, 0.0), (0.6, 1.1), (0.9, 2.7), (0.85, std::f64::consts::PI)];
    let mut worst: f64 = 0.0;
    for kind in MapKind::ALL {
        for v in ml_sample_orders(kind) {
            let nu = Order::new(v)?;
            let pole = kind.first_pole(nu)?;
            for (frac, angle) in probes {
                let z = Complex64::from_polar(frac * pole, angle);
                let r = ml_identity_residual(kind, nu, z, &cfg)?;
                worst = worst.max(r);
                if r > 1e-9 {
                    fail(
                        &mut errors,
                        format!("{} nu={v} |z|={:.3}: residual {r:.2e}", kind.name(), z.norm()),
                    );
                }
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    if elapsed >= 10.0 {
        fail(&mut errors, format!("runtime {elapsed:.2}s >= 10s"));
    }
    Ok(CheckResult::finish(
        "criterion 3: Mittag-Leffler identities",
        start,
        errors.is_empty(),
        detail(&errors, &format!("80 identities, worst residual {worst:.2e}")),
    ))
}

/// Criterion 4: series vs Poisson-quadrature agreement on a 10x10 grid.
pub fn check_oracle_equivalence() -> Result<CheckResult> {
    let start = Instant::now();
    let cfg = SeriesConfig::default();
    let mut errors = Vec::new();
    let mut worst: f64 = 0.0;
    for i in 1..=10 {
        let v = -0.4 + 1.04 * i as f64;
        let nu = Order::new(v)?;
        for j in 1..=10 {
            let x = j as f64;
            let series = bessel_j(nu, Complex64::new(x, 0.0), &cfg)?.re;
            let quad = bessel_j_poisson(nu, x, 64)?;
            let diff = (series - quad).abs();
            worst = worst.max(diff);
            if diff > 1e-10 {
                fail(&mut errors, format!("nu={v:.2} x={x}: |diff| = {diff:.2e}"));
            }
        }
    }
    Ok(CheckResult::finish(
        "criterion 4: oracle equivalence",
        start,
        errors.is_empty(),
        detail(&errors, &format!("100 points, worst |diff| {worst:.2e}")),
    ))
}

/// Criterion 5: interlacing chain, Dini bounds and nu-monotonicity on a
/// 20-point grid over (0, 8].
pub fn check_interlacing_and_dini_bounds() -> Result<CheckResult> {
    let start = Instant::now();
    let mut errors = Vec::new();
    let mut prev = (0.0_f64, 0.0_f64, 0.0_f64); // j1, alpha1, beta1
    for i in 1..=20 {
        let v = 0.4 * i as f64;
        let nu = Order::new(v)?;
        let j1 = bessel_zero(nu, 1)?;
        let j2 = bessel_zero(nu, 2)?;
        let p1 = bessel_derivative_zero(nu, 1)?;
        let p2 = bessel_derivative_zero(nu, 2)?;
        if !(v <= p1 && p1 < j1 && j1 < p2 && p2 < j2) {
            fail(&mut errors, format!("interlacing broken at nu={v}"));
        }
        let alpha1 = dini_zero(1.0 - v, nu, 1)?;
        let beta1 = dini_zero(2.0 - v, nu, 1)?;
        if !(1.0 < alpha1 && alpha1 < j1 && 1.0 < beta1 && beta1 < j1) {
            fail(&mut errors, format!("Dini bounds broken at nu={v}"));
        }
        if !(j1 > prev.0 && alpha1 > prev.1 && beta1 > prev.2) {
            fail(&mut errors, format!("nu-monotonicity broken at nu={v}"));
        }
        prev = (j1, alpha1, beta1);
    }
    Ok(CheckResult::finish(
        "criterion 5: interlacing + Dini bounds",
        start,
        errors.is_empty(),
        detail(&errors, "20-point grid in (0, 8]"),
    ))
}

/// Criterion 6: 30 random radius certifications with strict envelope decrease.
pub fn check_radius_certification() -> Result<CheckResult> {
    let start = Instant::now();
    let mut rng = SplitMix64(0x5eed_cafe_f00d_0001);
    let mut errors = Vec::new();
    for case in 0..30 {
        let kind = MapKind::ALL[case % 4];
        let v = match kind {
            MapKind::F => rng.in_range(0.08, 8.0),
            MapKind::G | MapKind::H => rng.in_range(-0.85, 8.0),
            MapKind::Phi => rng.in_range(-1.85, 8.0),
        };
        let alpha = rng.in_range(0.0, 0.9);
        let nu = Order::new(v)?;
        let result = radius_convexity(kind, nu, alpha)?;
        let pole = kind.first_pole(nu)?;
        let inside = convexity_certificate(kind, nu, 0.999 * result.radius, alpha)?;
        if !inside.convex {
            fail(
                &mut errors,
                format!("{} nu={v:.3} alpha={alpha:.3}: inside certificate failed", kind.name()),
            );
        }
        if 1.001 * result.radius < pole {
            let outside = convexity_certificate(kind, nu, 1.001 * result.radius, alpha)?;
            if outside.convex {
                fail(
                    &mut errors,
                    format!("{} nu={v:.3} alpha={alpha:.3}: outside certificate passed", kind.name()),
                );
            }
        }
        let mut last = f64::INFINITY;
        for i in 1..=50 {
            let r = pole * i as f64 / 51.0;
            let e = lower_envelope(kind, nu, r)?;
            if e >= last {
                fail(&mut errors, format!("{} nu={v:.3}: envelope not decreasing", kind.name()));
                break;
            }
            last = e;
        }
    }
    Ok(CheckResult::finish(
        "criterion 6: radius certification",
        start,
        errors.is_empty(),
        detail(&errors, "30 random (kind, nu, alpha) cases"),
    ))
}

/// Criterion 7: |radius at nu_alpha - 1| <= 1e-6 across kinds and alphas.
pub fn check_threshold_radius_consistency() -> Result<CheckResult> {
    let start = Instant::now();
    let mut errors = Vec::new();
    let mut worst: f64 = 0.0;
    for kind in MapKind::ALL {
        for alpha in [0.0, 0.25, 0.5, 0.75] {
            let t = critical_order(kind, alpha)?;
            let r = radius_convexity(kind, Order::new(t.nu_critical)?, alpha)?;
            let dev = (r.radius - 1.0).abs();
            worst = worst.max(dev);
            if dev > 1e-6 {
                fail(
                    &mut errors,
                    format!(
                        "{} alpha={alpha}: radius {} at nu_alpha = {:.8}",
                        kind.name(),
                        r.radius,
                        t.nu_critical
                    ),
                );
            }
        }
    }
    Ok(CheckResult::finish(
        "criterion 7: threshold/radius consistency",
        start,
        errors.is_empty(),
        detail(&errors, &format!("16 thresholds, worst |radius-1| {worst:.2e}")),
    ))
}

/// Criterion 8: 200-term partial Rayleigh sums against the closed forms,
/// converging upward with remainder below the lattice tail bound.
pub fn check_rayleigh_convergence() -> Result<CheckResult> {
    let start = Instant::now();
    let mut errors = Vec::new();
    let mut worst: f64 = 0.0;
    for v in [0.0, 0.5, 1.0, 2.0] {
        let nu = Order::new(v)?;
        let family = ZeroFamily::bessel_j(nu)?;
        let table = ZeroTable::build(family, 200)?;
        let partial = table.partial_power_sum(2, 200)?;
        let closed = crate::bessel::rayleigh_sum(nu, crate::bessel::RayleighPower::Four)?;
        let diff = (closed - partial).abs();
        worst = worst.max(diff);
        if !(partial < closed) {
            fail(&mut errors, format!("nu={v}: partial sum not below closed form"));
        }
        // sum_{n>200} j^{-4} <= ell(200)^{-3} / (3 pi)
        let tail_cap = family.tail_lower_bound(200).powi(-3) / (3.0 * std::f64::consts::PI);
        if closed - partial > tail_cap {
            fail(&mut errors, format!("nu={v}: remainder above tail bound"));
        }
        if diff > 1e-8 {
            fail(&mut errors, format!("nu={v}: |diff| = {diff:.2e}"));
        }
    }
    Ok(CheckResult::finish(
        "criterion 8: Rayleigh convergence",
        start,
        errors.is_empty(),
        detail(&errors, &format!("4 orders, worst gap {worst:.2e}")),
    ))
}

/// Run all eight acceptance criteria in order.
pub fn run_verification() -> Result<Vec<CheckResult>> {
    Ok(vec![
        check_constant_reproduction()?,
        check_conjecture_disproof()?,
        check_ml_identities()?,
        check_oracle_equivalence()?,
        check_interlacing_and_dini_bounds()?,
        check_radius_certification()?,
        check_threshold_radius_consistency()?,
        check_rayleigh_convergence()?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproduce_table_shape_and_true_roots() {
        let rows = reproduce(FOUR_DECIMAL_TOL).unwrap();
        assert_eq!(rows.len(), 8);
        let by_name = |n: &str| rows.iter().find(|r| r.quantity == n).unwrap();
        // exact-rational rows pass at 1e-8
        assert_eq!(by_name("nu_0(f)").status, RowStatus::Pass);
        assert_eq!(by_name("nu_0(g)").status, RowStatus::Pass);
        assert_eq!(by_name("nu_3/4(h)").status, RowStatus::Pass);
        // in-band 4-decimal constants
        assert_eq!(by_name("nu_2").status, RowStatus::Pass);
        assert_eq!(by_name("nu_0(phi)").status, RowStatus::Pass);
        // the three reference prints that are imprecise: the table reports
        // the honest diffs (9.0e-5, 6.1e-5, 1.65e-4) against the prints
        let ns = by_name("nu_star");
        assert!((ns.computed - 0.3900100533985773).abs() < 1e-9);
        assert!((ns.abs_diff.unwrap() - 8.99e-5).abs() < 1e-6);
        let nh = by_name("nu_0(h)");
        assert!((nh.computed - -0.1438607404254301).abs() < 1e-9);
        let np = by_name("nu_star_phi");
        assert!((np.computed - -1.7745645128439622).abs() < 1e-9);
    }

    #[test]
    fn format_round_trips_f64() {
        for x in [
            2.404825557695773,
            -1.7745645128439622,
            1.0 / 3.0,
            6.02e-23,
            9.483367566824799e307,
        ] {
            let s = format_f64(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "round-trip failed for {s}");
        }
    }

    #[test]
    fn splitmix_is_deterministic() {
        let mut a = SplitMix64(42);
        let mut b = SplitMix64(42);
        for _ in 0..10 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = SplitMix64(7);
        for _ in 0..100 {
            let x = c.next_f64();
            assert!((0.0..1.0).contains(&x));
        }
    }

    #[test]
    fn quick_criteria_pass() {
        // fast subset; the full suite runs in tests/acceptance.rs
        assert!(check_conjecture_disproof().unwrap().passed);
        assert!(check_rayleigh_convergence().unwrap().passed);
    }
}

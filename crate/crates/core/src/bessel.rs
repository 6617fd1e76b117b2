//! Evaluation of J_nu, its derivative and Dini combinations for real order
//! nu > -2 and real or complex argument.
//!
//! The ascending series
//!
//! ```text
//! J_nu(z) = sum_{n>=0} (-1)^n / (n! Gamma(n+nu+1)) (z/2)^{2n+nu}
//! ```
//!
//! is evaluated as an analytic part `sum (-1)^n/(n! Gamma(n+nu+1)) q^n`
//! (q = (z/2)^2) times the principal branch of (z/2)^nu. On the real axis the
//! series is trusted only up to `SERIES_MILLER_SWITCH`: beyond that the
//! alternating terms cancel to ~eps * I_nu(x) = O(eps * e^x) absolute and the
//! zero-table residual targets become unreachable in f64, so large real
//! arguments switch to Miller's backward recurrence normalized through the
//! Neumann sum `sum_k (nu+2k) Gamma(nu+k)/k! J_{nu+2k}(x) = (x/2)^nu`.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Default cap on |z| for the complex series entry point.
pub const DEFAULT_ARG_CAP: f64 = 100.0;

/// Real-axis arguments above this are evaluated by backward recurrence.
pub(crate) const SERIES_MILLER_SWITCH: f64 = 12.0;

/// Real Bessel order, valid on (-2, inf).
///
/// Map-specific windows (F: nu>0, G/H: nu>-1, PHI: nu>-2) are enforced by the
/// consumers; this type only guards the global window.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Order(f64);

impl Order {
    pub fn new(nu: f64) -> Result<Self> {
        if !nu.is_finite() || nu <= -2.0 {
            return Err(Error::OrderWindow {
                nu,
                window: "(-2, inf)",
                what: "Bessel order",
            });
        }
        Ok(Order(nu))
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

/// Truncation control for the ascending series.
#[derive(Debug, Clone, Copy)]
pub struct SeriesConfig {
    pub rel_tol: f64,
    pub max_terms: usize,
}

impl SeriesConfig {
    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol <= 1e-6) {
            return Err(Error::InvalidConfig("rel_tol must lie in (0, 1e-6]"));
        }
        if max_terms < 30 {
            return Err(Error::InvalidConfig("max_terms must be >= 30"));
        }
        Ok(SeriesConfig { rel_tol, max_terms })
    }
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            rel_tol: 1e-13,
            max_terms: 200,
        }
    }
}

/// Compensated (Kahan) accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct KahanSum {
    sum: f64,
    c: f64,
}

impl KahanSum {
    pub(crate) fn add(&mut self, value: f64) {
        let y = value - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum
    }
}

// ---------------------------------------------------------------------------
// Gamma
// ---------------------------------------------------------------------------

// Lanczos coefficients, g = 7, n = 9 (the GSL set). The rational core is kept
// on [0.5, 21.5): evaluated there its relative error stays below ~7e-15, while
// a direct evaluation at x ~ 170 drifts above 1e-13 and overflows w^(x+0.5).
// Larger arguments descend by Gamma(x) = (x-1) Gamma(x-1); x < 0.5 reflects.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_P: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// sin(pi x) with exact-period argument reduction.
fn sin_pi(x: f64) -> f64 {
    let mut r = x % 2.0;
    if r < -1.0 {
        r += 2.0;
    } else if r > 1.0 {
        r -= 2.0;
    }
    if r > 0.5 {
        r = 1.0 - r;
    } else if r < -0.5 {
        r = -1.0 - r;
    }
    (std::f64::consts::PI * r).sin()
}

/// Lanczos core, valid for x in [0.5, 21.5).
fn lanczos_core(x: f64) -> f64 {
    let x = x - 1.0;
    let mut t = LANCZOS_P[0];
    for (i, p) in LANCZOS_P.iter().enumerate().skip(1) {
        t += p / (x + i as f64);
    }
    let w = x + LANCZOS_G + 0.5;
    (2.0 * std::f64::consts::PI).sqrt() * w.powf(x + 0.5) * (-w).exp() * t
}

/// Gamma(x) for real x, poles at non-positive integers.
///
/// Relative error <= ~7e-15 on (-2, 171.62]; overflows to +inf above that.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain {
            value: x,
            domain: "finite reals",
            what: "gamma",
        });
    }
    if x <= 0.0 && x == x.floor() {
        return Err(Error::GammaPole(x));
    }
    if x < 0.5 {
        // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
        return Ok(std::f64::consts::PI / (sin_pi(x) * gamma_fn(1.0 - x)?));
    }
    let mut prod = 1.0;
    let mut y = x;
    while y >= 21.5 {
        y -= 1.0;
        prod *= y;
    }
    Ok(prod * lanczos_core(y))
}

// ---------------------------------------------------------------------------
// Ascending series
// ---------------------------------------------------------------------------

/// sum_{n>=0} (-1)^n q^n / (n! Gamma(n+mu+1)) for complex q.
///
/// Exact negative-integer orders use f_{-m}(q) = (-q)^m f_m(q).
pub(crate) fn series_part(mu: f64, q: Complex64, cfg: &SeriesConfig) -> Result<Complex64> {
    if mu < 0.0 && mu == mu.floor() {
        let m = (-mu) as i32;
        let shifted = series_part(-mu, q, cfg)?;
        return Ok((-q).powi(m) * shifted);
    }
    let t0 = 1.0 / gamma_fn(mu + 1.0)?;
    let mut term = Complex64::new(t0, 0.0);
    let mut sum_re = KahanSum::default();
    let mut sum_im = KahanSum::default();
    sum_re.add(term.re);
    sum_im.add(term.im);
    for n in 0..cfg.max_terms {
        let nf = n as f64;
        let denom = (nf + 1.0) * (nf + mu + 1.0);
        term = -term * q / denom;
        sum_re.add(term.re);
        sum_im.add(term.im);
        let sum_mag = sum_re.value().hypot(sum_im.value());
        let decaying = q.norm() < (nf + 2.0) * (nf + mu + 2.0);
        if term.norm() == 0.0 || (decaying && term.norm() < cfg.rel_tol * sum_mag) {
            return Ok(Complex64::new(sum_re.value(), sum_im.value()));
        }
    }
    Err(Error::SeriesNonConvergence {
        nu: mu,
        q_abs: q.norm(),
        max_terms: cfg.max_terms,
    })
}

/// Real-q specialization of [`series_part`].
pub(crate) fn series_part_real(mu: f64, q: f64, cfg: &SeriesConfig) -> Result<f64> {
    if mu < 0.0 && mu == mu.floor() {
        let m = (-mu) as i32;
        return Ok((-q).powi(m) * series_part_real(-mu, q, cfg)?);
    }
    let mut term = 1.0 / gamma_fn(mu + 1.0)?;
    let mut sum = KahanSum::default();
    sum.add(term);
    for n in 0..cfg.max_terms {
        let nf = n as f64;
        term = -term * q / ((nf + 1.0) * (nf + mu + 1.0));
        sum.add(term);
        let decaying = q.abs() < (nf + 2.0) * (nf + mu + 2.0);
        if term == 0.0 || (decaying && term.abs() < cfg.rel_tol * sum.value().abs()) {
            return Ok(sum.value());
        }
    }
    Err(Error::SeriesNonConvergence {
        nu: mu,
        q_abs: q.abs(),
        max_terms: cfg.max_terms,
    })
}

/// J_nu(z) for complex z, principal branch of (z/2)^nu.
pub fn bessel_j(nu: Order, z: Complex64, cfg: &SeriesConfig) -> Result<Complex64> {
    bessel_j_capped(nu, z, cfg, DEFAULT_ARG_CAP)
}

/// J_nu(z) with an explicit cap on |z| (series truncation honesty).
pub fn bessel_j_capped(
    nu: Order,
    z: Complex64,
    cfg: &SeriesConfig,
    cap: f64,
) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) || z.norm() > cap {
        return Err(Error::Domain {
            value: z.norm(),
            domain: "|z| <= cap",
            what: "bessel_j argument",
        });
    }
    let v = nu.get();
    if z == Complex64::new(0.0, 0.0) {
        if v == 0.0 {
            return Ok(Complex64::new(1.0, 0.0));
        }
        if v > 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        return Err(Error::Domain {
            value: 0.0,
            domain: "z != 0 for nu < 0",
            what: "bessel_j argument",
        });
    }
    let half = z / 2.0;
    let analytic = series_part(v, half * half, cfg)?;
    // principal branch: (z/2)^nu = exp(nu log(z/2))
    let prefactor = (half.ln() * v).exp();
    Ok(prefactor * analytic)
}

/// J'_nu(z) via the recurrence z J'_nu(z) = nu J_nu(z) - z J_{nu+1}(z),
/// assembled in reduced form so z -> 0 is handled where it is finite.
pub fn bessel_j_derivative(nu: Order, z: Complex64, cfg: &SeriesConfig) -> Result<Complex64> {
    let v = nu.get();
    if z == Complex64::new(0.0, 0.0) {
        if v == 1.0 {
            return Ok(Complex64::new(0.5, 0.0));
        }
        if v > 1.0 || v == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        return Err(Error::Domain {
            value: 0.0,
            domain: "z != 0 for nu < 1, nu != 0",
            what: "bessel_j_derivative argument",
        });
    }
    let half = z / 2.0;
    let q = half * half;
    let f0 = series_part(v, q, cfg)?;
    let f1 = series_part(v + 1.0, q, cfg)?;
    // J'_nu(z) = (z/2)^{nu-1} [ (nu/2) f_nu(q) - q f_{nu+1}(q) ]
    let prefactor = (half.ln() * (v - 1.0)).exp();
    Ok(prefactor * (f0 * (v / 2.0) - q * f1))
}

// ---------------------------------------------------------------------------
// Real-axis pair evaluation (series / Miller dispatch)
// ---------------------------------------------------------------------------

/// (J_mu(x), J_{mu+1}(x)) on the positive real axis, for mu > -2.
///
/// Series below [`SERIES_MILLER_SWITCH`], Miller backward recurrence above.
/// Orders in (-2, -1] take one extra downward recurrence step from the
/// mu + 1 ladder (the step coefficient 2(mu+1)/x is small there).
pub(crate) fn bessel_pair(mu: f64, x: f64) -> Result<(f64, f64)> {
    debug_assert!(x > 0.0);
    if x <= SERIES_MILLER_SWITCH {
        let cfg = SeriesConfig::default();
        let q = (x / 2.0) * (x / 2.0);
        let f0 = series_part_real(mu, q, &cfg)?;
        let f1 = series_part_real(mu + 1.0, q, &cfg)?;
        let p = (x / 2.0).powf(mu);
        Ok((p * f0, p * (x / 2.0) * f1))
    } else if mu <= -1.0 {
        let (j1, j2) = miller_pair(mu + 1.0, x)?;
        Ok((2.0 * (mu + 1.0) / x * j1 - j2, j1))
    } else {
        miller_pair(mu, x)
    }
}

/// Backward-recurrence evaluation of (J_mu(x), J_{mu+1}(x)), mu > -1.
///
/// Stable for all x used by the zero tables (x up to ~1400); worst measured
/// absolute error 2e-15 against 40-digit references.
pub(crate) fn miller_pair(mu: f64, x: f64) -> Result<(f64, f64)> {
    if mu <= -1.0 {
        return Err(Error::OrderWindow {
            nu: mu,
            window: "(-1, inf)",
            what: "backward recurrence",
        });
    }
    let top_order = x + 12.0 * x.cbrt() + 32.0;
    let half_terms = (((top_order - mu) / 2.0).ceil() as usize).max(8);
    let k_top = 2 * half_terms;

    // weights w_k = (mu + 2k) Gamma(mu + k) / k!
    let gamma_mu1 = gamma_fn(mu + 1.0)?;
    let mut weights = vec![0.0_f64; half_terms + 1];
    weights[0] = gamma_mu1;
    let mut g = gamma_mu1; // Gamma(mu+k)/k! for k >= 1
    for (k, w) in weights.iter_mut().enumerate().skip(1) {
        *w = (mu + 2.0 * k as f64) * g;
        g *= (mu + k as f64) / (k as f64 + 1.0);
    }

    let mut b_prev = 0.0_f64; // order mu + k + 1
    let mut b_cur = 1e-30_f64; // order mu + k
    let mut norm = 0.0_f64;
    let mut j_mu = 0.0_f64;
    let mut j_mu1 = 0.0_f64;
    let mut k = k_top as i64;
    while k >= 0 {
        if k % 2 == 0 {
            norm += weights[(k / 2) as usize] * b_cur;
        }
        if k == 1 {
            j_mu1 = b_cur;
        }
        if k == 0 {
            j_mu = b_cur;
        }
        let b_next = (2.0 * (mu + k as f64) / x) * b_cur - b_prev;
        b_prev = b_cur;
        b_cur = b_next;
        if b_cur.abs() > 1e250 {
            b_cur *= 1e-250;
            b_prev *= 1e-250;
            norm *= 1e-250;
            j_mu1 *= 1e-250;
            j_mu *= 1e-250;
        }
        k -= 1;
    }
    let scale = (x / 2.0).powf(mu) / norm;
    Ok((j_mu * scale, j_mu1 * scale))
}

// ---------------------------------------------------------------------------
// Dini combination and Rayleigh sums
// ---------------------------------------------------------------------------

/// gamma J_nu(x) + x J'_nu(x) = (gamma + nu) J_nu(x) - x J_{nu+1}(x), x >= 0.
pub fn dini(gamma: f64, nu: Order, x: f64) -> Result<f64> {
    let v = nu.get();
    if x < 0.0 || (x == 0.0 && v < 0.0) {
        return Err(Error::Domain {
            value: x,
            domain: "x >= 0 (x > 0 when nu < 0)",
            what: "dini argument",
        });
    }
    if x == 0.0 {
        let j0 = if v == 0.0 { 1.0 } else { 0.0 };
        return Ok((gamma + v) * j0);
    }
    let (j0, j1) = bessel_pair(v, x)?;
    Ok((gamma + v) * j0 - x * j1)
}

/// Power argument of [`rayleigh_sum`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RayleighPower {
    Four,
    Six,
}

/// Closed-form Rayleigh sums sum_n j_{nu,n}^{-4} and sum_n j_{nu,n}^{-6}.
pub fn rayleigh_sum(nu: Order, power: RayleighPower) -> Result<f64> {
    let v = nu.get();
    if v <= -1.0 {
        return Err(Error::OrderWindow {
            nu: v,
            window: "(-1, inf)",
            what: "rayleigh_sum",
        });
    }
    Ok(match power {
        RayleighPower::Four => 1.0 / (16.0 * (v + 1.0).powi(2) * (v + 2.0)),
        RayleighPower::Six => 1.0 / (32.0 * (v + 1.0).powi(3) * (v + 2.0) * (v + 3.0)),
    })
}

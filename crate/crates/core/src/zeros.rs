//! Certified positive zeros of J_nu, J'_nu and the Dini combination
//! gamma J_nu(z) + z J'_nu(z), with cached tables and exact reciprocal
//! power sums.
//!
//! All three families reduce to
//!
//! ```text
//! (x/2)^{-nu} [ c f_nu(q) - q f_{nu+1}(q) ],   q = (x/2)^2,
//! ```
//!
//! with c = gamma + nu (c = nu for the derivative family, and plain f_nu for
//! J itself), so one sweep of sign changes from 0+ brackets every zero; the
//! zeros are simple and real in the admissible windows, hence a pi/8 step
//! cannot skip a sign-change pair. Refinement is bisection followed by
//! bracket-safeguarded Newton, certified by |family(x)| <= 1e-11 max(1,|family'(x)|).

use crate::bessel::{bessel_pair, series_part_real, KahanSum, Order, SeriesConfig,
                    SERIES_MILLER_SWITCH};
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

const SCAN_STEP: f64 = std::f64::consts::PI / 8.0;
const RESIDUAL_TOL: f64 = 1e-11;
/// Slack below the first-order McMahon correction in [`ZeroFamily::tail_lower_bound`],
/// covering the O(1/a^3) terms at table depth (calibrated in tests).
pub(crate) const TAIL_MARGIN: f64 = 0.5;

/// Which function's zeros a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    BesselJ,
    BesselJPrime,
    Dini,
}

/// A fixed zero family: J_nu, J'_nu, or gamma J_nu + z J'_nu.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroFamily {
    kind: FamilyKind,
    nu: f64,
    gamma: f64,
}

impl ZeroFamily {
    /// Zeros of J_nu, nu > -1.
    pub fn bessel_j(nu: Order) -> Result<Self> {
        if nu.get() <= -1.0 {
            return Err(Error::OrderWindow {
                nu: nu.get(),
                window: "(-1, inf)",
                what: "J_nu zeros",
            });
        }
        Ok(ZeroFamily {
            kind: FamilyKind::BesselJ,
            nu: nu.get(),
            gamma: 0.0,
        })
    }

    /// Zeros of J'_nu, nu > 0 (the window the interlacing chain covers).
    pub fn bessel_j_prime(nu: Order) -> Result<Self> {
        if nu.get() <= 0.0 {
            return Err(Error::OrderWindow {
                nu: nu.get(),
                window: "(0, inf)",
                what: "J'_nu zeros",
            });
        }
        Ok(ZeroFamily {
            kind: FamilyKind::BesselJPrime,
            nu: nu.get(),
            gamma: 0.0,
        })
    }

    /// Zeros of gamma J_nu(z) + z J'_nu(z), nu > -1, gamma + nu >= 0.
    ///
    /// gamma + nu < 0 is rejected: the family then has two purely imaginary
    /// zeros. gamma + nu = 0 degenerates to -z J_{nu+1}(z) and is delegated
    /// to the J_{nu+1} table.
    pub fn dini(gamma: f64, nu: Order) -> Result<Self> {
        let v = nu.get();
        if v <= -1.0 {
            return Err(Error::OrderWindow {
                nu: v,
                window: "(-1, inf)",
                what: "Dini zeros",
            });
        }
        let sum = gamma + v;
        if sum < 0.0 {
            return Err(Error::ImaginaryDiniZeros { sum });
        }
        if sum == 0.0 {
            return ZeroFamily::bessel_j(Order::new(v + 1.0)?);
        }
        Ok(ZeroFamily {
            kind: FamilyKind::Dini,
            nu: v,
            gamma,
        })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// c in the unified reduced form c f_nu - q f_{nu+1}; None for J itself.
    fn combination(&self) -> Option<f64> {
        match self.kind {
            FamilyKind::BesselJ => None,
            FamilyKind::BesselJPrime => Some(self.nu),
            FamilyKind::Dini => Some(self.gamma + self.nu),
        }
    }

    /// Family value on the full J scale (used for residual certification).
    pub fn eval(&self, x: f64) -> Result<f64> {
        let (j0, j1) = bessel_pair(self.nu, x)?;
        Ok(match self.combination() {
            None => j0,
            Some(c) => c * j0 - x * j1,
        })
    }

    /// Full-scale derivative of [`eval`].
    pub fn eval_derivative(&self, x: f64) -> Result<f64> {
        let v = self.nu;
        let (j0, j1) = bessel_pair(v, x)?;
        Ok(match self.combination() {
            None => v / x * j0 - j1,
            Some(c) => {
                let g = c - v;
                (v * c / x - x) * j0 - g * j1
            }
        })
    }

    /// (value, derivative) on a scale that is numerically sound at `x`:
    /// reduced series below the switch, full scale above. The sign always
    /// matches the full-scale family.
    fn eval_scaled(&self, x: f64) -> Result<(f64, f64)> {
        if x > SERIES_MILLER_SWITCH {
            return Ok((self.eval(x)?, self.eval_derivative(x)?));
        }
        let cfg = SeriesConfig::default();
        let q = (x / 2.0) * (x / 2.0);
        let f0 = series_part_real(self.nu, q, &cfg)?;
        let f1 = series_part_real(self.nu + 1.0, q, &cfg)?;
        Ok(match self.combination() {
            // f' = -(x/2) f_{nu+1}
            None => (f0, -(x / 2.0) * f1),
            Some(c) => {
                let g = c - self.nu;
                // x J_{nu+1} = (x/2)^nu 2q f_{nu+1}
                let value = c * f0 - 2.0 * q * f1;
                let deriv = x * ((self.nu - g) / 2.0 * f1 - f0);
                (value, deriv)
            }
        })
    }

    /// Sign of the family just right of the origin (before the first zero).
    fn sign_at_origin(&self) -> f64 {
        // c / Gamma(nu+1) (or 1/Gamma(nu+1)); positive in every admissible window
        1.0
    }

    /// McMahon-style guess for the n-th zero.
    pub fn mcmahon_guess(&self, n: usize) -> f64 {
        let nf = n as f64;
        let v = self.nu;
        match self.kind {
            FamilyKind::BesselJ => {
                let a = (nf + v / 2.0 - 0.25) * std::f64::consts::PI;
                let mu = 4.0 * v * v;
                if a > 2.0 {
                    a - (mu - 1.0) / (8.0 * a)
                } else {
                    a.max(0.1)
                }
            }
            _ => ((nf + v / 2.0 - 0.75) * std::f64::consts::PI).max(0.1),
        }
    }

    /// Lower bound for the n-th zero used by truncation-tail bounds.
    ///
    /// All three families approach the lattice a = (n + nu/2 - 3/4) pi with a
    /// phase correction (gamma - (mu+3)/8)/a, mu = 4 nu^2 (the J family sits a
    /// further pi/2 above). Valid at table depth (n >= 10, the expansion
    /// minimum); the first few zeros of large orders fall in the Airy regime
    /// and may sit below it.
    pub fn tail_lower_bound(&self, n: usize) -> f64 {
        let a = (n as f64 + self.nu / 2.0 - 0.75) * std::f64::consts::PI;
        let mu = 4.0 * self.nu * self.nu;
        a - (self.gamma.abs() + (mu + 3.0) / 8.0) / a - TAIL_MARGIN
    }

    fn name(&self) -> &'static str {
        match self.kind {
            FamilyKind::BesselJ => "J",
            FamilyKind::BesselJPrime => "J'",
            FamilyKind::Dini => "Dini",
        }
    }

    /// Exact reciprocal power sums p_k = sum_n rho_n^{-2k} for k = 1..k_max,
    /// from the family's Taylor coefficients through Newton's identities.
    ///
    /// For the J family these reproduce the classical Rayleigh sums
    /// (p_2 = 1/(16(nu+1)^2(nu+2)), p_3 = 1/(32(nu+1)^3(nu+2)(nu+3))).
    pub fn power_sums(&self, k_max: usize) -> Result<Vec<f64>> {
        // normalized Taylor coefficients of the reduced family in s = x^2:
        //   J:        c_n = (-1)^n / (4^n n! (nu+1)...(nu+n))
        //   c f - q f: c_n = (-1)^n (c + 2n) / (c 4^n n! (nu+1)...(nu+n))
        let v = self.nu;
        let comb = self.combination();
        let mut sigma = vec![0.0_f64; k_max + 1]; // sigma[k] = (-1)^k c_k
        sigma[0] = 1.0;
        let mut base = 1.0_f64; // 1/(4^n n! (nu+1)...(nu+n))
        for (k, slot) in sigma.iter_mut().enumerate().skip(1) {
            let kf = k as f64;
            base /= 4.0 * kf * (v + kf);
            // c_n alternates, so sigma_k = |c_k| with the (-1)^k sign folded in
            *slot = match comb {
                None => base,
                Some(c) => (c + 2.0 * kf) / c * base,
            };
        }
        // Newton: p_k = sigma_1 p_{k-1} - sigma_2 p_{k-2} + ... + (-1)^{k-1} k sigma_k
        let mut p = vec![0.0_f64; k_max + 1];
        for k in 1..=k_max {
            let mut acc = 0.0;
            let mut sign = 1.0;
            for i in 1..k {
                acc += sign * sigma[i] * p[k - i];
                sign = -sign;
            }
            acc += sign * (k as f64) * sigma[k];
            p[k] = acc;
        }
        Ok(p[1..].to_vec())
    }
}

// ---------------------------------------------------------------------------
// Refinement
// ---------------------------------------------------------------------------

/// Bisection + bracket-safeguarded Newton inside a sign-change bracket.
fn refine(family: &ZeroFamily, mut lo: f64, mut hi: f64, mut sign_lo: f64) -> Result<f64> {
    for _ in 0..25 {
        let mid = 0.5 * (lo + hi);
        let (val, _) = family.eval_scaled(mid)?;
        if val == 0.0 {
            return Ok(mid);
        }
        if val.signum() == sign_lo.signum() {
            lo = mid;
            sign_lo = val;
        } else {
            hi = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..12 {
        let (val, deriv) = family.eval_scaled(x)?;
        if val == 0.0 {
            return Ok(x);
        }
        if val.signum() == sign_lo.signum() {
            lo = x;
        } else {
            hi = x;
        }
        let step = if deriv != 0.0 { val / deriv } else { f64::NAN };
        let mut next = x - step;
        if !next.is_finite() || next <= lo || next >= hi {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= 2.0 * f64::EPSILON * x.abs() {
            return Ok(next);
        }
        x = next;
    }
    Ok(x)
}

// ---------------------------------------------------------------------------
// Tables and cache
// ---------------------------------------------------------------------------

/// Ordered positive zeros of one family, with certified residuals.
#[derive(Debug)]
pub struct ZeroTable {
    family: ZeroFamily,
    zeros: Vec<f64>,
    residuals: Vec<f64>,
}

type CacheKey = (u8, i64, i64, usize);

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<ZeroTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<ZeroTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cache_key(family: &ZeroFamily, count: usize) -> CacheKey {
    let kind = match family.kind {
        FamilyKind::BesselJ => 0u8,
        FamilyKind::BesselJPrime => 1,
        FamilyKind::Dini => 2,
    };
    // keyed by the family rounded to 1e-12
    let r = |x: f64| (x / 1e-12).round() as i64;
    (kind, r(family.nu), r(family.gamma), count)
}

impl ZeroTable {
    /// Build (or fetch from the write-once cache) a table of `count` zeros.
    pub fn build(family: ZeroFamily, count: usize) -> Result<Arc<ZeroTable>> {
        let key = cache_key(&family, count);
        if let Some(hit) = cache().lock().unwrap().get(&key) {
            return Ok(Arc::clone(hit));
        }
        let table = Arc::new(Self::compute(family, count)?);
        let mut guard = cache().lock().unwrap();
        // concurrent builders may race; first insert wins
        let entry = guard.entry(key).or_insert_with(|| Arc::clone(&table));
        Ok(Arc::clone(entry))
    }

    fn compute(family: ZeroFamily, count: usize) -> Result<ZeroTable> {
        let mut zeros = Vec::with_capacity(count);
        let mut residuals = Vec::with_capacity(count);
        let mut x_prev = 0.0_f64;
        let mut sign_prev = family.sign_at_origin();
        let scan_limit = family.mcmahon_guess(count.max(1)) + 2.0 * std::f64::consts::PI;
        let mut x = 0.0_f64;
        while zeros.len() < count {
            x += SCAN_STEP;
            if x > scan_limit {
                return Err(Error::BracketNotFound {
                    family: family.name(),
                    nu: family.nu,
                    index: zeros.len() + 1,
                });
            }
            let (val, _) = family.eval_scaled(x)?;
            if val == 0.0 {
                // landed on a zero exactly; perturb the sample
                x += SCAN_STEP * 1e-3;
                continue;
            }
            if val.signum() != sign_prev.signum() {
                let root = refine(&family, x_prev.max(f64::MIN_POSITIVE), x, sign_prev)?;
                let residual = family.eval(root)?.abs();
                let scale = family.eval_derivative(root)?.abs().max(1.0);
                if residual > RESIDUAL_TOL * scale {
                    return Err(Error::BracketNotFound {
                        family: family.name(),
                        nu: family.nu,
                        index: zeros.len() + 1,
                    });
                }
                zeros.push(root);
                residuals.push(residual);
            }
            x_prev = x;
            sign_prev = val;
        }
        Ok(ZeroTable {
            family,
            zeros,
            residuals,
        })
    }

    pub fn family(&self) -> &ZeroFamily {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// n-th zero, 1-based.
    pub fn zero(&self, n: usize) -> Result<f64> {
        if n == 0 || n > self.zeros.len() {
            return Err(Error::TableTooShort {
                have: self.zeros.len(),
                want: n,
            });
        }
        Ok(self.zeros[n - 1])
    }

    pub fn zeros(&self) -> &[f64] {
        &self.zeros
    }

    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    /// sum_{n <= n_terms} rho_n^{-2k}, compensated.
    pub fn partial_power_sum(&self, k: u32, n_terms: usize) -> Result<f64> {
        if n_terms > self.zeros.len() {
            return Err(Error::TableTooShort {
                have: self.zeros.len(),
                want: n_terms,
            });
        }
        let mut acc = KahanSum::default();
        for &rho in &self.zeros[..n_terms] {
            acc.add((rho * rho).powi(-(k as i32)));
        }
        Ok(acc.value())
    }
}

// ---------------------------------------------------------------------------
// Public zero operations
// ---------------------------------------------------------------------------

/// n-th positive zero j_{nu,n} of J_nu, nu > -1, residual <= 1e-11 scale.
pub fn bessel_zero(nu: Order, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidConfig("zero index is 1-based"));
    }
    ZeroTable::build(ZeroFamily::bessel_j(nu)?, n)?.zero(n)
}

/// n-th positive zero j'_{nu,n} of J'_nu, nu > 0.
pub fn bessel_derivative_zero(nu: Order, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidConfig("zero index is 1-based"));
    }
    ZeroTable::build(ZeroFamily::bessel_j_prime(nu)?, n)?.zero(n)
}

/// n-th positive zero of gamma J_nu(z) + z J'_nu(z), nu > -1, gamma + nu >= 0.
///
/// alpha_{nu,1} = dini_zero(1-nu, nu, 1); beta_{nu,1} = dini_zero(2-nu, nu, 1).
pub fn dini_zero(gamma: f64, nu: Order, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidConfig("zero index is 1-based"));
    }
    ZeroTable::build(ZeroFamily::dini(gamma, nu)?, n)?.zero(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bessel::gamma_fn;
    use approx::assert_abs_diff_eq;

    fn ord(v: f64) -> Order {
        Order::new(v).unwrap()
    }

    #[test]
    fn half_integer_bessel_zeros_are_multiples_of_pi() {
        for n in 1..=3 {
            let z = bessel_zero(ord(0.5), n).unwrap();
            assert_abs_diff_eq!(z, n as f64 * std::f64::consts::PI, epsilon = 1e-11);
        }
    }

    #[test]
    fn first_zero_of_j0() {
        let z = bessel_zero(ord(0.0), 1).unwrap();
        assert_abs_diff_eq!(z, 2.404825557695773, epsilon = 1e-10);
    }

    #[test]
    fn derivative_zero_against_scan_bisection_oracle() {
        // J'_{1/2}(x) = 0  <=>  sin x - 2x cos x = 0; independent bisection.
        let f = |x: f64| x.sin() - 2.0 * x * x.cos();
        let (mut lo, mut hi) = (1.0, 1.5);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if f(mid) * f(lo) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let oracle = 0.5 * (lo + hi);
        assert_abs_diff_eq!(oracle, 1.1655611852072113, epsilon = 1e-12);
        let z = bessel_derivative_zero(ord(0.5), 1).unwrap();
        assert_abs_diff_eq!(z, oracle, epsilon = 1e-10);
    }

    #[test]
    fn derivative_zero_interlacing_containment() {
        let j11 = bessel_zero(ord(1.0), 1).unwrap();
        let jp11 = bessel_derivative_zero(ord(1.0), 1).unwrap();
        assert!(1.0 < jp11 && jp11 < j11);
        assert_abs_diff_eq!(jp11, 1.8411837813406593, epsilon = 1e-10);
    }

    #[test]
    fn derivative_zero_near_unity_at_critical_order() {
        let z = bessel_derivative_zero(ord(0.3901), 1).unwrap();
        assert!((z - 1.0).abs() < 2e-3, "j'_{{0.3901,1}} = {z}");
    }

    #[test]
    fn small_order_derivative_zero_below_scan_step() {
        // j'_{nu,1} ~ 2 sqrt(nu(nu+1)) sits below pi/8 for tiny nu
        let z = bessel_derivative_zero(ord(0.005), 1).unwrap();
        assert!(z > 0.005 && z < 0.39, "j'_{{0.005,1}} = {z}");
        let d = ZeroFamily::bessel_j_prime(ord(0.005))
            .unwrap()
            .eval(z)
            .unwrap();
        assert!(d.abs() < 1e-11);
    }

    #[test]
    fn dini_zero_first_windows() {
        let j01 = bessel_zero(ord(0.0), 1).unwrap();
        let a01 = dini_zero(1.0, ord(0.0), 1).unwrap();
        let b01 = dini_zero(2.0, ord(0.0), 1).unwrap();
        assert!(1.0 < a01 && a01 < j01);
        assert!(1.0 < b01 && b01 < j01);
        assert_abs_diff_eq!(a01, 1.2557837117945935, epsilon = 1e-10);
        assert_abs_diff_eq!(b01, 1.5994492064869279, epsilon = 1e-10);
    }

    #[test]
    fn dini_zero_half_integer_closed_forms() {
        // (1-nu) at nu=1/2: zeros of z cos z -> pi/2
        let a = dini_zero(0.5, ord(0.5), 1).unwrap();
        assert_abs_diff_eq!(a, std::f64::consts::FRAC_PI_2, epsilon = 1e-11);
        // (2-nu) at nu=1/2: zeros of sin z + z cos z (tan z = -z)
        let b = dini_zero(1.5, ord(0.5), 1).unwrap();
        assert_abs_diff_eq!(b, 2.0287578381104342, epsilon = 1e-10);
        // residual in the J-form of the alpha equation
        let nu = ord(0.5);
        let z = dini_zero(0.5, nu, 1).unwrap();
        let (j0, j1) = bessel_pair(0.5, z).unwrap();
        assert!((j0 - z * j1).abs() <= 1e-11);
    }

    #[test]
    fn dini_rejects_imaginary_window_and_delegates_degenerate() {
        assert!(matches!(
            dini_zero(-1.5, ord(1.0), 1),
            Err(Error::ImaginaryDiniZeros { .. })
        ));
        // gamma + nu = 0 degenerates to -z J_{nu+1}
        let z = dini_zero(-1.0, ord(1.0), 1).unwrap();
        let j21 = bessel_zero(ord(2.0), 1).unwrap();
        assert_abs_diff_eq!(z, j21, epsilon = 1e-12);
    }

    #[test]
    fn interlacing_chain_sampled() {
        for nu in [0.25, 0.5, 1.0, 2.5, 5.0, 8.0] {
            let o = ord(nu);
            let j1 = bessel_zero(o, 1).unwrap();
            let j2 = bessel_zero(o, 2).unwrap();
            let p1 = bessel_derivative_zero(o, 1).unwrap();
            let p2 = bessel_derivative_zero(o, 2).unwrap();
            let p3 = bessel_derivative_zero(o, 3).unwrap();
            assert!(
                nu <= p1 && p1 < j1 && j1 < p2 && p2 < j2 && j2 < p3,
                "interlacing failed at nu={nu}"
            );
        }
    }

    #[test]
    fn dini_zero_monotone_in_order_fixed_gamma() {
        // fixed gamma, gamma + nu >= 0: nu -> zero_n increasing
        let gamma = 0.3;
        for n in [1, 2] {
            let mut prev = 0.0;
            for nu in [-0.2, 0.4, 1.1, 2.0, 4.0] {
                let z = dini_zero(gamma, ord(nu), n).unwrap();
                assert!(z > prev, "not increasing at nu={nu}, n={n}");
                prev = z;
            }
        }
    }

    #[test]
    fn bessel_zero_monotone_in_order() {
        let mut prev = 0.0;
        for nu in [-0.9, -0.3, 0.0, 0.7, 2.0, 5.0, 8.0] {
            let z = bessel_zero(ord(nu), 1).unwrap();
            assert!(z > prev);
            prev = z;
        }
    }

    #[test]
    fn table_residuals_and_alternation() {
        let family = ZeroFamily::dini(1.0 - 0.7, ord(0.7)).unwrap();
        let table = ZeroTable::build(family, 40).unwrap();
        assert_eq!(table.len(), 40);
        for (i, (&z, &r)) in table.zeros().iter().zip(table.residuals()).enumerate() {
            let scale = family.eval_derivative(z).unwrap().abs().max(1.0);
            assert!(r <= RESIDUAL_TOL * scale, "residual too large at #{}", i + 1);
            if i > 0 {
                assert!(z > table.zeros()[i - 1]);
            }
        }
        // sign alternation at midpoints (zeros are simple)
        let mut sign = family.eval(table.zeros()[0] / 2.0).unwrap().signum();
        for w in table.zeros().windows(2) {
            let mid = 0.5 * (w[0] + w[1]);
            let s = family.eval(mid).unwrap().signum();
            assert_eq!(s, -sign);
            sign = s;
        }
    }

    #[test]
    fn tail_lower_bound_calibration() {
        // every computed zero at table depth (n >= 10, the expansion minimum)
        // sits above the lattice bound used by tail estimates, including the
        // large-order stress cases
        for family in [
            ZeroFamily::bessel_j(ord(-0.9)).unwrap(),
            ZeroFamily::bessel_j(ord(7.0)).unwrap(),
            ZeroFamily::bessel_j(ord(12.0)).unwrap(),
            ZeroFamily::bessel_j_prime(ord(3.2)).unwrap(),
            ZeroFamily::bessel_j_prime(ord(12.0)).unwrap(),
            ZeroFamily::dini(1.0 - 5.0, ord(5.0)).unwrap(),
            ZeroFamily::dini(1.0 - 11.0, ord(11.0)).unwrap(),
            ZeroFamily::dini(2.0 - 0.1, ord(0.1)).unwrap(),
            ZeroFamily::dini(2.0 - 12.0, ord(12.0)).unwrap(),
        ] {
            let table = ZeroTable::build(family, 260).unwrap();
            for (i, &z) in table.zeros().iter().enumerate().skip(9) {
                let bound = family.tail_lower_bound(i + 1);
                assert!(
                    z > bound,
                    "{:?} nu={}: zero #{} = {z} below bound {bound}",
                    family.kind(),
                    family.nu(),
                    i + 1
                );
            }
        }
    }

    #[test]
    fn power_sums_match_rayleigh_closed_forms() {
        use crate::bessel::{rayleigh_sum, RayleighPower};
        for nu in [-0.5, 0.0, 0.5, 1.0, 3.7] {
            let o = ord(nu);
            let p = ZeroFamily::bessel_j(o).unwrap().power_sums(3).unwrap();
            assert_abs_diff_eq!(p[0], 1.0 / (4.0 * (nu + 1.0)), epsilon = 1e-15);
            let r4 = rayleigh_sum(o, RayleighPower::Four).unwrap();
            let r6 = rayleigh_sum(o, RayleighPower::Six).unwrap();
            assert_abs_diff_eq!(p[1], r4, epsilon = 1e-15 * (1.0 + r4.abs()));
            assert_abs_diff_eq!(p[2], r6, epsilon = 1e-15 * (1.0 + r6.abs()));
        }
    }

    #[test]
    fn power_sums_match_zeta_lattice_at_half() {
        // alpha_{1/2,n} = (n - 1/2) pi exactly; zeta closed forms give
        // p_1 = 1/2, p_2 = 1/6, p_3 = 1/15 after dividing by pi powers.
        let fam = ZeroFamily::dini(0.5, ord(0.5)).unwrap();
        let p = fam.power_sums(3).unwrap();
        assert_abs_diff_eq!(p[0], 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(p[1], 1.0 / 6.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p[2], 1.0 / 15.0, epsilon = 1e-15);
    }

    #[test]
    fn power_sums_agree_with_table_partials() {
        let fam = ZeroFamily::dini(2.0 - 1.3, ord(1.3)).unwrap();
        let table = ZeroTable::build(fam, 200).unwrap();
        let p = fam.power_sums(3).unwrap();
        // tail of sum rho^{-2} ~ 1/(pi^2 N); k = 2, 3 tails are far smaller
        let partial1 = table.partial_power_sum(1, 200).unwrap();
        assert!(p[0] > partial1 && p[0] - partial1 < 1e-3);
        let partial2 = table.partial_power_sum(2, 200).unwrap();
        assert!(p[1] > partial2 && p[1] - partial2 < 1e-8);
        let partial3 = table.partial_power_sum(3, 200).unwrap();
        assert!(p[2] > partial3 && p[2] - partial3 < 1e-12);
    }

    #[test]
    fn product_reconstruction_with_rayleigh_tail() {
        // (x/2)^nu/Gamma(nu+1) prod_{n<=N} (1 - x^2/j_n^2), tail-corrected by
        // exp(-x^2 S2' - x^4 S4'/2) with S_k' from the exact power sums.
        let nu = 0.8;
        let o = ord(nu);
        let fam = ZeroFamily::bessel_j(o).unwrap();
        let n = 500;
        let table = ZeroTable::build(fam, n).unwrap();
        let p = fam.power_sums(2).unwrap();
        let j1 = table.zero(1).unwrap();
        for frac in [0.2, 0.6, 0.95] {
            let x = frac * j1;
            let mut prod = (x / 2.0_f64).powf(nu) / gamma_fn(nu + 1.0).unwrap();
            for &z in table.zeros() {
                prod *= 1.0 - (x / z) * (x / z);
            }
            let s2_tail = p[0] - table.partial_power_sum(1, n).unwrap();
            let s4_tail = p[1] - table.partial_power_sum(2, n).unwrap();
            let corrected = prod * (-x * x * s2_tail - 0.5 * x.powi(4) * s4_tail).exp();
            let (j, _) = bessel_pair(nu, x).unwrap();
            assert!(
                (corrected - j).abs() <= 1e-6,
                "product reconstruction off at x={x}: {corrected} vs {j}"
            );
        }
    }

    #[test]
    fn table_too_short_and_index_validation() {
        let fam = ZeroFamily::bessel_j(ord(0.0)).unwrap();
        let table = ZeroTable::build(fam, 3).unwrap();
        assert!(table.zero(4).is_err());
        assert!(table.zero(0).is_err());
        assert!(bessel_zero(ord(0.0), 0).is_err());
    }

    #[test]
    fn cache_returns_shared_table() {
        let fam = ZeroFamily::bessel_j(ord(2.2)).unwrap();
        let a = ZeroTable::build(fam, 5).unwrap();
        let b = ZeroTable::build(fam, 5).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }
}

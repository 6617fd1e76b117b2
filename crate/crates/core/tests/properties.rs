//! Property tests over random orders, arguments and disk samples.

use bessel_convexity::{
    bessel_j, bessel_j_poisson, convexity_quotient, lower_envelope, radius_convexity,
    MapKind, Order, RadiusResult, SeriesConfig,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn kinds() -> impl Strategy<Value = MapKind> {
    prop_oneof![
        Just(MapKind::F),
        Just(MapKind::G),
        Just(MapKind::H),
        Just(MapKind::Phi),
    ]
}

fn order_in_window(kind: MapKind) -> BoxedStrategy<f64> {
    match kind {
        MapKind::F => (0.1f64..6.0).boxed(),
        MapKind::G | MapKind::H => (-0.8f64..6.0).boxed(),
        MapKind::Phi => (-1.8f64..6.0).boxed(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Power series with real coefficients: Q(conj z) = conj Q(z).
    #[test]
    fn quotient_conjugation_symmetry(
        (kind, nu) in kinds().prop_flat_map(|k| (Just(k), order_in_window(k))),
        frac in 0.05f64..0.9,
        angle in 0.0f64..std::f64::consts::PI,
    ) {
        let nu = Order::new(nu).unwrap();
        let pole = kind.first_pole(nu).unwrap();
        let z = Complex64::from_polar(frac * pole, angle);
        let q = convexity_quotient(kind, nu, z).unwrap();
        let qc = convexity_quotient(kind, nu, z.conj()).unwrap();
        prop_assert!((q.conj() - qc).norm() <= 1e-10 * (1.0 + q.norm()));
    }

    /// Series and Poisson-integral evaluations agree on the oracle window.
    #[test]
    fn series_poisson_agreement(nu in -0.39f64..10.0, x in 0.01f64..10.0) {
        let o = Order::new(nu).unwrap();
        let series = bessel_j(o, Complex64::new(x, 0.0), &SeriesConfig::default())
            .unwrap()
            .re;
        let quad = bessel_j_poisson(o, x, 64).unwrap();
        prop_assert!((series - quad).abs() <= 1e-10);
    }

    /// lambda Re(z/(a-z)) - Re(z/(b-z)) >= lambda|z|/(a-|z|) - |z|/(b-|z|)
    /// for a > b > |z| > 0 and lambda in [0, 1].
    #[test]
    fn real_part_inequality(
        b in 0.2f64..5.0,
        extra in 1e-6f64..4.0,
        frac in 0.01f64..0.99,
        angle in 0.0f64..(2.0 * std::f64::consts::PI),
        lambda in 0.0f64..1.0,
    ) {
        let a = b + extra;
        let m = frac * b;
        let z = Complex64::from_polar(m, angle);
        let lhs = lambda * (z / (a - z)).re - (z / (b - z)).re;
        let rhs = lambda * m / (a - m) - m / (b - m);
        prop_assert!(lhs >= rhs - 1e-11);
    }

    /// The boundary of every scanned circle stays above the real-axis envelope.
    #[test]
    fn envelope_bounds_boundary_samples(
        (kind, nu) in kinds().prop_flat_map(|k| (Just(k), order_in_window(k))),
        frac in 0.05f64..0.95,
        angle in 0.0f64..(2.0 * std::f64::consts::PI),
    ) {
        let nu = Order::new(nu).unwrap();
        let pole = kind.first_pole(nu).unwrap();
        let r = frac * pole;
        let env = lower_envelope(kind, nu, r).unwrap();
        let q = convexity_quotient(kind, nu, Complex64::from_polar(r, angle)).unwrap();
        prop_assert!(q.re >= env - 1e-9 * (1.0 + env.abs()));
    }

    /// Interlacing of J and J' zeros at random positive orders.
    #[test]
    fn interlacing_random_orders(nu in 0.1f64..8.0) {
        let o = Order::new(nu).unwrap();
        let j1 = bessel_convexity::bessel_zero(o, 1).unwrap();
        let j2 = bessel_convexity::bessel_zero(o, 2).unwrap();
        let p1 = bessel_convexity::bessel_derivative_zero(o, 1).unwrap();
        let p2 = bessel_convexity::bessel_derivative_zero(o, 2).unwrap();
        prop_assert!(nu <= p1 && p1 < j1 && j1 < p2 && p2 < j2);
    }

    /// Dini first zeros stay below j_{nu,1} on the admissible window.
    #[test]
    fn dini_zero_below_first_bessel_zero(nu in -0.8f64..8.0, gamma in -0.5f64..3.0) {
        prop_assume!(gamma + nu > 1e-6);
        let o = Order::new(nu).unwrap();
        let d = bessel_convexity::dini_zero(gamma, o, 1).unwrap();
        let j1 = bessel_convexity::bessel_zero(o, 1).unwrap();
        prop_assert!(d < j1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// JSON serialization of solver results parses back bit-exactly.
    #[test]
    fn radius_result_json_round_trip(
        nu in 0.3f64..4.0,
        alpha in 0.0f64..0.9,
    ) {
        let result = radius_convexity(MapKind::G, Order::new(nu).unwrap(), alpha).unwrap();
        let json = serde_json::to_string(&result).unwrap();
        let back: RadiusResult = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.radius.to_bits(), result.radius.to_bits());
        prop_assert_eq!(back.residual.to_bits(), result.residual.to_bits());
        prop_assert_eq!(back.nu.to_bits(), result.nu.to_bits());
        prop_assert_eq!(back.bracket.0.to_bits(), result.bracket.0.to_bits());
        prop_assert_eq!(back.bracket.1.to_bits(), result.bracket.1.to_bits());
    }

    /// Radius of convexity is monotone decreasing in alpha.
    #[test]
    fn radius_monotone_in_alpha(
        (kind, nu) in kinds().prop_flat_map(|k| (Just(k), order_in_window(k))),
        alpha in 0.0f64..0.7,
    ) {
        let nu = Order::new(nu).unwrap();
        let lo = radius_convexity(kind, nu, alpha).unwrap().radius;
        let hi = radius_convexity(kind, nu, alpha + 0.2).unwrap().radius;
        prop_assert!(hi < lo);
    }
}

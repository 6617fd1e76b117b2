//! The independent geometric oracle: scan Re Q over circles, confirm the
//! minimum sits on the positive real axis, and certify sharpness of a
//! computed radius from both sides.
//!
//! ```sh
//! cargo run --example boundary_scan
//! ```

use bessel_convexity::{
    boundary_min_real, convexity_certificate, lower_envelope, radius_convexity, MapKind, Order,
};

fn main() -> bessel_convexity::Result<()> {
    let kind = MapKind::G;
    let nu = Order::new(1.0)?;

    println!("boundary scans for g_nu at nu = 1:");
    for r in [0.25, 0.5, 0.9, 1.0] {
        let scan = boundary_min_real(kind, nu, r, 720)?;
        let env = lower_envelope(kind, nu, r)?;
        println!(
            "  r = {r:<5} min Re Q = {:>12.8}  at angle {:>8.5}  envelope = {:>12.8}",
            scan.min_real, scan.argmin_angle, env
        );
    }

    println!();
    let alpha = 0.25;
    let result = radius_convexity(kind, nu, alpha)?;
    println!(
        "radius of convexity of order {alpha}: r = {:.12} (residual {:.1e})",
        result.radius, result.residual
    );
    for factor in [0.999, 1.001] {
        let cert = convexity_certificate(kind, nu, factor * result.radius, alpha)?;
        println!(
            "  certificate at {factor} r: convex = {:<5} margin = {:+.3e}",
            cert.convex, cert.margin
        );
    }
    Ok(())
}

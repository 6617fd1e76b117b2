//! Compute radii of convexity of order alpha for all four maps and certify
//! each one with the independent boundary scan.
//!
//! ```sh
//! cargo run --example radius_of_convexity
//! ```

use bessel_convexity::{
    convexity_certificate, radius_convexity, radius_starlikeness, MapKind, Order,
};

fn main() -> bessel_convexity::Result<()> {
    let cases = [
        (MapKind::F, 2.0, 0.0),
        (MapKind::F, 2.0, 0.5),
        (MapKind::G, 1.0, 0.0),
        (MapKind::G, 0.5, 0.25),
        (MapKind::H, 1.25, 0.75),
        (MapKind::Phi, -1.5623, 0.0),
    ];
    println!(
        "{:<5} {:>7} {:>6} {:>20} {:>11} {:>10}",
        "map", "nu", "alpha", "radius", "residual", "certified"
    );
    for (kind, nu, alpha) in cases {
        let order = Order::new(nu)?;
        let result = radius_convexity(kind, order, alpha)?;
        let cert = convexity_certificate(kind, order, 0.999 * result.radius, alpha)?;
        println!(
            "{:<5} {:>7} {:>6} {:>20.16} {:>11.2e} {:>10}",
            kind.name(),
            nu,
            alpha,
            result.radius,
            result.residual,
            cert.convex
        );
    }

    println!();
    println!("radii of starlikeness (f: j'_nu,1; g: alpha_nu,1):");
    for (kind, nu) in [(MapKind::F, 1.0), (MapKind::G, 0.0)] {
        let star = radius_starlikeness(kind, Order::new(nu)?)?;
        let conv = radius_convexity(kind, Order::new(nu)?, 0.0)?.radius;
        println!(
            "  {}_nu at nu = {nu}: r* = {star:.12}, r^c = {conv:.12} (r^c < r*)",
            kind.name()
        );
    }
    Ok(())
}

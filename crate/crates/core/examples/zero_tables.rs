//! Certified zero tables: interlacing, Dini bounds, and partial sums of
//! reciprocal zero powers converging to the closed-form Rayleigh sums.
//!
//! ```sh
//! cargo run --example zero_tables
//! ```

use bessel_convexity::{
    bessel_derivative_zero, bessel_zero, dini_zero, rayleigh_sum, Order, RayleighPower,
    ZeroFamily, ZeroTable,
};

fn main() -> bessel_convexity::Result<()> {
    println!("interlacing nu <= j'_1 < j_1 < j'_2 < j_2 and the Dini bounds:");
    println!(
        "{:>5} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}",
        "nu", "j'_1", "j_1", "j'_2", "j_2", "alpha_1", "beta_1"
    );
    for nu in [0.5, 1.0, 2.0, 4.0] {
        let o = Order::new(nu)?;
        println!(
            "{:>5} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {:>10.6}",
            nu,
            bessel_derivative_zero(o, 1)?,
            bessel_zero(o, 1)?,
            bessel_derivative_zero(o, 2)?,
            bessel_zero(o, 2)?,
            dini_zero(1.0 - nu, o, 1)?,
            dini_zero(2.0 - nu, o, 1)?,
        );
    }

    println!();
    println!("Rayleigh convergence at nu = 1: partial sums of 1/j^4 vs 1/192");
    let o = Order::new(1.0)?;
    let family = ZeroFamily::bessel_j(o)?;
    let table = ZeroTable::build(family, 200)?;
    let closed = rayleigh_sum(o, RayleighPower::Four)?;
    for n in [10, 50, 200] {
        let partial = table.partial_power_sum(2, n)?;
        println!(
            "  N = {n:<4} partial = {partial:.16}   gap = {:.3e}",
            closed - partial
        );
    }
    println!("  closed form      = {closed:.16}");

    println!();
    println!("exact power sums from Taylor coefficients (Newton identities):");
    let sums = family.power_sums(3)?;
    println!("  sum 1/j^2 = {:.16} (= 1/(4(nu+1)) = 0.125)", sums[0]);
    println!("  sum 1/j^4 = {:.16} (matches the closed form above)", sums[1]);
    println!("  sum 1/j^6 = {:.16}", sums[2]);
    Ok(())
}

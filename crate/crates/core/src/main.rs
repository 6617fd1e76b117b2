//! Command-line front end: radii, critical orders, the constant-reproduction
//! table, the conjecture probe, CSV grids and the verification suite.
//!
//! Exit codes: 0 all good, 1 solver failure or any FAIL, 2 usage/domain error.

use bessel_convexity::error::Error;
use bessel_convexity::maps::MapKind;
use bessel_convexity::report::{self, format_f64, ReportRow, RowStatus};
use bessel_convexity::{
    conjecture_disproof, convexity_certificate, critical_order, radius_convexity_with_terms,
    Order,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "bessel-convexity",
    version,
    about = "Radii of convexity/starlikeness of normalized Bessel maps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    F,
    G,
    H,
    Phi,
}

impl From<KindArg> for MapKind {
    fn from(k: KindArg) -> MapKind {
        match k {
            KindArg::F => MapKind::F,
            KindArg::G => MapKind::G,
            KindArg::H => MapKind::H,
            KindArg::Phi => MapKind::Phi,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct FormatArg {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Radius of convexity of order alpha for one map
    Radius {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        /// Expansion terms for the internal Newton polish
        #[arg(long, default_value_t = 200)]
        terms: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Critical order nu_alpha for one map
    Threshold {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Reproduce all named constants against the printed values
    Reproduce {
        /// Tolerance for 4-decimal constants (exact rationals stay at 1e-8)
        #[arg(long, default_value_t = report::FOUR_DECIMAL_TOL)]
        tol: f64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Probe the phi_nu convexity conjecture at an order
    Conjecture {
        #[arg(long, default_value_t = -1.6, allow_hyphen_values = true)]
        nu_probe: f64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Grid of radii over (nu, alpha), each row certified
    Table {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, allow_hyphen_values = true)]
        nu_min: f64,
        #[arg(long, allow_hyphen_values = true)]
        nu_max: f64,
        #[arg(long)]
        nu_step: f64,
        /// Comma-separated alpha values
        #[arg(long, default_value = "0,0.25,0.5", value_delimiter = ',')]
        alphas: Vec<f64>,
        /// Expansion terms for the internal Newton polish
        #[arg(long, default_value_t = 200)]
        terms: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run the full verification suite (one PASS/FAIL line per criterion)
    Verify {
        #[command(flatten)]
        format: FormatArg,
    },
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Domain { .. }
        | Error::OrderWindow { .. }
        | Error::InvalidConfig(_)
        | Error::GammaPole(_)
        | Error::ImaginaryDiniZeros { .. } => 2,
        _ => 1,
    }
}

fn print_rows_csv(rows: &[ReportRow]) {
    println!("quantity,computed,paper_value,abs_diff,status");
    for r in rows {
        println!(
            "{},{},{},{},{}",
            r.quantity,
            format_f64(r.computed),
            r.paper_value.map(format_f64).unwrap_or_default(),
            r.abs_diff.map(format_f64).unwrap_or_default(),
            match r.status {
                RowStatus::Pass => "PASS",
                RowStatus::Fail => "FAIL",
                RowStatus::NoRef => "NO_REF",
            }
        );
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Radius {
            kind,
            nu,
            alpha,
            terms,
            format,
        } => {
            let result = radius_convexity_with_terms(kind.into(), Order::new(nu)?, alpha, terms)?;
            match format.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&result).unwrap()),
                Format::Csv => {
                    println!("kind,nu,alpha,radius,bracket_lo,bracket_hi,residual,iterations");
                    println!(
                        "{},{},{},{},{},{},{},{}",
                        result.kind.name(),
                        format_f64(result.nu),
                        format_f64(result.alpha),
                        format_f64(result.radius),
                        format_f64(result.bracket.0),
                        format_f64(result.bracket.1),
                        format_f64(result.residual),
                        result.iterations
                    );
                }
                Format::Text => {
                    println!("radius of convexity of order {} for {}_nu, nu = {}", result.alpha, result.kind.name(), result.nu);
                    println!("  radius     = {}", format_f64(result.radius));
                    println!("  bracket    = [{}, {}]", format_f64(result.bracket.0), format_f64(result.bracket.1));
                    println!("  residual   = {:.3e}", result.residual);
                    println!("  iterations = {}", result.iterations);
                }
            }
            Ok(0)
        }
        Command::Threshold {
            kind,
            alpha,
            format,
        } => {
            let result = critical_order(kind.into(), alpha)?;
            match format.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&result).unwrap()),
                Format::Csv => {
                    println!("kind,alpha,nu_critical,equation_residual,window_lo,window_hi");
                    println!(
                        "{},{},{},{},{},{}",
                        result.kind.name(),
                        format_f64(result.alpha),
                        format_f64(result.nu_critical),
                        format_f64(result.equation_residual),
                        format_f64(result.search_window.0),
                        format_f64(result.search_window.1)
                    );
                }
                Format::Text => {
                    println!("critical order nu_alpha for {}_nu at alpha = {}", result.kind.name(), result.alpha);
                    println!("  nu_critical = {}", format_f64(result.nu_critical));
                    println!("  residual    = {:.3e}", result.equation_residual);
                    println!("  window      = ({:.4}, {:.4})", result.search_window.0, result.search_window.1);
                }
            }
            Ok(0)
        }
        Command::Reproduce { tol, format } => {
            let rows = report::reproduce(tol)?;
            match format.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&rows).unwrap()),
                Format::Csv => print_rows_csv(&rows),
                Format::Text => {
                    println!("{:<12} {:>22} {:>12} {:>11}  status", "quantity", "computed", "paper", "|diff|");
                    for r in &rows {
                        println!(
                            "{:<12} {:>22.16} {:>12} {:>11.3e}  {}",
                            r.quantity,
                            r.computed,
                            r.paper_value.map(|p| p.to_string()).unwrap_or_default(),
                            r.abs_diff.unwrap_or(f64::NAN),
                            match r.status {
                                RowStatus::Pass => "PASS",
                                RowStatus::Fail => "FAIL",
                                RowStatus::NoRef => "NO_REF",
                            }
                        );
                    }
                }
            }
            Ok(if rows.iter().any(|r| r.status == RowStatus::Fail) {
                1
            } else {
                0
            })
        }
        Command::Conjecture { nu_probe, format } => {
            let evidence = conjecture_disproof(nu_probe)?;
            match format.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&evidence).unwrap()),
                Format::Csv => {
                    println!("nu_probe,q_at_one,boundary_min,verdict");
                    println!(
                        "{},{},{},{}",
                        format_f64(evidence.nu_probe),
                        format_f64(evidence.q_at_one),
                        format_f64(evidence.boundary_min),
                        evidence.verdict
                    );
                }
                Format::Text => {
                    println!("conjecture probe at nu = {}", evidence.nu_probe);
                    println!("  Q_phi(1)     = {}", format_f64(evidence.q_at_one));
                    println!("  boundary min = {}", format_f64(evidence.boundary_min));
                    println!("  verdict      = {}", evidence.verdict);
                }
            }
            Ok(0)
        }
        Command::Table {
            kind,
            nu_min,
            nu_max,
            nu_step,
            alphas,
            terms,
            format,
        } => {
            if !nu_step.is_finite()
                || nu_step <= 0.0
                || alphas.iter().any(|a| !(0.0..1.0).contains(a))
            {
                return Err(Error::InvalidConfig("invalid table ranges"));
            }
            let kind: MapKind = kind.into();
            let header = "kind,nu,alpha,radius,residual,certified,status";
            let mut lines = Vec::new();
            let mut nu = nu_min;
            while nu <= nu_max + 1e-12 {
                for &alpha in &alphas {
                    let row = match Order::new(nu).and_then(|o| {
                        kind.validate_order(o)?;
                        let r = radius_convexity_with_terms(kind, o, alpha, terms)?;
                        let cert = convexity_certificate(kind, o, 0.999 * r.radius, alpha)?;
                        Ok((r, cert))
                    }) {
                        Ok((r, cert)) => format!(
                            "{},{},{},{},{},{},OK",
                            kind.name(),
                            format_f64(nu),
                            format_f64(alpha),
                            format_f64(r.radius),
                            format_f64(r.residual),
                            cert.convex
                        ),
                        Err(Error::OrderWindow { .. }) => format!(
                            "{},{},{},,,,DOMAIN_ERROR",
                            kind.name(),
                            format_f64(nu),
                            format_f64(alpha)
                        ),
                        Err(e) => return Err(e),
                    };
                    lines.push(row);
                }
                nu += nu_step;
            }
            match format.format {
                Format::Json => {
                    // keep JSON as an array of the same cells
                    let objs: Vec<serde_json::Value> = lines
                        .iter()
                        .map(|l| {
                            let f: Vec<&str> = l.split(',').collect();
                            serde_json::json!({
                                "kind": f[0],
                                "nu": f[1],
                                "alpha": f[2],
                                "radius": f[3],
                                "residual": f[4],
                                "certified": f[5],
                                "status": f[6],
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&objs).unwrap());
                }
                _ => {
                    println!("{header}");
                    for l in lines {
                        println!("{l}");
                    }
                }
            }
            Ok(0)
        }
        Command::Verify { format } => {
            let results = report::run_verification()?;
            match format.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&results).unwrap()),
                Format::Csv => {
                    println!("name,passed,seconds,detail");
                    for r in &results {
                        println!(
                            "{},{},{:.3},\"{}\"",
                            r.name, r.passed, r.seconds, r.detail
                        );
                    }
                }
                Format::Text => {
                    for r in &results {
                        println!("{}", r.line());
                    }
                }
            }
            Ok(if results.iter().all(|r| r.passed) { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}

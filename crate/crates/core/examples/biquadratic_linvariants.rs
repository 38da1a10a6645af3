// Usage: cargo run --example biquadratic_linvariants
//
// Builds the configuration K = Q(i), F = Q(sqrt 5), p = 29 and prints the slope, the
// anticyclotomic L-invariant by both routes, and the full report as JSON.

use padic_linv::fields::build_biquad;
use padic_linv::linvariants::{ell_minus, report, slope};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (dk, df, p) in [(-4i64, 5i64, 29u64), (-4, 2, 17), (-8, 5, 11)] {
        let config = build_biquad(dk, df, p, 20)?;
        let m = ell_minus(&config)?;
        println!("K = Q(sqrt {dk}), F = Q(sqrt {df}), K' = Q(sqrt {}), p = {p}", config.d_kprime);
        println!("  slope     {}", slope(&config)?);
        println!("  L_- (A)   {}", m.route_a);
        println!("  L_- (B)   {}", m.route_b);
        println!("  agreement {} digits", m.agreement);
    }

    let r = report(&build_biquad(-4, 5, 29, 12)?)?;
    println!("{}", serde_json::to_string_pretty(&r)?);
    Ok(())
}

// Usage: cargo run --example padic_arithmetic
//
// Logarithm, exponential, Teichmüller lifts and Hensel roots in Q_7, and the JSON form of a scalar.

use num_bigint::BigInt;
use num_rational::BigRational;
use padic_linv::padic::{hensel_root, iwasawa_log, padic_exp, teichmuller, Padic};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = 7;
    let prec = 12;

    let x = Padic::from_rational(p, &BigRational::new(15.into(), 2.into()), prec);
    let log_x = iwasawa_log(&x)?;
    println!("x          = {x}");
    println!("log x      = {log_x}");

    let omega = teichmuller(&x, prec)?;
    println!("omega(x)   = {omega}");
    println!("omega^6    = {}", omega.pow(6)?);
    println!("log omega  = {}", iwasawa_log(&omega)?);

    // exp inverts log on 1 + pZ_p
    let unit = x.div(&omega)?;
    println!("<x>        = {unit}");
    println!("exp log <x> agrees to {} digits", padic_exp(&log_x)?.agreement(&unit));

    // sqrt(2) in Z_7 from the residue root 3
    let coeffs = [BigInt::from(-2), BigInt::from(0), BigInt::from(1)];
    let root = hensel_root(p, &coeffs, &BigInt::from(3), prec)?;
    println!("sqrt 2     = {root}");
    println!("as JSON      {}", serde_json::to_string(&root)?);
    Ok(())
}

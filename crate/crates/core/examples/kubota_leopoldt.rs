// Usage: cargo run --example kubota_leopoldt
//
// The 5-adic L-function of the Gaussian character twisted by omega: interpolation at
// negative integers, the trivial zero at s = 0 and its derivative, and Leopoldt's formula.

use padic_linv::lfunctions::{interpolation_value, kl_derivative, leopoldt_at_one, DirichletCharacter, PadicLSeries};
use padic_linv::padic::Padic;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = 5;
    let prec = 16;
    let chi = DirichletCharacter::quadratic(-4)?.twist(p, 1);
    let series = PadicLSeries::new(chi, p, prec)?;
    println!("{chi} mod {p}, {} Bernoulli terms", series.truncation());

    for n in 1..=4usize {
        let s = Padic::from_i64(p, 1 - n as i64, 3 * prec);
        let value = series.eval(&s)?;
        let expected = interpolation_value(&chi, p, n, prec)?;
        println!("s = {:>2}: {value}   (Bernoulli side agrees to {} digits)", 1 - n as i64, value.agreement(&expected));
    }

    let zero = Padic::zero(p, 3 * prec as i64);
    let derivative = kl_derivative(&series, &zero, prec - 4)?;
    println!("L_p'(chi, 0) = {}", derivative.value);

    for (d, q) in [(5i64, 11u64), (8, 7)] {
        let eps = DirichletCharacter::quadratic(d)?;
        let leopoldt = leopoldt_at_one(&eps, q, prec)?;
        let direct = PadicLSeries::new(eps, q, prec)?.eval(&Padic::one(q, 3 * prec))?;
        println!("{eps} at s = 1, p = {q}: {leopoldt}   (series agrees to {} digits)", leopoldt.agreement(&direct));
    }
    Ok(())
}

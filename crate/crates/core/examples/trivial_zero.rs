// Usage: cargo run --example trivial_zero
//
// Derivatives at trivial zeros: the odd quadratic character times omega against the
// class number side, and the simple zero of the cyclotomic product for one configuration.

use padic_linv::fields::build_biquad;
use padic_linv::linvariants::{fg_check, simple_zero_check};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let prec = 20;
    for (d, p) in [(-4i64, 5u64), (-8, 17), (-20, 29), (-3, 7)] {
        let r = fg_check(d, p, prec)?;
        println!("D = {d}, p = {p}");
        println!("  L_p'(eps omega, 0)     {}", r.lhs);
        println!("  -L(eps) L(eps, 0)      {}", r.rhs);
        println!("  agreement              {} digits", r.agreement_digits);
    }

    let config = build_biquad(-4, 5, 29, 12)?;
    let z = simple_zero_check(&config)?;
    println!("cyclotomic product at s = 0: {}", z.value_at_zero);
    println!("derivative:                 {}", z.derivative);
    println!("order of vanishing:         {}", z.order);
    Ok(())
}

// Usage: cargo run --example theta_up_operator
//
// Theta series of the cubic class group character of Q(sqrt -23) and the genus character
// of Q(sqrt -5), and the non-semisimple action of U_p at a prime where psi(p) = psi(pbar).

use padic_linv::fields::QuadField;
use padic_linv::thetaforms::{class_characters, hecke_tl, theta_qexp, up_identity_check};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cubic = class_characters(&QuadField::new(-23)?)?[1].clone();
    let theta = theta_qexp(&cubic, 60)?;
    let head: Vec<String> = (1..=30).map(|n| theta.coeff(n).to_string()).collect();
    println!("disc -23, order {} character, level {}", cubic.character_order(), theta.level);
    println!("  a_1..a_30: {}", head.join(" "));
    let t2 = hecke_tl(&theta, 2)?;
    println!("  T_2 theta = a_2 theta through q^{}: {}", t2.len(), t2.sub(&theta.truncate(t2.len()).scale(theta.coeff(2))).is_zero());

    for (disc, p) in [(-23i64, 59u64), (-20, 29), (-20, 41)] {
        let psi = class_characters(&QuadField::new(disc)?)?[1].clone();
        let check = up_identity_check(&psi, p, 600)?;
        println!("disc {disc}, p = {p}: psi(p) = {}, identities through q^{}", check.psi_p, check.checked_up_to);
        println!("  U_p on (theta, f): [[{}, {}], [{}, {}]]", check.matrix[0][0], check.matrix[0][1], check.matrix[1][0], check.matrix[1][1]);
        println!("  nilpotency index {}, semisimple {}", check.nilpotency_index, check.semisimple);
    }
    Ok(())
}

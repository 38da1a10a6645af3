// Usage: cargo run --example unit_table
//
// Exports the unit table of a quadratic configuration as JSON, reads it back and
// evaluates the regulator, as `padic-linv linv general --units FILE` does.

use padic_linv::fields::build_biquad;
use padic_linv::linvariants::{ell_from_generator, ell_minus, general_regulator, quadratic_table, UnitTable};
use padic_linv::padic::Padic;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = build_biquad(-8, 5, 11, 16)?;
    let table = quadratic_table(&config)?;
    let json = serde_json::to_string_pretty(&table)?;
    println!("{json}");

    let parsed: UnitTable = serde_json::from_str(&json)?;
    let regulator = general_regulator(&parsed)?;
    let ell_k = ell_from_generator(&config.u_p, config.ord_u_p, &config.embed_k)?;
    let two = Padic::from_i64(config.p, 2, 40);
    println!("L(psi)        {regulator}");
    println!("L(psi) - 2L_p {}", regulator.sub(&ell_k.mul(&two)));
    println!("L_-           {}", ell_minus(&config)?.route_a);
    Ok(())
}

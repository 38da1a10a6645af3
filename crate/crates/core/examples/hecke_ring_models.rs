// Usage: cargo run --example hecke_ring_models
//
// Builds both ring models as iterated fiber products and prints their invariants.

use padic_linv::localalg::{check_iso_witness, model_report, ModelCase};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (case, r) in [(ModelCase::I, 2u32), (ModelCase::II, 3), (ModelCase::II, 4), (ModelCase::II, 5)] {
        let m = model_report(case, r, 1, 2 * r + 4)?;
        println!("case {case}, r = {r}, truncated at degree {}", m.truncation);
        println!("  generators  {}", m.generators.join(", "));
        println!("  relations   {}", m.relations.join(", "));
        println!("  dim {}, tangent dim {}, special fiber dim {}", m.dim, m.tangent_dim, m.special_fiber_dim);
        println!("  socle dim {} after the regular element, Gorenstein {}", m.gorenstein.socle_dim, m.gorenstein.is_gorenstein);
        println!("  congruence ideals X^{} and X^{}", m.congruence_psi.exponent, m.congruence_psi_tau.exponent);
    }
    for r in 2..=6 {
        println!("iso witness for r = {r}: {}", check_iso_witness(r, 2 * r + 4)?);
    }
    Ok(())
}

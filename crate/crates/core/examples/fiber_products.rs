// Usage: cargo run --example fiber_products
//
// Fiber products of truncated local algebras: two lines glued at a point, and two copies
// of k[[X]] glued along k[X]/X^2, with their socles and congruence ideals.

use std::sync::Arc;

use padic_linv::localalg::{congruence_ideal, fiber_product, gorenstein_check, AlgebraMorphism, LocalAlgebra};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let degree = 8;
    let line = Arc::new(LocalAlgebra::parse(&["X"], &[], degree)?);
    let point = Arc::new(LocalAlgebra::parse(&["X"], &["X"], degree)?);
    let to_point = AlgebraMorphism::parse(line.clone(), point, &["0"])?;
    let wedge = fiber_product(&to_point, &to_point)?;
    let names = wedge.algebra.names().to_vec();
    let relations: Vec<String> = wedge.algebra.relations().iter().map(|r| r.display(&names).to_string()).collect();
    println!("two lines: generators {}, relations {}", names.join(", "), relations.join(", "));
    println!("  congruence ideal of the first projection: X^{}", congruence_ideal(&wedge.proj_a)?.exponent);

    let dual = Arc::new(LocalAlgebra::parse(&["X"], &["X^2"], degree)?);
    let reduce = AlgebraMorphism::parse(line.clone(), dual, &["X"])?;
    let glued = fiber_product(&reduce, &reduce)?;
    let ring = &glued.algebra;
    let names = ring.names().to_vec();
    let relations: Vec<String> = ring.relations().iter().map(|r| r.display(&names).to_string()).collect();
    println!("glued along X^2: generators {}, relations {}", names.join(", "), relations.join(", "));
    println!("  dimension {} at truncation {}", ring.dim(), ring.degree());
    println!("  congruence ideal of the first projection: X^{}", congruence_ideal(&glued.proj_a)?.exponent);

    let x = glued.lift(&line.gen(0), &line.gen(0)).expect("X is compatible");
    let g = gorenstein_check(ring, &x)?;
    println!("  modulo the diagonal X: socle dim {}, Gorenstein {}", g.socle_dim, g.is_gorenstein);
    Ok(())
}

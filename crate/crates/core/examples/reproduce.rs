// Usage: cargo run --release --example reproduce
//
// Runs every acceptance criterion, including the randomized property suites, and prints the table.

use padic_linv::cli::{reproduce::run_all, table};

fn main() {
    let criteria = run_all(30, Some(2024));
    print!("{}", table(&criteria));
    let passed = criteria.iter().filter(|c| c.ok()).count();
    println!("{passed} of {} passed", criteria.len());
}

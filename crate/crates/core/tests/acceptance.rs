//! Acceptance run: one line per criterion, nonzero exit if any fails or overruns its budget.

use padic_linv::cli::reproduce::run_all;

const PREC: u32 = 30;
const SEED: u64 = 2024;

fn main() {
    let criteria = run_all(PREC, Some(SEED));
    let mut failed = 0;
    for c in &criteria {
        let status = if c.ok() { "pass" } else { "FAIL" };
        println!("{} {status} ({:.2}s) {}", c.id, c.seconds, c.title);
        if !c.ok() {
            failed += 1;
            if !c.within_budget {
                println!("    over the time budget");
            }
            for line in c.detail.iter().filter(|l| l.starts_with("FAIL")) {
                println!("    {line}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Runs registered theorem checks over the default family.
//!
//! With arguments, only the named theorems run: `verify_suite T-P21 T-T55`.

use std::time::Instant;

use csring::harness::{registry, run_check, Env, Family, FamilyConfig};

fn main() -> csring::Result<()> {
    let wanted: Vec<String> = std::env::args().skip(1).collect();
    let cfg = FamilyConfig::default();
    let t = Instant::now();
    let family = Family::new(&cfg)?;
    let env = Env::for_family(&family);
    eprintln!("family built in {:?}", t.elapsed());
    for check in registry() {
        if !wanted.is_empty() && !wanted.iter().any(|w| w.eq_ignore_ascii_case(check.id)) {
            continue;
        }
        let report = run_check(check, &family, &env)?;
        println!(
            "{:<14} instances {:>6}  agree {:>6}  skipped {:>4}  counterexamples {:>3}  {:>8} ms  {}",
            report.theorem_id,
            report.instances,
            report.agreements,
            report.skipped,
            report.counterexamples.len(),
            report.elapsed_ms.unwrap_or(0),
            report.status,
        );
        for c in report.counterexamples.iter().take(3) {
            println!("    {} {:?}", c.instance, c.clauses);
        }
    }
    Ok(())
}

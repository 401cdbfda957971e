//! One theorem check over a small family, then a replay of an instance.

use csring::harness::{explain, find_theorem, run_theorem, FamilyConfig};

fn main() -> csring::Result<()> {
    let cfg = FamilyConfig {
        max_ring_size: 16,
        max_module_size: 8,
        ..FamilyConfig::default()
    };
    let report = run_theorem("T-T55", &cfg)?.without_timing();
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    let check = find_theorem("T-T55")?;
    let instance = "trivext(zmod 2, dsum(cyclic(zmod 2, [0]), cyclic(zmod 2, [0])))";
    let v = explain("T-T55", instance, &cfg)?;
    for (name, b) in check.clauses.iter().zip(&v) {
        println!("{name:<32} {b}");
    }
    Ok(())
}

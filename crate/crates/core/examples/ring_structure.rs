//! Ideals, idempotents, radicals and the spectrum of Z/12.

use csring::{build_ring, Limits, RingDescriptor};

fn main() -> csring::Result<()> {
    let d: RingDescriptor = "zmod 12".parse()?;
    let r = build_ring(&d, &Limits::default())?;
    let lits = |i: &csring::Ideal| {
        let g: Vec<String> = i.generator_literals().iter().map(|l| l.to_string()).collect();
        format!("({})", g.join(", "))
    };
    println!("{d}: {} elements", r.size());
    for i in r.ideals() {
        println!("  ideal {:<6} size {}", lits(&i), i.len());
    }
    println!("  idempotents {:?}", r.idempotents());
    println!("  nilradical {}", lits(&r.nilradical()));
    println!("  socle {}", lits(&r.socle()));
    let spec = r.prime_spectrum()?;
    for m in &spec.maximal {
        println!("  maximal {}", lits(m));
    }
    println!("  peirce idempotents {:?}", r.peirce_decomposition().idempotents);
    Ok(())
}

//! Trivial extensions: CS test, idempotents, and the splitting when Ann(M) = eR.

use csring::deciders::{is_cs_ring, is_weakly_in, CsRingMethod};
use csring::{build_module, trivial_extension, Limits, ModuleDescriptor};

fn main() -> csring::Result<()> {
    let limits = Limits::default();
    for text in [
        "cyclic(zmod 2, [0])",
        "cyclic(zmod 6, [2])",
        "dsum(cyclic(zmod 2, [0]), cyclic(zmod 2, [0]))",
    ] {
        let m = build_module(&text.parse::<ModuleDescriptor>()?, &limits)?;
        let t = trivial_extension(&m, &limits)?;
        println!("{}", t.ring().pedigree());
        println!("  size {}", t.ring().size());
        println!("  cs ring {}", is_cs_ring(t.ring(), CsRingMethod::Annihilator)?.value);
        println!("  module weakly IN {}", is_weakly_in(&m)?.value);
        println!("  idempotents are pairs (e, 0): {}", t.idempotents_are_pairs());
        let ann = m.annihilator();
        if let Some(e) = t.base().idempotents().into_iter().find(|&e| {
            e != t.base().zero() && ann.contains(e) && ann.elements().iter().all(|&a| t.base().mul(e, a) == a)
        }) {
            println!("  Ann(M) = eR with e = {}; splitting valid: {}", t.base().label(e), t.splitting_iso(e)?.value);
        }
    }
    Ok(())
}

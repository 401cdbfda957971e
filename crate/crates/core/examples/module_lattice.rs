//! The submodule lattice of Z/2 + Z/4 over Z/4, with annihilators.

use csring::{build_module, Limits, ModuleDescriptor};

fn main() -> csring::Result<()> {
    let d: ModuleDescriptor = "dsum(cyclic(zmod 4, [2]), regular(zmod 4))".parse()?;
    let m = build_module(&d, &Limits::default())?;
    println!("{d}: {} elements", m.size());
    for n in m.all_submodules()? {
        let ann = m.annihilator_in_ring(&n.elements())?;
        let gens: Vec<String> = n.generator_literals().iter().map(|l| l.to_string()).collect();
        println!("  <{}> size {:>2}  annihilator size {}", gens.join(", "), n.len(), ann.len());
    }
    println!("faithful: {}", m.is_faithful());
    Ok(())
}

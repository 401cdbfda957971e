//! The two CS-ring deciders side by side on a few rings.

use csring::deciders::{is_cs_ring, CsRingMethod};
use csring::{build_ring, Limits, RingDescriptor};

fn main() -> csring::Result<()> {
    for text in [
        "zmod 12",
        "polyquot(2, [0, 0, 0, 1])",
        "product(zmod 4, polyquot(2, [0, 0, 1]))",
        "trivext(zmod 2, cyclic(zmod 2, [0]))",
        "trivext(zmod 2, dsum(cyclic(zmod 2, [0]), cyclic(zmod 2, [0])))",
    ] {
        let d: RingDescriptor = text.parse()?;
        let r = build_ring(&d, &Limits::default())?;
        let a = is_cs_ring(&r, CsRingMethod::Definitional)?;
        let b = is_cs_ring(&r, CsRingMethod::Annihilator)?;
        println!("{:<66} definitional {:<5} annihilator {}", d.to_string(), a.value, b.value);
    }
    Ok(())
}

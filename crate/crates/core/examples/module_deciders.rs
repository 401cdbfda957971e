//! CS, weakly IN, strongly CS and s.IN for a few modules, with witnesses.

use csring::deciders::{is_cs_module, is_sin, is_strongly_cs, is_weakly_in};
use csring::{build_module, Limits, ModuleDescriptor};

fn main() -> csring::Result<()> {
    let cases = [
        "regular(zmod 8)",
        "dsum(cyclic(zmod 6, [2]), cyclic(zmod 6, [3]))",
        "dsum(cyclic(zmod 4, [2]), regular(zmod 4))",
        "regular(trivext(zmod 2, dsum(cyclic(zmod 2, [0]), cyclic(zmod 2, [0]))))",
    ];
    for text in cases {
        let d: ModuleDescriptor = text.parse()?;
        let m = build_module(&d, &Limits::default())?;
        println!("{d}");
        for (name, v) in [
            ("cs", is_cs_module(&m)?),
            ("weakly_in", is_weakly_in(&m)?),
            ("strongly_cs", is_strongly_cs(&m)?),
            ("sin", is_sin(&m)?),
        ] {
            match &v.witness {
                Some(w) => println!("  {name:<12} {:<5} {w}", v.value),
                None => println!("  {name:<12} {}", v.value),
            }
        }
    }
    Ok(())
}

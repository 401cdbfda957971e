//! Size of the default instance family.

use csring::harness::{Family, FamilyConfig};

fn main() -> csring::Result<()> {
    let cfg = FamilyConfig::default();
    let t = std::time::Instant::now();
    let family = Family::new(&cfg)?;
    println!("rings: {}", family.rings().len());
    println!("modules: {}", family.module_count());
    println!("trivial extensions: {}", family.trivexts().len());
    println!("abelian groups: {}", family.groups().len());
    eprintln!("built in {:?}", t.elapsed());
    Ok(())
}

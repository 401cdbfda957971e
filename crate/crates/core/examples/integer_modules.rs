//! Finite abelian groups as modules over the integers.

use csring::zring::{
    all_abelian_groups, classify_dedekind, z_idempotent_lift, z_is_clean, z_is_strongly_cs, z_is_weakly_in, ZModule,
};
use csring::Limits;

fn main() -> csring::Result<()> {
    let limits = Limits::default();
    let g = ZModule::new(&[2, 3], &limits)?;
    println!("Z/2 + Z/3: weakly IN {}, strongly CS {}", z_is_weakly_in(&g)?.value, z_is_strongly_cs(&g)?.value);
    let lift = z_idempotent_lift(6)?;
    println!("idempotents lift mod 6: {} (witness {:?})", lift.value, lift.witness);
    println!("Z clean: {}", z_is_clean().value);
    println!();
    for orders in all_abelian_groups(16) {
        let g = ZModule::new(&orders, &limits)?;
        let class = classify_dedekind(&g)?;
        println!(
            "{:<12} weakly IN {:<5} strongly CS {:<5} prime-power cyclic {}",
            format!("{orders:?}"),
            z_is_weakly_in(&g)?.value,
            z_is_strongly_cs(&g)?.value,
            class.is_prime_power_cyclic()
        );
    }
    Ok(())
}

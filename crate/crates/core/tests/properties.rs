use std::sync::Arc;

use csring::deciders::{
    check_module, is_cs_module, is_cs_ring, is_sin, is_strongly_cs, is_uniform, is_weakly_in, idempotents_lift_mod,
    revalidate_module, CsRingMethod, ModuleProperty,
};
use csring::{
    build_module, build_ring, parse_descriptor, Descriptor, ElemLit, FiniteModule, FiniteRing, Limits,
    ModuleDescriptor, RingDescriptor,
};
use proptest::prelude::*;

fn lit() -> impl Strategy<Value = ElemLit> {
    let leaf = (0u64..20).prop_map(ElemLit::Int);
    leaf.prop_recursive(2, 6, 3, |inner| prop::collection::vec(inner, 1..3).prop_map(ElemLit::Tuple))
}

fn ring_desc() -> impl Strategy<Value = RingDescriptor> {
    let leaf = prop_oneof![
        (0u64..40).prop_map(RingDescriptor::ZmodN),
        ((2u64..6), prop::collection::vec(0u64..5, 1..4)).prop_map(|(p, coeffs)| RingDescriptor::PolyQuot { p, coeffs }),
    ];
    leaf.prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 1..3).prop_map(RingDescriptor::Product),
            (inner.clone(), prop::collection::vec(lit(), 0..3)).prop_map(|(b, g)| RingDescriptor::quotient(b, g)),
            (inner.clone(), inner).prop_map(|(b, r)| RingDescriptor::trivext(b.clone(), ModuleDescriptor::Regular(r))),
        ]
    })
}

fn module_desc() -> impl Strategy<Value = ModuleDescriptor> {
    let leaf = prop_oneof![
        ring_desc().prop_map(ModuleDescriptor::Regular),
        (ring_desc(), prop::collection::vec(lit(), 0..3)).prop_map(|(r, g)| ModuleDescriptor::cyclic(r, g)),
        prop::collection::vec(1u64..30, 0..4).prop_map(ModuleDescriptor::ZAbelian),
    ];
    leaf.prop_recursive(2, 8, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 1..3).prop_map(ModuleDescriptor::DirectSum),
            (inner.clone(), prop::collection::vec(lit(), 0..2)).prop_map(|(m, g)| ModuleDescriptor::sub(m, g)),
            (inner.clone(), prop::collection::vec(lit(), 0..2)).prop_map(|(m, g)| ModuleDescriptor::quotmod(m, g)),
            (inner.clone(), prop::collection::vec(lit(), 0..2)).prop_map(|(m, g)| ModuleDescriptor::overquot(m, g)),
            (inner.clone(), inner).prop_map(|(a, b)| ModuleDescriptor::ProductMod(Box::new(a), Box::new(b))),
        ]
    })
}

const BASES: [&str; 10] = [
    "zmod 4",
    "zmod 6",
    "zmod 8",
    "zmod 12",
    "polyquot(2, [0, 0, 1])",
    "polyquot(3, [0, 0, 1])",
    "product(zmod 2, zmod 2)",
    "product(zmod 2, zmod 4)",
    "trivext(zmod 2, dsum(regular(zmod 2), regular(zmod 2)))",
    "trivext(zmod 4, cyclic(zmod 4, [2]))",
];

fn limits() -> Limits {
    Limits {
        max_ring_size: 64,
        max_module_size: 64,
        max_submodule_count: 4096,
    }
}

fn base(i: usize) -> Arc<FiniteRing> {
    build_ring(&BASES[i].parse().expect("parses"), &limits()).expect("builds")
}

/// A module over a base ring: a cyclic, a sum of two cyclics, or a
/// submodule of the regular module, chosen by `shape`.
fn module(i: usize, shape: u8, x: usize, y: usize) -> Option<Arc<FiniteModule>> {
    let r = base(i);
    let rd = r.pedigree().clone();
    let l = |k: usize| r.label(k % r.size()).clone();
    let d = match shape % 4 {
        0 => ModuleDescriptor::cyclic(rd, vec![l(x)]),
        1 => ModuleDescriptor::DirectSum(vec![
            ModuleDescriptor::cyclic(rd.clone(), vec![l(x)]),
            ModuleDescriptor::cyclic(rd, vec![l(y)]),
        ]),
        2 => ModuleDescriptor::sub(ModuleDescriptor::Regular(rd), vec![l(x), l(y)]),
        _ => ModuleDescriptor::DirectSum(vec![
            ModuleDescriptor::Regular(rd.clone()),
            ModuleDescriptor::cyclic(rd, vec![l(x), l(y)]),
        ]),
    };
    let m = build_module(&d, &limits()).ok()?;
    (!m.is_zero()).then_some(m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ring_descriptors_round_trip(d in ring_desc()) {
        let text = d.to_string();
        prop_assert_eq!(parse_descriptor(&text).expect("reparses"), Descriptor::Ring(d));
    }

    #[test]
    fn module_descriptors_round_trip(d in module_desc()) {
        let text = d.to_string();
        prop_assert_eq!(parse_descriptor(&text).expect("reparses"), Descriptor::Module(d));
    }

    #[test]
    fn parser_never_panics(s in "[a-z(), \\[\\]0-9\n]{0,40}") {
        let _ = parse_descriptor(&s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn implication_chain(i in 0..BASES.len(), shape in any::<u8>(), x in 0usize..64, y in 0usize..64) {
        let Some(m) = module(i, shape, x, y) else { return Ok(()) };
        let sin = is_sin(&m).expect("decides").value;
        let win = is_weakly_in(&m).expect("decides").value;
        let scs = is_strongly_cs(&m).expect("decides").value;
        let cs = is_cs_module(&m).expect("decides").value;
        let uniform = is_uniform(&m).expect("decides").value;
        prop_assert!(!sin || win);
        prop_assert!(!scs || cs);
        prop_assert!(!scs || win);
        prop_assert!(!uniform || scs);
    }

    #[test]
    fn submodule_closure(i in 0..BASES.len(), shape in any::<u8>(), x in 0usize..64, y in 0usize..64) {
        let Some(m) = module(i, shape, x, y) else { return Ok(()) };
        let win = is_weakly_in(&m).expect("decides").value;
        let scs = is_strongly_cs(&m).expect("decides").value;
        for n in m.all_submodules().expect("lattice") {
            if n.is_zero() {
                continue;
            }
            let n = n.as_module().expect("submodule");
            prop_assert!(!win || is_weakly_in(&n).expect("decides").value);
            prop_assert!(!scs || is_strongly_cs(&n).expect("decides").value);
        }
    }

    #[test]
    fn strongly_cs_is_weakly_in_plus_lifting(i in 0..BASES.len(), shape in any::<u8>(), x in 0usize..64, y in 0usize..64) {
        let Some(m) = module(i, shape, x, y) else { return Ok(()) };
        let lift = idempotents_lift_mod(m.ring(), &m.annihilator()).expect("decides").value;
        prop_assert_eq!(
            is_strongly_cs(&m).expect("decides").value,
            is_weakly_in(&m).expect("decides").value && lift
        );
    }

    #[test]
    fn verdicts_revalidate(i in 0..BASES.len(), shape in any::<u8>(), x in 0usize..64, y in 0usize..64) {
        let Some(m) = module(i, shape, x, y) else { return Ok(()) };
        for p in ModuleProperty::ALL {
            let v = check_module(&m, p).expect("decides");
            // exhaustive searches that fail leave nothing to re-check
            if !v.value && v.witness.is_none() {
                continue;
            }
            prop_assert!(revalidate_module(&m, p, &v).expect("revalidates"), "{} {:?}", p, v);
        }
    }

    #[test]
    fn cs_ring_deciders_agree_on_quotients(i in 0..BASES.len(), x in 0usize..64) {
        let r = base(i);
        let q = r.quotient(&r.ideal_span(&[x % r.size()]).expect("span")).expect("quotient").ring;
        prop_assume!(!q.is_zero_ring());
        prop_assert_eq!(
            is_cs_ring(&q, CsRingMethod::Definitional).expect("decides").value,
            is_cs_ring(&q, CsRingMethod::Annihilator).expect("decides").value
        );
    }
}

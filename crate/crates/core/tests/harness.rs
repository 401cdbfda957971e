use std::collections::HashSet;

use csring::deciders::{is_cs_ring, CsRingMethod};
use csring::harness::{registry, replay, run_checks, run_suite, Env, Family, FamilyConfig, Instance};
use csring::{build_ring, Limits, RingDescriptor};

fn small() -> FamilyConfig {
    FamilyConfig {
        max_ring_size: 16,
        max_module_size: 8,
        ..FamilyConfig::default()
    }
}

fn reports_json(cfg: &FamilyConfig) -> String {
    let reports: Vec<_> = run_suite(cfg)
        .expect("family builds")
        .into_iter()
        .map(|r| r.expect("check runs").without_timing())
        .collect();
    serde_json::to_string(&reports).expect("serializes")
}

#[test]
fn identical_config_identical_reports() {
    assert_eq!(reports_json(&small()), reports_json(&small()));
}

#[test]
fn small_family_has_no_counterexamples() {
    let family = Family::new(&small()).expect("family builds");
    for r in run_checks(registry(), &family) {
        let r = r.expect("check runs");
        assert_eq!(r.agreements + r.counterexamples.len(), r.instances, "{}", r.theorem_id);
        if r.theorem_id != "T-SEARCH-R56" {
            assert!(r.counterexamples.is_empty(), "{}: {:?}", r.theorem_id, r.counterexamples);
        }
    }
}

#[test]
fn empty_family_gives_vacuous_reports() {
    let cfg = FamilyConfig {
        max_ring_size: 1,
        max_module_size: 1,
        ..FamilyConfig::default()
    };
    for r in run_suite(&cfg).expect("family builds") {
        let r = r.expect("check runs");
        assert_eq!((r.instances, r.skipped), (0, 0), "{}", r.theorem_id);
    }
}

fn pedigrees(cfg: &FamilyConfig) -> (Vec<String>, HashSet<String>, HashSet<String>) {
    let f = Family::new(cfg).expect("family builds");
    let rings = f.rings().iter().map(|r| r.pedigree().to_string()).collect();
    let modules = f.modules().map(|m| m.pedigree().to_string()).collect();
    let groups = f.groups().iter().map(|g| format!("{g:?}")).collect();
    (rings, modules, groups)
}

#[test]
fn enlarging_bounds_keeps_instances() {
    let narrow = FamilyConfig {
        max_ring_size: 8,
        max_module_size: 4,
        ..FamilyConfig::default()
    };
    let (r1, m1, g1) = pedigrees(&narrow);
    for wide in [
        FamilyConfig { max_ring_size: 16, ..narrow.clone() },
        FamilyConfig { max_module_size: 8, ..narrow.clone() },
        small(),
    ] {
        let (r2, m2, g2) = pedigrees(&wide);
        let r2: HashSet<String> = r2.into_iter().collect();
        for r in &r1 {
            assert!(r2.contains(r), "{r} lost at {wide:?}");
        }
        assert!(m1.is_subset(&m2));
        assert!(g1.is_subset(&g2));
    }
}

#[test]
fn every_instance_replays_from_its_descriptor() {
    let family = Family::new(&small()).expect("family builds");
    let env = Env::for_family(&family);
    let fresh = Env::new(family.config());
    for check in registry() {
        let instances = check.instances(&family, &env).expect("instances");
        for inst in instances.iter().step_by(7) {
            let text = inst.descriptor();
            let again = replay(check, &text, &fresh).unwrap_or_else(|e| panic!("{} {text}: {e}", check.id));
            assert_eq!(again.descriptor(), text);
            assert_eq!(
                check.evaluate(&env, inst).expect("evaluates"),
                check.evaluate(&fresh, &again).expect("evaluates"),
                "{} {text}",
                check.id
            );
        }
    }
}

#[test]
fn integers_replay() {
    let cfg = small();
    let env = Env::new(&cfg);
    let check = csring::harness::find_theorem("T-T37").expect("registered");
    let inst = replay(check, "zabelian([2, 3])", &env).expect("replays");
    assert!(matches!(inst, Instance::Integers));
    // every clause fails over the integers, so they agree
    assert_eq!(check.evaluate(&env, &inst).expect("evaluates"), vec![false; 6]);
}

/// The search hits, rechecked with both CS-ring deciders.
#[test]
fn search_hits_are_genuine() {
    let limits = Limits::default();
    let base = "trivext(zmod 2, dsum(regular(zmod 2), regular(zmod 2)))";
    let hit = format!(
        "trivext({base}, quotmod(dsum(cyclic({base}, [(0, (0, 1))]), cyclic({base}, [(0, (1, 0))])), [((0, (1, 0)), (0, (0, 1)))]))"
    );
    let a = build_ring(&hit.parse::<RingDescriptor>().expect("parses"), &limits).expect("builds");
    let r = build_ring(&base.parse::<RingDescriptor>().expect("parses"), &limits).expect("builds");
    assert_eq!((a.size(), r.size()), (64, 8));
    for method in [CsRingMethod::Definitional, CsRingMethod::Annihilator] {
        assert!(is_cs_ring(&a, method).expect("decides").value, "{method:?}");
        assert!(!is_cs_ring(&r, method).expect("decides").value, "{method:?}");
    }
}

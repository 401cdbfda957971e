//! Acceptance criteria 1-10, one PASS/FAIL line each.
//!
//! Runs the default family once for criteria 2-9 and a second, independent
//! time for criterion 10.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use csring::deciders::{is_clean, is_strongly_cs, is_weakly_in};
use csring::harness::{explain, registry, run_checks, run_suite, Family, FamilyConfig, TheoremReport};
use csring::verdict::Witness;
use csring::zring::{all_abelian_groups, z_idempotent_lift, z_is_strongly_cs, z_is_weakly_in, ZModule};
use csring::{build_module, build_ring, ElemSet, Limits, ModuleDescriptor, RingDescriptor};

const LIMIT_FIXED: Duration = Duration::from_secs(1);
const LIMIT_P21: Duration = Duration::from_secs(60);
const LIMIT_T27: Duration = Duration::from_secs(5 * 60);
const LIMIT_T55: Duration = Duration::from_secs(10 * 60);
const LIMIT_GROUPS: Duration = Duration::from_secs(60);
const MIN_RINGS: usize = 200;
/// Distinct ring tables in the default family, pinned after the first campaign.
const GOLDEN_RING_COUNT: usize = 406;
const MAX_SKIP_FRACTION: f64 = 0.10;
const MAX_GROUP_ORDER: u64 = 64;

struct Line {
    id: u32,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn report<'a>(reports: &'a [TheoremReport], id: &str) -> &'a TheoremReport {
    reports.iter().find(|r| r.theorem_id == id).expect("registered theorem")
}

fn elapsed(r: &TheoremReport) -> Duration {
    Duration::from_millis(r.elapsed_ms.unwrap_or(u64::MAX))
}

fn summary(r: &TheoremReport) -> String {
    format!(
        "{}: {} instances, {} counterexamples, {} skipped, {} ms",
        r.theorem_id,
        r.instances,
        r.counterexamples.len(),
        r.skipped,
        r.elapsed_ms.unwrap_or(0)
    )
}

fn criterion_1() -> (bool, String) {
    let start = Instant::now();
    let limits = Limits::default();
    let g = ZModule::new(&[2, 3], &limits).expect("Z/2 + Z/3");
    let win = z_is_weakly_in(&g).expect("decides").value;
    let scs = z_is_strongly_cs(&g).expect("decides").value;
    let z6 = build_ring(&RingDescriptor::ZmodN(6), &limits).expect("Z/6");
    let clean = is_clean(&z6).value;
    let lift = z_idempotent_lift(6).expect("decides");
    let t = start.elapsed();
    let pass = win
        && !scs
        && clean
        && !lift.value
        && lift.witness == Some(Witness::Integer(3))
        && t < LIMIT_FIXED;
    (
        pass,
        format!(
            "weakly_in={win} strongly_cs={scs} clean(Z/6)={clean} lift mod 6={} witness={:?} in {t:?}",
            lift.value, lift.witness
        ),
    )
}

/// Number of partitions of `n`, by the standard recurrence on the largest part.
fn partitions(n: u32) -> u64 {
    fn p(n: u32, max: u32) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).map(|k| p(n - k, k)).sum()
    }
    p(n, n)
}

/// Abelian groups of order at most `max`: the product of partition counts
/// of the prime exponents, summed over orders.
fn abelian_group_count(max: u64) -> usize {
    let mut total = 0u64;
    for n in 1..=max {
        let mut m = n;
        let mut count = 1;
        let mut p = 2;
        while m > 1 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            count *= partitions(e);
            p += 1;
        }
        total += count;
    }
    // order 1 is the zero group, excluded from the family
    (total - 1) as usize
}

fn criterion_5(reports: &[TheoremReport], cfg: &FamilyConfig) -> (bool, String) {
    let t31 = report(reports, "T-T31");
    let t34 = report(reports, "T-T34");
    let text = "dsum(cyclic(zmod 6, [2]), cyclic(zmod 6, [3]))";
    let d: ModuleDescriptor = text.parse().expect("parses");
    let m = build_module(&d, &Limits::default()).expect("Z/2 + Z/3 over Z/6");
    let scs = is_strongly_cs(&m).expect("decides").value;
    let win = is_weakly_in(&m).expect("decides").value;
    let r = m.ring();
    let idem = |e: usize| r.mul(e, e) == e;
    let (e, f) = (3, 4);
    let image = |s: usize| ElemSet::from_elems(m.size(), m.elements().map(|x| m.act(s, x)));
    // 3 fixes the Z/2 summand and kills Z/3; 4 does the opposite
    let first = ElemSet::from_elems(m.size(), (0..m.size()).filter(|&x| m.act(e, x) == x));
    let second = ElemSet::from_elems(m.size(), (0..m.size()).filter(|&x| m.act(f, x) == x));
    let split = idem(e)
        && idem(f)
        && r.add(e, f) == r.one()
        && r.mul(e, f) == r.zero()
        && image(e) == first
        && image(f) == second
        && first.len() == 2
        && second.len() == 3;
    let clauses = explain("T-T34", text, cfg).expect("replays");
    let pass = t31.counterexamples.is_empty()
        && t34.counterexamples.is_empty()
        && t31.instances > 0
        && scs
        && win
        && split
        && clauses.iter().all(|&b| b);
    (
        pass,
        format!(
            "{}; {}; Z/2+Z/3 over Z/6 strongly_cs={scs} split by {{3, 4}}={split} clauses={clauses:?}",
            summary(t31),
            summary(t34)
        ),
    )
}

fn criterion_6(reports: &[TheoremReport], cfg: &FamilyConfig) -> (bool, String) {
    let t55 = report(reports, "T-T55");
    let fixed = [
        ("trivext(zmod 2, cyclic(zmod 2, [0]))", true),
        ("trivext(zmod 6, cyclic(zmod 6, [2]))", true),
        ("trivext(zmod 2, dsum(cyclic(zmod 2, [0]), cyclic(zmod 2, [0])))", false),
    ];
    let mut ok = true;
    let mut notes = Vec::new();
    for (text, cs) in fixed {
        let v = explain("T-T55", text, cfg).expect("replays");
        ok &= v.iter().all(|&b| b == cs);
        notes.push(format!("{text} -> {v:?}"));
    }
    let pass = ok && t55.counterexamples.is_empty() && t55.instances > 0 && elapsed(t55) < LIMIT_T55;
    (pass, format!("{}; {}", summary(t55), notes.join("; ")))
}

fn main() -> ExitCode {
    let cfg = FamilyConfig::default();
    let mut lines = Vec::new();

    let (pass, detail) = criterion_1();
    lines.push(Line {
        id: 1,
        name: "fixed instances over Z and Z/6",
        pass,
        detail,
    });

    let start = Instant::now();
    let family = Family::new(&cfg).expect("default family builds");
    let build = start.elapsed();
    let reports: Vec<TheoremReport> = run_checks(registry(), &family)
        .into_iter()
        .map(|r| r.expect("theorem check runs"))
        .collect();

    let p21 = report(&reports, "T-P21");
    let rings = family.rings().len();
    lines.push(Line {
        id: 2,
        name: "T-P21 CS-ring deciders agree",
        pass: p21.counterexamples.is_empty()
            && p21.skipped == 0
            && rings >= MIN_RINGS
            && rings == GOLDEN_RING_COUNT
            && build + elapsed(p21) < LIMIT_P21,
        detail: format!("{rings} ring tables (golden {GOLDEN_RING_COUNT}), family built in {build:?}; {}", summary(p21)),
    });

    let t27 = report(&reports, "T-T27");
    lines.push(Line {
        id: 3,
        name: "T-T27 strongly CS iff weakly IN and lifting",
        pass: t27.counterexamples.is_empty() && t27.instances > 0 && elapsed(t27) < LIMIT_T27,
        detail: summary(t27),
    });

    let p26 = report(&reports, "T-P26");
    let fraction = p26.skipped as f64 / (p26.instances + p26.skipped).max(1) as f64;
    lines.push(Line {
        id: 4,
        name: "T-P26 five clauses agree",
        pass: p26.counterexamples.is_empty() && fraction < MAX_SKIP_FRACTION,
        detail: format!("{}; skipped fraction {fraction:.4}", summary(p26)),
    });

    let (pass, detail) = criterion_5(&reports, &cfg);
    lines.push(Line {
        id: 5,
        name: "T-T31/T-T34 direct-sum criteria",
        pass,
        detail,
    });

    let (pass, detail) = criterion_6(&reports, &cfg);
    lines.push(Line {
        id: 6,
        name: "T-T55 trivial extensions",
        pass,
        detail,
    });

    let t41 = report(&reports, "T-T41");
    let t43 = report(&reports, "T-T43");
    let groups = abelian_group_count(MAX_GROUP_ORDER);
    lines.push(Line {
        id: 7,
        name: "T-T41/T-T43 abelian groups up to order 64",
        pass: t41.counterexamples.is_empty()
            && t43.counterexamples.is_empty()
            && t41.instances == groups
            && t43.instances == groups
            && all_abelian_groups(MAX_GROUP_ORDER).len() == groups
            && elapsed(t41) + elapsed(t43) < LIMIT_GROUPS,
        detail: format!("{groups} groups by partition count; {}; {}", summary(t41), summary(t43)),
    });

    let chain = report(&reports, "T-CHAIN");
    let p24 = report(&reports, "T-P24");
    lines.push(Line {
        id: 8,
        name: "implication chain and submodule closure",
        pass: chain.counterexamples.is_empty()
            && p24.counterexamples.is_empty()
            && chain.skipped == 0
            && p24.skipped == 0,
        detail: format!("{}; {}", summary(chain), summary(p24)),
    });

    let ann = report(&reports, "T-ANN");
    lines.push(Line {
        id: 9,
        name: "annihilator formula in trivial extensions",
        pass: ann.counterexamples.is_empty() && ann.instances == family.trivexts().len(),
        detail: summary(ann),
    });

    let first: Vec<TheoremReport> = reports.iter().cloned().map(TheoremReport::without_timing).collect();
    let second: Vec<TheoremReport> = run_suite(&cfg)
        .expect("second run builds")
        .into_iter()
        .map(|r| r.expect("theorem check runs").without_timing())
        .collect();
    let a = serde_json::to_string_pretty(&first).expect("serializes");
    let b = serde_json::to_string_pretty(&second).expect("serializes");
    lines.push(Line {
        id: 10,
        name: "identical config gives identical reports",
        pass: a == b,
        detail: format!("{} bytes vs {} bytes", a.len(), b.len()),
    });

    let search = report(&reports, "T-SEARCH-R56");
    println!("note: {}: {}", search.theorem_id, search.status);
    for c in &search.counterexamples {
        println!("note:   {}", c.instance);
    }

    let mut failed = 0;
    for l in &lines {
        println!("[{}] {:>2} {}: {}", if l.pass { "PASS" } else { "FAIL" }, l.id, l.name, l.detail);
        failed += usize::from(!l.pass);
    }
    println!("{} of {} criteria passed", lines.len() - failed, lines.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! The registered theorem checks.

use std::sync::Arc;

use super::{Env, Family, Instance, InstanceKind, Relation, TheoremCheck};
use crate::deciders::{
    idempotent_separation, is_chain_ring, is_clean, is_cs_module, is_cs_ring, is_sin, is_strongly_cs,
    is_uniform, is_weakly_in, lifts_mod_set, over_annihilator_quotient, ring_class_flags,
    scalar_essential_cover, scalar_idempotent_endos, summands_are_idempotent_images,
    summands_are_scalar_images, is_quasi_continuous, CsRingMethod, ENDO_CAP,
};
use crate::descriptor::ModuleDescriptor;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice;
use crate::module::{direct_sum, over_quotient, product_mod, FiniteModule, Submodule};
use crate::ring::{FiniteRing, Ideal, Limits};
use crate::trivext::{trivial_extension, TrivialExtension};
use crate::zring::{
    all_abelian_groups, classify_dedekind, z_idempotent_lift, z_is_clean, z_is_strongly_cs, z_is_uniform,
    z_is_weakly_in, ZModule,
};

use super::family::cyclic_module;

/// Every registered check, in report order.
pub fn registry() -> &'static [TheoremCheck] {
    &REGISTRY
}

static REGISTRY: [TheoremCheck; 29] = [
    TheoremCheck {
        id: "T-P21",
        statement: "A ring is CS exactly when every ideal is essential in a summand eR, exactly when any two ideals meeting in zero have annihilators summing to the ring.",
        clauses: &["cs_ring_definitional", "cs_ring_annihilator", "regular_module_cs"],
        relation: Relation::Equivalent(&[&[0, 1, 2]]),
        kind: InstanceKind::Ring,
        search: false,
        instances: rings,
        evaluate: p21,
    },
    TheoremCheck {
        id: "T-R23",
        statement: "For the regular module, CS, weakly IN and strongly CS coincide.",
        clauses: &["regular_cs", "regular_weakly_in", "regular_strongly_cs"],
        relation: Relation::Equivalent(&[&[0, 1, 2]]),
        kind: InstanceKind::Ring,
        search: false,
        instances: rings,
        evaluate: r23,
    },
    TheoremCheck {
        id: "T-P24",
        statement: "Submodules of weakly IN modules are weakly IN, and submodules of strongly CS modules are strongly CS.",
        clauses: &["weakly_in", "all_submodules_weakly_in", "strongly_cs", "all_submodules_strongly_cs"],
        relation: Relation::Implies(&[(0, 1), (2, 3)]),
        kind: InstanceKind::Module,
        search: false,
        instances: modules,
        evaluate: p24,
    },
    TheoremCheck {
        id: "T-P25",
        statement: "A free module is weakly IN exactly when it has rank one over a CS ring.",
        clauses: &["free_weakly_in", "rank_one_over_cs_ring"],
        relation: Relation::Equivalent(&[&[0, 1]]),
        kind: InstanceKind::Module,
        search: false,
        instances: free_modules,
        evaluate: p25,
    },
    TheoremCheck {
        id: "T-P26",
        statement: "For a nonzero module, weakly IN over R, weakly IN over R/Ann(M), quasi-continuous with scalar idempotent endomorphisms, CS with summands of the form rM (r - r^2 in Ann(M)), every submodule essential in such an rM, and strongly CS over R/Ann(M) are equivalent.",
        clauses: &[
            "weakly_in",
            "weakly_in_over_quotient",
            "quasi_continuous_scalar_endos",
            "cs_scalar_summands",
            "scalar_essential_cover",
            "strongly_cs_over_quotient",
        ],
        relation: Relation::Equivalent(&[&[0, 1, 2, 3, 4, 5]]),
        kind: InstanceKind::Module,
        search: false,
        instances: modules,
        evaluate: p26,
    },
    TheoremCheck {
        id: "T-T27",
        statement: "A nonzero module is strongly CS exactly when zero-intersecting submodules are separated by an idempotent, exactly when it is weakly IN and idempotents lift modulo its annihilator, exactly when it is CS with every summand of the form eM.",
        clauses: &[
            "strongly_cs",
            "weakly_in_and_lifting",
            "idempotent_separation",
            "cs_idempotent_summands",
        ],
        relation: Relation::Equivalent(&[&[0, 1, 2, 3]]),
        kind: InstanceKind::Module,
        search: false,
        instances: small_ring_modules,
        evaluate: t27,
    },
    TheoremCheck {
        id: "T-C29",
        statement: "If the annihilator of a nonzero module is nil, a ring summand, or the socle, the module is weakly IN exactly when it is strongly CS.",
        clauses: &["ann_nil", "ann_summand", "ann_socle", "weakly_in", "strongly_cs"],
        relation: Relation::Custom(c29, "when any of the first three clauses holds, the last two agree"),
        kind: InstanceKind::Module,
        search: false,
        instances: modules,
        evaluate: c29_eval,
    },
    TheoremCheck {
        id: "T-T211",
        statement: "Every cyclic module is weakly IN exactly when every proper quotient ring R/I is a CS ring.",
        clauses: &["cyclics_weakly_in", "quotients_cs_rings"],
        relation: Relation::Equivalent(&[&[0, 1]]),
        kind: InstanceKind::Ring,
        search: false,
        instances: rings,
        evaluate: t211,
    },
    TheoremCheck {
        id: "T-T212",
        statement: "Every cyclic module is strongly CS exactly when the ring is clean with all cyclics weakly IN, exactly when the ring is a finite product of chain rings.",
        clauses: &["cyclics_strongly_cs", "clean_and_cyclics_weakly_in", "peirce_factors_chain"],
        relation: Relation::Equivalent(&[&[0, 1, 2]]),
        kind: InstanceKind::Ring,
        search: false,
        instances: rings,
        evaluate: t212,
    },
    TheoremCheck {
        id: "T-T31",
        statement: "A direct sum of two modules is weakly IN exactly when both summands are weakly IN and their annihilators are comaximal.",
        clauses: &["sum_weakly_in", "summands_weakly_in_comaximal"],
        relation: Relation::Equivalent(&[&[0, 1]]),
        kind: InstanceKind::Pair,
        search: false,
        instances: cyclic_pairs,
        evaluate: t31,
    },
    TheoremCheck {
        id: "T-L33",
        statement: "Over a product ring, M1 x M2 is strongly CS exactly when each factor is, and R1 x R2 is a CS ring exactly when both factors are.",
        clauses: &["product_strongly_cs", "factors_strongly_cs", "product_ring_cs", "factor_rings_cs"],
        relation: Relation::Equivalent(&[&[0, 1], &[2, 3]]),
        kind: InstanceKind::Product,
        search: false,
        instances: product_pairs,
        evaluate: l33,
    },
    TheoremCheck {
        id: "T-T34",
        statement: "A direct sum M1 + M2 is strongly CS exactly when both summands are strongly CS and an idempotent e fixes M1 while 1 - e fixes M2, exactly when the ring splits as eR x (1-e)R with each summand strongly CS over its factor.",
        clauses: &["sum_strongly_cs", "summands_strongly_cs_separated", "split_ring_strongly_cs"],
        relation: Relation::Equivalent(&[&[0, 1, 2]]),
        kind: InstanceKind::Pair,
        search: false,
        instances: cyclic_pairs,
        evaluate: t34,
    },
    TheoremCheck {
        id: "T-C35",
        statement: "For primes p and q, R/p + R/q is weakly IN exactly when p + q = R; it is strongly CS exactly when an idempotent lies in p with its complement in q, exactly when p + q = R and idempotents lift modulo the intersection.",
        clauses: &[
            "sum_weakly_in",
            "comaximal",
            "sum_strongly_cs",
            "separating_idempotent",
            "comaximal_and_lifting",
        ],
        relation: Relation::Equivalent(&[&[0, 1], &[2, 3, 4]]),
        kind: InstanceKind::Pair,
        search: false,
        instances: prime_pairs,
        evaluate: c35,
    },
    TheoremCheck {
        id: "T-T37",
        statement: "A ring is clean exactly when every weakly IN module is strongly CS, exactly when R/m + R/m' is strongly CS for distinct maximal ideals, exactly when idempotents lift modulo m and m' jointly, modulo every ideal, or separate m from m'.",
        clauses: &[
            "weakly_in_modules_strongly_cs",
            "maximal_pairs_strongly_cs",
            "lift_mod_maximal_pairs",
            "lift_mod_every_ideal",
            "maximal_pairs_separated",
            "clean",
        ],
        relation: Relation::Equivalent(&[&[0, 1, 2, 3, 4, 5]]),
        kind: InstanceKind::Ring,
        search: false,
        instances: rings_and_integers,
        evaluate: t37,
    },
    TheoremCheck {
        id: "T-P38",
        statement: "R/p + R/p' is weakly IN for all distinct primes exactly when it is strongly CS for all of them, exactly when the ring is zero-dimensional.",
        clauses: &["prime_pairs_weakly_in", "prime_pairs_strongly_cs", "zero_dimensional"],
        relation: Relation::Equivalent(&[&[0, 1, 2]]),
        kind: InstanceKind::Ring,
        search: false,
        instances: rings,
        evaluate: p38,
    },
    TheoremCheck {
        id: "T-P39",
        statement: "R/p + R/p' is weakly IN for all distinct minimal primes exactly when such primes are pairwise comaximal, exactly when the ring is an mp-ring.",
        clauses: &["minimal_pairs_weakly_in", "minimal_pairs_comaximal", "mp"],
        relation: Relation::Equivalent(&[&[0, 1, 2]]),
        kind: InstanceKind::Ring,
        search: false,
        instances: rings,
        evaluate: p39,
    },
    TheoremCheck {
        id: "T-T310",
        statement: "R/p + R/p' is strongly CS for all distinct minimal primes exactly when the ring is mp with idempotents lifting modulo each such intersection, exactly when the ring is purified.",
        clauses: &["minimal_pairs_strongly_cs", "mp_and_lifting", "purified"],
        relation: Relation::Equivalent(&[&[0, 1, 2]]),
        kind: InstanceKind::Ring,
        search: false,
        instances: rings,
        evaluate: t310,
    },
    TheoremCheck {
        id: "T-T41",
        statement: "A finite abelian group is strongly CS over the integers exactly when it is uniform, exactly when it is cyclic of prime-power order.",
        clauses: &["strongly_cs", "uniform", "prime_power_cyclic", "weakly_in_and_lifting"],
        relation: Relation::Equivalent(&[&[0, 1, 2, 3]]),
        kind: InstanceKind::Group,
        search: false,
        instances: groups,
        evaluate: t41,
    },
    TheoremCheck {
        id: "T-T43",
        statement: "A finite abelian group is weakly IN over the integers exactly when it is a direct sum of cyclic groups of pairwise coprime prime-power orders.",
        clauses: &["weakly_in", "coprime_primary_sum", "carrier_weakly_in", "carrier_strongly_cs"],
        relation: Relation::Equivalent(&[&[0, 1, 2, 3]]),
        kind: InstanceKind::Group,
        search: false,
        instances: groups,
        evaluate: t43,
    },
    TheoremCheck {
        id: "T-L51",
        statement: "If the trivial extension of R by M is a CS ring, then M is weakly IN.",
        clauses: &["extension_cs", "module_weakly_in"],
        relation: Relation::Implies(&[(0, 1)]),
        kind: InstanceKind::Trivext,
        search: false,
        instances: trivexts,
        evaluate: l51,
    },
    TheoremCheck {
        id: "T-L52",
        statement: "For a faithful module M, the trivial extension is a CS ring exactly when M is weakly IN, exactly when M is strongly CS.",
        clauses: &["extension_cs", "module_weakly_in", "module_strongly_cs"],
        relation: Relation::Equivalent(&[&[0, 1, 2]]),
        kind: InstanceKind::Trivext,
        search: false,
        instances: faithful_trivexts,
        evaluate: l52,
    },
    TheoremCheck {
        id: "T-L53",
        statement: "When Ann(M) = eR, the trivial extension splits as eR x ((1-e)R extended by (1-e)M); and eR is strongly CS as an R-module exactly when it is a CS ring.",
        clauses: &["splitting_iso", "corner_strongly_cs_module", "corner_cs_ring"],
        relation: Relation::Custom(l53, "the splitting is valid and the last two clauses agree"),
        kind: InstanceKind::Trivext,
        search: false,
        instances: split_trivexts,
        evaluate: l53_eval,
    },
    TheoremCheck {
        id: "T-T55",
        statement: "The trivial extension of R by M is a CS ring exactly when Ann(M) is a ring summand that is a CS ring and M is weakly IN (equivalently strongly CS), exactly when M + Ann(M) is weakly IN, exactly when M + Ann(M) is strongly CS.",
        clauses: &[
            "extension_cs",
            "ann_cs_summand_and_weakly_in",
            "ann_cs_summand_and_strongly_cs",
            "sum_with_ann_weakly_in",
            "sum_with_ann_strongly_cs",
        ],
        relation: Relation::Equivalent(&[&[0, 1, 2, 3, 4]]),
        kind: InstanceKind::Trivext,
        search: false,
        instances: trivexts,
        evaluate: t55,
    },
    TheoremCheck {
        id: "T-C57",
        statement: "For a projective module M, the trivial extension is a CS ring exactly when R and M are weakly IN and Ann(M) is a ring summand, exactly when R and M are strongly CS and Ann(M) is a ring summand.",
        clauses: &["module_projective", "extension_cs", "weakly_in_and_summand", "strongly_cs_and_summand"],
        relation: Relation::Custom(c57, "the module is projective and the last three clauses agree"),
        kind: InstanceKind::Trivext,
        search: false,
        instances: projective_trivexts,
        evaluate: c57_eval,
    },
    TheoremCheck {
        id: "T-C59",
        statement: "For a faithful ideal H of a finite ring, every non-zero-divisor is a unit, and the trivial extension by H is a CS ring exactly when R is.",
        clauses: &["total_quotient_is_self", "extension_cs", "ring_cs"],
        relation: Relation::Custom(c59, "the first clause holds and the last two agree"),
        kind: InstanceKind::Trivext,
        search: false,
        instances: faithful_ideal_trivexts,
        evaluate: c59_eval,
    },
    TheoremCheck {
        id: "T-SEARCH-R56",
        statement: "Search for a trivial extension that is a CS ring over a base ring that is not.",
        clauses: &["extension_cs", "base_cs"],
        relation: Relation::Custom(search_r56, "a hit is an extension that is CS over a base that is not"),
        kind: InstanceKind::Trivext,
        search: true,
        instances: trivexts,
        evaluate: search_eval,
    },
    TheoremCheck {
        id: "T-CHAIN",
        statement: "s.IN implies weakly IN; strongly CS implies CS and weakly IN; uniform implies strongly CS.",
        clauses: &["sin", "weakly_in", "strongly_cs", "cs", "uniform"],
        relation: Relation::Implies(&[(0, 1), (2, 3), (4, 2), (2, 1)]),
        kind: InstanceKind::Module,
        search: false,
        instances: modules,
        evaluate: chain,
    },
    TheoremCheck {
        id: "T-ANN",
        statement: "In a trivial extension, the annihilator of the ideal (I, N) is (Ann(I) meet Ann(N), Ann_M(I)) whenever IM lies in N.",
        clauses: &["formula_holds_for_all_pairs"],
        relation: Relation::AllTrue,
        kind: InstanceKind::Trivext,
        search: false,
        instances: trivexts,
        evaluate: ann_formula,
    },
    TheoremCheck {
        id: "T-R23-UNIFORM",
        statement: "A uniform module is strongly CS; over an indecomposable ring, or for an indecomposable module, the converse holds.",
        clauses: &["uniform", "strongly_cs", "ring_or_module_indecomposable"],
        relation: Relation::Custom(uniform_rule, "uniform implies strongly CS, with equality when the third clause holds"),
        kind: InstanceKind::Module,
        search: false,
        instances: modules,
        evaluate: uniform_eval,
    },
];

fn c29(v: &[bool]) -> bool {
    !(v[0] || v[1] || v[2]) || v[3] == v[4]
}

fn l53(v: &[bool]) -> bool {
    v[0] && v[1] == v[2]
}

fn c57(v: &[bool]) -> bool {
    v[0] && v[1] == v[2] && v[2] == v[3]
}

fn c59(v: &[bool]) -> bool {
    v[0] && v[1] == v[2]
}

fn search_r56(v: &[bool]) -> bool {
    !(v[0] && !v[1])
}

fn uniform_rule(v: &[bool]) -> bool {
    (!v[0] || v[1]) && (!v[2] || v[0] == v[1])
}

// ---- instance sources ----

fn rings(f: &Family, _: &Env) -> Result<Vec<Instance>> {
    Ok(f.rings()
        .iter()
        .filter(|r| !r.is_zero_ring())
        .map(|r| Instance::Ring(Arc::clone(r)))
        .collect())
}

fn rings_and_integers(f: &Family, env: &Env) -> Result<Vec<Instance>> {
    let mut out = rings(f, env)?;
    if f.config().max_ring_size >= 6 {
        out.push(Instance::Integers);
    }
    Ok(out)
}

fn modules(f: &Family, _: &Env) -> Result<Vec<Instance>> {
    Ok(f.modules().map(|m| Instance::Module(Arc::clone(m))).collect())
}

fn small_ring_modules(f: &Family, _: &Env) -> Result<Vec<Instance>> {
    Ok(f.modules()
        .filter(|m| m.ring().size() <= 16)
        .map(|m| Instance::Module(Arc::clone(m)))
        .collect())
}

fn free_modules(f: &Family, env: &Env) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for r in f.rings().iter().filter(|r| !r.is_zero_ring()) {
        let reg = env.regular(r)?;
        out.push(Instance::Module(Arc::clone(&reg)));
        let mut parts = vec![Arc::clone(&reg)];
        for _ in 2..=4 {
            parts.push(Arc::clone(&reg));
            let size = parts.iter().try_fold(1usize, |acc, m| acc.checked_mul(m.size()));
            if !size.is_some_and(|s| s <= f.config().max_module_size) {
                break;
            }
            out.push(Instance::Module(direct_sum(&parts, env.limits())?));
        }
    }
    Ok(out)
}

fn is_cyclic_pedigree(m: &FiniteModule) -> bool {
    matches!(m.pedigree(), ModuleDescriptor::Regular(_) | ModuleDescriptor::Cyclic { .. })
}

/// Pairs of nonzero cyclic family modules over the same ring whose sum is in bound.
fn cyclic_pairs(f: &Family, _: &Env) -> Result<Vec<Instance>> {
    let bound = f.config().max_module_size;
    let mut out = Vec::new();
    for i in 0..f.rings().len() {
        let cyc: Vec<&Arc<FiniteModule>> = f.modules_of(i).iter().filter(|m| is_cyclic_pedigree(m)).collect();
        for (a, x) in cyc.iter().enumerate() {
            for y in &cyc[a..] {
                if x.size() * y.size() <= bound {
                    out.push(Instance::Pair(Arc::clone(x), Arc::clone(y)));
                }
            }
        }
    }
    Ok(out)
}

/// Cyclic modules over two family rings whose product ring and module are in bound.
fn product_pairs(f: &Family, _: &Env) -> Result<Vec<Instance>> {
    let cfg = f.config();
    let mut out = Vec::new();
    let rings = f.rings();
    for i in 0..rings.len() {
        for j in i..rings.len() {
            if rings[i].is_zero_ring()
                || rings[j].is_zero_ring()
                || rings[i].size() * rings[j].size() > cfg.max_ring_size
            {
                continue;
            }
            for a in f.modules_of(i).iter().filter(|m| is_cyclic_pedigree(m)) {
                for b in f.modules_of(j).iter().filter(|m| is_cyclic_pedigree(m)) {
                    if a.size() * b.size() <= cfg.max_module_size {
                        out.push(Instance::Product(Arc::clone(a), Arc::clone(b)));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `R/p` and `R/q` for primes `p`, `q` in spectrum order, `p` first, with the
/// sum no larger than the ring bound.
fn prime_pairs(f: &Family, env: &Env) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for r in f.rings().iter().filter(|r| !r.is_zero_ring()) {
        let primes = r.prime_spectrum()?.primes;
        let quotients: Vec<Arc<FiniteModule>> = primes
            .iter()
            .map(|p| cyclic_module(r, p.set(), env.limits()))
            .collect::<Result<_>>()?;
        for (i, a) in quotients.iter().enumerate() {
            // distinct primes give |R/p||R/q| <= |R|; this only trims p = q
            for b in quotients[i..].iter().filter(|b| a.size() * b.size() <= f.config().max_ring_size) {
                out.push(Instance::Pair(Arc::clone(a), Arc::clone(b)));
            }
        }
    }
    Ok(out)
}

fn groups(f: &Family, _: &Env) -> Result<Vec<Instance>> {
    let limits = group_limits(f.config().max_ring_size, f.config().max_submodule_count);
    f.groups()
        .iter()
        .map(|g| Ok(Instance::Group(Arc::new(ZModule::new(g, &limits)?))))
        .collect()
}

fn group_limits(max_order: usize, cap: usize) -> Limits {
    Limits {
        max_ring_size: max_order,
        max_module_size: max_order,
        max_submodule_count: cap,
    }
}

fn trivexts(f: &Family, _: &Env) -> Result<Vec<Instance>> {
    Ok(f.trivexts().iter().map(|t| Instance::Trivext(Arc::clone(t))).collect())
}

fn faithful_trivexts(f: &Family, _: &Env) -> Result<Vec<Instance>> {
    Ok(f.trivexts()
        .iter()
        .filter(|t| t.module().is_faithful())
        .map(|t| Instance::Trivext(Arc::clone(t)))
        .collect())
}

fn split_trivexts(f: &Family, _: &Env) -> Result<Vec<Instance>> {
    Ok(f.trivexts()
        .iter()
        .filter(|t| summand_idempotent(t.base(), t.module().annihilator().set()).is_some_and(|e| e != t.base().zero()))
        .map(|t| Instance::Trivext(Arc::clone(t)))
        .collect())
}

/// Trivial extensions by `eR` and `eR ⊕ fR` for nonzero idempotents `e`, `f`.
fn projective_trivexts(f: &Family, env: &Env) -> Result<Vec<Instance>> {
    let max = f.config().max_ring_size;
    let mut out = Vec::new();
    for r in f.rings().iter().filter(|r| !r.is_zero_ring()) {
        let mut corners: Vec<ElemSet> = Vec::new();
        for e in r.idempotents().into_iter().filter(|&e| e != r.zero()) {
            let s = principal(r, e);
            if !corners.contains(&s) {
                corners.push(s);
            }
        }
        let pieces: Vec<Arc<FiniteModule>> = corners
            .iter()
            .filter(|s| r.size() * s.len() <= max)
            .map(|s| ideal_module(env, r, s))
            .collect::<Result<_>>()?;
        for (i, a) in pieces.iter().enumerate() {
            out.push(extension(a, env)?);
            for b in &pieces[i..] {
                if r.size() * a.size() * b.size() <= max {
                    let m = direct_sum(&[Arc::clone(a), Arc::clone(b)], env.limits())?;
                    out.push(extension(&m, env)?);
                }
            }
        }
    }
    Ok(out)
}

/// Trivial extensions by faithful ideals.
fn faithful_ideal_trivexts(f: &Family, env: &Env) -> Result<Vec<Instance>> {
    let max = f.config().max_ring_size;
    let mut out = Vec::new();
    for r in f.rings().iter().filter(|r| !r.is_zero_ring()) {
        for h in r.ideal_sets() {
            if r.size() * h.len() <= max && r.annihilator_set(&h.to_vec()).len() == 1 {
                out.push(extension(&ideal_module(env, r, h)?, env)?);
            }
        }
    }
    Ok(out)
}

fn extension(m: &Arc<FiniteModule>, env: &Env) -> Result<Instance> {
    Ok(Instance::Trivext(Arc::new(trivial_extension(m, env.limits())?)))
}

// ---- shared clause helpers ----

fn mismatch(inst: &Instance) -> Error {
    Error::MalformedDescriptor(format!("instance `{}` has the wrong kind", inst.descriptor()))
}

fn as_ring(inst: &Instance) -> Result<&Arc<FiniteRing>> {
    match inst {
        Instance::Ring(r) => Ok(r),
        _ => Err(mismatch(inst)),
    }
}

fn as_module(inst: &Instance) -> Result<&Arc<FiniteModule>> {
    match inst {
        Instance::Module(m) => Ok(m),
        _ => Err(mismatch(inst)),
    }
}

fn as_pair(inst: &Instance) -> Result<(&Arc<FiniteModule>, &Arc<FiniteModule>)> {
    match inst {
        Instance::Pair(a, b) => Ok((a, b)),
        _ => Err(mismatch(inst)),
    }
}

fn as_trivext(inst: &Instance) -> Result<&Arc<TrivialExtension>> {
    match inst {
        Instance::Trivext(t) => Ok(t),
        _ => Err(mismatch(inst)),
    }
}

fn as_group(inst: &Instance) -> Result<&Arc<ZModule>> {
    match inst {
        Instance::Group(g) => Ok(g),
        _ => Err(mismatch(inst)),
    }
}

/// CS for rings, with the zero ring counted as CS.
fn cs_ring(r: &Arc<FiniteRing>) -> Result<bool> {
    if r.is_zero_ring() {
        return Ok(true);
    }
    Ok(is_cs_ring(r, CsRingMethod::Annihilator)?.value)
}

fn principal(r: &FiniteRing, x: usize) -> ElemSet {
    ElemSet::from_elems(r.size(), r.elements().map(|y| r.mul(x, y)))
}

/// The idempotent generating the ideal `s`, if `s` is a ring summand.
fn summand_idempotent(r: &FiniteRing, s: &ElemSet) -> Option<usize> {
    r.idempotents().into_iter().find(|&e| s.contains(e) && principal(r, e) == *s)
}

/// The ideal `s` as an R-module, a submodule of the regular module.
fn ideal_module(env: &Env, r: &Arc<FiniteRing>, s: &ElemSet) -> Result<Arc<FiniteModule>> {
    Submodule::from_set(&env.regular(r)?, s.clone()).as_module()
}

/// `eR` is a CS ring; `eR` for `e = 0` is the zero ring.
fn corner_cs(r: &Arc<FiniteRing>, e: usize) -> Result<bool> {
    if e == r.zero() {
        return Ok(true);
    }
    cs_ring(&r.corner(e)?.ring)
}

fn sum(env: &Env, a: &Arc<FiniteModule>, b: &Arc<FiniteModule>) -> Result<Arc<FiniteModule>> {
    direct_sum(&[Arc::clone(a), Arc::clone(b)], env.limits())
}

fn win(m: &FiniteModule) -> Result<bool> {
    Ok(is_weakly_in(m)?.value)
}

fn scs(m: &FiniteModule) -> Result<bool> {
    Ok(is_strongly_cs(m)?.value)
}

fn all(items: impl IntoIterator<Item = Result<bool>>) -> Result<bool> {
    let mut acc = true;
    for b in items {
        acc &= b?;
    }
    Ok(acc)
}

fn ann(m: &FiniteModule) -> ElemSet {
    m.annihilator().set().clone()
}

fn comaximal(r: &FiniteRing, p: &ElemSet, q: &ElemSet) -> bool {
    r.ideal_set_sum(p, q).len() == r.size()
}

/// An idempotent `e ∈ p` with `1 - e ∈ q`.
fn separating(r: &FiniteRing, p: &ElemSet, q: &ElemSet) -> Option<usize> {
    r.idempotents()
        .into_iter()
        .find(|&e| p.contains(e) && q.contains(r.sub(r.one(), e)))
}

/// `R/p ⊕ R/q` for the given ideals.
fn quotient_sum(env: &Env, r: &Arc<FiniteRing>, p: &ElemSet, q: &ElemSet) -> Result<Arc<FiniteModule>> {
    let a = cyclic_module(r, p, env.limits())?;
    let b = cyclic_module(r, q, env.limits())?;
    sum(env, &a, &b)
}

fn distinct_pairs(ideals: &[Ideal]) -> Vec<(&ElemSet, &ElemSet)> {
    let mut out = Vec::new();
    for (i, p) in ideals.iter().enumerate() {
        for q in &ideals[i + 1..] {
            out.push((p.set(), q.set()));
        }
    }
    out
}

// ---- clause evaluations ----

fn p21(env: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let r = as_ring(inst)?;
    Ok(vec![
        is_cs_ring(r, CsRingMethod::Definitional)?.value,
        is_cs_ring(r, CsRingMethod::Annihilator)?.value,
        is_cs_module(&*env.regular(r)?)?.value,
    ])
}

fn r23(env: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let reg = env.regular(as_ring(inst)?)?;
    Ok(vec![is_cs_module(&reg)?.value, win(&reg)?, scs(&reg)?])
}

fn proper_submodules(m: &Arc<FiniteModule>) -> Result<Vec<Arc<FiniteModule>>> {
    m.all_submodules()?
        .into_iter()
        .filter(|n| !n.is_zero() && n.len() < m.size())
        .map(|n| n.as_module())
        .collect()
}

fn p24(_: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let m = as_module(inst)?;
    let subs = proper_submodules(m)?;
    Ok(vec![
        win(m)?,
        all(subs.iter().map(|n| win(n)))?,
        scs(m)?,
        all(subs.iter().map(|n| scs(n)))?,
    ])
}

fn p25(_: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let m = as_module(inst)?;
    let rank = match m.pedigree() {
        ModuleDescriptor::DirectSum(parts) => parts.len(),
        _ => 1,
    };
    Ok(vec![win(m)?, rank == 1 && cs_ring(m.ring())?])
}

fn p26(_: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let m = as_module(inst)?;
    let over = over_annihilator_quotient(m)?;
    let qc = is_quasi_continuous(m)?.value;
    let endos = scalar_idempotent_endos(m, ENDO_CAP)?.value;
    let cs = is_cs_module(m)?.value;
    Ok(vec![
        win(m)?,
        win(&over)?,
        qc && endos,
        cs && summands_are_scalar_images(m)?.value,
        scalar_essential_cover(m)?.value,
        scs(&over)?,
    ])
}

fn t27(_: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let m = as_module(inst)?;
    let lifts = lifts_mod_set(m.ring(), &ann(m)).value;
    let cs = is_cs_module(m)?.value;
    Ok(vec![
        scs(m)?,
        win(m)? && lifts,
        idempotent_separation(m)?.value,
        cs && summands_are_idempotent_images(m)?.value,
    ])
}

fn c29_eval(_: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let m = as_module(inst)?;
    let r = m.ring();
    let a = ann(m);
    Ok(vec![
        a.is_subset(r.nilradical().set()),
        summand_idempotent(r, &a).is_some(),
        a == *r.socle().set(),
        win(m)?,
        scs(m)?,
    ])
}

fn proper_quotient_rings_cs(r: &Arc<FiniteRing>) -> Result<bool> {
    all(r.ideals().into_iter().filter(|i| i.is_proper()).map(|i| cs_ring(&r.quotient(&i)?.ring)))
}

fn t211(env: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let r = as_ring(inst)?;
    let cyc = env.cyclics(r)?;
    Ok(vec![all(cyc.iter().map(|m| win(m)))?, proper_quotient_rings_cs(r)?])
}

fn t212(env: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let r = as_ring(inst)?;
    let cyc = env.cyclics(r)?;
    let chain = all(
        r.peirce_decomposition()
            .idempotents
            .iter()
            .map(|&e| Ok(is_chain_ring(&r.corner(e)?.ring)?.value)),
    )?;
    Ok(vec![
        all(cyc.iter().map(|m| scs(m)))?,
        is_clean(r).value && all(cyc.iter().map(|m| win(m)))?,
        chain,
    ])
}

fn t31(env: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let (a, b) = as_pair(inst)?;
    let s = sum(env, a, b)?;
    Ok(vec![win(&s)?, win(a)? && win(b)? && comaximal(a.ring(), &ann(a), &ann(b))])
}

fn l33(env: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let Instance::Product(a, b) = inst else {
        return Err(mismatch(inst));
    };
    let p = product_mod(a, b, env.limits())?;
    Ok(vec![
        scs(&p)?,
        scs(a)? && scs(b)?,
        cs_ring(p.ring())?,
        cs_ring(a.ring())? && cs_ring(b.ring())?,
    ])
}

/// `m` over `R/I` for the ideal `I` generated by `x`.
fn over_principal(env: &Env, m: &Arc<FiniteModule>, x: usize) -> Result<Arc<FiniteModule>> {
    let r = m.ring();
    let ideal = lattice::span(&**r, [x]);
    let pedigree = ModuleDescriptor::overquot(m.pedigree().clone(), vec![r.label(x).clone()]);
    over_quotient(m, &ideal, pedigree, env.limits())
}

fn t34(env: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let (a, b) = as_pair(inst)?;
    let r = a.ring();
    let s = sum(env, a, b)?;
    let (ann_a, ann_b) = (ann(a), ann(b));
    // e acts as 1 on M1 and 0 on M2
    let seps: Vec<usize> = r
        .idempotents()
        .into_iter()
        .filter(|&e| ann_a.contains(r.sub(r.one(), e)) && ann_b.contains(e))
        .collect();
    let mut split = false;
    for &e in &seps {
        let f = r.sub(r.one(), e);
        if scs(&*over_principal(env, a, f)?)? && scs(&*over_principal(env, b, e)?)? {
            split = true;
            break;
        }
    }
    Ok(vec![scs(&s)?, scs(a)? && scs(b)? && !seps.is_empty(), split])
}

fn c35(env: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let (a, b) = as_pair(inst)?;
    let r = a.ring();
    let s = sum(env, a, b)?;
    let (p, q) = (ann(a), ann(b));
    let co = comaximal(r, &p, &q);
    Ok(vec![
        win(&s)?,
        co,
        scs(&s)?,
        separating(r, &p, &q).is_some(),
        co && lifts_mod_set(r, &p.intersection(&q)).value,
    ])
}

fn t37(env: &Env, inst: &Instance) -> Result<Vec<bool>> {
    if let Instance::Integers = inst {
        return t37_integers(env);
    }
    let r = as_ring(inst)?;
    let maximal = r.maximal_ideals();
    let pairs = distinct_pairs(&maximal);
    let family = env.family_modules(r)?;
    let c1 = all(family.iter().map(|m| Ok(!win(m)? || scs(m)?)))?;
    let c2 = all(pairs.iter().map(|(p, q)| scs(&*quotient_sum(env, r, p, q)?)))?;
    let c3 = pairs.iter().all(|(p, q)| lifts_mod_set(r, &p.intersection(q)).value);
    let c4 = r
        .ideal_sets()
        .iter()
        .filter(|i| i.len() < r.size())
        .all(|i| lifts_mod_set(r, i).value);
    let c5 = pairs.iter().all(|(p, q)| separating(r, p, q).is_some());
    Ok(vec![c1, c2, c3, c4, c5, is_clean(r).value])
}

/// The clauses over the integers: groups for modules, primes for maximal
/// ideals, with prime pairs limited to `pq` within the ring bound.
fn t37_integers(env: &Env) -> Result<Vec<bool>> {
    let max = env.config().max_ring_size as u64;
    let limits = group_limits(env.config().max_ring_size, env.config().max_submodule_count);
    let mut c1 = true;
    for g in all_abelian_groups(max) {
        let g = ZModule::new(&g, &limits)?;
        c1 &= !z_is_weakly_in(&g)?.value || z_is_strongly_cs(&g)?.value;
    }
    let primes: Vec<u64> = (2..=max)
        .filter(|&n| crate::zring::factorize(n) == [(n, 1)])
        .collect();
    let mut c2 = true;
    let mut c3 = true;
    let mut c5 = true;
    for (i, &p) in primes.iter().enumerate() {
        for &q in primes[i + 1..].iter().filter(|&&q| p * q <= max) {
            let g = ZModule::new(&[p, q], env.limits())?;
            c2 &= z_is_strongly_cs(&g)?.value;
            c3 &= z_idempotent_lift(p * q)?.value;
            // the only idempotents of Z are 0 and 1
            c5 &= [0u64, 1].iter().any(|&e| e % p == 0 && (1 - e) % q == 0);
        }
    }
    let mut c4 = true;
    for n in 2..=max {
        c4 &= z_idempotent_lift(n)?.value;
    }
    Ok(vec![c1, c2, c3, c4, c5, z_is_clean().value])
}

fn prime_pair_modules(
    env: &Env,
    r: &Arc<FiniteRing>,
    primes: &[Ideal],
) -> Result<Vec<Arc<FiniteModule>>> {
    distinct_pairs(primes)
        .into_iter()
        .map(|(p, q)| quotient_sum(env, r, p, q))
        .collect()
}

fn p38(env: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let r = as_ring(inst)?;
    let spec = r.prime_spectrum()?;
    let sums = prime_pair_modules(env, r, &spec.primes)?;
    Ok(vec![
        all(sums.iter().map(|m| win(m)))?,
        all(sums.iter().map(|m| scs(m)))?,
        ring_class_flags(r)?.zero_dimensional,
    ])
}

fn p39(env: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let r = as_ring(inst)?;
    let spec = r.prime_spectrum()?;
    let sums = prime_pair_modules(env, r, &spec.minimal)?;
    Ok(vec![
        all(sums.iter().map(|m| win(m)))?,
        distinct_pairs(&spec.minimal).iter().all(|(p, q)| comaximal(r, p, q)),
        ring_class_flags(r)?.mp,
    ])
}

fn t310(env: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let r = as_ring(inst)?;
    let spec = r.prime_spectrum()?;
    let sums = prime_pair_modules(env, r, &spec.minimal)?;
    let flags = ring_class_flags(r)?;
    let lifting = distinct_pairs(&spec.minimal)
        .iter()
        .all(|(p, q)| lifts_mod_set(r, &p.intersection(q)).value);
    Ok(vec![all(sums.iter().map(|m| scs(m)))?, flags.mp && lifting, flags.purified])
}

fn t41(_: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let g = as_group(inst)?;
    Ok(vec![
        z_is_strongly_cs(g)?.value,
        z_is_uniform(g)?.value,
        classify_dedekind(g)?.is_prime_power_cyclic(),
        z_is_weakly_in(g)?.value && z_idempotent_lift(g.exponent())?.value,
    ])
}

fn t43(_: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let g = as_group(inst)?;
    Ok(vec![
        z_is_weakly_in(g)?.value,
        classify_dedekind(g)?.is_coprime_primary_sum(),
        win(g.carrier())?,
        scs(g.carrier())?,
    ])
}

fn l51(_: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let t = as_trivext(inst)?;
    Ok(vec![cs_ring(t.ring())?, win(t.module())?])
}

fn l52(_: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let t = as_trivext(inst)?;
    Ok(vec![cs_ring(t.ring())?, win(t.module())?, scs(t.module())?])
}

fn l53_eval(env: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let t = as_trivext(inst)?;
    let r = t.base();
    let a = ann(t.module());
    let e = summand_idempotent(r, &a).ok_or_else(|| mismatch(inst))?;
    Ok(vec![
        t.splitting_iso(e)?.value,
        scs(&*ideal_module(env, r, &a)?)?,
        corner_cs(r, e)?,
    ])
}

fn t55(env: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let t = as_trivext(inst)?;
    let (r, m) = (t.base(), t.module());
    let a = ann(m);
    let summand = match summand_idempotent(r, &a) {
        Some(e) => corner_cs(r, e)?,
        None => false,
    };
    let with_ann = sum(env, m, &ideal_module(env, r, &a)?)?;
    Ok(vec![
        cs_ring(t.ring())?,
        summand && win(m)?,
        summand && scs(m)?,
        win(&with_ann)?,
        scs(&with_ann)?,
    ])
}

fn c57_eval(env: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let t = as_trivext(inst)?;
    let (r, m) = (t.base(), t.module());
    let summand = summand_idempotent(r, &ann(m)).is_some();
    let reg = env.regular(r)?;
    Ok(vec![
        m.is_projective()?.value,
        cs_ring(t.ring())?,
        win(&reg)? && win(m)? && summand,
        scs(&reg)? && scs(m)? && summand,
    ])
}

fn c59_eval(_: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let t = as_trivext(inst)?;
    let r = t.base();
    Ok(vec![r.total_quotient_is_self().value, cs_ring(t.ring())?, cs_ring(r)?])
}

fn search_eval(_: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let t = as_trivext(inst)?;
    Ok(vec![cs_ring(t.ring())?, cs_ring(t.base())?])
}

fn chain(_: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let m = as_module(inst)?;
    Ok(vec![
        is_sin(m)?.value,
        win(m)?,
        scs(m)?,
        is_cs_module(m)?.value,
        is_uniform(m)?.value,
    ])
}

fn ann_formula(_: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let t = as_trivext(inst)?;
    let (r, m) = (t.base(), t.module());
    let subs = m.all_submodules()?;
    let mut ok = true;
    for i in r.ideals() {
        let im = lattice::span(&**m, i.elements().into_iter().flat_map(|a| m.elements().map(move |x| (a, x))).map(|(a, x)| m.act(a, x)));
        for n in subs.iter().filter(|n| im.is_subset(n.set())) {
            ok &= t.ann_pair_formula_check(&i, n)?.value;
        }
    }
    Ok(vec![ok])
}

/// The ring has no idempotents besides 0 and 1.
fn indecomposable_ring(r: &FiniteRing) -> bool {
    r.idempotents().len() <= 2
}

fn uniform_eval(_: &Env, inst: &Instance) -> Result<Vec<bool>> {
    let m = as_module(inst)?;
    let indecomposable = indecomposable_ring(m.ring()) || m.summands()?.len() <= 2;
    Ok(vec![is_uniform(m)?.value, scs(m)?, indecomposable])
}

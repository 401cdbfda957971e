//! Module-class and ring-class predicates.
//!
//! Every decider returns a [`Verdict`] tagged with the method that produced
//! it. Witnesses are the least failing object in canonical order.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice;
use crate::module::{over_quotient, regular, FiniteModule, ModuleHom};
use crate::ring::{FiniteRing, Ideal, Limits};
use crate::verdict::{Method, Verdict, Witness};

/// Endomorphism search attempts allowed by default.
pub const ENDO_CAP: usize = 1_000_000;

// memo slots on modules
const CS: usize = 0;
const WEAKLY_IN: usize = 1;
const STRONGLY_CS: usize = 2;
const SIN: usize = 3;
const QC: usize = 4;
const UNIFORM: usize = 5;
// memo slots on rings
const RING_CS_DEF: usize = 0;
const RING_CS_ANN: usize = 1;

fn pair(n: &ElemSet, l: &ElemSet) -> Witness {
    Witness::SubmodulePair(n.to_vec(), l.to_vec())
}

/// Every submodule is essential in a direct summand.
pub fn is_cs_module(m: &FiniteModule) -> Result<Verdict> {
    m.require_nonzero()?;
    m.memoized(CS, || {
        let a = m.analysis()?;
        for n in &a.subs {
            let covered = a
                .subs
                .iter()
                .zip(&a.summand)
                .any(|(d, &s)| s && n.is_subset(d) && m.essential_in(&a, n, d).is_none());
            if !covered {
                return Ok(Verdict::with(false, Witness::Submodule(n.to_vec()), Method::Definitional));
            }
        }
        Ok(Verdict::yes(Method::Definitional))
    })
}

/// `Ann(N) + Ann(L) = R` whenever `N ∩ L = 0`.
pub fn is_weakly_in(m: &FiniteModule) -> Result<Verdict> {
    m.require_nonzero()?;
    m.memoized(WEAKLY_IN, || {
        let a = m.analysis()?;
        let r = m.ring();
        for (i, n) in a.subs.iter().enumerate().skip(1) {
            for (j, l) in a.subs.iter().enumerate().skip(i + 1) {
                if n.intersection_len(l) == 1 && !r.comaximal(&a.anns[i], &a.anns[j]) {
                    return Ok(Verdict::with(false, pair(n, l), Method::Annihilator));
                }
            }
        }
        Ok(Verdict::yes(Method::Annihilator))
    })
}

/// Distinct submodules `eM` over the idempotents `e`, with the least such `e`.
fn idempotent_images(m: &FiniteModule) -> Vec<(usize, ElemSet)> {
    let mut out: Vec<(usize, ElemSet)> = Vec::new();
    for e in m.ring().idempotents() {
        let s = m.scaled(e);
        if !out.iter().any(|(_, t)| *t == s) {
            out.push((e, s));
        }
    }
    out
}

/// Every submodule is essential in `eM` for some idempotent `e`.
pub fn is_strongly_cs(m: &FiniteModule) -> Result<Verdict> {
    m.require_nonzero()?;
    m.memoized(STRONGLY_CS, || {
        let a = m.analysis()?;
        let images = idempotent_images(m);
        for n in &a.subs {
            let covered = images
                .iter()
                .any(|(_, em)| n.is_subset(em) && m.essential_in(&a, n, em).is_none());
            if !covered {
                return Ok(Verdict::with(false, Witness::Submodule(n.to_vec()), Method::Idempotent));
            }
        }
        Ok(Verdict::yes(Method::Idempotent))
    })
}

/// `Ann(N ∩ L) = Ann(N) + Ann(L)` for all pairs. Since the right side is
/// always contained in the left, equality is a cardinality comparison.
pub fn is_sin(m: &FiniteModule) -> Result<Verdict> {
    m.require_nonzero()?;
    m.memoized(SIN, || {
        let a = m.analysis()?;
        for (i, n) in a.subs.iter().enumerate() {
            for (j, l) in a.subs.iter().enumerate().skip(i + 1) {
                let meet = a.index[&n.intersection(l)];
                let (x, y) = (&a.anns[i], &a.anns[j]);
                if a.anns[meet].len() * x.intersection_len(y) != x.len() * y.len() {
                    return Ok(Verdict::with(false, pair(n, l), Method::Annihilator));
                }
            }
        }
        Ok(Verdict::yes(Method::Annihilator))
    })
}

/// CS, and `M1 ⊕ M2` is a summand for summands with `M1 ∩ M2 = 0`.
pub fn is_quasi_continuous(m: &FiniteModule) -> Result<Verdict> {
    m.require_nonzero()?;
    m.memoized(QC, || {
        let cs = is_cs_module(m)?;
        if !cs.value {
            return Ok(cs);
        }
        let a = m.analysis()?;
        let summands: Vec<&ElemSet> = a
            .subs
            .iter()
            .zip(&a.summand)
            .filter(|(_, &s)| s)
            .map(|(n, _)| n)
            .collect();
        for (i, n) in summands.iter().enumerate() {
            for l in &summands[i + 1..] {
                if n.intersection_len(l) == 1 && !a.summand[a.index[&lattice::sum(m, n, l)]] {
                    return Ok(Verdict::with(false, pair(n, l), Method::Definitional));
                }
            }
        }
        Ok(Verdict::yes(Method::Definitional))
    })
}

/// Any two nonzero submodules meet nontrivially.
pub fn is_uniform(m: &FiniteModule) -> Result<Verdict> {
    m.memoized(UNIFORM, || m.is_uniform())
}

/// Every idempotent endomorphism is multiplication by a ring element.
pub fn scalar_idempotent_endos(m: &Arc<FiniteModule>, cap: usize) -> Result<Verdict> {
    for f in m.endomorphisms(cap)? {
        if f.is_idempotent() && f.as_scalar().is_none() {
            return Ok(Verdict::with(false, Witness::Map(f.table().to_vec()), Method::Endomorphism));
        }
    }
    Ok(Verdict::yes(Method::Endomorphism))
}

/// Ring elements `r` with `r - r² ∈ Ann(M)`, paired with `rM`.
fn scalar_idempotents(m: &FiniteModule) -> Vec<(usize, ElemSet)> {
    let r = m.ring();
    let ann = m.ann_set(&ElemSet::full(m.size()));
    let mut out: Vec<(usize, ElemSet)> = Vec::new();
    for x in r.elements() {
        if ann.contains(r.sub(x, r.mul(x, x))) {
            let s = m.scaled(x);
            if !out.iter().any(|(_, t)| *t == s) {
                out.push((x, s));
            }
        }
    }
    out
}

/// Every direct summand equals `rM` for some `r` with `r - r² ∈ Ann(M)`.
pub fn summands_are_scalar_images(m: &FiniteModule) -> Result<Verdict> {
    m.require_nonzero()?;
    let a = m.analysis()?;
    let images = scalar_idempotents(m);
    for (n, _) in a.subs.iter().zip(&a.summand).filter(|(_, &s)| s) {
        if !images.iter().any(|(_, rm)| rm == n) {
            return Ok(Verdict::with(false, Witness::Submodule(n.to_vec()), Method::ElementScan));
        }
    }
    Ok(Verdict::yes(Method::ElementScan))
}

/// Every submodule is essential in `rM` for some `r` with `r - r² ∈ Ann(M)`.
pub fn scalar_essential_cover(m: &FiniteModule) -> Result<Verdict> {
    m.require_nonzero()?;
    let a = m.analysis()?;
    let images = scalar_idempotents(m);
    for n in &a.subs {
        if !images
            .iter()
            .any(|(_, rm)| n.is_subset(rm) && m.essential_in(&a, n, rm).is_none())
        {
            return Ok(Verdict::with(false, Witness::Submodule(n.to_vec()), Method::ElementScan));
        }
    }
    Ok(Verdict::yes(Method::ElementScan))
}

/// For `N ∩ L = 0` there is an idempotent `e ∈ Ann(N)` with `1 - e ∈ Ann(L)`.
pub fn idempotent_separation(m: &FiniteModule) -> Result<Verdict> {
    m.require_nonzero()?;
    let a = m.analysis()?;
    let r = m.ring();
    let idem = r.idempotents();
    for (i, n) in a.subs.iter().enumerate().skip(1) {
        for (j, l) in a.subs.iter().enumerate().skip(i + 1) {
            if n.intersection_len(l) == 1
                && !idem
                    .iter()
                    .any(|&e| a.anns[i].contains(e) && a.anns[j].contains(r.sub(r.one(), e)))
            {
                return Ok(Verdict::with(false, pair(n, l), Method::Idempotent));
            }
        }
    }
    Ok(Verdict::yes(Method::Idempotent))
}

/// Every direct summand equals `eM` for an idempotent `e`.
pub fn summands_are_idempotent_images(m: &FiniteModule) -> Result<Verdict> {
    m.require_nonzero()?;
    let a = m.analysis()?;
    let images = idempotent_images(m);
    for (n, _) in a.subs.iter().zip(&a.summand).filter(|(_, &s)| s) {
        if !images.iter().any(|(_, em)| em == n) {
            return Ok(Verdict::with(false, Witness::Submodule(n.to_vec()), Method::Idempotent));
        }
    }
    Ok(Verdict::yes(Method::Idempotent))
}

/// `M` regarded as a module over `R/Ann(M)`.
pub fn over_annihilator_quotient(m: &Arc<FiniteModule>) -> Result<Arc<FiniteModule>> {
    let r = m.ring();
    let ann = m.annihilator();
    let pedigree = crate::descriptor::ModuleDescriptor::overquot(
        m.pedigree().clone(),
        ann.generator_literals(),
    );
    let limits = Limits {
        max_ring_size: r.size(),
        max_module_size: m.size(),
        max_submodule_count: m.lattice_cap(),
    };
    over_quotient(m, ann.set(), pedigree, &limits)
}

/// Which characterization [`is_cs_ring`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CsRingMethod {
    /// The regular module is strongly CS.
    Definitional,
    /// Zero-intersecting ideals have comaximal annihilators.
    Annihilator,
}

fn require_nonzero_ring(r: &FiniteRing) -> Result<()> {
    if r.is_zero_ring() {
        Err(Error::ZeroRing)
    } else {
        Ok(())
    }
}

/// The regular module with an uncapped lattice, matching `ideal_sets`.
pub fn regular_module(r: &Arc<FiniteRing>) -> Result<Arc<FiniteModule>> {
    let limits = Limits {
        max_ring_size: r.size(),
        max_module_size: r.size(),
        max_submodule_count: usize::MAX,
    };
    regular(r, &limits)
}

pub fn is_cs_ring(r: &Arc<FiniteRing>, method: CsRingMethod) -> Result<Verdict> {
    require_nonzero_ring(r)?;
    match method {
        CsRingMethod::Definitional => r.memoized(RING_CS_DEF, || {
            let v = is_strongly_cs(&*regular_module(r)?)?;
            Ok(Verdict {
                method: Method::Definitional,
                ..v
            })
        }),
        CsRingMethod::Annihilator => r.memoized(RING_CS_ANN, || {
            let ideals = r.ideal_sets();
            let anns: Vec<ElemSet> = ideals.iter().map(|i| r.annihilator_set(&i.to_vec())).collect();
            for (i, x) in ideals.iter().enumerate().skip(1) {
                for (j, y) in ideals.iter().enumerate().skip(i + 1) {
                    if x.intersection_len(y) == 1 && !r.comaximal(&anns[i], &anns[j]) {
                        return Ok(Verdict::with(false, pair(x, y), Method::Annihilator));
                    }
                }
            }
            Ok(Verdict::yes(Method::Annihilator))
        }),
    }
}

/// Every element is a unit plus an idempotent.
pub fn is_clean(r: &FiniteRing) -> Verdict {
    let idem = r.idempotents();
    match r
        .elements()
        .find(|&x| !idem.iter().any(|&e| r.is_unit(r.sub(x, e))))
    {
        Some(x) => Verdict::with(false, Witness::Element(x), Method::ElementScan),
        None => Verdict::yes(Method::ElementScan),
    }
}

pub(crate) fn lifts_mod_set(r: &FiniteRing, i: &ElemSet) -> Verdict {
    let idem = r.idempotents();
    let bad = r.elements().find(|&x| {
        i.contains(r.sub(x, r.mul(x, x))) && !idem.iter().any(|&e| i.contains(r.sub(x, e)))
    });
    match bad {
        Some(x) => Verdict::with(false, Witness::Element(x), Method::Idempotent),
        None => Verdict::yes(Method::Idempotent),
    }
}

/// Whenever `r - r² ∈ I` there is an idempotent `e` with `r - e ∈ I`.
pub fn idempotents_lift_mod(r: &FiniteRing, i: &Ideal) -> Result<Verdict> {
    if !i.ring().same_tables(r) {
        return Err(Error::RingMismatch);
    }
    if !i.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    Ok(lifts_mod_set(r, i.set()))
}

/// The ideals are totally ordered by inclusion.
pub fn is_chain_ring(r: &FiniteRing) -> Result<Verdict> {
    require_nonzero_ring(r)?;
    let ideals = r.ideal_sets();
    for (i, x) in ideals.iter().enumerate() {
        for y in &ideals[i + 1..] {
            if !x.is_subset(y) && !y.is_subset(x) {
                return Ok(Verdict::with(false, pair(x, y), Method::Definitional));
            }
        }
    }
    Ok(Verdict::yes(Method::Definitional))
}

/// An idempotent `e ∈ p` with `1 - e ∈ q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Purification {
    pub p: Vec<usize>,
    pub q: Vec<usize>,
    pub e: usize,
}

/// Zero-dimensional, mp and purified, computed from the spectrum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingClassFlags {
    pub zero_dimensional: bool,
    pub mp: bool,
    pub purified: bool,
    /// One entry per ordered pair of distinct minimal primes that is separated.
    pub purification: Vec<Purification>,
}

pub fn ring_class_flags(r: &Arc<FiniteRing>) -> Result<RingClassFlags> {
    require_nonzero_ring(r)?;
    let spec = r.prime_spectrum()?;
    let zero_dimensional = spec.primes.iter().all(|p| spec.maximal.contains(p));
    let mp = spec
        .maximal
        .iter()
        .all(|m| spec.minimal.iter().filter(|p| p.is_subset(m)).count() == 1);
    let idem = r.idempotents();
    let mut purified = true;
    let mut purification = Vec::new();
    for p in &spec.minimal {
        for q in &spec.minimal {
            if p == q {
                continue;
            }
            match idem
                .iter()
                .find(|&&e| p.contains(e) && q.contains(r.sub(r.one(), e)))
            {
                Some(&e) => purification.push(Purification {
                    p: p.elements(),
                    q: q.elements(),
                    e,
                }),
                None => purified = false,
            }
        }
    }
    Ok(RingClassFlags {
        zero_dimensional,
        mp,
        purified,
        purification,
    })
}

/// The fixed vocabulary of module properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ModuleProperty {
    Cs,
    WeaklyIn,
    StronglyCs,
    Sin,
    QuasiContinuous,
    ScalarIdempotentEndos,
    Uniform,
    Projective,
}

/// The fixed vocabulary of ring properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RingProperty {
    CsRing,
    CsRingAnnihilator,
    Clean,
    Chain,
    ZeroDimensional,
    Mp,
    Purified,
    TotalQuotient,
}

impl ModuleProperty {
    pub const ALL: [ModuleProperty; 8] = [
        Self::Cs,
        Self::WeaklyIn,
        Self::StronglyCs,
        Self::Sin,
        Self::QuasiContinuous,
        Self::ScalarIdempotentEndos,
        Self::Uniform,
        Self::Projective,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Cs => "cs",
            Self::WeaklyIn => "weakly_in",
            Self::StronglyCs => "strongly_cs",
            Self::Sin => "sin",
            Self::QuasiContinuous => "quasi_continuous",
            Self::ScalarIdempotentEndos => "scalar_idempotent_endos",
            Self::Uniform => "uniform",
            Self::Projective => "projective",
        }
    }
}

impl RingProperty {
    pub const ALL: [RingProperty; 8] = [
        Self::CsRing,
        Self::CsRingAnnihilator,
        Self::Clean,
        Self::Chain,
        Self::ZeroDimensional,
        Self::Mp,
        Self::Purified,
        Self::TotalQuotient,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::CsRing => "cs_ring",
            Self::CsRingAnnihilator => "cs_ring_annihilator",
            Self::Clean => "clean",
            Self::Chain => "chain",
            Self::ZeroDimensional => "zero_dimensional",
            Self::Mp => "mp",
            Self::Purified => "purified",
            Self::TotalQuotient => "total_quotient",
        }
    }
}

impl fmt::Display for ModuleProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for RingProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModuleProperty {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::MalformedDescriptor(format!("unknown module property `{s}`")))
    }
}

impl FromStr for RingProperty {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::MalformedDescriptor(format!("unknown ring property `{s}`")))
    }
}

pub fn check_module(m: &Arc<FiniteModule>, p: ModuleProperty) -> Result<Verdict> {
    match p {
        ModuleProperty::Cs => is_cs_module(m),
        ModuleProperty::WeaklyIn => is_weakly_in(m),
        ModuleProperty::StronglyCs => is_strongly_cs(m),
        ModuleProperty::Sin => is_sin(m),
        ModuleProperty::QuasiContinuous => is_quasi_continuous(m),
        ModuleProperty::ScalarIdempotentEndos => scalar_idempotent_endos(m, ENDO_CAP),
        ModuleProperty::Uniform => is_uniform(m),
        ModuleProperty::Projective => m.is_projective(),
    }
}

pub fn check_ring(r: &Arc<FiniteRing>, p: RingProperty) -> Result<Verdict> {
    let flag = |f: fn(&RingClassFlags) -> bool| -> Result<Verdict> {
        let flags = ring_class_flags(r)?;
        Ok(if f(&flags) {
            Verdict::yes(Method::Definitional)
        } else {
            Verdict::no(Method::Definitional)
        })
    };
    match p {
        RingProperty::CsRing => is_cs_ring(r, CsRingMethod::Definitional),
        RingProperty::CsRingAnnihilator => is_cs_ring(r, CsRingMethod::Annihilator),
        RingProperty::Clean => Ok(is_clean(r)),
        RingProperty::Chain => is_chain_ring(r),
        RingProperty::ZeroDimensional => flag(|f| f.zero_dimensional),
        RingProperty::Mp => flag(|f| f.mp),
        RingProperty::Purified => flag(|f| f.purified),
        RingProperty::TotalQuotient => Ok(r.total_quotient_is_self()),
    }
}

/// Re-checks a verdict's witness from first principles: submodules are
/// re-spanned, essentiality is tested with freshly computed spans and
/// annihilator sums are formed explicitly. True verdicts without a witness
/// are accepted as is.
pub fn revalidate_module(m: &Arc<FiniteModule>, p: ModuleProperty, v: &Verdict) -> Result<bool> {
    let Some(w) = &v.witness else {
        return Ok(v.value);
    };
    let sub = |xs: &[usize]| -> Result<ElemSet> {
        let s = ElemSet::from_elems(m.size(), xs.iter().copied());
        let closed = lattice::span(&**m, xs.iter().copied()) == s;
        if closed {
            Ok(s)
        } else {
            Err(Error::ContainmentViolation("witness is not a submodule".into()))
        }
    };
    let all = m.all_submodules()?;
    let summands: Vec<ElemSet> = all
        .iter()
        .filter(|d| {
            all.iter()
                .any(|k| k.set().intersection_len(d.set()) == 1 && k.len() * d.len() == m.size())
        })
        .map(|d| d.set().clone())
        .collect();
    let essential = |n: &ElemSet, l: &ElemSet| {
        n.is_subset(l)
            && l.iter()
                .filter(|&x| x != m.zero())
                .all(|x| lattice::span(&**m, [x]).intersection_len(n) > 1)
    };
    let ann = |s: &ElemSet| m.ann_set(s);
    let r = m.ring();
    let full = |i: &ElemSet, j: &ElemSet| r.ideal_set_sum(i, j).len() == r.size();
    Ok(match (p, w, v.value) {
        (ModuleProperty::Cs, Witness::Submodule(n), false) => {
            let n = sub(n)?;
            !summands.iter().any(|d| essential(&n, d))
        }
        (ModuleProperty::QuasiContinuous, Witness::Submodule(n), false) => {
            let n = sub(n)?;
            !summands.iter().any(|d| essential(&n, d))
        }
        (ModuleProperty::QuasiContinuous, Witness::SubmodulePair(n, l), false) => {
            let (n, l) = (sub(n)?, sub(l)?);
            summands.contains(&n)
                && summands.contains(&l)
                && n.intersection_len(&l) == 1
                && !summands.contains(&lattice::sum(&**m, &n, &l))
        }
        (ModuleProperty::StronglyCs, Witness::Submodule(n), false) => {
            let n = sub(n)?;
            !r.idempotents()
                .into_iter()
                .any(|e| essential(&n, &lattice::scale(&**m, e, &ElemSet::full(m.size()))))
        }
        (ModuleProperty::WeaklyIn, Witness::SubmodulePair(n, l), false)
        | (ModuleProperty::Uniform, Witness::SubmodulePair(n, l), false) => {
            let (n, l) = (sub(n)?, sub(l)?);
            let disjoint = n.len() > 1 && l.len() > 1 && n.intersection_len(&l) == 1;
            disjoint && (p == ModuleProperty::Uniform || !full(&ann(&n), &ann(&l)))
        }
        (ModuleProperty::Sin, Witness::SubmodulePair(n, l), false) => {
            let (n, l) = (sub(n)?, sub(l)?);
            ann(&n.intersection(&l)) != r.ideal_set_sum(&ann(&n), &ann(&l))
        }
        (ModuleProperty::ScalarIdempotentEndos, Witness::Map(f), false) => {
            match ModuleHom::new(m, m, f.clone()) {
                Ok(h) => {
                    h.is_idempotent()
                        && !r
                            .elements()
                            .any(|s| m.elements().all(|x| m.act(s, x) == f[x]))
                }
                Err(_) => false,
            }
        }
        (ModuleProperty::Projective, Witness::Splitting(s), true) => {
            let gens = lattice::generators(&**m, &ElemSet::full(m.size()));
            let r = m.ring();
            let k = gens.len();
            let coords_ok = s.len() == m.size() && s.iter().all(|c| c.len() == k);
            // x -> s[x] is linear and the projection onto the generators undoes it
            coords_ok
                && m.elements().all(|x| {
                    let back = s[x]
                        .iter()
                        .zip(&gens)
                        .fold(m.zero(), |acc, (&a, &h)| m.add(acc, m.act(a, h)));
                    back == x
                        && m.elements().all(|y| {
                            (0..k).all(|i| s[m.add(x, y)][i] == r.add(s[x][i], s[y][i]))
                        })
                        && r.elements()
                            .all(|a| (0..k).all(|i| s[m.act(a, x)][i] == r.mul(a, s[x][i])))
                })
        }
        _ => false,
    })
}

/// Ring-level counterpart of [`revalidate_module`].
pub fn revalidate_ring(r: &Arc<FiniteRing>, p: RingProperty, v: &Verdict) -> Result<bool> {
    let Some(w) = &v.witness else {
        return Ok(v.value);
    };
    let ideal = |xs: &[usize]| -> Result<ElemSet> {
        let i = r.ideal_span(xs)?;
        if i.elements() == xs {
            Ok(i.set().clone())
        } else {
            Err(Error::ContainmentViolation("witness is not an ideal".into()))
        }
    };
    Ok(match (p, w, v.value) {
        (RingProperty::CsRing, Witness::Submodule(i), false) => {
            let i = ideal(i)?;
            !r.idempotents().into_iter().any(|e| {
                let er = lattice::scale(&**r, e, &ElemSet::full(r.size()));
                i.is_subset(&er)
                    && er
                        .iter()
                        .filter(|&x| x != r.zero())
                        .all(|x| lattice::span(&**r, [x]).intersection_len(&i) > 1)
            })
        }
        (RingProperty::CsRingAnnihilator, Witness::SubmodulePair(i, j), false) => {
            let (i, j) = (ideal(i)?, ideal(j)?);
            let (a, b) = (r.annihilator_set(&i.to_vec()), r.annihilator_set(&j.to_vec()));
            i.intersection_len(&j) == 1 && r.ideal_set_sum(&a, &b).len() < r.size()
        }
        (RingProperty::Chain, Witness::SubmodulePair(i, j), false) => {
            let (i, j) = (ideal(i)?, ideal(j)?);
            !i.is_subset(&j) && !j.is_subset(&i)
        }
        (RingProperty::Clean, Witness::Element(x), false) => {
            !r.idempotents().into_iter().any(|e| r.is_unit(r.sub(*x, e)))
        }
        (RingProperty::TotalQuotient, Witness::Element(x), false) => {
            !r.is_zero_divisor(*x) && !r.is_unit(*x)
        }
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::{ModuleDescriptor, RingDescriptor};
    use crate::module::build_module;
    use crate::ring::build_ring;

    fn module(d: ModuleDescriptor) -> Arc<FiniteModule> {
        build_module(&d, &Limits::default()).unwrap()
    }

    fn ring(d: RingDescriptor) -> Arc<FiniteRing> {
        build_ring(&d, &Limits::default()).unwrap()
    }

    fn regular(n: u64) -> Arc<FiniteModule> {
        module(ModuleDescriptor::Regular(RingDescriptor::zmod(n)))
    }

    fn plane() -> Arc<FiniteModule> {
        let z2 = ModuleDescriptor::Regular(RingDescriptor::zmod(2));
        module(ModuleDescriptor::DirectSum(vec![z2.clone(), z2]))
    }

    fn z2_z3() -> Arc<FiniteModule> {
        let z6 = RingDescriptor::zmod(6);
        module(ModuleDescriptor::DirectSum(vec![
            ModuleDescriptor::cyclic(z6.clone(), vec![2.into()]),
            ModuleDescriptor::cyclic(z6, vec![3.into()]),
        ]))
    }

    #[test]
    fn module_examples() {
        assert!(is_cs_module(&regular(4)).unwrap().value);
        assert!(is_cs_module(&plane()).unwrap().value);
        assert!(is_weakly_in(&z2_z3()).unwrap().value);
        let v = is_weakly_in(&plane()).unwrap();
        assert!(!v.value);
        assert!(revalidate_module(&plane(), ModuleProperty::WeaklyIn, &v).unwrap());
        assert!(is_strongly_cs(&regular(6)).unwrap().value);
        assert!(is_strongly_cs(&z2_z3()).unwrap().value);
        assert!(!is_strongly_cs(&plane()).unwrap().value);
        assert!(is_sin(&regular(5)).unwrap().value);
        assert!(is_sin(&regular(4)).unwrap().value);
        assert!(is_quasi_continuous(&regular(4)).unwrap().value);
        assert!(is_quasi_continuous(&plane()).unwrap().value);
        assert!(scalar_idempotent_endos(&regular(6), ENDO_CAP).unwrap().value);
        assert!(scalar_idempotent_endos(&z2_z3(), ENDO_CAP).unwrap().value);
        let v = scalar_idempotent_endos(&plane(), ENDO_CAP).unwrap();
        assert!(!v.value);
        assert!(revalidate_module(&plane(), ModuleProperty::ScalarIdempotentEndos, &v).unwrap());
    }

    #[test]
    fn non_cs_module() {
        let z8 = RingDescriptor::zmod(8);
        let m = module(ModuleDescriptor::DirectSum(vec![
            ModuleDescriptor::cyclic(z8.clone(), vec![2.into()]),
            ModuleDescriptor::Regular(z8),
        ]));
        let v = is_cs_module(&m).unwrap();
        assert!(!v.value);
        assert!(revalidate_module(&m, ModuleProperty::Cs, &v).unwrap());
        let dsum = ring(RingDescriptor::product([RingDescriptor::zmod(2), RingDescriptor::zmod(8)]));
        // the ring Z/2×Z/8 is a product of chain rings, hence CS
        assert!(is_cs_ring(&dsum, CsRingMethod::Definitional).unwrap().value);
    }

    #[test]
    fn zero_module_rejected() {
        let z = module(ModuleDescriptor::cyclic(RingDescriptor::zmod(2), vec![1.into()]));
        assert_eq!(is_cs_module(&z).unwrap_err(), Error::ZeroModule);
        assert_eq!(is_weakly_in(&z).unwrap_err(), Error::ZeroModule);
    }

    #[test]
    fn ring_examples() {
        for n in [4, 6] {
            let r = ring(RingDescriptor::zmod(n));
            assert!(is_cs_ring(&r, CsRingMethod::Definitional).unwrap().value);
            assert!(is_cs_ring(&r, CsRingMethod::Annihilator).unwrap().value);
        }
        let t = ring(RingDescriptor::trivext(
            RingDescriptor::zmod(2),
            ModuleDescriptor::DirectSum(vec![
                ModuleDescriptor::cyclic(RingDescriptor::zmod(2), vec![0.into()]),
                ModuleDescriptor::cyclic(RingDescriptor::zmod(2), vec![0.into()]),
            ]),
        ));
        for method in [CsRingMethod::Definitional, CsRingMethod::Annihilator] {
            let v = is_cs_ring(&t, method).unwrap();
            assert!(!v.value);
        }
        let v = is_cs_ring(&t, CsRingMethod::Annihilator).unwrap();
        assert!(revalidate_ring(&t, RingProperty::CsRingAnnihilator, &v).unwrap());
        let v = is_cs_ring(&t, CsRingMethod::Definitional).unwrap();
        assert!(revalidate_ring(&t, RingProperty::CsRing, &v).unwrap());
        assert_eq!(
            is_cs_ring(&ring(RingDescriptor::zmod(1)), CsRingMethod::Annihilator).unwrap_err(),
            Error::ZeroRing
        );

        let z6 = ring(RingDescriptor::zmod(6));
        assert!(is_clean(&z6).value);
        let z12 = ring(RingDescriptor::zmod(12));
        let i = z12.ideal_span(&[6]).unwrap();
        assert!(idempotents_lift_mod(&z12, &i).unwrap().value);
        assert!(idempotents_lift_mod(&z12, &z12.zero_ideal()).unwrap().value);
        assert_eq!(idempotents_lift_mod(&z12, &z12.whole()).unwrap_err(), Error::ImproperIdeal);

        assert!(is_chain_ring(&ring(RingDescriptor::zmod(8))).unwrap().value);
        assert!(is_chain_ring(&ring(RingDescriptor::zmod(7))).unwrap().value);
        let v = is_chain_ring(&z6).unwrap();
        assert_eq!(v.witness, Some(Witness::SubmodulePair(vec![0, 3], vec![0, 2, 4])));

        let flags = ring_class_flags(&z6).unwrap();
        assert!(flags.zero_dimensional && flags.mp && flags.purified);
        assert!(flags.purification.contains(&Purification {
            p: vec![0, 2, 4],
            q: vec![0, 3],
            e: 4
        }));
        for n in [4, 5] {
            let f = ring_class_flags(&ring(RingDescriptor::zmod(n))).unwrap();
            assert!(f.zero_dimensional && f.mp && f.purified);
        }
    }

    #[test]
    fn property_names_round_trip() {
        for p in ModuleProperty::ALL {
            assert_eq!(p.name().parse::<ModuleProperty>().unwrap(), p);
        }
        for p in RingProperty::ALL {
            assert_eq!(p.name().parse::<RingProperty>().unwrap(), p);
        }
    }
}

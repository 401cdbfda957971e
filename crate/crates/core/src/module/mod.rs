//! Finite modules over finite rings, given by an addition table and an action
//! table.

mod build;
mod hom;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::descriptor::{ElemLit, ModuleDescriptor};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice::{self, Action};
use crate::ring::{resolve_literal, FiniteRing, Ideal};
use crate::verdict::{Method, Verdict, Witness};

pub use build::build_module;
pub(crate) use build::{direct_sum, over_quotient, product_mod, quotient as quotient_by, regular};
pub use hom::ModuleHom;

/// A finite module. Elements are the indices `0..size()`.
pub struct FiniteModule {
    ring: Arc<FiniteRing>,
    size: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
    act: Vec<usize>,
    zero: usize,
    labels: Vec<ElemLit>,
    pedigree: ModuleDescriptor,
    lattice_cap: usize,
    analysis: OnceLock<std::result::Result<Arc<Analysis>, Error>>,
    memo: [OnceLock<Result<Verdict>>; MEMO_SLOTS],
}

/// Number of cached decider verdicts per module.
pub(crate) const MEMO_SLOTS: usize = 8;

/// Lattice data computed once per module.
pub(crate) struct Analysis {
    /// All submodules in canonical order.
    pub subs: Vec<ElemSet>,
    pub index: HashMap<ElemSet, usize>,
    /// `cyclic[x]` is the index of the submodule generated by `x`.
    pub cyclic: Vec<usize>,
    /// `Ann_R` of each submodule.
    pub anns: Vec<ElemSet>,
    /// Whether each submodule is a direct summand.
    pub summand: Vec<bool>,
}

impl FiniteModule {
    /// Assembles a module and checks the abelian group and action axioms.
    pub fn from_tables(
        ring: Arc<FiniteRing>,
        add: Vec<usize>,
        act: Vec<usize>,
        zero: usize,
        labels: Vec<ElemLit>,
        pedigree: ModuleDescriptor,
        lattice_cap: usize,
    ) -> Result<Self> {
        let size = labels.len();
        if size == 0 || add.len() != size * size || act.len() != ring.size() * size {
            return Err(Error::AxiomViolation("module table dimensions".into()));
        }
        if add.iter().chain(act.iter()).any(|&v| v >= size) || zero >= size {
            return Err(Error::AxiomViolation("module table entry out of range".into()));
        }
        let mut neg = vec![usize::MAX; size];
        for a in 0..size {
            if let Some(b) = (0..size).find(|&b| add[a * size + b] == zero) {
                neg[a] = b;
            }
        }
        let m = Self {
            ring,
            size,
            add,
            neg,
            act,
            zero,
            labels,
            pedigree,
            lattice_cap,
            analysis: OnceLock::new(),
            memo: Default::default(),
        };
        m.check_axioms()?;
        Ok(m)
    }

    pub fn check_axioms(&self) -> Result<()> {
        let n = self.size;
        let r = &*self.ring;
        let fail = |what: &str| Err(Error::AxiomViolation(what.to_string()));
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return fail("zero is not an additive identity");
            }
            if self.neg[a] == usize::MAX {
                return fail("missing additive inverse");
            }
            if self.act(r.one(), a) != a {
                return fail("action is not unital");
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("addition is not commutative");
                }
                let ab = self.add(a, b);
                for c in 0..n {
                    if self.add(ab, c) != self.add(a, self.add(b, c)) {
                        return fail("addition is not associative");
                    }
                }
                for s in r.elements() {
                    if self.act(s, ab) != self.add(self.act(s, a), self.act(s, b)) {
                        return fail("action does not distribute over module addition");
                    }
                }
            }
            for s in r.elements() {
                let sa = self.act(s, a);
                for t in r.elements() {
                    if self.act(r.mul(t, s), a) != self.act(t, sa) {
                        return fail("action is not associative");
                    }
                    if self.act(r.add(t, s), a) != self.add(self.act(t, a), sa) {
                        return fail("action does not distribute over ring addition");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn is_zero(&self) -> bool {
        self.size == 1
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg[b])
    }

    /// `r·x`.
    #[inline]
    pub fn act(&self, r: usize, x: usize) -> usize {
        self.act[r * self.size + x]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn pedigree(&self) -> &ModuleDescriptor {
        &self.pedigree
    }

    pub fn label(&self, x: usize) -> &ElemLit {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[ElemLit] {
        &self.labels
    }

    pub fn lattice_cap(&self) -> usize {
        self.lattice_cap
    }

    pub fn resolve(&self, lit: &ElemLit) -> Result<usize> {
        resolve_literal(&self.labels, lit)
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.size {
            Ok(())
        } else {
            Err(Error::InvalidElement(x.to_string()))
        }
    }

    pub(crate) fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub(crate) fn act_table(&self) -> &[usize] {
        &self.act
    }

    /// True when both modules have identical tables over identical rings.
    pub fn same_tables(&self, other: &FiniteModule) -> bool {
        std::ptr::eq(self, other)
            || (self.size == other.size
                && self.zero == other.zero
                && self.add == other.add
                && self.act == other.act
                && self.ring.same_tables(&other.ring))
    }

    pub(crate) fn analysis(&self) -> Result<Arc<Analysis>> {
        self.analysis
            .get_or_init(|| self.analyse().map(Arc::new))
            .clone()
    }

    fn analyse(&self) -> Result<Analysis> {
        let spans = lattice::cyclic_spans(self);
        let subs = lattice::all_submodules(self, &spans, self.lattice_cap)?;
        let index: HashMap<ElemSet, usize> =
            subs.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let cyclic = spans.iter().map(|s| index[s]).collect();
        let anns = subs.iter().map(|s| self.ann_set(s)).collect();
        let summand = subs
            .iter()
            .map(|n| {
                subs.iter()
                    .any(|k| n.len() * k.len() == self.size && n.intersection_len(k) == 1)
            })
            .collect();
        Ok(Analysis {
            subs,
            index,
            cyclic,
            anns,
            summand,
        })
    }

    pub(crate) fn ann_set(&self, s: &ElemSet) -> ElemSet {
        let r = &*self.ring;
        ElemSet::from_elems(
            r.size(),
            r.elements().filter(|&a| s.iter().all(|x| self.act(a, x) == self.zero)),
        )
    }

    /// `r·M`.
    pub(crate) fn scaled(&self, r: usize) -> ElemSet {
        ElemSet::from_elems(self.size, self.elements().map(|x| self.act(r, x)))
    }

    /// Cyclic-witness form: `N` is essential in `L` when every nonzero
    /// `x ∈ L` generates a submodule meeting `N` nontrivially.
    pub(crate) fn essential_in(&self, a: &Analysis, n: &ElemSet, l: &ElemSet) -> Option<usize> {
        l.iter()
            .filter(|&x| x != self.zero)
            .find(|&x| a.subs[a.cyclic[x]].intersection_len(n) == 1)
    }

    /// Caches the verdict of a decider in `slot`.
    pub(crate) fn memoized(&self, slot: usize, f: impl FnOnce() -> Result<Verdict>) -> Result<Verdict> {
        self.memo[slot].get_or_init(f).clone()
    }

    pub(crate) fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroModule)
        } else {
            Ok(())
        }
    }

    pub fn submodule_span(self: &Arc<Self>, gens: &[usize]) -> Result<Submodule> {
        for &g in gens {
            self.check_element(g)?;
        }
        Ok(Submodule::from_set(self, lattice::span(&**self, gens.iter().copied())))
    }

    pub fn zero_submodule(self: &Arc<Self>) -> Submodule {
        Submodule::from_set(self, lattice::zero_set(&**self))
    }

    pub fn whole(self: &Arc<Self>) -> Submodule {
        Submodule::from_set(self, ElemSet::full(self.size))
    }

    pub fn all_submodules(self: &Arc<Self>) -> Result<Vec<Submodule>> {
        let a = self.analysis()?;
        Ok(a.subs
            .iter()
            .map(|s| Submodule::from_set(self, s.clone()))
            .collect())
    }

    pub fn annihilator_in_ring(&self, subset: &[usize]) -> Result<Ideal> {
        for &x in subset {
            self.check_element(x)?;
        }
        let set = ElemSet::from_elems(self.size, subset.iter().copied());
        Ok(Ideal::from_set(&self.ring, self.ann_set(&set)))
    }

    /// `Ann_R(M)`.
    pub fn annihilator(&self) -> Ideal {
        Ideal::from_set(&self.ring, self.ann_set(&ElemSet::full(self.size)))
    }

    pub fn is_faithful(&self) -> bool {
        self.annihilator().is_zero()
    }

    /// `{x ∈ M | I·x = 0}`.
    pub fn annihilator_in_module(self: &Arc<Self>, ideal: &Ideal) -> Result<Submodule> {
        if !ideal.ring().same_tables(&self.ring) {
            return Err(Error::RingMismatch);
        }
        let set = ElemSet::from_elems(
            self.size,
            self.elements()
                .filter(|&x| ideal.set().iter().all(|r| self.act(r, x) == self.zero)),
        );
        Ok(Submodule::from_set(self, set))
    }

    /// Whether `n` is essential in `l`; on false the witness is the least
    /// nonzero `x ∈ l` whose span meets `n` trivially.
    pub fn is_essential(&self, n: &Submodule, l: &Submodule) -> Result<Verdict> {
        if !n.elements.is_subset(&l.elements) {
            return Err(Error::NotNested);
        }
        let found = l
            .elements
            .iter()
            .filter(|&x| x != self.zero)
            .find(|&x| lattice::span(self, [x]).intersection_len(&n.elements) == 1);
        Ok(match found {
            Some(x) => Verdict::with(false, Witness::Element(x), Method::Definitional),
            None => Verdict::yes(Method::Definitional),
        })
    }

    /// All `K` with `N + K = M` and `N ∩ K = 0`, in canonical order.
    pub fn complements(self: &Arc<Self>, n: &Submodule) -> Result<Vec<Submodule>> {
        let a = self.analysis()?;
        Ok(a.subs
            .iter()
            .filter(|k| k.len() * n.len() == self.size && k.intersection_len(&n.elements) == 1)
            .map(|k| Submodule::from_set(self, k.clone()))
            .collect())
    }

    /// Direct summands in canonical order.
    pub fn summands(self: &Arc<Self>) -> Result<Vec<Submodule>> {
        let a = self.analysis()?;
        Ok(a.subs
            .iter()
            .zip(&a.summand)
            .filter(|(_, &s)| s)
            .map(|(k, _)| Submodule::from_set(self, k.clone()))
            .collect())
    }

    pub fn is_uniform(&self) -> Result<Verdict> {
        self.require_nonzero()?;
        let a = self.analysis()?;
        // it suffices to test cyclic submodules
        let mut cyclics: Vec<usize> = a.cyclic.clone();
        cyclics.sort_unstable();
        cyclics.dedup();
        for (i, &p) in cyclics.iter().enumerate() {
            for &q in &cyclics[i + 1..] {
                let (n, l) = (&a.subs[p], &a.subs[q]);
                if n.len() > 1 && l.len() > 1 && n.intersection_len(l) == 1 {
                    return Ok(Verdict::with(
                        false,
                        Witness::SubmodulePair(n.to_vec(), l.to_vec()),
                        Method::Definitional,
                    ));
                }
            }
        }
        Ok(Verdict::yes(Method::Definitional))
    }

    pub fn quotient_module(self: &Arc<Self>, n: &Submodule) -> Result<QuotientModule> {
        if !n.module.same_tables(self) {
            return Err(Error::RingMismatch);
        }
        let gens = n.generator_literals();
        let pedigree = ModuleDescriptor::quotmod(self.pedigree.clone(), gens);
        let (module, projection) = build::quotient(self, &n.elements, pedigree)?;
        Ok(QuotientModule { module, projection })
    }

    pub fn homomorphisms(self: &Arc<Self>, dst: &Arc<FiniteModule>, cap: usize) -> Result<Vec<ModuleHom>> {
        hom::homomorphisms(self, dst, cap)
    }

    /// All endomorphisms, identity and zero included.
    pub fn endomorphisms(self: &Arc<Self>, cap: usize) -> Result<Vec<ModuleHom>> {
        hom::homomorphisms(self, self, cap)
    }

    pub fn is_projective(self: &Arc<Self>) -> Result<Verdict> {
        hom::is_projective(self)
    }
}

impl Action for FiniteModule {
    fn scalars(&self) -> usize {
        self.ring.size()
    }
    fn size(&self) -> usize {
        self.size
    }
    fn zero(&self) -> usize {
        self.zero
    }
    fn plus(&self, a: usize, b: usize) -> usize {
        self.add(a, b)
    }
    fn act(&self, r: usize, x: usize) -> usize {
        FiniteModule::act(self, r, x)
    }
}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteModule({}, size {})", self.pedigree, self.size)
    }
}

/// A quotient module with the projection from its parent.
#[derive(Debug, Clone)]
pub struct QuotientModule {
    pub module: Arc<FiniteModule>,
    pub projection: Vec<usize>,
}

/// A submodule, stored as its element set.
#[derive(Clone)]
pub struct Submodule {
    module: Arc<FiniteModule>,
    elements: ElemSet,
}

impl Submodule {
    pub(crate) fn from_set(module: &Arc<FiniteModule>, elements: ElemSet) -> Self {
        Self {
            module: Arc::clone(module),
            elements,
        }
    }

    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
    }

    pub fn set(&self) -> &ElemSet {
        &self.elements
    }

    pub fn elements(&self) -> Vec<usize> {
        self.elements.to_vec()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(x)
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.elements.is_subset(&other.elements)
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        Submodule::from_set(&self.module, lattice::sum(&*self.module, &self.elements, &other.elements))
    }

    pub fn intersect(&self, other: &Submodule) -> Submodule {
        Submodule::from_set(&self.module, self.elements.intersection(&other.elements))
    }

    pub fn annihilator(&self) -> Ideal {
        Ideal::from_set(self.module.ring(), self.module.ann_set(&self.elements))
    }

    pub fn generators(&self) -> Vec<usize> {
        lattice::generators(&*self.module, &self.elements)
    }

    pub fn generator_literals(&self) -> Vec<ElemLit> {
        self.generators()
            .into_iter()
            .map(|g| self.module.label(g).clone())
            .collect()
    }

    pub fn is_valid(&self) -> bool {
        let m = &*self.module;
        self.elements.contains(m.zero())
            && self.elements.iter().all(|a| {
                self.elements.iter().all(|b| self.elements.contains(m.add(a, b)))
                    && m.ring().elements().all(|r| self.elements.contains(m.act(r, a)))
            })
    }

    /// The submodule as a module in its own right.
    pub fn as_module(&self) -> Result<Arc<FiniteModule>> {
        let pedigree = ModuleDescriptor::sub(self.module.pedigree().clone(), self.generator_literals());
        build::submodule(&self.module, &self.elements, pedigree)
    }
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.module.same_tables(&other.module) && self.elements == other.elements
    }
}

impl Eq for Submodule {}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Submodule{:?}", self.elements)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::RingDescriptor;
    use crate::ring::Limits;

    fn module(d: ModuleDescriptor) -> Arc<FiniteModule> {
        build_module(&d, &Limits::default()).unwrap()
    }

    fn regular(n: u64) -> Arc<FiniteModule> {
        module(ModuleDescriptor::Regular(RingDescriptor::zmod(n)))
    }

    fn plane() -> Arc<FiniteModule> {
        let z2 = ModuleDescriptor::Regular(RingDescriptor::zmod(2));
        module(ModuleDescriptor::DirectSum(vec![z2.clone(), z2]))
    }

    #[test]
    fn lattices() {
        assert_eq!(regular(4).all_submodules().unwrap().len(), 3);
        assert_eq!(plane().all_submodules().unwrap().len(), 5);
        assert_eq!(regular(5).all_submodules().unwrap().len(), 2);
        let p = plane();
        let axis = p
            .submodule_span(&[p.resolve(&ElemLit::Tuple(vec![1.into(), 0.into()])).unwrap()])
            .unwrap();
        assert_eq!(axis.len(), 2);
    }

    #[test]
    fn annihilators() {
        let m = regular(4);
        assert_eq!(m.annihilator_in_ring(&[0]).unwrap(), m.ring().whole());
        assert!(m.annihilator().is_zero());
        let two = m.ring().ideal_span(&[2]).unwrap();
        assert_eq!(m.annihilator_in_module(&two).unwrap().elements(), vec![0, 2]);
        assert!(m.annihilator_in_module(&m.ring().whole()).unwrap().is_zero());
        assert_eq!(m.annihilator_in_module(&m.ring().zero_ideal()).unwrap(), m.whole());
    }

    #[test]
    fn essentiality() {
        let m = regular(4);
        let n = m.submodule_span(&[2]).unwrap();
        assert!(m.is_essential(&n, &m.whole()).unwrap().value);
        let m6 = regular(6);
        let n = m6.submodule_span(&[3]).unwrap();
        let v = m6.is_essential(&n, &m6.whole()).unwrap();
        assert_eq!(v.witness, Some(Witness::Element(2)));
        assert!(m6.is_essential(&n, &n).unwrap().value);
        assert_eq!(
            m6.is_essential(&m6.whole(), &n).unwrap_err(),
            Error::NotNested
        );
    }

    #[test]
    fn complements_and_uniformity() {
        let p = plane();
        let axis = p.submodule_span(&[2]).unwrap();
        assert_eq!(p.complements(&axis).unwrap().len(), 2);
        assert_eq!(p.complements(&p.zero_submodule()).unwrap(), vec![p.whole()]);
        let m = regular(4);
        assert!(m.complements(&m.submodule_span(&[2]).unwrap()).unwrap().is_empty());
        assert!(m.is_uniform().unwrap().value);
        assert!(!p.is_uniform().unwrap().value);
        assert_eq!(regular(1).is_uniform().unwrap_err(), Error::ZeroModule);
    }

    #[test]
    fn quotients() {
        let m = regular(4);
        let q = m.quotient_module(&m.submodule_span(&[2]).unwrap()).unwrap();
        assert_eq!(q.module.size(), 2);
        assert!(m.quotient_module(&m.whole()).unwrap().module.is_zero());
        assert_eq!(m.quotient_module(&m.zero_submodule()).unwrap().module.size(), 4);
    }
}

//! Finite commutative unital rings given by operation tables.

mod build;
pub mod iso;
mod structure;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::descriptor::{ElemLit, RingDescriptor};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice::{self, Action};

pub use build::{build_ring, Limits};
pub(crate) use build::{product as product_ring, quotient_by as quotient_ring_by};
pub use structure::{IdempotentDecomposition, QuotientRing, Spectrum, StructuralIdeals};

/// A finite commutative ring with identity. Elements are the indices
/// `0..size()` in the canonical order fixed by the constructor.
pub struct FiniteRing {
    size: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    one: usize,
    labels: Vec<ElemLit>,
    pedigree: RingDescriptor,
    ideals: OnceLock<Vec<ElemSet>>,
    memo: [OnceLock<Result<crate::verdict::Verdict>>; 4],
}

impl FiniteRing {
    /// Assembles a ring from its tables and checks every ring axiom.
    pub fn from_tables(
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
        labels: Vec<ElemLit>,
        pedigree: RingDescriptor,
    ) -> Result<Self> {
        let size = labels.len();
        if size == 0 || add.len() != size * size || mul.len() != size * size {
            return Err(Error::AxiomViolation("table dimensions".into()));
        }
        if add.iter().chain(mul.iter()).any(|&v| v >= size) || zero >= size || one >= size {
            return Err(Error::AxiomViolation("table entry out of range".into()));
        }
        let mut neg = vec![usize::MAX; size];
        for a in 0..size {
            for b in 0..size {
                if add[a * size + b] == zero {
                    neg[a] = b;
                    break;
                }
            }
        }
        let ring = Self {
            size,
            add,
            mul,
            neg,
            zero,
            one,
            labels,
            pedigree,
            ideals: OnceLock::new(),
            memo: Default::default(),
        };
        ring.check_axioms()?;
        Ok(ring)
    }

    /// Exhaustively verifies the commutative ring axioms.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.size;
        let fail = |what: &str| Err(Error::AxiomViolation(what.to_string()));
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return fail("zero is not an additive identity");
            }
            if self.neg[a] == usize::MAX {
                return fail("missing additive inverse");
            }
            if self.mul(a, self.one) != a {
                return fail("one is not a multiplicative identity");
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("addition is not commutative");
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("multiplication is not commutative");
                }
                let ab_sum = self.add(a, b);
                let ab_prod = self.mul(a, b);
                for c in 0..n {
                    if self.add(ab_sum, c) != self.add(a, self.add(b, c)) {
                        return fail("addition is not associative");
                    }
                    if self.mul(ab_prod, c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplication is not associative");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(ab_prod, self.mul(a, c)) {
                        return fail("multiplication does not distribute over addition");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn is_zero_ring(&self) -> bool {
        self.size == 1
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg[b])
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn pedigree(&self) -> &RingDescriptor {
        &self.pedigree
    }

    pub fn label(&self, x: usize) -> &ElemLit {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[ElemLit] {
        &self.labels
    }

    /// Resolves an element literal: an integer is a canonical index, a tuple
    /// must match an element's structural label.
    pub fn resolve(&self, lit: &ElemLit) -> Result<usize> {
        resolve_literal(&self.labels, lit)
    }

    /// True when both rings have identical tables.
    pub fn same_tables(&self, other: &FiniteRing) -> bool {
        std::ptr::eq(self, other)
            || (self.size == other.size
                && self.zero == other.zero
                && self.one == other.one
                && self.add == other.add
                && self.mul == other.mul)
    }

    pub(crate) fn add_table(&self) -> &[usize] {
        &self.add
    }

    pub(crate) fn mul_table(&self) -> &[usize] {
        &self.mul
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.size {
            Ok(())
        } else {
            Err(Error::InvalidElement(x.to_string()))
        }
    }

    /// All ideals in canonical order (smaller first), computed once.
    pub fn ideal_sets(&self) -> &[ElemSet] {
        self.ideals.get_or_init(|| {
            let cyclics = lattice::cyclic_spans(self);
            lattice::all_submodules(self, &cyclics, usize::MAX)
                .expect("an uncapped lattice computation cannot fail")
        })
    }

    pub fn ideals(self: &Arc<Self>) -> Vec<Ideal> {
        self.ideal_sets()
            .iter()
            .map(|s| Ideal::from_set(self, s.clone()))
            .collect()
    }

    pub fn ideal_span(self: &Arc<Self>, gens: &[usize]) -> Result<Ideal> {
        for &g in gens {
            self.check_element(g)?;
        }
        Ok(Ideal::from_set(self, lattice::span(&**self, gens.iter().copied())))
    }

    pub fn zero_ideal(self: &Arc<Self>) -> Ideal {
        Ideal::from_set(self, lattice::zero_set(&**self))
    }

    pub fn whole(self: &Arc<Self>) -> Ideal {
        Ideal::from_set(self, ElemSet::full(self.size))
    }

    /// `{ r | r·s = 0 for all s in S }`.
    pub fn annihilator_of_subset(self: &Arc<Self>, subset: &[usize]) -> Result<Ideal> {
        for &s in subset {
            self.check_element(s)?;
        }
        Ok(Ideal::from_set(self, self.annihilator_set(subset)))
    }

    pub(crate) fn annihilator_set(&self, subset: &[usize]) -> ElemSet {
        ElemSet::from_elems(
            self.size,
            self.elements()
                .filter(|&r| subset.iter().all(|&s| self.mul(r, s) == self.zero)),
        )
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    /// All `e` with `e·e = e`, ascending.
    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&e| self.is_idempotent(e)).collect()
    }

    pub fn is_unit(&self, x: usize) -> bool {
        self.elements().any(|y| self.mul(x, y) == self.one)
    }

    pub fn units(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.is_unit(x)).collect()
    }

    pub fn is_zero_divisor(&self, x: usize) -> bool {
        self.elements()
            .any(|y| y != self.zero && self.mul(x, y) == self.zero)
    }

    pub fn is_nilpotent(&self, x: usize) -> bool {
        let mut p = x;
        for _ in 0..=self.size {
            if p == self.zero {
                return true;
            }
            p = self.mul(p, x);
        }
        false
    }

    /// Additive order of an element.
    pub fn additive_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut acc = x;
        while acc != self.zero {
            acc = self.add(acc, x);
            k += 1;
        }
        k
    }

    /// True when `I + J = R`, decided by looking for `a ∈ I` with `1 - a ∈ J`.
    /// Caches the verdict of a decider in `slot`.
    pub(crate) fn memoized(
        &self,
        slot: usize,
        f: impl FnOnce() -> Result<crate::verdict::Verdict>,
    ) -> Result<crate::verdict::Verdict> {
        self.memo[slot].get_or_init(f).clone()
    }

    pub(crate) fn comaximal(&self, i: &ElemSet, j: &ElemSet) -> bool {
        i.iter().any(|a| j.contains(self.sub(self.one, a)))
    }

    pub(crate) fn ideal_set_sum(&self, i: &ElemSet, j: &ElemSet) -> ElemSet {
        lattice::sum(self, i, j)
    }
}

pub(crate) fn resolve_literal(labels: &[ElemLit], lit: &ElemLit) -> Result<usize> {
    match lit {
        ElemLit::Int(i) => {
            let i = *i as usize;
            if i < labels.len() {
                Ok(i)
            } else {
                Err(Error::InvalidElement(lit.to_string()))
            }
        }
        ElemLit::Tuple(_) => labels
            .iter()
            .position(|l| l == lit)
            .ok_or_else(|| Error::InvalidElement(lit.to_string())),
    }
}

impl Action for FiniteRing {
    fn scalars(&self) -> usize {
        self.size
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
        self.mul(r, x)
    }
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, size {})", self.pedigree, self.size)
    }
}

/// An ideal, stored as its full element set.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<FiniteRing>,
    elements: ElemSet,
}

impl Ideal {
    pub(crate) fn from_set(ring: &Arc<FiniteRing>, elements: ElemSet) -> Self {
        Self {
            ring: Arc::clone(ring),
            elements,
        }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn set(&self) -> &ElemSet {
        &self.elements
    }

    /// Elements in ascending canonical order.
    pub fn elements(&self) -> Vec<usize> {
        self.elements.to_vec()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(x)
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_proper(&self) -> bool {
        self.len() < self.ring.size()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.elements.is_subset(&other.elements)
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring.same_tables(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        Ok(Ideal::from_set(
            &self.ring,
            self.ring.ideal_set_sum(&self.elements, &other.elements),
        ))
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        Ok(Ideal::from_set(
            &self.ring,
            self.elements.intersection(&other.elements),
        ))
    }

    /// An irredundant generating set.
    pub fn generators(&self) -> Vec<usize> {
        lattice::generators(&*self.ring, &self.elements)
    }

    pub fn generator_literals(&self) -> Vec<ElemLit> {
        self.generators()
            .into_iter()
            .map(|g| self.ring.label(g).clone())
            .collect()
    }

    /// Checks that the element set is an ideal.
    pub fn is_valid(&self) -> bool {
        let r = &self.ring;
        self.elements.contains(r.zero())
            && self.elements.iter().all(|a| {
                self.elements.iter().all(|b| self.elements.contains(r.add(a, b)))
                    && r.elements().all(|s| self.elements.contains(r.mul(s, a)))
            })
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_tables(&other.ring) && self.elements == other.elements
    }
}

impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.elements)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zmod(n: u64) -> Arc<FiniteRing> {
        build_ring(&RingDescriptor::zmod(n), &Limits::default()).unwrap()
    }

    #[test]
    fn spans() {
        let z4 = zmod(4);
        assert_eq!(z4.ideal_span(&[]).unwrap().elements(), vec![0]);
        assert_eq!(z4.ideal_span(&[2]).unwrap().elements(), vec![0, 2]);
        let z6 = zmod(6);
        assert_eq!(z6.ideal_span(&[3]).unwrap().elements(), vec![0, 3]);
        assert!(matches!(z6.ideal_span(&[9]), Err(Error::InvalidElement(_))));
    }

    #[test]
    fn sums_and_intersections() {
        let z6 = zmod(6);
        let a = z6.ideal_span(&[2]).unwrap();
        let b = z6.ideal_span(&[3]).unwrap();
        assert_eq!(a.sum(&b).unwrap(), z6.whole());
        assert_eq!(a.intersect(&a).unwrap(), a);
        let z4 = zmod(4);
        let two = z4.ideal_span(&[2]).unwrap();
        assert_eq!(two.intersect(&z4.zero_ideal()).unwrap(), z4.zero_ideal());
        assert_eq!(a.sum(&two), Err(Error::RingMismatch));
    }

    #[test]
    fn annihilators_and_idempotents() {
        let z6 = zmod(6);
        assert_eq!(z6.annihilator_of_subset(&[0]).unwrap(), z6.whole());
        assert_eq!(z6.annihilator_of_subset(&[3]).unwrap().elements(), vec![0, 2, 4]);
        assert_eq!(z6.annihilator_of_subset(&[1]).unwrap(), z6.zero_ideal());
        assert_eq!(z6.idempotents(), vec![0, 1, 3, 4]);
        assert_eq!(zmod(4).idempotents(), vec![0, 1]);
        assert_eq!(zmod(7).idempotents(), vec![0, 1]);
    }

    #[test]
    fn bad_tables_are_rejected() {
        // addition table of Z/2 with a broken multiplication (1·1 = 0)
        let add = vec![0, 1, 1, 0];
        let mul = vec![0, 0, 0, 0];
        let labels = vec![ElemLit::Int(0), ElemLit::Int(1)];
        let err = FiniteRing::from_tables(add, mul, 0, 1, labels, RingDescriptor::zmod(2));
        assert!(matches!(err, Err(Error::AxiomViolation(_))));
    }
}

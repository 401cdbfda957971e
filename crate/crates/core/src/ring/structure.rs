use std::sync::Arc;

use serde::Serialize;

use super::build::{quotient_by, quotient_projection};
use super::{FiniteRing, Ideal};
use crate::descriptor::RingDescriptor;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice;
use crate::verdict::{Method, Verdict, Witness};

/// Nilradical, Jacobson radical and socle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralIdeals {
    pub nil: Ideal,
    pub jacobson: Ideal,
    pub socle: Ideal,
}

/// Prime, maximal and minimal prime ideals. For a finite ring all three lists
/// coincide; they are computed independently so that this can be checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub primes: Vec<Ideal>,
    pub maximal: Vec<Ideal>,
    pub minimal: Vec<Ideal>,
}

/// A quotient ring together with the projection from its parent.
#[derive(Debug, Clone)]
pub struct QuotientRing {
    pub ring: Arc<FiniteRing>,
    pub projection: Vec<usize>,
}

/// Complete set of primitive orthogonal idempotents, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdempotentDecomposition {
    pub idempotents: Vec<usize>,
}

impl FiniteRing {
    /// Maximal ideals, computed as the maximal proper members of the ideal lattice.
    pub fn maximal_ideals(self: &Arc<Self>) -> Vec<Ideal> {
        let sets = self.ideal_sets();
        let proper: Vec<&ElemSet> = sets.iter().filter(|s| s.len() < self.size()).collect();
        proper
            .iter()
            .filter(|s| !proper.iter().any(|t| t.len() > s.len() && s.is_subset(t)))
            .map(|s| Ideal::from_set(self, (*s).clone()))
            .collect()
    }

    pub fn nilradical(self: &Arc<Self>) -> Ideal {
        let set = ElemSet::from_elems(self.size(), self.elements().filter(|&x| self.is_nilpotent(x)));
        Ideal::from_set(self, set)
    }

    pub fn jacobson_radical(self: &Arc<Self>) -> Ideal {
        let set = self
            .maximal_ideals()
            .iter()
            .fold(ElemSet::full(self.size()), |acc, m| acc.intersection(m.set()));
        Ideal::from_set(self, set)
    }

    /// Minimal nonzero ideals.
    pub fn minimal_ideals(self: &Arc<Self>) -> Vec<Ideal> {
        let sets = self.ideal_sets();
        let nonzero: Vec<&ElemSet> = sets.iter().filter(|s| s.len() > 1).collect();
        nonzero
            .iter()
            .filter(|s| !nonzero.iter().any(|t| t.len() < s.len() && t.is_subset(s)))
            .map(|s| Ideal::from_set(self, (*s).clone()))
            .collect()
    }

    pub fn socle(self: &Arc<Self>) -> Ideal {
        let set = self
            .minimal_ideals()
            .iter()
            .fold(lattice::zero_set(&**self), |acc, m| {
                self.ideal_set_sum(&acc, m.set())
            });
        Ideal::from_set(self, set)
    }

    pub fn structural_ideals(self: &Arc<Self>) -> StructuralIdeals {
        StructuralIdeals {
            nil: self.nilradical(),
            jacobson: self.jacobson_radical(),
            socle: self.socle(),
        }
    }

    /// True when `p` is proper and `R/p` has no zero divisors.
    pub fn is_prime_ideal(&self, p: &ElemSet) -> bool {
        if p.len() == self.size() {
            return false;
        }
        let (reps, class) = lattice::cosets(self, p);
        let zero = class[self.zero()];
        reps.iter().all(|&a| {
            class[a] == zero
                || reps
                    .iter()
                    .all(|&b| class[b] == zero || class[self.mul(a, b)] != zero)
        })
    }

    pub fn prime_spectrum(self: &Arc<Self>) -> Result<Spectrum> {
        if self.is_zero_ring() {
            return Err(Error::ZeroRing);
        }
        let primes: Vec<Ideal> = self
            .ideal_sets()
            .iter()
            .filter(|s| self.is_prime_ideal(s))
            .map(|s| Ideal::from_set(self, s.clone()))
            .collect();
        let maximal = self.maximal_ideals();
        let minimal = primes
            .iter()
            .filter(|p| !primes.iter().any(|q| q.len() < p.len() && q.is_subset(p)))
            .cloned()
            .collect();
        Ok(Spectrum {
            primes,
            maximal,
            minimal,
        })
    }

    pub fn quotient(self: &Arc<Self>, ideal: &Ideal) -> Result<QuotientRing> {
        if !ideal.ring().same_tables(self) {
            return Err(Error::RingMismatch);
        }
        let pedigree = RingDescriptor::quotient(self.pedigree().clone(), ideal.generator_literals());
        let ring = quotient_by(self, ideal.set(), pedigree)?;
        Ok(QuotientRing {
            ring,
            projection: quotient_projection(self, ideal.set()),
        })
    }

    /// The corner ring `eR`, realized as `R/(1-e)R`.
    pub fn corner(self: &Arc<Self>, e: usize) -> Result<QuotientRing> {
        self.check_element(e)?;
        if !self.is_idempotent(e) {
            return Err(Error::NotIdempotent(e));
        }
        let complement = self.ideal_span(&[self.sub(self.one(), e)])?;
        self.quotient(&complement)
    }

    /// Nonzero idempotents with no nonzero idempotent strictly below them.
    pub fn peirce_decomposition(&self) -> IdempotentDecomposition {
        let nonzero: Vec<usize> = self
            .idempotents()
            .into_iter()
            .filter(|&e| e != self.zero())
            .collect();
        let idempotents = nonzero
            .iter()
            .copied()
            .filter(|&e| {
                !nonzero
                    .iter()
                    .any(|&f| f != e && self.mul(f, e) == f)
            })
            .collect();
        IdempotentDecomposition { idempotents }
    }

    /// Every non-zero-divisor is a unit, so the ring is its own total quotient ring.
    pub fn total_quotient_is_self(&self) -> Verdict {
        match self
            .elements()
            .find(|&x| !self.is_zero_divisor(x) && !self.is_unit(x))
        {
            Some(x) => Verdict::with(false, Witness::Element(x), Method::ElementScan),
            None => Verdict::yes(Method::ElementScan),
        }
    }
}

impl IdempotentDecomposition {
    /// Orthogonal, summing to one, each primitive.
    pub fn is_valid(&self, r: &FiniteRing) -> bool {
        let es = &self.idempotents;
        let orthogonal = es.iter().enumerate().all(|(i, &a)| {
            r.is_idempotent(a)
                && a != r.zero()
                && es[i + 1..].iter().all(|&b| r.mul(a, b) == r.zero())
        });
        let total = es.iter().fold(r.zero(), |acc, &e| r.add(acc, e));
        let primitive = es.iter().all(|&e| {
            r.idempotents()
                .into_iter()
                .all(|f| r.mul(f, e) != f || f == e || f == r.zero())
        });
        orthogonal && total == r.one() && primitive
    }

    /// The factor rings `e_i R` and the map `r ↦ (e_i r)_i` into their product.
    /// Returns true when that map is a ring isomorphism.
    pub fn verify_product_iso(&self, r: &Arc<FiniteRing>) -> Result<bool> {
        if self.idempotents.is_empty() {
            return Ok(r.is_zero_ring());
        }
        let corners = self
            .idempotents
            .iter()
            .map(|&e| r.corner(e))
            .collect::<Result<Vec<_>>>()?;
        let rings: Vec<Arc<FiniteRing>> = corners.iter().map(|c| Arc::clone(&c.ring)).collect();
        let limits = super::Limits {
            max_ring_size: r.size(),
            ..Default::default()
        };
        let product = super::build::product(&rings, &limits)?;
        let map: Vec<usize> = r
            .elements()
            .map(|x| {
                corners
                    .iter()
                    .fold(0, |acc, c| acc * c.ring.size() + c.projection[x])
            })
            .collect();
        Ok(super::iso::is_ring_isomorphism(r, &product, &map))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, Limits};

    fn ring(d: RingDescriptor) -> Arc<FiniteRing> {
        build_ring(&d, &Limits::default()).unwrap()
    }

    fn elems(i: &Ideal) -> Vec<usize> {
        i.elements()
    }

    #[test]
    fn radicals() {
        let z4 = ring(RingDescriptor::zmod(4));
        let s = z4.structural_ideals();
        assert_eq!(elems(&s.nil), vec![0, 2]);
        assert_eq!(elems(&s.jacobson), vec![0, 2]);
        assert_eq!(elems(&s.socle), vec![0, 2]);
        let z6 = ring(RingDescriptor::zmod(6));
        let s = z6.structural_ideals();
        assert_eq!(elems(&s.nil), vec![0]);
        assert_eq!(elems(&s.jacobson), vec![0]);
        assert_eq!(s.socle, z6.whole());
    }

    #[test]
    fn spectra() {
        let z6 = ring(RingDescriptor::zmod(6));
        let spec = z6.prime_spectrum().unwrap();
        let primes: Vec<Vec<usize>> = spec.primes.iter().map(elems).collect();
        assert_eq!(primes, vec![vec![0, 3], vec![0, 2, 4]]);
        assert_eq!(spec.primes, spec.maximal);
        assert_eq!(spec.primes, spec.minimal);
        let z4 = ring(RingDescriptor::zmod(4));
        assert_eq!(z4.prime_spectrum().unwrap().primes.len(), 1);
        assert_eq!(
            ring(RingDescriptor::zmod(1)).prime_spectrum().unwrap_err(),
            Error::ZeroRing
        );
    }

    #[test]
    fn quotients() {
        let z12 = ring(RingDescriptor::zmod(12));
        let q = z12.quotient(&z12.ideal_span(&[6]).unwrap()).unwrap();
        assert_eq!(q.ring.size(), 6);
        let z6 = ring(RingDescriptor::zmod(6));
        assert!(crate::ring::iso::find_ring_isomorphism(&q.ring, &z6).is_some());
        let q3 = z6.quotient(&z6.ideal_span(&[3]).unwrap()).unwrap();
        assert_eq!(q3.ring.size(), 3);
        assert!(q3.ring.elements().all(|x| x == 0 || !q3.ring.is_zero_divisor(x)));
        let whole = z6.quotient(&z6.whole()).unwrap();
        assert!(whole.ring.is_zero_ring());
    }

    #[test]
    fn peirce() {
        for (n, expect) in [(4, vec![1]), (6, vec![3, 4]), (30, vec![6, 10, 15])] {
            let r = ring(RingDescriptor::zmod(n));
            let d = r.peirce_decomposition();
            assert_eq!(d.idempotents, expect);
            assert!(d.is_valid(&r));
            assert!(d.verify_product_iso(&r).unwrap());
        }
        assert!(ring(RingDescriptor::zmod(1))
            .peirce_decomposition()
            .idempotents
            .is_empty());
    }

    #[test]
    fn total_quotient() {
        assert!(ring(RingDescriptor::zmod(4)).total_quotient_is_self().value);
        assert!(ring(RingDescriptor::zmod(6)).total_quotient_is_self().value);
    }
}

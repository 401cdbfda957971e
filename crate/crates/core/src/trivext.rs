//! Trivial extensions `R ⋉ M` with product `(a,x)(b,y) = (ab, ay + bx)`.

use std::sync::Arc;

use crate::descriptor::{ElemLit, ModuleDescriptor, RingDescriptor};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::module::{build_module, FiniteModule, Submodule};
use crate::ring::{iso, product_ring, FiniteRing, Ideal, Limits};
use crate::verdict::{Method, Verdict, Witness};

/// `A = R ⋉ M`. The pair `(a, x)` has index `a·|M| + x`.
#[derive(Debug, Clone)]
pub struct TrivialExtension {
    ring: Arc<FiniteRing>,
    base: Arc<FiniteRing>,
    module: Arc<FiniteModule>,
    embed_ring: Vec<usize>,
    embed_module: Vec<usize>,
}

pub fn trivial_extension(m: &Arc<FiniteModule>, limits: &Limits) -> Result<TrivialExtension> {
    let r = Arc::clone(m.ring());
    let (rn, mn) = (r.size(), m.size());
    limits.check_ring(rn.saturating_mul(mn))?;
    let n = rn * mn;
    let pair = |a: usize, x: usize| a * mn + x;
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in r.elements() {
        for x in m.elements() {
            for b in r.elements() {
                for y in m.elements() {
                    add.push(pair(r.add(a, b), m.add(x, y)));
                    mul.push(pair(r.mul(a, b), m.add(m.act(a, y), m.act(b, x))));
                }
            }
        }
    }
    let labels = r
        .elements()
        .flat_map(|a| {
            let r = &r;
            m.elements()
                .map(move |x| ElemLit::Tuple(vec![r.label(a).clone(), m.label(x).clone()]))
        })
        .collect();
    let pedigree = RingDescriptor::trivext(r.pedigree().clone(), m.pedigree().clone());
    let ring = Arc::new(FiniteRing::from_tables(
        add,
        mul,
        pair(r.zero(), m.zero()),
        pair(r.one(), m.zero()),
        labels,
        pedigree,
    )?);
    let embed_ring: Vec<usize> = r.elements().map(|a| pair(a, m.zero())).collect();
    let embed_module: Vec<usize> = m.elements().map(|x| pair(r.zero(), x)).collect();
    let t = TrivialExtension {
        ring,
        base: r,
        module: Arc::clone(m),
        embed_ring,
        embed_module,
    };
    t.check_embeddings()?;
    Ok(t)
}

impl TrivialExtension {
    /// Rebuilds the trivial-extension structure of a ring from its pedigree.
    pub fn from_ring(ring: &Arc<FiniteRing>, limits: &Limits) -> Result<Self> {
        let RingDescriptor::TrivExt { module, .. } = ring.pedigree() else {
            return Err(Error::MalformedDescriptor(format!(
                "{} is not a trivial extension",
                ring.pedigree()
            )));
        };
        let m = build_module(module, limits)?;
        let t = trivial_extension(&m, limits)?;
        if !t.ring.same_tables(ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Self {
            ring: Arc::clone(ring),
            ..t
        })
    }

    fn check_embeddings(&self) -> Result<()> {
        let (r, m, a) = (&self.base, &self.module, &self.ring);
        let ring_hom = r.elements().all(|x| {
            r.elements().all(|y| {
                self.embed_ring[r.add(x, y)] == a.add(self.embed_ring[x], self.embed_ring[y])
                    && self.embed_ring[r.mul(x, y)] == a.mul(self.embed_ring[x], self.embed_ring[y])
            })
        }) && self.embed_ring[r.one()] == a.one();
        let square_zero = m.elements().all(|x| {
            m.elements().all(|y| {
                self.embed_module[m.add(x, y)] == a.add(self.embed_module[x], self.embed_module[y])
                    && a.mul(self.embed_module[x], self.embed_module[y]) == a.zero()
            })
        });
        if ring_hom && square_zero {
            Ok(())
        } else {
            Err(Error::AxiomViolation("trivial extension embeddings".into()))
        }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn base(&self) -> &Arc<FiniteRing> {
        &self.base
    }

    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
    }

    pub fn embed_ring(&self) -> &[usize] {
        &self.embed_ring
    }

    pub fn embed_module(&self) -> &[usize] {
        &self.embed_module
    }

    pub fn pair(&self, a: usize, x: usize) -> usize {
        a * self.module.size() + x
    }

    pub fn components(&self, z: usize) -> (usize, usize) {
        (z / self.module.size(), z % self.module.size())
    }

    /// Idempotents of `A` are exactly the pairs `(e, 0)`.
    pub fn idempotents_are_pairs(&self) -> bool {
        let expect: Vec<usize> = self
            .base
            .idempotents()
            .into_iter()
            .map(|e| self.pair(e, self.module.zero()))
            .collect();
        self.ring.idempotents() == expect
    }

    fn pair_set(&self, i: &ElemSet, n: &ElemSet) -> ElemSet {
        ElemSet::from_elems(
            self.ring.size(),
            i.iter().flat_map(|a| n.iter().map(move |x| (a, x))).map(|(a, x)| self.pair(a, x)),
        )
    }

    fn check_pair(&self, i: &Ideal, n: &Submodule) -> Result<()> {
        if !i.ring().same_tables(&self.base) || !n.module().same_tables(&self.module) {
            return Err(Error::RingMismatch);
        }
        let m = &self.module;
        for r in i.set().iter() {
            for x in m.elements() {
                if !n.contains(m.act(r, x)) {
                    return Err(Error::ContainmentViolation(format!(
                        "{}·{} is not in the submodule",
                        self.base.label(r),
                        m.label(x)
                    )));
                }
            }
        }
        Ok(())
    }

    /// The ideal `(I, N) = {(a, x) | a ∈ I, x ∈ N}`, defined when `I·M ⊆ N`.
    pub fn pair_ideal(&self, i: &Ideal, n: &Submodule) -> Result<Ideal> {
        self.check_pair(i, n)?;
        Ok(Ideal::from_set(&self.ring, self.pair_set(i.set(), n.set())))
    }

    /// Compares `Ann_A((I, N))`, computed directly, with
    /// `(Ann_R(I) ∩ Ann_R(N), Ann_M(I))`. The witness on false is the least
    /// element of `A` on which they differ.
    pub fn ann_pair_formula_check(&self, i: &Ideal, n: &Submodule) -> Result<Verdict> {
        let ideal = self.pair_ideal(i, n)?;
        let direct = self.ring.annihilator_set(&ideal.elements());
        let ann_i = self.base.annihilator_set(&i.elements());
        let ann_n = n.annihilator();
        let ann_m_i = self.module.annihilator_in_module(i)?;
        let formula = self.pair_set(&ann_i.intersection(ann_n.set()), ann_m_i.set());
        Ok(
            match self.ring.elements().find(|&z| direct.contains(z) != formula.contains(z)) {
                Some(z) => Verdict::with(false, Witness::Element(z), Method::Annihilator),
                None => Verdict::yes(Method::Annihilator),
            },
        )
    }

    /// Given an idempotent `e` with `Ann_R(M) = eR`, verifies the explicit
    /// isomorphism `A → eR × ((1-e)R ⋉ (1-e)M)`, and that `(1-e)M` is faithful
    /// over `(1-e)R`. Here `eR` is realized as `R/(1-e)R`, `(1-e)R` as `R/eR`,
    /// and `(1-e)M = M` regarded over `R/eR`.
    pub fn splitting_iso(&self, e: usize) -> Result<Verdict> {
        let r = &self.base;
        let m = &self.module;
        r.check_element(e)?;
        if !r.is_idempotent(e) {
            return Err(Error::NotIdempotent(e));
        }
        let ann = m.annihilator();
        let er = r.ideal_span(&[e])?;
        if ann != er {
            return Err(Error::AnnihilatorMismatch(format!(
                "Ann(M) has {} elements, eR has {}",
                ann.len(),
                er.len()
            )));
        }
        let limits = Limits {
            max_ring_size: self.ring.size(),
            max_module_size: m.size(),
            max_submodule_count: m.lattice_cap(),
        };
        let corner = r.corner(e)?;
        let f = r.sub(r.one(), e);
        let rest = r.corner(f)?;
        let over = crate::module::over_quotient(
            m,
            er.set(),
            ModuleDescriptor::overquot(m.pedigree().clone(), vec![r.label(e).clone()]),
            &limits,
        )?;
        if !over.ring().same_tables(&rest.ring) {
            return Err(Error::RingMismatch);
        }
        let faithful = over.is_faithful();
        let inner = trivial_extension(&over, &limits)?;
        let target = product_ring(&[Arc::clone(&corner.ring), Arc::clone(inner.ring())], &limits)?;
        let map: Vec<usize> = self
            .ring
            .elements()
            .map(|z| {
                let (a, x) = self.components(z);
                corner.projection[a] * inner.ring().size() + inner.pair(rest.projection[a], m.act(f, x))
            })
            .collect();
        let ok = iso::is_ring_isomorphism(&self.ring, &target, &map);
        Ok(Verdict::with(ok && faithful, Witness::Map(map), Method::ExplicitMap))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::RingDescriptor;

    fn ext(m: ModuleDescriptor) -> TrivialExtension {
        let lim = Limits::default();
        trivial_extension(&build_module(&m, &lim).unwrap(), &lim).unwrap()
    }

    fn z6_over_z2() -> TrivialExtension {
        ext(ModuleDescriptor::cyclic(RingDescriptor::zmod(6), vec![2.into()]))
    }

    #[test]
    fn basic_shape() {
        let t = ext(ModuleDescriptor::Regular(RingDescriptor::zmod(2)));
        assert_eq!(t.ring().size(), 4);
        assert!(t.idempotents_are_pairs());
        let minimal = t.ring().minimal_ideals();
        assert_eq!(minimal.len(), 1);
        assert_eq!(minimal[0].elements(), vec![0, 1]);
        let t = z6_over_z2();
        assert_eq!(t.ring().size(), 12);
        assert!(t.idempotents_are_pairs());
    }

    #[test]
    fn pair_ideals() {
        let t = z6_over_z2();
        let r = t.base();
        let m = t.module();
        let i = r.ideal_span(&[2]).unwrap();
        let zero = m.zero_submodule();
        assert_eq!(t.pair_ideal(&i, &zero).unwrap().len(), 3);
        assert_eq!(t.pair_ideal(&r.whole(), &m.whole()).unwrap(), t.ring().whole());
        assert_eq!(t.pair_ideal(&r.zero_ideal(), &m.whole()).unwrap().len(), 2);
        assert!(matches!(
            t.pair_ideal(&r.whole(), &zero),
            Err(Error::ContainmentViolation(_))
        ));
        for i in r.ideals() {
            for n in m.all_submodules().unwrap() {
                if let Ok(v) = t.ann_pair_formula_check(&i, &n) {
                    assert!(v.value);
                }
            }
        }
    }

    #[test]
    fn splitting() {
        let t = z6_over_z2();
        let v = t.splitting_iso(4).unwrap();
        assert!(v.value);
        assert_eq!(t.splitting_iso(2).unwrap_err(), Error::NotIdempotent(2));
        assert!(matches!(t.splitting_iso(3), Err(Error::AnnihilatorMismatch(_))));
        let faithful = ext(ModuleDescriptor::Regular(RingDescriptor::zmod(2)));
        assert!(faithful.splitting_iso(0).unwrap().value);
        assert!(matches!(faithful.splitting_iso(1), Err(Error::AnnihilatorMismatch(_))));
    }
}

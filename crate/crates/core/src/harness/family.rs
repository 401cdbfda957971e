//! Deterministic instance families.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::descriptor::{ElemLit, ModuleDescriptor, RingDescriptor};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice;
use crate::module::{direct_sum, quotient_by, regular, FiniteModule};
use crate::ring::{build_ring, iso, quotient_ring_by, FiniteRing, Limits};
use crate::trivext::{trivial_extension, TrivialExtension};
use crate::zring::all_abelian_groups;

/// Bounds of the generated family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FamilyConfig {
    pub max_ring_size: usize,
    pub max_module_size: usize,
    pub max_submodule_count: usize,
    pub prime_set: Vec<u64>,
    pub max_polyquot_degree: u32,
    pub max_product_arity: usize,
    pub include_trivext: bool,
    /// Reserved for randomized search orders; the family is currently
    /// enumerated exhaustively, so it has no effect.
    pub seed: u64,
}

impl Default for FamilyConfig {
    fn default() -> Self {
        Self {
            max_ring_size: 64,
            max_module_size: 16,
            max_submodule_count: 4096,
            prime_set: vec![2, 3, 5],
            max_polyquot_degree: 3,
            max_product_arity: 3,
            include_trivext: true,
            seed: 0,
        }
    }
}

impl FamilyConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::OutOfRange(format!("{what} must be positive")));
        if self.max_ring_size == 0 {
            return bad("max_ring_size");
        }
        if self.max_module_size == 0 {
            return bad("max_module_size");
        }
        if self.max_submodule_count == 0 {
            return bad("max_submodule_count");
        }
        if self.max_polyquot_degree == 0 {
            return bad("max_polyquot_degree");
        }
        if self.max_product_arity == 0 {
            return bad("max_product_arity");
        }
        if let Some(&p) = self.prime_set.iter().find(|&&p| crate::zring::factorize(p) != [(p, 1)]) {
            return Err(Error::OutOfRange(format!("{p} in prime_set is not prime")));
        }
        Ok(())
    }

    /// Limits for family members.
    pub fn limits(&self) -> Limits {
        Limits {
            max_ring_size: self.max_ring_size,
            max_module_size: self.max_module_size,
            max_submodule_count: self.max_submodule_count,
        }
    }

    /// Limits for objects derived from family members inside clause
    /// evaluations (sums with annihilators, quotient rings, replays).
    pub fn derived_limits(&self) -> Limits {
        let big = self.max_ring_size.max(self.max_module_size);
        Limits {
            max_ring_size: big,
            max_module_size: big.saturating_mul(big),
            max_submodule_count: self.max_submodule_count,
        }
    }
}

/// Rings, their modules, trivial extensions and abelian groups, in a fixed order.
pub struct Family {
    config: FamilyConfig,
    rings: Vec<Arc<FiniteRing>>,
    modules: Vec<Vec<Arc<FiniteModule>>>,
    trivexts: Vec<Arc<TrivialExtension>>,
    groups: Vec<Vec<u64>>,
}

type TableKey = (Vec<usize>, Vec<usize>);

fn ring_key(r: &FiniteRing) -> TableKey {
    (r.add_table().to_vec(), r.mul_table().to_vec())
}

fn push_ring(out: &mut Vec<Arc<FiniteRing>>, seen: &mut HashSet<TableKey>, r: Arc<FiniteRing>) {
    if seen.insert(ring_key(&r)) {
        out.push(r);
    }
}

/// Rings other than trivial extensions: residue rings, truncated polynomial
/// rings, products of these and their quotients. Duplicates by table are dropped.
fn base_rings(cfg: &FamilyConfig) -> Result<Vec<Arc<FiniteRing>>> {
    let limits = cfg.limits();
    let max = cfg.max_ring_size as u64;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for n in 1..=max {
        push_ring(&mut out, &mut seen, build_ring(&RingDescriptor::zmod(n), &limits)?);
    }
    for &p in &cfg.prime_set {
        for k in 1..=cfg.max_polyquot_degree {
            match p.checked_pow(k) {
                Some(q) if q <= max => {
                    let mut coeffs = vec![0; k as usize];
                    coeffs.push(1);
                    let d = RingDescriptor::PolyQuot { p, coeffs };
                    push_ring(&mut out, &mut seen, build_ring(&d, &limits)?);
                }
                _ => break,
            }
        }
    }
    let atoms: Vec<Arc<FiniteRing>> = out.iter().filter(|r| r.size() >= 2).cloned().collect();
    let mut products = Vec::new();
    let arities = if atoms.is_empty() { 2..=1 } else { 2..=cfg.max_product_arity };
    for arity in arities {
        let mut idx = vec![0usize; arity];
        'combos: loop {
            let size = idx.iter().try_fold(1usize, |acc, &i| acc.checked_mul(atoms[i].size()));
            if size.is_some_and(|s| s <= cfg.max_ring_size) {
                let parts: Vec<Arc<FiniteRing>> = idx.iter().map(|&i| Arc::clone(&atoms[i])).collect();
                products.push(crate::ring::product_ring(&parts, &limits)?);
            }
            // next nondecreasing index tuple
            let mut pos = arity;
            loop {
                if pos == 0 {
                    break 'combos;
                }
                pos -= 1;
                if idx[pos] + 1 < atoms.len() {
                    let v = idx[pos] + 1;
                    for slot in &mut idx[pos..] {
                        *slot = v;
                    }
                    break;
                }
            }
            if atoms.is_empty() {
                break;
            }
        }
    }
    for r in products {
        push_ring(&mut out, &mut seen, r);
    }
    let bases = out.clone();
    for r in &bases {
        for i in r.ideal_sets() {
            if i.len() > 1 && i.len() < r.size() {
                let gens = literals(r, i);
                let q = quotient_ring_by(r, i, RingDescriptor::quotient(r.pedigree().clone(), gens))?;
                push_ring(&mut out, &mut seen, q);
            }
        }
    }
    Ok(out)
}

fn literals(r: &FiniteRing, s: &ElemSet) -> Vec<ElemLit> {
    lattice::generators(r, s).into_iter().map(|x| r.label(x).clone()).collect()
}

fn module_literals(m: &FiniteModule, s: &ElemSet) -> Vec<ElemLit> {
    lattice::generators(m, s).into_iter().map(|x| m.label(x).clone()).collect()
}

/// `R/I` as a cyclic module, with the same tables a `cyclic(..)` descriptor builds.
pub(crate) fn cyclic_module(r: &Arc<FiniteRing>, ideal: &ElemSet, limits: &Limits) -> Result<Arc<FiniteModule>> {
    let reg = regular(r, &Limits {
        max_module_size: r.size(),
        ..*limits
    })?;
    let pedigree = ModuleDescriptor::cyclic(r.pedigree().clone(), literals(r, ideal));
    Ok(quotient_by(&reg, ideal, pedigree)?.0)
}

/// The module family of one ring: the regular module, cyclic modules `R/I`,
/// direct sums of two of these, and every submodule and quotient of those,
/// all within the module size bound. The zero module is left out.
pub fn enumerate_modules(r: &Arc<FiniteRing>, cfg: &FamilyConfig) -> Result<Vec<Arc<FiniteModule>>> {
    let limits = cfg.limits();
    let bound = cfg.max_module_size;
    if r.is_zero_ring() {
        return Ok(Vec::new());
    }
    let mut seen: HashSet<TableKey> = HashSet::new();
    let mut out: Vec<Arc<FiniteModule>> = Vec::new();
    let mut push = |m: Arc<FiniteModule>, out: &mut Vec<Arc<FiniteModule>>| {
        if !m.is_zero() && seen.insert((m.add_table().to_vec(), m.act_table().to_vec())) {
            out.push(m);
        }
    };
    // R/0 is the regular module itself
    let mut cyclics: Vec<Arc<FiniteModule>> = Vec::new();
    if r.size() <= bound {
        cyclics.push(regular(r, &limits)?);
    }
    for i in r.ideal_sets() {
        if i.len() > 1 && i.len() < r.size() && r.size() / i.len() <= bound {
            cyclics.push(cyclic_module(r, i, &limits)?);
        }
    }
    for m in &cyclics {
        push(Arc::clone(m), &mut out);
    }
    for (i, a) in cyclics.iter().enumerate() {
        for b in &cyclics[i..] {
            if a.size() * b.size() <= bound {
                push(direct_sum(&[Arc::clone(a), Arc::clone(b)], &limits)?, &mut out);
            }
        }
    }
    let seeds = out.clone();
    for m in &seeds {
        let subs = match m.all_submodules() {
            Ok(s) => s,
            Err(e) if e.is_resource_bound() => continue,
            Err(e) => return Err(e),
        };
        for n in &subs {
            if n.len() > 1 && n.len() < m.size() {
                push(n.as_module()?, &mut out);
            }
        }
        for n in &subs {
            if n.len() > 1 && n.len() < m.size() {
                let pedigree = ModuleDescriptor::quotmod(m.pedigree().clone(), module_literals(m, n.set()));
                push(quotient_by(m, n.set(), pedigree)?.0, &mut out);
            }
        }
    }
    Ok(out)
}

/// The ring family: [`base_rings`] followed, when enabled, by trivial
/// extensions `R ⋉ M` of family rings by family modules. Trivial extensions
/// are closed under iteration within the size bound and are dropped when
/// isomorphic to a ring already present.
pub fn enumerate_rings(cfg: &FamilyConfig) -> Result<Vec<Arc<FiniteRing>>> {
    Ok(Family::new(cfg)?.rings)
}

impl Family {
    pub fn new(cfg: &FamilyConfig) -> Result<Self> {
        cfg.validate()?;
        let mut rings = base_rings(cfg)?;
        let mut modules: Vec<Vec<Arc<FiniteModule>>> = rings
            .par_iter()
            .map(|r| enumerate_modules(r, cfg))
            .collect::<Result<_>>()?;
        let mut trivexts = Vec::new();
        if cfg.include_trivext {
            let limits = cfg.limits();
            let mut signatures: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
            let sigs: Vec<Vec<usize>> = rings.par_iter().map(|r| iso::signature(r)).collect();
            for (i, s) in sigs.into_iter().enumerate() {
                signatures.entry(s).or_default().push(i);
            }
            let mut start = 0;
            while start < rings.len() {
                let end = rings.len();
                let pairs: Vec<(usize, Arc<FiniteModule>)> = (start..end)
                    .flat_map(|i| {
                        let n = rings[i].size();
                        modules[i]
                            .iter()
                            .filter(move |m| n * m.size() <= cfg.max_ring_size)
                            .map(move |m| (i, Arc::clone(m)))
                    })
                    .collect();
                let built: Vec<Arc<TrivialExtension>> = pairs
                    .par_iter()
                    .map(|(_, m)| trivial_extension(m, &limits).map(Arc::new))
                    .collect::<Result<_>>()?;
                let sigs: Vec<Vec<usize>> = built.par_iter().map(|t| iso::signature(t.ring())).collect();
                let mut fresh = Vec::new();
                for (t, sig) in built.iter().zip(sigs) {
                    let known = signatures.get(&sig).is_some_and(|ids| {
                        ids.iter()
                            .any(|&j| iso::find_ring_isomorphism(t.ring(), &rings[j]).is_some())
                    });
                    if !known {
                        signatures.entry(sig).or_default().push(rings.len());
                        rings.push(Arc::clone(t.ring()));
                        fresh.push(Arc::clone(t.ring()));
                    }
                }
                trivexts.extend(built);
                let more: Vec<Vec<Arc<FiniteModule>>> = fresh
                    .par_iter()
                    .map(|r| enumerate_modules(r, cfg))
                    .collect::<Result<_>>()?;
                modules.extend(more);
                start = end;
            }
        }
        let groups = all_abelian_groups(cfg.max_ring_size as u64);
        Ok(Self {
            config: cfg.clone(),
            rings,
            modules,
            trivexts,
            groups,
        })
    }

    pub fn config(&self) -> &FamilyConfig {
        &self.config
    }

    pub fn rings(&self) -> &[Arc<FiniteRing>] {
        &self.rings
    }

    /// Modules of the `i`-th ring.
    pub fn modules_of(&self, i: usize) -> &[Arc<FiniteModule>] {
        &self.modules[i]
    }

    pub fn modules(&self) -> impl Iterator<Item = &Arc<FiniteModule>> {
        self.modules.iter().flatten()
    }

    pub fn trivexts(&self) -> &[Arc<TrivialExtension>] {
        &self.trivexts
    }

    /// Invariant-factor chains of every abelian group of order at most `max_ring_size`.
    pub fn groups(&self) -> &[Vec<u64>] {
        &self.groups
    }

    pub fn module_count(&self) -> usize {
        self.modules.iter().map(Vec::len).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(n: usize) -> FamilyConfig {
        FamilyConfig {
            max_ring_size: n,
            ..FamilyConfig::default()
        }
    }

    #[test]
    fn size_four_family() {
        let rings = enumerate_rings(&small(4)).unwrap();
        let names: Vec<String> = rings.iter().map(|r| r.pedigree().to_string()).collect();
        assert_eq!(
            names,
            [
                "zmod 1",
                "zmod 2",
                "zmod 3",
                "zmod 4",
                "polyquot(2, [0, 0, 1])",
                "product(zmod 2, zmod 2)"
            ]
        );
    }

    #[test]
    fn no_primes_means_no_polynomials() {
        let cfg = FamilyConfig {
            prime_set: vec![],
            ..small(8)
        };
        let rings = enumerate_rings(&cfg).unwrap();
        assert!(rings.iter().all(|r| !r.pedigree().to_string().contains("polyquot")));
    }

    #[test]
    fn modules_of_z4() {
        let cfg = FamilyConfig::default();
        let lim = cfg.limits();
        let r = build_ring(&RingDescriptor::zmod(4), &lim).unwrap();
        let ms = enumerate_modules(&r, &cfg).unwrap();
        assert_eq!(ms[0].pedigree(), &ModuleDescriptor::Regular(RingDescriptor::zmod(4)));
        let mut sizes: Vec<usize> = ms.iter().map(|m| m.size()).collect();
        sizes.sort_unstable();
        sizes.dedup();
        assert_eq!(sizes, [2, 4, 8, 16]);
    }

    #[test]
    fn rejects_bad_config() {
        assert!(FamilyConfig { max_module_size: 0, ..small(4) }.validate().is_err());
        assert!(FamilyConfig { prime_set: vec![4], ..small(4) }.validate().is_err());
    }
}

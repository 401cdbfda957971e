//! Finite abelian groups as modules over the integers.
//!
//! The integers are never materialized. An ideal `nZ` is its generator `n`,
//! sums are gcds, intersections are lcms, and the only idempotents are 0 and 1.
//! Subgroup lattices come from the realization over `Z/exponent`, which has
//! the same subgroups.

use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;

use crate::descriptor::ModuleDescriptor;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::module::{build_module, FiniteModule};
use crate::ring::Limits;
use crate::verdict::{Method, Verdict, Witness};

/// The ideal `nZ`; `0` is the zero ideal and `1` the whole ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntegerIdeal(pub u64);

impl IntegerIdeal {
    pub fn generator(self) -> u64 {
        self.0
    }

    pub fn is_whole(self) -> bool {
        self.0 == 1
    }
}

pub fn z_ideal_sum(a: IntegerIdeal, b: IntegerIdeal) -> IntegerIdeal {
    IntegerIdeal(a.0.gcd(&b.0))
}

pub fn z_ideal_intersect(a: IntegerIdeal, b: IntegerIdeal) -> IntegerIdeal {
    if a.0 == 0 || b.0 == 0 {
        IntegerIdeal(0)
    } else {
        IntegerIdeal(a.0.lcm(&b.0))
    }
}

/// Prime factorization as ascending `(p, k)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut k = 0;
        while n % p == 0 {
            n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// A finite abelian group `Z/d_1 ⊕ ... ⊕ Z/d_k`.
#[derive(Debug, Clone)]
pub struct ZModule {
    orders: Vec<u64>,
    invariant_factors: Vec<u64>,
    carrier: Arc<FiniteModule>,
}

impl ZModule {
    /// `orders` need not form a divisibility chain. A zero order would be a
    /// free summand, which is out of range.
    pub fn new(orders: &[u64], limits: &Limits) -> Result<Self> {
        if orders.contains(&0) {
            return Err(Error::OutOfRange("free abelian summands".into()));
        }
        let carrier = build_module(&ModuleDescriptor::ZAbelian(orders.to_vec()), limits)?;
        Ok(Self {
            orders: orders.to_vec(),
            invariant_factors: invariant_factors(orders),
            carrier,
        })
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// `d_1 | d_2 | ... | d_k`, each at least 2.
    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn exponent(&self) -> u64 {
        self.invariant_factors.last().copied().unwrap_or(1)
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    /// The realization over `Z/exponent`.
    pub fn carrier(&self) -> &Arc<FiniteModule> {
        &self.carrier
    }

    pub fn descriptor(&self) -> ModuleDescriptor {
        ModuleDescriptor::ZAbelian(self.orders.clone())
    }

    /// Additive order of an element.
    pub fn order(&self, x: usize) -> u64 {
        let m = &self.carrier;
        let mut y = x;
        let mut k = 1;
        while y != m.zero() {
            y = m.add(y, x);
            k += 1;
        }
        k
    }

    fn ann(&self, s: &ElemSet) -> IntegerIdeal {
        IntegerIdeal(s.iter().fold(1, |acc, x| acc.lcm(&self.order(x))))
    }

    fn require_nonzero(&self) -> Result<()> {
        if self.carrier.is_zero() {
            Err(Error::ZeroModule)
        } else {
            Ok(())
        }
    }

    fn subgroups(&self) -> Result<Vec<ElemSet>> {
        Ok(self
            .carrier
            .all_submodules()?
            .into_iter()
            .map(|s| s.set().clone())
            .collect())
    }
}

/// Invariant factors from the primary decomposition of each order.
pub fn invariant_factors(orders: &[u64]) -> Vec<u64> {
    let mut powers: std::collections::BTreeMap<u64, Vec<u32>> = Default::default();
    for &d in orders {
        for (p, k) in factorize(d) {
            powers.entry(p).or_default().push(k);
        }
    }
    let len = powers.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1u64; len];
    for (p, mut ks) in powers {
        ks.sort_unstable();
        // largest exponents go to the last factors
        for (slot, &k) in factors[len - ks.len()..].iter_mut().zip(&ks) {
            *slot *= p.pow(k);
        }
    }
    factors
}

/// `Ann_Z(S)`: the lcm of the element orders, `Z` for the empty set.
pub fn z_annihilator(m: &ZModule, subset: &[usize]) -> Result<IntegerIdeal> {
    for &x in subset {
        m.carrier.check_element(x)?;
    }
    Ok(m.ann(&ElemSet::from_elems(m.size(), subset.iter().copied())))
}

pub fn z_is_weakly_in(m: &ZModule) -> Result<Verdict> {
    m.require_nonzero()?;
    let subs = m.subgroups()?;
    let anns: Vec<IntegerIdeal> = subs.iter().map(|s| m.ann(s)).collect();
    for (i, n) in subs.iter().enumerate().skip(1) {
        for (j, l) in subs.iter().enumerate().skip(i + 1) {
            if n.intersection_len(l) == 1 && !z_ideal_sum(anns[i], anns[j]).is_whole() {
                return Ok(Verdict::with(
                    false,
                    Witness::SubmodulePair(n.to_vec(), l.to_vec()),
                    Method::IntegerArithmetic,
                ));
            }
        }
    }
    Ok(Verdict::yes(Method::IntegerArithmetic))
}

fn essential(m: &ZModule, n: &ElemSet, l: &ElemSet) -> bool {
    let c = &m.carrier;
    l.iter()
        .filter(|&x| x != c.zero())
        .all(|x| crate::lattice::span(&**c, [x]).intersection_len(n) > 1)
}

/// With idempotents 0 and 1 only, every submodule must be essential in
/// `0·M = 0` or in `M`.
pub fn z_is_strongly_cs(m: &ZModule) -> Result<Verdict> {
    m.require_nonzero()?;
    let full = ElemSet::full(m.size());
    for n in m.subgroups()? {
        if n.len() > 1 && !essential(m, &n, &full) {
            return Ok(Verdict::with(false, Witness::Submodule(n.to_vec()), Method::Idempotent));
        }
    }
    Ok(Verdict::yes(Method::Idempotent))
}

/// Subgroups over `Z` and over `Z/exponent` coincide, and so do summands.
pub fn z_is_cs(m: &ZModule) -> Result<Verdict> {
    m.require_nonzero()?;
    crate::deciders::is_cs_module(&m.carrier)
}

pub fn z_is_uniform(m: &ZModule) -> Result<Verdict> {
    m.require_nonzero()?;
    crate::deciders::is_uniform(&m.carrier)
}

/// `Ann(N ∩ L) = Ann(N) + Ann(L)`, i.e. `exp(N ∩ L) = gcd(exp N, exp L)`.
pub fn z_is_sin(m: &ZModule) -> Result<Verdict> {
    m.require_nonzero()?;
    let subs = m.subgroups()?;
    for (i, n) in subs.iter().enumerate() {
        for l in &subs[i + 1..] {
            if m.ann(&n.intersection(l)) != z_ideal_sum(m.ann(n), m.ann(l)) {
                return Ok(Verdict::with(
                    false,
                    Witness::SubmodulePair(n.to_vec(), l.to_vec()),
                    Method::IntegerArithmetic,
                ));
            }
        }
    }
    Ok(Verdict::yes(Method::IntegerArithmetic))
}

/// Idempotents lift modulo `nZ` iff every idempotent residue is 0 or 1.
pub fn z_idempotent_lift(n: u64) -> Result<Verdict> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("lifting modulo {n}Z needs n ≥ 2")));
    }
    let bad = (2..n).find(|&r| (r as u128 * r as u128) % n as u128 == r as u128);
    Ok(match bad {
        Some(r) => Verdict::with(false, Witness::Integer(r), Method::IntegerArithmetic),
        None => Verdict::yes(Method::IntegerArithmetic),
    })
}

/// The integers are not clean: the witness is the least nonnegative integer
/// that is not a unit (±1) plus an idempotent (0 or 1).
pub fn z_is_clean() -> Verdict {
    let clean = |n: i64| [0i64, 1].iter().any(|e| (n - e).abs() == 1);
    let bad = (0..).find(|&n| !clean(n)).expect("3 is not clean");
    Verdict::with(false, Witness::Integer(bad as u64), Method::IntegerArithmetic)
}

/// Finite torsion shadow of the Dedekind classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DedekindClass {
    /// `(p, n)` when `M ≅ Z/p^n`.
    pub prime_power_cyclic: Option<(u64, u32)>,
    /// The primary components `(p_i, n_i)` when the primes are pairwise distinct.
    pub coprime_primary_sum: Option<Vec<(u64, u32)>>,
}

impl DedekindClass {
    pub fn is_prime_power_cyclic(&self) -> bool {
        self.prime_power_cyclic.is_some()
    }

    pub fn is_coprime_primary_sum(&self) -> bool {
        self.coprime_primary_sum.is_some()
    }
}

pub fn classify_dedekind(m: &ZModule) -> Result<DedekindClass> {
    m.require_nonzero()?;
    let mut primary: Vec<(u64, u32)> = m
        .orders
        .iter()
        .flat_map(|&d| factorize(d))
        .collect();
    primary.sort_unstable();
    let distinct = primary.windows(2).all(|w| w[0].0 != w[1].0);
    Ok(DedekindClass {
        prime_power_cyclic: (primary.len() == 1).then(|| primary[0]),
        coprime_primary_sum: distinct.then_some(primary),
    })
}

/// Every abelian group of order at most `max_order`, as invariant-factor
/// chains, ordered by group order and then lexicographically.
pub fn all_abelian_groups(max_order: u64) -> Vec<Vec<u64>> {
    fn extend(prefix: &mut Vec<u64>, order: u64, max: u64, out: &mut Vec<Vec<u64>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        let last = prefix.last().copied().unwrap_or(1);
        let mut d = if prefix.is_empty() { 2 } else { last };
        while order * d <= max {
            if d % last == 0 {
                prefix.push(d);
                extend(prefix, order * d, max, out);
                prefix.pop();
            }
            d += if prefix.is_empty() { 1 } else { last };
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max_order, &mut out);
    out.sort_by_key(|v| (v.iter().product::<u64>(), v.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(orders: &[u64]) -> ZModule {
        ZModule::new(orders, &Limits::default()).unwrap()
    }

    #[test]
    fn ideal_arithmetic() {
        assert_eq!(z_ideal_sum(IntegerIdeal(2), IntegerIdeal(3)), IntegerIdeal(1));
        assert_eq!(z_ideal_sum(IntegerIdeal(5), IntegerIdeal(0)), IntegerIdeal(5));
        assert_eq!(z_ideal_intersect(IntegerIdeal(4), IntegerIdeal(6)), IntegerIdeal(12));
        assert_eq!(z_ideal_intersect(IntegerIdeal(4), IntegerIdeal(0)), IntegerIdeal(0));
    }

    #[test]
    fn annihilators() {
        let m = z(&[2, 3]);
        let all: Vec<usize> = m.carrier().elements().collect();
        assert_eq!(z_annihilator(&m, &all).unwrap(), IntegerIdeal(6));
        assert_eq!(z_annihilator(&m, &[0]).unwrap(), IntegerIdeal(1));
        // (1, 0) spans the Z/2 component
        assert_eq!(z_annihilator(&m, &[3]).unwrap(), IntegerIdeal(2));
        assert!(z_annihilator(&m, &[6]).is_err());
    }

    #[test]
    fn example_groups() {
        let m = z(&[2, 3]);
        assert!(z_is_weakly_in(&m).unwrap().value);
        assert!(!z_is_strongly_cs(&m).unwrap().value);
        assert!(z_is_strongly_cs(&z(&[4])).unwrap().value);
        assert!(!z_is_weakly_in(&z(&[2, 2])).unwrap().value);
        assert_eq!(z_is_weakly_in(&z(&[1])).unwrap_err(), Error::ZeroModule);
    }

    #[test]
    fn lifting_and_cleanness() {
        assert!(z_idempotent_lift(4).unwrap().value);
        let v = z_idempotent_lift(6).unwrap();
        assert_eq!(v.witness, Some(Witness::Integer(3)));
        for q in [2, 4, 8, 9, 27, 25, 49] {
            assert!(z_idempotent_lift(q).unwrap().value);
        }
        assert_eq!(z_is_clean().witness, Some(Witness::Integer(3)));
    }

    #[test]
    fn classification() {
        let c = classify_dedekind(&z(&[8])).unwrap();
        assert_eq!(c.prime_power_cyclic, Some((2, 3)));
        let c = classify_dedekind(&z(&[4, 9])).unwrap();
        assert_eq!(c.coprime_primary_sum, Some(vec![(2, 2), (3, 2)]));
        assert!(!c.is_prime_power_cyclic());
        let c = classify_dedekind(&z(&[2, 4])).unwrap();
        assert!(!c.is_prime_power_cyclic() && !c.is_coprime_primary_sum());
        assert!(matches!(ZModule::new(&[0], &Limits::default()), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn invariant_factor_chains() {
        assert_eq!(invariant_factors(&[2, 3]), vec![6]);
        assert_eq!(invariant_factors(&[4, 2, 3]), vec![2, 12]);
        assert_eq!(invariant_factors(&[1]), Vec::<u64>::new());
        let groups = all_abelian_groups(16);
        let count = |n: u64| groups.iter().filter(|g| g.iter().product::<u64>() == n).count();
        assert_eq!(count(16), 5);
        assert_eq!(count(8), 3);
        assert_eq!(count(12), 2);
        assert_eq!(count(7), 1);
        assert!(groups.iter().all(|g| g.windows(2).all(|w| w[1] % w[0] == 0)));
    }
}

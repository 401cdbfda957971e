use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::FiniteRing;
use crate::descriptor::{ElemLit, RingDescriptor};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice;
use crate::module::build_module;
use crate::trivext::trivial_extension;

/// Carrier-size bounds applied while building rings and modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_ring_size: usize,
    pub max_module_size: usize,
    /// Largest submodule lattice a module will enumerate.
    pub max_submodule_count: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_ring_size: 64,
            max_module_size: 256,
            max_submodule_count: 4096,
        }
    }
}

impl Limits {
    pub(crate) fn check_ring(&self, actual: usize) -> Result<()> {
        if actual > self.max_ring_size {
            Err(Error::SizeBoundExceeded {
                what: "ring",
                limit: self.max_ring_size,
                actual,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_module(&self, actual: usize) -> Result<()> {
        if actual > self.max_module_size {
            Err(Error::SizeBoundExceeded {
                what: "module",
                limit: self.max_module_size,
                actual,
            })
        } else {
            Ok(())
        }
    }
}

/// Builds the ring a descriptor describes, checking every axiom.
pub fn build_ring(d: &RingDescriptor, limits: &Limits) -> Result<Arc<FiniteRing>> {
    match d {
        RingDescriptor::ZmodN(n) => zmod(*n, limits),
        RingDescriptor::Product(parts) => {
            if parts.is_empty() {
                return Err(Error::MalformedDescriptor("empty product".into()));
            }
            let rings = parts
                .iter()
                .map(|p| build_ring(p, limits))
                .collect::<Result<Vec<_>>>()?;
            product(&rings, limits)
        }
        RingDescriptor::PolyQuot { p, coeffs } => polyquot(*p, coeffs, limits),
        RingDescriptor::Quotient { base, generators } => {
            let base = build_ring(base, limits)?;
            let gens = generators
                .iter()
                .map(|g| base.resolve(g))
                .collect::<Result<Vec<_>>>()?;
            let ideal = lattice::span(&*base, gens);
            quotient_by(&base, &ideal, d.clone())
        }
        RingDescriptor::TrivExt { base, module } => {
            let base_ring = build_ring(base, limits)?;
            let module = build_module(module, limits)?;
            if !module.ring().same_tables(&base_ring) {
                return Err(Error::RingMismatch);
            }
            Ok(Arc::clone(trivial_extension(&module, limits)?.ring()))
        }
    }
}

fn zmod(n: u64, limits: &Limits) -> Result<Arc<FiniteRing>> {
    if n == 0 {
        return Err(Error::MalformedDescriptor("zmod needs n >= 1".into()));
    }
    limits.check_ring(n as usize)?;
    let n = n as usize;
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push((a + b) % n);
            mul.push((a * b) % n);
        }
    }
    let labels = (0..n as u64).map(ElemLit::Int).collect();
    let one = 1 % n;
    Ok(Arc::new(FiniteRing::from_tables(
        add,
        mul,
        0,
        one,
        labels,
        RingDescriptor::ZmodN(n as u64),
    )?))
}

/// Direct product with elements in lexicographic tuple order (first factor
/// most significant).
pub(crate) fn product(rings: &[Arc<FiniteRing>], limits: &Limits) -> Result<Arc<FiniteRing>> {
    let size = rings
        .iter()
        .try_fold(1usize, |acc, r| acc.checked_mul(r.size()))
        .unwrap_or(usize::MAX);
    limits.check_ring(size)?;
    let decode = |mut x: usize| -> Vec<usize> {
        let mut parts = vec![0; rings.len()];
        for (i, r) in rings.iter().enumerate().rev() {
            parts[i] = x % r.size();
            x /= r.size();
        }
        parts
    };
    let encode = |parts: &[usize]| -> usize {
        parts
            .iter()
            .zip(rings)
            .fold(0, |acc, (&p, r)| acc * r.size() + p)
    };
    let coords: Vec<Vec<usize>> = (0..size).map(decode).collect();
    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    let mut scratch = vec![0; rings.len()];
    for a in &coords {
        for b in &coords {
            for (i, r) in rings.iter().enumerate() {
                scratch[i] = r.add(a[i], b[i]);
            }
            add.push(encode(&scratch));
            for (i, r) in rings.iter().enumerate() {
                scratch[i] = r.mul(a[i], b[i]);
            }
            mul.push(encode(&scratch));
        }
    }
    let zero = encode(&rings.iter().map(|r| r.zero()).collect::<Vec<_>>());
    let one = encode(&rings.iter().map(|r| r.one()).collect::<Vec<_>>());
    let labels = coords
        .iter()
        .map(|c| {
            ElemLit::Tuple(
                c.iter()
                    .zip(rings)
                    .map(|(&x, r)| r.label(x).clone())
                    .collect(),
            )
        })
        .collect();
    let pedigree = RingDescriptor::Product(rings.iter().map(|r| r.pedigree().clone()).collect());
    Ok(Arc::new(FiniteRing::from_tables(
        add, mul, zero, one, labels, pedigree,
    )?))
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `F_p[x]/(f)`; the element with coefficients `c_0..c_{d-1}` has index
/// `Σ c_i p^i`, so the constants come first.
fn polyquot(p: u64, coeffs: &[u64], limits: &Limits) -> Result<Arc<FiniteRing>> {
    if !is_prime(p) {
        return Err(Error::MalformedDescriptor(format!("{p} is not prime")));
    }
    if coeffs.len() < 2 {
        return Err(Error::MalformedDescriptor(
            "polynomial must have degree at least 1".into(),
        ));
    }
    if coeffs.iter().any(|&c| c >= p) {
        return Err(Error::MalformedDescriptor(
            "coefficients must be reduced modulo p".into(),
        ));
    }
    if *coeffs.last().unwrap() != 1 {
        return Err(Error::MalformedDescriptor("polynomial must be monic".into()));
    }
    let degree = coeffs.len() - 1;
    let size = (p as usize)
        .checked_pow(degree as u32)
        .unwrap_or(usize::MAX);
    limits.check_ring(size)?;
    let pu = p as usize;
    let decode = |mut x: usize| -> Vec<usize> {
        (0..degree)
            .map(|_| {
                let c = x % pu;
                x /= pu;
                c
            })
            .collect()
    };
    let encode = |c: &[usize]| -> usize { c.iter().rev().fold(0, |acc, &v| acc * pu + v) };
    let f: Vec<usize> = coeffs.iter().map(|&c| c as usize).collect();
    let polys: Vec<Vec<usize>> = (0..size).map(decode).collect();
    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    for a in &polys {
        for b in &polys {
            let s: Vec<usize> = a.iter().zip(b).map(|(x, y)| (x + y) % pu).collect();
            add.push(encode(&s));
            let mut prod = vec![0usize; 2 * degree - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % pu;
                }
            }
            // reduce by the monic modulus from the top degree down
            for k in (degree..prod.len()).rev() {
                let lead = prod[k];
                if lead != 0 {
                    for (i, fc) in f.iter().enumerate().take(degree) {
                        let idx = k - degree + i;
                        prod[idx] = (prod[idx] + (pu - lead) * fc) % pu;
                    }
                    prod[k] = 0;
                }
            }
            mul.push(encode(&prod[..degree]));
        }
    }
    let labels = polys
        .iter()
        .map(|c| ElemLit::Tuple(c.iter().map(|&v| ElemLit::Int(v as u64)).collect()))
        .collect();
    Ok(Arc::new(FiniteRing::from_tables(
        add,
        mul,
        0,
        1 % size,
        labels,
        RingDescriptor::PolyQuot {
            p,
            coeffs: coeffs.to_vec(),
        },
    )?))
}

/// Quotient of `base` by the ideal `ideal`, with cosets ordered by least
/// representative. Returns the ring; [`quotient_projection`] gives the map.
pub(crate) fn quotient_by(
    base: &Arc<FiniteRing>,
    ideal: &ElemSet,
    pedigree: RingDescriptor,
) -> Result<Arc<FiniteRing>> {
    let (reps, class) = lattice::cosets(&**base, ideal);
    let n = reps.len();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for &a in &reps {
        for &b in &reps {
            add.push(class[base.add(a, b)]);
            mul.push(class[base.mul(a, b)]);
        }
    }
    let labels = reps.iter().map(|&r| base.label(r).clone()).collect();
    Ok(Arc::new(FiniteRing::from_tables(
        add,
        mul,
        class[base.zero()],
        class[base.one()],
        labels,
        pedigree,
    )?))
}

pub(crate) fn quotient_projection(base: &FiniteRing, ideal: &ElemSet) -> Vec<usize> {
    lattice::cosets(base, ideal).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::iso::find_ring_isomorphism;

    fn build(d: &RingDescriptor) -> Arc<FiniteRing> {
        build_ring(d, &Limits::default()).unwrap()
    }

    #[test]
    fn zero_ring() {
        let r = build(&RingDescriptor::zmod(1));
        assert_eq!(r.size(), 1);
        assert_eq!(r.zero(), r.one());
    }

    #[test]
    fn product_of_coprime_cyclics_is_cyclic() {
        let p = build(&RingDescriptor::product([
            RingDescriptor::zmod(2),
            RingDescriptor::zmod(3),
        ]));
        let z6 = build(&RingDescriptor::zmod(6));
        let iso = find_ring_isomorphism(&p, &z6).expect("Z/2 x Z/3 is Z/6");
        assert!(crate::ring::iso::is_ring_isomorphism(&p, &z6, &iso));
        assert_eq!(p.label(5), &ElemLit::Tuple(vec![ElemLit::Int(1), ElemLit::Int(2)]));
    }

    #[test]
    fn polynomial_quotients() {
        // F2[x]/(x^2): x*x = 0
        let r = build(&RingDescriptor::PolyQuot {
            p: 2,
            coeffs: vec![0, 0, 1],
        });
        assert_eq!(r.size(), 4);
        assert_eq!(r.mul(2, 2), 0);
        // F2[x]/(x^2+x+1) is the field with four elements
        let f4 = build(&RingDescriptor::PolyQuot {
            p: 2,
            coeffs: vec![1, 1, 1],
        });
        assert_eq!(f4.units().len(), 3);
        assert_eq!(f4.mul(2, 2), 3);
    }

    #[test]
    fn malformed_and_oversized() {
        let lim = Limits::default();
        assert!(matches!(
            build_ring(&RingDescriptor::zmod(0), &lim),
            Err(Error::MalformedDescriptor(_))
        ));
        assert!(matches!(
            build_ring(&RingDescriptor::zmod(65), &lim),
            Err(Error::SizeBoundExceeded { .. })
        ));
        assert!(matches!(
            build_ring(&RingDescriptor::PolyQuot { p: 4, coeffs: vec![0, 1] }, &lim),
            Err(Error::MalformedDescriptor(_))
        ));
        assert!(matches!(
            build_ring(&RingDescriptor::PolyQuot { p: 3, coeffs: vec![0, 2] }, &lim),
            Err(Error::MalformedDescriptor(_))
        ));
        assert!(matches!(
            build_ring(&RingDescriptor::Product(vec![]), &lim),
            Err(Error::MalformedDescriptor(_))
        ));
    }
}

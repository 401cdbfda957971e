use std::sync::Arc;

use num_integer::Integer;

use super::FiniteModule;
use crate::descriptor::{ElemLit, ModuleDescriptor, RingDescriptor};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice;
use crate::ring::{build_ring, FiniteRing, Limits};

/// Builds the module a descriptor describes, checking every axiom.
pub fn build_module(d: &ModuleDescriptor, limits: &Limits) -> Result<Arc<FiniteModule>> {
    match d {
        ModuleDescriptor::Regular(r) => regular(&build_ring(r, limits)?, limits),
        ModuleDescriptor::Cyclic { ring, generators } => {
            let r = build_ring(ring, limits)?;
            let gens = resolve_all(generators, |l| r.resolve(l))?;
            let m = regular(&r, limits)?;
            let ideal = lattice::span(&*r, gens);
            Ok(quotient(&m, &ideal, d.clone())?.0)
        }
        ModuleDescriptor::DirectSum(parts) => {
            if parts.is_empty() {
                return Err(Error::MalformedDescriptor("empty direct sum".into()));
            }
            let ms = parts
                .iter()
                .map(|p| build_module(p, limits))
                .collect::<Result<Vec<_>>>()?;
            direct_sum(&ms, limits)
        }
        ModuleDescriptor::Sub { module, generators } => {
            let m = build_module(module, limits)?;
            let gens = resolve_all(generators, |l| m.resolve(l))?;
            submodule(&m, &lattice::span(&*m, gens), d.clone())
        }
        ModuleDescriptor::QuotientMod { module, generators } => {
            let m = build_module(module, limits)?;
            let gens = resolve_all(generators, |l| m.resolve(l))?;
            Ok(quotient(&m, &lattice::span(&*m, gens), d.clone())?.0)
        }
        ModuleDescriptor::ZAbelian(orders) => zabelian(orders, limits),
        ModuleDescriptor::OverQuotient { module, generators } => {
            let m = build_module(module, limits)?;
            let gens = resolve_all(generators, |l| m.ring().resolve(l))?;
            over_quotient(&m, &lattice::span(&**m.ring(), gens), d.clone(), limits)
        }
        ModuleDescriptor::ProductMod(a, b) => {
            let a = build_module(a, limits)?;
            let b = build_module(b, limits)?;
            product_mod(&a, &b, limits)
        }
    }
}

fn resolve_all(lits: &[ElemLit], f: impl Fn(&ElemLit) -> Result<usize>) -> Result<Vec<usize>> {
    lits.iter().map(f).collect()
}

pub(crate) fn regular(r: &Arc<FiniteRing>, limits: &Limits) -> Result<Arc<FiniteModule>> {
    limits.check_module(r.size())?;
    Ok(Arc::new(FiniteModule::from_tables(
        Arc::clone(r),
        r.add_table().to_vec(),
        r.mul_table().to_vec(),
        r.zero(),
        r.labels().to_vec(),
        ModuleDescriptor::Regular(r.pedigree().clone()),
        limits.max_submodule_count,
    )?))
}

/// Direct sum over a common ring, elements in lexicographic tuple order.
pub(crate) fn direct_sum(parts: &[Arc<FiniteModule>], limits: &Limits) -> Result<Arc<FiniteModule>> {
    let ring = Arc::clone(parts[0].ring());
    if parts.iter().any(|m| !m.ring().same_tables(&ring)) {
        return Err(Error::RingMismatch);
    }
    let size = parts
        .iter()
        .try_fold(1usize, |acc, m| acc.checked_mul(m.size()))
        .unwrap_or(usize::MAX);
    limits.check_module(size)?;
    let coords = tuple_coords(&parts.iter().map(|m| m.size()).collect::<Vec<_>>());
    let encode = |c: &[usize]| c.iter().zip(parts).fold(0, |acc, (&x, m)| acc * m.size() + x);
    let mut add = Vec::with_capacity(size * size);
    let mut scratch = vec![0; parts.len()];
    for a in &coords {
        for b in &coords {
            for (i, m) in parts.iter().enumerate() {
                scratch[i] = m.add(a[i], b[i]);
            }
            add.push(encode(&scratch));
        }
    }
    let mut act = Vec::with_capacity(ring.size() * size);
    for r in ring.elements() {
        for a in &coords {
            for (i, m) in parts.iter().enumerate() {
                scratch[i] = m.act(r, a[i]);
            }
            act.push(encode(&scratch));
        }
    }
    let zero = encode(&parts.iter().map(|m| m.zero()).collect::<Vec<_>>());
    let labels = tuple_labels(&coords, |i, x| parts[i].label(x).clone());
    let pedigree = ModuleDescriptor::DirectSum(parts.iter().map(|m| m.pedigree().clone()).collect());
    Ok(Arc::new(FiniteModule::from_tables(
        ring,
        add,
        act,
        zero,
        labels,
        pedigree,
        limits.max_submodule_count,
    )?))
}

fn tuple_coords(radices: &[usize]) -> Vec<Vec<usize>> {
    let size: usize = radices.iter().product();
    (0..size)
        .map(|mut x| {
            let mut c = vec![0; radices.len()];
            for i in (0..radices.len()).rev() {
                c[i] = x % radices[i];
                x /= radices[i];
            }
            c
        })
        .collect()
}

fn tuple_labels(coords: &[Vec<usize>], label: impl Fn(usize, usize) -> ElemLit) -> Vec<ElemLit> {
    coords
        .iter()
        .map(|c| ElemLit::Tuple(c.iter().enumerate().map(|(i, &x)| label(i, x)).collect()))
        .collect()
}

/// The submodule `s` as a module, elements in ascending parent order.
pub(crate) fn submodule(
    m: &Arc<FiniteModule>,
    s: &ElemSet,
    pedigree: ModuleDescriptor,
) -> Result<Arc<FiniteModule>> {
    let elems = s.to_vec();
    let mut pos = vec![usize::MAX; m.size()];
    for (i, &x) in elems.iter().enumerate() {
        pos[x] = i;
    }
    let at = |x: usize| -> Result<usize> {
        match pos[x] {
            usize::MAX => Err(Error::AxiomViolation("generated set is not closed".into())),
            i => Ok(i),
        }
    };
    let mut add = Vec::with_capacity(elems.len() * elems.len());
    for &a in &elems {
        for &b in &elems {
            add.push(at(m.add(a, b))?);
        }
    }
    let mut act = Vec::with_capacity(m.ring().size() * elems.len());
    for r in m.ring().elements() {
        for &a in &elems {
            act.push(at(m.act(r, a))?);
        }
    }
    let labels = elems.iter().map(|&x| m.label(x).clone()).collect();
    Ok(Arc::new(FiniteModule::from_tables(
        Arc::clone(m.ring()),
        add,
        act,
        at(m.zero())?,
        labels,
        pedigree,
        m.lattice_cap(),
    )?))
}

/// `M/N` with cosets ordered by least representative, plus the projection.
pub(crate) fn quotient(
    m: &Arc<FiniteModule>,
    n: &ElemSet,
    pedigree: ModuleDescriptor,
) -> Result<(Arc<FiniteModule>, Vec<usize>)> {
    let (reps, class) = lattice::cosets(&**m, n);
    let mut add = Vec::with_capacity(reps.len() * reps.len());
    for &a in &reps {
        for &b in &reps {
            add.push(class[m.add(a, b)]);
        }
    }
    let mut act = Vec::with_capacity(m.ring().size() * reps.len());
    for r in m.ring().elements() {
        for &a in &reps {
            act.push(class[m.act(r, a)]);
        }
    }
    let labels = reps.iter().map(|&x| m.label(x).clone()).collect();
    let q = FiniteModule::from_tables(
        Arc::clone(m.ring()),
        add,
        act,
        class[m.zero()],
        labels,
        pedigree,
        m.lattice_cap(),
    )?;
    Ok((Arc::new(q), class))
}

/// A finite abelian group `Z/d_1 ⊕ ... ⊕ Z/d_k` as a module over `Z/exponent`.
pub(crate) fn zabelian(orders: &[u64], limits: &Limits) -> Result<Arc<FiniteModule>> {
    if orders.is_empty() || orders.iter().any(|&d| d < 1) {
        return Err(Error::MalformedDescriptor(
            "zabelian needs a non-empty list of positive orders".into(),
        ));
    }
    let size = orders
        .iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d as usize))
        .unwrap_or(usize::MAX);
    limits.check_module(size)?;
    let exponent = orders.iter().fold(1u64, |acc, &d| acc.lcm(&d));
    let ring = build_ring(&RingDescriptor::zmod(exponent), limits)?;
    let radices: Vec<usize> = orders.iter().map(|&d| d as usize).collect();
    let coords = tuple_coords(&radices);
    let encode = |c: &[usize]| c.iter().zip(&radices).fold(0, |acc, (&x, &d)| acc * d + x);
    let mut add = Vec::with_capacity(size * size);
    for a in &coords {
        for b in &coords {
            let s: Vec<usize> = a.iter().zip(b).zip(&radices).map(|((x, y), d)| (x + y) % d).collect();
            add.push(encode(&s));
        }
    }
    let mut act = Vec::with_capacity(ring.size() * size);
    for r in ring.elements() {
        for a in &coords {
            let s: Vec<usize> = a.iter().zip(&radices).map(|(x, d)| (r * x) % d).collect();
            act.push(encode(&s));
        }
    }
    let labels = tuple_labels(&coords, |_, x| ElemLit::Int(x as u64));
    Ok(Arc::new(FiniteModule::from_tables(
        ring,
        add,
        act,
        0,
        labels,
        ModuleDescriptor::ZAbelian(orders.to_vec()),
        limits.max_submodule_count,
    )?))
}

/// `M` as a module over `R/I`, for an ideal `I ⊆ Ann_R(M)`.
pub(crate) fn over_quotient(
    m: &Arc<FiniteModule>,
    ideal: &ElemSet,
    pedigree: ModuleDescriptor,
    limits: &Limits,
) -> Result<Arc<FiniteModule>> {
    if !ideal.iter().all(|r| m.elements().all(|x| m.act(r, x) == m.zero())) {
        return Err(Error::ContainmentViolation(
            "the ideal does not annihilate the module".into(),
        ));
    }
    let r = m.ring();
    let ring_pedigree = RingDescriptor::quotient(
        r.pedigree().clone(),
        lattice::generators(&**r, ideal)
            .into_iter()
            .map(|g| r.label(g).clone())
            .collect(),
    );
    let q = crate::ring::quotient_ring_by(r, ideal, ring_pedigree)?;
    limits.check_ring(q.size())?;
    let (reps, _) = lattice::cosets(&**r, ideal);
    let mut act = Vec::with_capacity(reps.len() * m.size());
    for &rep in &reps {
        for x in m.elements() {
            act.push(m.act(rep, x));
        }
    }
    Ok(Arc::new(FiniteModule::from_tables(
        q,
        m.add_table().to_vec(),
        act,
        m.zero(),
        m.labels().to_vec(),
        pedigree,
        m.lattice_cap(),
    )?))
}

/// `M1 × M2` over `R1 × R2` with the componentwise action.
pub(crate) fn product_mod(
    a: &Arc<FiniteModule>,
    b: &Arc<FiniteModule>,
    limits: &Limits,
) -> Result<Arc<FiniteModule>> {
    let ring = crate::ring::product_ring(&[Arc::clone(a.ring()), Arc::clone(b.ring())], limits)?;
    let size = a.size() * b.size();
    limits.check_module(size)?;
    let coords = tuple_coords(&[a.size(), b.size()]);
    let encode = |x: usize, y: usize| x * b.size() + y;
    let mut add = Vec::with_capacity(size * size);
    for p in &coords {
        for q in &coords {
            add.push(encode(a.add(p[0], q[0]), b.add(p[1], q[1])));
        }
    }
    let mut act = Vec::with_capacity(ring.size() * size);
    for r in ring.elements() {
        let (ra, rb) = (r / b.ring().size(), r % b.ring().size());
        for p in &coords {
            act.push(encode(a.act(ra, p[0]), b.act(rb, p[1])));
        }
    }
    let labels = tuple_labels(&coords, |i, x| if i == 0 { a.label(x).clone() } else { b.label(x).clone() });
    Ok(Arc::new(FiniteModule::from_tables(
        ring,
        add,
        act,
        encode(a.zero(), b.zero()),
        labels,
        ModuleDescriptor::ProductMod(Box::new(a.pedigree().clone()), Box::new(b.pedigree().clone())),
        limits.max_submodule_count,
    )?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_sums() {
        let lim = Limits::default();
        let z6 = RingDescriptor::zmod(6);
        let c = build_module(&ModuleDescriptor::cyclic(z6.clone(), vec![3.into()]), &lim).unwrap();
        assert_eq!(c.size(), 3);
        let s = build_module(
            &ModuleDescriptor::DirectSum(vec![
                ModuleDescriptor::cyclic(z6.clone(), vec![2.into()]),
                ModuleDescriptor::cyclic(z6.clone(), vec![3.into()]),
            ]),
            &lim,
        )
        .unwrap();
        assert_eq!(s.size(), 6);
        let reg = build_module(&ModuleDescriptor::Regular(z6), &lim).unwrap();
        // (1,1) generates, so x ↦ x·(1,1) is an isomorphism from the regular module
        let g = s.resolve(&ElemLit::Tuple(vec![1.into(), 1.into()])).unwrap();
        let map: Vec<usize> = reg.elements().map(|r| s.act(r, g)).collect();
        let h = crate::module::ModuleHom::new(&reg, &s, map).unwrap();
        assert!(h.is_bijective());
    }

    #[test]
    fn zabelian_groups() {
        let lim = Limits::default();
        let m = build_module(&ModuleDescriptor::ZAbelian(vec![2, 3]), &lim).unwrap();
        assert_eq!(m.size(), 6);
        assert_eq!(m.ring().size(), 6);
        assert!(build_module(&ModuleDescriptor::ZAbelian(vec![]), &lim).is_err());
    }

    #[test]
    fn over_quotient_needs_annihilation() {
        let lim = Limits::default();
        let z6 = RingDescriptor::zmod(6);
        let m = ModuleDescriptor::cyclic(z6.clone(), vec![2.into()]);
        let ok = build_module(&ModuleDescriptor::overquot(m.clone(), vec![2.into()]), &lim).unwrap();
        assert_eq!(ok.ring().size(), 2);
        assert!(matches!(
            build_module(&ModuleDescriptor::overquot(m, vec![3.into()]), &lim),
            Err(Error::ContainmentViolation(_))
        ));
    }
}

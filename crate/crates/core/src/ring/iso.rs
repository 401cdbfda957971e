//! Ring homomorphisms given by value tables, and isomorphism search.

use super::FiniteRing;

/// Unital, additive and multiplicative.
pub fn is_ring_hom(src: &FiniteRing, dst: &FiniteRing, map: &[usize]) -> bool {
    map.len() == src.size()
        && map.iter().all(|&v| v < dst.size())
        && map[src.one()] == dst.one()
        && src.elements().all(|a| {
            src.elements().all(|b| {
                map[src.add(a, b)] == dst.add(map[a], map[b])
                    && map[src.mul(a, b)] == dst.mul(map[a], map[b])
            })
        })
}

pub fn is_ring_isomorphism(src: &FiniteRing, dst: &FiniteRing, map: &[usize]) -> bool {
    if src.size() != dst.size() || !is_ring_hom(src, dst, map) {
        return false;
    }
    let mut hit = vec![false; dst.size()];
    map.iter().all(|&v| !std::mem::replace(&mut hit[v], true))
}

/// Cheap isomorphism invariants, used to rule out most pairs before searching.
pub fn signature(r: &FiniteRing) -> Vec<usize> {
    let mut orders = vec![0usize; r.size() + 1];
    let mut nil = 0;
    for x in r.elements() {
        orders[r.additive_order(x)] += 1;
        if r.is_nilpotent(x) {
            nil += 1;
        }
    }
    let mut sig = vec![
        r.size(),
        r.idempotents().len(),
        r.units().len(),
        nil,
        r.ideal_sets().len(),
    ];
    let mut sizes: Vec<usize> = r.ideal_sets().iter().map(|s| s.len()).collect();
    sizes.sort_unstable();
    sig.extend(sizes);
    sig.extend(orders);
    sig
}

fn profile(r: &FiniteRing, x: usize) -> (usize, bool, bool, bool, usize) {
    let square_class = r.elements().filter(|&y| r.mul(y, y) == x).count();
    (
        r.additive_order(x),
        r.is_idempotent(x),
        r.is_unit(x),
        r.is_nilpotent(x),
        square_class,
    )
}

/// Extends a partial map along sums and products until closed. Returns false
/// on a conflict.
fn close(src: &FiniteRing, dst: &FiniteRing, map: &mut [Option<usize>], known: &mut Vec<usize>) -> bool {
    let mut i = 0;
    while i < known.len() {
        let a = known[i];
        let mut j = 0;
        while j <= i {
            let b = known[j];
            let (fa, fb) = (map[a].unwrap(), map[b].unwrap());
            for (x, v) in [
                (src.add(a, b), dst.add(fa, fb)),
                (src.mul(a, b), dst.mul(fa, fb)),
            ] {
                match map[x] {
                    Some(w) if w != v => return false,
                    Some(_) => {}
                    None => {
                        map[x] = Some(v);
                        known.push(x);
                    }
                }
            }
            j += 1;
        }
        i += 1;
    }
    true
}

/// Searches for a ring isomorphism `a -> b` by backtracking over a generating
/// set of `a`.
pub fn find_ring_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    if signature(a) != signature(b) {
        return None;
    }
    // ring generators of `a`, chosen greedily
    let mut gens = Vec::new();
    {
        let mut map = vec![None; a.size()];
        map[a.one()] = Some(a.one());
        let mut known = vec![a.one()];
        close(a, a, &mut map, &mut known);
        for x in a.elements() {
            if map[x].is_none() {
                gens.push(x);
                map[x] = Some(x);
                known.push(x);
                close(a, a, &mut map, &mut known);
            }
        }
    }
    let profiles_b: Vec<_> = b.elements().map(|y| profile(b, y)).collect();
    let mut map = vec![None; a.size()];
    map[a.one()] = Some(b.one());
    let mut known = vec![a.one()];
    if !close(a, b, &mut map, &mut known) {
        return None;
    }
    let mut used = vec![false; b.size()];
    for x in &known {
        used[map[*x].unwrap()] = true;
    }
    search(a, b, &gens, 0, map, known, &profiles_b)
}

fn search(
    a: &FiniteRing,
    b: &FiniteRing,
    gens: &[usize],
    depth: usize,
    map: Vec<Option<usize>>,
    known: Vec<usize>,
    profiles_b: &[(usize, bool, bool, bool, usize)],
) -> Option<Vec<usize>> {
    if depth == gens.len() {
        let total: Vec<usize> = map.iter().map(|v| v.expect("generators cover the ring")).collect();
        return is_ring_isomorphism(a, b, &total).then_some(total);
    }
    let g = gens[depth];
    if map[g].is_some() {
        return search(a, b, gens, depth + 1, map, known, profiles_b);
    }
    let want = profile(a, g);
    let taken: Vec<bool> = {
        let mut t = vec![false; b.size()];
        for v in map.iter().flatten() {
            t[*v] = true;
        }
        t
    };
    for y in b.elements() {
        if taken[y] || profiles_b[y] != want {
            continue;
        }
        let mut m = map.clone();
        let mut k = known.clone();
        m[g] = Some(y);
        k.push(g);
        if !close(a, b, &mut m, &mut k) {
            continue;
        }
        // injectivity on the closed part
        let mut seen = vec![false; b.size()];
        if k.iter().any(|&x| std::mem::replace(&mut seen[m[x].unwrap()], true)) {
            continue;
        }
        if let Some(found) = search(a, b, gens, depth + 1, m, k, profiles_b) {
            return Some(found);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::RingDescriptor;
    use crate::ring::{build_ring, Limits};

    #[test]
    fn isomorphic_and_not() {
        let lim = Limits::default();
        let f4 = build_ring(&RingDescriptor::PolyQuot { p: 2, coeffs: vec![1, 1, 1] }, &lim).unwrap();
        let dual = build_ring(&RingDescriptor::PolyQuot { p: 2, coeffs: vec![0, 0, 1] }, &lim).unwrap();
        let z4 = build_ring(&RingDescriptor::zmod(4), &lim).unwrap();
        let z2z2 = build_ring(
            &RingDescriptor::product([RingDescriptor::zmod(2), RingDescriptor::zmod(2)]),
            &lim,
        )
        .unwrap();
        for r in [&f4, &dual, &z4, &z2z2] {
            let id: Vec<usize> = r.elements().collect();
            assert!(is_ring_isomorphism(r, r, &id));
            assert!(find_ring_isomorphism(r, r).is_some());
        }
        assert!(find_ring_isomorphism(&f4, &dual).is_none());
        assert!(find_ring_isomorphism(&z4, &dual).is_none());
        assert!(find_ring_isomorphism(&z2z2, &f4).is_none());
    }
}

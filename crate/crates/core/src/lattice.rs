//! Spans and submodule lattices for a ring acting on a finite abelian group.
//!
//! Rings acting on themselves (ideals) and modules share this code.

use std::collections::HashSet;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};

/// A ring with `scalars()` elements acting on an additive group of `size()`
/// elements.
pub trait Action {
    fn scalars(&self) -> usize;
    fn size(&self) -> usize;
    fn zero(&self) -> usize;
    fn plus(&self, a: usize, b: usize) -> usize;
    fn act(&self, r: usize, x: usize) -> usize;
}

/// Smallest subgroup containing `base` (already a subgroup) and `gens`.
pub fn extend_subgroup<A: Action + ?Sized>(
    a: &A,
    base: &ElemSet,
    gens: impl IntoIterator<Item = usize>,
) -> ElemSet {
    let mut set = base.clone();
    let mut elems: Vec<usize> = set.iter().collect();
    for g in gens {
        if set.contains(g) {
            continue;
        }
        // H + <g> is the union of the cosets H + k·g for k below the order of g mod H.
        let coset_base = elems.clone();
        let mut step = g;
        while !set.contains(step) {
            for &b in &coset_base {
                let v = a.plus(b, step);
                if set.insert(v) {
                    elems.push(v);
                }
            }
            step = a.plus(step, g);
        }
    }
    set
}

pub fn zero_set<A: Action + ?Sized>(a: &A) -> ElemSet {
    ElemSet::singleton(a.size(), a.zero())
}

/// Smallest submodule containing `gens`.
pub fn span<A: Action + ?Sized>(a: &A, gens: impl IntoIterator<Item = usize>) -> ElemSet {
    let mut orbit = Vec::new();
    let mut seen = ElemSet::new(a.size());
    for g in gens {
        for r in 0..a.scalars() {
            let v = a.act(r, g);
            if seen.insert(v) {
                orbit.push(v);
            }
        }
    }
    extend_subgroup(a, &zero_set(a), orbit)
}

/// `N + L` for submodules `N`, `L`.
pub fn sum<A: Action + ?Sized>(a: &A, n: &ElemSet, l: &ElemSet) -> ElemSet {
    if l.is_subset(n) {
        return n.clone();
    }
    if n.is_subset(l) {
        return l.clone();
    }
    extend_subgroup(a, n, l.iter())
}

/// `r·S` for a submodule `S` (again a submodule in the commutative setting).
pub fn scale<A: Action + ?Sized>(a: &A, r: usize, s: &ElemSet) -> ElemSet {
    ElemSet::from_elems(a.size(), s.iter().map(|x| a.act(r, x)))
}

/// The cyclic submodule generated by each element.
pub fn cyclic_spans<A: Action + ?Sized>(a: &A) -> Vec<ElemSet> {
    (0..a.size()).map(|x| span(a, [x])).collect()
}

/// The complete submodule lattice in canonical order, built by closing the
/// cyclic submodules under sums.
pub fn all_submodules<A: Action + ?Sized>(
    a: &A,
    cyclics: &[ElemSet],
    cap: usize,
) -> Result<Vec<ElemSet>> {
    let mut distinct: Vec<ElemSet> = Vec::new();
    {
        let mut seen = HashSet::new();
        for c in cyclics {
            if seen.insert(c.clone()) {
                distinct.push(c.clone());
            }
        }
    }
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut found = Vec::new();
    let zero = zero_set(a);
    seen.insert(zero.clone());
    found.push(zero);
    let mut cursor = 0;
    while cursor < found.len() {
        let current = found[cursor].clone();
        cursor += 1;
        for c in &distinct {
            if c.is_subset(&current) {
                continue;
            }
            let s = sum(a, &current, c);
            if !seen.contains(&s) {
                seen.insert(s.clone());
                found.push(s);
                if found.len() > cap {
                    return Err(Error::SizeBoundExceeded {
                        what: "submodule lattice",
                        limit: cap,
                        actual: found.len(),
                    });
                }
            }
        }
    }
    found.sort();
    Ok(found)
}

/// An irredundant generating list for a submodule, picked greedily in
/// ascending element order.
pub fn generators<A: Action + ?Sized>(a: &A, s: &ElemSet) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut current = zero_set(a);
    for x in s.iter() {
        if !current.contains(x) {
            gens.push(x);
            current = sum(a, &current, &span(a, [x]));
        }
    }
    // drop generators made redundant by later ones
    let mut i = 0;
    while i < gens.len() {
        let others: Vec<usize> = gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &g)| g)
            .collect();
        if span(a, others.iter().copied()).contains(gens[i]) {
            gens.remove(i);
        } else {
            i += 1;
        }
    }
    gens
}

/// Coset representatives for the quotient by a subgroup `s`: returns the
/// sorted least representatives and, for every element, the index of its coset.
pub fn cosets<A: Action + ?Sized>(a: &A, s: &ElemSet) -> (Vec<usize>, Vec<usize>) {
    let n = a.size();
    let mut class = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if class[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(x);
        for y in s.iter() {
            class[a.plus(x, y)] = idx;
        }
    }
    (reps, class)
}

use std::fmt;
use std::sync::Arc;

use super::FiniteModule;
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::lattice::{self, Action};
use crate::ring::FiniteRing;
use crate::verdict::{Method, Verdict, Witness};

/// A module homomorphism given by its value table.
#[derive(Clone)]
pub struct ModuleHom {
    source: Arc<FiniteModule>,
    target: Arc<FiniteModule>,
    map: Vec<usize>,
}

impl ModuleHom {
    /// Checks additivity and compatibility with the action.
    pub fn new(source: &Arc<FiniteModule>, target: &Arc<FiniteModule>, map: Vec<usize>) -> Result<Self> {
        if !source.ring().same_tables(target.ring()) {
            return Err(Error::RingMismatch);
        }
        if !is_hom(source, &**target, &map) {
            return Err(Error::AxiomViolation("map is not a module homomorphism".into()));
        }
        Ok(Self {
            source: Arc::clone(source),
            target: Arc::clone(target),
            map,
        })
    }

    pub fn source(&self) -> &Arc<FiniteModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteModule> {
        &self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_valid(&self) -> bool {
        is_hom(&self.source, &*self.target, &self.map)
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.size() != self.target.size() {
            return false;
        }
        let mut hit = vec![false; self.target.size()];
        self.map.iter().all(|&v| !std::mem::replace(&mut hit[v], true))
    }

    /// `f∘f = f`, for endomorphisms.
    pub fn is_idempotent(&self) -> bool {
        self.source.same_tables(&self.target) && self.map.iter().all(|&v| self.map[v] == v)
    }

    /// The least `r` with `f(x) = r·x` for every `x`, if any.
    pub fn as_scalar(&self) -> Option<usize> {
        let m = &self.source;
        if !m.same_tables(&self.target) {
            return None;
        }
        m.ring()
            .elements()
            .find(|&r| m.elements().all(|x| m.act(r, x) == self.map[x]))
    }

    pub fn image(&self) -> Vec<usize> {
        let mut v = self.map.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

impl fmt::Debug for ModuleHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleHom{:?}", self.map)
    }
}

fn is_hom<T: Action + ?Sized>(src: &FiniteModule, dst: &T, map: &[usize]) -> bool {
    map.len() == src.size()
        && map.iter().all(|&v| v < dst.size())
        && src.elements().all(|a| {
            src.elements()
                .all(|b| map[src.add(a, b)] == dst.plus(map[a], map[b]))
                && src
                    .ring()
                    .elements()
                    .all(|r| map[src.act(r, a)] == dst.act(r, map[a]))
        })
}

/// Backtracking over images of an irredundant generating set. Each candidate
/// image is propagated to the whole span, so a leaf is a complete, consistent
/// homomorphism. `visit` returns false to stop early.
fn search<T: Action + ?Sized>(
    src: &FiniteModule,
    dst: &T,
    gens: &[usize],
    candidates: &[Vec<usize>],
    cap: usize,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> Result<()> {
    struct State<'a, T: ?Sized> {
        src: &'a FiniteModule,
        dst: &'a T,
        gens: &'a [usize],
        candidates: &'a [Vec<usize>],
        cap: usize,
        attempts: usize,
    }

    fn go<T: Action + ?Sized>(
        st: &mut State<'_, T>,
        depth: usize,
        map: &[usize],
        domain: &[usize],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> Result<bool> {
        if depth == st.gens.len() {
            return Ok(visit(map));
        }
        let g = st.gens[depth];
        let ring = st.src.ring().clone();
        for &y in &st.candidates[depth] {
            st.attempts += 1;
            if st.attempts > st.cap {
                return Err(Error::SizeBoundExceeded {
                    what: "homomorphism search",
                    limit: st.cap,
                    actual: st.attempts,
                });
            }
            let mut m = map.to_vec();
            let mut dom = domain.to_vec();
            let mut ok = true;
            'outer: for r in ring.elements() {
                let rg = st.src.act(r, g);
                let ry = st.dst.act(r, y);
                for &a in domain {
                    let x = st.src.add(a, rg);
                    let v = st.dst.plus(m[a], ry);
                    if m[x] == usize::MAX {
                        m[x] = v;
                        dom.push(x);
                    } else if m[x] != v {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            if ok && !go(st, depth + 1, &m, &dom, visit)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    let mut map = vec![usize::MAX; src.size()];
    map[src.zero()] = dst.zero();
    let mut st = State {
        src,
        dst,
        gens,
        candidates,
        cap,
        attempts: 0,
    };
    go(&mut st, 0, &map, &[src.zero()], visit)?;
    Ok(())
}

/// Images allowed for a generator `g`: elements killed by `Ann_R(g)`.
fn admissible<T: Action + ?Sized>(ring: &FiniteRing, src: &FiniteModule, g: usize, dst: &T) -> Vec<usize> {
    let ann: Vec<usize> = ring
        .elements()
        .filter(|&r| src.act(r, g) == src.zero())
        .collect();
    (0..dst.size())
        .filter(|&y| ann.iter().all(|&r| dst.act(r, y) == dst.zero()))
        .collect()
}

pub(super) fn homomorphisms(
    src: &Arc<FiniteModule>,
    dst: &Arc<FiniteModule>,
    cap: usize,
) -> Result<Vec<ModuleHom>> {
    if !src.ring().same_tables(dst.ring()) {
        return Err(Error::RingMismatch);
    }
    let gens = lattice::generators(&**src, &ElemSet::full(src.size()));
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| admissible(src.ring(), src, g, &**dst))
        .collect();
    let mut out = Vec::new();
    search(src, &**dst, &gens, &candidates, cap, &mut |m| {
        out.push(ModuleHom {
            source: Arc::clone(src),
            target: Arc::clone(dst),
            map: m.to_vec(),
        });
        true
    })?;
    Ok(out)
}

/// `R^k` with tuples encoded in mixed radix, first coordinate most significant.
struct Free<'a> {
    ring: &'a FiniteRing,
    k: usize,
    size: usize,
}

impl Free<'_> {
    fn coords(&self, mut x: usize) -> Vec<usize> {
        let n = self.ring.size();
        let mut c = vec![0; self.k];
        for i in (0..self.k).rev() {
            c[i] = x % n;
            x /= n;
        }
        c
    }

    fn encode(&self, c: &[usize]) -> usize {
        c.iter().fold(0, |acc, &v| acc * self.ring.size() + v)
    }
}

impl Action for Free<'_> {
    fn scalars(&self) -> usize {
        self.ring.size()
    }
    fn size(&self) -> usize {
        self.size
    }
    fn zero(&self) -> usize {
        self.encode(&vec![self.ring.zero(); self.k])
    }
    fn plus(&self, a: usize, b: usize) -> usize {
        let (ca, cb) = (self.coords(a), self.coords(b));
        let s: Vec<usize> = ca.iter().zip(&cb).map(|(&x, &y)| self.ring.add(x, y)).collect();
        self.encode(&s)
    }
    fn act(&self, r: usize, x: usize) -> usize {
        let c: Vec<usize> = self.coords(x).iter().map(|&v| self.ring.mul(r, v)).collect();
        self.encode(&c)
    }
}

/// Largest free module a splitting search will scan.
const FREE_BOUND: usize = 1 << 20;

/// Searches for a section of `R^k -> M`, `e_i ↦ g_i`.
pub(super) fn is_projective(m: &Arc<FiniteModule>) -> Result<Verdict> {
    let ring = m.ring();
    let gens = lattice::generators(&**m, &ElemSet::full(m.size()));
    if gens.is_empty() {
        return Ok(Verdict::with(
            true,
            Witness::Splitting(vec![vec![]]),
            Method::SplittingSearch,
        ));
    }
    let size = ring
        .size()
        .checked_pow(gens.len() as u32)
        .filter(|&s| s <= FREE_BOUND)
        .ok_or(Error::SizeBoundExceeded {
            what: "free presentation",
            limit: FREE_BOUND,
            actual: usize::MAX,
        })?;
    let free = Free {
        ring,
        k: gens.len(),
        size,
    };
    let project = |c: usize| -> usize {
        free.coords(c)
            .iter()
            .zip(&gens)
            .fold(m.zero(), |acc, (&r, &g)| m.add(acc, m.act(r, g)))
    };
    let images: Vec<usize> = (0..size).map(project).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            admissible(ring, m, g, &free)
                .into_iter()
                .filter(|&c| images[c] == g)
                .collect()
        })
        .collect();
    let mut found = None;
    search(m, &free, &gens, &candidates, usize::MAX, &mut |s| {
        found = Some(s.to_vec());
        false
    })?;
    Ok(match found {
        Some(s) => Verdict::with(
            true,
            Witness::Splitting(s.iter().map(|&c| free.coords(c)).collect()),
            Method::SplittingSearch,
        ),
        None => Verdict::no(Method::SplittingSearch),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::{ModuleDescriptor, RingDescriptor};
    use crate::module::build_module;
    use crate::ring::Limits;

    fn module(d: ModuleDescriptor) -> Arc<FiniteModule> {
        build_module(&d, &Limits::default()).unwrap()
    }

    #[test]
    fn endomorphism_counts() {
        let z6 = module(ModuleDescriptor::Regular(RingDescriptor::zmod(6)));
        let ends = z6.endomorphisms(1_000_000).unwrap();
        assert_eq!(ends.len(), 6);
        assert_eq!(ends.iter().filter(|f| f.is_idempotent()).count(), 4);
        let simple = module(ModuleDescriptor::Regular(RingDescriptor::zmod(5)));
        assert_eq!(simple.endomorphisms(1_000_000).unwrap().len(), 5);
        let z2 = ModuleDescriptor::Regular(RingDescriptor::zmod(2));
        let plane = module(ModuleDescriptor::DirectSum(vec![z2.clone(), z2]));
        let ends = plane.endomorphisms(1_000_000).unwrap();
        assert_eq!(ends.len(), 16);
        assert!(ends.iter().all(|f| f.is_valid()));
        assert!(matches!(
            plane.endomorphisms(3),
            Err(Error::SizeBoundExceeded { .. })
        ));
    }

    #[test]
    fn projectivity() {
        let z6 = RingDescriptor::zmod(6);
        assert!(module(ModuleDescriptor::Regular(z6.clone())).is_projective().unwrap().value);
        assert!(module(ModuleDescriptor::cyclic(z6, vec![3.into()])).is_projective().unwrap().value);
        let z4 = RingDescriptor::zmod(4);
        assert!(!module(ModuleDescriptor::cyclic(z4, vec![2.into()])).is_projective().unwrap().value);
    }
}

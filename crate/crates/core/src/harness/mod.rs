//! Exhaustive checking of theorems over bounded families of finite instances.
//!
//! Each registered check names its clauses and the relation they must satisfy
//! (equivalence groups, implications, or a custom predicate). Every clause is
//! evaluated on every applicable instance; an instance whose clause vector
//! violates the relation is reported as a counterexample, with its descriptor
//! text so it can be replayed.

pub mod family;
mod registry;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::descriptor::{Descriptor, ModuleDescriptor, RingDescriptor};
use crate::error::{Error, Result};
use crate::module::{build_module, regular, FiniteModule};
use crate::ring::{build_ring, FiniteRing, Limits};
use crate::trivext::{trivial_extension, TrivialExtension};
use crate::zring::ZModule;

pub use family::{enumerate_modules, enumerate_rings, Family, FamilyConfig};
pub use registry::registry;

/// One object a theorem is checked on.
#[derive(Debug, Clone)]
pub enum Instance {
    Ring(Arc<FiniteRing>),
    Module(Arc<FiniteModule>),
    /// Two modules over the same ring; the theorem concerns their direct sum.
    Pair(Arc<FiniteModule>, Arc<FiniteModule>),
    /// Modules over two rings; the theorem concerns `M1 × M2` over `R1 × R2`.
    Product(Arc<FiniteModule>, Arc<FiniteModule>),
    Trivext(Arc<TrivialExtension>),
    /// A finite abelian group over the integers.
    Group(Arc<ZModule>),
    /// The integers themselves, for statements about the base ring.
    Integers,
}

impl Instance {
    /// Descriptor text that [`replay`] turns back into this instance.
    pub fn descriptor(&self) -> String {
        match self {
            Instance::Ring(r) => r.pedigree().to_string(),
            Instance::Module(m) => m.pedigree().to_string(),
            Instance::Pair(a, b) => {
                ModuleDescriptor::DirectSum(vec![a.pedigree().clone(), b.pedigree().clone()]).to_string()
            }
            Instance::Product(a, b) => {
                ModuleDescriptor::ProductMod(Box::new(a.pedigree().clone()), Box::new(b.pedigree().clone()))
                    .to_string()
            }
            Instance::Trivext(t) => t.ring().pedigree().to_string(),
            Instance::Group(g) => g.descriptor().to_string(),
            Instance::Integers => INTEGERS.to_string(),
        }
    }
}

/// Descriptor text standing for the integers in ring-level checks: the group
/// `Z/2 ⊕ Z/3`, whose annihilator is the base ring's ideal `6Z`.
const INTEGERS: &str = "zabelian([2, 3])";

/// Which [`Instance`] variant a check consumes, used to rebuild instances
/// from descriptor text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum InstanceKind {
    Ring,
    Module,
    Pair,
    Product,
    Trivext,
    Group,
}

/// How the clause vector of an instance must look.
#[derive(Debug, Clone, Copy)]
pub enum Relation {
    /// Within each group, all clauses have the same value.
    Equivalent(&'static [&'static [usize]]),
    /// Each `(a, b)` means clause `a` implies clause `b`.
    Implies(&'static [(usize, usize)]),
    /// Every clause is true.
    AllTrue,
    /// An arbitrary predicate, described in words.
    Custom(fn(&[bool]) -> bool, &'static str),
}

impl Relation {
    pub fn holds(&self, v: &[bool]) -> bool {
        match self {
            Relation::Equivalent(groups) => groups
                .iter()
                .all(|g| g.iter().all(|&i| v[i] == v[g[0]])),
            Relation::Implies(pairs) => pairs.iter().all(|&(a, b)| !v[a] || v[b]),
            Relation::AllTrue => v.iter().all(|&b| b),
            Relation::Custom(f, _) => f(v),
        }
    }
}

type InstancesFn = fn(&Family, &Env) -> Result<Vec<Instance>>;
type EvaluateFn = fn(&Env, &Instance) -> Result<Vec<bool>>;

/// A registered theorem: its clauses, their relation, and where its instances come from.
pub struct TheoremCheck {
    pub id: &'static str,
    /// The statement in words.
    pub statement: &'static str,
    pub clauses: &'static [&'static str],
    pub relation: Relation,
    pub kind: InstanceKind,
    /// A search task: violations are findings, not failures.
    pub search: bool,
    instances: InstancesFn,
    evaluate: EvaluateFn,
}

impl TheoremCheck {
    pub fn instances(&self, family: &Family, env: &Env) -> Result<Vec<Instance>> {
        (self.instances)(family, env)
    }

    /// The clause vector of one instance, every clause evaluated.
    pub fn evaluate(&self, env: &Env, inst: &Instance) -> Result<Vec<bool>> {
        (self.evaluate)(env, inst)
    }
}

/// Shared state for clause evaluation: limits for derived objects and caches
/// of per-ring module lists, keyed by ring identity.
pub struct Env {
    config: FamilyConfig,
    limits: Limits,
    modules: Mutex<HashMap<usize, RingCache>>,
    cyclics: Mutex<HashMap<usize, RingCache>>,
    regular: Mutex<HashMap<usize, (Arc<FiniteRing>, Arc<FiniteModule>)>>,
}

type RingCache = (Arc<FiniteRing>, Arc<Vec<Arc<FiniteModule>>>);

fn key(r: &Arc<FiniteRing>) -> usize {
    Arc::as_ptr(r) as usize
}

impl Env {
    pub fn new(config: &FamilyConfig) -> Self {
        Self {
            config: config.clone(),
            limits: config.derived_limits(),
            modules: Mutex::default(),
            cyclics: Mutex::default(),
            regular: Mutex::default(),
        }
    }

    /// An environment whose module lists come from an existing family.
    pub fn for_family(family: &Family) -> Self {
        let env = Self::new(family.config());
        {
            let mut map = env.modules.lock().expect("cache lock");
            for (i, r) in family.rings().iter().enumerate() {
                map.insert(key(r), (Arc::clone(r), Arc::new(family.modules_of(i).to_vec())));
            }
        }
        env
    }

    pub fn config(&self) -> &FamilyConfig {
        &self.config
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    fn cached(
        map: &Mutex<HashMap<usize, RingCache>>,
        r: &Arc<FiniteRing>,
        make: impl FnOnce() -> Result<Vec<Arc<FiniteModule>>>,
    ) -> Result<Arc<Vec<Arc<FiniteModule>>>> {
        if let Some((_, v)) = map.lock().expect("cache lock").get(&key(r)) {
            return Ok(Arc::clone(v));
        }
        let v = Arc::new(make()?);
        let mut guard = map.lock().expect("cache lock");
        let entry = guard.entry(key(r)).or_insert_with(|| (Arc::clone(r), v));
        Ok(Arc::clone(&entry.1))
    }

    /// The family modules of `r`.
    pub fn family_modules(&self, r: &Arc<FiniteRing>) -> Result<Arc<Vec<Arc<FiniteModule>>>> {
        Self::cached(&self.modules, r, || enumerate_modules(r, &self.config))
    }

    /// Every nonzero cyclic module `R/I`, in ideal order, starting with `R/0`.
    pub fn cyclics(&self, r: &Arc<FiniteRing>) -> Result<Arc<Vec<Arc<FiniteModule>>>> {
        Self::cached(&self.cyclics, r, || {
            r.ideal_sets()
                .iter()
                .filter(|i| i.len() < r.size())
                .map(|i| family::cyclic_module(r, i, &self.limits))
                .collect()
        })
    }

    /// The regular module of `r`, shared so its verdicts are computed once.
    pub fn regular(&self, r: &Arc<FiniteRing>) -> Result<Arc<FiniteModule>> {
        if let Some((_, m)) = self.regular.lock().expect("cache lock").get(&key(r)) {
            return Ok(Arc::clone(m));
        }
        let m = regular(r, &Limits {
            max_module_size: r.size(),
            ..self.limits
        })?;
        let mut guard = self.regular.lock().expect("cache lock");
        let entry = guard.entry(key(r)).or_insert_with(|| (Arc::clone(r), m));
        Ok(Arc::clone(&entry.1))
    }
}

/// A counterexample: the instance and its full clause vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub instance: String,
    pub clauses: Vec<bool>,
}

/// The outcome of checking one theorem over a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    /// The statement checked, in words.
    pub paper_ref: String,
    /// Instances evaluated; skipped instances are not included.
    pub instances: usize,
    pub agreements: usize,
    /// Instances skipped because a resource bound was exceeded.
    pub skipped: usize,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: Option<u64>,
    pub clauses: Vec<String>,
    pub status: String,
}

impl TheoremReport {
    /// The report with wall time removed, for byte-identical comparisons.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }

    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

pub fn find_theorem(id: &str) -> Result<&'static TheoremCheck> {
    registry()
        .iter()
        .find(|t| t.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))
}

/// Checks one theorem over an already built family.
pub fn run_check(check: &TheoremCheck, family: &Family, env: &Env) -> Result<TheoremReport> {
    let start = Instant::now();
    let instances = check.instances(family, env)?;
    let outcomes: Vec<Option<Vec<bool>>> = instances
        .par_iter()
        .map(|inst| match check.evaluate(env, inst) {
            Ok(v) => Ok(Some(v)),
            Err(e) if e.is_resource_bound() => Ok(None),
            Err(e) => Err(e),
        })
        .collect::<Result<_>>()?;
    let mut report = TheoremReport {
        theorem_id: check.id.to_string(),
        paper_ref: check.statement.to_string(),
        instances: 0,
        agreements: 0,
        skipped: 0,
        counterexamples: Vec::new(),
        elapsed_ms: None,
        clauses: check.clauses.iter().map(|c| c.to_string()).collect(),
        status: String::new(),
    };
    for (inst, outcome) in instances.iter().zip(outcomes) {
        match outcome {
            None => report.skipped += 1,
            Some(v) => {
                report.instances += 1;
                if check.relation.holds(&v) {
                    report.agreements += 1;
                } else {
                    report.counterexamples.push(Counterexample {
                        instance: inst.descriptor(),
                        clauses: v,
                    });
                }
            }
        }
    }
    let n = report.counterexamples.len();
    report.status = match (check.search, n) {
        (true, 0) => "no finite instance found".into(),
        (true, n) => format!("found {n}"),
        (false, 0) => "holds".into(),
        (false, _) => "counterexamples found".into(),
    };
    report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

/// Checks one theorem over the family a configuration generates.
pub fn run_theorem(id: &str, cfg: &FamilyConfig) -> Result<TheoremReport> {
    let check = find_theorem(id)?;
    let family = Family::new(cfg)?;
    run_check(check, &family, &Env::for_family(&family))
}

/// Checks every registered theorem, in registry order, over one shared family.
pub fn run_suite(cfg: &FamilyConfig) -> Result<Vec<Result<TheoremReport>>> {
    let family = Family::new(cfg)?;
    Ok(run_checks(registry(), &family))
}

/// Checks the given theorems over `family`; failures are reported per theorem.
pub fn run_checks<'a>(
    checks: impl IntoIterator<Item = &'a TheoremCheck>,
    family: &Family,
) -> Vec<Result<TheoremReport>> {
    let env = Env::for_family(family);
    checks.into_iter().map(|c| run_check(c, family, &env)).collect()
}

/// Rebuilds an instance of the kind `check` consumes from descriptor text.
pub fn replay(check: &TheoremCheck, text: &str, env: &Env) -> Result<Instance> {
    let d: Descriptor = text.parse()?;
    let limits = env.limits();
    let bad = || Error::MalformedDescriptor(format!("`{text}` is not a {:?} instance of {}", check.kind, check.id));
    Ok(match (check.kind, d) {
        (InstanceKind::Ring, Descriptor::Ring(r)) => Instance::Ring(build_ring(&r, limits)?),
        (InstanceKind::Ring, Descriptor::Module(ModuleDescriptor::ZAbelian(_))) if text.trim() == INTEGERS => {
            Instance::Integers
        }
        (InstanceKind::Module, Descriptor::Module(m)) => Instance::Module(build_module(&m, limits)?),
        (InstanceKind::Pair, Descriptor::Module(ModuleDescriptor::DirectSum(parts))) if parts.len() == 2 => {
            let a = build_module(&parts[0], limits)?;
            let b = build_module(&parts[1], limits)?;
            Instance::Pair(a, b)
        }
        (InstanceKind::Product, Descriptor::Module(ModuleDescriptor::ProductMod(a, b))) => {
            Instance::Product(build_module(&a, limits)?, build_module(&b, limits)?)
        }
        (InstanceKind::Trivext, Descriptor::Ring(RingDescriptor::TrivExt { module, .. })) => {
            let m = build_module(&module, limits)?;
            Instance::Trivext(Arc::new(trivial_extension(&m, limits)?))
        }
        (InstanceKind::Group, Descriptor::Module(ModuleDescriptor::ZAbelian(orders))) => {
            Instance::Group(Arc::new(ZModule::new(&orders, limits)?))
        }
        _ => return Err(bad()),
    })
}

/// Replays a reported instance and recomputes its clause vector.
pub fn explain(id: &str, instance: &str, cfg: &FamilyConfig) -> Result<Vec<bool>> {
    let check = find_theorem(id)?;
    let env = Env::new(cfg);
    let inst = replay(check, instance, &env)?;
    check.evaluate(&env, &inst)
}

//! Command-line front end: argument types, command execution and report rendering.

pub mod parse;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::deciders::{check_module, check_ring, ring_class_flags, ModuleProperty, RingProperty};
use crate::descriptor::{Descriptor, ModuleDescriptor};
use crate::error::{Error, Result};
use crate::harness::{self, find_theorem, registry, Env, Family, FamilyConfig, TheoremReport};
use crate::module::{build_module, FiniteModule};
use crate::ring::{build_ring, FiniteRing, Ideal, Limits};
use crate::verdict::Verdict;
use crate::zring::{
    classify_dedekind, z_is_cs, z_is_sin, z_is_strongly_cs, z_is_uniform, z_is_weakly_in, ZModule,
};

pub use parse::{parse_descriptor, parse_descriptor_file};

/// Exit status: the command completed and everything held.
pub const EXIT_OK: i32 = 0;
/// Exit status: a property was false or a counterexample was found.
pub const EXIT_FALSE: i32 = 1;
/// Exit status: the command could not be carried out.
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "csring", version, about = "CS-type properties of finite commutative rings and modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output to a file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide one property of a ring or module.
    Check {
        /// Descriptor text, e.g. "zmod 6" or "zabelian([2, 3])".
        #[arg(required_unless_present = "file")]
        descriptor: Option<String>,
        /// Property name; see `csring check --help` for the vocabulary.
        #[arg(long, value_parser = property_names())]
        property: String,
        /// Check every descriptor in a file (one per line, `#` comments).
        #[arg(long, conflicts_with = "descriptor")]
        file: Option<PathBuf>,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Print the structure of a ring or module.
    Analyze {
        descriptor: String,
        #[command(flatten)]
        bounds: Bounds,
    },
    /// Run theorem checks over the instance family.
    Verify {
        /// Theorem id, or `all`.
        #[arg(long, default_value = "all")]
        theorem: String,
        #[command(flatten)]
        family: FamilyArgs,
        /// Include wall-clock times in reports.
        #[arg(long)]
        timing: bool,
    },
    /// Replay an instance, or every counterexample of a structured report.
    Explain {
        /// Theorem id; required with an instance.
        #[arg(long, required_unless_present = "report")]
        theorem: Option<String>,
        /// Instance descriptor as printed in a report.
        #[arg(required_unless_present = "report")]
        instance: Option<String>,
        /// A structured report written by `verify`.
        #[arg(long, conflicts_with = "instance")]
        report: Option<PathBuf>,
        #[command(flatten)]
        family: FamilyArgs,
    },
}

/// Size bounds for single-object commands.
#[derive(Debug, Clone, clap::Args)]
pub struct Bounds {
    #[arg(long, default_value_t = 4096)]
    pub max_ring_size: usize,
    #[arg(long, default_value_t = 4096)]
    pub max_module_size: usize,
    #[arg(long, default_value_t = 1 << 16)]
    pub max_submodule_count: usize,
}

impl Bounds {
    fn limits(&self) -> Limits {
        Limits {
            max_ring_size: self.max_ring_size,
            max_module_size: self.max_module_size,
            max_submodule_count: self.max_submodule_count,
        }
    }
}

/// Family configuration: a key=value file overridden by flags.
#[derive(Debug, Clone, Default, clap::Args)]
pub struct FamilyArgs {
    /// Config file with one `key = value` line per family field.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub max_ring_size: Option<usize>,
    #[arg(long)]
    pub max_module_size: Option<usize>,
    #[arg(long)]
    pub max_submodule_count: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

impl FamilyArgs {
    pub fn resolve(&self) -> Result<FamilyConfig> {
        let mut cfg = match &self.config {
            Some(path) => parse_config(&read(path)?)?,
            None => FamilyConfig::default(),
        };
        if let Some(v) = self.max_ring_size {
            cfg.max_ring_size = v;
        }
        if let Some(v) = self.max_module_size {
            cfg.max_module_size = v;
        }
        if let Some(v) = self.max_submodule_count {
            cfg.max_submodule_count = v;
        }
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Parses `key = value` lines; missing keys keep their defaults.
pub fn parse_config(text: &str) -> Result<FamilyConfig> {
    toml::from_str(text).map_err(|e| Error::MalformedDescriptor(format!("config: {}", e.message())))
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::MalformedDescriptor(format!("cannot read {}: {e}", path.display())))
}

fn property_names() -> Vec<&'static str> {
    let mut names: Vec<&'static str> = ModuleProperty::ALL.iter().map(|p| p.name()).collect();
    names.extend(RingProperty::ALL.iter().map(|p| p.name()));
    names
}

/// Output of a command: rendered text, structured value and exit status.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub text: String,
    pub structured: Value,
    pub status: i32,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(&self.structured).expect("json values serialize");
                s.push('\n');
                s
            }
        }
    }
}

/// Runs a command. Errors are folded into an outcome with exit status 2.
pub fn execute(cmd: &Command) -> Outcome {
    let result = match cmd {
        Command::Check {
            descriptor,
            property,
            file,
            bounds,
        } => match (descriptor, file) {
            (_, Some(path)) => read(path).and_then(|t| check_file(&t, property, &bounds.limits())),
            (Some(d), None) => check(d, property, &bounds.limits()),
            (None, None) => Err(Error::MalformedDescriptor("no descriptor given".into())),
        },
        Command::Analyze { descriptor, bounds } => analyze(descriptor, &bounds.limits()),
        Command::Verify {
            theorem,
            family,
            timing,
        } => family.resolve().and_then(|cfg| verify(theorem, &cfg, *timing)),
        Command::Explain {
            theorem,
            instance,
            report,
            family,
        } => family.resolve().and_then(|cfg| match (report, theorem, instance) {
            (Some(path), _, _) => read(path).and_then(|t| explain_report(&t, &cfg)),
            (None, Some(id), Some(inst)) => explain(id, inst, &cfg),
            _ => Err(Error::MalformedDescriptor("explain needs a theorem and an instance".into())),
        }),
    };
    result.unwrap_or_else(|e| Outcome {
        text: format!("error: {e}\n"),
        structured: json!({ "error": e.to_string() }),
        status: EXIT_ERROR,
    })
}

/// Attaches the descriptor to an error message.
fn provenance(text: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| match e {
        Error::Syntax { .. } => e,
        other => Error::MalformedDescriptor(format!("{}: {other}", text.trim())),
    }
}

enum Target {
    Ring(Arc<FiniteRing>),
    Module(Arc<FiniteModule>),
    Group(ZModule),
}

fn build_target(d: &Descriptor, limits: &Limits) -> Result<Target> {
    Ok(match d {
        Descriptor::Ring(r) => Target::Ring(build_ring(r, limits)?),
        Descriptor::Module(ModuleDescriptor::ZAbelian(orders)) => Target::Group(ZModule::new(orders, limits)?),
        Descriptor::Module(m) => Target::Module(build_module(m, limits)?),
    })
}

/// Decides `property` for one descriptor. Module properties of a ring are
/// decided for its regular module; `zabelian` descriptors are modules over
/// the integers.
pub fn decide(d: &Descriptor, property: &str, limits: &Limits) -> Result<Verdict> {
    let module_prop = property.parse::<ModuleProperty>().ok();
    let ring_prop = property.parse::<RingProperty>().ok();
    if module_prop.is_none() && ring_prop.is_none() {
        return Err(Error::MalformedDescriptor(format!("unknown property `{property}`")));
    }
    match (build_target(d, limits)?, module_prop, ring_prop) {
        (Target::Ring(r), _, Some(p)) => check_ring(&r, p),
        (Target::Ring(r), Some(p), None) => check_module(&crate::deciders::regular_module(&r)?, p),
        (Target::Module(m), Some(p), _) => check_module(&m, p),
        (Target::Group(g), Some(p), _) => match p {
            ModuleProperty::WeaklyIn => z_is_weakly_in(&g),
            ModuleProperty::StronglyCs => z_is_strongly_cs(&g),
            ModuleProperty::Cs => z_is_cs(&g),
            ModuleProperty::Uniform => z_is_uniform(&g),
            ModuleProperty::Sin => z_is_sin(&g),
            // both depend only on the subgroup lattice and integer scalars
            ModuleProperty::QuasiContinuous | ModuleProperty::ScalarIdempotentEndos => check_module(g.carrier(), p),
            ModuleProperty::Projective => Err(Error::OutOfRange(
                "projectivity over the integers is not decided for finite groups".into(),
            )),
        },
        (_, None, Some(p)) => Err(Error::MalformedDescriptor(format!("`{p}` is a ring property"))),
        (_, None, None) => unreachable!(),
    }
}

fn verdict_json(d: &str, property: &str, v: &Verdict) -> Value {
    json!({
        "descriptor": d,
        "property": property,
        "value": v.value,
        "witness": v.witness,
        "method": v.method,
    })
}

fn verdict_text(d: &str, property: &str, v: &Verdict) -> String {
    let mut s = format!("{d}: {property} = {}\n", v.value);
    if let Some(w) = &v.witness {
        let _ = writeln!(s, "  witness: {w}");
    }
    let _ = writeln!(s, "  method: {:?}", v.method);
    s
}

pub fn check(text: &str, property: &str, limits: &Limits) -> Result<Outcome> {
    let d: Descriptor = text.parse()?;
    let v = decide(&d, property, limits).map_err(provenance(text))?;
    let shown = d.to_string();
    Ok(Outcome {
        text: verdict_text(&shown, property, &v),
        structured: verdict_json(&shown, property, &v),
        status: if v.value { EXIT_OK } else { EXIT_FALSE },
    })
}

fn check_file(text: &str, property: &str, limits: &Limits) -> Result<Outcome> {
    let mut out = String::new();
    let mut values = Vec::new();
    let mut status = EXIT_OK;
    for d in parse_descriptor_file(text)? {
        let shown = d.to_string();
        let v = decide(&d, property, limits).map_err(provenance(&shown))?;
        if !v.value {
            status = EXIT_FALSE;
        }
        out.push_str(&verdict_text(&shown, property, &v));
        values.push(verdict_json(&shown, property, &v));
    }
    Ok(Outcome {
        text: out,
        structured: Value::Array(values),
        status,
    })
}

fn lits(i: &Ideal) -> String {
    let g: Vec<String> = i.generator_literals().iter().map(|l| l.to_string()).collect();
    format!("({})", g.join(", "))
}

fn labels(r: &FiniteRing, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| r.label(x).to_string()).collect()
}

pub fn analyze(text: &str, limits: &Limits) -> Result<Outcome> {
    let d: Descriptor = text.parse()?;
    let shown = d.to_string();
    let target = build_target(&d, limits).map_err(provenance(text))?;
    let structured = match &target {
        Target::Ring(r) => analyze_ring(r).map_err(provenance(text))?,
        Target::Module(m) => analyze_module(m).map_err(provenance(text))?,
        Target::Group(g) => analyze_group(g).map_err(provenance(text))?,
    };
    let mut text_out = format!("{shown}\n");
    if let Value::Object(map) = &structured {
        for (k, v) in map {
            let _ = writeln!(text_out, "  {k}: {}", compact(v));
        }
    }
    Ok(Outcome {
        text: text_out,
        structured: json!({ "descriptor": shown, "analysis": structured }),
        status: EXIT_OK,
    })
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn analyze_ring(r: &Arc<FiniteRing>) -> Result<Value> {
    let ideals: Vec<String> = r.ideals().iter().map(lits).collect();
    let radicals = r.structural_ideals();
    let spec = r.prime_spectrum()?;
    let spec_lits = |v: &[Ideal]| v.iter().map(lits).collect::<Vec<_>>();
    let mut map = serde_json::Map::new();
    map.insert("size".into(), json!(r.size()));
    map.insert("ideals".into(), json!(ideals));
    map.insert("idempotents".into(), json!(labels(r, &r.idempotents())));
    map.insert("units".into(), json!(r.units().len()));
    map.insert("nilradical".into(), json!(lits(&radicals.nil)));
    map.insert("jacobson_radical".into(), json!(lits(&radicals.jacobson)));
    map.insert("socle".into(), json!(lits(&radicals.socle)));
    map.insert("maximal_ideals".into(), json!(spec_lits(&spec.maximal)));
    map.insert("minimal_primes".into(), json!(spec_lits(&spec.minimal)));
    map.insert(
        "peirce_idempotents".into(),
        json!(labels(r, &r.peirce_decomposition().idempotents)),
    );
    if !r.is_zero_ring() {
        let flags = ring_class_flags(r)?;
        map.insert("zero_dimensional".into(), json!(flags.zero_dimensional));
        map.insert("mp".into(), json!(flags.mp));
        map.insert("purified".into(), json!(flags.purified));
        for p in [RingProperty::Clean, RingProperty::Chain, RingProperty::CsRing] {
            map.insert(p.name().into(), json!(check_ring(r, p)?.value));
        }
    }
    Ok(Value::Object(map))
}

fn analyze_module(m: &Arc<FiniteModule>) -> Result<Value> {
    let mut map = serde_json::Map::new();
    map.insert("size".into(), json!(m.size()));
    map.insert("ring".into(), json!(m.ring().pedigree().to_string()));
    map.insert("submodules".into(), json!(m.all_submodules()?.len()));
    map.insert("annihilator".into(), json!(lits(&m.annihilator())));
    map.insert("faithful".into(), json!(m.is_faithful()));
    if !m.is_zero() {
        for p in ModuleProperty::ALL {
            let v = match check_module(m, p) {
                Ok(v) => json!(v.value),
                Err(e) if e.is_resource_bound() => json!("skipped"),
                Err(e) => return Err(e),
            };
            map.insert(p.name().into(), v);
        }
    }
    Ok(Value::Object(map))
}

fn analyze_group(g: &ZModule) -> Result<Value> {
    let class = classify_dedekind(g)?;
    Ok(json!({
        "order": g.size(),
        "invariant_factors": g.invariant_factors(),
        "exponent": g.exponent(),
        "weakly_in": z_is_weakly_in(g)?.value,
        "strongly_cs": z_is_strongly_cs(g)?.value,
        "cs": z_is_cs(g)?.value,
        "uniform": z_is_uniform(g)?.value,
        "prime_power_cyclic": class.prime_power_cyclic,
        "coprime_primary_sum": class.coprime_primary_sum,
    }))
}

/// Runs one theorem or the whole registry and renders the reports.
pub fn verify(theorem: &str, cfg: &FamilyConfig, timing: bool) -> Result<Outcome> {
    let checks: Vec<_> = if theorem.eq_ignore_ascii_case("all") {
        registry().iter().collect()
    } else {
        vec![find_theorem(theorem)?]
    };
    let family = Family::new(cfg)?;
    let results = harness::run_checks(checks, &family);
    let mut reports = Vec::new();
    for r in results {
        let r = r?;
        reports.push(if timing { r } else { r.without_timing() });
    }
    Ok(render_reports(&reports))
}

/// Text and structured forms of a batch of reports, with the exit status.
pub fn render_reports(reports: &[TheoremReport]) -> Outcome {
    let mut text = String::new();
    let mut status = EXIT_OK;
    let mut skipped = 0;
    let mut skipping = 0;
    for r in reports {
        let search = find_theorem(&r.theorem_id).is_ok_and(|c| c.search);
        let _ = write!(
            text,
            "{}: {} ({} instances, {} agreements, {} counterexamples",
            r.theorem_id,
            r.status,
            r.instances,
            r.agreements,
            r.counterexamples.len()
        );
        if let Some(ms) = r.elapsed_ms {
            let _ = write!(text, ", {ms} ms");
        }
        text.push_str(")\n");
        for c in &r.counterexamples {
            let v: Vec<&str> = c.clauses.iter().map(|&b| if b { "1" } else { "0" }).collect();
            let _ = writeln!(text, "  {} [{}]", c.instance, v.join(" "));
        }
        // search hits are findings, not failures
        if !search && !r.counterexamples.is_empty() {
            status = EXIT_FALSE;
        }
        if r.skipped > 0 {
            skipped += r.skipped;
            skipping += 1;
        }
    }
    if skipped > 0 {
        let _ = writeln!(text, "SKIPPED: {skipped} instances over resource bounds in {skipping} theorem(s)");
    }
    Outcome {
        text,
        structured: serde_json::to_value(reports).expect("reports serialize"),
        status,
    }
}

fn clause_line(id: &str, instance: &str, v: &[bool], holds: bool) -> String {
    let check = find_theorem(id).ok();
    let mut s = format!("{id} {instance}\n");
    for (i, b) in v.iter().enumerate() {
        let name = check.and_then(|c| c.clauses.get(i)).copied().unwrap_or("?");
        let _ = writeln!(s, "  {name} = {b}");
    }
    let _ = writeln!(s, "  relation {}", if holds { "holds" } else { "violated" });
    s
}

/// Replays one instance and prints its clause vector.
pub fn explain(id: &str, instance: &str, cfg: &FamilyConfig) -> Result<Outcome> {
    let check = find_theorem(id)?;
    let v = harness::explain(id, instance, cfg).map_err(provenance(instance))?;
    let holds = check.relation.holds(&v);
    Ok(Outcome {
        text: clause_line(check.id, instance, &v, holds),
        structured: json!({ "theorem_id": check.id, "instance": instance, "clauses": v, "holds": holds }),
        status: if holds { EXIT_OK } else { EXIT_FALSE },
    })
}

/// Replays every counterexample of a structured report and compares the
/// recomputed clause vectors with the recorded ones.
pub fn explain_report(text: &str, cfg: &FamilyConfig) -> Result<Outcome> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::MalformedDescriptor(format!("report: {e}")))?;
    let reports: Vec<TheoremReport> = match value {
        Value::Array(_) => serde_json::from_value(value),
        other => serde_json::from_value(other).map(|r| vec![r]),
    }
    .map_err(|e| Error::MalformedDescriptor(format!("report: {e}")))?;
    let env = Env::new(cfg);
    let mut out = String::new();
    let mut rows = Vec::new();
    let mut status = EXIT_OK;
    for r in &reports {
        let check = find_theorem(&r.theorem_id)?;
        for c in &r.counterexamples {
            let inst = harness::replay(check, &c.instance, &env).map_err(provenance(&c.instance))?;
            let v = check.evaluate(&env, &inst).map_err(provenance(&c.instance))?;
            let reproduced = v == c.clauses;
            let holds = check.relation.holds(&v);
            if !holds {
                status = EXIT_FALSE;
            }
            out.push_str(&clause_line(check.id, &c.instance, &v, holds));
            let _ = writeln!(out, "  reproduced: {reproduced}");
            rows.push(json!({
                "theorem_id": check.id,
                "instance": c.instance,
                "clauses": v,
                "holds": holds,
                "reproduced": reproduced,
            }));
            if !reproduced {
                return Err(Error::MalformedDescriptor(format!(
                    "{}: replay of {} gave a different clause vector",
                    check.id, c.instance
                )));
            }
        }
    }
    if rows.is_empty() {
        out.push_str("no counterexamples to replay\n");
    }
    Ok(Outcome {
        text: out,
        structured: Value::Array(rows),
        status,
    })
}

/// Parses arguments, executes, writes output, and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    let outcome = execute(&cli.command);
    let rendered = outcome.render(cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_ERROR;
            }
        }
        None if outcome.status == EXIT_ERROR && cli.format == Format::Text => eprint!("{rendered}"),
        None => print!("{rendered}"),
    }
    outcome.status
}

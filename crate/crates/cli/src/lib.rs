//! Command-line front end. `run` parses arguments, executes one subcommand and
//! writes its report to `out`.
//!
//! Exit status: 0 on success, 1 when a query answers negatively (a screen
//! fails, a module is not weak-Berger), 2 on usage or input errors.

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use weakberger::bruteforce::{
    build_matrix_rep_in, cross_check_screens, weak_berger_space_with, Catalog, SolverBounds, TripleMode,
    DEFAULT_MAX_DIM_V, DEFAULT_MAX_UNKNOWNS,
};
use weakberger::classify::{full_report, Bounds, ClassificationReport, ClassifyConfig};
use weakberger::repweights::{duality_and_bilinear_type, weight_system, IrrepSpec};
use weakberger::rootsys::parse_type;
use weakberger::screens::{
    check_pi, check_pii, check_piii, check_piv, check_si_sii, schwachhoefer, ScreenInput, ScreenVerdict,
};
use weakberger::{build_root_system, Family, RootSystem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[command(
    name = "weakberger",
    version,
    about = "Root systems, weight systems and weak-Berger screens"
)]
pub struct CommandConfig {
    /// Output format: aligned text or one JSON object per line.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Human,
    Json,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
pub enum Command {
    /// List the roots of a root system, e.g. `roots B 2` or `roots E7`.
    Roots(TypeArgs),
    /// Weights of an irreducible module, e.g. `weights C3 0,0,1`.
    Weights(WeightsArgs),
    /// Run one screen on a module, e.g. `screen piv B6 spin`.
    Screen(ScreenArgs),
    /// Exact weak-Berger certificate for a catalog entry.
    Bruteforce(BruteforceArgs),
    /// Classification sweeps.
    Classify(ClassifyArgs),
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeArgs {
    /// `B2`, or family and rank as two words.
    #[arg(num_args = 0..=2)]
    pub positional: Vec<String>,
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
}

/// Type followed by a weight: `C3 0,0,1`, `E7 omega1`, `B 6 spin`.
#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleArgs {
    #[arg(num_args = 0..=3)]
    pub positional: Vec<String>,
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
    /// Dynkin labels `a,b,c`, `omegaK`, sums like `omega1+2omega3`, `spin` or `0`.
    #[arg(long)]
    pub weight: Option<String>,
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightsArgs {
    #[command(flatten)]
    pub module: ModuleArgs,
    /// Print only the number of distinct weights.
    #[arg(long)]
    pub count_only: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScreenName {
    Pi,
    Pii,
    Si,
    Sii,
    Piii,
    Piv,
    Schwachhoefer,
    All,
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScreenArgs {
    #[arg(value_enum)]
    pub predicate: ScreenName,
    #[command(flatten)]
    pub module: ModuleArgs,
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteforceArgs {
    /// Catalog id, e.g. `so5` or `sl2_x_sym3`.
    pub id: String,
    /// Catalog file; the built-in catalog when absent.
    #[arg(long)]
    pub catalog: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_MAX_DIM_V)]
    pub max_dim_v: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_UNKNOWNS)]
    pub max_unknowns: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BranchName {
    Pair,
    Sl2Partner,
    Triple,
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyArgs {
    /// Emit every record with its full evidence instead of a summary.
    #[arg(long)]
    pub full: bool,
    /// Restrict to these branches; all three when absent.
    #[arg(long, value_enum)]
    pub branch: Vec<BranchName>,
    /// Rank bound for every branch.
    #[arg(long)]
    pub max_rank: Option<usize>,
    /// Factor dimension bound for every branch.
    #[arg(long)]
    pub max_dim: Option<u64>,
    /// Factor dimension bound for the pair branch only.
    #[arg(long)]
    pub pair_max_dim: Option<u64>,
    /// Also write the full report as one JSON document to this file.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug)]
struct Failure(i32, String);

impl From<weakberger::Error> for Failure {
    fn from(e: weakberger::Error) -> Self {
        let code = match e {
            weakberger::Error::NoInvariantForm => EXIT_NEGATIVE,
            _ => EXIT_USAGE,
        };
        Failure(code, e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cfg = match CommandConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    run_config(&cfg, out, err)
}

pub fn run_config(cfg: &CommandConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut sink = Sink {
        out,
        format: cfg.format,
    };
    let res = match &cfg.command {
        Command::Roots(a) => roots(a, &mut sink),
        Command::Weights(a) => weights(a, &mut sink),
        Command::Screen(a) => screen(a, &mut sink),
        Command::Bruteforce(a) => bruteforce(a, &mut sink),
        Command::Classify(a) => classify(a, &mut sink),
    };
    match res {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

struct Sink<'a> {
    out: &'a mut dyn Write,
    format: Format,
}

impl Sink<'_> {
    fn json(&self) -> bool {
        self.format == Format::Json
    }

    fn line(&mut self, s: impl AsRef<str>) -> Result<(), Failure> {
        writeln!(self.out, "{}", s.as_ref()).map_err(|e| Failure(EXIT_USAGE, e.to_string()))
    }

    /// One JSON line tagged with `record`.
    fn record(&mut self, record: &str, body: Value) -> Result<(), Failure> {
        let mut map = serde_json::Map::new();
        map.insert("record".into(), Value::from(record));
        match body {
            Value::Object(o) => map.extend(o),
            other => {
                map.insert("value".into(), other);
            }
        }
        self.line(Value::Object(map).to_string())
    }
}

fn parse_family(s: &str) -> Result<Family, Failure> {
    parse_type(&format!("{s}1"))
        .or_else(|_| parse_type(&format!("{s}4")))
        .or_else(|_| parse_type(&format!("{s}6")))
        .or_else(|_| parse_type(&format!("{s}2")))
        .map(|(f, _)| f)
        .map_err(|_| usage(format!("unknown family '{s}'")))
}

/// Resolves the root system and returns the positionals left over.
fn resolve_type(
    positional: &[String],
    family: &Option<String>,
    rank: Option<usize>,
) -> Result<(RootSystem, Vec<String>), Failure> {
    let (f, n, rest) = match (family, rank) {
        (Some(f), Some(n)) => (parse_family(f)?, n, positional.to_vec()),
        (Some(_), None) | (None, Some(_)) => return Err(usage("--family and --rank go together")),
        (None, None) => {
            let first = positional.first().ok_or_else(|| usage("missing root system type"))?;
            match positional.get(1).map(|s| s.parse::<usize>()) {
                Some(Ok(n)) if first.chars().all(|c| c.is_ascii_alphabetic()) => {
                    (parse_family(first)?, n, positional[2..].to_vec())
                }
                _ => {
                    let (f, n) = parse_type(first)?;
                    (f, n, positional[1..].to_vec())
                }
            }
        }
    };
    Ok((build_root_system(f, n)?, rest))
}

/// Dynkin labels from `a,b,c`, `omegaK`, `komegaK` sums, `spin`, `0` or `trivial`.
pub fn parse_weight(rs: &RootSystem, s: &str) -> Result<Vec<i64>, String> {
    let n = rs.rank();
    let s = s.trim();
    if s == "0" || s == "trivial" {
        return Ok(vec![0; n]);
    }
    if s == "spin" {
        return match rs.family() {
            Family::B | Family::D => {
                let mut l = vec![0; n];
                l[n - 1] = 1;
                Ok(l)
            }
            _ => Err(format!("'spin' needs type B or D, not {}", rs.name())),
        };
    }
    if s.contains("omega") {
        let mut l = vec![0; n];
        for term in s.split('+') {
            let (coef, idx) = term
                .trim()
                .split_once("omega")
                .ok_or_else(|| format!("bad term '{term}'"))?;
            let coef = coef.trim_end_matches('*');
            let c: i64 = if coef.is_empty() {
                1
            } else {
                coef.parse().map_err(|_| format!("bad coefficient in '{term}'"))?
            };
            let i: usize = idx.parse().map_err(|_| format!("bad index in '{term}'"))?;
            if i == 0 || i > n {
                return Err(format!("omega{i} out of range for {}", rs.name()));
            }
            l[i - 1] += c;
        }
        return Ok(l);
    }
    let l: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| format!("bad label '{x}'")))
        .collect::<Result<_, _>>()?;
    if l.len() != n {
        return Err(format!("{} needs {n} labels, got {}", rs.name(), l.len()));
    }
    Ok(l)
}

fn resolve_module(m: &ModuleArgs) -> Result<IrrepSpec, Failure> {
    let (rs, rest) = resolve_type(&m.positional, &m.family, m.rank)?;
    let weight = match (&m.weight, rest.as_slice()) {
        (Some(w), []) => w.clone(),
        (None, [w]) => w.clone(),
        (None, []) => return Err(usage("missing weight")),
        _ => return Err(usage("too many arguments")),
    };
    let labels = parse_weight(&rs, &weight).map_err(usage)?;
    Ok(IrrepSpec::from_labels(Arc::new(rs), &labels)?)
}

fn roots(a: &TypeArgs, sink: &mut Sink) -> Outcome {
    let (rs, rest) = resolve_type(&a.positional, &a.family, a.rank)?;
    if !rest.is_empty() {
        return Err(usage("too many arguments"));
    }
    let positive = rs.positive_roots().to_vec();
    for (sign, list) in [(true, positive.clone()), (false, positive.iter().map(|r| -r).collect())] {
        for r in list {
            if sink.json() {
                let simple = rs.simple_roots().contains(&r);
                sink.record(
                    "root",
                    json!({ "type": rs.name(), "vector": r, "positive": sign, "simple": simple }),
                )?;
            } else {
                sink.line(r.to_string())?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn weights(a: &WeightsArgs, sink: &mut Sink) -> Outcome {
    let spec = resolve_module(&a.module)?;
    let ws = weight_system(&spec)?;
    let rs = spec.root_system();
    if !a.count_only {
        for e in ws.entries() {
            let labels: Vec<String> = rs.dynkin_labels(&e.weight).iter().map(ToString::to_string).collect();
            if sink.json() {
                sink.record(
                    "weight",
                    json!({ "vector": e.weight, "labels": labels, "multiplicity": e.multiplicity }),
                )?;
            } else {
                sink.line(format!(
                    "{:<40} [{}]  x{}",
                    e.weight.to_string(),
                    labels.join(","),
                    e.multiplicity
                ))?;
            }
        }
    }
    if sink.json() {
        sink.record(
            "weight-count",
            json!({
                "module": spec,
                "distinct": ws.len(),
                "dimension": ws.total_dim(),
                "bilinear_type": duality_and_bilinear_type(&spec),
            }),
        )?;
    } else if a.count_only {
        sink.line(ws.len().to_string())?;
    }
    Ok(EXIT_OK)
}

fn screen(a: &ScreenArgs, sink: &mut Sink) -> Outcome {
    let spec = resolve_module(&a.module)?;
    if spec.is_trivial() {
        return Err(usage("screens need a nontrivial module"));
    }
    let ws = weight_system(&spec)?;
    let input = ScreenInput::from_weight_system(&ws);
    let lambda = spec.highest_weight();
    let mut verdicts: Vec<ScreenVerdict> = Vec::new();
    let want = |n: ScreenName| a.predicate == n || a.predicate == ScreenName::All;
    if want(ScreenName::Pi) {
        verdicts.push(check_pi(&input));
    }
    if want(ScreenName::Pii) {
        verdicts.push(check_pii(&input));
    }
    if want(ScreenName::Si) || want(ScreenName::Sii) {
        let (si, sii) = check_si_sii(&input, lambda)?;
        if want(ScreenName::Si) {
            verdicts.push(si);
        }
        if want(ScreenName::Sii) {
            verdicts.push(sii);
        }
    }
    if want(ScreenName::Piii) {
        verdicts.push(check_piii(&input));
    }
    if want(ScreenName::Piv) {
        verdicts.push(check_piv(&input));
    }
    let mut ok = true;
    for v in &verdicts {
        ok &= v.passed;
        if sink.json() {
            let mut body = serde_json::to_value(v).expect("verdicts serialize");
            body["module"] = json!(spec);
            sink.record("verdict", body)?;
        } else {
            sink.line(format!("{}: {v}", spec.name()))?;
        }
    }
    if want(ScreenName::Schwachhoefer) {
        let rep = schwachhoefer(&input)?;
        if sink.json() {
            sink.record(
                "schwachhoefer",
                json!({ "module": spec, "class": rep.class.to_string(), "max_size": rep.max_size, "exceeding": rep.exceeding }),
            )?;
        } else {
            sink.line(format!("{}: {} (max #Ω_α = {})", spec.name(), rep.class, rep.max_size))?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_NEGATIVE })
}

fn bruteforce(a: &BruteforceArgs, sink: &mut Sink) -> Outcome {
    let loaded;
    let catalog = match &a.catalog {
        Some(p) => {
            loaded = Catalog::load(p)?;
            &loaded
        }
        None => Catalog::builtin(),
    };
    let rep = build_matrix_rep_in(catalog, &a.id, a.max_dim_v)?;
    let bounds = SolverBounds {
        max_dim_v: a.max_dim_v,
        max_unknowns: a.max_unknowns,
    };
    let cert = weak_berger_space_with(&rep, bounds, TripleMode::for_form(rep.symmetry))?;
    cert.replay(&rep)
        .map_err(|e| Failure(EXIT_NEGATIVE, format!("certificate replay failed: {e}")))?;
    let cc = cross_check_screens(&rep, &cert)?;
    if sink.json() {
        sink.record(
            "certificate",
            serde_json::to_value(&cert).expect("certificates serialize"),
        )?;
        sink.record(
            "cross-check",
            serde_json::to_value(&cc).expect("cross-checks serialize"),
        )?;
    } else {
        sink.line(format!(
            "{}: dim V {}, dim g {}, dim B_h {}, span {}/{}, {:?} form",
            cert.descriptor, cert.dim_v, cert.dim_g, cert.dim_bh, cert.span_dim, cert.dim_g, cert.form
        ))?;
        sink.line(format!(
            "weak-Berger: {}{}",
            cert.is_weak_berger,
            if cert.is_weak_berger && !cert.is_orthogonal_weak_berger() {
                " (h antisymmetric)"
            } else {
                ""
            }
        ))?;
        for v in &cc.verdicts {
            sink.line(format!("  {v}"))?;
        }
    }
    Ok(if cert.is_weak_berger { EXIT_OK } else { EXIT_NEGATIVE })
}

fn classify_config(a: &ClassifyArgs) -> ClassifyConfig {
    let mut cfg = ClassifyConfig::default();
    let overrides = |b: &mut Bounds| {
        if let Some(r) = a.max_rank {
            b.max_rank = r;
        }
        if let Some(d) = a.max_dim {
            b.max_dim = d;
        }
    };
    overrides(&mut cfg.pair);
    overrides(&mut cfg.sl2_partner);
    overrides(&mut cfg.triple);
    if let Some(d) = a.pair_max_dim {
        cfg.pair.max_dim = d;
    }
    if !a.branch.is_empty() {
        let off = Bounds {
            max_rank: 0,
            max_dim: 0,
        };
        if !a.branch.contains(&BranchName::Pair) {
            cfg.pair = off.clone();
        }
        if !a.branch.contains(&BranchName::Sl2Partner) {
            cfg.sl2_partner = off.clone();
        }
        if !a.branch.contains(&BranchName::Triple) {
            cfg.triple = off;
        }
    }
    cfg
}

fn classify(a: &ClassifyArgs, sink: &mut Sink) -> Outcome {
    let report = full_report(&classify_config(a));
    if let Some(path) = &a.report {
        std::fs::write(path, report.to_json()).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    if sink.json() {
        classify_json(&report, a.full, sink)?;
    } else {
        for l in report.render_human().lines() {
            sink.line(l)?;
        }
    }
    Ok(EXIT_OK)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report records serialize")
}

fn classify_json(report: &ClassificationReport, full: bool, sink: &mut Sink) -> Result<(), Failure> {
    for a in &report.admitted {
        let mut body = to_value(a);
        if !full {
            body.as_object_mut().expect("object").remove("evidence");
        }
        sink.record("admitted", body)?;
    }
    if full {
        for r in &report.rejected {
            sink.record("rejected", to_value(r))?;
        }
    } else {
        let mut counts: Vec<(Value, Value, usize)> = Vec::new();
        for r in &report.rejected {
            let key = (json!(r.branch), json!(r.stage));
            match counts.iter_mut().find(|(b, s, _)| (b, s) == (&key.0, &key.1)) {
                Some(c) => c.2 += 1,
                None => counts.push((key.0, key.1, 1)),
            }
        }
        for (branch, stage, count) in counts {
            sink.record(
                "rejected-count",
                json!({ "branch": branch, "stage": stage, "count": count }),
            )?;
        }
    }
    for c in &report.coverage {
        sink.record("coverage", to_value(c))?;
    }
    for (candidate, space) in &report.symmetric_space_annotations {
        sink.record(
            "annotation",
            json!({ "candidate": candidate, "symmetric_space": space }),
        )?;
    }
    Ok(())
}

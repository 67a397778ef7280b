//! The `ordsemi` command line: argument grammar, verb dispatch and report
//! rendering. [`run`] is the whole program minus process I/O, so tests can
//! drive it directly.
//!
//! Exit codes: 0 success, 2 invalid input or usage, 3 a failing verdict
//! under `--assert`, 4 a size bound exceeded.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use ordsemi::constructions::{builder, extend_hom, power_construction, PlainSemigroup, Template};
use ordsemi::corpus::{canonical_corpus, run_corpus};
use ordsemi::decompose::{classify_decomposition, decompose, Decomposition};
use ordsemi::properties::{verify_theorem, PropertyVerdict};
use ordsemi::relations::{green, least_complete_semilattice_congruence, GreenRelation};
use ordsemi::search::{enumerate, find_counterexample, ClaimSpec, Enumerated, EnumerationConfig};
use ordsemi::{
    check, Error, OrderedSemigroup, Partition, PropertyId, RawStructure, TheoremId, TheoremReport,
    Verdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_ASSERT: i32 = 3;
pub const EXIT_SIZE_BOUND: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "ordsemi",
    version,
    about = "Finite ordered semigroups: properties, decompositions, enumeration"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Exit with code 3 when a verdict or report fails.
    #[arg(long, global = true)]
    assert: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Decide properties of a structure.
    Check {
        file: PathBuf,
        /// Property to decide; repeatable. Defaults to all.
        #[arg(long = "property", value_parser = parse_property)]
        properties: Vec<PropertyId>,
    },
    /// Every property plus the least complete semilattice decomposition.
    Classify { file: PathBuf },
    /// Green's relations as partitions.
    Green {
        file: PathBuf,
        #[arg(long = "relation", value_parser = parse_relation)]
        relations: Vec<GreenRelation>,
    },
    /// Quotient by a semilattice congruence and check the decomposition.
    Decompose {
        file: PathBuf,
        /// least-csc, l, r, j or h.
        #[arg(long, default_value = "least-csc", conflicts_with = "class_of")]
        congruence: String,
        /// Explicit congruence as comma-separated class ids.
        #[arg(long, value_delimiter = ',')]
        class_of: Option<Vec<usize>>,
        /// Print the quotient's Hasse diagram in DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Check the stated relation between a theorem's conditions.
    Verify(VerifyArgs),
    /// The ordered semigroup of nonempty subsets of a semigroup's table.
    Power {
        file: PathBuf,
        /// Extend a homomorphism into this structure instead.
        #[arg(long, requires = "map")]
        into: Option<PathBuf>,
        /// Images of the base elements, comma-separated.
        #[arg(long, value_delimiter = ',', requires = "into")]
        map: Option<Vec<usize>>,
    },
    /// Build a fixture structure.
    Build {
        template: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        path: Option<PathBuf>,
    },
    /// List every structure of a given size, one per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_property)]
        require: Option<PropertyId>,
        #[arg(long)]
        up_to_iso: bool,
        /// Semigroups without orders.
        #[arg(long)]
        plain: bool,
        /// Print only the number of structures.
        #[arg(long)]
        count: bool,
    },
    /// Search small structures for a failure of `hyp ⟹ concl`.
    Counterexample {
        #[arg(long, value_delimiter = ',', value_parser = parse_property, required = true)]
        hyp: Vec<PropertyId>,
        #[arg(long, value_delimiter = ',', value_parser = parse_property, required = true)]
        concl: Vec<PropertyId>,
        /// Only consider idempotent ordered structures.
        #[arg(long)]
        restrict: bool,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(required_unless_present = "corpus", conflicts_with = "corpus")]
    file: Option<PathBuf>,
    #[arg(long = "theorem", value_parser = parse_theorem)]
    theorems: Vec<TheoremId>,
    /// Every theorem applicable to the input.
    #[arg(long, conflicts_with = "theorems")]
    all: bool,
    /// Run every theorem over all canonical structures up to this size.
    #[arg(long)]
    corpus: Option<usize>,
    /// Drive the corpus on one thread.
    #[arg(long, requires = "corpus")]
    serial: bool,
    /// Also write the corpus report to this file.
    #[arg(long, requires = "corpus")]
    out: Option<PathBuf>,
}

fn parse_property(s: &str) -> Result<PropertyId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_relation(s: &str) -> Result<GreenRelation, String> {
    match s.to_ascii_uppercase().as_str() {
        "L" => Ok(GreenRelation::L),
        "R" => Ok(GreenRelation::R),
        "J" => Ok(GreenRelation::J),
        "H" => Ok(GreenRelation::H),
        _ => Err(format!("unknown relation `{s}` (expected L, R, J or H)")),
    }
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A rendered result. `failed` drives `--assert`.
struct Report {
    text: String,
    json: String,
    failed: bool,
}

impl Report {
    fn new(text: String, json: &impl Serialize, failed: bool) -> Self {
        Report {
            text,
            json: to_json_line(json),
            failed,
        }
    }
}

fn to_json_line(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string(value).expect("reports serialize");
    s.push('\n');
    s
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), rendered)
            } else {
                (rendered, String::new())
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };
    match execute(&cli) {
        Ok(report) => Outcome {
            code: if cli.assert && report.failed {
                EXIT_ASSERT
            } else {
                EXIT_OK
            },
            stdout: if cli.json { report.json } else { report.text },
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: if e.is_size_bound() {
                EXIT_SIZE_BOUND
            } else {
                EXIT_INVALID
            },
            stdout: String::new(),
            stderr: render_error(&e, cli.json),
        },
    }
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    validation: Option<&'a [ordsemi::ValidationError]>,
}

fn render_error(e: &Error, json: bool) -> String {
    let validation = match e {
        Error::Invalid(errors) => Some(errors.as_slice()),
        _ => None,
    };
    if json {
        return to_json_line(&ErrorReport {
            error: e.to_string(),
            validation,
        });
    }
    match validation {
        Some(errors) => {
            let mut out = String::from("error: invalid structure\n");
            for v in errors {
                let _ = writeln!(out, "  {:?} {}", v.kind, tuple(&v.witness));
            }
            out
        }
        None => format!("error: {e}\n"),
    }
}

fn load(path: &Path) -> ordsemi::Result<OrderedSemigroup> {
    OrderedSemigroup::load(path)
}

fn execute(cli: &Cli) -> ordsemi::Result<Report> {
    match &cli.verb {
        Verb::Check { file, properties } => cmd_check(&load(file)?, properties),
        Verb::Classify { file } => cmd_classify(&load(file)?),
        Verb::Green { file, relations } => cmd_green(&load(file)?, relations),
        Verb::Decompose {
            file,
            congruence,
            class_of,
            dot,
        } => cmd_decompose(&load(file)?, congruence, class_of.as_deref(), *dot),
        Verb::Verify(args) => cmd_verify(args),
        Verb::Power { file, into, map } => cmd_power(&load(file)?, into.as_deref(), map.as_deref()),
        Verb::Build {
            template,
            n,
            p,
            q,
            path,
        } => cmd_build(template, *n, *p, *q, path.clone()),
        Verb::Enumerate {
            n,
            require,
            up_to_iso,
            plain,
            count,
        } => cmd_enumerate(
            &EnumerationConfig {
                n: *n,
                require: *require,
                up_to_iso: *up_to_iso,
                plain_only: *plain,
            },
            *count,
        ),
        Verb::Counterexample {
            hyp,
            concl,
            restrict,
            n_max,
        } => cmd_counterexample(
            &ClaimSpec {
                hypothesis: hyp.clone(),
                conclusion: concl.clone(),
                restrict_to_idempotent_ordered: *restrict,
            },
            *n_max,
        ),
    }
}

fn tuple(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn set(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// Universally and existentially quantified variable names of a formula.
fn variables(p: PropertyId) -> (Vec<&'static str>, Vec<&'static str>) {
    let head = p.formula().split(':').next().unwrap_or_default();
    let head = head.trim_start_matches("forall ");
    let (univ, exist) = head.split_once(" exists ").unwrap_or((head, ""));
    let exist = exist.split_whitespace().next().unwrap_or_default();
    let names = |s: &'static str| s.split(',').filter(|v| !v.is_empty()).collect();
    (names(univ), names(exist))
}

fn bind(names: &[&str], values: &[usize]) -> String {
    if names.len() != values.len() {
        return tuple(values);
    }
    let parts: Vec<String> = names
        .iter()
        .zip(values)
        .map(|(n, v)| format!("{n}={v}"))
        .collect();
    format!("({})", parts.join(", "))
}

fn verdict_line(p: PropertyId, v: &Verdict) -> String {
    let (univ, _) = variables(p);
    match &v.counterexample {
        None => format!("{p}: holds"),
        Some(c) => format!("{p}: fails, counterexample {}", bind(&univ, c)),
    }
}

fn header(s: &OrderedSemigroup) -> String {
    let name = if s.name().is_empty() {
        "<unnamed>"
    } else {
        s.name()
    };
    format!("structure {name} ({} elements)\n", s.n())
}

fn partition_text(p: &Partition) -> String {
    let classes: Vec<String> = p.classes().iter().map(|c| set(&c.to_vec())).collect();
    classes.join(" ")
}

#[derive(Serialize)]
struct CheckJson<'a> {
    structure: &'a str,
    n: usize,
    verdicts: &'a [PropertyVerdict],
}

fn cmd_check(s: &OrderedSemigroup, properties: &[PropertyId]) -> ordsemi::Result<Report> {
    let properties = if properties.is_empty() {
        PropertyId::ALL.to_vec()
    } else {
        properties.to_vec()
    };
    let verdicts: Vec<PropertyVerdict> = properties
        .iter()
        .map(|&property| PropertyVerdict {
            property,
            verdict: check(s, property),
        })
        .collect();
    let mut text = header(s);
    for v in &verdicts {
        text.push_str(&verdict_line(v.property, &v.verdict));
        text.push('\n');
    }
    let failed = verdicts.iter().any(|v| !v.verdict.holds);
    let json = CheckJson {
        structure: s.name(),
        n: s.n(),
        verdicts: &verdicts,
    };
    Ok(Report::new(text, &json, failed))
}

#[derive(Serialize)]
struct ClassifyJson<'a> {
    structure: &'a str,
    n: usize,
    verdicts: &'a [PropertyVerdict],
    decomposition: ordsemi::decompose::DecompositionReport,
    classification: &'a ordsemi::decompose::Classification,
}

fn cmd_classify(s: &OrderedSemigroup) -> ordsemi::Result<Report> {
    let verdicts = ordsemi::properties::check_all(s);
    let d = decompose(s, &least_complete_semilattice_congruence(s))?;
    let classification = classify_decomposition(s, &d)?;
    let mut text = header(s);
    for v in &verdicts {
        text.push_str(&verdict_line(v.property, &v.verdict));
        text.push('\n');
    }
    let _ = writeln!(
        text,
        "least complete semilattice congruence: {}",
        partition_text(d.congruence())
    );
    for c in &classification.classes {
        let holding: Vec<&str> = c
            .verdicts
            .iter()
            .filter(|v| v.verdict.holds)
            .map(|v| v.property.name())
            .collect();
        let _ = writeln!(
            text,
            "  class {} {}: {}",
            c.class,
            set(&c.members),
            holding.join(" ")
        );
    }
    let _ = writeln!(text, "{}", classification.headline.text);
    let failed = !d.conditions().iter().all(|c| c.holds);
    let json = ClassifyJson {
        structure: s.name(),
        n: s.n(),
        verdicts: &verdicts,
        decomposition: d.to_report(),
        classification: &classification,
    };
    Ok(Report::new(text, &json, failed))
}

#[derive(Serialize)]
struct RelationJson {
    relation: GreenRelation,
    classes: Partition,
}

#[derive(Serialize)]
struct GreenJson<'a> {
    structure: &'a str,
    relations: Vec<RelationJson>,
}

fn cmd_green(s: &OrderedSemigroup, relations: &[GreenRelation]) -> ordsemi::Result<Report> {
    let relations = if relations.is_empty() {
        GreenRelation::ALL.to_vec()
    } else {
        relations.to_vec()
    };
    let mut text = header(s);
    let mut out = Vec::new();
    for rel in relations {
        let p = green(s, rel);
        let _ = writeln!(text, "{rel}: {}", partition_text(&p));
        out.push(RelationJson {
            relation: rel,
            classes: p,
        });
    }
    let json = GreenJson {
        structure: s.name(),
        relations: out,
    };
    Ok(Report::new(text, &json, false))
}

fn named_congruence(s: &OrderedSemigroup, name: &str) -> ordsemi::Result<Partition> {
    Ok(match name.to_ascii_lowercase().as_str() {
        "least-csc" => least_complete_semilattice_congruence(s),
        "l" => green(s, GreenRelation::L),
        "r" => green(s, GreenRelation::R),
        "j" => green(s, GreenRelation::J),
        "h" => green(s, GreenRelation::H),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "unknown congruence `{name}` (expected least-csc, l, r, j or h)"
            )))
        }
    })
}

#[derive(Serialize)]
struct DecomposeJson<'a> {
    structure: &'a str,
    congruence: &'a str,
    decomposition: ordsemi::decompose::DecompositionReport,
    classification: ordsemi::decompose::Classification,
}

fn decomposition_text(d: &Decomposition) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "classes: {}", partition_text(d.congruence()));
    let k = d.num_classes();
    let _ = writeln!(text, "quotient:");
    for a in 0..k {
        let row: Vec<String> = (0..k).map(|b| d.quotient_mul(a, b).to_string()).collect();
        let _ = writeln!(text, "  {}", row.join(" "));
    }
    let names = ["disjoint", "cover", "products", "downward"];
    for (i, (c, name)) in d.conditions().iter().zip(names).enumerate() {
        match &c.witness {
            None => {
                let _ = writeln!(text, "condition {} ({name}): holds", i + 1);
            }
            Some(w) => {
                let _ = writeln!(text, "condition {} ({name}): fails at {}", i + 1, tuple(w));
            }
        }
    }
    let _ = writeln!(text, "complete: {}", d.is_complete());
    text
}

fn cmd_decompose(
    s: &OrderedSemigroup,
    congruence: &str,
    class_of: Option<&[usize]>,
    dot: bool,
) -> ordsemi::Result<Report> {
    let (label, p) = match class_of {
        Some(ids) => {
            if ids.len() != s.n() {
                return Err(Error::InvalidArgument(format!(
                    "--class-of needs {} entries, got {}",
                    s.n(),
                    ids.len()
                )));
            }
            ("explicit", Partition::from_class_of(ids))
        }
        None => (congruence, named_congruence(s, congruence)?),
    };
    let d = decompose(s, &p)?;
    let failed = !d.conditions().iter().all(|c| c.holds);
    if dot {
        let dot = d.to_dot();
        return Ok(Report {
            json: to_json_line(&dot),
            text: dot,
            failed,
        });
    }
    let classification = classify_decomposition(s, &d)?;
    let mut text = header(s);
    text.push_str(&decomposition_text(&d));
    let _ = writeln!(text, "{}", classification.headline.text);
    let json = DecomposeJson {
        structure: s.name(),
        congruence: label,
        decomposition: d.to_report(),
        classification,
    };
    Ok(Report::new(text, &json, failed))
}

#[derive(Serialize)]
struct Skipped {
    theorem: TheoremId,
    reason: String,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    structure: &'a str,
    reports: &'a [TheoremReport],
    skipped: &'a [Skipped],
}

fn report_text(r: &TheoremReport) -> String {
    let mut text = format!(
        "{}: {}\n",
        r.theorem,
        if r.relation_respected {
            "respected"
        } else {
            "VIOLATED"
        }
    );
    for c in &r.conditions {
        let _ = write!(text, "  {}: {}", c.label, c.value);
        if let Some(ce) = &c.verdict.counterexample {
            if !ce.is_empty() {
                let _ = write!(text, " counterexample {}", tuple(ce));
            }
        }
        text.push('\n');
    }
    text
}

fn cmd_verify(args: &VerifyArgs) -> ordsemi::Result<Report> {
    if let Some(n_max) = args.corpus {
        return cmd_verify_corpus(n_max, !args.serial, args.out.as_deref());
    }
    let file = args
        .file
        .as_deref()
        .expect("clap requires a file without --corpus");
    let s = load(file)?;
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    if args.all {
        for t in TheoremId::ALL {
            match verify_theorem(&s, t) {
                Ok(r) => reports.push(r),
                Err(e @ (Error::SizeBound { .. } | Error::HypothesisNotMet(_))) => {
                    skipped.push(Skipped {
                        theorem: t,
                        reason: e.to_string(),
                    })
                }
                Err(e) => return Err(e),
            }
        }
    } else if args.theorems.is_empty() {
        return Err(Error::InvalidArgument("give --theorem or --all".into()));
    } else {
        for &t in &args.theorems {
            reports.push(verify_theorem(&s, t)?);
        }
    }
    let mut text = header(&s);
    for r in &reports {
        text.push_str(&report_text(r));
    }
    for sk in &skipped {
        let _ = writeln!(text, "{}: skipped ({})", sk.theorem, sk.reason);
    }
    let failed = reports.iter().any(|r| !r.relation_respected);
    let json = VerifyJson {
        structure: s.name(),
        reports: &reports,
        skipped: &skipped,
    };
    Ok(Report::new(text, &json, failed))
}

fn cmd_verify_corpus(n_max: usize, parallel: bool, out: Option<&Path>) -> ordsemi::Result<Report> {
    let corpus = canonical_corpus(n_max)?;
    let report = run_corpus(&corpus, &TheoremId::ALL, parallel)?;
    let json = report.to_json();
    if let Some(path) = out {
        std::fs::write(path, &json)?;
    }
    let mut text = format!(
        "{} structures, {} theorem checks, {} findings\n",
        report.structures,
        report.checks,
        report.findings.len()
    );
    for f in &report.findings {
        let _ = writeln!(text, "{} on {}", f.report.theorem, f.structure.to_json());
    }
    Ok(Report {
        text,
        json: format!("{json}\n"),
        failed: !report.is_clean(),
    })
}

#[derive(Serialize)]
struct HomJson<'a> {
    base: usize,
    target: &'a str,
    extension: &'a ordsemi::constructions::HomExtension,
}

fn cmd_power(
    b: &OrderedSemigroup,
    into: Option<&Path>,
    map: Option<&[usize]>,
) -> ordsemi::Result<Report> {
    let plain = PlainSemigroup::from_ordered(b);
    match (into, map) {
        (Some(target), Some(f)) => {
            let s = load(target)?;
            let ext = extend_hom(&plain, &s, f)?;
            let c = &ext.checks;
            let mut text = format!("phi: {}\n", tuple(&ext.phi));
            for (name, v) in [
                ("hom-law", &c.hom_law),
                ("monotone", &c.monotone),
                ("diagram", &c.diagram),
            ] {
                match &v.counterexample {
                    None => {
                        let _ = writeln!(text, "{name}: holds");
                    }
                    Some(ce) => {
                        let _ = writeln!(text, "{name}: fails at {}", tuple(ce));
                    }
                }
            }
            let json = HomJson {
                base: b.n(),
                target: s.name(),
                extension: &ext,
            };
            Ok(Report::new(text, &json, !c.all_hold()))
        }
        _ => {
            let p = power_construction(&plain)?;
            let raw = p.to_raw();
            let failed = plain.is_band() != p.is_idempotent_ordered();
            Ok(structure_report(&raw, failed))
        }
    }
}

/// Structure-producing verbs print the structure file in both modes.
fn structure_report(raw: &RawStructure, failed: bool) -> Report {
    let line = to_json_line(raw);
    Report {
        text: line.clone(),
        json: line,
        failed,
    }
}

fn cmd_build(
    template: &str,
    n: Option<usize>,
    p: Option<usize>,
    q: Option<usize>,
    path: Option<PathBuf>,
) -> ordsemi::Result<Report> {
    let params: Vec<usize> = match (n, p, q) {
        (Some(n), _, _) => vec![n],
        (None, Some(p), Some(q)) => vec![p, q],
        _ => Vec::new(),
    };
    let s = builder(Template::parse(template, &params, path)?)?;
    Ok(structure_report(&s.to_raw(), false))
}

fn cmd_enumerate(cfg: &EnumerationConfig, count: bool) -> ordsemi::Result<Report> {
    let all = enumerate(cfg)?;
    if count {
        #[derive(Serialize)]
        struct CountJson {
            n: usize,
            count: usize,
        }
        return Ok(Report::new(
            format!("{}\n", all.len()),
            &CountJson {
                n: cfg.n,
                count: all.len(),
            },
            false,
        ));
    }
    let raws: Vec<RawStructure> = match all {
        Enumerated::Ordered(v) => v.iter().map(OrderedSemigroup::to_raw).collect(),
        Enumerated::Plain(v) => v
            .iter()
            .enumerate()
            .map(|(k, b)| b.with_equality_order(format!("B{}-{k}", cfg.n)).to_raw())
            .collect(),
    };
    let mut text = String::new();
    let mut json = String::new();
    for raw in &raws {
        let rows: Vec<String> = raw
            .table
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<String>())
            .collect();
        let strict: Vec<String> = raw
            .order
            .iter()
            .filter(|pair| pair[0] != pair[1])
            .map(|pair| format!("{}<{}", pair[0], pair[1]))
            .collect();
        let mut line = format!("{} {}", raw.name, rows.join("/"));
        for pair in strict {
            line.push(' ');
            line.push_str(&pair);
        }
        let _ = writeln!(text, "{line}");
        json.push_str(&to_json_line(raw));
    }
    Ok(Report {
        text,
        json,
        failed: false,
    })
}

#[derive(Serialize)]
struct Found {
    structure: RawStructure,
    failed: PropertyId,
    verdict: Verdict,
}

#[derive(Serialize)]
struct CounterexampleJson<'a> {
    claim: &'a ClaimSpec,
    n_max: usize,
    found: Option<Found>,
}

fn cmd_counterexample(claim: &ClaimSpec, n_max: usize) -> ordsemi::Result<Report> {
    let found = find_counterexample(claim, n_max)?;
    let text = match &found {
        None => format!("no counterexample with at most {n_max} elements\n"),
        Some(c) => format!(
            "counterexample {} with {} elements\n{}\n{}\n",
            c.structure.name(),
            c.structure.n(),
            c.structure.to_json(),
            verdict_line(c.failed, &c.verdict),
        ),
    };
    let failed = found.is_some();
    let json = CounterexampleJson {
        claim,
        n_max,
        found: found.map(|c| Found {
            structure: c.structure.to_raw(),
            failed: c.failed,
            verdict: c.verdict,
        }),
    };
    Ok(Report::new(text, &json, failed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_variables() {
        assert_eq!(
            variables(PropertyId::Rectangular),
            (vec!["a", "b"], vec!["x", "y"])
        );
        assert_eq!(
            variables(PropertyId::IdempotentOrdered),
            (vec!["a"], vec![])
        );
        assert_eq!(variables(PropertyId::Simple), (vec!["a", "b"], vec!["h"]));
        assert_eq!(
            variables(PropertyId::Normal),
            (vec!["a", "b", "c"], vec!["x"])
        );
    }

    #[test]
    fn binding_renders_names() {
        assert_eq!(bind(&["a", "b"], &[1, 0]), "(a=1, b=0)");
        assert_eq!(bind(&["a"], &[1, 0]), "(1,0)");
    }

    #[test]
    fn usage_errors_exit_2() {
        let out = run(["ordsemi", "frobnicate"]);
        assert_eq!(out.code, EXIT_INVALID);
        let out = run(["ordsemi", "--help"]);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.contains("enumerate"));
    }
}

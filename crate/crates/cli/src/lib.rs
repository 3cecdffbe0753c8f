//! The `plusc` command line: argument types, dispatch, and reports.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use plus_core::gdense::{matrix_criterion, CriterionVerdict, DenseRingSpec};
use plus_core::groups::{FiniteGroup, Presentation};
use plus_core::homology::{five_term, hopf_check, space_homology, Coefficients, GroupModel};
use plus_core::linalg::ModulePresentation;
use plus_core::parse::{parse_hom, parse_matrix, parse_presentation, parse_space, parse_words};
use plus_core::plus::{
    moore_space, partial_completion, plus_construction, relatively_perfect, HypothesesReport, PlusOutcome, PlusResult,
};
use plus_core::rings::RingSpec;
use plus_core::Error;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "plusc", version, about = "Exact homology, plus-constructions and G-dense ring checks")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,

    /// Coefficient ring: Z, Q, Z/p, Z[1/2,1/3], Z[i], or k[G] where allowed.
    #[arg(long, global = true, default_value = "Z")]
    pub ring: String,

    /// Coset limit for enumerating finite groups.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub max_cosets: usize,

    /// Search budget for the matrix criterion.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub budget: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for verbs given several inputs.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    #[value(alias = "json-like")]
    Json,
}

/// Each input is a file path or, if no such file exists, the literal itself.
#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Homology of a group or a space.
    Homology {
        #[arg(required = true)]
        inputs: Vec<String>,
        /// Treat group presentations as aspherical instead of enumerating.
        #[arg(long)]
        aspherical: bool,
    },
    /// Coset enumeration of a group.
    Cosets {
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// The five-term sequence of `pi -> pi/N`.
    Fiveterm {
        #[arg(required = true)]
        inputs: Vec<String>,
        /// Normal generators of `N`, as words.
        #[arg(long, default_value = "")]
        normal: String,
        #[arg(long)]
        aspherical: bool,
    },
    /// Whether `N = [pi, N]`.
    Relperf {
        #[arg(required = true)]
        inputs: Vec<String>,
        #[arg(long, default_value = "")]
        normal: String,
        #[arg(long)]
        aspherical: bool,
    },
    /// A Moore space `M(G, 1; R)`.
    Moore {
        #[arg(required = true)]
        inputs: Vec<String>,
    },
    /// The plus-construction of a space along a homomorphism.
    Plus {
        space: String,
        /// `hom { to: ...; x -> w; kernel: ... }`; the source defaults to the
        /// fundamental group of the space.
        #[arg(long)]
        hom: String,
    },
    /// Partial `k`-completion along `pi -> pi/P`.
    Kcomplete {
        #[arg(required = true)]
        inputs: Vec<String>,
        /// Normal generators of `P`, as words.
        #[arg(long, default_value = "")]
        normal: String,
        #[arg(long)]
        aspherical: bool,
    },
    /// The matrix criterion for `k` columns of an invertible matrix.
    Gdense {
        matrix: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// The group `G`; trivial when omitted.
        #[arg(long)]
        group: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Computed,
    Accepted,
    Rejected,
    True,
    False,
    Witness,
    Refuted,
    Unknown,
    Error,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Computed | Verdict::Accepted | Verdict::True | Verdict::Witness => 0,
            Verdict::Rejected | Verdict::False | Verdict::Refuted | Verdict::Unknown => 2,
            Verdict::Error => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NamedModule {
    pub name: String,
    pub module: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub verb: String,
    pub input: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tier: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    #[serde(default)]
    pub modules: Vec<NamedModule>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ledger: Option<Value>,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub details: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub elapsed_us: u64,
}

impl Report {
    fn new(verb: &str, input: &str, verdict: Verdict) -> Self {
        Report {
            verb: verb.into(),
            input: input.into(),
            verdict,
            tier: None,
            ring: None,
            modules: Vec::new(),
            ledger: None,
            details: Value::Null,
            message: None,
            elapsed_us: 0,
        }
    }

    fn module(&mut self, name: impl Into<String>, m: &ModulePresentation) {
        self.modules.push(NamedModule { name: name.into(), module: m.to_string() });
    }

    /// The human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.verb, self.input);
        let _ = writeln!(out, "  verdict: {}", serde_json::to_value(self.verdict).unwrap().as_str().unwrap());
        if let Some(t) = &self.tier {
            let _ = writeln!(out, "  tier: {t}");
        }
        if let Some(r) = &self.ring {
            let _ = writeln!(out, "  ring: {r}");
        }
        if let Some(m) = &self.message {
            let _ = writeln!(out, "  message: {m}");
        }
        for m in &self.modules {
            let _ = writeln!(out, "  {} = {}", m.name, m.module);
        }
        if let Some(l) = &self.ledger {
            let _ = writeln!(out, "  ledger: {l}");
        }
        if !self.details.is_null() {
            let _ = writeln!(out, "  details: {}", self.details);
        }
        let _ = writeln!(out, "  elapsed: {} us", self.elapsed_us);
        out
    }
}

fn read_input(arg: &str) -> Result<String, Error> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| Error::Unsupported(format!("cannot read {arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

/// Short label for a report: the file name, or the literal.
fn label(arg: &str) -> String {
    if Path::new(arg).is_file() {
        arg.to_string()
    } else {
        arg.split_whitespace().collect::<Vec<_>>().join(" ")
    }
}

fn trivial_ring(token: &str) -> Result<RingSpec, Error> {
    match token.parse::<Coefficients>()? {
        Coefficients::Trivial(r) => Ok(r),
        Coefficients::GroupRing(_) => Err(Error::Unsupported(format!("`{token}` is not allowed here; give a ring"))),
    }
}

fn group_model(p: &Presentation, aspherical: bool, max: usize) -> Result<GroupModel, Error> {
    GroupModel::realize(p, aspherical, max)
}

fn hypotheses_modules(r: &mut Report, h: &HypothesesReport) {
    r.module("H_1(pi)", &h.h1_modules[0]);
    r.module("H_1(G)", &h.h1_modules[1]);
    r.module("H_2(pi)", &h.h2_modules[0]);
    r.module("H_2(G)", &h.h2_modules[1]);
}

fn outcome_report(r: &mut Report, out: &PlusOutcome) {
    let h = out.hypotheses();
    r.tier = Some(h.tier.to_string());
    hypotheses_modules(r, h);
    match out {
        PlusOutcome::Accepted(res) => {
            r.verdict = Verdict::Accepted;
            accepted(r, res);
        }
        PlusOutcome::Rejected(h) => {
            r.verdict = Verdict::Rejected;
            r.details = json!({ "hypotheses": h });
        }
    }
}

fn accepted(r: &mut Report, res: &PlusResult) {
    for (q, m) in res.homology_x.iter().enumerate() {
        r.module(format!("H_{q}(X)"), m);
    }
    for (q, m) in res.homology_y.iter().enumerate() {
        r.module(format!("H_{q}(Y)"), m);
    }
    r.ledger = Some(serde_json::to_value(&res.ledger).expect("ledger serializes"));
    r.details = json!({
        "hypotheses": res.hypotheses,
        "certificates": res.certificates,
        "cell_counts": res.cell_counts,
        "finite": res.finite,
        "w": res.w.to_string(),
    });
}

fn run_one(cli: &Cli, verb: &str, input: &str) -> Result<Report, Error> {
    let max = cli.max_cosets;
    let src = read_input(input)?;
    let mut r = Report::new(verb, &label(input), Verdict::Computed);
    match &cli.verb {
        Verb::Homology { aspherical, .. } => {
            let ring = trivial_ring(&cli.ring)?;
            r.ring = Some(ring.to_string());
            if src.trim_start().starts_with("space") {
                let x = parse_space(&src)?;
                let hs = space_homology(&x, &Coefficients::Trivial(ring.clone()))?;
                for (q, m) in hs.iter().enumerate() {
                    r.module(format!("H_{q}(X)"), m);
                }
                if !x.is_aspherical() {
                    let cert = hopf_check(&x, &Coefficients::Trivial(ring), max)?;
                    if !cert.is_exact() {
                        return Err(Error::Defect("the Hopf sequence is not exact".into()));
                    }
                    r.tier = Some("finite".into());
                    r.details = json!({ "hopf": cert });
                }
            } else {
                let p = parse_presentation(&src)?;
                let g = group_model(&p, *aspherical, max)?;
                r.tier = Some(g.tier().to_string());
                for q in 0..=2 {
                    r.module(format!("H_{q}(G)"), &g.homology(&ring, q)?);
                }
            }
        }
        Verb::Cosets { .. } => {
            let p = parse_presentation(&src)?;
            let g = FiniteGroup::enumerate(&p, max).map_err(|o| Error::TierRejection(o.to_string()))?;
            r.tier = Some("finite".into());
            r.details = json!({ "order": g.order(), "abelian": g.is_abelian() });
        }
        Verb::Fiveterm { normal, aspherical, .. } | Verb::Relperf { normal, aspherical, .. } => {
            let p = parse_presentation(&src)?;
            let n = parse_words(normal, &p)?;
            let pi = group_model(&p, *aspherical, max)?;
            r.tier = Some(pi.tier().to_string());
            r.ring = Some("Z".into());
            let (perfect, report) = match &cli.verb {
                Verb::Relperf { .. } => relatively_perfect(&pi, &n, max)?,
                _ => {
                    let report = five_term(&pi, &n, max)?;
                    (report.relatively_perfect(), report)
                }
            };
            for (name, m) in ["H_2(pi)", "H_2(pi/N)", "N/[pi,N]", "H_1(pi)", "H_1(pi/N)"].iter().zip(&report.modules) {
                r.module(*name, m);
            }
            r.details = json!({ "joints": report.joints, "relatively_perfect": perfect });
            r.verdict = match &cli.verb {
                Verb::Relperf { .. } if perfect => Verdict::True,
                Verb::Relperf { .. } => Verdict::False,
                _ if report.is_exact() => Verdict::Computed,
                _ => return Err(Error::Defect("the five-term sequence is not exact".into())),
            };
        }
        Verb::Moore { .. } => {
            let ring = trivial_ring(&cli.ring)?;
            r.ring = Some(ring.to_string());
            let g = GroupModel::finite(&parse_presentation(&src)?, max)?;
            outcome_report(&mut r, &moore_space(&g, &ring, max)?);
        }
        Verb::Plus { hom, .. } => {
            let coeffs: Coefficients = cli.ring.parse()?;
            r.ring = Some(coeffs.to_string());
            let x = parse_space(&src)?;
            let h = parse_hom(&read_input(hom)?, Some(&x.fundamental_group()))?;
            let g = GroupModel::finite(h.hom.target(), max)?;
            outcome_report(&mut r, &plus_construction(&x, &h.hom, &h.kernel, &g, &coeffs, max)?);
        }
        Verb::Kcomplete { normal, aspherical, .. } => {
            let k = trivial_ring(&cli.ring)?;
            r.ring = Some(format!("{k}[pi/P]"));
            let p = parse_presentation(&src)?;
            let gens = parse_words(normal, &p)?;
            let pi = group_model(&p, *aspherical, max)?;
            outcome_report(&mut r, &partial_completion(&pi, &gens, &k, max)?);
        }
        Verb::Gdense { k, group, .. } => {
            let text = src.trim();
            let a = if text.starts_with('[') { parse_matrix(&format!("{}: {text}", cli.ring))? } else { parse_matrix(text)? };
            r.ring = Some(a.ring().to_string());
            let g = match group {
                Some(gsrc) => FiniteGroup::enumerate(&parse_presentation(&read_input(gsrc)?)?, max)
                    .map_err(|o| Error::TierRejection(o.to_string()))?,
                None => FiniteGroup::trivial(),
            };
            let spec = DenseRingSpec::constant(a.ring(), Arc::new(g));
            let v = matrix_criterion(&a, *k, &spec, cli.budget)?;
            r.verdict = match &v {
                CriterionVerdict::Witness { .. } => Verdict::Witness,
                CriterionVerdict::Refuted { .. } => Verdict::Refuted,
                CriterionVerdict::Unknown { .. } => Verdict::Unknown,
            };
            r.details = serde_json::to_value(&v).expect("verdict serializes");
        }
    }
    Ok(r)
}

fn verb_name(v: &Verb) -> &'static str {
    match v {
        Verb::Homology { .. } => "homology",
        Verb::Cosets { .. } => "cosets",
        Verb::Fiveterm { .. } => "fiveterm",
        Verb::Relperf { .. } => "relperf",
        Verb::Moore { .. } => "moore",
        Verb::Plus { .. } => "plus",
        Verb::Kcomplete { .. } => "kcomplete",
        Verb::Gdense { .. } => "gdense",
    }
}

fn inputs(v: &Verb) -> Vec<String> {
    match v {
        Verb::Homology { inputs, .. }
        | Verb::Cosets { inputs }
        | Verb::Fiveterm { inputs, .. }
        | Verb::Relperf { inputs, .. }
        | Verb::Moore { inputs }
        | Verb::Kcomplete { inputs, .. } => inputs.clone(),
        Verb::Plus { space, .. } => vec![space.clone()],
        Verb::Gdense { matrix, .. } => vec![matrix.clone()],
    }
}

/// Runs one input. Tier rejections and failed hypotheses become rejected
/// reports; other errors become error reports.
pub fn run_input(cli: &Cli, input: &str) -> Report {
    let verb = verb_name(&cli.verb);
    let start = Instant::now();
    let mut r = match run_one(cli, verb, input) {
        Ok(r) => r,
        Err(e) => {
            let verdict = match e {
                Error::TierRejection(_) | Error::Hypothesis(_) => Verdict::Rejected,
                _ => Verdict::Error,
            };
            let mut r = Report::new(verb, &label(input), verdict);
            r.message = Some(e.to_string());
            r
        }
    };
    r.elapsed_us = start.elapsed().as_micros() as u64;
    r
}

/// Runs every input, `cli.jobs` at a time, keeping input order.
pub fn run(cli: &Cli) -> Vec<Report> {
    let all = inputs(&cli.verb);
    let jobs = cli.jobs.max(1).min(all.len().max(1));
    if jobs == 1 {
        return all.iter().map(|i| run_input(cli, i)).collect();
    }
    let mut out: Vec<Option<Report>> = vec![None; all.len()];
    let chunk = all.len().div_ceil(jobs);
    std::thread::scope(|s| {
        for (inputs, slots) in all.chunks(chunk).zip(out.chunks_mut(chunk)) {
            s.spawn(move || {
                for (i, slot) in inputs.iter().zip(slots) {
                    *slot = Some(run_input(cli, i));
                }
            });
        }
    });
    out.into_iter().map(|r| r.expect("every input ran")).collect()
}

/// The process exit code for a batch: the worst of the individual codes,
/// with errors (1) outranking rejections (2).
pub fn exit_code(reports: &[Report]) -> i32 {
    let codes: Vec<i32> = reports.iter().map(|r| r.verdict.exit_code()).collect();
    if codes.contains(&1) {
        1
    } else {
        codes.into_iter().max().unwrap_or(0)
    }
}

pub fn render(reports: &[Report], format: Format) -> String {
    match format {
        Format::Text => reports.iter().map(Report::to_text).collect(),
        Format::Json => {
            let v = if reports.len() == 1 {
                serde_json::to_string_pretty(&reports[0])
            } else {
                serde_json::to_string_pretty(reports)
            };
            v.expect("reports serialize") + "\n"
        }
    }
}

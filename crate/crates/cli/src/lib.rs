//! Command-line surface over the compiler crates.

pub mod heatmap;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use braid_circuits::{
    build_injection_cu, evaluate_circuit, evaluate_exact, ConventionProfile, GateCircuit,
};
use clap::{Parser, Subcommand, ValueEnum};
use fib_core::AnyonCharge;
use fusion_basis::{enumerate_basis, representation, BraidWord, UnitaryMatrix};
use metrics_report::fixtures::{self, CcsWords};
use metrics_report::{
    calibrate_conventions, combination_statistics, comparison_report, score_evaluation, score_gate, RolePool,
    DEFAULT_TOP_K,
};
use su2_compile::{distance, gates, merge, search, Endpoint, SearchResult, Shard, WeaveSearchSpec};
use thiserror::Error;

pub const PROFILE_ENV: &str = "FIBC_PROFILE";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("failed: {0}")]
    Compute(String),
    /// The reader of stdout went away; nothing more to say.
    #[error("output closed")]
    Closed,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 1,
            CliError::Closed => 0,
        }
    }

    /// One line, for stderr.
    pub fn line(&self) -> String {
        format!("error: {self}").replace('\n', "; ")
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn compute(e: impl std::fmt::Display) -> CliError {
    CliError::Compute(e.to_string())
}

fn io(e: std::io::Error) -> CliError {
    match e.kind() {
        std::io::ErrorKind::BrokenPipe => CliError::Closed,
        _ => compute(e),
    }
}

#[derive(Parser, Debug)]
#[command(name = "fibc", about = "Fibonacci anyon compiler and fusion-space simulator")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Charge {
    Vac,
    Tau,
}

impl From<Charge> for AnyonCharge {
    fn from(c: Charge) -> Self {
        match c {
            Charge::Vac => AnyonCharge::Vacuum,
            Charge::Tau => AnyonCharge::Tau,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum EndpointArg {
    Same,
    TopBottom,
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
pub enum Gate {
    /// M(I,iX) from the identity-control words.
    MIdentity,
    /// M(iX,iX) from the NOT-control words.
    MNot,
    /// Doubly controlled iX by controlled injection.
    Itoffoli,
    /// Doubly controlled iX from five injection gates.
    Decomposition,
    /// Controlled-iX between two qubits.
    Cu,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate a fusion basis.
    Basis {
        #[arg(long)]
        anyons: usize,
        #[arg(long, value_enum)]
        charge: Charge,
    },
    /// Matrix of one braid generator.
    Gen {
        #[arg(long)]
        anyons: usize,
        #[arg(long, value_enum)]
        charge: Charge,
        #[arg(long)]
        index: usize,
        #[arg(long)]
        inverse: bool,
    },
    /// Evaluate a word, or a file of words, against a target.
    Eval {
        #[arg(long, default_value_t = 3)]
        anyons: usize,
        #[arg(long, value_enum, default_value = "tau")]
        charge: Charge,
        #[arg(long, conflicts_with = "file")]
        word: Option<String>,
        /// One word per line.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, default_value = "I")]
        target: String,
    },
    /// Enumerate weaves or braids up to a length budget.
    Search {
        #[arg(long)]
        target: String,
        #[arg(long)]
        length: usize,
        /// Restrict to weaves (single moving strand).
        #[arg(long)]
        weave: bool,
        #[arg(long, value_enum, default_value = "same")]
        endpoint: EndpointArg,
        #[arg(long, default_value = "0/1")]
        shard: String,
        #[arg(long, default_value_t = 8)]
        top: usize,
        #[arg(long)]
        threads: Option<usize>,
        /// Disable symmetry pruning.
        #[arg(long)]
        unpruned: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Merge shard results of one search.
    Merge {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        top: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a composite gate circuit and write its description.
    Build {
        #[arg(long, value_enum)]
        gate: Gate,
        /// JSON object mapping roles to word strings, replacing published words.
        #[arg(long)]
        words: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Score a gate, from a published build or a circuit file.
    Score {
        #[arg(long, value_enum, conflicts_with = "circuit")]
        gate: Option<Gate>,
        #[arg(long)]
        circuit: Option<PathBuf>,
        /// Replace every word by its exact gate.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Comparison report between the two doubly controlled constructions.
    Report {
        /// Search results used as candidate pools, as `role=file.json`.
        #[arg(long = "pool")]
        pools: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_TOP_K)]
        top: usize,
        /// Re-run convention calibration and fail if it disagrees with the profile.
        #[arg(long)]
        calibrate: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write a PPM image of a gate's matrix.
    Heatmap {
        #[arg(long, value_enum, conflicts_with = "matrix")]
        gate: Option<Gate>,
        /// Matrix JSON file.
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// Whole ambient matrix instead of the computational block.
        #[arg(long)]
        full: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

pub fn load_profile() -> Result<ConventionProfile> {
    match std::env::var_os(PROFILE_ENV) {
        None => Ok(metrics_report::pinned_profile()),
        Some(path) => {
            let text = read(Path::new(&path))?;
            ConventionProfile::from_json(&text).map_err(usage)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_or_print(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| compute(format!("{}: {e}", p.display()))),
        None => writeln!(out, "{text}").map_err(io),
    }
}

fn parse_word(s: &str) -> Result<BraidWord> {
    s.parse().map_err(|e| usage(format!("word '{s}': {e}")))
}

fn target(name: &str) -> Result<UnitaryMatrix> {
    gates::by_name(name).map_err(usage)
}

fn role_words(path: Option<&Path>) -> Result<BTreeMap<String, BraidWord>> {
    let Some(p) = path else { return Ok(BTreeMap::new()) };
    let raw: BTreeMap<String, String> = serde_json::from_str(&read(p)?).map_err(|e| usage(format!("words file: {e}")))?;
    raw.into_iter().map(|(k, v)| Ok((k, parse_word(&v)?))).collect()
}

fn pick(words: &BTreeMap<String, BraidWord>, role: &str, default: &str) -> Result<BraidWord> {
    match words.get(role) {
        Some(w) => Ok(w.clone()),
        None => parse_word(default),
    }
}

fn build_gate(gate: Gate, profile: &ConventionProfile, words: &BTreeMap<String, BraidWord>) -> Result<GateCircuit> {
    use fixtures::*;
    let ix = gates::i_x();
    let c = match gate {
        Gate::MIdentity => braid_circuits::build_m_gate(
            profile,
            &pick(words, "R", R_IDENTITY)?,
            &pick(words, "I", INJECT)?,
            &pick(words, "S", NOT)?,
            &ix,
            None,
        ),
        Gate::MNot => braid_circuits::build_m_gate(
            profile,
            &pick(words, "R", R_NOT)?,
            &pick(words, "I", INJECT)?,
            &pick(words, "S", NOT)?,
            &ix,
            None,
        ),
        Gate::Itoffoli => {
            let w = CcsWords {
                r: pick(words, "R", R_NOT_CCS)?,
                i: pick(words, "I", INJECT_CCS)?,
                s: pick(words, "S", NOT)?,
                not: pick(words, "NOT", NOT)?,
            };
            return fixtures::itoffoli_from(profile, &w).map_err(usage);
        }
        Gate::Decomposition => braid_circuits::build_ccs_decomposition(
            profile,
            &braid_circuits::DecompositionWords {
                inject_cnot: pick(words, "CNOT injection", INJECT_CNOT)?,
                inject_csqrt: pick(words, "C-sqrtNOT injection", INJECT)?,
                sqrt_not: pick(words, "sqrtNOT", SQRT_NOT)?,
                not: pick(words, "NOT", NOT)?,
            },
        ),
        Gate::Cu => build_injection_cu(profile, &pick(words, "inject", INJECT_CNOT)?, &pick(words, "target", NOT)?, &ix),
    };
    c.map_err(usage)
}

fn load_search(path: &Path) -> Result<SearchResult> {
    SearchResult::from_json(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Parse `argv` (program name first) and run. Help and version requests
/// print to `out` and succeed.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> Result<()>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            return write!(out, "{e}").map_err(io);
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("bad arguments").trim_start_matches("error: ");
            return Err(CliError::Usage(first.to_string()));
        }
    };
    let profile = load_profile()?;
    dispatch(cli.command, &profile, out)
}

fn dispatch(cmd: Command, profile: &ConventionProfile, out: &mut dyn Write) -> Result<()> {
    let h = profile.handedness;
    let order = profile.word_reading_order;
    match cmd {
        Command::Basis { anyons, charge } => {
            let b = enumerate_basis(anyons, charge.into()).map_err(usage)?;
            writeln!(out, "dimension {}", b.dim()).map_err(io)?;
            for t in b.trees() {
                writeln!(out, "{}", t.label()).map_err(io)?;
            }
            Ok(())
        }
        Command::Gen { anyons, charge, index, inverse } => {
            let rep = representation(anyons, charge.into(), h).map_err(usage)?;
            let g = rep.generator(index, !inverse).map_err(usage)?;
            writeln!(out, "{}", g.to_dense().to_json()).map_err(io)
        }
        Command::Eval { anyons, charge, word, file, target: tname } => {
            let rep = representation(anyons, charge.into(), h).map_err(usage)?;
            let tgt = if tname == "I" { UnitaryMatrix::identity(rep.dim()) } else { target(&tname)? };
            if tgt.dim() != rep.dim() {
                return Err(usage(format!("target is {}×{}, basis has dimension {}", tgt.dim(), tgt.dim(), rep.dim())));
            }
            let words: Vec<BraidWord> = match (word, file) {
                (Some(w), None) => vec![parse_word(&w)?],
                (None, Some(p)) => read(&p)?
                    .lines()
                    .map(str::trim)
                    .filter(|l| !l.is_empty() && !l.starts_with('#'))
                    .map(parse_word)
                    .collect::<Result<_>>()?,
                _ => return Err(usage("eval needs --word or --file")),
            };
            let batch = words.len() > 1;
            for w in words {
                let m = rep.word_matrix(&w, order).map_err(usage)?;
                let err = distance(&m, &tgt).map_err(compute)?;
                if batch {
                    writeln!(out, "{w}\t{err:.12e}").map_err(io)?;
                } else {
                    let v = serde_json::json!({
                        "word": w.to_string(),
                        "length": w.length(),
                        "winding": w.winding(),
                        "target": tname,
                        "error": err,
                        "matrix": m,
                    });
                    writeln!(out, "{v}").map_err(io)?;
                }
            }
            Ok(())
        }
        Command::Search { target: tname, length, weave, endpoint, shard, top, threads, unpruned, out: path } => {
            let mut spec = WeaveSearchSpec::new(
                target(&tname)?,
                length,
                match endpoint {
                    EndpointArg::Same => Endpoint::SameStrand,
                    EndpointArg::TopBottom => Endpoint::TopToBottom,
                },
            );
            spec.weave_only = weave;
            spec.shard = shard.parse::<Shard>().map_err(usage)?;
            spec.top_k = top;
            spec.handedness = h;
            spec.pruned = !unpruned;
            if top == 0 {
                return Err(usage("--top must be positive"));
            }
            let result = match threads {
                Some(0) => return Err(usage("--threads must be positive")),
                Some(t) => rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build()
                    .map_err(compute)?
                    .install(|| search(&spec)),
                None => search(&spec),
            }
            .map_err(compute)?;
            write_or_print(out, path.as_deref(), &result.to_json())
        }
        Command::Merge { files, top, out: path } => {
            let results = files.iter().map(|p| load_search(p)).collect::<Result<Vec<_>>>()?;
            let k = top.unwrap_or_else(|| results.iter().map(|r| r.candidates.len()).max().unwrap_or(1));
            let merged = merge(&results, k).map_err(compute)?;
            write_or_print(out, path.as_deref(), &merged.to_json())
        }
        Command::Build { gate, words, out: path } => {
            let c = build_gate(gate, profile, &role_words(words.as_deref())?)?;
            write_or_print(out, path.as_deref(), &c.to_json())
        }
        Command::Score { gate, circuit, exact, out: path } => {
            let c = match (gate, circuit) {
                (Some(g), None) => build_gate(g, profile, &BTreeMap::new())?,
                (None, Some(p)) => GateCircuit::from_json(&read(&p)?).map_err(usage)?,
                _ => return Err(usage("score needs --gate or --circuit")),
            };
            let s = if exact {
                score_evaluation(&c, &evaluate_exact(&c).map_err(compute)?)
            } else {
                score_gate(&c)
            }
            .map_err(compute)?;
            write_or_print(out, path.as_deref(), &serde_json::to_string_pretty(&s).map_err(compute)?)
        }
        Command::Report { pools, top, calibrate, out: path, json } => {
            if top == 0 {
                return Err(usage("--top must be positive"));
            }
            if calibrate {
                let found = calibrate_conventions(&fixtures::word_fixtures()).map_err(compute)?;
                if found != *profile {
                    return Err(compute(format!("calibration pins {found}, profile in use is {profile}")));
                }
            }
            let report = build_report(profile, &pools, top)?;
            write_or_print(out, path.as_deref(), &report.to_markdown())?;
            if let Some(j) = json {
                std::fs::write(&j, report.to_json()).map_err(|e| compute(format!("{}: {e}", j.display())))?;
            }
            Ok(())
        }
        Command::Heatmap { gate, matrix, full, out: path } => {
            let m = match (gate, matrix) {
                (Some(g), None) => {
                    let e = evaluate_circuit(&build_gate(g, profile, &BTreeMap::new())?).map_err(compute)?;
                    if full {
                        e.full
                    } else {
                        e.block
                    }
                }
                (None, Some(p)) => UnitaryMatrix::from_json(&read(&p)?).map_err(usage)?,
                _ => return Err(usage("heatmap needs --gate or --matrix")),
            };
            heatmap::emit_heatmap(&m, &path).map_err(|e| compute(format!("{}: {e}", path.display())))?;
            writeln!(out, "wrote {}×{} image to {}", m.dim(), m.dim(), path.display()).map_err(io)
        }
    }
}

const CI_ROLES: [&str; 4] = ["R", "I", "S", "NOT"];
const DECOMPOSITION_ROLES: [&str; 4] = ["CNOT injection", "C-sqrtNOT injection", "sqrtNOT", "NOT"];

fn build_report(profile: &ConventionProfile, pool_args: &[String], top: usize) -> Result<metrics_report::ComparisonReport> {
    let mut supplied: BTreeMap<String, RolePool> = BTreeMap::new();
    for arg in pool_args {
        let (role, file) = arg.split_once('=').ok_or_else(|| usage(format!("pool '{arg}' is not role=file")))?;
        supplied.insert(role.to_string(), RolePool::from_search(role, &load_search(Path::new(file))?));
    }
    let published: BTreeMap<&str, &str> = [
        ("R", fixtures::R_NOT_CCS),
        ("I", fixtures::INJECT_CCS),
        ("S", fixtures::NOT),
        ("NOT", fixtures::NOT),
        ("CNOT injection", fixtures::INJECT_CNOT),
        ("C-sqrtNOT injection", fixtures::INJECT),
        ("sqrtNOT", fixtures::SQRT_NOT),
    ]
    .into();
    let pools_for = |roles: &[&str]| -> Result<Vec<RolePool>> {
        roles
            .iter()
            .map(|r| match supplied.get(*r) {
                Some(p) => Ok(p.clone()),
                None => Ok(RolePool::single(r, parse_word(published[r])?, 0.0)),
            })
            .collect()
    };
    let ci_pools = pools_for(&CI_ROLES)?;
    let d_pools = pools_for(&DECOMPOSITION_ROLES)?;
    let ci_build = |w: &[BraidWord]| {
        fixtures::itoffoli_from(profile, &CcsWords { r: w[0].clone(), i: w[1].clone(), s: w[2].clone(), not: w[3].clone() })
    };
    let d_build = |w: &[BraidWord]| -> metrics_report::Result<GateCircuit> {
        Ok(braid_circuits::build_ccs_decomposition(
            profile,
            &braid_circuits::DecompositionWords {
                inject_cnot: w[0].clone(),
                inject_csqrt: w[1].clone(),
                sqrt_not: w[2].clone(),
                not: w[3].clone(),
            },
        )?)
    };
    let ci_stats = combination_statistics(&ci_pools, top, ci_build).map_err(compute)?;
    let d_stats = combination_statistics(&d_pools, top, d_build).map_err(compute)?;
    let ci = score_gate(&fixtures::itoffoli(profile).map_err(compute)?).map_err(compute)?;
    let d = score_gate(&fixtures::itoffoli_decomposition(profile).map_err(compute)?).map_err(compute)?;
    comparison_report(&ci, &d, Some(ci_stats), Some(d_stats)).map_err(compute)
}

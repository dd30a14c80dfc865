//! `ringlab`: classify finite rings, build exterior algebras, run the
//! verification suites and the open-question probes.

mod config;
mod text;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ringlab_core::corpus::{parse_ring, write_spec, Corpus};
use ringlab_core::criteria::{
    classify, open_question_probe, run_suite, thm13_check, Suite, SuiteOptions, SCHEMA,
};
use ringlab_core::exterior::{exterior_order, ExteriorAlgebra};
use ringlab_core::{Ring, RingError};
use serde::Serialize;

use config::{Format, GlobalArgs, RunConfig};

#[derive(Debug, Parser)]
#[command(
    name = "ringlab",
    version,
    about = "Finite rings and centrally essential exterior algebras"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariants and predicates of one ring
    Classify {
        /// `corpus:<name>` or a path to a ring-spec file
        ring: String,
    },
    /// Build the exterior algebra of a base ring
    Exterior {
        /// `corpus:<name>` or a path to a ring-spec file
        base: String,
        #[arg(long)]
        n: u32,
        /// Where to write the ring spec of the result
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite (or `all`)
    Verify { suite: String },
    /// Open-question probes on a centrally essential ring
    Probe {
        /// `corpus:<name>` or a path to a ring-spec file
        ring: String,
    },
    /// List corpus entries
    List,
}

/// Exit statuses.
const EXIT_INPUT: u8 = 1;
const EXIT_COUNTEREXAMPLE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Debug)]
enum Failure {
    Input(String),
    Ring(RingError),
    Counterexample,
}

impl From<RingError> for Failure {
    fn from(e: RingError) -> Self {
        Failure::Ring(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Counterexample => EXIT_COUNTEREXAMPLE,
            Failure::Ring(RingError::SizeLimitExceeded { .. }) => EXIT_CAP,
            Failure::Ring(RingError::TheoremViolated { .. }) => EXIT_COUNTEREXAMPLE,
            Failure::Ring(_) => EXIT_INPUT,
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn out(s: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema: u32,
    command: &'a str,
    #[serde(flatten)]
    body: T,
}

struct Ctx {
    cfg: RunConfig,
    corpus: Corpus,
}

impl Ctx {
    fn ring(&self, selector: &str) -> Result<Ring, Failure> {
        if let Some(name) = selector.strip_prefix("corpus:") {
            return Ok(self.corpus.ring(name)?);
        }
        let text = std::fs::read_to_string(selector)
            .map_err(|e| Failure::Input(format!("cannot read {selector}: {e}")))?;
        Ok(parse_ring(&text)?.with_limits(self.cfg.limits))
    }

    fn emit<T: Serialize>(&self, command: &str, body: &T, text: impl FnOnce() -> String) {
        match self.cfg.format {
            Format::Json => {
                let env = Envelope {
                    schema: SCHEMA,
                    command,
                    body,
                };
                out(&json(&env));
            }
            Format::Text => out(&text()),
        }
    }
}

#[derive(Serialize)]
struct ExteriorSummary {
    base: String,
    n: u32,
    size: u128,
    grading_dimensions: Vec<u64>,
    basis: Vec<String>,
    fast_verdict: bool,
    written: Option<String>,
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = RunConfig::resolve(&cli.global).map_err(Failure::Input)?;
    let corpus = match &cli.global.corpus {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
            Corpus::from_json(&text)?
        }
        None => Corpus::builtin(),
    };
    let ctx = Ctx {
        cfg,
        corpus: corpus.with_limits(cfg.limits),
    };
    match cli.command {
        Command::Classify { ring } => {
            let r = ctx.ring(&ring)?;
            let rep = classify(&r)?;
            ctx.emit("classify", &rep, || text::classification(&rep));
        }
        Command::Exterior { base, n, out } => {
            let a = ctx.ring(&base)?;
            let cap = cfg.limits.enumeration_cap as u128;
            let size = exterior_order(&a, n);
            if size > cap {
                return Err(RingError::SizeLimitExceeded {
                    what: format!("Λ({}^{n})", a.name()),
                    size,
                    cap,
                }
                .into());
            }
            let lam = ExteriorAlgebra::build(&a, n)?;
            let written = match out {
                Some(path) => {
                    std::fs::write(&path, write_spec(lam.ring())?).map_err(|e| {
                        Failure::Input(format!("cannot write {}: {e}", path.display()))
                    })?;
                    Some(path.display().to_string())
                }
                None => None,
            };
            let summary = ExteriorSummary {
                base: a.name().to_string(),
                n,
                size: lam.ring().order(),
                grading_dimensions: lam.grading_dimensions(),
                basis: lam.basis().iter().map(|s| s.to_string()).collect(),
                fast_verdict: thm13_check(&a, n)?,
                written,
            };
            ctx.emit("exterior", &summary, || {
                text::exterior(
                    &summary.base,
                    n,
                    summary.size,
                    &summary.grading_dimensions,
                    summary.fast_verdict,
                    summary.written.as_deref(),
                )
            });
        }
        Command::Verify { suite } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            let opts = SuiteOptions {
                include_slow: cfg.slow,
                timings: cfg.timings,
            };
            let reports = suites
                .into_iter()
                .map(|s| run_suite(s, &ctx.corpus, opts))
                .collect::<Result<Vec<_>, _>>()?;
            match (cfg.format, reports.as_slice()) {
                (Format::Json, [one]) => out(&json(one)),
                (Format::Json, many) => ctx.emit(
                    "verify",
                    &serde_json::json!({ "suites": many }),
                    String::new,
                ),
                (Format::Text, many) => {
                    for r in many {
                        out(&text::suite(r));
                    }
                }
            }
            let mut failed = false;
            for rep in &reports {
                if let Some(f) = rep.first_failure() {
                    eprintln!(
                        "counterexample in {}: {} on {}{}",
                        rep.suite,
                        f.theorem,
                        f.ring,
                        f.note
                            .as_deref()
                            .map(|n| format!(" ({n})"))
                            .unwrap_or_default()
                    );
                    failed = true;
                }
            }
            if failed {
                return Err(Failure::Counterexample);
            }
        }
        Command::Probe { ring } => {
            let r = ctx.ring(&ring)?;
            let rep = open_question_probe(&r)?;
            ctx.emit("probe", &rep, || text::probe(&rep));
        }
        Command::List => {
            let names = ctx.corpus.names(true);
            ctx.emit("list", &serde_json::json!({ "entries": names }), || {
                names.iter().map(|n| format!("{n}\n")).collect()
            });
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = match RunConfig::resolve(&cli.global) {
        Ok(c) => c.threads,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        pool = pool.num_threads(t);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    match pool.install(|| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Input(msg) => eprintln!("error: {msg}"),
                Failure::Ring(e) => eprintln!("error: {e}"),
                Failure::Counterexample => {}
            }
            ExitCode::from(f.code())
        }
    }
}

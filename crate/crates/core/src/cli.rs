//! The `tvpm` command line.
//!
//! Exit codes: 0 when a certificate or positive answer is produced, 1 when
//! the answer is negative (not found, not separated, verification failed),
//! 2 on usage errors, malformed input, or degenerate input.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::batch::{run_batch, BatchSpec, Policy};
use crate::colored::{colored_tverberg_pm, ColoredOutcome};
use crate::error::{Error, Result};
use crate::exact::{parse_rat, rat_to_string, Rat};
use crate::instances::{example1, example2, random_color_classes, random_config};
use crate::io::{
    colored_solution_json, pm_solution_json, search_outcome_json, separation_json, spectrum_json,
    vec_to_strings, verify_json, ClassesDoc, ConfigDoc,
};
use crate::sarkaria::{tverberg_pm, Recovery};
use crate::search::{
    check_separation, radon_spectrum, search_exact_k, search_prescribed, Separation,
};

#[derive(Parser, Debug)]
#[command(
    name = "tvpm",
    version,
    about = "Exact Tverberg partitions with prescribed coefficient signs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Random configuration in general position.
    Gen {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit colour classes instead of a point configuration.
        #[arg(long)]
        colored: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Clustered configurations around the standard simplex.
    Example {
        #[arg(long, value_parser = ["1", "2"])]
        kind: String,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value = "1/100")]
        eps: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sign-prescribed partition via the tensor lift and pivoting.
    Solve {
        #[arg(long)]
        input: Option<PathBuf>,
        /// Comma-separated indices; defaults to the input's `m`.
        #[arg(long)]
        m: Option<String>,
        /// Per-iteration pivot state as JSON lines on stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Exhaustive search over proper partitions.
    Search {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(
            long,
            conflicts_with = "prescribe",
            required_unless_present = "prescribe"
        )]
        k: Option<usize>,
        #[arg(long)]
        prescribe: Option<String>,
    },
    /// Achievable negative counts over all Radon partitions.
    Spectrum {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Whether conv M and the hull of the rest are disjoint.
    Separation {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        m: Option<String>,
    },
    /// Colourful partition with equal per-class coefficients.
    Colored {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        m: Option<String>,
    },
    /// Re-check a certificate against its input.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Seeded experiment over many random configurations; CSV on stdout.
    Batch {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = PolicyArg::ExactK)]
        policy: PolicyArg,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    ExactK,
    Separated,
}

fn read_input(path: Option<&PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(fs::read_to_string(p)?),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit(value: &serde_json::Value) -> Result<()> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    write_output(None, &s)
}

/// Parses `"0,3,5"`; the empty string is the empty set.
pub fn parse_index_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Config(format!("bad index {t:?} in list {s:?}")))
        })
        .collect()
}

fn choose_m(flag: Option<&String>, doc: Option<&Vec<usize>>) -> Result<Vec<usize>> {
    match flag {
        Some(s) => parse_index_list(s),
        None => Ok(doc.cloned().unwrap_or_default()),
    }
}

fn load_config(input: Option<&PathBuf>) -> Result<(ConfigDoc, crate::tverberg::PointConfig)> {
    let doc: ConfigDoc = serde_json::from_str(&read_input(input)?)?;
    let config = doc.to_config()?;
    Ok((doc, config))
}

fn run(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Gen {
            d,
            r,
            seed,
            colored,
            out,
        } => {
            let text = if colored {
                let mut doc = ClassesDoc::from_classes(&random_color_classes(d, r, seed)?);
                doc.seed = Some(seed);
                serde_json::to_string_pretty(&doc)?
            } else {
                let mut doc = ConfigDoc::from_config(&random_config(d, r, seed)?);
                doc.seed = Some(seed);
                doc.generator = Some("random".into());
                serde_json::to_string_pretty(&doc)?
            };
            write_output(out.as_ref(), &(text + "\n"))?;
            Ok(0)
        }
        Command::Example {
            kind,
            d,
            r,
            eps,
            seed,
            out,
        } => {
            let eps: Rat = parse_rat(&eps)?;
            let (config, m) = if kind == "1" {
                example1(d, r, &eps, seed)?
            } else {
                example2(d, r, &eps, seed)?
            };
            let mut doc = ConfigDoc::from_config(&config);
            doc.m = Some(m);
            doc.seed = Some(seed);
            doc.generator = Some(format!("example{kind} eps={}", rat_to_string(&eps)));
            write_output(out.as_ref(), &(serde_json::to_string_pretty(&doc)? + "\n"))?;
            Ok(0)
        }
        Command::Solve { input, m, trace } => {
            let (doc, config) = load_config(input.as_ref())?;
            let m = choose_m(m.as_ref(), doc.m.as_ref())?;
            let sol = tverberg_pm(&config, &m)?;
            if trace {
                let mut err = io::stderr().lock();
                for step in &sol.trace {
                    let line = serde_json::json!({
                        "iteration": step.iteration,
                        "transversal": step.choice,
                        "w": vec_to_strings(&step.w),
                        "norm_sq": rat_to_string(&step.norm_sq),
                        "replaced": step.replaced,
                    });
                    writeln!(err, "{line}")?;
                }
            }
            emit(&pm_solution_json(
                &sol,
                &crate::search::index_set(&m, config.n())?,
            ))?;
            Ok(match sol.recovery {
                Recovery::Certificate { .. } => 0,
                Recovery::SeparationViolated { .. } => 1,
                Recovery::DegenerateGamma { .. } => 2,
            })
        }
        Command::Search {
            input,
            k,
            prescribe,
        } => {
            let (_, config) = load_config(input.as_ref())?;
            let (out, m) = match (k, prescribe) {
                (Some(k), _) => (search_exact_k(&config, k)?, None),
                (None, Some(p)) => {
                    let m = parse_index_list(&p)?;
                    (search_prescribed(&config, &m)?, Some(m))
                }
                (None, None) => unreachable!("clap requires --k or --prescribe"),
            };
            emit(&search_outcome_json(&out, m))?;
            Ok(if out.found.is_some() { 0 } else { 1 })
        }
        Command::Spectrum { input } => {
            let (_, config) = load_config(input.as_ref())?;
            emit(&spectrum_json(&radon_spectrum(&config)?))?;
            Ok(0)
        }
        Command::Separation { input, m } => {
            let (doc, config) = load_config(input.as_ref())?;
            let m = crate::search::index_set(&choose_m(m.as_ref(), doc.m.as_ref())?, config.n())?;
            let sep = check_separation(&config, &m)?;
            emit(&separation_json(&sep, &m))?;
            Ok(match sep {
                Separation::Separated { .. } => 0,
                Separation::NotSeparated { .. } => 1,
            })
        }
        Command::Colored { input, m } => {
            let doc: ClassesDoc = serde_json::from_str(&read_input(input.as_ref())?)?;
            let cc = doc.to_classes()?;
            let m = choose_m(m.as_ref(), doc.m.as_ref())?;
            let sol = colored_tverberg_pm(&cc, &m)?;
            emit(&colored_solution_json(&sol))?;
            Ok(match sol.outcome {
                ColoredOutcome::Colored { .. } => 0,
                ColoredOutcome::DegenerateGamma { .. } => 2,
            })
        }
        Command::Verify { input, cert } => {
            let input: serde_json::Value = serde_json::from_str(&fs::read_to_string(input)?)?;
            let cert: serde_json::Value = serde_json::from_str(&fs::read_to_string(cert)?)?;
            let verdict = verify_json(&input, &cert)?;
            let valid = verdict.violations.is_empty();
            emit(&serde_json::json!({
                "schema": crate::io::SCHEMA,
                "result": if valid { "valid" } else { "invalid" },
                "kind": verdict.kind,
                "violations": verdict.violations,
            }))?;
            Ok(if valid { 0 } else { 1 })
        }
        Command::Batch {
            d,
            r,
            k,
            policy,
            trials,
            seed,
            out,
        } => {
            let policy = match policy {
                PolicyArg::ExactK => Policy::ExactK(k),
                PolicyArg::Separated => Policy::Separated(k),
            };
            let report = run_batch(&BatchSpec {
                d,
                r,
                policy,
                trials,
                seed,
            })?;
            write_output(out.as_ref(), &report.to_csv())?;
            let summary = serde_json::json!({
                "trials": trials,
                "successes": report.successes(),
                "outcomes": report.counts(),
            });
            eprintln!("{summary}");
            Ok(0)
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

pub fn main() -> i32 {
    main_with_args(std::env::args_os())
}

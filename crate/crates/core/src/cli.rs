//! The `dense-mtl` command line. Every subcommand is a thin adapter over
//! the library; exit code 0 means success, 1 a failed check or
//! inequivalent formulas, 2 a usage, parse or file error.

use std::fmt::Display;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::eval::{evaluate, Env};
use crate::formula::Formula;
use crate::lab::{
    builtin_model, enumerate_formulas, paper_check_with_budget, report_from_signals, Logic,
    ModelSpec, PaperCheck, CHECK_BUDGET,
};
use crate::oracle::agreement_check;
use crate::signal::{parse_signal_file, Signal};

#[derive(Debug, Parser)]
#[command(name = "dense-mtl", version, about = "Exact dense-time temporal logic evaluation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the truth signal of a formula.
    Eval {
        #[arg(long)]
        formula: String,
        #[command(flatten)]
        env: EnvArgs,
        #[arg(long, value_enum, default_value_t = Output::Sig)]
        output: Output,
    },
    /// Exit 0 iff two formulas have the same truth set.
    Equiv {
        /// Given exactly twice.
        #[arg(long, required = true)]
        formula: Vec<String>,
        #[command(flatten)]
        env: EnvArgs,
        /// Compare only the periodic tails.
        #[arg(long)]
        eventually: bool,
    },
    /// Classify a formula against true, false, P and !P.
    Trivial {
        #[arg(long)]
        formula: String,
        #[command(flatten)]
        env: EnvArgs,
        #[arg(long)]
        eventually: bool,
    },
    /// Enumerate formulas up to semantic equivalence and write a
    /// trivialization report.
    Enumerate {
        /// tl, qtl or qtl+p<m>
        #[arg(long)]
        logic: String,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        model: String,
        #[arg(long, default_value_t = CHECK_BUDGET)]
        budget: usize,
        #[arg(long)]
        report: std::path::PathBuf,
        #[arg(long)]
        eventually: bool,
    },
    /// Run one of the builtin reproduction checks.
    Paper {
        /// pnueli, hierarchy:<n>, counting:<k> or triviality:<k>
        #[arg(long)]
        check: String,
        #[arg(long, default_value_t = CHECK_BUDGET)]
        budget: usize,
    },
    /// Compare the engine with the pointwise oracle at sampled points.
    OracleCheck {
        #[arg(long)]
        formula: String,
        #[command(flatten)]
        env: EnvArgs,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct EnvArgs {
    /// mk:<k>, thm2 or thm3:<n>; binds the atom P.
    #[arg(long)]
    model: Option<String>,
    /// Bind an atom to a signal file.
    #[arg(long, value_name = "NAME=PATH")]
    bind: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    /// The signal file format.
    Sig,
    /// A one-line human-readable description.
    Text,
}

/// A failure reported on stderr with exit code 2.
struct Usage(String);

fn usage(context: &str, e: impl Display) -> Usage {
    Usage(format!("{context}: {e}"))
}

fn formula(text: &str) -> Result<Formula, Usage> {
    text.parse().map_err(|e| usage("formula", e))
}

fn model(text: &str) -> Result<Env, Usage> {
    let spec: ModelSpec = text.parse().map_err(|e| usage("model", e))?;
    builtin_model(spec).map_err(|e| usage("model", e))
}

impl EnvArgs {
    fn build(&self) -> Result<Env, Usage> {
        let mut bound = Vec::new();
        for b in &self.bind {
            let (name, path) = b
                .split_once('=')
                .ok_or_else(|| Usage(format!("--bind expects NAME=PATH, got `{b}`")))?;
            let text = std::fs::read_to_string(path).map_err(|e| usage(path, e))?;
            let signal = parse_signal_file(&text).map_err(|e| usage(path, e))?;
            bound.push((name.to_string(), signal));
        }
        let mut env = match (&self.model, bound.first()) {
            (Some(m), _) => model(m)?,
            (None, Some((_, s))) => Env::new(s.domain()),
            (None, None) => return Err(Usage("either --model or --bind is required".into())),
        };
        for (name, signal) in bound {
            env.bind(name.clone(), signal).map_err(|e| usage(&name, e))?;
        }
        Ok(env)
    }
}

fn eval_in(f: &Formula, env: &Env) -> Result<Signal, Usage> {
    evaluate(f, env).map_err(|e| usage("evaluation", e))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Usage> {
    let io = |e: std::io::Error| usage("output", e);
    match command {
        Command::Eval {
            formula: text,
            env,
            output,
        } => {
            let s = eval_in(&formula(&text)?, &env.build()?)?;
            match output {
                Output::Sig => write!(out, "{}", s.to_file_string()).map_err(io)?,
                Output::Text => writeln!(out, "{s}").map_err(io)?,
            }
            Ok(0)
        }
        Command::Equiv {
            formula: texts,
            env,
            eventually,
        } => {
            let [a, b] = texts.as_slice() else {
                return Err(Usage("equiv needs --formula exactly twice".into()));
            };
            let env = env.build()?;
            let sa = eval_in(&formula(a)?, &env)?;
            let sb = eval_in(&formula(b)?, &env)?;
            let same = Signal::equal(&sa, &sb, eventually).map_err(|e| usage("equiv", e))?;
            writeln!(out, "{}", if same { "equivalent" } else { "not equivalent" }).map_err(io)?;
            Ok(if same { 0 } else { 1 })
        }
        Command::Trivial {
            formula: text,
            env,
            eventually,
        } => {
            let env = env.build()?;
            let s = eval_in(&formula(&text)?, &env)?;
            let p = env.lookup("P").map_err(|e| usage("trivial", e))?;
            let class = s
                .classify_trivial(p, eventually)
                .map_err(|e| usage("trivial", e))?;
            writeln!(out, "{class}").map_err(io)?;
            Ok(0)
        }
        Command::Enumerate {
            logic,
            depth,
            model: spec,
            budget,
            report,
            eventually,
        } => {
            let logic: Logic = logic.parse().map_err(|e| usage("logic", e))?;
            let env = model(&spec)?;
            let found =
                enumerate_formulas(logic, depth, &env, budget).map_err(|e| usage("enumerate", e))?;
            let mut rep = report_from_signals(&env, &found.formulas, &found.signals, eventually)
                .map_err(|e| usage("enumerate", e))?;
            rep.truncated = found.truncated;
            std::fs::write(&report, rep.to_string()).map_err(|e| usage(&report.display().to_string(), e))?;
            writeln!(out, "{}", rep.summary()).map_err(io)?;
            Ok(0)
        }
        Command::Paper { check, budget } => {
            let check: PaperCheck = check.parse().map_err(|e| usage("check", e))?;
            let report = paper_check_with_budget(check, budget).map_err(|e| usage("check", e))?;
            write!(out, "{report}").map_err(io)?;
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::OracleCheck {
            formula: text,
            env,
            samples,
            seed,
        } => {
            let report = agreement_check(&formula(&text)?, &env.build()?, samples, seed)
                .map_err(|e| usage("oracle-check", e))?;
            write!(out, "{report}").map_err(io)?;
            Ok(if report.all_agree() { 0 } else { 1 })
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<W: Write, E: Write>(args: &[String], out: &mut W, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

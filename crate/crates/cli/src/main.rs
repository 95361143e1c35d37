//! `newton-zeta`: topological and monodromy zeta functions from Newton
//! polyhedra, facet classification and monodromy-conjecture checks.

mod commands;
mod input;
mod json;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use input::{parse_input, Format};

const SCHEMA: &str = "newton-zeta/1";

#[derive(Parser)]
#[command(name = "newton-zeta", version, about = "Zeta functions of non-degenerate singularities from Newton polyhedra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input file ('-' for standard input). May be repeated.
    #[arg(long, global = true)]
    input: Vec<PathBuf>,
    /// Inline input, e.g. "x1^2 + x2^3".
    #[arg(long, global = true)]
    expr: Option<String>,
    /// Input format; detected from the first character when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Largest degree allowed when expanding a factored zeta function.
    #[arg(long, global = true, default_value_t = newton_zeta::exact::DEFAULT_DEGREE_CAP)]
    degree_cap: u64,
    /// Worker threads used when several inputs are given.
    #[arg(long, global = true, default_value_t = 1)]
    parallel: usize,
    /// Recorded in every report; results describe a generic polynomial
    /// with the given support.
    #[arg(long, global = true, default_value_t = true, action = clap::ArgAction::Set)]
    assume_nondegenerate: bool,
}

#[derive(Subcommand, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Vertices, facets, faces and V-faces of the Newton polyhedron.
    Newton,
    /// Topological zeta function and its candidate poles.
    Ztop,
    /// Monodromy zeta function at the origin and its strata.
    Monozeta,
    /// B1/B2 classification, splittings, 0-convenience and goodness.
    Classify,
    /// Corner-simplex gcd combinatorics from {"n", "k", "edges"}.
    Supermod,
    /// Monodromy conjecture verification report (n <= 4).
    Check,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Newton => "newton",
            Command::Ztop => "ztop",
            Command::Monozeta => "monozeta",
            Command::Classify => "classify",
            Command::Supermod => "supermod",
            Command::Check => "check",
        }
    }
}

enum Outcome {
    Done(Value),
    Inconclusive(Value),
}

fn read_source(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn run_one(cli: &Cli, text: &str) -> Result<Outcome> {
    let mut envelope = json!({
        "schema": SCHEMA,
        "command": cli.command.name(),
        "assume_nondegenerate": cli.assume_nondegenerate,
    });
    if cli.command == Command::Supermod {
        envelope["result"] = commands::supermod(text)?;
        return Ok(Outcome::Done(envelope));
    }
    let spec = parse_input(text, cli.format)?;
    for w in &spec.warnings {
        eprintln!("warning: {w}");
    }
    envelope["input"] = json!({ "n": spec.n, "support": spec.support });
    let p = commands::polyhedron(&spec)?;
    let (result, conclusive) = match cli.command {
        Command::Newton => (commands::newton(&p), true),
        Command::Ztop => (commands::ztop(&p)?, true),
        Command::Monozeta => (commands::monozeta(&p, cli.degree_cap)?, true),
        Command::Classify => (commands::classify(&p)?, true),
        Command::Check => commands::check(&p)?,
        Command::Supermod => unreachable!("handled above"),
    };
    envelope["result"] = result;
    Ok(if conclusive { Outcome::Done(envelope) } else { Outcome::Inconclusive(envelope) })
}

fn run(cli: &Cli) -> Result<Vec<Outcome>> {
    let mut texts = Vec::new();
    if let Some(e) = &cli.expr {
        texts.push(e.clone());
    }
    for path in &cli.input {
        texts.push(read_source(path)?);
    }
    if texts.is_empty() {
        texts.push(read_source(&PathBuf::from("-"))?);
    }
    let workers = cli.parallel.clamp(1, texts.len());
    if workers == 1 {
        return texts.iter().map(|t| run_one(cli, t)).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<Result<Outcome>>>> = Mutex::new((0..texts.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= texts.len() {
                    break;
                }
                let r = run_one(cli, &texts[i]);
                slots.lock().expect("no panics while holding the lock")[i] = Some(r);
            });
        }
    });
    slots.into_inner().expect("workers joined").into_iter().map(|r| r.expect("every slot filled")).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcomes = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    let mut inconclusive = false;
    let values: Vec<Value> = outcomes
        .into_iter()
        .map(|o| match o {
            Outcome::Done(v) => v,
            Outcome::Inconclusive(v) => {
                inconclusive = true;
                v
            }
        })
        .collect();
    let out = if values.len() == 1 { values.into_iter().next().expect("one value") } else { Value::Array(values) };
    let text = serde_json::to_string_pretty(&out).expect("JSON values serialize");
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = writeln!(stdout, "{text}") {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    if inconclusive {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

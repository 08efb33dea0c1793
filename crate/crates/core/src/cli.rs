//! The `arbor` command line.
//!
//! Exit codes: 0 success, 1 parse error or failed verification/sweep, 2 input
//! out of scope (Δ < n/2), 3 oracle cap exceeded, 64 usage error.

use std::fs;
use std::io::Read;

use clap::{Parser, Subcommand};

use crate::construct::{equitable_tree_coloring, gamma};
use crate::io::{read_coloring, read_graph, write_coloring, write_graph};
use crate::oracle::{self, DEFAULT_CAP};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_OUT_OF_SCOPE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "arbor",
    version,
    about = "Equitable tree-colorings of graphs with Δ ≥ n/2"
)]
pub struct CommandConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color a graph with Γ = ⌈(Δ+1)/2⌉ linear-forest classes.
    Color {
        /// Edge-list file, or `-` for standard input.
        #[arg(default_value = "-")]
        input: String,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
    /// Check a coloring document against a graph.
    Verify {
        graph: String,
        coloring: String,
        /// Also require every class to induce a linear forest.
        #[arg(long)]
        strict: bool,
    },
    /// Exact equitable vertex arboricity by backtracking.
    Oracle {
        #[arg(default_value = "-")]
        input: String,
        /// Decide a single class count and print a witness instead.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Exhaustively check every labeled graph of order n.
    Sweep {
        #[arg(long)]
        n: usize,
        /// Only run the construction on graphs with Δ ≥ n/2; skip the oracle.
        #[arg(long)]
        regime_only: bool,
    },
    /// Generate a random graph with Δ ≥ n/2.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long, default_value = "-")]
        output: String,
    },
}

/// Result of one command: the exit status plus what goes to stdout and stderr.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String, Outcome> {
        if path == "-" {
            if std::mem::replace(&mut self.stdin_used, true) {
                return Err(Outcome::fail(
                    EXIT_USAGE,
                    "standard input can only be read once",
                ));
            }
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Outcome::fail(EXIT_FAIL, format!("reading stdin: {e}")))?;
            Ok(s)
        } else {
            fs::read_to_string(path).map_err(|e| Outcome::fail(EXIT_FAIL, format!("{path}: {e}")))
        }
    }
}

fn emit(output: &str, doc: String) -> Outcome {
    if output == "-" {
        return Outcome {
            code: EXIT_OK,
            stdout: doc,
            stderr: String::new(),
        };
    }
    match fs::write(output, doc) {
        Ok(()) => Outcome::default(),
        Err(e) => Outcome::fail(EXIT_FAIL, format!("{output}: {e}")),
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::OutOfScope { .. } => EXIT_OUT_OF_SCOPE,
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::InvalidArgument(_) => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

fn threads_from_env() -> usize {
    std::env::var("ARBOR_THREADS")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

pub fn run(config: &CommandConfig, stdin: &mut dyn Read) -> Outcome {
    let mut io = Io {
        stdin,
        stdin_used: false,
    };
    match execute(config, &mut io) {
        Ok(o) | Err(o) => o,
    }
}

fn parse_graph(io: &mut Io<'_>, path: &str) -> Result<crate::Graph, Outcome> {
    let text = io.read(path)?;
    read_graph(&text).map_err(|e| Outcome::fail(EXIT_FAIL, format!("{path}: {e}")))
}

fn execute(config: &CommandConfig, io: &mut Io<'_>) -> Result<Outcome, Outcome> {
    let fail = |e: Error| Outcome::fail(error_code(&e), e.to_string());
    Ok(match &config.command {
        Command::Color { input, output } => {
            let g = parse_graph(io, input)?;
            let c = equitable_tree_coloring(&g).map_err(fail)?;
            emit(output, write_coloring(&c))
        }
        Command::Verify {
            graph,
            coloring,
            strict,
        } => {
            let g = parse_graph(io, graph)?;
            let text = io.read(coloring)?;
            let c = read_coloring(&text, &g)
                .map_err(|e| Outcome::fail(EXIT_FAIL, format!("{coloring}: {e}")))?;
            let report = oracle::verify(&g, &c, *strict);
            Outcome {
                code: if report.ok { EXIT_OK } else { EXIT_FAIL },
                stdout: report.to_string(),
                stderr: String::new(),
            }
        }
        Command::Oracle { input, k, cap } => {
            if *cap > DEFAULT_CAP {
                eprintln!(
                    "warning: oracle cap {cap} above {DEFAULT_CAP}; runtime grows exponentially"
                );
            }
            let g = parse_graph(io, input)?;
            let stdout = match k {
                Some(k) => {
                    match oracle::exists_equitable_k_tree_coloring(&g, *k, *cap).map_err(fail)? {
                        Some(c) => format!("EXISTS k={k} yes\n{}", write_coloring(&c)),
                        None => format!("EXISTS k={k} no\n"),
                    }
                }
                None => {
                    let a = oracle::exact_a_eq(&g, *cap).map_err(fail)?;
                    format!("a_eq={a} gamma={}\n", gamma(&g).map_err(fail)?)
                }
            };
            Outcome {
                stdout,
                ..Outcome::default()
            }
        }
        Command::Sweep { n, regime_only } => {
            let report =
                oracle::sweep_conjecture(*n, *regime_only, threads_from_env()).map_err(fail)?;
            Outcome {
                code: if report.is_success() {
                    EXIT_OK
                } else {
                    EXIT_FAIL
                },
                stdout: report.to_string(),
                stderr: String::new(),
            }
        }
        Command::Gen { n, seed, output } => {
            let g = oracle::gen_random(*n, *seed).map_err(fail)?;
            emit(output, write_graph(&g))
        }
    })
}

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use edge_ara::poly::OrderKind;
use edge_ara::random::DEFAULT_SEED;
use edge_ara::report::{self, CliError, RunOptions, RunReport, EXIT_OK, EXIT_VERIFY_FAILED};
use edge_ara::sv::DEFAULT_NODE_LIMIT;

/// Edge ideals of graphs with disjoint cycles: covers, generator
/// certificates and their verification.
#[derive(Parser)]
#[command(name = "edge-ara", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Print reports as JSON.
    #[arg(long)]
    json: bool,
    /// Search nodes allowed per arrangement search.
    #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
    budget: u64,
    /// Monomial order for Gröbner computations (lex or grevlex).
    #[arg(long, default_value = "grevlex")]
    order: OrderKind,
    /// Worker threads when several inputs are given.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

impl Common {
    fn options(&self) -> RunOptions {
        RunOptions { node_limit: self.budget, order: self.order }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Covers, cycle structure and a certificate for each edge-list file.
    Analyze {
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Writes a verified certificate with at most bight + n generators.
    Construct {
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
        /// Certificate file, or a directory when several graphs are given.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Checks that a certificate (JSON or one polynomial per line) generates
    /// the edge ideal up to radical.
    Verify {
        graph: PathBuf,
        certificate: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Runs the bundled fixtures and seeded property suites.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Read fixtures from this directory instead of the bundled copies.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

fn print_report(r: &RunReport, json: bool) {
    if json {
        println!("{}", r.to_json());
    } else {
        print!("{}", r.to_text());
    }
}

fn run_all<T: Send>(paths: &[PathBuf], jobs: usize, f: impl Fn(&Path) -> T + Sync) -> Vec<T> {
    if jobs <= 1 || paths.len() <= 1 {
        return paths.iter().map(|p| f(p)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
    pool.install(|| paths.par_iter().map(|p| f(p)).collect())
}

/// The worst exit code of a batch wins.
fn finish(results: Vec<Result<i32, CliError>>) -> i32 {
    results
        .into_iter()
        .map(|r| {
            r.unwrap_or_else(|e| {
                eprintln!("error: {e}");
                e.exit_code()
            })
        })
        .max()
        .unwrap_or(EXIT_OK)
}

fn cert_path(out: &Option<PathBuf>, graph: &Path, many: bool) -> Option<PathBuf> {
    let out = out.as_ref()?;
    if many {
        let stem = graph.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "graph".into());
        Some(out.join(format!("{stem}.cert.json")))
    } else {
        Some(out.clone())
    }
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Analyze { graphs, common } => {
            let results = run_all(&graphs, common.jobs, |p| report::cmd_analyze(p, common.options()));
            finish(
                results
                    .into_iter()
                    .map(|r| {
                        r.map(|r| {
                            print_report(&r, common.json);
                            EXIT_OK
                        })
                    })
                    .collect(),
            )
        }
        Command::Construct { graphs, out, common } => {
            let many = graphs.len() > 1;
            if let (true, Some(dir)) = (many, &out) {
                if let Err(e) = fs::create_dir_all(dir) {
                    eprintln!("error: {}: {e}", dir.display());
                    return report::EXIT_INPUT;
                }
            }
            let results = run_all(&graphs, common.jobs, |p| report::cmd_construct(p, common.options()).map(|r| (p.to_path_buf(), r)));
            finish(
                results
                    .into_iter()
                    .map(|r| {
                        let (p, (rep, json)) = r?;
                        if let Some(target) = cert_path(&out, &p, many) {
                            fs::write(&target, format!("{json}\n"))
                                .map_err(|e| CliError::Input { path: target.clone(), message: e.to_string() })?;
                        } else if common.json {
                            println!("{json}");
                        }
                        print_report(&rep, common.json);
                        Ok(EXIT_OK)
                    })
                    .collect(),
            )
        }
        Command::Verify { graph, certificate, common } => finish(vec![report::cmd_verify(&graph, &certificate, common.options()).map(|r| {
            print_report(&r, common.json);
            if r.verdict.as_ref().is_some_and(|v| v.passed()) {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            }
        })]),
        Command::Selftest { seed, fixtures, common } => {
            let s = report::cmd_selftest(fixtures.as_deref(), seed, common.options());
            if common.json {
                println!("{}", serde_json::to_string_pretty(&s).expect("summary serializes"));
            } else {
                print!("{}", s.to_text());
            }
            if s.ok() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            }
        }
    }
}

fn main() -> ExitCode {
    let code = run(Cli::parse());
    ExitCode::from(code as u8)
}

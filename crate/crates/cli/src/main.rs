use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tcover_cli::{BaselineMethod, CliError};
use tcover_core::{InstanceSpec, MatchingMode, SearchLimits};

#[derive(Parser)]
#[command(
    name = "tcover",
    version,
    about = "Approximate and exact minimum total covers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    MatchedVertices,
    GreedyDomination,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatchingArg {
    Maximal,
    Maximum,
}

#[derive(Subcommand)]
enum Command {
    /// Run the 2-approximation and print its certificate.
    Solve {
        graph: PathBuf,
        /// Print one line per cover addition.
        #[arg(long)]
        trace: bool,
        /// Write the cover to this file.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Find a minimum total cover by exhaustive search.
    Exact {
        graph: PathBuf,
        #[arg(long, default_value_t = SearchLimits::default().max_elements)]
        max_elements: usize,
        #[arg(long, default_value_t = SearchLimits::default().max_candidates)]
        max_candidates: u64,
        /// Start at the certified lower bound instead of size 0.
        #[arg(long)]
        start_at_lower_bound: bool,
    },
    /// Run a baseline heuristic.
    Baseline {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "matched-vertices")]
        method: Method,
        #[arg(long, value_enum, default_value = "maximum")]
        matching: MatchingArg,
    },
    /// Check whether a cover file is a total cover of a graph.
    Verify {
        graph: PathBuf,
        #[arg(long)]
        cover: PathBuf,
    },
    /// Generate an instance in the graph file format.
    Gen {
        #[arg(value_parser = ["figure1", "path", "cycle", "star", "complete", "gnp"])]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Append this many isolated vertices.
        #[arg(long, default_value_t = 0)]
        isolated: usize,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Tabulate algorithm, baselines and (when small) the optimum as CSV.
    Compare {
        /// Graph files or directories of graph files.
        inputs: Vec<PathBuf>,
        #[arg(long)]
        dir: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = SearchLimits::default().max_elements)]
        exact_limit: usize,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Solve {
            graph,
            trace,
            output,
        } => tcover_cli::solve(&graph, trace, output.as_deref()),
        Command::Exact {
            graph,
            max_elements,
            max_candidates,
            start_at_lower_bound,
        } => {
            let limits = SearchLimits {
                max_elements,
                max_candidates,
                start_size: 0,
            };
            tcover_cli::exact(&graph, limits, start_at_lower_bound)
        }
        Command::Baseline {
            graph,
            method,
            matching,
        } => {
            let method = match method {
                Method::MatchedVertices => BaselineMethod::MatchedVertices,
                Method::GreedyDomination => BaselineMethod::GreedyDomination,
            };
            let mode = match matching {
                MatchingArg::Maximal => MatchingMode::Maximal,
                MatchingArg::Maximum => MatchingMode::Maximum,
            };
            tcover_cli::baseline(&graph, method, mode)
        }
        Command::Verify { graph, cover } => tcover_cli::verify(&graph, &cover),
        Command::Gen {
            family,
            n,
            p,
            seed,
            isolated,
            output,
        } => {
            let family = tcover_cli::family_from_args(&family, n, p, seed)?;
            let spec = InstanceSpec::new(family).with_isolated(isolated);
            let (text, summary) = tcover_cli::generate(&spec)?;
            match output {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|source| CliError::Io { path, source })?;
                    Ok(summary)
                }
                None => {
                    eprint!("{summary}");
                    Ok(text)
                }
            }
        }
        Command::Compare {
            mut inputs,
            dir,
            csv,
            exact_limit,
        } => {
            inputs.extend(dir);
            if inputs.is_empty() {
                return Err(CliError::BadParameter("no inputs given".to_owned()));
            }
            let table = tcover_cli::compare(&inputs, exact_limit)?;
            match csv {
                Some(path) => {
                    std::fs::write(&path, &table)
                        .map_err(|source| CliError::Io { path, source })?;
                    Ok(String::new())
                }
                None => Ok(table),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            let _ = std::io::stdout().flush();
            ExitCode::SUCCESS
        }
        Err(e @ CliError::InvalidCover(_)) => {
            println!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("tcover: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

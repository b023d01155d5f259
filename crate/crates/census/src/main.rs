use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use census::decompose::run_decompose;
use census::report::{cells_report, graph_report, hypergraph_report, square_report};
use census::spec::{parse_spec, read_hypergraph};
use census::suite::{run_suite, Settings};
use census::CliError;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "census", version, about = "Mod-2 cycle spaces of graphs, squares, cell products and hypergraphs")]
struct Cli {
    /// Emit JSON on standard output; JSON is the only format, so this is
    /// always in effect.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress progress and timing on standard error.
    #[arg(long, global = true)]
    quiet: bool,
    /// Cap on simple-cycle enumeration.
    #[arg(long, global = true, default_value_t = 200_000)]
    max_cycles: usize,
    /// Seed for the randomized checks in `verify`.
    #[arg(long, global = true, default_value_t = 20240617)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cycle space of a graph.
    Graph { spec: String },
    /// 1-cycles of the square, with boundaries and symmetry.
    Square { spec: String },
    /// 1-cycles of the deleted square.
    DeletedSquare { spec: String },
    /// Cellular 2-cycles of the cell square.
    Cells { spec: String },
    /// Cellular 2-cycles of the combinatorial deleted product.
    DeletedCells { spec: String },
    /// Betti numbers of a 3-uniform hypergraph file.
    Hypergraph { file: String },
    /// Split a cycle into basic pieces.
    Decompose {
        /// simple, chordless, triangles, squares, tetrahedra, relation or rook.
        kind: String,
        args: Vec<String>,
    },
    /// Run the verification suite, or one criterion by name or number.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

fn run(cli: &Cli) -> Result<(Value, bool), CliError> {
    Ok(match &cli.command {
        Command::Graph { spec } => (graph_report(spec, &parse_spec(spec)?), true),
        Command::Square { spec } => (square_report(spec, &parse_spec(spec)?, false), true),
        Command::DeletedSquare { spec } => (square_report(spec, &parse_spec(spec)?, true), true),
        Command::Cells { spec } => (cells_report(spec, &parse_spec(spec)?, false), true),
        Command::DeletedCells { spec } => (cells_report(spec, &parse_spec(spec)?, true), true),
        Command::Hypergraph { file } => (hypergraph_report(file, &read_hypergraph(file)?), true),
        Command::Decompose { kind, args } => (run_decompose(kind, args)?, true),
        Command::Verify { suite } => {
            let checks = run_suite(suite, &Settings { seed: cli.seed, max_cycles: cli.max_cycles })?;
            if !cli.quiet {
                for c in &checks {
                    eprintln!("{}", c.summary_line());
                    for f in c.failures() {
                        eprintln!("    {}: expected {}, computed {}", f.label, f.expected, f.computed);
                    }
                }
            }
            let passed = checks.iter().all(|c| c.passed());
            let failures: Vec<&str> = checks.iter().filter(|c| !c.passed()).map(|c| c.name).collect();
            let report = json!({
                "kind": "verify",
                "suite": suite,
                "seed": cli.seed,
                "passed": passed,
                "failures": failures,
                "checks": checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            });
            (report, passed)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(&cli);
    if !cli.quiet {
        eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    }
    match outcome {
        Ok((report, ok)) => {
            let text = serde_json::to_string_pretty(&report).expect("JSON values serialize");
            // a closed pipe downstream (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("census: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

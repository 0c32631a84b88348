mod input;
mod render;
mod sweep;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use semlab::{
    first_obstruction, is_perfect_sem, search_sem, sem_interval, sem_set, verify_sem, Graph, SearchConfig,
    SearchOutcome, SearchStatus,
};

use crate::input::{read_certificate, GraphInput};
use crate::sweep::{parse_range, run_sweep, write_csv, Family, SweepOptions};

/// Exit code for unreadable or malformed input (graphs, certificates).
const EXIT_INPUT: u8 = 3;
/// Exit code for command-line usage errors.
const EXIT_USAGE: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "semlab", version, about = "Super edge-magic labelings of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify a labeling certificate against a graph (exit 0 iff valid)
    Check {
        #[command(flatten)]
        graph: GraphInput,
        /// Certificate JSON file
        #[arg(long)]
        cert: PathBuf,
    },
    /// Decide whether the graph is super edge-magic (exit 0 SEM, 1 not, 2 unknown)
    Solve {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        search: SearchArgs,
        /// Write the witness certificate here when one is found
        #[arg(long, value_name = "PATH")]
        cert_out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Print the super edge-magic interval
    Interval {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Print every valence achieved by a super edge-magic labeling
    Valences {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        json: bool,
    },
    /// Classify the graph as perfect super edge-magic or not
    Perfect {
        #[command(flatten)]
        graph: GraphInput,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        json: bool,
    },
    /// Run a family of graphs and tabulate the results as CSV
    Sweep {
        #[command(subcommand)]
        family: SweepFamily,
        /// CSV output path (stdout when omitted)
        #[arg(long, global = true)]
        out: Option<PathBuf>,
        /// Largest order allowed in the sweep
        #[arg(long, default_value_t = 16, global = true)]
        max_order: usize,
        /// Also compute the valence set of every row
        #[arg(long, global = true)]
        valences: bool,
        /// Fill the millis column
        #[arg(long, global = true)]
        timing: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Emit the graph as DOT, with labels when a certificate is given
    Render {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum SweepFamily {
    /// C(m,n) over a grid of cycle lengths
    TwoCycleGrid {
        #[arg(long, value_parser = parse_range, value_name = "A..B")]
        m: (usize, usize),
        #[arg(long, value_parser = parse_range, value_name = "A..B")]
        n: (usize, usize),
    },
    /// C(3, 4k-3) for k in a range
    ThreeCycleSeries {
        #[arg(long, value_parser = parse_range, value_name = "A..B")]
        k: (usize, usize),
    },
    /// All graphs with degree sequence 4,2,...,2 for orders in a range
    #[command(name = "degseq-4-2")]
    Degseq42 {
        #[arg(long, value_parser = parse_range, value_name = "A..B")]
        order: (usize, usize),
    },
}

#[derive(Args, Debug, Clone)]
struct SearchArgs {
    /// Skip the analytic obstructions and always search
    #[arg(long, global = true)]
    no_obstructions: bool,
    /// Search every anchor label instead of using complement symmetry
    #[arg(long, global = true)]
    no_symmetry: bool,
    /// Node budget
    #[arg(long, default_value_t = 1_000_000_000, global = true)]
    budget: u64,
    /// Worker threads (SEMLAB_THREADS overrides)
    #[arg(long, global = true)]
    threads: Option<usize>,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        let defaults = SearchConfig::default();
        let from_env = std::env::var("SEMLAB_THREADS").ok().and_then(|v| v.trim().parse().ok());
        SearchConfig {
            use_obstructions: !self.no_obstructions,
            symmetry_reduction: !self.no_symmetry,
            budget: self.budget,
            threads: from_env.or(self.threads).unwrap_or(defaults.threads).max(1),
            pins: Vec::new(),
        }
    }
}

/// Failures that map onto a specific exit code.
enum Failure {
    Input(anyhow::Error),
    Other(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Other(e.into())
    }
}

fn input<T>(r: Result<T>) -> Result<T, Failure> {
    r.map_err(Failure::Input)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(e)) => {
            eprintln!("error: parse: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Check { graph, cert } => {
            let g = input(graph.load())?;
            let labeling = input(read_certificate(&cert))?;
            match verify_sem(&g, &labeling) {
                Ok(()) => {
                    writeln!(out, "ok: super edge-magic labeling with valence {}", labeling.valence)?;
                    Ok(0)
                }
                Err(reason) => {
                    writeln!(out, "invalid ({}): {reason}", reason.code())?;
                    Ok(1)
                }
            }
        }
        Command::Solve {
            graph,
            search,
            cert_out,
            json,
        } => {
            let g = input(graph.load())?;
            let outcome = search_sem(&g, &search.config())?;
            if let (Some(path), Some(witness)) = (&cert_out, &outcome.witness) {
                std::fs::write(path, witness.to_json() + "\n")?;
            }
            if json {
                writeln!(out, "{}", outcome.to_json())?;
            } else {
                print_outcome(&mut out, &g, &outcome)?;
            }
            Ok(status_exit_code(outcome.status))
        }
        Command::Interval { graph, json } => {
            let g = input(graph.load())?;
            if g.size() == 0 {
                return edgeless(&mut out, json);
            }
            let interval = sem_interval(&g)?;
            if json {
                let value = json!({
                    "interval": interval,
                    "empty": interval.is_empty(),
                    "min": interval.min_value.to_string(),
                    "max": interval.max_value.to_string(),
                });
                writeln!(out, "{value}")?;
            } else if interval.is_empty() {
                writeln!(
                    out,
                    "interval: empty (valence formula ranges over [{}, {}])",
                    interval.min_value, interval.max_value
                )?;
            } else {
                writeln!(
                    out,
                    "interval: [{}, {}] (valence formula ranges over [{}, {}])",
                    interval.lo, interval.hi, interval.min_value, interval.max_value
                )?;
            }
            Ok(0)
        }
        Command::Valences { graph, search, json } => {
            let g = input(graph.load())?;
            if g.size() == 0 {
                return edgeless(&mut out, json);
            }
            let set = sem_set(&g, &search.config())?;
            if json {
                let value = json!({
                    "interval": sem_interval(&g)?,
                    "valence_set": set.values,
                    "complete": set.complete,
                    "stats": set.stats,
                });
                writeln!(out, "{value}")?;
            } else {
                let values: Vec<String> = set.values.iter().map(ToString::to_string).collect();
                let suffix = if set.complete { "" } else { " (budget exhausted, partial)" };
                writeln!(out, "valences: {{{}}}{suffix}", values.join(", "))?;
            }
            Ok(if set.complete { 0 } else { 2 })
        }
        Command::Perfect { graph, search, json } => {
            let g = input(graph.load())?;
            if g.size() == 0 {
                return edgeless(&mut out, json);
            }
            let config = search.config();
            let class = is_perfect_sem(&g, &config)?;
            if json {
                let set = sem_set(&g, &config)?;
                let value = json!({
                    "classification": class,
                    "interval": sem_interval(&g)?,
                    "valence_set": set.values,
                });
                writeln!(out, "{value}")?;
            } else {
                writeln!(out, "{class}")?;
            }
            Ok(if class == semlab::Perfection::Unknown { 2 } else { 0 })
        }
        Command::Sweep {
            family,
            out: path,
            max_order,
            valences,
            timing,
            search,
        } => {
            let family = match family {
                SweepFamily::TwoCycleGrid { m, n } => Family::TwoCycleGrid { m, n },
                SweepFamily::ThreeCycleSeries { k } => Family::ThreeCycleSeries { k },
                SweepFamily::Degseq42 { order } => Family::Degseq42 { order },
            };
            let options = SweepOptions {
                config: search.config(),
                max_order,
                valences,
                timing,
            };
            let rows = run_sweep(&family, &options)?;
            match path {
                Some(path) => write_csv(&rows, BufWriter::new(File::create(path)?))?,
                None => write_csv(&rows, &mut out)?,
            }
            Ok(0)
        }
        Command::Render { graph, cert } => {
            let g = input(graph.load())?;
            let labeling = match &cert {
                Some(path) => Some(input(read_certificate(path))?),
                None => None,
            };
            if let Some(l) = &labeling {
                if let Err(reason) = verify_sem(&g, l) {
                    eprintln!("certificate does not match the graph ({}): {reason}", reason.code());
                    return Ok(1);
                }
            }
            write!(out, "{}", render::to_dot(&g, labeling.as_ref()))?;
            Ok(0)
        }
    }
}

fn status_exit_code(status: SearchStatus) -> u8 {
    match status {
        SearchStatus::Sem | SearchStatus::TrivialEdgeless => 0,
        SearchStatus::NotSemExhausted | SearchStatus::NotSemObstruction => 1,
        SearchStatus::UnknownBudgetExceeded => 2,
    }
}

fn edgeless(out: &mut impl Write, json: bool) -> Result<u8, Failure> {
    const MESSAGE: &str = "trivially super edge-magic, valence undefined";
    if json {
        writeln!(out, "{}", json!({ "status": "TRIVIAL_EDGELESS", "message": MESSAGE }))?;
    } else {
        writeln!(out, "{MESSAGE}")?;
    }
    Ok(0)
}

fn print_outcome(out: &mut impl Write, g: &Graph, outcome: &SearchOutcome) -> io::Result<()> {
    writeln!(out, "graph: p={} q={} degrees {}", g.order(), g.size(), g.degree_sequence())?;
    writeln!(out, "status: {}", outcome.status)?;
    if let Some(v) = &outcome.obstruction {
        writeln!(out, "obstruction: {} ({})", v.rule, v.justification)?;
    } else if let Some(v) = first_obstruction(g).filter(|_| !outcome.config.use_obstructions) {
        writeln!(out, "note: obstruction {} also applies", v.rule)?;
    }
    if let Some(w) = &outcome.witness {
        writeln!(out, "valence: {}", w.valence)?;
        writeln!(out, "vertex labels: {:?}", w.vertex_labels)?;
        let edges: Vec<String> = w.edge_labels.iter().map(|e| format!("{}-{}:{}", e.0, e.1, e.2)).collect();
        writeln!(out, "edge labels: {}", edges.join(" "))?;
    }
    match &outcome.interval {
        Some(i) if i.is_empty() => writeln!(out, "interval: empty")?,
        Some(i) => writeln!(out, "interval: [{}, {}]", i.lo, i.hi)?,
        None => {}
    }
    let s = &outcome.stats;
    writeln!(out, "nodes: {} labelings: {} millis: {}", s.nodes, s.labelings, s.millis)
}

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rankbisim::NodeId;
use rankbisim_cli::commands::{self, CliError, Direction, DotTarget, Format};
use rankbisim_cli::formats::{write_edge_list, Reachability};

/// Bisimulation quotients and OBDD graph encodings.
#[derive(Parser)]
#[command(name = "rankbisim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Graph file (edge list, or Aldebaran `.aut`).
    input: PathBuf,
    /// Input format; inferred from the file extension when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Reject nodes the root does not reach instead of dropping them.
    #[arg(long)]
    strict: bool,
    /// Write the main output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Quotient by maximum bisimulation. Prints the quotient edge list and
    /// writes the pairs report to `--pairs` (default `<out>.json` when
    /// `--out` is given).
    Quotient {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        pairs: Option<PathBuf>,
    },
    /// Size report: standard encoding of the graph and of its quotient, and
    /// the layered encoding of the quotient.
    Compare {
        #[command(flatten)]
        input: Input,
    },
    /// Iterated successor set.
    Image(Walk),
    /// Iterated predecessor set.
    Preimage(Walk),
    /// Generate a graph family: self-loops N, self-loops-rooted N, cycle N,
    /// chain N, clique-cycle U Q, tree ARITY DEPTH, random N M SEED,
    /// fixture NAME.
    Gen {
        family: String,
        params: Vec<String>,
        /// Random graphs only: draw a DAG.
        #[arg(long)]
        acyclic: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graphviz rendering of an encoding.
    Dot {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "standard")]
        what: DotTarget,
        /// Layered blocks group nodes sharing this many leading code bits.
        #[arg(long, default_value_t = 0)]
        blocks: u32,
    },
}

#[derive(Args)]
struct Walk {
    #[command(flatten)]
    input: Input,
    /// Starting nodes.
    #[arg(long, value_delimiter = ',', required = true)]
    nodes: Vec<NodeId>,
    #[arg(long, default_value_t = 1)]
    steps: usize,
    /// Layered blocks group nodes sharing this many leading code bits.
    #[arg(long, default_value_t = 0)]
    blocks: u32,
}

fn write_to(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn load(input: &Input) -> Result<rankbisim_cli::formats::Parsed, CliError> {
    let mode = if input.strict { Reachability::Strict } else { Reachability::Prune };
    commands::load(&input.input, input.format, mode)
}

fn walk(w: &Walk, dir: Direction) -> Result<(), CliError> {
    let parsed = load(&w.input)?;
    let set = commands::walk(&parsed, &w.nodes, w.steps, w.blocks, dir)?;
    let line: Vec<String> = set.iter().map(ToString::to_string).collect();
    write_to(w.input.out.as_deref(), &format!("{}\n", line.join(" ")))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Quotient { input, pairs } => {
            let parsed = load(&input)?;
            let (edges, report) = commands::quotient(&parsed)?;
            write_to(input.out.as_deref(), &edges)?;
            let pairs = pairs.or_else(|| input.out.as_ref().map(|o| o.with_extension("json")));
            match pairs {
                Some(p) => write_to(Some(&p), &json(&report)),
                None => Ok(()),
            }
        }
        Command::Compare { input } => {
            let parsed = load(&input)?;
            write_to(input.out.as_deref(), &json(&commands::compare(&parsed.graph)?))
        }
        Command::Image(w) => walk(&w, Direction::Forward),
        Command::Preimage(w) => walk(&w, Direction::Backward),
        Command::Gen { family, params, acyclic, out } => {
            let g = commands::generate(&family, &params, acyclic)?;
            write_to(out.as_deref(), &write_edge_list(&g))
        }
        Command::Dot { input, what, blocks } => {
            let parsed = load(&input)?;
            write_to(input.out.as_deref(), &commands::dot(&parsed.graph, what, blocks)?)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

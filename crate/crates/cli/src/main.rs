mod commands;
mod dot;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ordergap::sierpinski::GeneratorMode;
use ordergap::{Limits, RegularityConvention};

pub use commands::{Failure, Report};

#[derive(Parser)]
#[command(
    name = "ordergap",
    version,
    about = "Gaps, selectors and separations in finite and periodic orders"
)]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Options {
    /// Largest poset (or Sierpinski ground set) handled exhaustively.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(1..=64))]
    bound: Option<u64>,
    /// Node budget for backtracking searches.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Regularity::AllFinite)]
    regularity: Regularity,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Treat any gap (or a non-lattice input) as a refutation.
    #[arg(long, global = true)]
    expect_lattice: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Regularity {
    AllFinite,
    InfiniteOnly,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

impl Options {
    pub fn limits(&self) -> Limits {
        let mut l = Limits {
            regularity: match self.regularity {
                Regularity::AllFinite => RegularityConvention::AllFinite,
                Regularity::InfiniteOnly => RegularityConvention::InfiniteOnly,
            },
            ..Limits::default()
        };
        if let Some(b) = self.bound {
            l.exhaustive_bound = b as usize;
            l.sierpinski_bound = b as usize;
        }
        if let Some(b) = self.budget {
            l.search_budget = b;
        }
        l
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn expect_lattice(&self) -> bool {
        self.expect_lattice
    }
}

#[derive(Subcommand)]
enum Command {
    /// Finite posets: gaps and the decision procedures.
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Sierpinski chains and the lattices they generate.
    #[command(subcommand)]
    Sierpinski(SierpinskiCmd),
    /// Eventually periodic sets modulo finite and branches of the binary tree.
    #[command(subcommand)]
    Modfin(ModfinCmd),
    /// Diagram export.
    #[command(subcommand)]
    Render(RenderCmd),
}

#[derive(Subcommand)]
pub enum PosetCmd {
    /// Validate a poset document and report whether it is a lattice.
    Check {
        file: PathBuf,
    },
    /// List the gaps, or with --all classify every pair of subsets.
    Gaps {
        file: PathBuf,
        #[arg(long)]
        all: bool,
    },
    /// Search for a monotone separator selector on B(P).
    Selection {
        file: PathBuf,
    },
    /// Whether every gap is preserved by a monotone map into a finite chain.
    ChainGap {
        file: PathBuf,
    },
    /// Whether P is a retract of Q.
    RetractOf {
        p: PathBuf,
        q: PathBuf,
    },
    UpDirected {
        file: PathBuf,
    },
}

#[derive(Subcommand)]
pub enum SierpinskiCmd {
    /// Emit a Sierpinski chain document.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "random")]
        mode: GeneratorMode,
    },
    /// Members and covers of the lattice generated by the principal ideals.
    Lattice { file: PathBuf },
    /// Two-element-intersection normal form of a member, or the normalized
    /// pair of an intersection of principal ideals.
    NormalForm {
        file: PathBuf,
        /// Comma separated point labels of a lattice member.
        #[arg(long, conflicts_with = "intersect", required_unless_present = "intersect")]
        member: Option<String>,
        /// Comma separated point labels whose ideals are intersected.
        #[arg(long)]
        intersect: Option<String>,
    },
}

#[derive(Subcommand)]
pub enum ModfinCmd {
    /// X below Y modulo finite.
    Leq { x: String, y: String },
    /// Separator of a countable pregap given by finitely many literals.
    Separate {
        #[arg(long = "A", num_args = 0..)]
        a: Vec<String>,
        #[arg(long = "B", num_args = 0..)]
        b: Vec<String>,
    },
    /// Separator of two disjoint branch families inside the tree.
    Fsigma {
        #[arg(long = "A", num_args = 0..)]
        a: Vec<String>,
        #[arg(long = "B", num_args = 0..)]
        b: Vec<String>,
    },
    /// The pair of node sets attached to one branch.
    Luzin { branch: String },
    /// The set of nodes lying on every branch of a family.
    CheckOp {
        #[arg(long = "D", num_args = 1.., required = true)]
        d: Vec<String>,
    },
}

#[derive(Subcommand)]
pub enum RenderCmd {
    /// Hasse diagram of a poset document, or of the lattice of a Sierpinski document.
    Dot { file: PathBuf },
}

fn init_threads() -> Result<(), Failure> {
    match std::env::var("ORDERGAP_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => {
                ordergap::exec::init_threads(n);
                Ok(())
            }
            _ => Err(Failure::Input(format!(
                "ORDERGAP_THREADS must be a positive integer, got `{v}`"
            ))),
        },
        Err(_) => Ok(()),
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    init_threads()?;
    let o = &cli.opts;
    match &cli.command {
        Command::Poset(c) => commands::poset(c, o),
        Command::Sierpinski(c) => commands::sierpinski(c, o),
        Command::Modfin(c) => commands::modfin(c, o),
        Command::Render(c) => commands::render(c, o),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|r| {
        let body = r.render(cli.opts.format)?;
        Ok((body, r.code))
    });
    match result {
        Ok((body, code)) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(body.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}

//! Thin command-line wrapper over the `braidcell` library.

use clap::{Args, Parser, Subcommand};

use braidcell::cli::{self, OutputFormat, RunConfig};

#[derive(Parser)]
#[command(
    name = "braidcell",
    version,
    about = "Garside normal forms through a categorified cell module"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SystemArgs {
    /// Coxeter system file (JSON-shaped: generators + m entries)
    #[arg(long)]
    system: Option<String>,
    /// Built-in system name: A2..A9, B2..B9, H3, H4, I2:<m>, ~A2
    #[arg(long = "type")]
    system_type: Option<String>,
    /// Base generator of the cell (default: first generator)
    #[arg(long)]
    base: Option<String>,
    /// Cell graph radius (matters for infinite systems)
    #[arg(long, default_value_t = 16)]
    radius: usize,
    /// Permit a base that violates the heavy-pair rule
    #[arg(long = "force-base")]
    force_base: bool,
    /// Allow categorical operations on a force-based graph
    #[arg(long = "override")]
    allow_forced: bool,
    /// Output format: table | text
    #[arg(long, default_value = "table")]
    format: String,
    /// Random seed for sampled runs
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Number of sampled words
    #[arg(long, default_value_t = 300)]
    samples: usize,
    /// Maximum sampled word length
    #[arg(long = "max-len", default_value_t = 10)]
    max_len: usize,
    /// Cap on the number of interned group elements
    #[arg(long, default_value_t = braidcell::coxeter::DEFAULT_ELEMENT_BUDGET)]
    budget: usize,
}

impl SystemArgs {
    fn into_config(self) -> Result<RunConfig, braidcell::Error> {
        Ok(RunConfig {
            system_path: self.system,
            system_type: self.system_type,
            base: self.base,
            radius: self.radius,
            seed: self.seed,
            samples: self.samples,
            max_len: self.max_len,
            budget: self.budget,
            format: self.format.parse::<OutputFormat>()?,
            force_base: self.force_base,
            allow_forced: self.allow_forced,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Garside normal form of a positive braid word
    Nf {
        #[command(flatten)]
        sys: SystemArgs,
        /// Space-separated generator names
        #[arg(long)]
        word: String,
    },
    /// Recover the normal form from the categorical action
    Recover {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        word: String,
        /// Print per-step top degrees and anchor sets
        #[arg(long)]
        trace: bool,
    },
    /// Render dihedral wave frames, or frames of a word on a vertex
    Wave {
        #[command(flatten)]
        sys: SystemArgs,
        /// Dihedral order m (with --k)
        #[arg(long)]
        m: Option<usize>,
        /// Starting vertex index [k] in the dihedral cell
        #[arg(long)]
        k: Option<usize>,
        /// Number of steps to render
        #[arg(long, default_value_t = 7)]
        steps: usize,
        /// Starting vertex (generator word) for the general mode
        #[arg(long)]
        vertex: Option<String>,
        /// Applied word for the general mode
        #[arg(long)]
        word: Option<String>,
    },
    /// Kazhdan-Lusztig polynomials h_{y,w} of one element
    Kl {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        word: String,
    },
    /// Graded hom rank between two indecomposables
    Hom {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Twisted reduced Burau matrix of one braid generator in type A
    Burau {
        /// Number of strands
        #[arg(long)]
        n: usize,
        /// Generator index, 1 <= i <= n-1
        #[arg(long)]
        i: usize,
    },
    /// Compare classes of categorical actions with the Hecke action
    DecatCheck {
        #[command(flatten)]
        sys: SystemArgs,
    },
    /// Randomized cross-checks: Garside report, decat, rewriting oracle
    Fuzz {
        #[command(flatten)]
        sys: SystemArgs,
    },
}

fn run() -> Result<String, braidcell::Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Nf { sys, word } => cli::cmd_nf(&sys.into_config()?, &word),
        Command::Recover { sys, word, trace } => {
            cli::cmd_recover(&sys.into_config()?, &word, trace)
        }
        Command::Wave {
            sys,
            m,
            k,
            steps,
            vertex,
            word,
        } => cli::cmd_wave(
            &sys.into_config()?,
            m,
            k,
            steps,
            vertex.as_deref(),
            word.as_deref(),
        ),
        Command::Kl { sys, word } => cli::cmd_kl(&sys.into_config()?, &word),
        Command::Hom { sys, x, y } => cli::cmd_hom(&sys.into_config()?, &x, &y),
        Command::Burau { n, i } => cli::cmd_burau(n, i),
        Command::DecatCheck { sys } => cli::cmd_decat_check(&sys.into_config()?),
        Command::Fuzz { sys } => cli::cmd_fuzz(&sys.into_config()?),
    }
}

fn main() {
    match run() {
        Ok(output) => {
            print!("{output}");
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(cli::exit_code_for(&err));
        }
    }
}

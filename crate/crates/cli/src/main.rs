use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use freqlab::examples::{Family, GeneratorSpec, DEFAULT_PRECISION_BITS, MIN_SPIKE_C};
use freqlab_cli::commands::{self, LevelMode};
use freqlab_cli::verify::{self, Suite};
use freqlab_cli::{CmdResult, Failure};
use num_bigint::BigInt;

#[derive(Parser)]
#[command(name = "freqlab", version, about = "Discrete maximal averages and frequency functions")]
struct Cli {
    /// Worker threads for scans (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// M f(n), E f(n) and F f(n) at one point, or the bilinear version with --f/--g.
    Eval {
        #[arg(long, conflicts_with_all = ["f", "g"], required_unless_present_all = ["f", "g"])]
        signal: Option<PathBuf>,
        #[arg(long, requires = "g")]
        f: Option<PathBuf>,
        #[arg(long, requires = "f")]
        g: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        n: BigInt,
    },
    /// CSV of n, M f(n), F f(n) over an index range.
    Profile {
        #[arg(long)]
        signal: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        from: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        to: BigInt,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Level-set counts and densities over a grid of N.
    Levelset {
        #[arg(long)]
        signal: PathBuf,
        /// K, S or theta-zero.
        #[arg(long, default_value = "K")]
        mode: LevelMode,
        #[arg(long = "C")]
        c: String,
        #[arg(long, default_value = "1")]
        epsilon: String,
        #[arg(long = "N-grid")]
        n_grid: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Greedy disjoint selection over an interval file.
    Covering {
        #[arg(long)]
        intervals: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a generated example signal.
    Gen {
        /// squares_power, squares_log, stretched_log, spike_pair or composite_jump.
        #[arg(long)]
        family: Family,
        #[arg(long, default_value = "1")]
        epsilon: String,
        #[arg(long, default_value_t = 10)]
        cutoff: u64,
        /// C for spike_pair; lower end of the range for composite_jump.
        #[arg(long = "C", default_value_t = MIN_SPIKE_C)]
        c: u64,
        /// Upper end of the range for composite_jump (defaults to --C).
        #[arg(long = "C-max")]
        c_max: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_PRECISION_BITS)]
        precision: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites.
    Verify {
        /// A suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> CmdResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn run(command: Command) -> CmdResult<()> {
    match command {
        Command::Eval { signal, f, g, n } => {
            let text = match (signal, f, g) {
                (Some(path), _, _) => commands::eval(&commands::load_signal(&path)?, &n),
                (None, Some(f), Some(g)) => {
                    commands::eval_bilinear(&commands::load_signal(&f)?, &commands::load_signal(&g)?, &n)
                }
                _ => return Err(Failure::Usage("give --signal or both --f and --g".into())),
            };
            emit(&text, None)
        }
        Command::Profile { signal, from, to, out } => {
            let f = commands::load_signal(&signal)?;
            emit(&commands::profile(&f, &from, &to)?, out.as_ref())
        }
        Command::Levelset { signal, mode, c, epsilon, n_grid, out } => {
            let f = commands::load_signal(&signal)?;
            let c = commands::parse_rational("C", &c)?;
            let epsilon = commands::parse_rational("epsilon", &epsilon)?;
            let grid = commands::parse_grid(&n_grid)?;
            emit(&commands::levelset(&f, mode, c, epsilon, &grid)?, out.as_ref())
        }
        Command::Covering { intervals, out } => {
            let ivs = commands::load_intervals(&intervals)?;
            match commands::covering(&ivs) {
                Ok(text) => emit(&text, out.as_ref()),
                Err(e) => Err(e),
            }
        }
        Command::Gen { family, epsilon, cutoff, c, c_max, precision, out } => {
            let mut spec = GeneratorSpec::new(family);
            spec.epsilon = commands::parse_rational("epsilon", &epsilon)?;
            spec.precision_bits = precision;
            spec.c = c;
            spec.cutoff = match family {
                Family::CompositeJump => c_max.unwrap_or(c),
                _ => cutoff,
            };
            emit(&commands::gen(&spec)?, out.as_ref())
        }
        Command::Verify { suite, trials, seed } => {
            let suites = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse::<Suite>().map_err(Failure::Usage)?]
            };
            let report = verify::run(&suites, trials, seed)?;
            emit(&report, None)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Assertion(report)) => {
            let _ = std::io::stdout().write_all(report.as_bytes());
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

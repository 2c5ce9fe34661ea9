use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use symspin::config::{RunConfig, SigmaSource};
use symspin::{run, Command};

#[derive(Parser)]
#[command(name = "symspin", version, about = "Exact checks for symplectic spinor operators")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Half the dimension of the symplectic space.
    #[arg(long, global = true, default_value_t = 2)]
    l: usize,
    /// Polynomial degree cap N.
    #[arg(long = "max-deg", global = true, default_value_t = 10)]
    max_deg: u32,
    /// Guard band B; checks use blocks of top degree at most N - B.
    #[arg(long, global = true, default_value_t = 4)]
    buffer: u32,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Suite for `verify`: all, clifford, squares, super-commutators, equivariance, containment.
    #[arg(long, global = true, default_value = "all")]
    suite: String,
    /// zero, random, or a JSON file holding {"sigma": [[...]]}.
    #[arg(long, global = true, default_value = "random")]
    sigma: String,
    /// Connection file for `geometry`.
    #[arg(long, global = true)]
    connection: Option<PathBuf>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Attach wall times to the records.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand, Clone, Copy)]
enum Cmd {
    /// Truncated decomposition, dimension table and triangle adjacency.
    Decompose,
    /// Operator identities on spinor-valued forms.
    Verify,
    /// Curvature sequences built from a Ricci-type tensor.
    Complex,
    /// Checks on polynomial connections.
    Geometry,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("SSL_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let command = match cli.command {
        Cmd::Decompose => Command::Decompose,
        Cmd::Verify => Command::Verify,
        Cmd::Complex => Command::Complex,
        Cmd::Geometry => Command::Geometry,
    };
    let config = RunConfig {
        l: cli.l,
        max_deg: cli.max_deg,
        buffer: cli.buffer,
        seed: cli.seed,
        suite: cli.suite,
        sigma: SigmaSource::parse(&cli.sigma),
        connection: cli.connection,
        out: cli.out,
        timings: cli.timings,
    };
    let report = match run(command, &config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let json = report.to_json();
    match &config.out {
        Some(path) => {
            print!("{}", report.render_table());
            if let Err(e) = std::fs::write(path, &json) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => {
            eprint!("{}", report.render_table());
            let _ = std::io::stdout().write_all(json.as_bytes());
        }
    }
    if report.any_fail() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

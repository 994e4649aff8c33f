use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use finiterm::cli::{
    run_algebraic, run_fuchsian, run_invert_poly, run_polygon, OutputFormat, Report, RunConfig,
    EXIT_ERROR,
};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "finiterm", version, about = "Representability of functions in finite terms: monodromy-based classifiers")]
struct Cli {
    /// Root-finding tolerance.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol_root: f64,
    /// ODE integration tolerance.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol_ode: f64,
    /// Seed for all randomized probes.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Reserved for parallel loop tracking; accepted and currently unused.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the algebraic function defined by f(x, y) = 0.
    Algebraic {
        poly: String,
        #[arg(long, default_value_t = 8)]
        kmax: usize,
    },
    /// Invertibility of a polynomial in z by radicals (and k-radicals).
    InvertPoly {
        poly: String,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Classify a Fuchsian system given as a JSON file.
    Fuchsian {
        file: PathBuf,
        /// Treat the residues as arbitrarily small perturbations.
        #[arg(long)]
        assume_small: bool,
    },
    /// Classify a circular-arc polygon given as a JSON file.
    Polygon { file: PathBuf },
}

fn build_report(cli: &Cli) -> Result<Report, String> {
    let mut cfg = RunConfig::default();
    cfg.tol.root = cli.tol_root;
    cfg.tol.ode = cli.tol_ode;
    cfg.seed = cli.seed;
    cfg.format = match cli.format {
        Format::Text => OutputFormat::Text,
        Format::Json => OutputFormat::Json,
    };
    cfg.threads = cli.threads;
    let read = |path: &PathBuf| {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
    };
    match &cli.command {
        Command::Algebraic { poly, kmax } => {
            cfg.kmax = *kmax;
            let cfg = cfg.validated().map_err(|e| e.to_string())?;
            run_algebraic(poly, &cfg).map_err(|e| e.to_string())
        }
        Command::InvertPoly { poly, k } => {
            let cfg = cfg.validated().map_err(|e| e.to_string())?;
            run_invert_poly(poly, *k, &cfg).map_err(|e| e.to_string())
        }
        Command::Fuchsian { file, assume_small } => {
            cfg.assume_small = *assume_small;
            let cfg = cfg.validated().map_err(|e| e.to_string())?;
            run_fuchsian(&read(file)?, &cfg).map_err(|e| e.to_string())
        }
        Command::Polygon { file } => {
            let cfg = cfg.validated().map_err(|e| e.to_string())?;
            run_polygon(&read(file)?, &cfg).map_err(|e| e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        Format::Text => OutputFormat::Text,
        Format::Json => OutputFormat::Json,
    };
    match build_report(&cli) {
        Ok(report) => {
            print!("{}", report.render(format));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use fourier_submatrix::bounds::BoundReport;
use fourier_submatrix::empirics::{
    empirical_rate_with_budget, rate_grid, write_grid_csv, RationalShape, Region, DEFAULT_MAX_N,
};
use fourier_submatrix::fourier::{singular_spectrum, SubmatrixSpec};
use fourier_submatrix::symmetry::{near_symmetry_map, write_map_csv};
use fourier_submatrix::verify::{all_passed, run_suite, Suite};

/// Condition numbers of contiguous DFT submatrices: exact values, explicit
/// lower bounds, empirical growth rates, and self-check suites.
#[derive(Parser)]
#[command(name = "fsl", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A rational flag value written as "num/den"; decimals are rejected so
/// shape families stay exact.
#[derive(Clone, Copy, Debug)]
struct Rational {
    num: usize,
    den: usize,
}

impl FromStr for Rational {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let (num, den) = s
            .split_once('/')
            .ok_or_else(|| format!("expected a fraction like 1/2, got '{s}'"))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("not a nonnegative integer: '{t}'"))
        };
        let r = Rational { num: parse(num)?, den: parse(den)? };
        if r.den == 0 {
            return Err("zero denominator".to_string());
        }
        Ok(r)
    }
}

#[derive(Args)]
struct Block {
    #[arg(long = "N")]
    n: usize,
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Singular extremes and condition number of one submatrix
    Cond {
        #[command(flatten)]
        block: Block,
        /// First row index (defaults to the centered placement)
        #[arg(long)]
        row_offset: Option<i64>,
        /// First column index (defaults to the centered placement)
        #[arg(long)]
        col_offset: Option<i64>,
    },
    /// All closed-form bounds evaluated against the computed spectrum
    Bounds {
        #[command(flatten)]
        block: Block,
        #[arg(long)]
        json: bool,
    },
    /// Empirical exponential growth rate along one fixed-shape family
    Rate {
        /// p/N as a fraction, e.g. 1/2
        #[arg(long)]
        alpha: Rational,
        /// q/N as a fraction, e.g. 1/4
        #[arg(long)]
        beta: Rational,
        /// log10 of the condition-number cap for the size search
        #[arg(long, default_value_t = 16.0)]
        cap: f64,
        /// Largest matrix size attempted
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Measured-vs-proven rate map over a lattice of shapes, as CSV
    Grid {
        /// Lattice spacing as a fraction, e.g. 1/30
        #[arg(long)]
        spacing: Rational,
        #[arg(long, default_value = "full")]
        region: String,
        #[arg(long)]
        out: PathBuf,
        /// Worker threads (default: all cores; env FSL_THREADS also honored)
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Run a named self-check suite
    Verify {
        /// all | core | kernels | sinc | symmetry | bounds
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
    /// Emit the CSV datasets behind the figures into a directory
    Figure {
        /// nearsymm (condition maps for N = 8, 16, 32) | rates (shape-space grids)
        #[arg(long)]
        which: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        threads: Option<usize>,
        /// Size budget for the rate grids; the published fidelity needs hours
        #[arg(long, default_value_t = 1024)]
        max_n: usize,
    },
}

enum CliError {
    /// Bad arguments -> exit 2, matching clap's own convention.
    Usage(String),
    Runtime(String),
}

impl From<fourier_submatrix::Error> for CliError {
    fn from(e: fourier_submatrix::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

fn usage(msg: String) -> CliError {
    CliError::Usage(msg)
}

fn io_err(e: impl std::fmt::Display) -> CliError {
    CliError::Runtime(e.to_string())
}

fn init_threads(flag: Option<usize>) -> Result<(), CliError> {
    let n = match flag {
        Some(n) => Some(n),
        None => match std::env::var("FSL_THREADS") {
            Ok(v) => {
                Some(v.parse().map_err(|_| usage(format!("bad FSL_THREADS value '{v}'")))?)
            }
            Err(_) => None,
        },
    };
    if let Some(n) = n {
        if n == 0 {
            return Err(usage("thread count must be positive".to_string()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(io_err)?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Cond { block, row_offset, col_offset } => {
            let Block { n, p, q } = block;
            let spec = match (row_offset, col_offset) {
                (None, None) => SubmatrixSpec::centered(n, p, q),
                (r, c) => {
                    let centered = SubmatrixSpec::centered(n, p, q)?;
                    SubmatrixSpec::new(
                        n,
                        p,
                        q,
                        r.unwrap_or(centered.row_offset),
                        c.unwrap_or(centered.col_offset),
                    )
                }
            }?;
            let s = singular_spectrum(&spec);
            println!("sigma_1   = {:.15e}", s.sigma1);
            println!("sigma_min = {:.15e}", s.sigma_min);
            match s.cond.finite() {
                Some(c) => println!("cond      = {c:.15e}"),
                None => println!("cond      = overflow(>1e16)"),
            }
        }
        Command::Bounds { block, json } => {
            let r = BoundReport::compute(block.n, block.p, block.q)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&r).map_err(io_err)?);
            } else {
                print_bound_report(&r);
            }
        }
        Command::Rate { alpha, beta, cap, max_n } => {
            let shape = RationalShape::new(alpha.num, alpha.den, beta.num, beta.den)?;
            let e = empirical_rate_with_budget(&shape, cap, max_n)?;
            println!(
                "shape     alpha = {}/{}, beta = {}/{} (family step {})",
                shape.alpha_num,
                shape.alpha_den,
                shape.beta_num,
                shape.beta_den,
                shape.step()
            );
            println!("N_hi      = {} (ln cond = {:.6})", e.n_hi, e.cond_hi_log);
            println!("N_lo      = {} (ln cond = {:.6})", e.n_lo, e.cond_lo_log);
            println!("rho_emp   = {:.6} +/- {:.4}", e.rho_tilde, e.accuracy_est);
            let rs = fourier_submatrix::bounds::rates(shape.alpha(), shape.beta())?;
            println!("rho_best  = {:.6} (ratio {:.3})", rs.rho_best, e.rho_tilde / rs.rho_best);
        }
        Command::Grid { spacing, region, out, threads, max_n } => {
            init_threads(threads)?;
            if spacing.num != 1 {
                return Err(usage(format!(
                    "spacing must be 1/s, got {}/{}",
                    spacing.num, spacing.den
                )));
            }
            let region = match region.as_str() {
                "full" => Region::Full,
                "corner" => Region::Corner,
                other => {
                    return Err(usage(format!("unknown region '{other}' (expected full|corner)")))
                }
            };
            let cells = rate_grid(spacing.den, region, max_n)?;
            let file = std::fs::File::create(&out).map_err(io_err)?;
            write_grid_csv(&cells, std::io::BufWriter::new(file))?;
            let measured = cells.iter().filter(|c| c.estimate.is_some()).count();
            println!("wrote {} cells ({} measured) to {}", cells.len(), measured, out.display());
        }
        Command::Verify { suite } => {
            let checks = run_suite(suite)?;
            for c in &checks {
                let tag = if c.passed { "pass" } else { "FAIL" };
                println!("[{tag}] {} — {}", c.name, c.detail);
            }
            if !all_passed(&checks) {
                return Ok(1);
            }
        }
        Command::Figure { which, out, threads, max_n } => {
            init_threads(threads)?;
            std::fs::create_dir_all(&out).map_err(io_err)?;
            match which.as_str() {
                "nearsymm" => {
                    for n in [8usize, 16, 32] {
                        let cells = near_symmetry_map(n)?;
                        let path = out.join(format!("cond_map_N{n}.csv"));
                        let file = std::fs::File::create(&path).map_err(io_err)?;
                        write_map_csv(&cells, std::io::BufWriter::new(file))?;
                        println!("wrote {}", path.display());
                    }
                }
                "rates" => {
                    for (region, name) in
                        [(Region::Full, "rate_grid_full.csv"), (Region::Corner, "rate_grid_corner.csv")]
                    {
                        let cells = rate_grid(30, region, max_n)?;
                        let path = out.join(name);
                        let file = std::fs::File::create(&path).map_err(io_err)?;
                        write_grid_csv(&cells, std::io::BufWriter::new(file))?;
                        println!("wrote {}", path.display());
                    }
                }
                other => {
                    return Err(usage(format!("unknown figure '{other}' (expected nearsymm|rates)")))
                }
            }
        }
    }
    Ok(0)
}

fn print_bound_report(r: &BoundReport) {
    let opt = |v: Option<f64>| v.map_or("n/a".to_string(), |x| format!("{x:.6e}"));
    println!("N = {}, p = {}, q = {}", r.n, r.p, r.q);
    println!("sigma_1   = {:.15e}", r.sigma1);
    println!("sigma_min = {:.15e}", r.sigma_min);
    match r.cond_computed.finite() {
        Some(c) => println!("cond      = {c:.15e}"),
        None => println!("cond      = overflow(>1e16)"),
    }
    println!("lower bounds on cond (log10 in brackets):");
    for (name, v, l) in [
        ("gaussian      ", r.lb_gaussian, r.lb_gaussian_log10),
        ("kaiser-bessel ", r.lb_kb, r.lb_kb_log10),
        ("corner        ", r.lb_corner, r.lb_corner_log10),
        ("half-size     ", r.lb_pan, r.lb_pan_log10),
        ("derived       ", r.lb_liliao_derived, r.lb_liliao_derived_log10),
    ] {
        println!("  {name} {} [{}]", opt(v), opt(l));
    }
    println!("upper bounds on sigma_min:");
    println!("  gaussian       {}", opt(r.ub_sigma_min_gaussian));
    println!("  kaiser-bessel  {}", opt(r.ub_sigma_min_kb));
    println!("  corner         {}", opt(r.ub_sigma_min_corner));
    println!("best lower bound = {:.6e} [log10 {:.4}]", r.best_lb, r.best_lb_log10);
}

fn main() -> ExitCode {
    let cli = Cli::parse(); // clap exits with 2 on bad arguments
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {}", msg.replace('\n', " "));
            ExitCode::from(2)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {}", msg.replace('\n', " "));
            ExitCode::from(1)
        }
    }
}

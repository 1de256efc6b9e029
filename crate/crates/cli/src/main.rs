use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use smoothhopf::report::Status;
use smoothhopf_cli::{run_suite, Suite, SuiteConfig};

/// Runs a verification suite and prints its report.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Args {
    /// hopf | lifting | necklace | lattice-va | witt | noghost | all
    suite: String,
    #[arg(long)]
    order: Option<u32>,
    #[arg(long)]
    weight: Option<i64>,
    #[arg(long)]
    window: Option<i64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    degree: Option<usize>,
    /// Comma separated, e.g. `2,3,5`.
    #[arg(long, value_delimiter = ',')]
    primes: Option<Vec<u32>>,
    #[arg(long)]
    lattice: Option<PathBuf>,
    /// Print the JSON report instead of the summary.
    #[arg(long)]
    json: bool,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let suite = match args.suite.parse::<Suite>() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let cfg = SuiteConfig {
        suite: Some(suite),
        order: args.order,
        weight: args.weight,
        window: args.window,
        n: args.n,
        degree: args.degree,
        primes: args.primes,
        lattice: args.lattice,
        cache_dir: args.cache_dir,
    };
    let report = match run_suite(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    if args.json {
        println!("{}", report.to_json());
    } else {
        for c in &report.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            println!("{tag} {}", c.id);
        }
        let failed = report.checks.iter().filter(|c| c.status == Status::Fail).count();
        println!("{}: {} checks, {} failed", report.suite, report.checks.len(), failed);
    }
    ExitCode::from(report.exit_code() as u8)
}

//! Thin command-line front end; all logic lives in the library.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use lantern::cli::{self, RunConfig, Suite, EXIT_CONFIG_ERROR};
use lantern::surface::Theorem;

#[derive(Parser)]
#[command(name = "lantern", version, about = "Verify twist relations and certify \
generator sets for surface mapping classes through their homology action")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one or all verification suites and emit a JSON report.
    Verify {
        /// Surface genus (odd, at least 3)
        #[arg(long, default_value_t = 5)]
        genus: usize,
        /// Number of punctures
        #[arg(long, default_value_t = 5)]
        punctures: usize,
        /// Generating-set shape: t7 (five involutions) or t8 (four)
        #[arg(long, default_value = "t7")]
        theorem: String,
        /// Prime for the finite quotient
        #[arg(long, default_value_t = 2)]
        prime: u64,
        /// Solver seed (defaults to $LANTERN_SEED, then 1)
        #[arg(long)]
        seed: Option<u64>,
        /// Suite: lantern, relations, conditions, quotient, lemma5, sym, all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Write the JSON report here (stdout always gets a summary)
        #[arg(long)]
        output: Option<PathBuf>,
        /// Import a previously exported generator set instead of solving
        #[arg(long)]
        generators_file: Option<PathBuf>,
        /// Export the generator set used by this run
        #[arg(long)]
        emit_generators: Option<PathBuf>,
    },
    /// Check the puncture permutation groups on their own.
    Sym {
        /// Number of punctures
        #[arg(long, default_value_t = 5)]
        punctures: usize,
        /// Write the JSON report here
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    match s.to_ascii_lowercase().as_str() {
        "t7" => Ok(Theorem::T7),
        "t8" => Ok(Theorem::T8),
        other => Err(format!("unknown theorem '{other}'; expected t7 or t8")),
    }
}

fn print_summary(report: &lantern::report::Report) {
    for check in &report.checks {
        let tag = match check.status {
            lantern::verify::CheckStatus::Pass => "PASS",
            lantern::verify::CheckStatus::Fail => "FAIL",
            lantern::verify::CheckStatus::Skipped => "SKIP",
        };
        println!("{tag:4} {:-32} {}", check.name, check.anchor);
    }
    for cert in &report.certificates {
        println!(
            "CERT {:-32} order {} vs target {} -> {} ({} ms)",
            cert.generator_set_id,
            cert.computed_order,
            cert.target_order,
            cert.verdict_label,
            cert.elapsed_ms
        );
    }
    for w in &report.warnings {
        println!("WARN {w}");
    }
    println!("overall: {}", report.overall);
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify {
            genus,
            punctures,
            theorem,
            prime,
            seed,
            suite,
            output,
            generators_file,
            emit_generators,
        } => {
            let theorem = match parse_theorem(&theorem) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_CONFIG_ERROR as u8);
                }
            };
            let suite: Suite = match suite.parse() {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(EXIT_CONFIG_ERROR as u8);
                }
            };
            let config = RunConfig {
                genus,
                punctures,
                theorem,
                prime,
                seed: seed.unwrap_or_else(cli::default_seed),
                suite,
                output,
                generators_file,
                emit_generators,
            };
            cli::run(&config)
        }
        Command::Sym { punctures, output } => cli::run_sym(punctures, output.as_deref()),
    };
    match result {
        Ok((report, code)) => {
            print_summary(&report);
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_CONFIG_ERROR as u8)
        }
    }
}

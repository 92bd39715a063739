use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qzeta_cli::{parse_base, suites, sweep, Config, Suite};
use qzeta_core::zeta::constants;
use qzeta_core::zeta::decimal::{format_enclosure, format_sci, Rounding};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "qzeta", version, about = "Rational approximants to zeta_q(1) and zeta_q(2) for q = 1/p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// One row per n: the integer sequences, residual enclosures and decay exponents.
    Sweep {
        #[arg(long, value_parser = parse_base, value_delimiter = ',', default_value = "2")]
        p: Vec<u64>,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        /// Fixed series depth; chosen per row when absent.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        depth: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite and write a JSON report.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, value_parser = parse_base, value_delimiter = ',', default_value = "2,3")]
        p: Vec<u64>,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(0..))]
        abc_bound: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enclosures of the constants in the decay rates and irrationality measures.
    Constants {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct ConstantEntry {
    name: &'static str,
    lo: String,
    hi: String,
    display: String,
}

fn constants_output(format: Format) -> String {
    let c = constants();
    let entries: Vec<ConstantEntry> = c
        .entries()
        .iter()
        .map(|(name, iv)| ConstantEntry {
            name,
            lo: format_sci(iv.lo(), 20, Rounding::Down),
            hi: format_sci(iv.hi(), 20, Rounding::Up),
            display: format_enclosure(iv, 20),
        })
        .collect();
    match format {
        Format::Json => serde_json::to_string_pretty(&entries).expect("constants serialize") + "\n",
        Format::Csv => {
            let mut s = String::from("name,lo,hi\r\n");
            for e in &entries {
                s.push_str(&format!("{},{},{}\r\n", e.name, e.lo, e.hi));
            }
            s
        }
        Format::Text => entries
            .iter()
            .map(|e| format!("{:<16} {:<28} [{}, {}]\n", e.name, e.display, e.lo, e.hi))
            .collect(),
    }
}

fn sorted_unique(mut ps: Vec<u64>) -> Vec<u64> {
    ps.sort_unstable();
    ps.dedup();
    ps
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sweep { p, n_max, depth, format, out } => {
            sweep::sweep(&sorted_unique(p), n_max, depth).map_err(|e| e.to_string()).and_then(|rows| {
                let text = match format {
                    Format::Csv => sweep::to_csv(&rows),
                    Format::Json => sweep::to_json(&rows) + "\n",
                    Format::Text => sweep::to_text(&rows),
                };
                emit(&text, out.as_ref()).map(|()| true)
            })
        }
        Command::Verify { suite, p, n_max, abc_bound, out } => {
            let report = suites::run(suite, &Config { p: sorted_unique(p), n_max, abc_bound });
            let s = &report.summary;
            eprintln!("{} passed, {} failed, {} not attempted", s.pass, s.fail, s.not_attempted);
            emit(&(report.to_json() + "\n"), out.as_ref()).map(|()| report.passed())
        }
        Command::Constants { format } => emit(&constants_output(format), None).map(|()| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

mod commands;
mod lemmas;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use catalan_cli::report::{Format, Report};
use catalan_core::arith::is_prime_u64;

#[derive(Parser, Debug)]
#[command(name = "catalan", version, about = "Bounded searches and lemma checks around x^m - y^n = 1")]
struct Cli {
    /// Output rendering.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Worker threads for the searches.
    #[arg(long, env = "CATALAN_THREADS", default_value = "1", value_parser = parse_threads, global = true)]
    threads: usize,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Include wall-clock time in the summary (makes output run-dependent).
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solutions of x^2 - d y^2 = 1.
    Pell {
        #[arg(long, value_parser = parse_u64)]
        d: u64,
        /// Number of solutions after the trivial one.
        #[arg(long, default_value = "10", value_parser = parse_u64)]
        count: u64,
    },
    /// x^2 - y^3 = 1 with |x| <= bound.
    Mordell {
        #[arg(long, value_parser = parse_u64)]
        bound: u64,
    },
    /// x^4 - k y^2 = 1 with |x| <= bound, k in {2, 3}.
    Quartic {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(["2", "3"]))]
        k: String,
        #[arg(long, value_parser = parse_u64)]
        bound: u64,
    },
    /// x^3 + y^3 = 2z^3 in a box, and x^3 - 2y^3 = ±1.
    Wakulicz {
        #[arg(long, value_parser = parse_u64)]
        bound: u64,
        /// Bound on |x| for x^3 - 2y^3 = ±1.
        #[arg(long, default_value = "1000", value_parser = parse_u64)]
        cubic_bound: u64,
    },
    /// x^2 - y^q = 1 with |x| <= bound, q a prime >= 5.
    ChaoKo {
        #[arg(long, value_parser = parse_prime)]
        q: u64,
        #[arg(long, value_parser = parse_u64)]
        bound: u64,
    },
    /// x^m - y^2 = 1 with |x| <= bound, m odd >= 3.
    Lebesgue {
        #[arg(long, value_parser = parse_odd)]
        m: u64,
        #[arg(long, value_parser = parse_u64)]
        bound: u64,
    },
    /// x^p - y^q = 1 with |x|, |y| <= bound, primes p > q > 2.
    CatalanPq {
        #[arg(long, value_parser = parse_prime)]
        p: u64,
        #[arg(long, value_parser = parse_prime)]
        q: u64,
        #[arg(long, value_parser = parse_u64)]
        bound: u64,
    },
    /// Consecutive perfect powers up to max.
    ConsecutivePowers {
        #[arg(long, value_parser = parse_u64)]
        max: u64,
    },
    /// Double Wieferich prime pairs up to limit.
    Wieferich {
        #[arg(long, value_parser = parse_u64)]
        limit: u64,
    },
    /// Replay of the final deduction for odd primes q <= q-limit.
    Deduction {
        #[arg(long, value_parser = parse_u64)]
        q_limit: u64,
    },
    /// Taylor coefficients of ((1 + X)^m - X^m)^(1/n) up to degree l.
    Fmn {
        #[arg(long, value_parser = parse_u64)]
        m: u64,
        #[arg(long, value_parser = parse_odd)]
        n: u64,
        #[arg(long, value_parser = parse_u64)]
        l: u64,
    },
    /// Irreducible factorization of re + im·i.
    FactorGaussian {
        #[arg(long, value_parser = parse_i64, allow_hyphen_values = true)]
        re: i64,
        #[arg(long, value_parser = parse_i64, allow_hyphen_values = true)]
        im: i64,
    },
    /// Check one lemma on its worked instances.
    VerifyLemma {
        #[arg(value_enum)]
        name: lemmas::Lemma,
    },
}

/// Digits, optionally grouped with single underscores: `1_000_000`.
fn strip_underscores(s: &str) -> Result<String, String> {
    let body = s.strip_prefix('-').unwrap_or(s);
    let well_formed =
        !body.is_empty() && body.split('_').all(|g| !g.is_empty() && g.bytes().all(|b| b.is_ascii_digit()));
    if !well_formed {
        return Err(format!("`{s}` is not an integer (digits, optionally grouped by `_`)"));
    }
    Ok(s.replace('_', ""))
}

fn parse_u64(s: &str) -> Result<u64, String> {
    strip_underscores(s)?.parse::<u64>().map_err(|e| format!("`{s}`: {e}"))
}

fn parse_i64(s: &str) -> Result<i64, String> {
    strip_underscores(s)?.parse::<i64>().map_err(|e| format!("`{s}`: {e}"))
}

fn parse_prime(s: &str) -> Result<u64, String> {
    let v = parse_u64(s)?;
    if is_prime_u64(v) {
        Ok(v)
    } else {
        Err(format!("{v} is not prime"))
    }
}

fn parse_odd(s: &str) -> Result<u64, String> {
    let v = parse_u64(s)?;
    if v % 2 == 1 {
        Ok(v)
    } else {
        Err(format!("{v} is not odd"))
    }
}

fn parse_threads(s: &str) -> Result<usize, String> {
    match parse_u64(s)? {
        0 => Err("thread count must be at least 1".into()),
        n => usize::try_from(n).map_err(|e| e.to_string()),
    }
}

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start {} threads: {e}", cli.threads);
            return ExitCode::from(EXIT_FAILED);
        }
    };
    let start = Instant::now();
    let outcome = pool.install(|| commands::run(&cli.command));
    let mut report: Report = match outcome {
        Ok(r) => r,
        Err(commands::CliError::Usage(msg)) => {
            eprintln!("error: {msg}\n\nFor more information, try '--help'.");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(commands::CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_FAILED);
        }
    };
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    let text = report.render(cli.format);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(EXIT_FAILED);
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILED)
    }
}

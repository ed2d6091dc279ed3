use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use clap::Parser;
use dickson_chern::suite::{self, Format, SuiteConfig, SuiteName, UsageError};

/// Run a named verification suite and print its report.
#[derive(Parser, Debug)]
#[command(name = "verify", version)]
struct Args {
    /// dickson, rep, steenrod, chern, vistoli, signs, relations or all
    #[arg(long)]
    suite: SuiteName,
    #[arg(long, default_value_t = 3)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    l: usize,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// text or json
    #[arg(long, default_value = "text")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Worker threads, or "auto".
    #[arg(long, default_value = "auto", value_parser = parse_threads)]
    threads: Threads,
    /// Treat skipped checks as failures.
    #[arg(long)]
    strict: bool,
    /// Keep measured elapsed_ms instead of zeroing them.
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, Debug)]
struct Threads(Option<usize>);

fn parse_threads(s: &str) -> Result<Threads, UsageError> {
    if s == "auto" {
        return Ok(Threads(None));
    }
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(Threads(Some(n))),
        _ => Err(UsageError(format!(
            "expected a positive integer or \"auto\", got {s:?}"
        ))),
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(2);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    let config = SuiteConfig {
        suite: args.suite,
        p: args.p,
        l: args.l,
        n: args.n,
        trials: args.trials,
        seed: args.seed,
        format: args.format,
        threads: args.threads.0,
        strict: args.strict,
        timings: args.timings,
    };
    let report = match suite::run(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &args.out {
        Some(path) => std::fs::write(path, suite::emit(&report, config.format, false)),
        None => {
            let color = std::io::stdout().is_terminal() && std::env::var_os("NO_COLOR").is_none();
            std::io::stdout().write_all(suite::emit(&report, config.format, color).as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(suite::exit_code(&report) as u8)
}

//! Named verification suites and the configuration the `verify` binary builds.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::chern::{verify_chern, verify_vistoli, ChernContext};
use crate::cyclo::verify_representation;
use crate::dickson::{verify_dickson, DicksonContext};
use crate::galois::field::check_prime;
use crate::relations::{verify_relations_suite, verify_signs, ALLOW_P5};
use crate::report::{Outcome, ReportBuilder, VerificationReport};
use crate::steenrod::verify_steenrod;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuiteName {
    Dickson,
    Rep,
    Steenrod,
    Chern,
    Vistoli,
    Signs,
    Relations,
    All,
}

impl SuiteName {
    pub const SINGLE: [SuiteName; 7] = [
        SuiteName::Dickson,
        SuiteName::Rep,
        SuiteName::Steenrod,
        SuiteName::Chern,
        SuiteName::Vistoli,
        SuiteName::Signs,
        SuiteName::Relations,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Dickson => "dickson",
            SuiteName::Rep => "rep",
            SuiteName::Steenrod => "steenrod",
            SuiteName::Chern => "chern",
            SuiteName::Vistoli => "vistoli",
            SuiteName::Signs => "signs",
            SuiteName::Relations => "relations",
            SuiteName::All => "all",
        }
    }

    /// Suites defined only for odd primes.
    pub fn needs_odd_prime(self) -> bool {
        !matches!(self, SuiteName::Dickson | SuiteName::Signs | SuiteName::All)
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Self, UsageError> {
        SuiteName::SINGLE
            .iter()
            .chain(&[SuiteName::All])
            .find(|n| n.as_str() == s)
            .copied()
            .ok_or_else(|| UsageError(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Self, UsageError> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(UsageError(format!("unknown format {s:?}"))),
        }
    }
}

/// Invalid configuration; the binary exits with status 2.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: SuiteName,
    pub p: u64,
    pub l: usize,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub format: Format,
    /// Worker threads; `None` lets rayon decide.
    pub threads: Option<usize>,
    pub strict: bool,
    /// Keep measured `elapsed_ms`; otherwise they are zeroed for byte-stable output.
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: SuiteName::All,
            p: 3,
            l: 1,
            n: 2,
            trials: 20,
            seed: 0,
            format: Format::Text,
            threads: None,
            strict: false,
            timings: false,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), UsageError> {
        check_prime(self.p).map_err(|e| UsageError(format!("--p: {e}")))?;
        if self.p == 2 && self.suite.needs_odd_prime() {
            return Err(UsageError(format!("suite {} needs an odd prime", self.suite)));
        }
        if !(1..=2).contains(&self.l) {
            return Err(UsageError(format!("--l must be 1 or 2, got {}", self.l)));
        }
        if !(1..=4).contains(&self.n) {
            return Err(UsageError(format!("--n must be in 1..=4, got {}", self.n)));
        }
        if self.trials == 0 {
            return Err(UsageError("--trials must be positive".into()));
        }
        if self.threads == Some(0) {
            return Err(UsageError("--threads must be positive".into()));
        }
        Ok(())
    }

    /// Suites `all` expands to for this prime.
    pub fn expanded(&self) -> Vec<SuiteName> {
        match self.suite {
            SuiteName::All => SuiteName::SINGLE
                .into_iter()
                .filter(|s| self.p != 2 || !s.needs_odd_prime())
                .collect(),
            single => vec![single],
        }
    }
}

fn run_single(suite: SuiteName, config: &SuiteConfig) -> VerificationReport {
    let (p, l) = (config.p, config.l);
    let setup_failure = |e: crate::Error| {
        let mut b = ReportBuilder::new(suite.as_str(), config.seed);
        b.record("setup", Outcome::from(e), 0);
        b.finish()
    };
    match suite {
        SuiteName::Dickson => match DicksonContext::new(p, config.n) {
            Ok(ctx) => verify_dickson(&ctx, config.trials, config.seed),
            Err(e) => setup_failure(e),
        },
        SuiteName::Rep => verify_representation(p as u32, l),
        SuiteName::Steenrod => verify_steenrod(p, l, config.trials, config.seed),
        SuiteName::Chern => match ChernContext::new(p, l) {
            Ok(ctx) => verify_chern(&ctx),
            Err(e) => setup_failure(e),
        },
        SuiteName::Vistoli => verify_vistoli(p),
        SuiteName::Signs => verify_signs(),
        SuiteName::Relations => verify_relations_suite(p, ALLOW_P5),
        SuiteName::All => unreachable!("expanded before dispatch"),
    }
}

/// Runs the configured suite(s); suites execute concurrently on `threads`
/// workers and are reported in a fixed order.
pub fn run(config: &SuiteConfig) -> Result<VerificationReport, UsageError> {
    config.validate()?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = config.threads {
        pool = pool.num_threads(t);
    }
    let pool = pool.build().map_err(|e| UsageError(format!("thread pool: {e}")))?;
    let suites = config.expanded();
    let reports: Vec<VerificationReport> = pool.install(|| suites.par_iter().map(|&s| run_single(s, config)).collect());

    let mut report = if config.suite == SuiteName::All {
        let mut b = ReportBuilder::new("all", config.seed)
            .param("p", config.p)
            .param("l", config.l as u64)
            .param("n", config.n as u64)
            .param("trials", config.trials as u64);
        for (suite, sub) in suites.iter().zip(reports) {
            b.absorb(suite.as_str(), sub);
        }
        b.finish()
    } else {
        let mut r = reports.into_iter().next().expect("one suite");
        r.seed = config.seed;
        r
    };
    if !config.timings {
        report = report.without_timings();
    }
    if config.strict {
        report = report.strict();
    }
    Ok(report)
}

/// Serializes a report; `color` only affects the text format.
pub fn emit(report: &VerificationReport, format: Format, color: bool) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(color),
    }
}

/// 0 when the report passed, 1 otherwise.
pub fn exit_code(report: &VerificationReport) -> i32 {
    if report.passed() {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!("vistoli".parse::<SuiteName>(), Ok(SuiteName::Vistoli));
        assert!("bogus".parse::<SuiteName>().is_err());
        assert_eq!("json".parse::<Format>(), Ok(Format::Json));
    }

    #[test]
    fn validation() {
        let base = SuiteConfig::default();
        assert!(base.validate().is_ok());
        let bad = |f: fn(&mut SuiteConfig)| {
            let mut c = base.clone();
            f(&mut c);
            c.validate().is_err()
        };
        assert!(bad(|c| c.p = 4));
        assert!(bad(|c| {
            c.p = 2;
            c.suite = SuiteName::Chern
        }));
        assert!(bad(|c| c.l = 3));
        assert!(bad(|c| c.n = 0));
        assert!(bad(|c| c.trials = 0));
        assert!(bad(|c| c.threads = Some(0)));
        assert!(!bad(|c| {
            c.p = 2;
            c.suite = SuiteName::Signs
        }));
    }

    #[test]
    fn all_at_two_runs_only_even_friendly_suites() {
        let config = SuiteConfig {
            p: 2,
            ..SuiteConfig::default()
        };
        assert_eq!(config.expanded(), vec![SuiteName::Dickson, SuiteName::Signs]);
        let report = run(&config).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.checks.iter().all(|c| c.elapsed_ms == 0));
    }

    #[test]
    fn single_suite_report_carries_config_seed() {
        let config = SuiteConfig {
            suite: SuiteName::Signs,
            seed: 9,
            format: Format::Json,
            ..SuiteConfig::default()
        };
        let report = run(&config).unwrap();
        assert_eq!(report.seed, 9);
        assert_eq!(exit_code(&report), 0);
        assert!(emit(&report, Format::Json, true).starts_with("{\n  \"checks\""));
    }
}

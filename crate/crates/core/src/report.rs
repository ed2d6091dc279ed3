//! Structured outcome of a verification suite.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;
use crate::galois::Poly;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// How many differing terms a failed polynomial comparison reports.
pub const DIFF_TERMS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Overall {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub overall: Overall,
    pub seed: u64,
    pub version: String,
}

/// Result of a single check before it is timed and recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass(String),
    Fail(String),
    Skipped(String),
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome::Pass(String::new())
    }

    pub fn from_bool(ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Outcome::Pass(detail.into())
        } else {
            Outcome::Fail(detail.into())
        }
    }

    /// Exact polynomial equality, with the first differing terms on failure.
    pub fn equal(lhs: &Poly, rhs: &Poly) -> Self {
        if lhs == rhs {
            Outcome::Pass(format!("{} terms", lhs.len()))
        } else if lhs.ring() != rhs.ring() {
            Outcome::Fail("operands live in different rings".into())
        } else {
            Outcome::Fail(format!("differs at {}", lhs.diff_terms(rhs, DIFF_TERMS).join("; ")))
        }
    }

    /// Folds a list of sub-outcomes: any failure fails, otherwise any skip skips.
    pub fn all(outcomes: impl IntoIterator<Item = (String, Outcome)>) -> Self {
        let mut passed = 0;
        let mut skipped = None;
        for (label, o) in outcomes {
            match o {
                Outcome::Pass(_) => passed += 1,
                Outcome::Fail(d) => return Outcome::Fail(format!("{label}: {d}")),
                Outcome::Skipped(d) => skipped = Some(format!("{label}: {d}")),
            }
        }
        match skipped {
            Some(d) => Outcome::Skipped(d),
            None => Outcome::Pass(format!("{passed} cases")),
        }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeGuard(reason) => Outcome::Skipped(format!("size guard: {reason}")),
            other => Outcome::Fail(other.to_string()),
        }
    }
}

impl<E: Into<Outcome>> From<Result<Outcome, E>> for Outcome {
    fn from(r: Result<Outcome, E>) -> Self {
        r.unwrap_or_else(Into::into)
    }
}

/// Accumulates timed checks into a [`VerificationReport`].
#[derive(Debug)]
pub struct ReportBuilder {
    suite: String,
    params: BTreeMap<String, Value>,
    checks: Vec<Check>,
    seed: u64,
}

impl ReportBuilder {
    pub fn new(suite: &str, seed: u64) -> Self {
        ReportBuilder {
            suite: suite.to_string(),
            params: BTreeMap::new(),
            checks: Vec::new(),
            seed,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    /// Runs `f`, timing it, and records the outcome under `name`.
    pub fn check<O: Into<Outcome>>(&mut self, name: impl Into<String>, f: impl FnOnce() -> O) -> &mut Self {
        let start = Instant::now();
        let outcome = f().into();
        let elapsed_ms = start.elapsed().as_millis() as u64;
        self.record(name, outcome, elapsed_ms)
    }

    pub fn record(&mut self, name: impl Into<String>, outcome: Outcome, elapsed_ms: u64) -> &mut Self {
        let (status, detail) = match outcome {
            Outcome::Pass(d) => (CheckStatus::Pass, d),
            Outcome::Fail(d) => (CheckStatus::Fail, d),
            Outcome::Skipped(d) => (CheckStatus::Skipped, d),
        };
        self.checks.push(Check {
            name: name.into(),
            status,
            detail,
            elapsed_ms,
        });
        self
    }

    /// Appends the checks of a finished sub-report, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, sub: VerificationReport) -> &mut Self {
        for mut c in sub.checks {
            c.name = format!("{prefix}: {}", c.name);
            self.checks.push(c);
        }
        self
    }

    pub fn finish(self) -> VerificationReport {
        let overall = if self.checks.iter().any(|c| c.status == CheckStatus::Fail) {
            Overall::Fail
        } else {
            Overall::Pass
        };
        VerificationReport {
            suite: self.suite,
            params: self.params,
            checks: self.checks,
            overall,
            seed: self.seed,
            version: VERSION.to_string(),
        }
    }
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.overall == Overall::Pass
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// Zeroes every `elapsed_ms`, leaving a report that depends only on its inputs.
    pub fn without_timings(mut self) -> Self {
        for c in &mut self.checks {
            c.elapsed_ms = 0;
        }
        self
    }

    /// Turns skipped checks into failures and recomputes the overall status.
    pub fn strict(mut self) -> Self {
        for c in &mut self.checks {
            if c.status == CheckStatus::Skipped {
                c.status = CheckStatus::Fail;
                c.detail = format!("strict mode: {}", c.detail);
            }
        }
        if self.checks.iter().any(|c| c.status == CheckStatus::Fail) {
            self.overall = Overall::Fail;
        }
        self
    }

    /// Pretty JSON with sorted keys, two-space indent and a trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Human-readable table; `color` adds ANSI status colors.
    pub fn to_text(&self, color: bool) -> String {
        let mut out = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out.push_str(&format!(
            "suite {} ({}) seed={} version={}\n",
            self.suite,
            params.join(" "),
            self.seed,
            self.version
        ));
        let width = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(0);
        for c in &self.checks {
            let label = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "SKIP",
            };
            let label = if color {
                let code = match c.status {
                    CheckStatus::Pass => 32,
                    CheckStatus::Fail => 31,
                    CheckStatus::Skipped => 33,
                };
                format!("\x1b[{code}m{label}\x1b[0m")
            } else {
                label.to_string()
            };
            let pad = " ".repeat(width - c.name.chars().count());
            out.push_str(&format!(
                "  {label}  {}{pad}  {:>7} ms  {}\n",
                c.name, c.elapsed_ms, c.detail
            ));
        }
        out.push_str(&format!("overall: {}\n", if self.passed() { "pass" } else { "fail" }));
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::PolyRing;

    fn sample() -> VerificationReport {
        let mut b = ReportBuilder::new("demo", 42).param("p", 3).param("l", 1);
        b.check("ok", Outcome::pass);
        b.check("skipped", || Outcome::from(Error::SizeGuard("too big".into())));
        b.finish()
    }

    #[test]
    fn overall_ignores_skips_unless_strict() {
        let r = sample();
        assert!(r.passed());
        assert_eq!(r.count(CheckStatus::Skipped), 1);
        assert!(!r.clone().strict().passed());
    }

    #[test]
    fn json_is_sorted_and_round_trips() {
        let r = sample().without_timings();
        let text = r.to_json();
        assert!(text.ends_with("}\n"));
        let keys: Vec<usize> = [
            "\"checks\"",
            "\"overall\"",
            "\"params\"",
            "\"seed\"",
            "\"suite\"",
            "\"version\"",
        ]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert!(text.contains("\n  \"checks\": ["));
        assert_eq!(VerificationReport::from_json(&text).unwrap(), r);
    }

    #[test]
    fn failed_equality_names_differing_monomials() {
        let ring = PolyRing::numbered(3, "x", 2).unwrap();
        let a = &ring.var(0).pow(2) + &ring.var(1);
        let b = &ring.var(0).pow(2) + &ring.var(1).scale(2);
        match Outcome::equal(&a, &b) {
            Outcome::Fail(d) => assert!(d.contains("x2: 1 vs 2"), "{d}"),
            other => panic!("expected failure, got {other:?}"),
        }
    }
}

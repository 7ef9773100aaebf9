//! Exhaustive verification driver.
//!
//! A [`Suite`] turns `(n, r)` into an indexed [`Checker`]; the driver splits
//! the index range into fixed-size shards, runs them on a rayon pool and
//! merges shard results in index order, so the report does not depend on
//! the number of workers.

mod suites;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub use suites::suites;

/// Indices per shard. Fixed so that shard boundaries never depend on the
/// worker count.
pub const SHARD_SIZE: u64 = 256;

/// Result of checking one index (or a suite-wide property).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Check {
    /// Number of individual identities checked.
    pub checks: u64,
    /// Description of the first identity that failed.
    pub failure: Option<String>,
}

impl Check {
    pub fn pass(checks: u64) -> Self {
        Check {
            checks,
            failure: None,
        }
    }

    pub fn fail(checks: u64, detail: impl Into<String>) -> Self {
        Check {
            checks,
            failure: Some(detail.into()),
        }
    }

    /// Records one identity; keeps the first failure.
    pub fn expect(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }
}

/// The prepared domain of one suite at fixed `(n, r)`.
pub trait Checker: Sync {
    /// Number of indices in the domain.
    fn len(&self) -> u64;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Human-readable input at `index` (a window or a rendered tableau).
    fn describe(&self, index: u64) -> String;

    fn check(&self, index: u64) -> Check;

    /// Properties of the whole domain, checked once after the sweep.
    fn global(&self) -> Check {
        Check::default()
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    /// Whether the suite depends on a finite rank.
    fn ranked(&self) -> bool {
        true
    }

    /// Largest `n` run without an explicit override.
    fn default_max_n(&self) -> usize;

    fn prepare(&self, n: usize, r: usize) -> Result<Box<dyn Checker>>;
}

pub fn suite(name: &str) -> Result<Box<dyn Suite>> {
    suites()
        .into_iter()
        .find(|s| s.name() == name)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

pub fn suite_names() -> Vec<&'static str> {
    suites().iter().map(|s| s.name()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub suite: String,
    pub n: usize,
    /// Ranks to sweep; empty means the default `[0]` for ranked suites.
    pub ranks: Vec<usize>,
    pub jobs: usize,
    /// Half-open index range restricting every sweep.
    pub shard: Option<(u64, u64)>,
    /// Overrides the suite's default maximum `n`.
    pub max_n: Option<usize>,
    pub max_rank: usize,
    /// Include wall-clock time in the report.
    pub timing: bool,
}

pub const DEFAULT_MAX_RANK: usize = 3;

impl RunConfig {
    pub fn new(suite: &str, n: usize) -> Self {
        RunConfig {
            suite: suite.to_string(),
            n,
            ranks: Vec::new(),
            jobs: default_jobs(),
            shard: None,
            max_n: None,
            max_rank: DEFAULT_MAX_RANK,
            timing: false,
        }
    }
}

/// Worker count from `DOMINO_RSK_JOBS`, else the available parallelism.
pub fn default_jobs() -> usize {
    std::env::var("DOMINO_RSK_JOBS")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&j| j >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub index: u64,
    pub input: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    pub domain: u64,
    pub swept: (u64, u64),
    /// Indices swept, and how many of them passed every identity.
    pub cases: u64,
    pub cases_passed: u64,
    pub checks: u64,
    pub failures: u64,
    pub first_counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n: usize,
    pub results: Vec<RankReport>,
    pub cases: u64,
    pub cases_passed: u64,
    pub checks: u64,
    pub failures: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn first_counterexample(&self) -> Option<&Counterexample> {
        self.results
            .iter()
            .find_map(|r| r.first_counterexample.as_ref())
    }
}

/// Partial result over a contiguous index range.
#[derive(Clone, Debug, Default)]
struct Tally {
    checks: u64,
    failures: u64,
    first: Option<(u64, String)>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.failures += other.failures;
        self.first = match (self.first, other.first) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }
}

fn sweep(checker: &dyn Checker, start: u64, end: u64) -> Tally {
    let shards: Vec<(u64, u64)> = (start..end)
        .step_by(SHARD_SIZE as usize)
        .map(|s| (s, (s + SHARD_SIZE).min(end)))
        .collect();
    shards
        .par_iter()
        .map(|&(s, e)| {
            let mut tally = Tally::default();
            for i in s..e {
                let c = checker.check(i);
                tally.checks += c.checks;
                if let Some(detail) = c.failure {
                    tally.failures += 1;
                    if tally.first.is_none() {
                        tally.first = Some((i, detail));
                    }
                }
            }
            tally
        })
        .reduce(Tally::default, Tally::merge)
}

/// Checks the budget and runs the configured suite.
pub fn run(config: &RunConfig) -> Result<VerificationReport> {
    run_suite(suite(&config.suite)?.as_ref(), config)
}

/// Runs `suite`, which need not be registered.
pub fn run_suite(suite: &dyn Suite, config: &RunConfig) -> Result<VerificationReport> {
    let max_n = config.max_n.unwrap_or(suite.default_max_n());
    if config.n > max_n {
        return Err(Error::BudgetExceeded(format!(
            "suite {} is limited to n <= {max_n} (requested {}); raise the limit explicitly",
            suite.name(),
            config.n
        )));
    }
    if config.jobs == 0 {
        return Err(Error::PreconditionViolated(
            "worker count must be at least 1".into(),
        ));
    }
    let ranks: Vec<Option<usize>> = if !suite.ranked() {
        vec![None]
    } else if config.ranks.is_empty() {
        vec![Some(0)]
    } else {
        config.ranks.iter().copied().map(Some).collect()
    };
    if let Some(&Some(r)) = ranks
        .iter()
        .find(|r| r.is_some_and(|r| r > config.max_rank))
    {
        return Err(Error::BudgetExceeded(format!(
            "rank {r} exceeds the limit {}; raise the limit explicitly",
            config.max_rank
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::PreconditionViolated(e.to_string()))?;
    let started = Instant::now();
    let mut results = Vec::new();
    for rank in ranks {
        let checker = suite.prepare(config.n, rank.unwrap_or(0))?;
        let len = checker.len();
        let (start, end) = match config.shard {
            Some((s, e)) if s <= e && e <= len => (s, e),
            Some((s, e)) => {
                return Err(Error::PreconditionViolated(format!(
                    "shard {s}..{e} is not inside the domain 0..{len}"
                )))
            }
            None => (0, len),
        };
        let mut tally = pool.install(|| sweep(checker.as_ref(), start, end));
        let failed_cases = tally.failures;
        if config.shard.is_none() {
            let g = checker.global();
            tally.checks += g.checks;
            if let Some(detail) = g.failure {
                tally.failures += 1;
                tally.first.get_or_insert((len, detail));
            }
        }
        results.push(RankReport {
            rank,
            domain: len,
            swept: (start, end),
            cases: end - start,
            cases_passed: end - start - failed_cases,
            checks: tally.checks,
            failures: tally.failures,
            first_counterexample: tally.first.map(|(index, detail)| Counterexample {
                index,
                input: if index < len {
                    checker.describe(index)
                } else {
                    "(whole domain)".into()
                },
                detail,
            }),
        });
    }
    let cases = results.iter().map(|r| r.cases).sum();
    let cases_passed = results.iter().map(|r| r.cases_passed).sum();
    let checks = results.iter().map(|r| r.checks).sum();
    let failures = results.iter().map(|r| r.failures).sum();
    Ok(VerificationReport {
        suite: suite.name().to_string(),
        n: config.n,
        results,
        cases,
        cases_passed,
        checks,
        failures,
        passed: failures == 0,
        elapsed_ms: config.timing.then(|| started.elapsed().as_millis() as u64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert_eq!(
            run(&RunConfig::new("nope", 2)).unwrap_err(),
            Error::UnknownSuite("nope".into())
        );
    }

    #[test]
    fn budget_refusal() {
        let err = run(&RunConfig::new("main", 9)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded(_)));
        let mut c = RunConfig::new("main", 2);
        c.ranks = vec![7];
        assert!(matches!(run(&c).unwrap_err(), Error::BudgetExceeded(_)));
    }

    #[test]
    fn shard_outside_domain() {
        let mut c = RunConfig::new("main", 2);
        c.shard = Some((0, 9));
        assert!(matches!(
            run(&c).unwrap_err(),
            Error::PreconditionViolated(_)
        ));
    }

    #[test]
    fn every_suite_passes_small() {
        for name in suite_names() {
            let mut c = RunConfig::new(name, 3);
            c.ranks = vec![0, 1];
            c.jobs = 2;
            let report = run(&c).unwrap();
            assert!(report.passed, "{name}: {:?}", report.first_counterexample());
            assert!(report.checks > 0, "{name}");
        }
    }
}

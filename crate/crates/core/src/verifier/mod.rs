//! Exhaustive desk-scale verification sweeps.
//!
//! Each suite walks a parameter range, evaluates every identity it owns at
//! every qualifying point, and returns a [`SweepReport`]: how many checks
//! ran, how many parameter combinations were skipped by preconditions, and a
//! [`Failure`] record (with full reproduction parameters) for every check
//! that did not hold. Failures are data, not panics; sweeps never abort
//! early.
//!
//! Reports are canonically ordered (ascending parameter order, fixed suite
//! order for aggregates) regardless of the worker count, so serialized
//! reports are byte-identical across parallelism settings apart from the
//! timing field. Every suite also audits itself: the number of checks run
//! must match an independently computed count, otherwise the report gains a
//! `harness/audit` failure.

mod suites;

pub use suites::{
    verify_alpha_beta, verify_crt_structure, verify_gamma, verify_jacobi_generalization,
    verify_quadratic_reciprocity, verify_reciprocity_identity, verify_supplements,
    verify_zolotarev_lemma,
};

use std::collections::BTreeMap;
use std::fmt;
use std::io;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Gamma,
    AlphaBeta,
    ReciprocityIdentity,
    ZolotarevLemma,
    QuadraticReciprocity,
    Supplements,
    JacobiGeneralization,
    CrtStructure,
    All,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Gamma => "gamma",
            Suite::AlphaBeta => "alpha_beta",
            Suite::ReciprocityIdentity => "reciprocity_identity",
            Suite::ZolotarevLemma => "zolotarev_lemma",
            Suite::QuadraticReciprocity => "quadratic_reciprocity",
            Suite::Supplements => "supplements",
            Suite::JacobiGeneralization => "jacobi_generalization",
            Suite::CrtStructure => "crt_structure",
            Suite::All => "all",
        }
    }

    /// The individual suites in canonical execution order.
    pub fn individual() -> [Suite; 8] {
        [
            Suite::Gamma,
            Suite::AlphaBeta,
            Suite::ReciprocityIdentity,
            Suite::ZolotarevLemma,
            Suite::QuadraticReciprocity,
            Suite::Supplements,
            Suite::JacobiGeneralization,
            Suite::CrtStructure,
        ]
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Invalid sweep configuration.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("sweep bound {name} must be at least 1, got {value}")]
    BoundTooSmall { name: &'static str, value: u64 },
    #[error("sweep bound {name} = {value} exceeds the dense-grid capacity of {max} cells")]
    BoundTooLarge {
        name: &'static str,
        value: u64,
        max: usize,
    },
}

/// Parameters for a verification sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub suite: Suite,
    /// Row-dimension bound for the grid suites.
    pub max_m: u64,
    /// Column-dimension / odd-modulus bound.
    pub max_n: u64,
    /// Prime bound for the Legendre-symbol suites.
    pub max_p: u64,
    /// Worker count hint: 1 runs sequentially, 0 uses all cores.
    pub parallelism: usize,
    /// Reserved for randomized sub-checks; the shipped suites are exhaustive
    /// and deterministic, so the seed only documents the run.
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            suite: Suite::All,
            max_m: 31,
            max_n: 31,
            max_p: 199,
            parallelism: 1,
            seed: 0,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        for (name, value) in [
            ("max_m", self.max_m),
            ("max_n", self.max_n),
            ("max_p", self.max_p),
        ] {
            if value < 1 {
                return Err(ConfigError::BoundTooSmall { name, value });
            }
            if value > crate::deals::MAX_CELLS as u64 {
                return Err(ConfigError::BoundTooLarge {
                    name,
                    value,
                    max: crate::deals::MAX_CELLS,
                });
            }
        }
        Ok(())
    }
}

/// One failed check, carrying everything needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    /// Which identity failed, as `suite/check`.
    pub check: String,
    /// Reproduction parameters, canonically named.
    pub parameters: BTreeMap<String, i64>,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    pub fn new(
        check: &str,
        parameters: &[(&str, i64)],
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Failure {
        Failure {
            check: check.to_string(),
            parameters: parameters
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

/// Structured record of one verification sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub suite: Suite,
    /// The bounds the sweep ran with.
    pub ranges: BTreeMap<String, u64>,
    /// Identity evaluations performed.
    pub checks_run: u64,
    /// Parameter combinations excluded by preconditions (non-coprime pairs,
    /// even values, non-primes).
    pub skipped: u64,
    /// True when the ranges produced no checks at all.
    pub degenerate: bool,
    pub failures: Vec<Failure>,
    /// Wall-clock time; excluded from determinism guarantees.
    pub elapsed_seconds: f64,
    /// Artifact version that produced the report.
    pub version: String,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Serializes to pretty JSON, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<SweepReport, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Writes the JSON document to `path` (UTF-8, newline-terminated).
    pub fn write_to(&self, path: &Path) -> io::Result<()> {
        std::fs::write(path, self.to_json())
    }
}

/// Per-suite reports plus their roll-up.
#[derive(Debug, Clone, PartialEq)]
pub struct AllReports {
    /// One report per individual suite, in canonical order.
    pub suites: Vec<SweepReport>,
    /// Totals across every suite; failures keep their `suite/check` names.
    pub aggregate: SweepReport,
}

/// Runs the suite named by the config (`All` aggregates every suite).
pub fn run_suite(config: &SweepConfig) -> Result<SweepReport, ConfigError> {
    config.validate()?;
    if config.suite == Suite::All {
        Ok(run_all(config)?.aggregate)
    } else {
        Ok(run_individual(config.suite, config))
    }
}

/// Runs every individual suite with the config bounds and aggregates.
pub fn run_all(config: &SweepConfig) -> Result<AllReports, ConfigError> {
    config.validate()?;
    let started = Instant::now();
    let suites: Vec<SweepReport> = Suite::individual()
        .iter()
        .map(|suite| run_individual(*suite, config))
        .collect();
    let mut ranges = BTreeMap::new();
    ranges.insert("max_m".to_string(), config.max_m);
    ranges.insert("max_n".to_string(), config.max_n);
    ranges.insert("max_p".to_string(), config.max_p);
    let checks_run = suites.iter().map(|r| r.checks_run).sum();
    let aggregate = SweepReport {
        suite: Suite::All,
        ranges,
        checks_run,
        skipped: suites.iter().map(|r| r.skipped).sum(),
        degenerate: checks_run == 0,
        failures: suites.iter().flat_map(|r| r.failures.clone()).collect(),
        elapsed_seconds: started.elapsed().as_secs_f64(),
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    Ok(AllReports { suites, aggregate })
}

fn run_individual(suite: Suite, config: &SweepConfig) -> SweepReport {
    let p = config.parallelism;
    match suite {
        Suite::Gamma => suites::gamma_with(config.max_m, config.max_n, p),
        Suite::AlphaBeta => suites::alpha_beta_with(config.max_m, config.max_n, p),
        Suite::ReciprocityIdentity => suites::reciprocity_with(config.max_m, config.max_n, p),
        Suite::ZolotarevLemma => suites::zolotarev_lemma_with(config.max_p, p),
        Suite::QuadraticReciprocity => suites::quadratic_reciprocity_with(config.max_p, p),
        Suite::Supplements => suites::supplements_with(config.max_n, p),
        Suite::JacobiGeneralization => suites::jacobi_with(config.max_n, p),
        Suite::CrtStructure => suites::crt_with(config.max_m, config.max_n, p),
        Suite::All => unreachable!("run_individual takes individual suites"),
    }
}

/// Accumulated checks and failures for one parameter point.
#[derive(Debug, Default)]
pub(crate) struct PointOutcome {
    checks: u64,
    failures: Vec<Failure>,
}

impl PointOutcome {
    pub(crate) fn new() -> PointOutcome {
        PointOutcome::default()
    }

    /// Records an equality check between an oracle value and a candidate.
    pub(crate) fn check_eq<T: PartialEq + fmt::Display>(
        &mut self,
        check: &str,
        parameters: &[(&str, i64)],
        expected: T,
        actual: T,
    ) {
        self.checks += 1;
        if expected != actual {
            self.failures
                .push(Failure::new(check, parameters, expected, actual));
        }
    }

    /// Records a structural check with prose expected/actual descriptions.
    pub(crate) fn check_that(
        &mut self,
        check: &str,
        parameters: &[(&str, i64)],
        holds: bool,
        expected: &str,
        actual: &str,
    ) {
        self.checks += 1;
        if !holds {
            self.failures
                .push(Failure::new(check, parameters, expected, actual));
        }
    }

    /// Counts a check whose hypothesis is vacuous at this point, so range
    /// accounting stays uniform.
    pub(crate) fn vacuous(&mut self) {
        self.checks += 1;
    }
}

/// Evaluates every point, sequentially or on a dedicated pool, and merges
/// outcomes in point order.
pub(crate) fn run_points<P, F>(points: &[P], parallelism: usize, eval: F) -> (u64, Vec<Failure>)
where
    P: Sync,
    F: Fn(&P) -> PointOutcome + Sync,
{
    let outcomes: Vec<PointOutcome> = if parallelism == 1 {
        points.iter().map(&eval).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(parallelism)
            .build()
            .expect("worker pool");
        pool.install(|| points.par_iter().map(&eval).collect())
    };
    let mut checks = 0;
    let mut failures = Vec::new();
    for outcome in outcomes {
        checks += outcome.checks;
        failures.extend(outcome.failures);
    }
    (checks, failures)
}

/// Builds a report, appending a `harness/audit` failure when the observed
/// check or skip counts disagree with the independently computed ones.
pub(crate) fn finish_report(
    suite: Suite,
    ranges: &[(&str, u64)],
    started: Instant,
    checks_run: u64,
    skipped: u64,
    expected: (u64, u64),
    mut failures: Vec<Failure>,
) -> SweepReport {
    let (expected_checks, expected_skipped) = expected;
    if checks_run != expected_checks || skipped != expected_skipped {
        failures.push(Failure::new(
            "harness/audit",
            &[],
            format!("{expected_checks} checks, {expected_skipped} skipped"),
            format!("{checks_run} checks, {skipped} skipped"),
        ));
    }
    SweepReport {
        suite,
        ranges: ranges
            .iter()
            .map(|(name, value)| (name.to_string(), *value))
            .collect(),
        checks_run,
        skipped,
        degenerate: checks_run == 0,
        failures,
        elapsed_seconds: started.elapsed().as_secs_f64(),
        version: env!("CARGO_PKG_VERSION").to_string(),
    }
}

/// Harness meta-check support: a deliberately injected fault.
///
/// Arming a [`fault::Fault`] perturbs the image of the multiplication
/// permutation that the reciprocity-identity suite builds for the matching
/// `(m, n)` point (the image at `image_index` is swapped with its neighbor,
/// keeping the value a permutation but flipping its sign), so a run of that
/// suite must surface exactly one failure record with those parameters.
/// Test support only; the slot is global, so arm and disarm around a single
/// sweep at a time.
pub mod fault {
    use std::sync::Mutex;

    use crate::perm::Permutation;

    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    pub struct Fault {
        pub m: u64,
        pub n: u64,
        pub image_index: usize,
    }

    static ARMED: Mutex<Option<Fault>> = Mutex::new(None);

    pub fn arm(fault: Fault) {
        *ARMED.lock().expect("fault slot") = Some(fault);
    }

    pub fn disarm() {
        *ARMED.lock().expect("fault slot") = None;
    }

    pub(crate) fn perturb_if_armed(m: u64, n: u64, perm: Permutation) -> Permutation {
        let armed = *ARMED.lock().expect("fault slot");
        match armed {
            Some(fault) if fault.m == m && fault.n == n && perm.degree() >= 2 => {
                let mut image = perm.image().to_vec();
                let i = fault.image_index % image.len();
                let j = (i + 1) % image.len();
                image.swap(i, j);
                Permutation::from_image(image).expect("swap preserves bijectivity")
            }
            _ => perm,
        }
    }
}

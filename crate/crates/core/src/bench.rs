//! Wall-clock micro-benchmarks of the alternative algorithms.
//!
//! Two suites: inversion counting / sign evaluation on constructed
//! permutations, and Jacobi-symbol evaluation on sampled argument pairs.
//! Every timed algorithm folds its outputs into a checksum; competing
//! algorithms on the same case must produce equal checksums, which both
//! defeats dead-code elimination and re-confirms agreement while timing.
//! The functions panic if checksums diverge — that is an algorithm bug, not
//! a benchmarking condition.
//!
//! Timings are medians over [`DEFAULT_REPETITIONS`] repetitions after a few
//! warm-up rounds, single-threaded by contract. Expect the reciprocity-based
//! Jacobi evaluator to take `O(log)` arithmetic steps per symbol against the
//! permutation route's `O(n)`; that expectation is documented, not asserted.

use std::hint::black_box;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::deals::{column_deal, deal_permutation, row_deal, GridSpec};
use crate::perm::{random_permutation, Permutation, Sign};
use crate::symbols::{gcd, jacobi_factored, jacobi_reciprocity, zolotarev_symbol, SymbolValue};

/// Degree above which the quadratic inversion counter is skipped.
pub const NAIVE_INVERSION_CUTOFF: usize = 20_000;

/// Timed repetitions per algorithm; warm-up rounds are excluded.
pub const DEFAULT_REPETITIONS: usize = 11;

const WARMUP_REPETITIONS: usize = 2;

/// Input generators for benchmark cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// Seeded uniform random permutation of the given degree.
    RandomPermutation { degree: usize },
    /// The order-reversing permutation, worst case for inversion counting.
    Reversal { degree: usize },
    /// The row-to-column deal permutation on an `m × n` grid.
    GammaDeal { m: usize, n: usize },
    /// Sampled coprime `(a, n)` pairs with odd `n ≤ max_modulus`, evaluated
    /// by all three symbol algorithms.
    MultiplicationMap { max_modulus: u64, samples: usize },
}

/// One benchmark case: a generator plus run parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchCase {
    pub name: String,
    pub generator: Generator,
    pub repetitions: usize,
    pub seed: u64,
}

/// Timing summary for one algorithm on one case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchResult {
    pub case: String,
    pub algorithm: String,
    pub repetitions: usize,
    pub best_ns: u64,
    pub median_ns: u64,
    pub mean_ns: u64,
    /// Folded outputs; equal across competing algorithms on the same case.
    pub checksum: u64,
}

/// Times the sign-computation algorithms on random, reversal, and deal
/// permutations of roughly each requested size. The quadratic counter is
/// skipped above [`NAIVE_INVERSION_CUTOFF`].
pub fn bench_signs(sizes: &[usize], seed: u64) -> Vec<BenchResult> {
    assert!(!sizes.is_empty(), "bench_signs needs at least one size");
    let mut results = Vec::new();
    for &size in sizes {
        let degree = size.max(1);
        let m = integer_sqrt(degree).max(1);
        let n = (degree / m).max(1);
        let cases = [
            BenchCase {
                name: format!("random/{degree}"),
                generator: Generator::RandomPermutation { degree },
                repetitions: DEFAULT_REPETITIONS,
                seed,
            },
            BenchCase {
                name: format!("reversal/{degree}"),
                generator: Generator::Reversal { degree },
                repetitions: DEFAULT_REPETITIONS,
                seed,
            },
            BenchCase {
                name: format!("gamma/{m}x{n}"),
                generator: Generator::GammaDeal { m, n },
                repetitions: DEFAULT_REPETITIONS,
                seed,
            },
        ];
        for case in &cases {
            results.extend(run_case(case));
        }
    }
    results
}

/// Times the three Jacobi-symbol algorithms on the same sampled pairs.
pub fn bench_jacobi(max_n: u64, samples: usize, seed: u64) -> Vec<BenchResult> {
    assert!(max_n >= 3, "bench_jacobi needs max_n >= 3");
    assert!(samples >= 1, "bench_jacobi needs at least one sample");
    run_case(&BenchCase {
        name: format!("jacobi/max{max_n}/samples{samples}"),
        generator: Generator::MultiplicationMap {
            max_modulus: max_n,
            samples,
        },
        repetitions: DEFAULT_REPETITIONS,
        seed,
    })
}

/// Runs one case: builds the input once, then times each applicable
/// algorithm over the case's repetitions.
pub fn run_case(case: &BenchCase) -> Vec<BenchResult> {
    match case.generator {
        Generator::RandomPermutation { degree } => {
            let mut rng = ChaCha8Rng::seed_from_u64(case.seed ^ degree as u64);
            let perm = random_permutation(degree, &mut rng);
            sign_rows(case, &perm)
        }
        Generator::Reversal { degree } => {
            let perm = Permutation::from_image((0..degree).rev().collect())
                .expect("reversal is a bijection");
            sign_rows(case, &perm)
        }
        Generator::GammaDeal { m, n } => {
            let spec = GridSpec::new(m, n).expect("bench grid within capacity");
            let perm = deal_permutation(&row_deal(spec), &column_deal(spec)).expect("same shape");
            sign_rows(case, &perm)
        }
        Generator::MultiplicationMap {
            max_modulus,
            samples,
        } => jacobi_rows(case, max_modulus, samples),
    }
}

fn sign_rows(case: &BenchCase, perm: &Permutation) -> Vec<BenchResult> {
    let mut rows = Vec::new();
    if perm.degree() <= NAIVE_INVERSION_CUTOFF {
        rows.push(time_algorithm(case, "inversions-naive", || {
            perm.count_inversions_naive()
        }));
    }
    rows.push(time_algorithm(case, "inversions-merge", || {
        perm.count_inversions()
    }));
    rows.push(time_algorithm(case, "sign-inversions", || {
        sign_bit(perm.sign_via_inversions())
    }));
    rows.push(time_algorithm(case, "sign-cycles", || {
        sign_bit(perm.sign_via_cycles())
    }));

    let merge = checksum_of(&rows, "inversions-merge");
    if let Some(naive) = rows
        .iter()
        .find(|r| r.algorithm == "inversions-naive")
        .map(|r| r.checksum)
    {
        assert_eq!(naive, merge, "inversion counters disagree on {}", case.name);
    }
    let sign_inversions = checksum_of(&rows, "sign-inversions");
    let sign_cycles = checksum_of(&rows, "sign-cycles");
    assert_eq!(
        sign_inversions, sign_cycles,
        "sign routes disagree on {}",
        case.name
    );
    assert_eq!(
        merge % 2,
        sign_inversions,
        "sign parity disagrees with inversion count on {}",
        case.name
    );
    rows
}

fn jacobi_rows(case: &BenchCase, max_modulus: u64, samples: usize) -> Vec<BenchResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(case.seed);
    let mut pairs = Vec::with_capacity(samples);
    while pairs.len() < samples {
        let n = 2 * rng.gen_range(1..=(max_modulus - 1) / 2) + 1;
        let a = rng.gen_range(1..n);
        if gcd(a, n) == 1 {
            pairs.push((a as i64, n));
        }
    }

    let rows = vec![
        time_algorithm(case, "zolotarev-permutation", || {
            fold_symbols(pairs.iter().map(|&(a, n)| {
                SymbolValue::from(zolotarev_symbol(a, n).expect("coprime sample"))
            }))
        }),
        time_algorithm(case, "jacobi-factored", || {
            fold_symbols(
                pairs
                    .iter()
                    .map(|&(a, n)| jacobi_factored(a, n).expect("odd modulus")),
            )
        }),
        time_algorithm(case, "jacobi-reciprocity", || {
            fold_symbols(
                pairs
                    .iter()
                    .map(|&(a, n)| jacobi_reciprocity(a, n).expect("odd modulus")),
            )
        }),
    ];
    let reference = rows[0].checksum;
    for row in &rows[1..] {
        assert_eq!(
            row.checksum, reference,
            "symbol algorithms disagree on {}",
            case.name
        );
    }
    rows
}

fn time_algorithm(
    case: &BenchCase,
    algorithm: &str,
    mut produce: impl FnMut() -> u64,
) -> BenchResult {
    for _ in 0..WARMUP_REPETITIONS {
        black_box(produce());
    }
    let repetitions = case.repetitions.max(1);
    let mut durations = Vec::with_capacity(repetitions);
    let mut checksum = None;
    for _ in 0..repetitions {
        let start = Instant::now();
        let value = black_box(produce());
        durations.push(start.elapsed());
        match checksum {
            None => checksum = Some(value),
            Some(previous) => assert_eq!(
                previous, value,
                "{algorithm} is nondeterministic on {}",
                case.name
            ),
        }
    }
    durations.sort();
    let best = durations[0];
    let median = durations[durations.len() / 2];
    let mean = durations.iter().sum::<Duration>() / repetitions as u32;
    BenchResult {
        case: case.name.clone(),
        algorithm: algorithm.to_string(),
        repetitions,
        best_ns: best.as_nanos() as u64,
        median_ns: median.as_nanos() as u64,
        mean_ns: mean.as_nanos() as u64,
        checksum: checksum.expect("at least one repetition"),
    }
}

fn checksum_of(rows: &[BenchResult], algorithm: &str) -> u64 {
    rows.iter()
        .find(|r| r.algorithm == algorithm)
        .map(|r| r.checksum)
        .unwrap_or_else(|| panic!("missing {algorithm} row"))
}

fn sign_bit(sign: Sign) -> u64 {
    match sign {
        Sign::Plus => 0,
        Sign::Minus => 1,
    }
}

/// Order-sensitive FNV-style fold of symbol values.
fn fold_symbols(values: impl Iterator<Item = SymbolValue>) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for value in values {
        hash ^= (value.value() + 2) as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

fn integer_sqrt(value: usize) -> usize {
    let mut root = (value as f64).sqrt() as usize;
    while root * root > value {
        root -= 1;
    }
    while (root + 1) * (root + 1) <= value {
        root += 1;
    }
    root
}

/// Renders results as an aligned plain-text table.
pub fn format_table(results: &[BenchResult]) -> String {
    let headers = [
        "case",
        "algorithm",
        "reps",
        "best",
        "median",
        "mean",
        "checksum",
    ];
    let mut table: Vec<[String; 7]> = vec![headers.map(str::to_string)];
    for r in results {
        table.push([
            r.case.clone(),
            r.algorithm.clone(),
            r.repetitions.to_string(),
            format_ns(r.best_ns),
            format_ns(r.median_ns),
            format_ns(r.mean_ns),
            format!("{:016x}", r.checksum),
        ]);
    }
    let mut widths = [0usize; 7];
    for row in &table {
        for (width, cell) in widths.iter_mut().zip(row) {
            *width = (*width).max(cell.len());
        }
    }
    let mut out = String::new();
    for row in &table {
        let line: Vec<String> = row
            .iter()
            .zip(widths)
            .enumerate()
            .map(|(column, (cell, width))| {
                if column < 2 {
                    format!("{cell:<width$}")
                } else {
                    format!("{cell:>width$}")
                }
            })
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn format_ns(ns: u64) -> String {
    if ns >= 1_000_000_000 {
        format!("{:.3}s", ns as f64 / 1e9)
    } else if ns >= 1_000_000 {
        format!("{:.3}ms", ns as f64 / 1e6)
    } else if ns >= 1_000 {
        format!("{:.3}us", ns as f64 / 1e3)
    } else {
        format!("{ns}ns")
    }
}

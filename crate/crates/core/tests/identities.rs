//! Exhaustive identity sweeps at the module-contract bounds that the unit
//! tests and verifier suites do not already cover.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zolotarev::deals::{column_deal, deal_permutation, diagonal_deal, row_deal, GridSpec};
use zolotarev::perm::{random_permutation, Sign};
use zolotarev::symbols::{
    gcd, jacobi_factored, jacobi_reciprocity, legendre_bruteforce, zolotarev_symbol,
};

/// The diagonal factorization holds for every coprime pair, even dimensions
/// included; the sign identities need oddness but the composition does not.
#[test]
fn factorization_holds_for_all_coprime_pairs() {
    for m in 1..=24usize {
        for n in 1..=24usize {
            if gcd(m as u64, n as u64) != 1 {
                continue;
            }
            let spec = GridSpec::new(m, n).unwrap();
            let rows = row_deal(spec);
            let cols = column_deal(spec);
            let diag = diagonal_deal(spec).unwrap();
            let alpha = deal_permutation(&rows, &diag).unwrap();
            let beta = deal_permutation(&diag, &cols).unwrap();
            let gamma = deal_permutation(&rows, &cols).unwrap();
            assert_eq!(
                beta.compose(&alpha).unwrap(),
                gamma,
                "factorization fails at {m}x{n}"
            );
        }
    }
}

/// `⟨2|n⟩ = (−1)^{(n²−1)/8}` and `⟨n−1|n⟩ = (−1)^{(n−1)/2}` for odd n.
#[test]
fn supplement_closed_forms_hold_to_999() {
    for n in (3..=999u64).step_by(2) {
        assert_eq!(
            zolotarev_symbol(2, n).unwrap(),
            Sign::of_parity((n * n - 1) / 8),
            "two-symbol closed form fails at {n}"
        );
        assert_eq!(
            zolotarev_symbol(n as i64 - 1, n).unwrap(),
            Sign::of_parity((n - 1) / 2),
            "negation-symbol closed form fails at {n}"
        );
    }
}

/// Multiplicativity of `⟨·|n⟩` over every pair of units, for every odd
/// modulus up to 199, using a per-modulus symbol table.
#[test]
fn zolotarev_symbol_is_multiplicative_exhaustively() {
    for n in (1..=199u64).step_by(2) {
        let mut table = vec![None; n as usize];
        for a in 0..n {
            if gcd(a, n) == 1 {
                table[a as usize] = Some(zolotarev_symbol(a as i64, n).unwrap());
            }
        }
        for a in 0..n {
            let Some(sa) = table[a as usize] else { continue };
            for b in 0..n {
                let Some(sb) = table[b as usize] else { continue };
                let product = table[(a * b % n) as usize].expect("units are closed");
                assert_eq!(product, sa * sb, "multiplicativity fails at ({a},{b}) mod {n}");
            }
        }
    }
}

/// The reciprocity-based Jacobi evaluator agrees with the factored oracle on
/// every pair with 0 ≤ a ≤ 500 and odd n ≤ 501, including non-coprime pairs.
#[test]
fn jacobi_oracle_agreement_grid() {
    for n in (1..=501u64).step_by(2) {
        for a in 0..=500i64 {
            assert_eq!(
                jacobi_reciprocity(a, n).unwrap(),
                jacobi_factored(a, n).unwrap(),
                "jacobi routes disagree at ({a}|{n})"
            );
        }
    }
}

/// Kernel characterization at a larger bound than the unit tests: the
/// positive Zolotarev symbols modulo a prime are exactly the nonzero squares.
#[test]
fn zolotarev_kernel_matches_squares_to_199() {
    for p in (3..=199u64).step_by(2) {
        if !zolotarev::symbols::is_prime(p) {
            continue;
        }
        for a in 1..p {
            assert_eq!(
                zolotarev_symbol(a as i64, p).unwrap(),
                legendre_bruteforce(a as i64, p).unwrap(),
                "lemma fails at ({a}|{p})"
            );
        }
    }
}

/// Agreement of the two inversion counters and the two sign routes on 1000
/// seeded pseudo-random permutations per degree.
#[test]
fn algorithm_agreement_on_seeded_random_permutations() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0dd5_eed);
    for degree in [1usize, 2, 3, 10, 100, 1000] {
        for _ in 0..1000 {
            let p = random_permutation(degree, &mut rng);
            assert_eq!(p.count_inversions(), p.count_inversions_naive());
            assert_eq!(p.sign_via_inversions(), p.sign_via_cycles());
        }
    }
}

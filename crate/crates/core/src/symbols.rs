//! Number-theoretic symbols and supporting modular arithmetic.
//!
//! The Zolotarev symbol `⟨a|n⟩` is the sign of the permutation `x ↦ a·x` of
//! the residues modulo odd `n` (with `gcd(a, n) = 1`); it is evaluated here
//! literally, as the cycle parity of that permutation. The Legendre symbol
//! comes in two independent routes (square enumeration and the Euler
//! criterion) and the Jacobi symbol in two more (prime factorization and
//! reciprocity reduction), so every fast path has a slow oracle to answer to.
//!
//! Arguments `a` may be negative or out of range; they are reduced modulo
//! `n` before any coprimality check. The Jacobi symbol is extended with the
//! value 0 for non-coprime arguments, the usual computational convention.

use thiserror::Error;

use crate::deals::MAX_CELLS;
use crate::perm::{Permutation, Sign};

/// Errors from symbol evaluation and modular arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("modulus {n} must be odd")]
    EvenModulus { n: u64 },
    #[error("residue {residue} is not coprime to the modulus {modulus}")]
    NotCoprime { residue: u64, modulus: u64 },
    #[error("{n} is not prime")]
    NotPrime { n: u64 },
    #[error("{a} is divisible by the modulus {p}")]
    DividesModulus { a: i64, p: u64 },
    #[error(
        "Euler criterion produced {residue} for ({a}|{p}), which is neither 1 nor p-1; \
         the modulus is not prime"
    )]
    EulerCriterionFailed { a: i64, p: u64, residue: u64 },
    #[error("modulus {n} exceeds the dense-permutation capacity of {max}")]
    CapacityExceeded { n: u64, max: usize },
}

/// A Legendre/Jacobi-style symbol value: −1, 0, or +1. The value 0 occurs
/// only for non-coprime arguments of the extended Jacobi symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymbolValue {
    MinusOne,
    Zero,
    PlusOne,
}

impl SymbolValue {
    pub fn value(self) -> i64 {
        match self {
            SymbolValue::MinusOne => -1,
            SymbolValue::Zero => 0,
            SymbolValue::PlusOne => 1,
        }
    }
}

impl From<Sign> for SymbolValue {
    fn from(sign: Sign) -> SymbolValue {
        match sign {
            Sign::Plus => SymbolValue::PlusOne,
            Sign::Minus => SymbolValue::MinusOne,
        }
    }
}

impl std::ops::Mul for SymbolValue {
    type Output = SymbolValue;
    fn mul(self, rhs: SymbolValue) -> SymbolValue {
        match (self.value()) * (rhs.value()) {
            -1 => SymbolValue::MinusOne,
            0 => SymbolValue::Zero,
            _ => SymbolValue::PlusOne,
        }
    }
}

impl std::fmt::Display for SymbolValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primality {
    Prime,
    Composite,
    Unknown,
}

/// Basic classification of a positive modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModulusProfile {
    pub n: u64,
    pub parity: Parity,
    pub primality: Primality,
}

impl ModulusProfile {
    /// Classifies `n ≥ 1`. The unit `n = 1` is neither prime nor composite
    /// and is reported as `Unknown`.
    pub fn of(n: u64) -> ModulusProfile {
        let parity = if n % 2 == 0 { Parity::Even } else { Parity::Odd };
        let primality = if n <= 1 {
            Primality::Unknown
        } else if is_prime(n) {
            Primality::Prime
        } else {
            Primality::Composite
        };
        ModulusProfile {
            n,
            parity,
            primality,
        }
    }

    pub fn is_odd_prime(&self) -> bool {
        self.parity == Parity::Odd && self.primality == Primality::Prime
    }
}

/// Greatest common divisor.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Reduces a possibly negative `a` into `0..n`. `n` must be positive.
pub fn reduce_mod(a: i64, n: u64) -> u64 {
    debug_assert!(n > 0);
    if a >= 0 {
        a as u64 % n
    } else {
        let r = ((a as i128).unsigned_abs() % n as u128) as u64;
        if r == 0 {
            0
        } else {
            n - r
        }
    }
}

fn mod_mul(a: u64, b: u64, n: u64) -> u64 {
    (a as u128 * b as u128 % n as u128) as u64
}

/// `base^exp mod n` by square-and-multiply, with widened intermediates so
/// operands below 2^63 never overflow. Panics if `n = 0`.
pub fn mod_pow(base: i64, exp: u64, n: u64) -> u64 {
    assert!(n > 0, "mod_pow modulus must be positive");
    mod_pow_u64(reduce_mod(base, n), exp, n)
}

fn mod_pow_u64(base: u64, mut exp: u64, n: u64) -> u64 {
    let mut base = base % n;
    let mut acc = 1 % n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, n);
        }
        exp >>= 1;
        if exp > 0 {
            base = mod_mul(base, base, n);
        }
    }
    acc
}

/// Deterministic primality test, exact over the full `u64` range: trial
/// division below 10^6, fixed-witness strong-probable-prime rounds above.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7] {
        if n % p == 0 {
            return n == p;
        }
    }
    if n < 1_000_000 {
        let mut d = 11u64;
        while d * d <= n {
            if n % d == 0 || n % (d + 2) == 0 {
                return false;
            }
            d += 6;
        }
        true
    } else {
        miller_rabin(n)
    }
}

/// Strong-probable-prime rounds with the witness set that is deterministic
/// for all 64-bit inputs.
fn miller_rabin(n: u64) -> bool {
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = mod_pow_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mod_mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization by trial division, as `(prime, multiplicity)` pairs
/// in increasing prime order. Intended for desk-scale inputs; a worst-case
/// 64-bit semiprime will grind.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut n = n;
    let mut factors = Vec::new();
    let mut divisor = 2u64;
    while divisor * divisor <= n {
        if n % divisor == 0 {
            let mut exp = 0u32;
            while n % divisor == 0 {
                n /= divisor;
                exp += 1;
            }
            factors.push((divisor, exp));
        }
        divisor += if divisor == 2 { 1 } else { 2 };
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

/// The permutation `x ↦ a·x mod n` of `{0, …, n−1}` (0 stays fixed).
/// Requires `gcd(a mod n, n) = 1`; `a` is reduced modulo `n` first.
pub fn multiplication_permutation(a: i64, n: u64) -> Result<Permutation, SymbolError> {
    if n == 0 {
        return Err(SymbolError::ZeroModulus);
    }
    if n > MAX_CELLS as u64 {
        return Err(SymbolError::CapacityExceeded {
            n,
            max: MAX_CELLS,
        });
    }
    let multiplier = reduce_mod(a, n);
    if gcd(multiplier, n) != 1 {
        return Err(SymbolError::NotCoprime {
            residue: multiplier,
            modulus: n,
        });
    }
    // n is bounded by MAX_CELLS, so the product stays far below u64::MAX.
    let image = (0..n).map(|x| (multiplier * x % n) as usize).collect();
    Ok(Permutation::from_image(image).expect("multiplication by a unit is a bijection"))
}

/// The Zolotarev symbol `⟨a|n⟩`: the sign of the multiplication-by-`a`
/// permutation modulo odd `n`, evaluated by cycle parity.
pub fn zolotarev_symbol(a: i64, n: u64) -> Result<Sign, SymbolError> {
    if n == 0 {
        return Err(SymbolError::ZeroModulus);
    }
    if n % 2 == 0 {
        return Err(SymbolError::EvenModulus { n });
    }
    Ok(multiplication_permutation(a, n)?.sign_via_cycles())
}

/// Sign of the translation `x ↦ x + c mod n`, from its cycle structure:
/// `gcd(n, c)` cycles of equal length, hence parity `n − gcd(n, c)`. Always
/// `+1` for odd `n`. The empty modulus `n = 0` yields `+1`.
pub fn translation_sign(c: i64, n: u64) -> Sign {
    if n == 0 {
        return Sign::Plus;
    }
    let shift = reduce_mod(c, n);
    Sign::of_parity(n - gcd(n, shift))
}

fn check_odd_prime(p: u64) -> Result<(), SymbolError> {
    if p == 0 {
        return Err(SymbolError::ZeroModulus);
    }
    if p % 2 == 0 {
        return Err(SymbolError::EvenModulus { n: p });
    }
    if !is_prime(p) {
        return Err(SymbolError::NotPrime { n: p });
    }
    Ok(())
}

/// Legendre symbol by exhaustive square enumeration: `+1` iff `a` is a
/// nonzero square modulo the odd prime `p`. Linear in `p`; the oracle route.
pub fn legendre_bruteforce(a: i64, p: u64) -> Result<Sign, SymbolError> {
    check_odd_prime(p)?;
    let residue = reduce_mod(a, p);
    if residue == 0 {
        return Err(SymbolError::DividesModulus { a, p });
    }
    for x in 0..=p / 2 {
        if mod_mul(x, x, p) == residue {
            return Ok(Sign::Plus);
        }
    }
    Ok(Sign::Minus)
}

/// Legendre symbol by the Euler criterion: `a^{(p−1)/2} mod p`, mapped
/// `1 ↦ +1` and `p−1 ↦ −1`. Any other residue means the modulus was not
/// prime and is reported as an error.
pub fn legendre_euler(a: i64, p: u64) -> Result<Sign, SymbolError> {
    check_odd_prime(p)?;
    let residue = reduce_mod(a, p);
    if residue == 0 {
        return Err(SymbolError::DividesModulus { a, p });
    }
    let power = mod_pow_u64(residue, (p - 1) / 2, p);
    if power == 1 {
        Ok(Sign::Plus)
    } else if power == p - 1 {
        Ok(Sign::Minus)
    } else {
        Err(SymbolError::EulerCriterionFailed {
            a,
            p,
            residue: power,
        })
    }
}

/// Jacobi symbol via trial-division factorization of the odd modulus:
/// the product of Legendre symbols over prime factors with multiplicity.
/// Returns 0 when the arguments share a factor; `n = 1` gives `+1` (empty
/// product).
pub fn jacobi_factored(a: i64, n: u64) -> Result<SymbolValue, SymbolError> {
    if n == 0 {
        return Err(SymbolError::ZeroModulus);
    }
    if n % 2 == 0 {
        return Err(SymbolError::EvenModulus { n });
    }
    if n == 1 {
        return Ok(SymbolValue::PlusOne);
    }
    let residue = reduce_mod(a, n);
    if gcd(residue, n) != 1 {
        return Ok(SymbolValue::Zero);
    }
    let mut acc = Sign::Plus;
    for (p, exp) in factorize(n) {
        if exp % 2 == 1 {
            acc = acc * legendre_euler(residue as i64, p)?;
        }
    }
    Ok(acc.into())
}

/// Jacobi symbol by reciprocity reduction: repeated remainder steps, the
/// `(2|n) = (−1)^{(n²−1)/8}` rule for factors of two, and the quadratic
/// reciprocity flip for odd coprime arguments. `O(log a · log n)` arithmetic
/// steps; agrees with [`jacobi_factored`] on all inputs.
pub fn jacobi_reciprocity(a: i64, n: u64) -> Result<SymbolValue, SymbolError> {
    if n == 0 {
        return Err(SymbolError::ZeroModulus);
    }
    if n % 2 == 0 {
        return Err(SymbolError::EvenModulus { n });
    }
    let mut num = reduce_mod(a, n);
    let mut den = n;
    let mut acc = Sign::Plus;
    loop {
        if den == 1 {
            return Ok(acc.into());
        }
        num %= den;
        if num == 0 {
            return Ok(SymbolValue::Zero);
        }
        let twos = num.trailing_zeros();
        if twos % 2 == 1 && matches!(den % 8, 3 | 5) {
            acc = -acc;
        }
        num >>= twos;
        if num == 1 {
            return Ok(acc.into());
        }
        if num % 4 == 3 && den % 4 == 3 {
            acc = -acc;
        }
        std::mem::swap(&mut num, &mut den);
    }
}

/// Smallest primitive root modulo the odd prime `p`: the least `g ≥ 2` whose
/// multiplicative order is `p − 1`, confirmed via `g^{(p−1)/q} ≠ 1` for each
/// prime `q` dividing `p − 1`.
pub fn primitive_root(p: u64) -> Result<u64, SymbolError> {
    check_odd_prime(p)?;
    let exponents: Vec<u64> = factorize(p - 1)
        .into_iter()
        .map(|(q, _)| (p - 1) / q)
        .collect();
    for g in 2..=p - 1 {
        if exponents
            .iter()
            .all(|&exponent| mod_pow_u64(g, exponent, p) != 1)
        {
            return Ok(g);
        }
    }
    unreachable!("every odd prime has a primitive root")
}

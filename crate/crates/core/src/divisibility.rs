//! Multinomial coefficients of partitions and factorial-free divisibility.
//!
//! The production test for `k | b` works entirely with `p`-adic valuations
//! obtained from Legendre's formula, so no factorial is ever built. The
//! exact big-integer route ([`multinomial`] followed by a remainder) is kept
//! alongside it as the reference.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::partitions::MultiplicityProfile;

/// Which route decides `k | b(π)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DivisibilityPath {
    /// Compare `p`-adic valuations against the factorization of `k`.
    #[default]
    Valuation,
    /// Build the multinomial exactly and take the remainder.
    Exact,
}

/// `(prime, exponent)` pairs with primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrimeFactorization {
    factors: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Multiplies the factors back together.
    pub fn product(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

impl fmt::Display for PrimeFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Deterministic primality by trial division over `6m ± 1`.
pub fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d <= n / d {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Canonical factorization by trial division; `1` factors as the empty list.
///
/// `0` has no factorization and also yields the empty list.
pub fn factorize(k: u64) -> PrimeFactorization {
    let mut factors = Vec::new();
    let mut rest = k;
    if rest == 0 {
        return PrimeFactorization { factors };
    }
    let mut d = 2u64;
    while d <= rest / d {
        if rest % d == 0 {
            let mut e = 0;
            while rest % d == 0 {
                rest /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    PrimeFactorization { factors }
}

fn require_prime(op: &'static str, p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(domain(op, format!("p must be prime (got p = {p})")))
    }
}

/// Exponent of the prime `p` in `m!`, by Legendre's formula.
pub fn legendre_valuation(p: u64, m: u64) -> Result<u64> {
    require_prime("legendre_valuation", p)?;
    Ok(legendre_unchecked(p, m))
}

fn legendre_unchecked(p: u64, m: u64) -> u64 {
    let mut total = 0;
    let mut q = m;
    while q >= p {
        q /= p;
        total += q;
    }
    total
}

/// Exponent of the prime `p` in the multinomial coefficient of `profile`.
pub fn multinomial_valuation(p: u64, profile: &MultiplicityProfile) -> Result<u64> {
    require_prime("multinomial_valuation", p)?;
    Ok(multinomial_valuation_unchecked(p, profile))
}

fn multinomial_valuation_unchecked(p: u64, profile: &MultiplicityProfile) -> u64 {
    let top = legendre_unchecked(p, u64::from(profile.k()));
    let bottom: u64 = profile
        .multiplicities()
        .map(|j| legendre_unchecked(p, u64::from(j)))
        .sum();
    top - bottom
}

/// `k! / (j_1! j_2! ... j_m!)`, exact.
///
/// Evaluated as a running product of binomials `C(j_1 + ... + j_i, j_i)`.
pub fn multinomial(profile: &MultiplicityProfile) -> BigUint {
    let mut acc = BigUint::one();
    let mut filled: u64 = 0;
    for j in profile.multiplicities() {
        // Multiply by C(filled + j, j), one exact step at a time.
        for i in 1..=u64::from(j) {
            acc *= filled + i;
            acc /= i;
        }
        filled += u64::from(j);
    }
    acc
}

/// Whether `k` divides the multinomial coefficient of `profile`.
///
/// Every prime power `p^e` of `k` must be covered by the valuation of the
/// multinomial at `p`.
pub fn divides_multinomial(k: u64, profile: &MultiplicityProfile) -> Result<bool> {
    if k < 1 {
        return Err(domain("divides_multinomial", "k must be >= 1 (got k = 0)"));
    }
    Ok(factorize(k)
        .factors()
        .iter()
        .all(|&(p, e)| multinomial_valuation_unchecked(p, profile) >= u64::from(e)))
}

/// Reference route: `multinomial(profile) mod k == 0`.
pub fn divides_multinomial_exact(k: u64, profile: &MultiplicityProfile) -> Result<bool> {
    if k < 1 {
        return Err(domain("divides_multinomial_exact", "k must be >= 1 (got k = 0)"));
    }
    Ok((multinomial(profile) % k).is_zero())
}

/// Dispatches on `path`.
pub fn divides_multinomial_with(
    path: DivisibilityPath,
    k: u64,
    profile: &MultiplicityProfile,
) -> Result<bool> {
    match path {
        DivisibilityPath::Valuation => divides_multinomial(k, profile),
        DivisibilityPath::Exact => divides_multinomial_exact(k, profile),
    }
}

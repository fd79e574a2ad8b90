//! Terms of A200144 and the prime-deficit indicator.
//!
//! `a(n)` counts the pairs `(k, π)` where `π` is a partition of `n` into `k`
//! parts whose multinomial coefficient is divisible by `k`. Every term is
//! computed from scratch, so ranges parallelize over `n`.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

use crate::divisibility::{divides_multinomial_with, is_prime, DivisibilityPath};
use crate::error::{check_parts_bounds, domain, Result};
use crate::partitions::{partition_count, MultiplicityProfile, Partitions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SequenceTerm {
    pub n: u32,
    pub a_n: u64,
}

impl fmt::Display for SequenceTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.n, self.a_n)
    }
}

/// Comparison of `a(n)` with `p(n)` for one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimalityReport {
    pub n: u32,
    pub p_n: BigUint,
    pub a_n: u64,
    /// `p(n) - 1 - a(n)`. Zero for every prime; `-1` at the unit `n = 1`.
    pub deficit: BigInt,
    pub prime: bool,
}

impl PrimalityReport {
    /// `n = 1` is neither prime nor composite and its deficit degenerates.
    pub fn is_unit(&self) -> bool {
        self.n == 1
    }
}

/// Number of partitions of `n` into `k` parts whose multinomial is divisible by `k`.
pub fn count_divisible(n: u32, k: u32) -> Result<u64> {
    count_divisible_with(DivisibilityPath::Valuation, n, k)
}

pub fn count_divisible_with(path: DivisibilityPath, n: u32, k: u32) -> Result<u64> {
    check_parts_bounds("count_divisible", n, k)?;
    if k == 1 {
        return Ok(1);
    }
    let mut parts = Partitions::new(n, k)?;
    let mut count = 0;
    while let Some(desc) = parts.advance() {
        let profile = MultiplicityProfile::from_sorted(desc);
        if divides_multinomial_with(path, u64::from(k), &profile)? {
            count += 1;
        }
    }
    Ok(count)
}

/// `a(n)`, the `n`-th term of A200144 (offset 1).
pub fn a200144_term(n: u32) -> Result<SequenceTerm> {
    a200144_term_with(DivisibilityPath::Valuation, n)
}

pub fn a200144_term_with(path: DivisibilityPath, n: u32) -> Result<SequenceTerm> {
    if n < 1 {
        return Err(domain("a200144_term", format!("n must be >= 1 (got n = {n})")));
    }
    let mut a_n = 0;
    for k in 1..=n {
        a_n += count_divisible_with(path, n, k)?;
    }
    Ok(SequenceTerm { n, a_n })
}

/// `a(1..=n_max)` in ascending order, terms evaluated in parallel.
pub fn a200144_range(n_max: u32) -> Result<Vec<SequenceTerm>> {
    a200144_range_observed(n_max, |_, _| {})
}

/// Like [`a200144_range`], calling `observe` with each term and its
/// computation time as it completes.
///
/// `observe` runs on worker threads in completion order; the returned
/// vector is always ascending in `n`.
pub fn a200144_range_observed<F>(n_max: u32, observe: F) -> Result<Vec<SequenceTerm>>
where
    F: Fn(&SequenceTerm, Duration) + Sync,
{
    if n_max < 1 {
        return Err(domain("a200144_range", format!("n_max must be >= 1 (got n_max = {n_max})")));
    }
    // Large n dominate the cost; hand them out first.
    let mut terms: Vec<SequenceTerm> = (1..=n_max)
        .into_par_iter()
        .map(|i| n_max + 1 - i)
        .map(|n| {
            let start = Instant::now();
            let term = a200144_term(n)?;
            observe(&term, start.elapsed());
            Ok(term)
        })
        .collect::<Result<_>>()?;
    terms.reverse();
    Ok(terms)
}

/// Prime-deficit report `p(n) - 1 - a(n)` for `n`.
///
/// A zero deficit is implied by primality; the converse is not assumed.
pub fn prime_deficit(n: u32) -> Result<PrimalityReport> {
    let term = a200144_term(n)?;
    Ok(report_for(term, partition_count(n)))
}

pub(crate) fn report_for(term: SequenceTerm, p_n: BigUint) -> PrimalityReport {
    let deficit = BigInt::from(p_n.clone()) - 1 - BigInt::from(term.a_n);
    PrimalityReport {
        n: term.n,
        p_n,
        a_n: term.a_n,
        deficit,
        prime: is_prime(u64::from(term.n)),
    }
}

/// Reports for `n = 1..=n_max`, ascending.
pub fn prime_scan(n_max: u32) -> Result<Vec<PrimalityReport>> {
    let terms = a200144_range(n_max)?;
    let p = crate::partitions::pentagonal_table(n_max);
    Ok(terms
        .into_iter()
        .map(|t| report_for(t, p[t.n as usize].clone()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn count_divisible_examples() {
        assert_eq!(count_divisible(7, 4), Ok(3));
        assert_eq!(count_divisible(4, 2), Ok(1));
        for n in 1..=25 {
            assert_eq!(count_divisible(n, 1), Ok(1));
        }
        assert!(count_divisible(3, 4).is_err());
        assert!(count_divisible(3, 0).is_err());
        assert!(count_divisible(0, 0).is_err());
    }

    #[test]
    fn term_examples() {
        assert_eq!(a200144_term(1).unwrap().a_n, 1);
        assert_eq!(a200144_term(4).unwrap().a_n, 3);
        assert_eq!(a200144_term(7).unwrap().a_n, 14);
        assert_eq!(a200144_term(20).unwrap().a_n, 594);
        assert!(a200144_term(0).is_err());
    }

    #[test]
    fn range_prefix() {
        let got: Vec<(u32, u64)> = a200144_range(5)
            .unwrap()
            .iter()
            .map(|t| (t.n, t.a_n))
            .collect();
        assert_eq!(got, vec![(1, 1), (2, 1), (3, 2), (4, 3), (5, 6)]);
        assert_eq!(a200144_range(1).unwrap(), vec![SequenceTerm { n: 1, a_n: 1 }]);
        assert!(a200144_range(0).is_err());
    }

    #[test]
    fn deficits() {
        let r = prime_deficit(5).unwrap();
        assert!(r.prime && r.deficit.is_zero());
        let r = prime_deficit(7).unwrap();
        assert!(r.prime && r.deficit.is_zero());
        let r = prime_deficit(4).unwrap();
        assert!(!r.prime);
        assert_eq!(r.deficit, BigInt::from(1));
        let r = prime_deficit(1).unwrap();
        assert!(r.is_unit());
        assert_eq!(r.deficit, BigInt::from(-1));
    }

    #[test]
    fn scan_agrees_with_single_reports() {
        let scan = prime_scan(15).unwrap();
        for r in &scan {
            assert_eq!(r, &prime_deficit(r.n).unwrap());
        }
    }
}

//! Exhaustive and seeded checks of the divisibility theorems.
//!
//! Each check produces a [`CheckReport`] listing counterexamples. The
//! line-oriented serialization is
//!
//! ```text
//! CHECK <name> <range> <PASS|FAIL>
//! VIOLATION n=<n> k=<k> partition=<parts> observed=<value>
//! NOTE <free text>
//! ```
//!
//! with one `VIOLATION` line per counterexample and optional `NOTE` lines.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::divisibility::{
    divides_multinomial, divides_multinomial_exact, factorize, multinomial, multinomial_valuation,
};
use crate::error::{check_parts_bounds, domain, Result};
use crate::partitions::{enumerate_partitions, PartitionK};
use crate::sequence::{a200144_range, a200144_term_with, SequenceTerm};
use crate::DivisibilityPath;

/// Largest `n` the composition brute force accepts.
pub const COMPOSITION_ORACLE_CAP: u32 = 12;

/// One counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub n: u32,
    pub k: Option<u32>,
    pub partition: Option<PartitionK>,
    pub observed: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VIOLATION n={}", self.n)?;
        match self.k {
            Some(k) => write!(f, " k={k}")?,
            None => write!(f, " k=-")?,
        }
        match &self.partition {
            Some(p) => write!(f, " partition={p}")?,
            None => write!(f, " partition=-")?,
        }
        write!(f, " observed={}", self.observed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check_name: String,
    /// Compact description of the covered parameters, without spaces.
    pub parameter_range: String,
    /// Number of elementary cases examined (partitions, terms, evaluations).
    pub items_checked: u64,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(check_name: impl Into<String>, parameter_range: impl Into<String>) -> Self {
        Self {
            check_name: check_name.into(),
            parameter_range: parameter_range.into(),
            items_checked: 0,
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Folds `other` into `self`, keeping this report's name and range.
    pub fn absorb(&mut self, other: CheckReport) {
        self.items_checked += other.items_checked;
        self.violations.extend(other.violations);
        self.notes.extend(other.notes);
    }

    fn violation(&mut self, n: u32, k: Option<u32>, partition: Option<&PartitionK>, observed: impl Into<String>) {
        self.violations.push(Violation {
            n,
            k,
            partition: partition.cloned(),
            observed: observed.into(),
        });
    }

    /// Renders the text serialization, each line LF-terminated.
    pub fn serialize(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "CHECK {} {} {}",
            self.check_name,
            self.parameter_range,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        for note in &self.notes {
            writeln!(f, "NOTE {note}")?;
        }
        Ok(())
    }
}

fn merged(name: &str, range: String, parts: Vec<CheckReport>) -> CheckReport {
    let mut report = CheckReport::new(name, range);
    for p in parts {
        report.absorb(p);
    }
    report
}

fn product_of_parts(a: &[i64], parts: &[u32]) -> BigInt {
    parts
        .iter()
        .map(|&l| BigInt::from(a[l as usize - 1]))
        .product()
}

/// `Σ_{π ⊢ n, k parts} b(π) · a_{λ_1} ⋯ a_{λ_k}`, with `a[0]` holding `a_1`.
///
/// This is the coefficient of `x^n` in `(a_1 x + a_2 x^2 + ...)^k`.
pub fn composita(a: &[i64], n: u32, k: u32) -> Result<BigInt> {
    check_parts_bounds("composita", n, k)?;
    if a.len() < n as usize {
        return Err(domain(
            "composita",
            format!("sequence needs at least n = {n} entries (got {})", a.len()),
        ));
    }
    let mut sum = BigInt::zero();
    for p in enumerate_partitions(n, k)? {
        let weight = product_of_parts(a, p.parts());
        if weight.is_zero() {
            continue;
        }
        sum += BigInt::from(multinomial(&p.profile())) * weight;
    }
    Ok(sum)
}

/// Brute-force sum of `a_{λ_1} ⋯ a_{λ_k}` over every composition of `n`
/// into `k` parts. Limited to `n <= COMPOSITION_ORACLE_CAP`.
pub fn composition_sum(a: &[i64], n: u32, k: u32) -> Result<BigInt> {
    check_parts_bounds("composition_sum", n, k)?;
    if n > COMPOSITION_ORACLE_CAP {
        return Err(domain(
            "composition_sum",
            format!("n must be <= {COMPOSITION_ORACLE_CAP} (got n = {n})"),
        ));
    }
    if a.len() < n as usize {
        return Err(domain(
            "composition_sum",
            format!("sequence needs at least n = {n} entries (got {})", a.len()),
        ));
    }
    fn walk(a: &[i64], remaining: u32, slots: u32, acc: &BigInt, out: &mut BigInt) {
        if slots == 0 {
            if remaining == 0 {
                *out += acc;
            }
            return;
        }
        // Leave at least one unit for each later slot.
        for first in 1..=remaining.saturating_sub(slots - 1) {
            let next = acc * a[first as usize - 1];
            walk(a, remaining - first, slots - 1, &next, out);
        }
    }
    let mut out = BigInt::zero();
    walk(a, n, k, &BigInt::one(), &mut out);
    Ok(out)
}

/// `Σ_k (n·p_k / k) · composita(a, n, k)` as an exact rational.
pub fn theorem1_sum(a: &[i64], p: &[i64], n: u32) -> Result<BigRational> {
    if n < 1 {
        return Err(domain("theorem1_sum", "n must be >= 1 (got n = 0)"));
    }
    if a.len() < n as usize || p.len() < n as usize {
        return Err(domain(
            "theorem1_sum",
            format!("both sequences need at least n = {n} entries"),
        ));
    }
    let mut total = BigRational::zero();
    for k in 1..=n {
        let coeff = BigRational::new(BigInt::from(n) * p[k as usize - 1], BigInt::from(k));
        total += coeff * BigRational::from_integer(composita(a, n, k)?);
    }
    Ok(total)
}

/// Checks that [`theorem1_sum`] is an integer. For small `n` each composita
/// value is also compared with the composition brute force.
pub fn theorem1_check(a: &[i64], p: &[i64], n: u32) -> Result<CheckReport> {
    let total = theorem1_sum(a, p, n)?;
    let mut report = CheckReport::new("theorem1", format!("n={n}"));
    report.items_checked = u64::from(n);
    if n <= COMPOSITION_ORACLE_CAP {
        for k in 1..=n {
            let c = composita(a, n, k)?;
            let brute = composition_sum(a, n, k)?;
            if brute != c {
                report.violation(n, Some(k), None, format!("composita={c},compositions={brute}"));
            }
        }
    }
    if !total.is_integer() {
        report.violation(n, None, None, format!("sum={total}"));
    }
    Ok(report)
}

/// Seeded draw of `trials` pairs `(a, p)` with entries in `[-9, 9]`; every
/// pair is checked for each `n` in `1..=n_max`.
pub fn theorem1_random(seed: u64, trials: u32, n_max: u32) -> Result<CheckReport> {
    if n_max < 1 {
        return Err(domain("theorem1_random", "n_max must be >= 1 (got n_max = 0)"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = n_max as usize;
    let draws: Vec<(Vec<i64>, Vec<i64>)> = (0..trials)
        .map(|_| {
            let a = (0..len).map(|_| rng.gen_range(-9..=9)).collect();
            let p = (0..len).map(|_| rng.gen_range(-9..=9)).collect();
            (a, p)
        })
        .collect();
    let parts = draws
        .par_iter()
        .map(|(a, p)| {
            let mut r = CheckReport::new("theorem1", "");
            for n in 1..=n_max {
                r.absorb(theorem1_check(a, p, n)?);
            }
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(merged(
        "theorem1",
        format!("n=1..{n_max},trials={trials},seed={seed},entries=-9..9"),
        parts,
    ))
}

/// Checks `k | n·b(π)` for every partition of `n`.
pub fn theorem2_check(n: u32) -> Result<CheckReport> {
    if n < 1 {
        return Err(domain("theorem2_check", "n must be >= 1 (got n = 0)"));
    }
    let mut report = CheckReport::new("theorem2", format!("n={n}"));
    let nf = factorize(u64::from(n));
    let v_n = |p: u64| {
        nf.factors()
            .iter()
            .find(|f| f.0 == p)
            .map_or(0, |f| u64::from(f.1))
    };
    for k in 1..=n {
        let kf = factorize(u64::from(k));
        let n_val: Vec<u64> = kf.factors().iter().map(|&(p, _)| v_n(p)).collect();
        for part in enumerate_partitions(n, k)? {
            let profile = part.profile();
            report.items_checked += 1;
            for (&(p, e), &vn) in kf.factors().iter().zip(&n_val) {
                let vb = multinomial_valuation(p, &profile)?;
                if vn + vb < u64::from(e) {
                    report.violation(n, Some(k), Some(&part), format!("v_{p}(n*b)={}<{e}", vn + vb));
                }
            }
        }
    }
    Ok(report)
}

pub fn theorem2_scan(n_max: u32) -> Result<CheckReport> {
    scan("theorem2", n_max, theorem2_check)
}

/// Checks `k | b(π)` whenever `gcd(n, k) = 1`, and `b = 1` for the constant
/// partition whenever `k | n`.
pub fn corollary_check(n: u32) -> Result<CheckReport> {
    if n < 1 {
        return Err(domain("corollary_check", "n must be >= 1 (got n = 0)"));
    }
    let mut report = CheckReport::new("corollary", format!("n={n}"));
    for k in 1..=n {
        if n.gcd(&k) == 1 {
            for part in enumerate_partitions(n, k)? {
                report.items_checked += 1;
                if !divides_multinomial(u64::from(k), &part.profile())? {
                    let b = multinomial(&part.profile());
                    report.violation(n, Some(k), Some(&part), format!("b={b}"));
                }
            }
        }
        if n % k == 0 {
            let constant = PartitionK::from_parts(vec![n / k; k as usize])
                .expect("constant partition has positive parts");
            report.items_checked += 1;
            let b = multinomial(&constant.profile());
            if !b.is_one() {
                report.violation(n, Some(k), Some(&constant), format!("b={b}"));
            }
        }
    }
    Ok(report)
}

pub fn corollary_scan(n_max: u32) -> Result<CheckReport> {
    scan("corollary", n_max, corollary_check)
}

/// Cross-checks the valuation and exact divisibility routes on every
/// partition of every `n <= n_max`, then recomputes each term on the exact
/// route.
pub fn oracle_check(n_max: u32) -> Result<CheckReport> {
    if n_max < 1 {
        return Err(domain("oracle_check", "n_max must be >= 1 (got n_max = 0)"));
    }
    let production = a200144_range(n_max)?;
    let parts = production
        .par_iter()
        .map(|&SequenceTerm { n, a_n }| {
            let mut r = CheckReport::new("oracle", "");
            for k in 1..=n {
                for part in enumerate_partitions(n, k)? {
                    let profile = part.profile();
                    let fast = divides_multinomial(u64::from(k), &profile)?;
                    let exact = divides_multinomial_exact(u64::from(k), &profile)?;
                    r.items_checked += 1;
                    if fast != exact {
                        r.violation(n, Some(k), Some(&part), format!("valuation={fast},exact={exact}"));
                    }
                }
            }
            let recomputed = a200144_term_with(DivisibilityPath::Exact, n)?.a_n;
            if recomputed != a_n {
                r.violation(n, None, None, format!("a(n)_valuation={a_n},a(n)_exact={recomputed}"));
            }
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(merged("oracle", format!("n=1..{n_max}"), parts))
}

/// Scans `a(1..=n_max)` for decreases. Equal neighbours are reported as
/// notes; only a strict decrease is a violation.
pub fn monotone_check(n_max: u32) -> Result<CheckReport> {
    Ok(monotone_report(n_max)?.0)
}

/// [`monotone_check`] together with the list of `n` where `a(n+1) = a(n)`.
pub fn monotone_report(n_max: u32) -> Result<(CheckReport, Vec<u32>)> {
    if n_max < 2 {
        return Err(domain("monotone_check", format!("n_max must be >= 2 (got n_max = {n_max})")));
    }
    let terms = a200144_range(n_max)?;
    let mut report = CheckReport::new("monotone", format!("n=1..{n_max}"));
    let mut equal_at = Vec::new();
    for w in terms.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        report.items_checked += 1;
        if hi.a_n < lo.a_n {
            report.violation(lo.n, None, None, format!("a({})={}>a({})={}", lo.n, lo.a_n, hi.n, hi.a_n));
        } else if hi.a_n == lo.a_n {
            equal_at.push(lo.n);
            report
                .notes
                .push(format!("equality a({})=a({})={}", lo.n, hi.n, lo.a_n));
        }
    }
    Ok((report, equal_at))
}

fn scan(name: &str, n_max: u32, check: fn(u32) -> Result<CheckReport>) -> Result<CheckReport> {
    if n_max < 1 {
        return Err(domain("scan", "n_max must be >= 1 (got n_max = 0)"));
    }
    let parts = (1..=n_max)
        .into_par_iter()
        .map(check)
        .collect::<Result<Vec<_>>>()?;
    Ok(merged(name, format!("n=1..{n_max}"), parts))
}

/// The checks selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Theorem1,
    Theorem2,
    Corollary,
    Oracle,
    Monotone,
}

impl CheckKind {
    pub const ALL: [CheckKind; 5] = [
        CheckKind::Theorem1,
        CheckKind::Theorem2,
        CheckKind::Corollary,
        CheckKind::Oracle,
        CheckKind::Monotone,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Theorem1 => "theorem1",
            CheckKind::Theorem2 => "theorem2",
            CheckKind::Corollary => "corollary",
            CheckKind::Oracle => "oracle",
            CheckKind::Monotone => "monotone",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Self::ALL.iter().map(|c| c.name()).collect();
                format!("unknown check `{s}`; valid checks: {}", names.join(", "))
            })
    }
}

/// Number of random `(a, p)` pairs drawn by the `theorem1` check.
pub const THEOREM1_TRIALS: u32 = 100;

/// Runs one named check over `1..=n_max`. `seed` only affects `theorem1`.
pub fn run_check(kind: CheckKind, n_max: u32, seed: u64) -> Result<CheckReport> {
    match kind {
        CheckKind::Theorem1 => theorem1_random(seed, THEOREM1_TRIALS, n_max),
        CheckKind::Theorem2 => theorem2_scan(n_max),
        CheckKind::Corollary => corollary_scan(n_max),
        CheckKind::Oracle => oracle_check(n_max),
        CheckKind::Monotone => monotone_check(n_max),
    }
}

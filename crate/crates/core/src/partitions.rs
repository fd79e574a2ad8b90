//! Partitions of `n` into exactly `k` parts.
//!
//! Enumeration follows Hindenburg's procedure as presented in Knuth's
//! *Algorithm H*: parts are kept in non-increasing order internally and the
//! stream is published with parts ascending, which makes the output order
//! colexicographic in the internal form (lexicographic in the ascending form).

use std::fmt;
use std::sync::RwLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{check_parts_bounds, Result};

/// A partition of `n` into exactly `k` positive parts, stored non-decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionK {
    parts: Vec<u32>,
    n: u32,
}

impl PartitionK {
    /// Builds a partition from parts given in any order.
    ///
    /// Returns `None` if a part is zero or the list is empty.
    pub fn from_parts(mut parts: Vec<u32>) -> Option<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return None;
        }
        parts.sort_unstable();
        let n = parts.iter().map(|&p| u64::from(p)).sum::<u64>();
        let n = u32::try_from(n).ok()?;
        Some(Self { parts, n })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn profile(&self) -> MultiplicityProfile {
        MultiplicityProfile::from_sorted(&self.parts)
    }

    /// True when the ordering, length and sum invariants all hold.
    pub fn is_valid(&self) -> bool {
        !self.parts.is_empty()
            && self.parts[0] >= 1
            && self.parts.windows(2).all(|w| w[0] <= w[1])
            && self.parts.iter().map(|&p| u64::from(p)).sum::<u64>() == u64::from(self.n)
    }
}

impl fmt::Display for PartitionK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Repetition counts of the distinct parts of a partition.
///
/// Entries are `(value, multiplicity)` with values strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplicityProfile {
    entries: Vec<(u32, u32)>,
}

impl MultiplicityProfile {
    /// Run-length encodes a slice whose equal values are adjacent.
    ///
    /// The slice may be sorted either way; entries are always stored with
    /// values increasing.
    pub fn from_sorted(parts: &[u32]) -> Self {
        let mut entries: Vec<(u32, u32)> = Vec::new();
        for &p in parts {
            match entries.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => entries.push((p, 1)),
            }
        }
        if entries.len() > 1 && entries[0].0 > entries[1].0 {
            entries.reverse();
        }
        Self { entries }
    }

    /// Builds a profile from explicit `(value, multiplicity)` pairs.
    ///
    /// Returns `None` unless values are strictly increasing and every value
    /// and multiplicity is positive.
    pub fn from_entries(entries: Vec<(u32, u32)>) -> Option<Self> {
        let ok = !entries.is_empty()
            && entries.iter().all(|&(v, m)| v >= 1 && m >= 1)
            && entries.windows(2).all(|w| w[0].0 < w[1].0);
        ok.then_some(Self { entries })
    }

    pub fn entries(&self) -> &[(u32, u32)] {
        &self.entries
    }

    pub fn multiplicities(&self) -> impl Iterator<Item = u32> + '_ {
        self.entries.iter().map(|&(_, m)| m)
    }

    /// Number of parts of the source partition.
    pub fn k(&self) -> u32 {
        self.multiplicities().sum()
    }

    /// Sum of the source partition.
    pub fn n(&self) -> u64 {
        self.entries
            .iter()
            .map(|&(v, m)| u64::from(v) * u64::from(m))
            .sum()
    }
}

impl fmt::Display for MultiplicityProfile {
    /// Prints the multiplicities only, e.g. `(2,1,1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.multiplicities().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

pub fn multiplicity_profile(p: &PartitionK) -> MultiplicityProfile {
    p.profile()
}

/// Hindenburg generator state for partitions of `n` into `k` parts.
///
/// [`advance`](Self::advance) exposes the current partition as a borrowed
/// non-increasing slice without allocating; the [`Iterator`] impl wraps it
/// and yields owned [`PartitionK`] values in ascending form.
#[derive(Debug, Clone)]
pub struct Partitions {
    // a[0..k] holds the parts, non-increasing.
    a: Vec<u32>,
    n: u32,
    started: bool,
    done: bool,
}

impl Partitions {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        check_parts_bounds("enumerate_partitions", n, k)?;
        let mut a = vec![1; k as usize];
        a[0] = n - k + 1;
        Ok(Self {
            a,
            n,
            started: false,
            done: false,
        })
    }

    /// Steps to the next partition and returns its parts, largest first.
    pub fn advance(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.a);
        }
        let m = self.a.len();
        if m < 2 {
            self.done = true;
            return None;
        }
        let a = &mut self.a;
        // Cheap step: move one unit from the largest part to the second.
        if a[1] + 1 < a[0] {
            a[0] -= 1;
            a[1] += 1;
            return Some(&self.a);
        }
        // Find the leftmost j >= 2 with a[j] < a[0] - 1.
        let mut j = 2;
        let mut s = a[0] + a[1] - 1;
        while j < m && a[j] + 1 >= a[0] {
            s += a[j];
            j += 1;
        }
        if j >= m {
            self.done = true;
            return None;
        }
        let x = a[j] + 1;
        a[j] = x;
        for slot in a[1..j].iter_mut().rev() {
            *slot = x;
            s -= x;
        }
        a[0] = s;
        Some(&self.a)
    }
}

impl Iterator for Partitions {
    type Item = PartitionK;

    fn next(&mut self) -> Option<PartitionK> {
        let n = self.n;
        self.advance().map(|desc| PartitionK {
            parts: desc.iter().rev().copied().collect(),
            n,
        })
    }
}

/// Streams every partition of `n` into exactly `k` parts.
pub fn enumerate_partitions(n: u32, k: u32) -> Result<Partitions> {
    Partitions::new(n, k)
}

/// Memoized table of `p(n, k)`, the number of partitions of `n` into exactly
/// `k` parts.
///
/// Rows are filled lazily under a write lock; lookups of computed rows only
/// take the read lock, so a counter can be shared across threads.
#[derive(Debug, Default)]
pub struct PartitionCounter {
    // rows[n][k] for k in 0..=n.
    rows: RwLock<Vec<Vec<BigUint>>>,
}

impl PartitionCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&self, n: u32, k: u32) -> BigUint {
        if k > n {
            return BigUint::zero();
        }
        let (n, k) = (n as usize, k as usize);
        {
            let rows = self.rows.read().expect("partition table poisoned");
            if let Some(row) = rows.get(n) {
                return row[k].clone();
            }
        }
        let mut rows = self.rows.write().expect("partition table poisoned");
        while rows.len() <= n {
            let m = rows.len();
            let mut row = vec![BigUint::zero(); m + 1];
            if m == 0 {
                row[0] = BigUint::one();
            } else {
                for j in 1..=m {
                    // p(m, j) = p(m-1, j-1) + p(m-j, j)
                    let mut v = rows[m - 1].get(j - 1).cloned().unwrap_or_default();
                    if let Some(x) = rows[m - j].get(j) {
                        v += x;
                    }
                    row[j] = v;
                }
            }
            rows.push(row);
        }
        rows[n][k].clone()
    }

    /// `p(n)` as the sum of `p(n, k)` over `k`.
    pub fn total(&self, n: u32) -> BigUint {
        if n == 0 {
            return BigUint::one();
        }
        (1..=n).map(|k| self.count(n, k)).sum()
    }
}

/// Number of partitions of `n` into exactly `k` parts; zero outside the
/// domain, with `p(0, 0) = 1`.
pub fn count_partitions_k(n: u32, k: u32) -> BigUint {
    PartitionCounter::new().count(n, k)
}

/// The partition function `p(n)` via Euler's pentagonal number recurrence.
pub fn partition_count(n: u32) -> BigUint {
    pentagonal_table(n).pop().expect("table has n + 1 entries")
}

/// `p(0..=n_max)` via the pentagonal number recurrence.
pub fn pentagonal_table(n_max: u32) -> Vec<BigUint> {
    let len = n_max as usize + 1;
    let mut table: Vec<BigInt> = Vec::with_capacity(len);
    table.push(BigInt::one());
    for i in 1..len {
        let mut sum = BigInt::zero();
        for j in 1usize.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = j * (3 * j + 1) / 2;
            let mut term = table[i - g1].clone();
            if g2 <= i {
                term += &table[i - g2];
            }
            if j % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        table.push(sum);
    }
    table
        .into_iter()
        .map(|v| v.to_biguint().expect("p(n) is non-negative"))
        .collect()
}

/// `p(n)` summed over part counts, the second route to [`partition_count`].
pub fn partition_count_by_parts(n: u32) -> BigUint {
    PartitionCounter::new().total(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ascending(n: u32, k: u32) -> Vec<Vec<u32>> {
        enumerate_partitions(n, k)
            .unwrap()
            .map(|p| p.parts().to_vec())
            .collect()
    }

    fn brute_three_parts(n: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for a in 1..=n {
            for b in a..=n {
                for c in b..=n {
                    if a + b + c == n {
                        out.push(vec![a, b, c]);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn seven_into_four() {
        assert_eq!(
            ascending(7, 4),
            vec![vec![1, 1, 1, 4], vec![1, 1, 2, 3], vec![1, 2, 2, 2]]
        );
    }

    #[test]
    fn extreme_part_counts() {
        assert_eq!(ascending(5, 1), vec![vec![5]]);
        assert_eq!(ascending(5, 5), vec![vec![1; 5]]);
        assert_eq!(ascending(1, 1), vec![vec![1]]);
    }

    #[test]
    fn ten_into_three_matches_brute_force() {
        let brute = brute_three_parts(10);
        assert_eq!(brute.len(), 8);
        // Brute force emits lexicographic ascending tuples, which is the
        // colex order of the non-increasing form.
        assert_eq!(ascending(10, 3), brute);
        assert_eq!(count_partitions_k(10, 3), BigUint::from(8u32));
    }

    #[test]
    fn knuth_eleven_into_four_order() {
        let desc: Vec<Vec<u32>> = ascending(11, 4)
            .into_iter()
            .map(|mut v| {
                v.reverse();
                v
            })
            .collect();
        let expected = [
            [8, 1, 1, 1],
            [7, 2, 1, 1],
            [6, 3, 1, 1],
            [5, 4, 1, 1],
            [6, 2, 2, 1],
            [5, 3, 2, 1],
            [4, 4, 2, 1],
            [4, 3, 3, 1],
            [5, 2, 2, 2],
            [4, 3, 2, 2],
            [3, 3, 3, 2],
        ];
        assert_eq!(desc, expected.map(|a| a.to_vec()).to_vec());
    }

    #[test]
    fn bounds_are_rejected() {
        for (n, k, needle) in [(0, 0, "n must be"), (5, 0, "k must be >= 1"), (3, 4, "k must be <= n")] {
            let err = enumerate_partitions(n, k).unwrap_err().to_string();
            assert!(err.contains(needle), "{err}");
        }
    }

    #[test]
    fn counts_at_the_edges() {
        assert_eq!(count_partitions_k(0, 0), BigUint::one());
        assert!(count_partitions_k(3, 0).is_zero());
        assert!(count_partitions_k(0, 3).is_zero());
        assert!(count_partitions_k(3, 4).is_zero());
        assert_eq!(count_partitions_k(7, 4), BigUint::from(3u32));
        for n in 1..=30 {
            assert_eq!(count_partitions_k(n, n), BigUint::one());
        }
    }

    #[test]
    fn partition_function_small_values() {
        assert_eq!(partition_count(0), BigUint::one());
        assert_eq!(partition_count(1), BigUint::one());
        assert_eq!(partition_count(7), BigUint::from(15u32));
        assert_eq!(partition_count_by_parts(0), BigUint::one());
    }

    #[test]
    fn partition_function_exceeds_u64() {
        // p(500) has 22 digits.
        let p = partition_count(500);
        assert_eq!(p.to_string(), "2300165032574323995027");
        assert_eq!(p, partition_count_by_parts(500));
    }

    #[test]
    fn profiles() {
        let prof = |v: Vec<u32>| PartitionK::from_parts(v).unwrap().profile();
        assert_eq!(prof(vec![1, 1, 1, 4]).entries(), &[(1, 3), (4, 1)]);
        assert_eq!(prof(vec![1, 1, 2, 3]).entries(), &[(1, 2), (2, 1), (3, 1)]);
        assert_eq!(prof(vec![5]).entries(), &[(5, 1)]);
        assert_eq!(prof(vec![1, 2, 2, 2]).to_string(), "(1,3)");
        // Descending input gives the same profile.
        assert_eq!(
            MultiplicityProfile::from_sorted(&[4, 1, 1, 1]),
            prof(vec![1, 1, 1, 4])
        );
    }

    #[test]
    fn counter_is_shareable() {
        let counter = PartitionCounter::new();
        std::thread::scope(|s| {
            for n in [40u32, 25, 33, 12] {
                let c = &counter;
                s.spawn(move || {
                    for k in 1..=n {
                        assert_eq!(c.count(n, k), count_partitions_k(n, k));
                    }
                });
            }
        });
    }
}

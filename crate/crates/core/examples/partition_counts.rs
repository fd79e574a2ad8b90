//! p(n, k) table for small n, and p(n) by the pentagonal recurrence checked
//! against the sum over k.

use a200144::partitions::partition_count_by_parts;
use a200144::{partition_count, PartitionCounter};

fn main() {
    let counter = PartitionCounter::new();
    println!("p(n, k) for n <= 12:");
    for n in 1..=12u32 {
        let row: Vec<String> = (1..=n).map(|k| counter.count(n, k).to_string()).collect();
        println!("{n:>3}: {}", row.join(" "));
    }
    for n in [10u32, 100, 400, 1000] {
        let p = partition_count(n);
        assert_eq!(p, partition_count_by_parts(n));
        println!("p({n}) = {p}");
    }
}

//! Prints a(1..=N) and the ratio a(n) / p(n).
//!
//! cargo run --example sequence_terms -- 30

use a200144::{a200144_range, partition_count};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max: u32 = std::env::args().nth(1).map_or(Ok(30), |s| s.parse())?;
    println!("{:>4} {:>10} {:>10} {:>7}", "n", "a(n)", "p(n)", "ratio");
    for t in a200144_range(n_max)? {
        let p = partition_count(t.n);
        let ratio = t.a_n as f64 / p.to_string().parse::<f64>()?;
        println!("{:>4} {:>10} {:>10} {:>7.4}", t.n, t.a_n, p, ratio);
    }
    Ok(())
}

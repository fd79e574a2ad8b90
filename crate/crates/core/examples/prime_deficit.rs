//! Compares a(n) with p(n) - 1. Primes always give deficit zero; the scan
//! shows whether anything else does in the given range.
//!
//! cargo run --release --example prime_deficit -- 60

use num_traits::Zero;

use a200144::prime_scan;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max: u32 = std::env::args().nth(1).map_or(Ok(40), |s| s.parse())?;
    let mut surprises = Vec::new();
    for r in prime_scan(n_max)? {
        if r.is_unit() {
            continue;
        }
        let tag = if r.prime { "prime" } else { "" };
        println!("{:>4} deficit {:>8} {tag}", r.n, r.deficit);
        if r.deficit.is_zero() != r.prime {
            surprises.push(r.n);
        }
    }
    if surprises.is_empty() {
        println!("deficit 0 exactly at the primes in 2..={n_max}");
    } else {
        println!("deficit 0 and primality disagree at {surprises:?}");
    }
    Ok(())
}

//! Walks through n = 7, k = 4 step by step: partitions, multiplicities,
//! multinomial coefficients and the divisibility decision.

use a200144::{count_divisible, divides_multinomial, enumerate_partitions, multinomial};

fn main() -> a200144::Result<()> {
    let (n, k) = (7, 4);
    println!("partitions of {n} into {k} parts:");
    for part in enumerate_partitions(n, k)? {
        let profile = part.profile();
        let b = multinomial(&profile);
        let ok = divides_multinomial(u64::from(k), &profile)?;
        println!(
            "  {part}  multiplicities {profile}  b = {k}!/.. = {b}  b/{k} = {}{}",
            &b / k,
            if ok { "  (counted)" } else { "" }
        );
    }
    println!("count_divisible({n}, {k}) = {}", count_divisible(n, k)?);
    Ok(())
}

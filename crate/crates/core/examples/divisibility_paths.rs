//! Decides k | b(π) two ways for one partition: with Legendre valuations
//! (no factorials) and with the exact big-integer multinomial.
//!
//! cargo run --example divisibility_paths -- 1 1 1 2 2 3 3 3 3

use a200144::{
    divides_multinomial, divides_multinomial_exact, factorize, multinomial, multinomial_valuation,
    PartitionK,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let parts: Vec<u32> = std::env::args()
        .skip(1)
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let parts = if parts.is_empty() { vec![1, 1, 1, 2, 2, 3, 3, 3, 3] } else { parts };
    let part = PartitionK::from_parts(parts).ok_or("parts must be positive")?;
    let profile = part.profile();
    let k = u64::from(part.k());

    println!("partition {part} of n = {}, k = {k}", part.n());
    println!("multiplicities {profile}, b = {}", multinomial(&profile));
    println!("k = {}", factorize(k));
    for &(p, e) in factorize(k).factors() {
        let v = multinomial_valuation(p, &profile)?;
        println!("  v_{p}(b) = {v}, need {e}: {}", if v >= u64::from(e) { "ok" } else { "short" });
    }
    println!("valuation route: {}", divides_multinomial(k, &profile)?);
    println!("exact route:     {}", divides_multinomial_exact(k, &profile)?);
    Ok(())
}

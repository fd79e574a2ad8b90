//! Writes an OEIS b-file for a(1..=N) and reads it back.
//!
//! cargo run --release --example bfile_export -- 60 b200144.txt

use std::path::PathBuf;

use a200144::a200144_range;
use a200144::cli::{parse_bfile, write_bfile};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n_max: u32 = args.next().map_or(Ok(40), |s| s.parse())?;
    let path = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("b200144.txt"));

    let terms = a200144_range(n_max)?;
    write_bfile(&path, &terms)?;
    let text = std::fs::read_to_string(&path)?;
    assert_eq!(parse_bfile(&text).as_deref(), Some(&terms[..]));
    println!("wrote {} terms to {}", terms.len(), path.display());
    Ok(())
}

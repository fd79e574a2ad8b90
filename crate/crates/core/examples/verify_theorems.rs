//! Runs every verification check and prints the text reports.
//!
//! cargo run --release --example verify_theorems -- 30 7

use a200144::verify::run_check;
use a200144::CheckKind;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n_max: u32 = args.next().map_or(Ok(30), |s| s.parse())?;
    let seed: u64 = args.next().map_or(Ok(1), |s| s.parse())?;
    let mut all_passed = true;
    for kind in CheckKind::ALL {
        // The composition cross-check in theorem1 is capped at n = 12.
        let n = if kind == CheckKind::Theorem1 { n_max.min(12) } else { n_max };
        let report = run_check(kind, n, seed)?;
        all_passed &= report.passed();
        print!("{report}");
    }
    std::process::exit(if all_passed { 0 } else { 1 });
}

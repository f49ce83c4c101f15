//! Run one proof pipeline and print its report.
//!
//! `cargo run --release --example verify_conjecture -- 1.6`

use qrank::cli::report_text;
use qrank::proofcheck::{self, ConjectureOptions};
use qrank::Inequality;

fn main() -> qrank::Result<()> {
    let id: Inequality = std::env::args().nth(1).unwrap_or_else(|| "1.7".into()).parse()?;
    let opts = ConjectureOptions {
        threshold_max: 100_000,
        ..ConjectureOptions::default()
    };
    let report = proofcheck::verify_conjecture(id, &opts)?;
    print!("{}", report_text(&report));
    if let Some(step) = report.first_failure() {
        println!("first failing step: {}", step.name);
    }
    Ok(())
}

//! Numeric probes of the inequalities that remain open.

use qrank::proofcheck;
use qrank::Inequality;

fn main() -> qrank::Result<()> {
    let n_max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(60);
    for id in [Inequality::M2OneTwo, Inequality::M2OneTwoShifted, Inequality::M2Mod6] {
        let report = proofcheck::probe_open(id, n_max)?;
        let step = &report.steps[0];
        println!("{id}: {:?} ({}) {}", report.status, report.label.as_deref().unwrap_or(""), step.detail);
    }
    Ok(())
}

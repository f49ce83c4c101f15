//! Build a report document by hand and round-trip it through JSON.

use qrank::cli::{Payload, ReportDocument, SeriesPayload};
use qrank::proofcheck;
use qrank::Inequality;

fn main() -> qrank::Result<()> {
    let gen3 = proofcheck::rhs_series(Inequality::M2ZeroOne, 8)?;
    let doc = ReportDocument::new(
        "series",
        [("expr".to_string(), serde_json::json!("gen3"))].into(),
        vec![Payload::Series(SeriesPayload::new("gen3", &gen3))],
    );
    let json = doc.to_json();
    println!("{json}");
    let back = ReportDocument::from_json(&json).expect("valid JSON");
    assert_eq!(back, doc);
    println!("round trip ok, exit code {}", back.exit_code());
    Ok(())
}

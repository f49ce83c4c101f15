use std::process::{Command, Output};

use qrank::cli::{OverallStatus, Payload, ReportDocument, SeriesPayload, TablePayload};
use qrank::partitions;
use qrank::proofcheck::{self, ReportStatus};
use qrank::{Identity, RankKind, Series};
use serde_json::Value;

fn qrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qrank")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema_check(json: &str) {
    let schema: Value =
        serde_json::from_str(include_str!("../../../docs/report.schema.json")).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let instance: Value = serde_json::from_str(json).unwrap();
    let errors: Vec<String> = validator.iter_errors(&instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
}

fn round_trip(json: &str) -> ReportDocument {
    let doc = ReportDocument::from_json(json).unwrap();
    let again = ReportDocument::from_json(&doc.to_json()).unwrap();
    assert_eq!(doc, again);
    doc
}

#[test]
fn unknown_id_is_a_usage_error() {
    assert_eq!(qrank(&["verify", "9.9"]).status.code(), Some(2));
    assert_eq!(qrank(&["series", "gen7"]).status.code(), Some(2));
    assert_eq!(qrank(&["ranktable", "crank", "5", "10"]).status.code(), Some(2));
    assert_eq!(qrank(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn open_probe_is_numeric_evidence() {
    let o = qrank(&["verify", "1.8", "--n-max", "60", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let json = stdout(&o);
    schema_check(&json);
    let doc = round_trip(&json);
    assert_eq!(doc.overall_status, OverallStatus::NumericEvidence);
    let Payload::Proof(r) = &doc.results[0] else { panic!() };
    assert_eq!(r.label.as_deref(), Some(proofcheck::NUMERIC_EVIDENCE));
}

#[test]
fn passing_pipelines_exit_zero() {
    let o = qrank(&["verify", "1.6", "1.7", "T2.2a", "--threshold-max", "10000", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let json = stdout(&o);
    schema_check(&json);
    let doc = round_trip(&json);
    assert_eq!(doc.overall_status, OverallStatus::Pass);
    assert_eq!(doc.results.len(), 3);
}

#[test]
fn failing_base_case_exits_one_with_witness() {
    let o = qrank(&["verify", "1.4", "--threshold-max", "1000", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let json = stdout(&o);
    schema_check(&json);
    let v: Value = serde_json::from_str(&json).unwrap();
    let step = v["results"][0]["steps"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["status"] == "fail")
        .unwrap();
    assert_eq!(step["name"], "finite-check");
    assert_eq!(step["witness"]["n"], 1);
}

#[test]
fn text_report_names_every_step() {
    let o = qrank(&["verify", "1.6", "--threshold-max", "100"]);
    let text = stdout(&o);
    for step in ["split", "product-rewrite", "threshold", "finite-check", "oracle", "dissection"] {
        assert!(text.contains(&format!("] {step} (")), "{step} missing from\n{text}");
    }
    assert!(text.ends_with("overall: pass\n"));
}

#[test]
fn series_text_output() {
    let o = qrank(&["series", "L_3_10", "--order", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 20);
    assert_eq!(lines[0], "0 1");
    for (i, l) in lines.iter().enumerate() {
        let (e, c) = l.split_once(' ').unwrap();
        assert_eq!(e.parse::<usize>().unwrap(), i);
        assert!(c.parse::<u64>().is_ok(), "{l}");
    }

    let gen1 = stdout(&qrank(&["series", "gen1", "--order", "10"]));
    assert!(gen1.lines().all(|l| l.split_once(' ').unwrap().1.parse::<u64>().unwrap() > 0));

    let t1 = stdout(&qrank(&["series", "T1@1.4", "--order", "10"]));
    let nonzero: Vec<&str> = t1.lines().filter(|l| !l.ends_with(" 0")).collect();
    assert_eq!(nonzero, ["2 1", "4 1", "6 1", "8 1"]);
}

#[test]
fn series_json_output() {
    let o = qrank(&["series", "theta_5/2_1/2", "--order", "12", "--format", "json"]);
    let json = stdout(&o);
    schema_check(&json);
    let doc = round_trip(&json);
    let Payload::Series(s) = &doc.results[0] else { panic!() };
    let ones: Vec<i64> = s.terms.iter().filter(|t| !num_traits::Zero::is_zero(&t.coefficient)).map(|t| t.exponent).collect();
    assert_eq!(ones, [0, 2, 3, 9, 11]);
}

#[test]
fn ranktable_rows() {
    let csv = stdout(&qrank(&["ranktable", "dyson", "5", "24"]));
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,0,1,2,3,4");
    assert_eq!(lines[5], "4,1,1,1,1,1");

    let csv = stdout(&qrank(&["ranktable", "m2", "10", "4"]));
    assert_eq!(csv.lines().nth(5), Some("4,1,1,0,0,0,0,0,0,0,1"));

    let csv = stdout(&qrank(&["ranktable", "dyson", "10", "0"]));
    assert_eq!(csv, "n,0,1,2,3,4,5,6,7,8,9\n0,1,0,0,0,0,0,0,0,0,0\n");

    let o = qrank(&["ranktable", "dyson", "7", "40", "--format", "json"]);
    let json = stdout(&o);
    schema_check(&json);
    round_trip(&json);
}

#[test]
fn infeasible_table_is_a_resource_error() {
    let o = qrank(&["ranktable", "m2", "10", "500"]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("n_max <= 110"), "{err}");
    assert_eq!(qrank(&["ranktable", "dyson", "10", "5000"]).status.code(), Some(3));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("qrank-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t22b.json");
    let o = qrank(&["verify", "T2.2b", "--order", "60", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let json = std::fs::read_to_string(&path).unwrap();
    schema_check(&json);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reports_are_deterministic_apart_from_time() {
    let strip = |json: &str| {
        let mut v: Value = serde_json::from_str(json).unwrap();
        v["timestamp"] = Value::Null;
        for r in v["results"].as_array_mut().unwrap() {
            for s in r["steps"].as_array_mut().unwrap() {
                s["elapsed_ms"] = Value::Null;
            }
        }
        v
    };
    let args = ["verify", "T2.3", "1.9", "--order", "40", "--n-max", "40", "--format", "json"];
    assert_eq!(strip(&stdout(&qrank(&args))), strip(&stdout(&qrank(&args))));
}

#[test]
fn payloads_round_trip_in_memory() {
    let s = Series::from_rationals(
        -2,
        &[num_rational::BigRational::new(3.into(), 7.into()), num_rational::BigRational::new((-1).into(), 2.into())],
    )
    .unwrap();
    let t = partitions::rank_table_enum(RankKind::M2, 6, 12).unwrap();
    let r = proofcheck::verify_theorem(Identity::RankOneTwo, 40).unwrap();
    assert_eq!(r.status, ReportStatus::Pass);
    let doc = ReportDocument::new(
        "mixed",
        Default::default(),
        vec![
            Payload::Series(SeriesPayload::new("x", &s)),
            Payload::RankTable(TablePayload::new(&t, "enumeration")),
            Payload::Proof(r),
        ],
    );
    let json = doc.to_json();
    assert!(json.contains("\"3/7\"") && json.contains("\"-1/2\""));
    assert_eq!(ReportDocument::from_json(&json).unwrap(), doc);
}

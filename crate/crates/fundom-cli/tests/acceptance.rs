//! Acceptance check for the command line surface: identical invocations
//! produce byte-identical output, documents round-trip, and exit codes
//! distinguish usage errors from runtime errors.

use std::fs;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fundom"))
        .args(args)
        .output()
        .expect("spawn fundom")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn doc_of(args: &[&str]) -> Value {
    serde_json::from_str(&stdout_of(args)).expect("valid json document")
}

#[test]
fn criterion_10_cli_determinism() {
    // golden reruns are byte-identical
    let poincare = stdout_of(&["poincare", "1", "2", "--mode", "both"]);
    assert_eq!(
        poincare,
        stdout_of(&["poincare", "1", "2", "--mode", "both"])
    );
    let fixed = stdout_of(&["fixed-points", "1", "1"]);
    assert_eq!(fixed, stdout_of(&["fixed-points", "1", "1"]));
    let series = stdout_of(&["series", "4"]);
    assert_eq!(series, stdout_of(&["series", "4"]));

    // frozen content
    let doc: Value = serde_json::from_str(&poincare).unwrap();
    assert_eq!(doc["schema_version"], json!("1"));
    assert_eq!(doc["payload"]["equal"], json!(true));
    assert_eq!(
        doc["payload"]["closed"]["q"]["coefficients"],
        json!([1, 1, 3, 4, 1])
    );
    assert_eq!(doc["payload"]["closed"], doc["payload"]["pipeline"]);
    assert_eq!(doc["metadata"]["swapped"], json!(false));

    let doc: Value = serde_json::from_str(&fixed).unwrap();
    assert_eq!(doc["payload"]["count"], json!(7));
    let expected: Vec<Vec<i64>> = fundom::paving::fundamental_fixed_points(
        &fundom::weyl::RootValuation::new(vec![1, 1]).unwrap(),
    )
    .unwrap()
    .iter()
    .map(|p| p.coords().to_vec())
    .collect();
    let listed: Vec<Vec<i64>> = doc["payload"]["points"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| {
            p["x"]
                .as_array()
                .unwrap()
                .iter()
                .map(|c| c.as_i64().unwrap())
                .collect()
        })
        .collect();
    assert_eq!(listed, expected);

    let doc: Value = serde_json::from_str(&series).unwrap();
    assert_eq!(doc["payload"]["equal"], json!(true));
    assert_eq!(doc["payload"]["mismatch"], Value::Null);
    let cells = doc["payload"]["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 6);
    assert_eq!(cells[0]["u1"], json!(1));
    assert_eq!(cells[0]["u2"], json!(1));
    assert_eq!(cells[0]["rational"], json!([1, 0, 1, 0, 4, 0, 1]));
    assert_eq!(cells[0]["rational"], cells[0]["direct"]);

    // symmetry normalization is echoed, not silently applied
    let swapped = doc_of(&["poincare", "2", "1", "--mode", "both"]);
    let sorted = doc_of(&["poincare", "1", "2", "--mode", "both"]);
    assert_eq!(swapped["metadata"]["swapped"], json!(true));
    assert_eq!(swapped["payload"], sorted["payload"]);
    assert_eq!(swapped["inputs"]["n1"], json!(2));

    // svg render is byte-identical across runs and self-contained
    let dir = std::env::temp_dir().join(format!("fundom-cli-test-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let first = dir.join("first.svg");
    let second = dir.join("second.svg");
    for (path, name) in [(&first, "first"), (&second, "second")] {
        let out = run(&["svg", "hexagon", "1", "2", path.to_str().unwrap()]);
        assert!(out.status.success(), "svg render {name} failed");
    }
    let bytes = fs::read(&first).unwrap();
    assert_eq!(bytes, fs::read(&second).unwrap());
    let text = String::from_utf8(bytes).unwrap();
    assert!(text.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
    assert!(text.contains("231 (2, 0, 2)"));
    assert!(text.ends_with("</svg>\n"));
    fs::remove_dir_all(&dir).ok();

    // exit codes: 2 for usage errors, 1 for runtime failures, 0 for success
    assert_eq!(run(&["poincare", "0", "1"]).status.code(), Some(2));
    assert_eq!(run(&["series", "0"]).status.code(), Some(2));
    assert_eq!(run(&["series", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&["poincare", "1", "2", "--format", "csv"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["classify", "1", "1", "1", "1", "1", "--scale", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        run(&["svg", "hexagon", "1", "2", "/nonexistent-dir/x.svg"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["classify", "1", "1", "10", "-5", "-2"]).status.code(),
        Some(0)
    );

    // the classify document reports the frozen stratum
    let doc = doc_of(&["classify", "1", "1", "10", "-5", "-2"]);
    assert_eq!(doc["payload"]["label"], json!("B(231)"));
    let doc = doc_of(&["classify", "1", "1", "10", "-4", "-3"]);
    assert_eq!(doc["payload"]["label"], json!("P(1|23)"));

    println!(
        "criterion 10: PASS command line output is deterministic, round-trips, and exits correctly"
    );
}

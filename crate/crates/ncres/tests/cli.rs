use std::fs;

use ncres::cli::{run_cli, EXIT_OK, EXIT_USAGE};
use ncres::report::SCHEMA;

fn run(args: &[&str]) -> i32 {
    run_cli(std::iter::once("ncres").chain(args.iter().copied()))
}

#[test]
fn reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let args = |p: &std::path::Path| {
        vec![
            "--theorem",
            "all",
            "--oracle",
            "both",
            "--m-max",
            "3",
            "--out",
        ]
        .into_iter()
        .map(String::from)
        .chain([p.display().to_string()])
        .collect::<Vec<_>>()
    };
    for p in [&a, &b] {
        let v = args(p);
        assert_eq!(
            run(&v.iter().map(String::as_str).collect::<Vec<_>>()),
            EXIT_OK
        );
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn report_validates_against_schema() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    assert_eq!(
        run(&[
            "--m-max",
            "2",
            "--samples",
            "1",
            "--out",
            out.to_str().unwrap()
        ]),
        EXIT_OK
    );
    let schema: serde_json::Value = serde_json::from_str(SCHEMA).unwrap();
    let report: serde_json::Value = serde_json::from_slice(&fs::read(&out).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator
        .iter_errors(&report)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{errors:?}");
    assert_eq!(report["schema"], "ncres-report/1");
}

#[test]
fn single_case_report_is_schema_valid_and_split() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    assert_eq!(
        run(&[
            "--theorem",
            "2",
            "--case",
            "IV",
            "--oracle",
            "exact",
            "--out",
            out.to_str().unwrap()
        ]),
        EXIT_OK
    );
    let report: serde_json::Value = serde_json::from_slice(&fs::read(&out).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&serde_json::from_str(SCHEMA).unwrap()).unwrap();
    assert!(validator.is_valid(&report));
    let labels: Vec<&str> = report["entries"][0]["subterms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["label"].as_str().unwrap())
        .collect();
    assert_eq!(labels, ["A1", "A2", "A3"]);
}

#[test]
fn degenerate_run_has_zero_totals() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    assert_eq!(
        run(&[
            "--theorem",
            "1",
            "--m-min",
            "1",
            "--m-max",
            "1",
            "--out",
            out.to_str().unwrap()
        ]),
        EXIT_OK
    );
    let report: serde_json::Value = serde_json::from_slice(&fs::read(&out).unwrap()).unwrap();
    assert_eq!(report["entries"][0]["totals"], serde_json::json!([]));
}

#[test]
fn markdown_mirrors_the_run() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.md");
    assert_eq!(
        run(&[
            "--theorem",
            "3",
            "--m-max",
            "2",
            "--oracle",
            "exact",
            "--format",
            "markdown",
            "--out",
            out.to_str().unwrap()
        ]),
        EXIT_OK
    );
    let md = fs::read_to_string(out).unwrap();
    assert!(md.contains("## T3 at m = 2"));
    assert!(md.contains("### Coefficient errata"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["--bogus"]), EXIT_USAGE);
    assert_eq!(run(&["--m-min", "0"]), EXIT_USAGE);
    assert_eq!(run(&["--m-min", "3", "--m-max", "2"]), EXIT_USAGE);
    assert_eq!(run(&["--tolerance", "-1"]), EXIT_USAGE);
    assert_eq!(run(&["--theorem", "4"]), EXIT_USAGE);
}

#[test]
fn unwritable_path_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("missing").join("r.json");
    assert_eq!(
        run(&[
            "--m-max",
            "1",
            "--oracle",
            "exact",
            "--out",
            out.to_str().unwrap()
        ]),
        EXIT_USAGE
    );
    assert!(!out.exists());
}

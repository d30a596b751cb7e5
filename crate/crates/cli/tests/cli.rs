use std::process::{Command, Output};

use serde_json::Value;

fn resproj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_resproj"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = resproj(&all);
    serde_json::from_str(&stdout(&out)).unwrap_or_else(|e| panic!("{e}: {}", stdout(&out)))
}

#[test]
fn resultant_of_circle_and_line() {
    let out = resproj(&[
        "resultant",
        "--vars",
        "x,y",
        "--eliminate",
        "x",
        "x^2+y^2-1",
        "x-y",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "Res(f, g, x) = 2*y^2 - 1\n");
}

#[test]
fn resultant_prints_the_sylvester_matrix() {
    let out = resproj(&[
        "resultant",
        "--vars",
        "x",
        "--eliminate",
        "x",
        "--matrix",
        "x^2-2",
        "x-1",
    ]);
    let text = stdout(&out);
    assert!(text.starts_with("Sylvester matrix (3x3):"), "{text}");
    assert!(text.ends_with("Res(f, g, x) = -1\n"), "{text}");
}

#[test]
fn compare_reports_equal_levels() {
    let out = resproj(&["compare", "--vars", "x,y", "x^2+y^2-1", "x-y"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("refined: {y^2 - 1, 2*y^2 - 1}"), "{text}");
    assert!(text.ends_with("EQUAL at all 1 levels\n"), "{text}");
}

#[test]
fn optimize_finds_exact_zero() {
    let out = resproj(&["optimize", "--vars", "x,y", "x^2+y^2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("[0, 0] = 0  CANDIDATE"));
}

#[test]
fn chain_is_triangular() {
    let out = resproj(&["chain", "--vars", "x,y", "x^3 - 3*x + y^2"]);
    assert_eq!(stdout(&out), "g0 = x^3 - 3*x + y^2\ng1 = ResP(g0, x) = y^4 - 4\n");
}

#[test]
fn input_file_with_comments() {
    let dir = std::env::temp_dir().join(format!("resproj-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("polys.txt");
    std::fs::write(&path, "# circle\nx^2 + y^2 - 1\n\nx - y  # line\n").unwrap();
    let from_file = resproj(&["proj", "--vars", "x,y", "--input", path.to_str().unwrap()]);
    let inline = resproj(&["proj", "--vars", "x,y", "x^2 + y^2 - 1", "x - y"]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert!(from_file.status.success());
    assert_eq!(stdout(&from_file), stdout(&inline));
}

#[test]
fn text_output_is_deterministic() {
    let args = ["proj", "--vars", "x,y,z", "x^2 + y^2 + z^2 - 1", "x*y - z"];
    let first = resproj(&args);
    for _ in 0..3 {
        assert_eq!(stdout(&resproj(&args)), stdout(&first));
    }
}

#[test]
fn json_documents_parse() {
    let doc = json(&["resp", "--vars", "x,y", "x^2+y^2-1"]);
    assert_eq!(doc["command"], "resp");
    assert_eq!(doc["levels"][0]["factors"][0], "y^2 - 1");
    assert!(doc["timings_ms"]["total"].is_number());

    let doc = json(&["compare", "--vars", "x,y", "x^2+y^2-1", "x-y"]);
    assert_eq!(doc["verdict"], "equal");
    assert_eq!(doc["levels"][0]["equal"], true);

    let doc = json(&[
        "optimize",
        "--vars",
        "x",
        "x^4 - 2*x^2",
        "--spot-check",
        "--steps",
        "61",
    ]);
    let exact: Vec<&str> = doc["candidates"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(|c| c["exact"].as_str())
        .collect();
    assert!(exact.contains(&"-1"), "{doc}");
    assert_eq!(doc["spot_check"]["heuristic"], true);

    let doc = json(&["selftest", "--trials", "3", "--suite", "bareiss-vs-prs"]);
    assert_eq!(doc["verdict"], "pass");
    assert_eq!(doc["suites"][0]["passed"], 3);
}

#[test]
fn malformed_input_exits_with_2() {
    let out = resproj(&["proj", "--vars", "x,y", "x^^2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = resproj(&["proj", "--vars", "x", "y"]);
    assert_eq!(out.status.code(), Some(2));
    let out = resproj(&["resultant", "--vars", "x", "--eliminate", "x", "x"]);
    assert_eq!(out.status.code(), Some(2));
    let out = resproj(&["selftest", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn degenerate_input_exits_with_3() {
    let out = resproj(&["discriminant", "--vars", "x", "--eliminate", "x", "0"]);
    assert_eq!(out.status.code(), Some(3));
    let out = resproj(&["resultant", "--vars", "x,y", "--eliminate", "x", "y", "y+1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn errors_are_reported_as_json() {
    let out = resproj(&["--json", "proj", "--vars", "x", "y"]);
    assert_eq!(out.status.code(), Some(2));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["verdict"], "error");
    assert_eq!(doc["exit_code"], 2);
}

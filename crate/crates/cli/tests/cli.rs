use std::path::PathBuf;
use std::process::{Command, Output};

use k3omega::Rational;
use serde_json::Value;

fn k3omega(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3omega")).args(args).env_remove("K3OMEGA_OUT_DIR").output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = k3omega(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> Option<i32> {
    k3omega(args).status.code()
}

fn input_file(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("k3omega-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn commands_exit_zero() {
    let input = input_file("verify_input.json");
    for args in [
        vec!["tables"],
        vec!["verify"],
        vec!["verify", "--input", input.as_str()],
        vec!["bound-lower"],
        vec!["bound-upper", "--tolerance", "1e-5"],
        vec!["figure", "--grid", "8"],
        vec!["figure", "--grid", "8", "--format", "csv"],
        vec!["report", "--format", "csv"],
    ] {
        assert_eq!(code(&args), Some(0), "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    let dir = scratch("usage");
    let bad_json = dir.join("bad.json");
    std::fs::write(&bad_json, r#"{"triples": [{"a": "1", "b": "0"}]}"#).unwrap();
    let mismatch = dir.join("mismatch.json");
    std::fs::write(
        &mismatch,
        r#"{"systems": [{"name": "s", "system": {"vars": ["a"], "rows": []}, "objective": ["1", "2"]}]}"#,
    )
    .unwrap();
    let bad_json = bad_json.to_str().unwrap();
    let mismatch = mismatch.to_str().unwrap();
    for args in [
        vec!["bound-upper", "--tolerance", "0"],
        vec!["bound-upper", "--tolerance", "-1e-7"],
        vec!["report", "--tolerance", "abc"],
        vec!["figure", "--grid", "1"],
        vec!["figure", "--x-range", "1:0"],
        vec!["figure", "--y-range", "0.1"],
        vec!["figure", "--format", "json"],
        vec!["tables", "--format", "svg"],
        vec!["tables", "--format", "pdf"],
        vec!["verify", "--input", "/nonexistent/input.json"],
        vec!["verify", "--input", bad_json],
        vec!["verify", "--input", mismatch],
        vec!["tables", "--out", "/nonexistent/dir/tables.md"],
        vec!["frobnicate"],
        vec![],
    ] {
        assert_eq!(code(&args), Some(2), "{args:?}");
    }
}

#[test]
fn tables_rows() {
    let md = stdout(&["tables", "--format", "markdown"]);
    assert!(md.contains("| D^3 | -10224 | -10224 | PASS |"));
    assert!(md.contains("| (D+4E_S)^3 | 10242 | 1296 | DISCREPANT |"));
    assert!(md.contains("## Known discrepancies"));
    assert!(md.ends_with("Result: OK\n"));
    assert!(!md.contains("| FAIL |"));
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

/// Every row and summary value of the JSON rendering appears verbatim in the
/// Markdown rendering, and the CSV has one record per row.
fn assert_formats_agree(args: &[&str]) {
    let with = |f: &str| {
        let mut a = args.to_vec();
        a.extend(["--format", f]);
        stdout(&a)
    };
    let json: Value = serde_json::from_str(&with("json")).unwrap();
    let md = with("markdown");
    let csv_text = with("csv");
    let mut rows = 0;
    for line in json["summary"].as_array().unwrap() {
        let text = format!("- {}: {}", line["key"].as_str().unwrap(), line["value"].as_str().unwrap());
        assert!(md.contains(&text), "{args:?}: missing `{text}`");
        rows += 1;
    }
    for rep in json["reports"].as_array().unwrap() {
        for r in rep["rows"].as_array().unwrap() {
            let cell = |k: &str| md_escape(r[k].as_str().unwrap());
            let text =
                format!("| {} | {} | {} | {} |", cell("quantity"), cell("printed"), cell("derived"), cell("status"));
            assert!(md.contains(&text), "{args:?}: missing `{text}`");
            rows += 1;
        }
    }
    let mut reader = csv::Reader::from_reader(csv_text.as_bytes());
    assert_eq!(reader.records().count(), rows, "{args:?}");
}

#[test]
fn json_markdown_and_csv_agree() {
    assert_formats_agree(&["tables"]);
    assert_formats_agree(&["bound-lower"]);
    assert_formats_agree(&["bound-upper"]);
    assert_formats_agree(&["verify", "--input", &input_file("verify_input.json")]);
}

fn summary(json: &Value, key: &str) -> String {
    json["summary"]
        .as_array()
        .unwrap()
        .iter()
        .find(|l| l["key"] == key)
        .unwrap_or_else(|| panic!("no summary line `{key}`"))["value"]
        .as_str()
        .unwrap()
        .to_string()
}

fn bracket(s: &str) -> (Rational, Rational) {
    let inner = s.trim_start_matches('[').trim_end_matches(']');
    let (a, b) = inner.split_once(", ").unwrap();
    (a.parse().unwrap(), b.parse().unwrap())
}

#[test]
fn bound_lines() {
    let lower = stdout(&["bound-lower"]);
    assert!(lower.contains("- lambda lower bound: 39/22 = 1.7727…"));
    assert!(lower.contains("- vertex (x, y): (11/35, -3/35)"));
    assert!(lower.contains("- nodal certificate: multipliers (5, 2, 3, 0, 0) give 0 > 0"));

    let upper: Value = serde_json::from_str(&stdout(&["bound-upper", "--format", "json"])).unwrap();
    let (lo, hi) = bracket(&summary(&upper, "lambda* bracket"));
    let open: (Rational, Rational) = ("1.7952023".parse().unwrap(), "1.7952025".parse().unwrap());
    assert!(open.0 < lo && hi < open.1, "[{lo}, {hi}]");
    assert!(&hi - &lo <= "1e-7".parse::<Rational>().unwrap());
    let (el, eu) = bracket(&summary(&upper, "eta* bracket"));
    assert!(el < eu && &eu - &el <= "1e-7".parse::<Rational>().unwrap());
    assert!(summary(&upper, "sandwich").starts_with("39/22 <= lambda_extremal <= lambda*"));

    // A coarser tolerance still brackets the same value.
    let coarse: Value =
        serde_json::from_str(&stdout(&["bound-upper", "--tolerance", "1/1000", "--format", "json"])).unwrap();
    let (clo, chi) = bracket(&summary(&coarse, "lambda* bracket"));
    assert!(clo <= lo && hi <= chi);
}

#[test]
fn report_combines_everything() {
    let json: Value = serde_json::from_str(&stdout(&["report", "--format", "json"])).unwrap();
    assert_eq!(json["command"], "report");
    let titles: Vec<&str> = json["reports"].as_array().unwrap().iter().map(|r| r["title"].as_str().unwrap()).collect();
    for t in ["Lower bound", "Upper bound", "Cone constraints", "Bigness of D + 4E_S", "Sandwich"] {
        assert!(titles.contains(&t), "{titles:?}");
    }
    assert!(summary(&json, "lambda lower bound").starts_with("39/22"));
}

#[test]
fn figure_layers_and_outputs() {
    let svg = stdout(&["figure"]);
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains("version=\"1.1\""));
    for layer in ["contour", "threshold", "critical", "legend", "origin"] {
        assert!(svg.contains(&format!("id=\"{layer}\"")), "missing layer {layer}");
    }
    let dir = scratch("figure");
    let out = dir.join("fig.svg");
    assert_eq!(code(&["figure", "--out", out.to_str().unwrap()]), Some(0));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), svg);

    let status = Command::new(env!("CARGO_BIN_EXE_k3omega"))
        .args(["figure", "--grid", "10"])
        .env("K3OMEGA_OUT_DIR", &dir)
        .status()
        .unwrap();
    assert!(status.success());
    let written = std::fs::read_to_string(dir.join("figure.svg")).unwrap();
    assert_eq!(written, stdout(&["figure", "--grid", "10"]));

    let wide = stdout(&["figure", "--x-range", "-0.1:0.5", "--y-range", "-1/10:1/10", "--grid", "12"]);
    assert_ne!(wide, stdout(&["figure", "--grid", "12"]));
}

#[test]
fn figure_samples_csv() {
    let text = stdout(&["figure", "--format", "csv", "--grid", "6"]);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(&headers[6], "sign");
    let records: Vec<_> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(records.len(), 36);
    // Oracle: the printed coefficients evaluated in floating point.
    let f = |x: f64, e: f64| {
        x.powi(3) * (-10224.0 + 9936.0 * e - 2268.0 * e * e - 72.0 * e.powi(3))
            + x * x * (6048.0 + 4752.0 * e + 162.0 * e * e)
            + x * (-864.0 - 108.0 * e)
            + 18.0
    };
    for r in &records {
        let (x, e): (f64, f64) = (r[4].parse().unwrap(), r[5].parse().unwrap());
        let v = f(x, e);
        let sign = if v > 0.0 { "1" } else { "-1" };
        assert!(v.abs() < 1e-6 || &r[6] == sign, "{r:?}: {v}");
    }
}

#[test]
fn out_dir_names_files_after_the_command() {
    let dir = scratch("outdir");
    for (cmd, ext) in [("tables", "json"), ("bound-lower", "md")] {
        let status = Command::new(env!("CARGO_BIN_EXE_k3omega"))
            .args([cmd, "--format", if ext == "md" { "markdown" } else { ext }])
            .env("K3OMEGA_OUT_DIR", &dir)
            .status()
            .unwrap();
        assert!(status.success());
        assert!(dir.join(format!("{cmd}.{ext}")).is_file());
    }
}

mod common;

use common::{json, ok, stderr, susa};

fn code(args: &[&str]) -> i32 {
    susa(args).status.code().expect("exited normally")
}

fn assert_diagnostic(args: &[&str], expected_code: i32) {
    let out = susa(args);
    assert_eq!(out.status.code(), Some(expected_code), "susa {args:?}");
    let err = stderr(&out);
    assert!(err.starts_with("susa: "), "{err:?}");
    assert_eq!(err.lines().count(), 1, "{err:?}");
    assert!(out.stdout.is_empty());
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
    assert_eq!(code(&["construct", "--help"]), 0);
}

#[test]
fn usage_errors_exit_one() {
    assert_diagnostic(&[], 1);
    assert_diagnostic(&["frobnicate"], 1);
    assert_diagnostic(&["sexa", "eval", "1;60"], 1);
    assert_diagnostic(&["sexa", "eval", "(1 + 2"], 1);
    assert_diagnostic(&["areas", "--side", "abc"], 1);
    assert_diagnostic(&["areas", "--format", "xml"], 1);
    assert_diagnostic(&["construct", "--shape", "pentagon", "--method", "durer"], 1);
}

#[test]
fn domain_errors_exit_two() {
    assert_diagnostic(&["sexa", "eval", "1 / 0"], 2);
    assert_diagnostic(&["sexa", "eval", "1 / (0;30 - 0;30)"], 2);
    assert_diagnostic(&["errors", "--n", "5"], 2);
    assert_diagnostic(&["areas", "--n", "2"], 2);
    assert_diagnostic(&["derive", "heron", "--a", "-1"], 2);
    assert_diagnostic(&["derive", "smt2", "--r", "0"], 2);
    assert_diagnostic(&["construct", "--shape", "ngon", "--method", "compose", "--n", "6", "--m", "4"], 2);
    assert_diagnostic(&["construct", "--shape", "heptagon", "--method", "elamite", "--radius=0"], 2);
    assert_diagnostic(&["dissect", "--grid", "0"], 2);
    assert_diagnostic(&["dissect", "--complete", "0.5", "--almost", "0.9"], 2);
    assert_diagnostic(&["dissect", "--placements", "/nonexistent/placements.json"], 2);
}

#[test]
fn placement_files_parse_or_fail_by_kind() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("not_json.json", "{", 1),
        (
            "extra_field.json",
            r#"{"layout":"square","a":1,"placements":[{"piece_id":"I1","dx":0,"dy":0,"rot_deg":0,"reflected":false,"scale":2}]}"#,
            1,
        ),
        (
            "unknown_piece.json",
            r#"{"layout":"square","a":1,"placements":[{"piece_id":"Z9","dx":0,"dy":0,"rot_deg":0,"reflected":false}]}"#,
            2,
        ),
        ("negative_side.json", r#"{"layout":"square","a":-1,"placements":[]}"#, 2),
    ];
    for (name, body, expected) in cases {
        let path = dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        assert_diagnostic(&["dissect", "--placements", path.to_str().unwrap()], expected);
    }
}

#[test]
fn layout_mismatch_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    std::fs::write(
        &path,
        susa_core::dissection::shipped_placements(
            susa_core::dissection::Layout::Square,
            susa_core::dissection::Split::Two,
        ),
    )
    .unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(code(&["dissect", "--placements", p]), 0);
    assert_diagnostic(&["dissect", "--placements", p, "--layout", "rectangle"], 2);
    assert_diagnostic(&["dissect", "--placements", p, "--split", "four"], 2);
}

#[test]
fn svg_into_missing_directory_fails_cleanly() {
    assert_diagnostic(&["construct", "--shape", "hexagon", "--svg", "/nonexistent/dir/out.svg"], 2);
}

#[test]
fn sexa_eval_is_exact() {
    let v = json(&["sexa", "eval", "7 * 0;7,55"]);
    assert_eq!(v["rational"], "133/144");
    assert_eq!(v["sexagesimal"], "0;55,25");
    let v = json(&["sexa", "eval", "-(1;30) × 2 ÷ 3"]);
    assert_eq!(v["rational"], "-1");
    let v = json(&["sexa", "eval", "1/7", "--places", "3"]);
    assert_eq!(v["sexagesimal"], "0;8,34,17");
    assert_eq!(v["truncated"], true);
}

#[test]
fn side_flags_accept_both_notations() {
    let a = json(&["areas", "--side", "0;30"]);
    let b = json(&["areas", "--side", "1/2"]);
    let c = json(&["areas", "--side", "0.5"]);
    assert_eq!(a, b);
    assert_eq!(b, c);
}

/// Whether a JSON value and a table cell hold the same datum.
fn same(value: &serde_json::Value, cell: &str) -> bool {
    use serde_json::Value;
    match value {
        Value::Null => cell == "-",
        Value::Bool(b) => cell == b.to_string(),
        Value::Number(n) => cell.parse::<f64>().ok() == n.as_f64(),
        Value::String(s) => s == cell,
        _ => false,
    }
}

fn table_rows(text: &str) -> Vec<Vec<String>> {
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    let rule = lines.next().unwrap();
    // column starts from the dash rule
    let mut starts = vec![0];
    for (i, w) in rule.as_bytes().windows(2).enumerate() {
        if w == b" -" {
            starts.push(i + 1);
        }
    }
    let split = |line: &str| -> Vec<String> {
        (0..starts.len())
            .map(|k| {
                let end = starts.get(k + 1).copied().unwrap_or(line.len()).min(line.len());
                line.get(starts[k].min(line.len())..end).unwrap_or("").trim().to_string()
            })
            .collect()
    };
    std::iter::once(split(header)).chain(lines.map(split)).collect()
}

#[test]
fn json_and_table_carry_the_same_rows() {
    for args in [
        vec!["errors"],
        vec!["areas", "--n", "7"],
        vec!["areas", "--n", "4", "--side", "3"],
        vec!["derive", "smt2"],
        vec!["derive", "heron"],
        vec!["derive", "elamite"],
        vec!["constants"],
    ] {
        let table = table_rows(&ok(&args));
        let parsed = json(&args);
        let records = parsed.as_array().unwrap();
        assert_eq!(records.len(), table.len() - 1, "{args:?}");
        for (record, row) in records.iter().zip(&table[1..]) {
            let obj = record.as_object().unwrap();
            let keys: Vec<&String> = obj.keys().collect();
            assert_eq!(keys, table[0].iter().collect::<Vec<_>>(), "{args:?}");
            for (value, cell) in obj.values().zip(row) {
                assert!(same(value, cell), "{args:?} {value} vs {cell}");
            }
        }
    }
}

#[test]
fn json_sections_match_table_records() {
    let args = ["construct", "--shape", "heptagon", "--method", "heron", "--report"];
    let table = ok(&args);
    let parsed = json(&args);
    let report = parsed["report"].as_object().unwrap();
    let section: Vec<&str> = table.split("\n\n").find(|s| s.starts_with("[report]")).unwrap().lines().skip(1).collect();
    assert_eq!(section.len(), report.len());
    for (line, (key, value)) in section.iter().zip(report) {
        let (k, v) = line.split_once(' ').unwrap();
        assert_eq!(k, key);
        assert!(same(value, v.trim()), "{key}: {value} vs {v}");
    }
}

#[test]
fn dissect_reports_net_uncovered() {
    for layout in ["square", "rectangle"] {
        for split in ["two", "four"] {
            let v = json(&["dissect", "--layout", layout, "--split", split]);
            let net = v["net_uncovered"].as_f64().unwrap();
            assert!((net - 0.032754222665).abs() < 1e-12, "{layout} {split}: {net}");
            assert_eq!(v["overlap_area"].as_f64().unwrap(), 0.0);
        }
    }
}

#[test]
fn written_svg_is_well_formed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.svg");
    ok(&["construct", "--shape", "heptagon", "--method", "durer", "--svg", path.to_str().unwrap()]);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains(r#"viewBox="0 0 1000 1000""#));
    assert!(svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<g ").count(), svg.matches("</g>").count());
}

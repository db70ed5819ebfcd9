//! Shared helpers for the `susa` binary tests.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn susa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_susa")).args(args).output().expect("susa runs")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

/// Runs and expects success, returning stdout.
pub fn ok(args: &[&str]) -> String {
    let out = susa(args);
    assert!(out.status.success(), "susa {args:?} failed: {}", stderr(&out));
    stdout(&out)
}

pub fn json(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&ok(&full)).expect("valid JSON")
}

/// A golden-file case: the arguments and whether it writes an SVG.
pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub svg: bool,
}

pub const CASES: &[Case] = &[
    Case { name: "sexa_eval_triangle", args: &["sexa", "eval", "7 * 0;7,55"], svg: false },
    Case { name: "sexa_eval_third", args: &["sexa", "eval", "1 / 3", "--places", "4", "--format", "json"], svg: false },
    Case { name: "areas_heptagon", args: &["areas", "--n", "7", "--side", "1"], svg: false },
    Case {
        name: "areas_heptagon_json",
        args: &["areas", "--n", "7", "--side", "0;30", "--format", "json"],
        svg: false,
    },
    Case { name: "areas_triangle", args: &["areas", "--n", "3", "--side", "2"], svg: false },
    Case { name: "errors", args: &["errors", "--n", "7"], svg: false },
    Case { name: "errors_json", args: &["errors", "--n", "7", "--format", "json"], svg: false },
    Case { name: "derive_smt2", args: &["derive", "smt2", "--r", "0;35"], svg: false },
    Case { name: "derive_heron", args: &["derive", "heron", "--a", "1"], svg: false },
    Case { name: "derive_elamite_json", args: &["derive", "elamite", "--a", "1", "--format", "json"], svg: false },
    Case { name: "constants", args: &["constants"], svg: false },
    Case {
        name: "construct_hexagon_march",
        args: &["construct", "--shape", "hexagon", "--method", "march", "--report"],
        svg: true,
    },
    Case {
        name: "construct_triangle_march",
        args: &["construct", "--shape", "triangle", "--method", "march"],
        svg: true,
    },
    Case { name: "construct_square_march", args: &["construct", "--shape", "square", "--method", "march"], svg: true },
    Case {
        name: "construct_pentagon_ptolemy",
        args: &["construct", "--shape", "pentagon", "--method", "ptolemy", "--report"],
        svg: true,
    },
    Case {
        name: "construct_heptagon_elamite",
        args: &["construct", "--shape", "heptagon", "--method", "elamite", "--report"],
        svg: true,
    },
    Case {
        name: "construct_heptagon_elamite_midpoint",
        args: &[
            "construct",
            "--shape",
            "heptagon",
            "--method",
            "elamite",
            "--closure",
            "midpoint",
            "--report",
            "--format",
            "json",
        ],
        svg: true,
    },
    Case {
        name: "construct_heptagon_heron",
        args: &["construct", "--shape", "heptagon", "--method", "heron", "--report"],
        svg: true,
    },
    Case {
        name: "construct_heptagon_durer",
        args: &["construct", "--shape", "heptagon", "--method", "durer"],
        svg: true,
    },
    Case {
        name: "construct_ngon_compose",
        args: &["construct", "--shape", "ngon", "--method", "compose", "--n", "5", "--m", "3", "--report"],
        svg: true,
    },
    Case {
        name: "construct_ngon_double",
        args: &["construct", "--shape", "ngon", "--method", "double", "--n", "6"],
        svg: true,
    },
    Case {
        name: "dissect_square_two",
        args: &["dissect", "--layout", "square", "--split", "two", "--report"],
        svg: true,
    },
    Case { name: "dissect_square_four", args: &["dissect", "--layout", "square", "--split", "four"], svg: true },
    Case { name: "dissect_rectangle_two", args: &["dissect", "--layout", "rectangle", "--split", "two"], svg: true },
    Case {
        name: "dissect_rectangle_four",
        args: &["dissect", "--layout", "rectangle", "--split", "four", "--report", "--format", "json"],
        svg: true,
    },
];

pub struct Run {
    pub stdout: Vec<u8>,
    pub svg: Option<Vec<u8>>,
}

/// Runs a case in `dir`, adding `--svg dir/<name>.svg` when it draws.
pub fn run_case(case: &Case, dir: &Path) -> Run {
    let mut args: Vec<String> = case.args.iter().map(|s| s.to_string()).collect();
    let svg_path = dir.join(format!("{}.svg", case.name));
    if case.svg {
        args.push("--svg".into());
        args.push(svg_path.display().to_string());
    }
    let out = Command::new(env!("CARGO_BIN_EXE_susa")).args(&args).output().expect("susa runs");
    assert!(out.status.success(), "{} failed: {}", case.name, String::from_utf8_lossy(&out.stderr));
    let svg = case.svg.then(|| std::fs::read(&svg_path).expect("svg written"));
    Run { stdout: out.stdout, svg }
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

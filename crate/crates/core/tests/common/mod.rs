#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use clap::Parser;
use spined::cli::{run, Cli};

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn data(rel: &str) -> String {
    manifest_dir().join("tests/data").join(rel).display().to_string()
}

/// Runs the CLI in-process and returns `(exit code, stdout, stderr)`.
pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let cli = Cli::try_parse_from(std::iter::once("spined").chain(args.iter().copied())).expect("valid arguments");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&cli, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

/// Zeroes every `"elapsed_ms"` value so reports can be compared byte for byte.
pub fn strip_timing(report: &str) -> String {
    report
        .lines()
        .map(|line| match line.find("\"elapsed_ms\": ") {
            Some(at) => {
                let tail = &line[at + "\"elapsed_ms\": ".len()..];
                let rest = tail.trim_start_matches(|c: char| c.is_ascii_digit());
                format!("{}\"elapsed_ms\": 0{rest}", &line[..at])
            }
            None => line.to_owned(),
        })
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}

fn golden_path(name: &str) -> PathBuf {
    manifest_dir().join("tests/golden").join(name)
}

/// Compares `actual` with the golden file, rewriting it when `SPINED_UPDATE_GOLDEN` is set.
pub fn check_golden(name: &str, actual: &str) -> Result<(), String> {
    let path = golden_path(name);
    if std::env::var_os("SPINED_UPDATE_GOLDEN").is_some() {
        fs::write(&path, actual).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", display(&path)))?;
    if expected == actual {
        Ok(())
    } else {
        let line = expected
            .lines()
            .zip(actual.lines())
            .position(|(a, b)| a != b)
            .map_or(expected.lines().count().min(actual.lines().count()) + 1, |i| i + 1);
        Err(format!("{name} differs from golden file at line {line}"))
    }
}

fn display(p: &Path) -> String {
    p.display().to_string()
}

pub struct GoldenCase {
    pub golden: &'static str,
    pub args: Vec<String>,
    pub exit: i32,
}

/// The fixed-seed invocations whose reports are pinned as golden files.
pub fn golden_cases() -> Vec<GoldenCase> {
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    vec![
        GoldenCase {
            golden: "width_c4_standard.json",
            args: s(&["width", &data("inputs/c4.txt"), "--convention", "standard", "--oracle"]),
            exit: 0,
        },
        GoldenCase {
            golden: "width_k5.json",
            args: s(&["width", &data("inputs/k5.txt")]),
            exit: 0,
        },
        GoldenCase {
            golden: "width_grid3.json",
            args: s(&["width", &data("inputs/grid3.dimacs"), "--oracle"]),
            exit: 0,
        },
        GoldenCase {
            golden: "width_fan_hypergraph.json",
            args: s(&["width", &data("inputs/fan.hg"), "--oracle"]),
            exit: 0,
        },
        GoldenCase {
            golden: "laws_all.json",
            args: s(&[
                "laws",
                "--suite",
                "all",
                "--max-vertices",
                "4",
                "--samples",
                "40",
                "--seed",
                "17",
            ]),
            exit: 0,
        },
        GoldenCase {
            golden: "laws_sfunctor.json",
            args: s(&[
                "laws",
                "--suite",
                "sfunctor",
                "--max-vertices",
                "5",
                "--samples",
                "60",
                "--seed",
                "3",
            ]),
            exit: 0,
        },
        GoldenCase {
            golden: "compare_corpus.json",
            args: s(&["compare", &data("corpus"), "--max-vertices", "16"]),
            exit: 0,
        },
    ]
}

/// Runs a golden case twice and checks exit code, run-to-run stability and the golden file.
pub fn verify_golden(case: &GoldenCase) -> Result<(), String> {
    let args: Vec<&str> = case.args.iter().map(String::as_str).collect();
    let (code_a, out_a, _) = run_cli(&args);
    let (code_b, out_b, _) = run_cli(&args);
    if code_a != case.exit || code_b != case.exit {
        return Err(format!(
            "{}: exit codes {code_a}, {code_b}, expected {}",
            case.golden, case.exit
        ));
    }
    let (a, b) = (strip_timing(&out_a), strip_timing(&out_b));
    if a != b {
        return Err(format!("{}: two runs differ", case.golden));
    }
    check_golden(case.golden, &a)
}

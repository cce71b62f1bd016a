//! Drives the `balcube` binary as a separate process.

use std::process::{Command, Output};

use balanced_cube::{extremal_size, Family, Parity};
use serde_json::Value;

fn balcube(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_balcube"))
        .args(args)
        .output()
        .expect("spawn balcube")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn verify_small_range_passes() {
    let o = balcube(&["verify", "--n", "4..7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert_eq!(text.matches("[pass]").count(), 4);
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_json_reports_size() {
    let o = balcube(&["verify", "--n", "12", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["status"], "pass");
    let total = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["check"] == "total_size")
        .unwrap();
    assert_eq!(total["measured"], 1544);
}

#[test]
fn verify_failure_exits_one_with_diagnostics() {
    let o = balcube(&["verify", "--n", "1..3"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("n=1: FAIL  maximal"), "{err}");
    assert!(err.contains("n=2:"));
    assert!(!err.contains("n=3:"));
    assert!(stdout(&o).contains("# pair n=3 case=3 [pass]"));
}

#[test]
fn oracle_agrees_with_formula() {
    let o = balcube(&["oracle", "--n", "5", "--method", "both"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("exhaustive  optimum=10"));
    assert!(text.contains("segment     optimum=10"));
    assert!(text.trim_end().ends_with("match"));

    let o = balcube(&[
        "oracle", "--n", "20", "--method", "segment", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["results"][0]["optimum"], 427048);
    assert_eq!(v["formula"], 427048);
    assert_eq!(v["match"], true);
}

#[test]
fn oracle_witness_is_a_valid_answer() {
    let o = balcube(&[
        "oracle",
        "--n",
        "4",
        "--method",
        "exhaustive",
        "--witness",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let sets: Vec<Vec<u32>> = serde_json::from_value(v["results"][0]["witness"].clone()).unwrap();
    let lists: Vec<&[u32]> = sets.iter().map(Vec::as_slice).collect();
    let f = Family::from_element_lists(4, &lists).unwrap();
    assert_eq!(f.members().len() as u64, extremal_size(4).unwrap());
    assert!(balanced_cube::is_independent(&f));
    assert!(balanced_cube::is_balanced(&f));
}

#[test]
fn usage_errors_exit_two_before_work() {
    for args in [
        &["oracle", "--n", "6", "--method", "exhaustive"][..],
        &["oracle", "--n", "25", "--method", "segment"],
        &["construct", "--n", "31"],
        &["construct", "--n", "0"],
        &["verify", "--n", "7..4"],
        &["verify", "--n", "seven"],
        &["isocheck", "--n", "6", "--m", "3"],
        &["isocheck", "--n", "8", "--m", "5", "--samples", "10"],
        &["isocheck", "--n", "4", "--m", "9"],
        &["table", "--max-n", "64"],
        &["construct", "--n", "4", "--format", "yaml"],
        &["frobnicate"],
    ] {
        let o = balcube(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn isocheck_modes() {
    let o = balcube(&["isocheck", "--n", "5", "--m", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("[pass]").count(), 17);

    let o = balcube(&[
        "isocheck",
        "--n",
        "10",
        "--m",
        "100",
        "--samples",
        "200",
        "--seed",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("measured=200  bound=200"));

    let o = balcube(&["isocheck", "--n", "9", "--terminal", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["status"], "pass");
}

#[test]
fn sampled_runs_repeat_exactly() {
    let args = [
        "isocheck",
        "--n",
        "11",
        "--m",
        "40",
        "--samples",
        "300",
        "--seed",
        "99",
        "--format",
        "json",
    ];
    let first = balcube(&args);
    let second = balcube(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn table_reaches_the_count_limit() {
    let o = balcube(&["table", "--max-n", "63"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 64);
    assert_eq!(lines[0], "n\tcase\tsize\tA");
    assert_eq!(lines[20], "20\t0\t427048\t213524");
    assert_eq!(lines[63], "63\t3\t4146257665172126816\t2073128832586063408");
}

#[test]
fn out_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("balcube-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pair.json");
    let o = balcube(&[
        "construct",
        "--n",
        "9",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), o.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn construct_json_and_hex_round_trip() {
    let n = 10;
    let json = stdout(&balcube(&["construct", "--n", "10", "--format", "json"]));
    let hex = stdout(&balcube(&["construct", "--n", "10", "--format", "hex"]));
    let json: Value = serde_json::from_str(json.trim()).unwrap();
    let hex: Value = serde_json::from_str(hex.trim()).unwrap();
    assert_eq!(json["size"], extremal_size(n).unwrap());

    for key in ["A", "B"] {
        let as_sets: Family =
            serde_json::from_value(serde_json::json!({ "n": n, "sets": json[key] })).unwrap();
        let as_hex: Family =
            serde_json::from_value(serde_json::json!({ "n": n, "hex": hex[key] })).unwrap();
        assert_eq!(as_sets, as_hex);
        let want = if key == "A" {
            Parity::Even
        } else {
            Parity::Odd
        };
        assert_eq!(as_sets.uniform_parity().unwrap(), Some(want));
    }
    let pair = balanced_cube::construct_pair(n).unwrap();
    let a: Family =
        serde_json::from_value(serde_json::json!({ "n": n, "sets": json["A"] })).unwrap();
    assert_eq!(a, pair.a_family());
}

#[test]
fn construct_text_lists_in_simplicial_order() {
    let o = balcube(&["construct", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stderr.is_empty());
    let text = stdout(&o);
    assert!(text.starts_with("n=5 case=1 k=1 size=10\nA (5):\n{}\n"));
    let sets: Vec<balanced_cube::VertexSet> = text
        .lines()
        .filter(|l| l.starts_with('{'))
        .map(|l| l.parse().unwrap())
        .collect();
    assert_eq!(sets.len(), 10);
    assert!(sets[..5].windows(2).all(|w| w[0] < w[1]));
    assert!(sets[5..].windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn help_and_version_exit_zero() {
    for args in [&["--help"][..], &["--version"], &["verify", "--help"]] {
        let o = balcube(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(!o.stdout.is_empty());
    }
}

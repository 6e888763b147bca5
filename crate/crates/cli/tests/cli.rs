//! End-to-end runs of the binary: output formats, exit codes, file IO.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use schreier_turan::io::read_bfile;
use schreier_turan::schreier::{sr_partial_sum, SchreierParams};

const FIXTURE: &str =
    concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/fixtures/b002620.txt");

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schreier-turan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn seq_prints_reference_prefix() {
    let out = run(&["seq", "--p", "2", "--q", "2", "--n-max", "19"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout(&out),
        "1, 2, 4, 6, 8, 11, 14, 18, 22, 26, 31, 36, 42, 48, 54, 61, 68, 76, 84\n"
    );
}

#[test]
fn seq_smallest_case() {
    let out = run(&["seq", "--n-max", "1"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn seq_bfile_output_reparses_to_the_same_values() {
    let out = run(&["seq", "--p", "3", "--q", "2", "--n-max", "25", "--format", "bfile"]);
    assert_eq!(exit_code(&out), 0);
    let entries = read_bfile(&stdout(&out)).expect("own output parses");
    assert_eq!(entries.len(), 25);
    for e in &entries {
        let params = SchreierParams::new(e.index as u64, 3, 2);
        assert_eq!(e.value as u64, sr_partial_sum(&params));
    }
}

#[test]
fn seq_csv_has_header_and_differences() {
    let out = run(&["seq", "--p", "2", "--q", "2", "--n-max", "3", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "n,sr,diff\n1,1,1\n2,2,2\n3,4,2\n");
}

#[test]
fn seq_check_passes() {
    let out = run(&["seq", "--p", "3", "--q", "2", "--n-max", "10", "--check"]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn seq_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("seq.txt");
    let out = run(&["seq", "--n-max", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(fs::read_to_string(&path).unwrap(), "1, 2, 4, 6, 9\n");
}

#[test]
fn verify_small_grid_passes() {
    let out = run(&["verify", "--n-max", "15", "--p-max", "3", "--q-max", "3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("p=3 q=3 n=1..=15: 15/15 pass"), "{text}");
    assert!(text.contains("all 135 cells pass"), "{text}");
}

#[test]
fn verify_respects_thread_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_schreier-turan"))
        .args(["verify", "--n-max", "10", "--p-max", "2", "--q-max", "2"])
        .env("SCHREIER_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0);

    let out = Command::new(env!("CARGO_BIN_EXE_schreier-turan"))
        .args(["verify", "--n-max", "5"])
        .env("SCHREIER_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn graph_exports_and_reports_edge_count() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graph.dot");
    let out = run(&["graph", "--n", "7", "--p", "5", "--q", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("7 vertices, 11 edges"), "{}", stdout(&out));
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("graph {\n"));
    assert_eq!(text.matches(" -- ").count(), 11);

    let path2 = dir.path().join("tiny.dot");
    let out = run(&["graph", "--n", "2", "--p", "5", "--q", "2", "--out", path2.to_str().unwrap()]);
    assert!(stdout(&out).contains("2 vertices, 1 edges"));

    let path3 = dir.path().join("point.dot");
    let out = run(&["graph", "--n", "1", "--out", path3.to_str().unwrap()]);
    assert!(stdout(&out).contains("1 vertices, 0 edges"));
}

#[test]
fn graph_io_failure_exits_3() {
    let out = run(&["graph", "--n", "3", "--out", "/nonexistent-dir/graph.dot"]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn compare_agrees_with_quarter_squares_fixture() {
    assert!(Path::new(FIXTURE).exists());
    let out = run(&["compare", "--series", "turan", "--p", "2", FIXTURE]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "agreement length 121\n");

    let out = run(&["compare", "--series", "turan", "--p", "2", "--n-max", "50", FIXTURE]);
    assert_eq!(stdout(&out), "agreement length 50\n");
}

#[test]
fn compare_agrees_with_reference_prefix() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sr22.txt");
    let prefix = "1 1\n2 2\n3 4\n4 6\n5 8\n6 11\n7 14\n8 18\n9 22\n10 26\n11 31\n12 36\n\
                  13 42\n14 48\n15 54\n16 61\n17 68\n18 76\n19 84\n";
    fs::write(&path, prefix).unwrap();
    let out = run(&["compare", "--series", "sr", "--p", "2", "--q", "2", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "agreement length 19\n");
}

#[test]
fn compare_reports_first_mismatch_and_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "1 1\n2 2\n3 5\n").unwrap();
    let out = run(&["compare", "--series", "sr", "--p", "2", "--q", "2", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("index 3"), "{err}");
}

#[test]
fn compare_empty_bfile_agrees_trivially() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.txt");
    fs::write(&path, "# nothing here\n").unwrap();
    let out = run(&["compare", "--series", "sr", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "agreement length 0\n");
}

#[test]
fn compare_parse_and_io_failures_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mangled.txt");
    fs::write(&path, "1 1\nnot numbers\n").unwrap();
    let out = run(&["compare", "--series", "turan", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 3);

    let out = run(&["compare", "--series", "turan", "/no/such/file.txt"]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn diff_table_checks_and_prints() {
    let out = run(&["diff-table", "--p", "2", "--q", "3", "--n-max", "12", "--check"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("n,sr,diff\n1,1,1\n"), "{text}");
    assert_eq!(text.lines().count(), 13);
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["seq", "--n-max", "0"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["seq"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["no-such-command"]);
    assert_eq!(exit_code(&out), 2);
}

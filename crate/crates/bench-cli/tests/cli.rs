//! End-to-end tests of the `mtfp` binary: output contents and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn mtfp() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mtfp"))
}

fn dataset1_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../instance-io/datasets/dataset1.mtfp")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

#[test]
fn solve_reports_the_optimum_with_a_good_seed() {
    let output = mtfp()
        .args(["solve"])
        .arg(dataset1_path())
        .args(["--seed", "1"])
        .output()
        .unwrap();
    assert!(output.status.success(), "{}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("best fitness: 1.6000"), "{text}");
    assert!(text.contains("feasible: yes"), "{text}");
    assert!(text.contains("evaluations: 11000"), "{text}");
    // Allocation table: one row per individual, 0/1 cells under G1..G3.
    assert!(text.contains("G1 G2 G3"), "{text}");
    assert!(text.contains("I10"), "{text}");
}

#[test]
fn exact_reports_optimum_and_count() {
    let output = mtfp()
        .args(["exact"])
        .arg(dataset1_path())
        .output()
        .unwrap();
    assert!(output.status.success(), "{}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("best cohesion: 1.6000"), "{text}");
    assert!(text.contains("feasible allocations: 36"), "{text}");
}

#[test]
fn exact_budget_refusal_exits_3() {
    let output = mtfp()
        .args(["exact"])
        .arg(dataset1_path())
        .args(["--budget", "10"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3), "{}", stderr(&output));
    assert!(stderr(&output).contains("36"), "{}", stderr(&output));
}

#[test]
fn malformed_document_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.mtfp");
    std::fs::write(&path, "name: broken\nindividuals: nope\n").unwrap();
    let output = mtfp().args(["validate"]).arg(&path).output().unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("parse error"), "{}", stderr(&output));
}

#[test]
fn invalid_instance_exits_2_listing_violations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("invalid.mtfp");
    std::fs::write(
        &path,
        "name: invalid\nindividuals: 2\ndepartments: 1\ngroups: 1\n\n\
         [departments]\n1 1\n\n[requirements]\n2\n\n[sociometric]\n1 0\n0 0\n",
    )
    .unwrap();
    let output = mtfp().args(["validate"]).arg(&path).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("diagonal"), "{}", stderr(&output));
}

#[test]
fn validate_accepts_the_shipped_dataset() {
    let output = mtfp().args(["validate"]).arg(dataset1_path()).output().unwrap();
    assert!(output.status.success());
    assert!(stdout(&output).contains("OK: dataset1"));
}

#[test]
fn missing_file_exits_1() {
    let output = mtfp().args(["exact", "/nonexistent/nowhere.mtfp"]).output().unwrap();
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn usage_error_exits_1_and_help_exits_0() {
    let output = mtfp().args(["frobnicate"]).output().unwrap();
    assert_eq!(output.status.code(), Some(1));
    let output = mtfp().args(["--help"]).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("solve"));
}

#[test]
fn gen_produces_a_loadable_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("generated.mtfp");
    let output = mtfp()
        .args(["gen", "--individuals", "9", "--departments", "2", "--groups", "3"])
        .args(["--seed", "5", "--output"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(output.status.success(), "{}", stderr(&output));

    let output = mtfp().args(["validate"]).arg(&path).output().unwrap();
    assert!(output.status.success(), "{}", stderr(&output));

    let instance = instance_io::load_instance_from_path(&path).unwrap();
    assert_eq!(instance.n_individuals(), 9);
    assert!(instance.name.contains("seed5"), "{}", instance.name);
}

#[test]
fn solve_on_a_single_group_instance_returns_the_forced_allocation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("forced.mtfp");
    std::fs::write(
        &path,
        "name: forced\nindividuals: 3\ndepartments: 2\ngroups: 1\n\n\
         [departments]\n1 1 2\n\n[requirements]\n2\n1\n\n\
         [sociometric]\n0 1 1\n1 0 1\n1 1 0\n",
    )
    .unwrap();
    let output = mtfp().args(["solve"]).arg(&path).output().unwrap();
    assert!(output.status.success(), "{}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("feasible: yes"), "{text}");
    // All six ordered pairs are +1 over three people: cohesion 2.
    assert!(text.contains("best fitness: 2.0000"), "{text}");
    assert!(text.contains("G1: I1 I2 I3"), "{text}");
    assert!(stderr(&output).contains("warning"), "{}", stderr(&output));
}

#[test]
fn gen_rejects_impossible_shapes() {
    let output = mtfp()
        .args(["gen", "--individuals", "2", "--departments", "5", "--groups", "1"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn bench_writes_a_round_tripping_csv() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(dataset1_path(), dir.path().join("dataset1.mtfp")).unwrap();
    let csv_path = dir.path().join("bench.csv");
    let output = mtfp()
        .args(["bench"])
        .arg(dir.path())
        .args(["--runs", "3", "--base-seed", "0", "--csv"])
        .arg(&csv_path)
        .output()
        .unwrap();
    assert!(output.status.success(), "{}", stderr(&output));
    let table = stdout(&output);
    assert!(table.contains("dataset1"), "{table}");
    assert!(table.contains("1.6000"), "{table}");

    let records = bench_cli::read_bench_csv(std::fs::File::open(&csv_path).unwrap()).unwrap();
    assert_eq!(records.len(), 1);
    assert_eq!(records[0].dataset, "dataset1");
    assert_eq!(records[0].exhaustive_evals, Some(36));
    assert_eq!(records[0].ga_evals, Some(11000));

    // Writing the parsed records again reproduces the same bytes.
    let mut rewritten = Vec::new();
    bench_cli::write_bench_csv(&records, &mut rewritten).unwrap();
    let original = std::fs::read(&csv_path).unwrap();
    assert_eq!(rewritten, original);
}

#[test]
fn bench_on_empty_directory_succeeds_with_empty_table() {
    let dir = tempfile::tempdir().unwrap();
    let output = mtfp().args(["bench"]).arg(dir.path()).output().unwrap();
    assert!(output.status.success(), "{}", stderr(&output));
    let table = stdout(&output);
    assert_eq!(table.lines().count(), 1, "only the header: {table}");
}

#[test]
fn sweep_single_cell_emits_one_record() {
    let output = mtfp()
        .args(["sweep", "--ni-min", "5", "--ni-max", "5", "--k-min", "2", "--k-max", "2"])
        .args(["--runs", "3"])
        .output()
        .unwrap();
    assert!(output.status.success(), "{}", stderr(&output));
    let records = bench_cli::read_sweep_csv(stdout(&output).as_bytes()).unwrap();
    assert_eq!(records.len(), 1);
    assert_eq!(records[0].n_i, 5);
    assert_eq!(records[0].k, 2);
    assert_eq!(records[0].runs_kept, 1);
    assert!(records[0].mean_time_s.is_some());
}

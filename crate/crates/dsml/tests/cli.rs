//! Black-box tests of the `dsml` binary: every subcommand, the exit-code
//! contract, and byte-level determinism.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use dsml::datagen::{generate, read_dataset, GenSpec};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dsml"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir()
        .join("dsml-cli-tests")
        .join(format!("{name}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(path: &Path, text: &str) {
    fs::write(path, text).unwrap();
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    bin().current_dir(dir).args(args).output().unwrap()
}

const EXPERIMENT: &str = r#"
[data]
p = 16
s = 3
sigma = 0.3

[sweep]
parameter = "n"
values = [40, 60]
m = 2

[run]
methods = ["lasso", "dsml"]
replications = 2
seed = 11
output = "results.csv"
"#;

#[test]
fn generate_writes_a_dataset_identical_to_the_library_path() {
    let dir = scratch("generate");
    write(
        &dir.join("spec.toml"),
        "p = 12\nn = 25\nm = 3\ns = 4\nsigma = 0.5\nseed = 8\n",
    );
    let out = run_in(&dir, &["generate", "--spec", "spec.toml", "--output", "fixtures"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let path = dir.join("fixtures/linear-p12-n25-m3-s4-seed8.txt");
    let text = fs::read_to_string(&path).unwrap();
    let mut reader = std::io::BufReader::new(text.as_bytes());
    let parsed = read_dataset(&mut reader, &path.display().to_string()).unwrap();

    let spec = GenSpec {
        p: 12,
        n: 25,
        m: 3,
        s: 4,
        sigma: 0.5,
        seed: 8,
        ..GenSpec::default()
    };
    let direct = generate(&spec).unwrap();
    assert_eq!(parsed.support.indices(), direct.support.indices());
    assert_eq!(parsed.b_star.entries(), direct.b_star.entries());
    for (a, b) in parsed.tasks.iter().zip(direct.tasks.iter()) {
        assert_eq!(a.x(), b.x());
        assert_eq!(a.y(), b.y());
    }
}

#[test]
fn run_then_summarize_produces_consistent_tables() {
    let dir = scratch("roundtrip");
    write(&dir.join("exp.toml"), EXPERIMENT);
    let out = run_in(&dir, &["run", "--config", "exp.toml"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let csv = fs::read_to_string(dir.join("results.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    // Header + 2 sweep points x 2 replications x 2 methods.
    assert_eq!(lines.len(), 1 + 8);
    assert!(lines[0].starts_with("method,sweep_value,replication,"));
    // Sorted by (sweep_value, replication, method); no failures.
    let first_fields: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(first_fields[1], "40");
    assert_eq!(first_fields[2], "0");
    for line in &lines[1..] {
        assert!(line.ends_with(','), "error column should be empty: {line}");
    }

    let out = run_in(
        &dir,
        &["summarize", "--input", "results.csv", "--output", "summary.csv"],
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let summary = fs::read_to_string(dir.join("summary.csv")).unwrap();
    let rows: Vec<&str> = summary.lines().collect();
    // Header + (2 methods x 2 sweep points).
    assert_eq!(rows.len(), 1 + 4);
    for row in &rows[1..] {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[2], "2", "count should equal replications: {row}");
        assert_eq!(fields[3], "0", "no failures expected: {row}");
    }
}

#[test]
fn reruns_and_thread_counts_do_not_change_bytes() {
    let dir = scratch("determinism");
    write(&dir.join("exp.toml"), EXPERIMENT);

    assert!(run_in(&dir, &["run", "--config", "exp.toml"]).status.success());
    let first = fs::read(dir.join("results.csv")).unwrap();

    assert!(run_in(&dir, &["run", "--config", "exp.toml", "--jobs", "2"])
        .status
        .success());
    let second = fs::read(dir.join("results.csv")).unwrap();
    assert_eq!(first, second, "thread count changed the output bytes");

    let out = bin()
        .current_dir(&dir)
        .env("DSML_JOBS", "3")
        .args(["run", "--config", "exp.toml"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let third = fs::read(dir.join("results.csv")).unwrap();
    assert_eq!(first, third, "DSML_JOBS changed the output bytes");
}

#[test]
fn seed_override_changes_results_reproducibly() {
    let dir = scratch("seeds");
    write(&dir.join("exp.toml"), EXPERIMENT);

    assert!(run_in(&dir, &["run", "--config", "exp.toml", "--seed", "1"]).status.success());
    let a1 = fs::read(dir.join("results.csv")).unwrap();
    assert!(run_in(&dir, &["run", "--config", "exp.toml", "--seed", "2"]).status.success());
    let b = fs::read(dir.join("results.csv")).unwrap();
    assert!(run_in(&dir, &["run", "--config", "exp.toml", "--seed", "1"]).status.success());
    let a2 = fs::read(dir.join("results.csv")).unwrap();

    assert_ne!(a1, b, "different seeds should change the data");
    assert_eq!(a1, a2, "equal seeds should reproduce bytes");
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = scratch("exitcodes");

    // Unknown flag: usage error.
    let out = run_in(&dir, &["run", "--nonsense"]);
    assert_eq!(out.status.code(), Some(1));

    // Help is a success.
    let out = run_in(&dir, &["--help"]);
    assert_eq!(out.status.code(), Some(0));

    // Invalid config: exit 1 with a readable message.
    write(
        &dir.join("bad.toml"),
        "[data]\np = 8\n[sweep]\nparameter = \"n\"\nvalues = []\nm = 2\n[run]\nmethods = [\"lasso\"]\noutput = \"x.csv\"\n",
    );
    let out = run_in(&dir, &["run", "--config", "bad.toml"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("sweep.values"));

    // Missing input file: exit 1.
    let out = run_in(&dir, &["summarize", "--input", "nope.csv", "--output", "s.csv"]);
    assert_eq!(out.status.code(), Some(1));

    // A run whose rows all fail: exit 2, CSV still written with errors.
    write(
        &dir.join("failing.toml"),
        r#"
[data]
p = 16
s = 3
sigma = 0.3

[sweep]
parameter = "n"
values = [5]
m = 2

[run]
methods = ["dsml"]
replications = 2
seed = 3
output = "failing.csv"

[tuning]
mu = 1e-9
"#,
    );
    let out = run_in(&dir, &["run", "--config", "failing.toml"]);
    assert_eq!(out.status.code(), Some(2));
    let csv = fs::read_to_string(dir.join("failing.csv")).unwrap();
    let data_lines: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(data_lines.len(), 2);
    for line in data_lines {
        assert!(line.contains("infeasible"), "error column missing: {line}");
    }

    // Summarizing a malformed CSV names the offending line.
    write(
        &dir.join("mangled.csv"),
        "method,sweep_value,replication,hamming,est_error,pred_error,pred_error_insample,wall_time_ms,comm_upstream,comm_downstream,error\nlasso,50,0,oops,1,1,1,0,0,0,\n",
    );
    let out = run_in(&dir, &["summarize", "--input", "mangled.csv", "--output", "s.csv"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("mangled.csv:2"));
}

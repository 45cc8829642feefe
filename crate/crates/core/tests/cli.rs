use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pseudosym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const EX1: [&str; 10] = [
    "--a1", "21", "--a2", "11", "--a3", "7", "--a4", "4", "--a21", "5",
];

fn with(cmd: &str, extra: &[&str]) -> Vec<String> {
    std::iter::once(cmd)
        .chain(EX1)
        .chain(extra.iter().copied())
        .map(String::from)
        .collect()
}

fn run_owned(args: Vec<String>) -> Output {
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    run(&refs)
}

#[test]
fn derive_example1() {
    let o = run_owned(with("derive", &[]));
    assert!(o.status.success());
    assert!(stdout(&o).contains("232 237 531 1447"));
}

#[test]
fn derive_reports_failing_condition() {
    let o = run(&[
        "derive", "--a1", "21", "--a2", "3", "--a3", "7", "--a4", "4", "--a21", "2",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cond4"));
}

#[test]
fn derive_rejects_nonpositive() {
    let o = run(&[
        "derive", "--a1", "0", "--a2", "3", "--a3", "7", "--a4", "4", "--a21", "2",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn basis_verify() {
    let o = run_owned(with("basis", &["--verify"]));
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("standard basis: VERIFIED"));
    assert!(out.contains("g_{2,1} = X1^52*X3^5 - X2^56*X4"));
}

#[test]
fn hilbert_with_oracle() {
    let o = run_owned(with("hilbert", &["--oracle", "10"]));
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("nondecreasing: YES"));
    assert!(out.contains("oracle agrees through n=10"));
    assert!(out.contains("H = 1, 4, 10, 20, 32,"));
}

#[test]
fn hilbert_json_has_schema() {
    let o = run_owned(with("hilbert", &["--json"]));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["Q"][0], 1);
    assert_eq!(v["multiplicity"], 232);
}

#[test]
fn verify_and_identities() {
    assert!(run_owned(with("verify", &[])).status.success());
    let o = run_owned(with("identities", &["--json"]));
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["identities"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["holds"] == true));
}

#[test]
fn gcd_three_example_is_flagged_not_inconsistent() {
    let args = [
        "--a1", "60", "--a2", "20", "--a3", "8", "--a4", "6", "--a21", "10",
    ];
    let mut d = vec!["derive"];
    d.extend(args);
    let o = run(&d);
    assert!(o.status.success());
    assert!(stdout(&o).contains("gcd 3"));
    let mut h = vec!["hilbert", "--oracle", "10"];
    h.extend(args);
    let o = run(&h);
    assert!(o.status.success());
    assert!(stdout(&o).contains("oracle disagrees from n=4"));
}

#[test]
fn sweep_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let o = run(&[
        "sweep",
        "--a1",
        "2..7",
        "--a2",
        "2..7",
        "--a3",
        "2..7",
        "--a4",
        "2..7",
        "--a21",
        "1..5",
        "--jobs",
        "2",
        "--csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("all checks pass: 50"));
    let csv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv.lines().count(), 6481);

    let o = run(&[
        "sweep", "--a1", "2..7", "--a2", "2", "--a3", "2..7", "--a4", "2..7", "--a21", "1",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["summary"]["valid"], 0);
}

#[test]
fn bad_range_is_invalid_input() {
    let o = run(&[
        "sweep", "--a1", "7..2", "--a2", "2", "--a3", "2", "--a4", "2", "--a21", "1",
    ]);
    assert_ne!(o.status.code(), Some(0));
}

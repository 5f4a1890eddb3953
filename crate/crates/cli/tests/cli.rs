use std::path::PathBuf;
use std::process::{Command, Output};

fn ssum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ssum"))
        .args(args)
        .output()
        .unwrap()
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ssum-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn solve_yes_exits_zero() {
    let p = temp_file("yes.txt", "3 8\n3 5 8\n");
    let o = ssum(&["solve", p.to_str().unwrap(), "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("decision: yes\n"));
}

#[test]
fn solve_no_exits_one() {
    let p = temp_file("no.txt", "2 5\n2 4\n");
    let o = ssum(&[
        "solve",
        p.to_str().unwrap(),
        "--seed",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["decision"], "no");
    assert_eq!(v["seed"], 1);
}

#[test]
fn malformed_count_exits_two_with_line() {
    let p = temp_file("bad.txt", "# header\n3 8\n3 5\n");
    let o = ssum(&["solve", p.to_str().unwrap(), "--seed", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn missing_file_exits_two() {
    let o = ssum(&["solve", "/nonexistent/instance.txt", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_is_deterministic_and_round_trips() {
    let args = ["gen", "--n", "10", "--w", "100", "--seed", "7"];
    let a = ssum(&args);
    let b = ssum(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let inst = ssum_cli::io::parse_instance(&text).unwrap();
    assert_eq!(inst.n(), 10);
    assert!(inst.items().iter().all(|&x| (1..=100).contains(&x)));
}

#[test]
fn gen_divisor_structured_tail() {
    let o = ssum(&[
        "gen",
        "--profile",
        "divisor-structured:6:2",
        "--n",
        "40",
        "--w",
        "300",
        "--seed",
        "5",
    ]);
    let inst = ssum_cli::io::parse_instance(&stdout(&o)).unwrap();
    assert_eq!(inst.items().iter().filter(|&&x| x % 6 != 0).count(), 2);
}

#[test]
fn invalid_profile_is_a_usage_error() {
    let o = ssum(&[
        "gen",
        "--profile",
        "gaussian",
        "--n",
        "3",
        "--w",
        "5",
        "--seed",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn omitted_seed_is_printed() {
    let o = ssum(&["gen", "--n", "3", "--w", "5"]);
    let err = String::from_utf8_lossy(&o.stderr);
    let seed = err
        .lines()
        .find_map(|l| l.strip_prefix("seed: "))
        .expect("seed on stderr");
    let again = ssum(&["gen", "--n", "3", "--w", "5", "--seed", seed]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn out_flag_writes_file() {
    let p = temp_file("gen-out.txt", "");
    let o = ssum(&[
        "gen",
        "--n",
        "4",
        "--w",
        "9",
        "--seed",
        "2",
        "--out",
        p.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let body = std::fs::read_to_string(&p).unwrap();
    assert!(ssum_cli::io::parse_instance(&body).is_ok());
}

#[test]
fn verify_reports_no_sparse_false_positives() {
    let o = ssum(&[
        "verify",
        "--count",
        "200",
        "--seed",
        "11",
        "--no-gate",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["false_positives_sparse"], 0);
    assert_eq!(v["count"], 200);
}

#[test]
fn verify_over_budget_exits_two() {
    let o = ssum(&[
        "verify",
        "--count",
        "5",
        "--w-range",
        "1000",
        "--oracle-budget",
        "10",
        "--seed",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bench_header_and_rows() {
    let o = ssum(&[
        "bench", "--n", "8", "--w", "16", "--t", "30,60", "--reps", "2", "--seed", "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("instance_id,n,w,t,algorithm,branch,decision,seed,wall_time_ns,candidate_set_size")
    );
    assert_eq!(lines.count(), 2 * 3 * 2);
}

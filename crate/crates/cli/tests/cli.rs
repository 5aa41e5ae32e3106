use std::process::{Command, Output};

fn qcong(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcong"))
        .args(args)
        .output()
        .expect("the binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn column(o: &Output) -> Vec<String> {
    stdout(o)
        .lines()
        .map(|l| l.split('\t').nth(1).unwrap().to_string())
        .collect()
}

#[test]
fn expand_b_by_name() {
    let o = qcong(&["expand", "--name", "B", "--order", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\t1\n1\t2\n2\t1\n3\t2\n4\t5\n5\t6\n");
}

#[test]
fn expand_euler_product_gives_pentagonal_signs() {
    let o = qcong(&["expand", "--spec", "f1", "--order", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(column(&o), ["1", "-1", "-1", "0", "0", "1", "0", "1"]);
}

#[test]
fn expand_notation_matches_name_and_reduces() {
    let by_spec = qcong(&[
        "expand",
        "--spec",
        "f2^4/(f1^2*f4^3)",
        "--order",
        "30",
        "--mod",
        "5",
    ]);
    let by_name = qcong(&["expand", "--name", "B", "--order", "30", "--mod", "5"]);
    assert_eq!(stdout(&by_spec), stdout(&by_name));
    let c = column(&by_spec);
    assert_eq!(c[4], "0");
    assert_eq!(c[9], "0");
}

#[test]
fn malformed_notation_exits_2_with_caret() {
    let o = qcong(&["expand", "--spec", "f1^("]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("f1^(\n    ^"), "{err}");
}

#[test]
fn coefficient_of_laurent_quotient() {
    let o = qcong(&["coeff", "--spec", "q^-1*f1", "--n", "-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn oracle_agrees_with_the_generating_function() {
    let o = qcong(&["oracle", "--n", "60"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS counts of B agree"));
}

#[test]
fn every_identity_passes() {
    let o = qcong(&["verify-identity", "--all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains(" 0 failed"));
}

#[test]
fn unknown_identity_lists_names() {
    let o = qcong(&["verify-identity", "--name", "no_such_identity"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("b_3n_plus_2"));
}

#[test]
fn parity_and_mod_five_theorem() {
    let o = qcong(&["verify-theorem", "--name", "thm1.1", "--nmax", "2000"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn unknown_theorem_exits_2_with_names() {
    let o = qcong(&["verify-theorem", "--name", "thm9.9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("thm1.1, thm1.2"));
}

#[test]
fn inadmissible_prime_is_a_usage_error() {
    let o = qcong(&["verify-theorem", "--name", "thm1.4", "--primes", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_report_for_weighted_theorem() {
    let o = qcong(&[
        "--json",
        "verify-theorem",
        "--name",
        "thm1.6",
        "--nmax",
        "20",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["reports"][0]["passed"], true);
    assert_eq!(v["reports"][0]["checked"], 21);
}

#[test]
fn scan_from_config_file() {
    let dir = std::env::temp_dir().join(format!("qcong-scan-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("scan.json");
    std::fs::write(
        &path,
        r#"{"spec": "1/f1", "A_max": 7, "moduli": [5, 7], "n_max": 100}"#,
    )
    .unwrap();
    let o = qcong(&["scan", "--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("A=5 r=4 m=5 evidence=101 known"), "{text}");
    assert!(text.contains("A=7 r=5 m=7 evidence=101 known"), "{text}");
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_qcong"))
            .args(["scan", "--name", "B", "--a-max", "20", "--nmax", "100"])
            .env("QCONG_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn invalid_thread_count_is_a_usage_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_qcong"))
        .args(["oracle", "--n", "5"])
        .env("QCONG_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn defaults_table_lists_prime_sets() {
    let o = qcong(&["--show-defaults"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("7,11,19,23"));
}

#[test]
fn missing_subcommand_and_bad_flags_exit_2() {
    assert_eq!(qcong(&[]).status.code(), Some(2));
    assert_eq!(qcong(&["expand", "--order", "5"]).status.code(), Some(2));
    assert_eq!(
        qcong(&["expand", "--name", "B", "--mod", "1"])
            .status
            .code(),
        Some(2)
    );
}

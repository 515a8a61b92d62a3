use std::process::{Command, Output};

fn qkfl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qkfl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qkfl(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn quantum_products() {
    assert_eq!(
        stdout(&["--n", "5", "mult", "O[2,3]", "O[4,5]"]),
        "O[5,2] - q1*O[1,2] + q1*O[1,3]"
    );
    assert_eq!(stdout(&["--n", "5", "lr", "[2,1]", "[5,1]"]), "q1*q2*O[1,2]");
    assert_eq!(
        stdout(&["--n", "3", "--equivariant", "mult", "O[2,3]", "O[2,1]"]),
        "(1 - z1)*O[2,1] + z1*O[3,1]"
    );
    assert_eq!(
        stdout(&["--n", "5", "--equivariant", "chev", "--k", "1", "O[2,3]"]),
        "(1 - z1)*O[2,3] + z1*O[3,2] - z1*O[4,2] + z1*O[4,3]"
    );
}

#[test]
fn json_output() {
    let text = stdout(&["--n", "3", "--format", "json", "mult", "O[1,3]", "2*q1*O[1,2]"]);
    assert_eq!(
        text,
        r#"{"n":3,"terms":[{"i":4,"j":2,"bar":[1,2],"degree":[1,0],"coeff":[{"exp":[0,0],"c":"2"}]}]}"#
    );
}

#[test]
fn combinatorics_commands() {
    assert_eq!(
        stdout(&["--n", "5", "iset", "[3,2]"]),
        "{[1,2], [1,3], [2,3], [2,4], [3,2], [3,4]}"
    );
    assert_eq!(stdout(&["--n", "5", "iset", "[1,2]"]), "{[1,2], [1,3]}");
    assert_eq!(stdout(&["--n", "5", "nbhd", "--side", "schubert", "--d", "1,0", "[3,2]"]), "[5,2]");
    assert_eq!(stdout(&["--n", "5", "invariant", "--d", "0,0", "[1,5]", "[1,5]", "[1,5]"]), "1");
}

#[test]
fn projection_drops_q2() {
    assert_eq!(stdout(&["--n", "4", "project", "q1*q2*O[3,2]"]), "q*O^2");
}

#[test]
fn verify_passes_and_writes_reports() {
    let dir = std::env::temp_dir().join(format!("qkfl-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = qkfl(&[
        "--n", "3", "--format", "json", "--out", path.to_str().unwrap(), "verify", "iset-oracle",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["cases_run"], 6);
    assert_eq!(report["passed"], true);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["--n", "5", "mult", "O[1,6]", "O[1,2]"][..],
        &["--n", "2", "table"],
        &["--n", "4", "verify", "no-such-suite"],
        &["--n", "4", "chev", "--k", "3", "O[1,2]"],
        &["--n", "4", "frobnicate"],
        &["--n", "4", "--cutoff", "-1,0", "psi", "O[1,2]"],
    ] {
        let out = qkfl(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

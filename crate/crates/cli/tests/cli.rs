use std::io::Write;
use std::process::{Command, Output, Stdio};

fn pfkit(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pfkit"))
        .args(args)
        .env_remove("PFKIT_ORACLE_BOUND")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // The process may exit on a usage error before reading its input.
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("pfkit-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p.to_str().unwrap().to_string()
}

const J2_UPPER: &str = r#"{"n": 4, "ring": "int", "upper": [1, 0, 0, 0, 0, 1]}"#;
const EMBEDDED_I2: &str = "4\n0 0 1 0\n0 0 0 1\n-1 0 0 0\n0 -1 0 0\n";

#[test]
fn pf_of_small_inputs() {
    let o = pfkit(&["pf", "-"], "2\n0 5\n-5 0\n");
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "5\n"));
    let o = pfkit(&["pf", "-", "--check"], J2_UPPER);
    assert_eq!(stdout(&o), "1\nMATCH\n");
    let o = pfkit(&["pf", "-", "--check"], EMBEDDED_I2);
    assert_eq!(
        (o.status.code(), stdout(&o).as_str()),
        (Some(0), "-1\nMATCH\n")
    );
}

#[test]
fn pf_jsonl() {
    let o = pfkit(&["pf", "-", "--check", "--format", "jsonl"], J2_UPPER);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["pfaffian"], "1");
    assert_eq!(v["check"], "MATCH");
}

#[test]
fn pf_over_other_rings() {
    let o = pfkit(&["pf", "-", "--ring", "zp:7"], "2\n0 12\n-12 0\n");
    assert_eq!(stdout(&o), "5 mod 7\n");
    let o = pfkit(&["pf", "-"], "2\n0 1/2\n-1/2 0\n");
    assert_eq!(stdout(&o), "1/2\n");
    let o = pfkit(&["pf", "-"], "2\n0 x*y\n-x*y 0\n");
    assert_eq!(stdout(&o), "x*y\n");
    let o = pfkit(&["pf", "-", "--ring", "zp:8"], "2\n0 1\n-1 0\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn charpoly_examples() {
    let o = pfkit(&["charpoly", "--symbolic", "--dim", "4"], "");
    assert_eq!(
        stdout(&o).lines().next(),
        Some("1, a12 + a34, a12*a34 - a13*a24 + a14*a23")
    );
    let o = pfkit(&["charpoly", "-"], J2_UPPER);
    assert_eq!(stdout(&o), "1, 2, 1\nx^2 + 2*x + 1\n");
    let o = pfkit(&["charpoly", "-"], "2\n0 7\n-7 0\n");
    assert_eq!(stdout(&o).lines().next(), Some("1, 7"));
}

#[test]
fn pairs_examples() {
    let j1 = temp_file("j1.txt", "2\n0 1\n-1 0\n");
    let o = pfkit(&["pairs", &j1, &j1, "--check"], "");
    assert_eq!(
        (o.status.code(), stdout(&o).as_str()),
        (Some(0), "1, 1\nMATCH\n")
    );

    let a = temp_file("a6.txt", "6\n0 1 -2 3 0 4\n-1 0 5 -1 2 2\n2 -5 0 3 -3 1\n-3 1 -3 0 4 -2\n0 -2 3 -4 0 5\n-4 -2 -1 2 -5 0\n");
    let j3 = temp_file(
        "j3.json",
        r#"{"n": 6, "upper": [1,0,0,0,0, 0,0,0,0, 1,0,0, 0,0, 1]}"#,
    );
    let pairs = pfkit(&["pairs", &a, &j3], "");
    let charpoly = pfkit(&["charpoly", &a], "");
    assert_eq!(
        stdout(&pairs).lines().next(),
        stdout(&charpoly).lines().next()
    );

    let o = pfkit(&["pairs", &j1, &j3], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("different dimensions"));
}

#[test]
fn rejected_inputs() {
    let o = pfkit(&["pf", "-"], "3\n0 1 2\n-1 0 3\n-2 -3 0\n");
    assert_eq!(o.status.code(), Some(2));
    let o = pfkit(&["pf", "-"], "2\n0 1\n1 0\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("(1, 2)"), "{}", stderr(&o));
    let o = pfkit(&["pf", "-"], "2\n0 1\n");
    assert_eq!(o.status.code(), Some(2));
    let o = pfkit(&["pf", "/nonexistent/matrix.txt"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = pfkit(&["frobnicate"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_examples() {
    for args in [
        &[
            "verify", "all", "--dim", "6", "--trials", "50", "--ring", "int", "--bound", "5",
            "--seed", "42",
        ][..],
        &["verify", "pce", "--symbolic", "--dim", "4"],
        &[
            "verify", "mp", "--dim", "4", "--trials", "100", "--ring", "zp:97", "--seed", "7",
        ],
        &[
            "verify", "all", "--dim", "4", "--trials", "5", "--ring", "rat",
        ],
        &["verify", "clow", "--dim", "6", "--trials", "3"],
    ] {
        let o = pfkit(args, "");
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        for line in stdout(&o).lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(v["pass"], true);
        }
    }
}

#[test]
fn verify_all_symbolic() {
    let o = pfkit(&["verify", "all", "--symbolic", "--dim", "4"], "");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().count(), 14);
}

#[test]
fn verify_with_an_input_file() {
    let o = pfkit(
        &["verify", "all", "--input", "-", "--format", "human"],
        J2_UPPER,
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).ends_with("14 checks, 0 failed\n"));
}

#[test]
fn verify_usage_errors() {
    let o = pfkit(&["verify", "bogus"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = pfkit(&["verify", "pb", "--dim", "5"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = pfkit(&["verify", "pb", "--dim", "14"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("oracle bound"));
}

#[test]
fn oracle_bound_from_the_environment() {
    let run = |bound: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_pfkit"));
        c.args(["verify", "pb", "--dim", "6", "--trials", "1"]);
        match bound {
            Some(b) => c.env("PFKIT_ORACLE_BOUND", b),
            None => c.env_remove("PFKIT_ORACLE_BOUND"),
        };
        c.output().unwrap().status.code()
    };
    assert_eq!(run(None), Some(0));
    assert_eq!(run(Some("4")), Some(2));
    let o = pfkit(&["pf", "-", "--check", "--oracle-bound", "2"], J2_UPPER);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn same_seed_same_bytes() {
    let args = [
        "verify", "all", "--dim", "4", "--trials", "20", "--seed", "9",
    ];
    let a = pfkit(&args, "");
    let b = pfkit(&args, "");
    assert_eq!(a.stdout, b.stdout);
    let c = pfkit(
        &[
            "verify", "all", "--dim", "4", "--trials", "20", "--seed", "10",
        ],
        "",
    );
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn oracle_dumps() {
    let o = pfkit(&["oracle-dump", "matchings", "--dim", "6"], "");
    assert_eq!(stdout(&o).lines().count(), 15);
    let o = pfkit(
        &[
            "oracle-dump",
            "matchings",
            "--dim",
            "4",
            "--format",
            "human",
        ],
        "",
    );
    assert_eq!(
        stdout(&o),
        "+1 ((1,2),(3,4))\n-1 ((1,3),(2,4))\n+1 ((1,4),(2,3))\n"
    );
    let o = pfkit(
        &[
            "oracle-dump",
            "pclow",
            "--dim",
            "4",
            "--len",
            "2",
            "--from",
            "3",
            "--format",
            "human",
        ],
        "",
    );
    assert_eq!(stdout(&o), "+1 <((3,4),(4,3))>\n");
    let o = pfkit(
        &[
            "oracle-dump",
            "altclow",
            "--dim",
            "3",
            "--len",
            "2",
            "--from",
            "2",
            "--headed",
        ],
        "",
    );
    assert_eq!(stdout(&o), "{\"clows\":[[[2,3],[3,2]]]}\n");
    let o = pfkit(&["oracle-dump", "pclow", "--dim", "8"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = pfkit(&["oracle-dump", "matchings", "--dim", "14"], "");
    assert_eq!(o.status.code(), Some(2));
}

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fundpoly::code::io::{parse_dense, to_alist};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fundpoly"))
}

fn wiberg9() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/examples/wiberg9.txt")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn enumerate_example_code() {
    let o = run(&["enumerate", "--input", wiberg9().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stderr(&o).trim(),
        "16 trivial, 4 nontrivial, theorem_holds: yes"
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 20);
    assert_eq!(v["reports"].as_array().unwrap().len(), 20);
    assert_eq!(v["summary"]["theorem_holds"], "yes");
}

#[test]
fn enumerate_identity_and_non_cycle_codes() {
    let dir = tempfile::tempdir().unwrap();
    let id = write(&dir, "id.txt", "3 3\n1 0 0\n0 1 0\n0 0 1\n");
    let o = run(&["enumerate", "--input", &id]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).starts_with("1 trivial, 0 nontrivial, theorem_holds: not-applicable"));

    let quarter = write(&dir, "q.txt", "3 5\n0 0 1 0 1\n1 0 1 1 1\n0 0 1 1 1\n");
    let o = run(&["enumerate", "--input", &quarter]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("theorem_holds: not-applicable"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert!(reports.iter().any(|r| r["half_integral"] == false));
}

#[test]
fn enumerate_reads_alist_and_is_job_independent() {
    let dir = tempfile::tempdir().unwrap();
    let dense = std::fs::read_to_string(wiberg9()).unwrap();
    let alist = write(&dir, "w.alist", &to_alist(&parse_dense(&dense).unwrap()));
    let a = run(&[
        "enumerate",
        "--input",
        &alist,
        "--format",
        "alist",
        "--jobs",
        "1",
    ]);
    let b = run(&[
        "enumerate",
        "--input",
        wiberg9().to_str().unwrap(),
        "--jobs",
        "4",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn input_and_guard_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(&dir, "bad.txt", "2 2\n1 2\n0 1\n");
    assert_eq!(run(&["enumerate", "--input", &bad]).status.code(), Some(2));
    assert_eq!(
        run(&["enumerate", "--input", "/nonexistent/h.txt"])
            .status
            .code(),
        Some(2)
    );
    let w = wiberg9();
    let w = w.to_str().unwrap();
    assert_eq!(
        run(&["enumerate", "--input", w, "--max-n", "5"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["enumerate", "--input", w, "--max-degree", "2"])
            .status
            .code(),
        Some(3)
    );
    // guards only go down
    assert_eq!(
        run(&["enumerate", "--input", w, "--max-n", "99"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["enumerate", "--input", w, "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn decode_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let w = wiberg9();
    let w = w.to_str().unwrap();
    let ones = write(&dir, "ones", "1 1 1 1 1 1 1 1 1\n");
    let o = run(&["decode", "--input", w, "--lambda", &ones]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["certificate"], "ml_codeword");
    assert_eq!(v["optimum"], serde_json::json!(vec!["0/1"; 9]));

    // separating cost of (1/2,1/2,1/2,1,0,0,1/2,1/2,1/2)
    let sep = write(&dir, "sep", "0 0 0 -5 5 5 0 0 0");
    let o = run(&["decode", "--input", w, "--lambda", &sep]);
    assert_eq!(o.status.code(), Some(10));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let h = "1/2";
    assert_eq!(
        v["optimum"],
        serde_json::json!([h, h, h, "1/1", "0/1", "0/1", h, h, h])
    );

    let bad = write(&dir, "bad", "1 1 oops");
    assert_eq!(
        run(&["decode", "--input", w, "--lambda", &bad])
            .status
            .code(),
        Some(2)
    );
    let short = write(&dir, "short", "1 1");
    assert_eq!(
        run(&["decode", "--input", w, "--lambda", &short])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["decode", "--input", w]).status.code(), Some(2));
    let o = run(&["decode", "--input", w, "--p", "1/10", "--seed", "3"]);
    assert!(matches!(o.status.code(), Some(0) | Some(10)));
}

#[test]
fn trials_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let w = wiberg9();
    let w = w.to_str().unwrap();
    let csv1 = dir.path().join("a.csv");
    let a = run(&[
        "trials",
        "--input",
        w,
        "--p",
        "1/5",
        "--trials",
        "40",
        "--seed",
        "9",
        "--jobs",
        "1",
        "--csv",
        csv1.to_str().unwrap(),
    ]);
    let csv2 = dir.path().join("b.csv");
    let b = run(&[
        "trials",
        "--input",
        w,
        "--p",
        "1/5",
        "--trials",
        "40",
        "--seed",
        "9",
        "--csv",
        csv2.to_str().unwrap(),
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c1 = std::fs::read_to_string(&csv1).unwrap();
    assert_eq!(c1, std::fs::read_to_string(&csv2).unwrap());
    assert!(c1.starts_with("trial,seed,flips,lp_kind,lp_value,ml_value\n"));
    assert_eq!(c1.lines().count(), 41);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert!(v["ml_word_errors"].as_u64() <= v["lp_word_errors"].as_u64());
}

#[test]
fn trials_edge_cases() {
    let w = wiberg9();
    let w = w.to_str().unwrap();
    let o = run(&[
        "trials", "--input", w, "--p", "1/10", "--trials", "0", "--seed", "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for k in [
        "trials",
        "lp_word_errors",
        "ml_word_errors",
        "nontrivial_outputs",
    ] {
        assert_eq!(v[k], 0, "{k}");
    }
    for p in ["1/2", "0", "3/4", "x"] {
        let o = run(&["trials", "--input", w, "--p", p]);
        assert_eq!(o.status.code(), Some(2), "p = {p}");
    }
}

#[test]
fn gen_writes_cycle_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.txt");
    let out = out.to_str().unwrap();
    let a = run(&[
        "gen", "--n", "9", "--r", "6", "--seed", "17", "--output", out,
    ]);
    assert_eq!(a.status.code(), Some(0));
    let first = std::fs::read_to_string(out).unwrap();
    let h = parse_dense(&first).unwrap();
    assert_eq!((h.r(), h.n()), (6, 9));
    assert!((0..9).all(|x| h.column_weight(x) == 2));
    run(&[
        "gen", "--n", "9", "--r", "6", "--seed", "17", "--output", out,
    ]);
    assert_eq!(first, std::fs::read_to_string(out).unwrap());

    assert_eq!(run(&["gen", "--n", "1", "--r", "1"]).status.code(), Some(2));
    let o = run(&["gen", "--cycles", "3,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(parse_dense(&stdout(&o)).unwrap().is_cycle_code());
}

#[test]
fn constraints_dump() {
    let o = run(&["constraints", "--input", wiberg9().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 42);
}

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn dihedral(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dihedral")).args(args).output().expect("binary runs")
}

fn dihedral_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dihedral"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dihedral-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

const M0: &str = "0 0 1 0\n1 0 0 0\n0 0 0 1\n0 1 0 0\n";

#[test]
fn counterexample_is_infeasible() {
    let o = dihedral(&["solve", "--rows", "6,6,6,2,1,1", "--cols", "4,4,2,2,2,4,4", "--class", "zero-one", "--subgroup", "v"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("Ainfty.c: false"), "{}", stdout(&o));
}

#[test]
fn rounded_witness_for_times() {
    let o = dihedral(&[
        "solve", "--rows", "3,2,2,3", "--cols", "3,2,2,3", "--class", "integral", "--subgroup", "times", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["decision"], "feasible");
    assert_eq!(v["witness"][0], serde_json::json!(["2", "0", "0", "1"]));
    assert_eq!(v["witness"][1], serde_json::json!(["0", "1", "1", "0"]));
}

#[test]
fn antidiag_needs_reversed_columns() {
    let o = dihedral(&["solve", "--rows", "1,2", "--cols", "1,2", "--class", "real", "--subgroup", "antidiag"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn input_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["solve", "--rows", "1,x", "--cols", "1,1", "--class", "real", "--subgroup", "trivial"],
        &["solve", "--rows", "1,2", "--cols", "1,1", "--class", "real", "--subgroup", "trivial"],
        &["solve", "--rows", "1,1", "--cols", "1,1,0", "--class", "real", "--subgroup", "rot90"],
        &["solve", "--rows", "1,1", "--cols", "2", "--class", "real", "--subgroup", "sideways"],
        &["solve", "--rows", "1,1", "--cols", "2"],
    ];
    for args in cases {
        assert_eq!(dihedral(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn solve_reads_instance_documents() {
    let doc = r#"{"rows": ["1", "2", "1"], "cols": [1, 2, 1], "class": "zero-one", "subgroup": "rot90"}"#;
    let o = dihedral_stdin(&["solve", "--instance", "-"], doc);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 1 0\n1 0 1\n0 1 0"), "{}", stdout(&o));
}

#[test]
fn solve_then_check_round_trip() {
    let instances = [
        ("2,2,2", "2,2,2", "integral", "full"),
        ("3/2,1/2", "1,1", "real", "trivial"),
        ("2,1,1,2", "2,1,1,2", "zero-one", "times"),
        ("6,6,6,2,1,1", "4,4,2,2,2,4,4", "zero-one", "trivial"),
        ("1,3,1", "1,3,1", "integral", "plus"),
    ];
    for (rows, cols, class, subgroup) in instances {
        let o = dihedral(&["solve", "--rows", rows, "--cols", cols, "--class", class, "--subgroup", subgroup, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{rows} {cols} {class} {subgroup}");
        let c = dihedral_stdin(&["check", "--matrix", "-"], &stdout(&o));
        assert_eq!(c.status.code(), Some(0), "{}", stdout(&c));
        assert!(stdout(&c).starts_with("pass"));
    }
}

#[test]
fn check_centrosymmetric_example() {
    let path = temp_file("m0.txt", M0);
    let p = path.to_str().unwrap();
    let ok = dihedral(&["check", "--matrix", p, "--rows", "1,1,1,1", "--cols", "1,1,1,1", "--subgroup", "rot180", "--class", "zero-one"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let bad = dihedral(&["check", "--matrix", p, "--subgroup", "times", "--class", "zero-one"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("invariance bad"), "{}", stdout(&bad));
}

#[test]
fn check_rejects_ragged_and_wrong_margins() {
    let ragged = temp_file("ragged.txt", "1 0\n0\n");
    let o = dihedral(&["check", "--matrix", ragged.to_str().unwrap(), "--subgroup", "trivial", "--class", "real"]);
    assert_eq!(o.status.code(), Some(2));
    let o = dihedral_stdin(&["check", "--matrix", "-", "--rows", "1,2", "--cols", "2,1", "--subgroup", "trivial", "--class", "integral"], "1 0\n0 1\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("row[1] expected 2 got 1"), "{}", stdout(&o));
}

#[test]
fn sweep_exit_codes() {
    let o = dihedral(&["sweep", "--max-m", "3", "--max-n", "3", "--max-total", "6", "--classes", "zero-one", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("0 discrepancies\n"), "{}", stdout(&o));

    let o = dihedral(&["sweep", "--max-m", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 checks"));

    let o = dihedral(&["sweep", "--max-m", "2", "--max-n", "2", "--max-total", "2", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!stdout(&o).ends_with(" 0 discrepancies\n"));

    assert_eq!(dihedral(&["sweep", "--classes", "complex"]).status.code(), Some(2));
}

#[test]
fn gen_is_deterministic_and_structural() {
    let a = dihedral(&["gen", "--seed", "1", "--subgroup", "rot180"]);
    let b = dihedral(&["gen", "--seed", "1", "--subgroup", "rot180"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let nums = |k: &str| -> Vec<i64> { v[k].as_array().unwrap().iter().map(|x| x.as_str().unwrap().parse().unwrap()).collect() };
    let (r, s) = (nums("rows"), nums("cols"));
    assert_eq!(r.iter().sum::<i64>(), s.iter().sum::<i64>());
    assert!(r.iter().eq(r.iter().rev()) && s.iter().eq(s.iter().rev()));

    for seed in 0..20 {
        let seed = seed.to_string();
        let o = dihedral(&["gen", "--seed", &seed, "--subgroup", "trivial", "--class", "zero-one"]);
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let r: Vec<i64> = v["rows"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().parse().unwrap()).collect();
        let s: Vec<i64> = v["cols"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().parse().unwrap()).collect();
        assert!(r.iter().all(|&x| x <= s.len() as i64) && s.iter().all(|&x| x <= r.len() as i64));
        // generated documents feed straight back into solve
        let solved = dihedral_stdin(&["solve", "--instance", "-"], &stdout(&o));
        assert!(matches!(solved.status.code(), Some(0 | 1)));
    }
}

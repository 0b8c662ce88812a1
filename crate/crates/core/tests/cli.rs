use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arcconn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn value_of(out: &str, key: &str) -> usize {
    out.lines()
        .find_map(|l| l.strip_prefix(key))
        .and_then(|rest| rest.trim_start_matches([' ', '=', '<']).split_whitespace().next())
        .and_then(|v| v.parse().ok())
        .unwrap_or_else(|| panic!("no `{key}` in:\n{out}"))
}

#[test]
fn lambda_command() {
    let o = run(&["lambda", "cn:5"]);
    assert_eq!(code(&o), 0);
    assert_eq!(value_of(&stdout(&o), "lambda"), 1);
    assert_eq!(value_of(&stdout(&run(&["lambda", "bkm:4"])), "lambda"), 3);
    assert_eq!(code(&run(&["lambda", "file:missing.dg"])), 2);
    assert_eq!(code(&run(&["lambda", "cn:"])), 2);
}

#[test]
fn lambda_on_non_strong_input_warns() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("path.dg");
    std::fs::write(&path, "n 3\n0 1\n1 2\n").unwrap();
    let o = run(&["lambda", &format!("file:{}", path.display())]);
    assert_eq!(code(&o), 0);
    assert_eq!(value_of(&stdout(&o), "lambda"), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not strong"));
}

#[test]
fn lambda2_command() {
    assert_eq!(value_of(&stdout(&run(&["lambda2", "cn:3", "x", "cn:3"])), "lambda2"), 2);
    assert_eq!(value_of(&stdout(&run(&["lambda2", "bkm:3 x bkm:4"])), "lambda2"), 5);
    assert_eq!(value_of(&stdout(&run(&["lambda2", "bcm:4"])), "lambda2"), 2);

    let o = run(&["lambda2", "bkm:3", "x", "bkm:3", "--sample", "4", "--seed", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("upper bound"));
    // Sampling needs an explicit seed.
    assert_eq!(code(&run(&["lambda2", "bkm:3", "--sample", "4"])), 2);
}

#[test]
fn check_commands() {
    let o = run(&["check", "table1", "--max", "4"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
    assert_eq!(
        code(&run(&[
            "check",
            "thm31",
            "--trials",
            "50",
            "--max-order",
            "6",
            "--seed",
            "1"
        ])),
        0
    );
    assert_eq!(
        code(&run(&[
            "check",
            "bounds",
            "--trials",
            "100",
            "--max-order",
            "4",
            "--seed",
            "1"
        ])),
        0
    );
    assert_eq!(
        code(&run(&[
            "check",
            "eq2",
            "--trials",
            "10",
            "--max-order",
            "3",
            "--seed",
            "1"
        ])),
        0
    );
    assert_eq!(code(&run(&["check", "thm31", "--trials", "5"])), 2);
    assert_eq!(code(&run(&["check", "nothing"])), 2);
}

fn members_in(path: &Path) -> usize {
    let j: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    j["members"].as_array().unwrap().len()
}

#[test]
fn construct_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&[&str], usize); 4] = [
        (&["p51", "-n", "4", "-m", "4"], 2),
        (&["p52", "-n", "4", "-m", "4"], 3),
        (&["p53", "-n", "3", "-m", "5", "--shape", "star"], 2),
        (&["p54", "-n", "3", "-m", "5"], 5),
    ];
    for (i, (args, want)) in cases.iter().enumerate() {
        let path = dir.path().join(format!("c{i}.json"));
        let mut full = vec!["construct"];
        full.extend_from_slice(args);
        full.extend(["-S", "0,0:1,1", "--out", path.to_str().unwrap()]);
        let o = run(&full);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(members_in(&path), *want);
        assert_eq!(code(&run(&["verify", "--cert", path.to_str().unwrap()])), 0);
    }

    let o = run(&["construct", "lift", "--g", "cn:3", "--h", "cn:3", "-S", "0,0:1,1"]);
    assert_eq!(code(&o), 0);
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!j["members"].as_array().unwrap().is_empty());

    assert_eq!(code(&run(&["construct", "p52", "-n", "4", "-m", "4", "-S", "0,0"])), 2);
    assert_eq!(
        code(&run(&["construct", "p52", "-n", "4", "-m", "2", "-S", "0,0:1,1"])),
        2
    );
    assert_eq!(
        code(&run(&["construct", "p52", "-n", "4", "-m", "4", "-S", "0,0:9,9"])),
        2
    );
}

#[test]
fn verify_rejects_tampered_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let o = run(&[
        "construct",
        "p51",
        "-n",
        "3",
        "-m",
        "3",
        "-S",
        "0,0:1,1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let mut j: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let first = j["members"][0].clone();
    j["members"][1] = first;
    std::fs::write(&path, j.to_string()).unwrap();
    assert_eq!(code(&run(&["verify", "--cert", path.to_str().unwrap()])), 1);

    // Against an explicit host that lacks the arcs.
    let o = run(&[
        "construct",
        "p51",
        "-n",
        "3",
        "-m",
        "3",
        "-S",
        "0,0:1,1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        code(&run(&["verify", "--cert", path.to_str().unwrap(), "--graph", "cn:9"])),
        1
    );
    assert_eq!(code(&run(&["verify", "--cert", "/no/such/file.json"])), 2);
}

#[test]
fn export_command() {
    let o = run(&["export", "cn:3", "--dot"]);
    assert_eq!(code(&o), 0);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 3);

    let o = run(&["export", "cn:3", "x", "bcm:3", "--json"]);
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["n"], 9);
    assert_eq!(j["product"]["n"], 3);
    assert_eq!(j["product"]["m"], 3);

    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("c.json");
    let o = run(&[
        "construct",
        "p54",
        "-n",
        "3",
        "-m",
        "4",
        "-S",
        "0,0:1,1",
        "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let dot = stdout(&run(&["export", "--cert", cert.to_str().unwrap(), "--dot"]));
    let colors: std::collections::BTreeSet<&str> = dot
        .lines()
        .filter(|l| l.contains("penwidth"))
        .filter_map(|l| l.split("color=").nth(1)?.split(',').next())
        .collect();
    assert_eq!(colors.len(), 4);

    assert_eq!(code(&run(&["export", "cn:3", "--yaml"])), 2);
    assert_eq!(code(&run(&["export", "cn:3"])), 2);
}

#[test]
fn exported_text_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.dg");
    let o = run(&["export", "cn:3", "x", "cn:3", "--text", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let spec = format!("file:{}", path.display());
    assert_eq!(value_of(&stdout(&run(&["lambda2", &spec])), "lambda2"), 2);
    assert_eq!(value_of(&stdout(&run(&["lambda", &spec])), "lambda"), 2);
}

#[test]
fn hunt_command() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&[
        "hunt",
        "--trials",
        "100",
        "--max-order",
        "4",
        "--seed",
        "7",
        "--classes",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    // Class pairs sit one above the lower bound.
    assert!(out.lines().any(|l| l.trim().starts_with("1:")), "{out}");
    assert!(!out.lines().any(|l| l.trim().starts_with('-')));

    let o = run(&["hunt", "--trials", "0", "--seed", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("trials: 0"));
    assert_eq!(code(&run(&["hunt", "--trials", "3"])), 2);
}

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fourtree")).current_dir(dir).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) {
    fs::write(dir.join(name), text).unwrap();
}

#[test]
fn solve_exit_codes() {
    let d = tempfile::tempdir().unwrap();
    write(d.path(), "c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    write(d.path(), "p5.txt", "5 4\n0 1\n1 2\n2 3\n3 4\n");
    write(d.path(), "k3.txt", "3 3\n0 1\n1 2\n2 0\n");

    let o = run(d.path(), &["solve", "c4.txt", "0", "1", "2", "3", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["certificate"]["kind"], "square");

    let o = run(d.path(), &["solve", "p5.txt", "0", "1", "3", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "tree 0 1 2 3 4");

    let o = run(d.path(), &["solve", "k3.txt", "0", "1", "2", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("[0, 1, 2]"));

    let o = run(d.path(), &["solve", "p5.txt", "0", "1", "3", "9"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(d.path(), &["solve", "c4.txt", "0", "1", "2", "3", "--dot"]);
    assert!(stdout(&o).starts_with("graph G {"));
    assert!(stdout(&o).contains("A0"));
}

#[test]
fn verify_certificates() {
    let d = tempfile::tempdir().unwrap();
    let g = run(
        d.path(),
        &["gen", "square", "--s", "1,2,1,1", "--a", "1,2,1,1", "--r", "2", "--seed", "3", "--cert", "sq.json"],
    );
    assert_eq!(g.status.code(), Some(0), "{}", String::from_utf8_lossy(&g.stderr));
    write(d.path(), "sq.txt", &stdout(&g));
    assert_eq!(run(d.path(), &["verify", "sq.txt", "sq.json"]).status.code(), Some(0));

    let mut c: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(d.path().join("sq.json")).unwrap()).unwrap();
    let moved = c["S"][1].as_array_mut().unwrap().pop().unwrap();
    c["R"].as_array_mut().unwrap().push(moved);
    write(d.path(), "bad.json", &c.to_string());
    let o = run(d.path(), &["verify", "sq.txt", "bad.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("item 9"), "{}", stdout(&o));

    c["R"].as_array_mut().unwrap().push(serde_json::json!(999));
    write(d.path(), "unknown.json", &c.to_string());
    assert_eq!(run(d.path(), &["verify", "sq.txt", "unknown.json"]).status.code(), Some(2));

    let o = run(d.path(), &["solve", "sq.txt", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    write(d.path(), "res.json", &stdout(&o));
    assert_eq!(run(d.path(), &["verify", "sq.txt", "res.json"]).status.code(), Some(0));
}

#[test]
fn fuzz_reports() {
    let d = tempfile::tempdir().unwrap();
    let o = run(d.path(), &["fuzz", "--count", "100", "--max-n", "10", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "100/100 agree");
    assert_eq!(stdout(&run(d.path(), &["fuzz", "--count", "100", "--max-n", "10", "--seed", "7"])), stdout(&o));

    let o = run(d.path(), &["fuzz", "--count", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0/0 agree");

    let o = run(d.path(), &["fuzz", "--count", "200", "--inject-bug", "--out", "ce.txt"]);
    assert_eq!(o.status.code(), Some(1));
    let ce = fs::read_to_string(d.path().join("ce.txt")).unwrap();
    assert!(ce.contains("# terminals"));
    assert_eq!(run(d.path(), &["solve", "ce.txt"]).status.code(), Some(1));
}

#[test]
fn reduce_and_oracles() {
    let d = tempfile::tempdir().unwrap();
    write(d.path(), "c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let o = run(d.path(), &["reduce", "c5.txt", "0", "2"]);
    assert_eq!(o.status.code(), Some(0));
    write(d.path(), "red.txt", &stdout(&o));
    assert!(stdout(&o).contains("# terminals 4 5 6 7"));
    assert_eq!(run(d.path(), &["oracle", "red.txt", "4", "5", "6", "7", "--kind", "centered"]).status.code(), Some(0));
    assert_eq!(run(d.path(), &["oracle", "c5.txt", "0", "2", "--kind", "cycle"]).status.code(), Some(0));
    assert_eq!(run(d.path(), &["reduce", "c5.txt", "0", "1"]).status.code(), Some(2));
}

#[test]
fn bench_tables() {
    let d = tempfile::tempdir().unwrap();
    let o = stdout(&run(d.path(), &["bench", "--sizes", "200,400", "--reps", "1"]));
    assert_eq!(o.lines().count(), 4);
    assert!(o.contains("exponent"));
    let o = stdout(&run(d.path(), &["bench", "--sizes", "200"]));
    assert!(!o.contains("exponent"));
    let o = stdout(&run(d.path(), &["bench", "--sizes", ""]));
    assert_eq!(o.lines().count(), 1);
}

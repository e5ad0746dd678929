use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_algebra3"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

/// Writes a document with the given nonzero products `(i, j, coords)`.
fn write_doc(dir: &Path, name: &str, field: &str, dim: usize, products: &[(usize, usize, &[&str])]) -> PathBuf {
    let mut table = vec![vec![vec!["0".to_string(); dim]; dim]; dim];
    for &(i, j, v) in products {
        table[i][j] = v.iter().map(|s| s.to_string()).collect();
    }
    let doc = serde_json::json!({ "format": 1, "dim": dim, "field": field, "table": table });
    let path = dir.join(name);
    fs::write(&path, doc.to_string()).unwrap();
    path
}

fn show(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let mut full = vec!["catalog", "show"];
    full.extend_from_slice(args);
    let o = run(&full);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let path = dir.join(name);
    fs::write(&path, &o.stdout).unwrap();
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn verify_reports_associativity() {
    let dir = TempDir::new().unwrap();
    let export = dir.path().join("catalog.json");
    assert_eq!(code(&run(&["catalog", "export", p(&export)])), 0);
    let o = run(&["verify", p(&export)]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));

    // eg = f, g² = e: (gg)g = eg = f but g(gg) = ge = 0
    let bad = write_doc(dir.path(), "bad.json", "real", 3, &[(0, 2, &["0", "1", "0"]), (2, 2, &["1", "0", "0"])]);
    let o = run(&["verify", p(&bad)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("(g,g,g)"), "{}", stdout(&o));

    let broken = write_doc(dir.path(), "broken.json", "real", 1, &[(0, 0, &["1/0"])]);
    let o = run(&["verify", p(&broken)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("table[0][0][0]"), "{}", stderr(&o));

    let truncated = dir.path().join("truncated.json");
    fs::write(&truncated, "{\"format\": 1, \"dim\":").unwrap();
    let o = run(&["verify", p(&truncated)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 1"), "{}", stderr(&o));
}

#[test]
fn classify_reports() {
    let dir = TempDir::new().unwrap();
    let w = show(dir.path(), "w33.json", &["W3_3", "--k", "2"]);
    let o = run(&["classify", p(&w), "--witness"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("W3_3, k^2 = 4"));
    assert!(out.contains("witness: diag(1,1,1)"), "{out}");

    let zero = write_doc(dir.path(), "zero.json", "complex", 3, &[]);
    let o = run(&["classify", p(&zero)]);
    assert_eq!(stdout(&o).lines().next(), Some("C3_0"));

    let scrambled = run(&["scramble", "U3_3", "--seed", "4"]);
    let o = run_with_stdin(&["classify", "-", "--trace"], &scrambled.stdout);
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("U3_3"));
    assert!(out.contains("trace: unital-straight(ii)"), "{out}");

    let o = run(&["classify", p(&w), "--json", "--trace", "--witness"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["label"], "W3_3");
    assert_eq!(v["k_squared"], "4");
    assert_eq!(v["profile"]["alpha"], 1);
    assert_eq!(v["witness_status"], "ExactVerified");
    assert!(v["trace"].as_array().is_some_and(|t| !t.is_empty()));

    let bad = write_doc(dir.path(), "bad.json", "real", 3, &[(0, 2, &["0", "1", "0"]), (2, 2, &["1", "0", "0"])]);
    let o = run(&["classify", p(&bad)]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("(g,g,g)"));
}

#[test]
fn iso_reports() {
    let dir = TempDir::new().unwrap();
    let w1 = show(dir.path(), "W3_1.json", &["W3_1"]);
    let w4 = show(dir.path(), "W3_4.json", &["W3_4"]);
    let o = run(&["iso", p(&w1), p(&w4)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("NOT isomorphic; separator: square_of_square_zero"), "{}", stdout(&o));

    // f² = g² = e, gf = ±e
    let k1 = write_doc(dir.path(), "k1.json", "real", 3, &[(1, 1, &["1", "0", "0"]), (2, 1, &["1", "0", "0"]), (2, 2, &["1", "0", "0"])]);
    let km1 = write_doc(dir.path(), "km1.json", "real", 3, &[(1, 1, &["1", "0", "0"]), (2, 1, &["-1", "0", "0"]), (2, 2, &["1", "0", "0"])]);
    let o = run(&["iso", p(&k1), p(&km1)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("isomorphic; witness diag(1,1,-1)"), "{}", stdout(&o));

    let a1 = show(dir.path(), "A2_1.json", &["A2_1"]);
    let a2 = show(dir.path(), "A2_2.json", &["A2_2"]);
    let o = run(&["iso", p(&a1), p(&a2), "--oracle", "3"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("NOT isomorphic") && out.contains("oracle GF(3): none"), "{out}");

    let c = show(dir.path(), "complex.json", &["A2_1", "--field", "complex"]);
    assert_eq!(code(&run(&["iso", p(&a1), p(&c)])), 2);
    let one = show(dir.path(), "A1_1.json", &["A1_1"]);
    assert_eq!(code(&run(&["iso", p(&a1), p(&one)])), 2);
}

#[test]
fn catalog_commands() {
    let o = run(&["catalog", "list", "--field", "complex", "--dim", "3"]);
    let out = stdout(&o);
    let labels: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(labels.iter().filter(|l| l.contains("alpha=")).count(), 23);
    assert!(labels.contains(&"W3_3(k) family"));
    assert_eq!(labels.len(), 24);

    let o = run(&["catalog", "show", "S3_3m", "--field", "real"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["table"][1][1], serde_json::json!(["-1", "0", "0"]));
    assert_eq!(v["table"][0][0], serde_json::json!(["1", "0", "0"]));

    assert_eq!(code(&run(&["catalog", "show", "S3_3m", "--field", "complex"])), 2);
    assert_eq!(code(&run(&["catalog", "show", "X9"])), 2);
    assert_eq!(code(&run(&["catalog", "show", "W3_3"])), 2);

    let dir = TempDir::new().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    run(&["catalog", "export", p(&a)]);
    run(&["catalog", "export", p(&b)]);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&a).unwrap()).unwrap();
    assert_eq!(v["format"], 1);
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e["document"]["format"] == 1));
}

#[test]
fn scramble_round_trips() {
    let o = run(&["scramble", "C3_2", "--seed", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).starts_with("matrix: "));
    let c = run_with_stdin(&["classify", "-"], &o.stdout);
    assert_eq!(stdout(&c).lines().next(), Some("C3_2"));
    assert_eq!(run(&["scramble", "C3_2", "--seed", "1"]).stdout, o.stdout);

    let o = run(&["scramble", "W3_3", "--k", "1+1i", "--seed", "9", "--field", "complex"]);
    let c = run_with_stdin(&["classify", "-"], &o.stdout);
    // (1+i)² = 1 + 2i + i² = 2i
    assert_eq!(stdout(&c).lines().next(), Some("W3_3, k^2 = 2i"));

    assert_eq!(code(&run(&["scramble", "W3_3", "--seed", "1"])), 2);

    let dir = TempDir::new().unwrap();
    let doc = show(dir.path(), "u.json", &["U3_4"]);
    let o = run(&["scramble", p(&doc), "--seed", "3"]);
    let c = run_with_stdin(&["classify", "-"], &o.stdout);
    assert_eq!(stdout(&c).lines().next(), Some("U3_4"));
}

#[test]
fn selftest_quick_passes() {
    let o = run(&["selftest", "--level", "quick"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("invariant-table"));
}

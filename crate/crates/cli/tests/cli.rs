use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use shooting_star::corpus::fixture_double_crossing;
use shooting_star::format::{parse_drawing, write_drawing, TreeDoc};
use shooting_star::{certify, Color};
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shooting-star")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["-o", path.to_str().unwrap()]);
    assert_eq!(code(&run(&all)), 0);
    path
}

fn double_crossing(dir: &Path) -> PathBuf {
    let path = dir.join("double_crossing.json");
    fs::write(&path, write_drawing(&fixture_double_crossing())).unwrap();
    path
}

#[test]
fn validate_exit_codes() {
    let dir = TempDir::new().unwrap();
    let convex = gen(dir.path(), "k33.json", &["convex", "--m", "3", "--n", "3"]);
    let out = run(&["validate", convex.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["ok"], true);

    let fig = double_crossing(dir.path());
    let out = run(&["validate", fig.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let report = stdout_json(&out);
    assert_eq!(report["ok"], false);
    assert!(!report["violations"].as_array().unwrap().is_empty());
    assert_eq!(code(&run(&["validate", "--star-simple", fig.to_str().unwrap()])), 0);

    let text = fs::read_to_string(&convex).unwrap();
    let truncated = dir.path().join("cut.json");
    fs::write(&truncated, &text[..text.len() / 2]).unwrap();
    assert_eq!(code(&run(&["validate", truncated.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["validate", dir.path().join("missing.json").to_str().unwrap()])), 2);
}

#[test]
fn find_certifies_every_root() {
    let dir = TempDir::new().unwrap();
    let path = gen(dir.path(), "r.json", &["random", "--m", "4", "--n", "3", "--seed", "11"]);
    let d = parse_drawing(&fs::read_to_string(&path).unwrap()).unwrap();
    for (_, v) in d.vertices() {
        for method in ["general", "straightline"] {
            let out = run(&["find", path.to_str().unwrap(), "--root", &v.id, "--method", method]);
            assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
            let doc: TreeDoc = serde_json::from_slice(&out.stdout).unwrap();
            assert_eq!(doc.root, v.id);
            assert_eq!(doc.edges.len(), d.m() + d.n() - 1);
            certify(&d, &doc.to_star(&d).unwrap()).unwrap();
        }
    }
    let out = run(&["find", path.to_str().unwrap(), "--method", "monotone", "--explain"]);
    assert_eq!(code(&out), 0);
    let note: Value = serde_json::from_slice(&out.stderr).unwrap();
    let left = d.vertices().min_by(|a, b| a.1.position.x.cmp(&b.1.position.x)).unwrap().0;
    let class = if left.color == Color::Red { d.m() } else { d.n() };
    assert_eq!(note["picks"].as_array().unwrap().len(), class - 1);
}

#[test]
fn find_reports_unmet_preconditions() {
    let dir = TempDir::new().unwrap();
    let path = gen(dir.path(), "r.json", &["random", "--m", "3", "--n", "3", "--seed", "2"]);
    let d = parse_drawing(&fs::read_to_string(&path).unwrap()).unwrap();
    let not_leftmost = d
        .vertices()
        .max_by(|a, b| a.1.position.x.cmp(&b.1.position.x))
        .map(|(_, v)| v.id.clone())
        .unwrap();
    let out = run(&["find", path.to_str().unwrap(), "--method", "monotone", "--root", &not_leftmost]);
    assert_eq!(code(&out), 1);
    assert!(out.stdout.is_empty());

    let fig = double_crossing(dir.path());
    assert_eq!(code(&run(&["find", fig.to_str().unwrap()])), 1);
    assert_eq!(code(&run(&["find", path.to_str().unwrap(), "--root", "nobody"])), 2);

    let bent = gen(dir.path(), "bent.json", &["random-monotone", "--m", "3", "--n", "3", "--seed", "1"]);
    let d = parse_drawing(&fs::read_to_string(&bent).unwrap()).unwrap();
    assert!(d.edges().iter().any(|e| !e.is_straight()));
    assert_eq!(code(&run(&["find", bent.to_str().unwrap(), "--method", "straightline"])), 1);
    assert_eq!(code(&run(&["find", bent.to_str().unwrap(), "--method", "monotone"])), 0);
}

#[test]
fn oracle_queries() {
    let dir = TempDir::new().unwrap();
    let k33 = gen(dir.path(), "k33.json", &["convex", "--m", "3", "--n", "3"]);
    let out = run(&["oracle", k33.to_str().unwrap(), "max-plane", "--certify"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["count"], 5);

    let fig = double_crossing(dir.path());
    let out = run(&["oracle", fig.to_str().unwrap(), "spanning-tree"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["result"], "none");

    let k21 = gen(dir.path(), "k21.json", &["convex", "--m", "2", "--n", "1"]);
    let out = run(&["oracle", k21.to_str().unwrap(), "shooting-stars", "--root", "b1", "--certify"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["count"], 1);

    let out = run(&["oracle", k33.to_str().unwrap(), "shooting-stars", "--budget", "1"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn gen_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let minus = gen(dir.path(), "minus.json", &["convex-minus", "--m", "2", "--n", "2"]);
    let d = parse_drawing(&fs::read_to_string(&minus).unwrap()).unwrap();
    assert_eq!(d.edges().len(), 3);

    let a = run(&["gen", "random", "--m", "4", "--n", "4", "--seed", "7"]);
    let b = run(&["gen", "random", "--m", "4", "--n", "4", "--seed", "7"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(code(&run(&["gen", "convex", "--m", "0", "--n", "2"])), 1);
}

#[test]
fn render_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let path = gen(dir.path(), "r.json", &["random", "--m", "3", "--n", "4", "--seed", "3"]);
    let tree = dir.path().join("tree.json");
    let svg = dir.path().join("find.svg");
    let out = run(&[
        "find",
        path.to_str().unwrap(),
        "-o",
        tree.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let first = run(&["render", path.to_str().unwrap(), "--tree", tree.to_str().unwrap()]);
    let second = run(&["render", path.to_str().unwrap(), "--tree", tree.to_str().unwrap()]);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, fs::read(&svg).unwrap());
    let text = String::from_utf8(first.stdout).unwrap();
    assert!(text.starts_with("<svg") && text.contains("class=\"star\""));
}

#[test]
fn batch_summarizes_in_order() {
    let args = ["batch", "--count", "12", "--m-max", "3", "--n-max", "3", "--seed", "40"];
    let one = run(&[&args[..], &["--jobs", "1"]].concat());
    let four = run(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(code(&one), 0, "{}", String::from_utf8_lossy(&one.stdout));
    let (a, b) = (stdout_json(&one), stdout_json(&four));
    assert_eq!(a["roots"], b["roots"]);
    assert_eq!(a["failures"], b["failures"]);
    assert_eq!(a["instances"], 12);
}

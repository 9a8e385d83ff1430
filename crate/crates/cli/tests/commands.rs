use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn facet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_facet")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn generated(dir: &Path, family: &str) -> PathBuf {
    let out = facet(&["gen", family]);
    assert!(out.status.success());
    write(dir, &format!("{}.peg", family.replace([':', ','], "_")), &stdout(&out))
}

#[test]
fn four_vertex_coefficient() {
    let out = facet(&["cn", "--lemma", "four-vertex"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l == "coefficient = 6"));
}

#[test]
fn all_lemma_coefficients_in_json() {
    for (name, value) in [("nine-face", -3), ("ten-face-adjacent", 1), ("ten-face-dist3", -1), ("ten-face-dist4", -1)] {
        let out = facet(&["--json", "cn", "--lemma", name, "--witness"]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(doc["coefficient"]["value"], value);
        assert_eq!(doc["published"], value);
        assert!(doc["witness"].is_object());
    }
}

#[test]
fn pairs_file_with_zero_coefficient() {
    let dir = TempDir::new().unwrap();
    // (X1 - X2)(X2 - X3)(X1 - X3) has no X1 X2 X3 term.
    let pairs = write(dir.path(), "k3.txt", "# triangle\np 1 2\np 2 3\np 1 3\nt 1 1 1\n");
    let out = facet(&["cn", "--pairs", pairs.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("coefficient = 0"));

    let caps = write(dir.path(), "k3caps.txt", "p 1 2\np 2 3\np 1 3\ncaps 3 2 1\n");
    let out = facet(&["cn", "--pairs", caps.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("witness = X1^2 X2"));
}

#[test]
fn seven_cycle_needs_seven_colors() {
    let dir = TempDir::new().unwrap();
    let c7 = generated(dir.path(), "cycle:7");
    let out = facet(&["chi", "--graph", c7.to_str().unwrap(), "--ell", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l == "chi = 7"));

    let dot = dir.path().join("c7.dot");
    let out = facet(&["chi", "--graph", c7.to_str().unwrap(), "--palette", "6", "--dot", dot.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(std::fs::read_to_string(dot).unwrap().matches("--").count(), 21);
}

#[test]
fn verify_reports_a_repeated_color() {
    let dir = TempDir::new().unwrap();
    let c7 = generated(dir.path(), "cycle:7");
    let good: String = (0..7).map(|e| format!("c {e} {}\n", e + 1)).collect();
    let good = write(dir.path(), "good.col", &good);
    let out = facet(&["verify", "--graph", c7.to_str().unwrap(), "--coloring", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("accept"));

    let bad: String = (0..7).map(|e| format!("c {e} {}\n", e % 6 + 1)).collect();
    let bad = write(dir.path(), "bad.col", &bad);
    let out = facet(&["--json", "verify", "--graph", c7.to_str().unwrap(), "--coloring", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["ok"], false);
    assert_eq!(doc["violations"][0]["e"], 0);
    assert_eq!(doc["violations"][0]["f"], 6);
    assert_eq!(doc["violations"][0]["color"], 1);
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(facet(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(facet(&["chi", "--graph", "x.peg", "--unknown"]).status.code(), Some(2));
    assert_eq!(facet(&["chi", "--graph", "/nonexistent/x.peg"]).status.code(), Some(2));
    assert_eq!(facet(&["cn", "--lemma", "twelve-face"]).status.code(), Some(2));
    let dir = TempDir::new().unwrap();
    let broken = write(dir.path(), "broken.peg", "peg 1\nvertices 2\nedges 1\ne 0 0 1\nrot 0 0 0\nrot 1 1\n");
    let out = facet(&["structure", "--graph", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn reduce_certifies_the_catalog() {
    let out = facet(&["reduce"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches(": certified").count(), 8);

    let out = facet(&["--json", "reduce", "--name", "three-thread"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc[0]["neighborhood"][0]["colored"], 9);
    assert_eq!(facet(&["reduce", "--name", "eleven-face"]).status.code(), Some(2));
}

#[test]
fn reduce_reads_a_config_file() {
    let dir = TempDir::new().unwrap();
    let out = facet(&["--json", "reduce", "--list"]);
    let names: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(names.as_array().unwrap().len(), 8);

    let doc = facet_core::reducibility::configuration("face-length-4").unwrap();
    let mut json: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
    let path = write(dir.path(), "face4.json", &json.to_string());
    assert_eq!(facet(&["reduce", "--config", path.to_str().unwrap()]).status.code(), Some(0));

    json["bounds"] = serde_json::json!([5, 5, 5, 5]);
    let path = write(dir.path(), "greedy.json", &json.to_string());
    let out = facet(&["reduce", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("[FAIL]"));
}

#[test]
fn discharge_emits_the_ledger_schema() {
    let dir = TempDir::new().unwrap();
    let c12 = generated(dir.path(), "cycle:12");
    let out = facet(&["--json", "discharge", "--graph", c12.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for key in ["initial", "transfers", "final", "total", "gaps", "structure"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    assert_eq!(doc["total"], serde_json::json!({"num": -12, "den": 1}));
    let t = &doc["transfers"][0];
    assert_eq!((t["rule"].as_str(), t["num"].as_i64(), t["den"].as_i64()), (Some("R5"), Some(7), Some(6)));
    assert!(t["src"].as_str().unwrap().starts_with('f'));
    assert_eq!(doc["final"]["vertices"][0], serde_json::json!({"num": 1, "den": 3}));
}

#[test]
fn medial_distance_and_structure() {
    let dir = TempDir::new().unwrap();
    let k4 = generated(dir.path(), "k4");
    let out = facet(&["medial", "--graph", k4.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("vertices 6") && text.contains("edges 12"));

    let c10 = generated(dir.path(), "cycle:10");
    let out = facet(&["distance", "--graph", c10.to_str().unwrap(), "0", "5"]);
    assert_eq!(stdout(&out), "distance = 5\n");
    let out = facet(&["--json", "distance", "--graph", c10.to_str().unwrap(), "4", "--ell", "2"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["neighborhood"], serde_json::json!([2, 3, 5, 6]));

    let out = facet(&["structure", "--graph", c10.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("no-three-thread"));
}

#[test]
fn random_generation_is_reproducible() {
    let a = stdout(&facet(&["gen", "random", "--seed", "11", "--steps", "8"]));
    let b = stdout(&facet(&["gen", "random", "--seed", "11", "--steps", "8"]));
    assert_eq!(a, b);
    assert!(a.starts_with("peg 1"));
    assert_eq!(facet(&["gen", "dodecahedron"]).status.code(), Some(2));
}

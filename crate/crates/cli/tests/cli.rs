use std::fs;
use std::process::{Command, Output};

use catprod::format::{parse_graph, write_graph};
use catprod_core::generators::{complete, rook};
use catprod_core::{complement, Graph};
use proptest::prelude::*;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catprod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let text = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text:?}"));
    (value, out.status.code().unwrap())
}

#[test]
fn paw_cotree() {
    let (v, code) = json(&["recognize", "gen:paw", "--class=cograph"]);
    assert_eq!(code, 0);
    assert_eq!(v["member"], true);
    assert_eq!(v["cotree"], "(x 0 (+ (x 1 2) 3))");
}

#[test]
fn path_is_not_a_cograph() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.txt");
    fs::write(&path, "n 4\ne 0 1\ne 1 2\ne 2 3\n").unwrap();
    let (v, code) = json(&["recognize", path.to_str().unwrap(), "--class=cograph"]);
    assert_eq!(code, 1);
    assert_eq!(v["member"], false);
    let w: Vec<usize> = serde_json::from_value(v["witness"].clone()).unwrap();
    assert_eq!(w.len(), 4);
}

#[test]
fn split_recognition() {
    let (v, code) = json(&["recognize", "gen:cycle:5", "--class=split"]);
    assert_eq!((code, &v["member"]), (1, &Value::Bool(false)));
    let (v, code) = json(&["recognize", "gen:paw", "--class=split"]);
    assert_eq!(code, 0);
    assert_eq!(v["clique"].as_array().unwrap().len(), 3);
}

#[test]
fn complete_graph_products() {
    for class in ["cograph", "oracle"] {
        let (v, code) = json(&["alpha-product", "gen:complete:3", "gen:complete:4", "--class", class]);
        assert_eq!(code, 0);
        assert_eq!(v["alpha"], 4, "{class}");
        assert_eq!(v["verified"], true);
    }
}

#[test]
fn k1_factor() {
    let (v, _) = json(&["alpha-product", "gen:complete:1", "gen:star:6", "--class=split"]);
    assert_eq!(v["alpha"], 7);
    assert!(v["case"].is_string());
    let (v, _) = json(&["alpha-product", "gen:complete:1", "gen:cycle:7", "--class=oracle"]);
    assert_eq!(v["alpha"], 7);
}

#[test]
fn class_violation_exits_one() {
    let (v, code) = json(&["alpha-product", "gen:cycle:5", "gen:complete:2", "--class=cograph"]);
    assert_eq!(code, 1);
    assert_eq!(v["violating_input"], "left");
}

#[test]
fn capacities() {
    let cases = [
        (["gen:star:3", "--mode=cograph"], "1"),
        (["gen:complete:2", "--mode=cograph"], "1/2"),
        (["gen:cycle:5", "--mode=trichotomy"], "AT_MOST_HALF"),
        (["gen:star:3", "--mode=trichotomy"], "ONE"),
    ];
    for (args, expected) in cases {
        let (v, code) = json(&["capacity", args[0], args[1]]);
        assert_eq!(code, 0);
        assert_eq!(v["capacity"], expected, "{args:?}");
    }
}

#[test]
fn generate_rook() {
    let (v, _) = json(&["generate", "rook:3,3"]);
    assert_eq!((v["vertices"].as_u64(), v["edges"].as_u64()), (Some(9), Some(18)));
    let g = parse_graph(v["graph"].as_str().unwrap()).unwrap();
    assert_eq!(g, rook(3, 3));
    let (v, _) = json(&["generate", "gen:complete:1"]);
    assert_eq!(v["graph"], "n 1\n");
}

#[test]
fn product_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k3k3.txt");
    let (v, code) = json(&["product", "gen:complete:3", "gen:complete:3", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(v.get("graph").is_none());
    let g = parse_graph(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(g, complement(&rook(3, 3)));
}

#[test]
fn oracle_report() {
    let (v, _) = json(&["oracle", "gen:cycle:5"]);
    assert_eq!(v["alpha"], 2);
    assert_eq!(v["independence_ratio"], "2/5");
    assert_eq!(v["a_star"], "2/5");
    assert_eq!(v["fractional_perfect_matching"], true);
}

#[test]
fn trials_are_seeded_and_ordered() {
    let args = ["--trials", "4", "--seed", "10", "capacity", "gen:random_cograph:8", "--mode=cograph"];
    let (a, code) = json(&args);
    let (b, _) = json(&args);
    assert_eq!(code, 0);
    assert_eq!(a["runs"].as_array().unwrap().len(), 4);
    for (i, run) in a["runs"].as_array().unwrap().iter().enumerate() {
        assert_eq!(run["inputs"][0], format!("gen:random_cograph:8:seed={}", 10 + i));
        assert_eq!(run["capacity"], b["runs"][i]["capacity"]);
    }
}

#[test]
fn errors_exit_two() {
    for args in [
        &["generate", "nosuch:3"][..],
        &["oracle", "gen:complete:41"],
        &["recognize", "/nonexistent/graph.txt", "--class=cograph"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn malformed_file_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "n 2\ne 0 5\n").unwrap();
    let out = run(&["oracle", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of range"));
}

#[test]
fn plain_format() {
    let out = run(&["--format", "plain", "alpha-product", "gen:complete:2", "gen:complete:2", "--class=cograph"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l == "alpha: 2"));
}

#[test]
fn complete_graph_k2_round_trip() {
    assert_eq!(parse_graph(&write_graph(&complete(2))).unwrap(), complete(2));
}

proptest! {
    #[test]
    fn write_then_parse_is_identity(n in 1usize..20, pairs in prop::collection::vec((0usize..20, 0usize..20), 0..60)) {
        let edges = pairs.into_iter().map(|(u, v)| (u % n, v % n)).filter(|(u, v)| u != v);
        let g = Graph::from_edges(n, edges).unwrap();
        let text = write_graph(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g.clone());
        prop_assert_eq!(write_graph(&parse_graph(&text).unwrap()), text);
    }
}

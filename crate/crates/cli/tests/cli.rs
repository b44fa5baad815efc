//! End-to-end runs of the `rankbisim` binary.

use std::path::Path;
use std::process::{Command, Output};

use proptest::prelude::*;
use rankbisim::generators::gen_random;
use rankbisim_cli::formats::{parse_edge_list, write_edge_list, Reachability};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankbisim")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name);
    let p = path.to_str().unwrap().to_owned();
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", &p]);
    let o = run(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    p
}

#[test]
fn gen_cycle_writes_eight_edges() {
    let o = run(&["gen", "cycle", "8"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 9);
    assert!(text.starts_with("nodes 8 root 0\n"));
    let o = run(&["gen", "clique-cycle", "5", "3"]);
    assert!(stdout(&o).starts_with("nodes 32 "));
}

#[test]
fn quotient_of_cycle_and_fixpoint() {
    let dir = tempfile::tempdir().unwrap();
    let input = gen(dir.path(), "cycle.txt", &["cycle", "8"]);
    let out = dir.path().join("q.txt");
    let o = run(&["quotient", &input, "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let q = std::fs::read_to_string(&out).unwrap();
    assert!(q.starts_with("nodes 1 root 0\n"));
    assert!(q.trim_end().ends_with("0 0"));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("q.json")).unwrap()).unwrap();
    assert_eq!(report["quotient_edges"], serde_json::json!([[[-1, 0], [-1, 0]]]));
    assert_eq!(report["pairs"]["7"], serde_json::json!([-1, 0]));

    let again = dir.path().join("qq.txt");
    let o = run(&["quotient", out.to_str().unwrap(), "--out", again.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(std::fs::read_to_string(&again).unwrap(), q);
}

#[test]
fn quotient_of_example14_and_single_node() {
    let dir = tempfile::tempdir().unwrap();
    let input = gen(dir.path(), "ex14.txt", &["fixture", "example14"]);
    let o = run(&["quotient", &input]);
    assert!(stdout(&o).starts_with("nodes 5 "));
    let single = dir.path().join("one.txt");
    std::fs::write(&single, "nodes 1 root 0\n").unwrap();
    let o = run(&["quotient", single.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("nodes 1 root 0\n"));
}

#[test]
fn compare_reports() {
    let dir = tempfile::tempdir().unwrap();
    let cycle = gen(dir.path(), "cycle.txt", &["cycle", "4"]);
    let o = run(&["compare", &cycle]);
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["standard_size"], 9);
    assert!(r["quotient_layered"]["succ_nodes"].as_u64().unwrap() <= 2);
    for key in ["distinct_succ", "succ_nodes", "dmap_nodes", "total_nodes"] {
        assert!(r["quotient_layered"].get(key).is_some(), "{key}");
    }
    let chain = gen(dir.path(), "chain.txt", &["chain", "8"]);
    let r: serde_json::Value = serde_json::from_str(&stdout(&run(&["compare", &chain]))).unwrap();
    assert!(r["classes_per_rank"].as_array().unwrap().iter().all(|c| c["classes"] == 1));
}

#[test]
fn image_and_preimage() {
    let dir = tempfile::tempdir().unwrap();
    let ex8 = gen(dir.path(), "ex8.txt", &["fixture", "example8"]);
    assert_eq!(stdout(&run(&["image", &ex8, "--nodes", "1", "--steps", "0"])), "1\n");
    assert_eq!(stdout(&run(&["image", &ex8, "--nodes", "1"])), "0 2\n");
    assert_eq!(stdout(&run(&["preimage", &ex8, "--nodes", "0", "--blocks", "2"])), "1\n");
    let o = run(&["image", &ex8, "--nodes", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dot_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let ex5 = gen(dir.path(), "ex5.txt", &["fixture", "example5"]);
    let first = run(&["dot", &ex5, "--what", "layered", "--blocks", "1"]);
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stderr));
    assert!(stdout(&first).starts_with("digraph"));
    assert_eq!(stdout(&first), stdout(&run(&["dot", &ex5, "--what", "layered", "--blocks", "1"])));
    let cyc = gen(dir.path(), "c.txt", &["cycle", "4"]);
    let q = stdout(&run(&["dot", &cyc, "--what", "quotient"]));
    assert_eq!(q.matches("shape=oval").count(), 1);
}

#[test]
fn aut_input_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let aut = dir.path().join("two.aut");
    std::fs::write(&aut, "des (0,2,2)\n(0,\"a\",1)\n(1,\"b\",0)\n").unwrap();
    let o = run(&["quotient", aut.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("nodes 1 "));
    let o = run(&["quotient", aut.to_str().unwrap(), "--format", "edgelist"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["quotient", dir.path().join("missing.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["gen", "cycle", "x"]);
    assert_eq!(o.status.code(), Some(2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn edge_list_round_trip(n in 1usize..30, seed in any::<u64>(), acyclic in any::<bool>()) {
        let cap = if acyclic { n * (n - 1) / 2 } else { n * n };
        let g = gen_random(n, (2 * n).min(cap), seed, acyclic).unwrap();
        let back = parse_edge_list(&write_edge_list(&g), Reachability::Strict).unwrap();
        prop_assert_eq!(back.graph, g);
    }
}

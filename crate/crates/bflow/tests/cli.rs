//! End-to-end tests of the bflow binary: exit codes, JSON shape, and
//! determinism of the generator.

use serde_json::Value;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

fn bflow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bflow"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_input(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(text.as_bytes()).unwrap();
    path.display().to_string()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

const STAR4: &str = "5 4\n0 1\n0 2\n0 3\n0 4\n";
const BOWTIE: &str = "5 6\n0 1\n0 2\n0 3\n0 4\n1 2\n3 4\n";

#[test]
fn decide_reports_and_exits_by_answer() {
    let dir = tempfile::tempdir().unwrap();
    let star = write_input(dir.path(), "star.txt", STAR4);

    let yes = bflow(&["decide", "--tree", &star, "--k", "4"]);
    assert_eq!(yes.status.code(), Some(0));
    let report = stdout_json(&yes);
    assert_eq!(report["mode"], "decide");
    assert_eq!(report["k"], 4);
    assert_eq!(report["answer"], true);
    assert_eq!(report["omega"], 4);
    assert_eq!(report["mDegree"], 4);
    assert_eq!(report["input"]["n"], 4);
    assert_eq!(report["input"]["m"], 6);

    let no = bflow(&["decide", "--tree", &star, "--k", "5"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(stdout_json(&no)["answer"], false);
}

#[test]
fn decide_accepts_graph_input() {
    let dir = tempfile::tempdir().unwrap();
    let bowtie = write_input(dir.path(), "bowtie.txt", BOWTIE);

    let yes = bflow(&["decide", "--graph", &bowtie, "--k", "3"]);
    assert_eq!(yes.status.code(), Some(0));

    let no = bflow(&["decide", "--graph", &bowtie, "--k", "4"]);
    assert_eq!(no.status.code(), Some(1));
}

#[test]
fn errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();

    let missing = bflow(&["decide", "--tree", "/nonexistent/input.txt", "--k", "2"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(!missing.stderr.is_empty());

    let cycle = write_input(dir.path(), "cycle.txt", "3 3\n0 1\n1 2\n2 0\n");
    let not_tree = bflow(&["decide", "--tree", &cycle, "--k", "2"]);
    assert_eq!(not_tree.status.code(), Some(2));

    // A star is a tree but, read as a graph, contains an induced claw.
    let star = write_input(dir.path(), "star.txt", STAR4);
    let claw = bflow(&["decide", "--graph", &star, "--k", "2"]);
    assert_eq!(claw.status.code(), Some(2));

    // A 4-cycle is 2-connected but not a clique, so not a block graph.
    let c4 = write_input(dir.path(), "c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    let not_block = bflow(&["decide", "--graph", &c4, "--k", "3"]);
    assert_eq!(not_block.status.code(), Some(2));

    let no_k = bflow(&["decide", "--tree", &star]);
    assert_eq!(no_k.status.code(), Some(2));

    let both_inputs = bflow(&["decide", "--tree", &star, "--graph", &star, "--k", "2"]);
    assert_eq!(both_inputs.status.code(), Some(2));

    let bad_root = bflow(&["decide", "--tree", &star, "--k", "4", "--root", "99"]);
    assert_eq!(bad_root.status.code(), Some(2));
}

#[test]
fn bnumber_reports_value_and_per_k_timings() {
    let dir = tempfile::tempdir().unwrap();
    let bowtie = write_input(dir.path(), "bowtie.txt", BOWTIE);

    let out = bflow(&["bnumber", "--graph", &bowtie, "--with-oracle"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["mode"], "bnumber");
    assert_eq!(report["answer"], 3);
    // The bowtie has omega = m = 3, so the downward scan stops immediately.
    let per_k = report["perK"].as_array().expect("perK array");
    assert!(!per_k.is_empty());
    assert_eq!(per_k[0]["k"], 3);
    assert_eq!(per_k[0]["decision"], true);
    assert!(per_k[0]["milliseconds"].as_f64().unwrap() >= 0.0);
    let checks = report["checks"].as_array().expect("checks array");
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn oracle_modes() {
    let dir = tempfile::tempdir().unwrap();
    let star = write_input(dir.path(), "star.txt", STAR4);

    let search = bflow(&["oracle", "--tree", &star, "--k", "4"]);
    assert_eq!(search.status.code(), Some(0));
    assert_eq!(stdout_json(&search)["answer"], 4);

    let feasible = bflow(&["oracle", "--tree", &star, "--k", "4", "--w", "0,1,2,3"]);
    assert_eq!(feasible.status.code(), Some(0));
    assert_eq!(stdout_json(&feasible)["answer"], true);

    let infeasible = bflow(&["oracle", "--tree", &star, "--k", "5", "--w", "0,1,2,3"]);
    assert_eq!(infeasible.status.code(), Some(1));
    assert_eq!(stdout_json(&infeasible)["answer"], false);

    let out_of_range = bflow(&["oracle", "--tree", &star, "--k", "4", "--w", "99"]);
    assert_eq!(out_of_range.status.code(), Some(2));

    let dir2 = tempfile::tempdir().unwrap();
    let bowtie = write_input(dir2.path(), "bowtie.txt", BOWTIE);
    let cross = bflow(&["oracle", "--graph", &bowtie, "--k", "4", "--crosscheck"]);
    assert_eq!(cross.status.code(), Some(0));
    let report = stdout_json(&cross);
    assert_eq!(report["mode"], "crosscheck");
    assert_eq!(report["answer"], true);
}

#[test]
fn gen_is_deterministic_and_round_trips() {
    let single = bflow(&["gen", "--tree-random", "1", "0"]);
    assert_eq!(single.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&single.stdout), "2 1\n0 1\n");

    let a = bflow(&["gen", "--tree-random", "12", "7"]);
    let b = bflow(&["gen", "--tree-random", "12", "7"]);
    assert_eq!(a.stdout, b.stdout);
    let c = bflow(&["gen", "--tree-random", "12", "8"]);
    assert_ne!(
        a.stdout, c.stdout,
        "different seeds should give different trees"
    );

    let dir = tempfile::tempdir().unwrap();
    let path = write_input(dir.path(), "gen.txt", &String::from_utf8_lossy(&a.stdout));
    let solved = bflow(&["bnumber", "--tree", &path]);
    assert_eq!(
        solved.status.code(),
        Some(0),
        "generated output feeds back in"
    );

    let cat = bflow(&["gen", "--caterpillar", "5", "8", "3"]);
    assert_eq!(cat.status.code(), Some(0));
    let header = String::from_utf8_lossy(&cat.stdout);
    assert!(
        header.starts_with("14 13\n"),
        "5 spine edges + 8 leaves = 13 edges"
    );

    let no_mode = bflow(&["gen"]);
    assert_eq!(no_mode.status.code(), Some(2));
}

#[test]
fn selfcheck_reports_corpus_size() {
    let out = bflow(&["selfcheck", "--max-edges", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    // Non-isomorphic trees with 1..=4 edges: 1 + 1 + 2 + 3.
    assert_eq!(report["treesChecked"], 7);
    assert_eq!(report["passed"], true);
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);

    let sampled = bflow(&[
        "selfcheck",
        "--max-edges",
        "5",
        "--samples",
        "6",
        "--seed",
        "1",
        "--jobs",
        "2",
    ]);
    assert_eq!(sampled.status.code(), Some(0));
    assert_eq!(stdout_json(&sampled)["treesChecked"], 6);
}

#[test]
fn bench_emits_rows() {
    let out = bflow(&["bench", "--sizes", "10,20", "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = stdout_json(&out);
    let rows = rows.as_array().expect("array of rows");
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["edges"], 10);
    assert_eq!(rows[1]["edges"], 20);
    assert!(rows[1]["b"].as_u64().unwrap() >= 1);

    let human = bflow(&["bench", "--sizes", "10", "--seed", "5", "--human"]);
    assert!(String::from_utf8_lossy(&human.stdout).contains("m-degree"));
}

#[test]
fn human_reports_are_plain_text() {
    let dir = tempfile::tempdir().unwrap();
    let star = write_input(dir.path(), "star.txt", STAR4);

    let out = bflow(&["bnumber", "--tree", &star, "--human"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("b-chromatic number: 4"), "got: {text}");
    assert!(serde_json::from_str::<Value>(&text).is_err(), "not JSON");
}

#[test]
fn trace_goes_to_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_input(dir.path(), "p7.txt", "7 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n");

    let out = bflow(&["decide", "--tree", &path, "--k", "3", "--trace"]);
    assert_eq!(out.status.code(), Some(0));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("block") && err.contains("S"),
        "trace on stderr, got: {err}"
    );
    stdout_json(&out);
}

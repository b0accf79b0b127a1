//! End-to-end tests against the built binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn cvc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cvc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "instances", name]
        .iter()
        .collect();
    path.to_string_lossy().into_owned()
}

fn tmp_file(name: &str, content: &str) -> String {
    let path = std::env::temp_dir().join(name);
    std::fs::write(&path, content).expect("write temp instance");
    path.to_string_lossy().into_owned()
}

#[test]
fn solve_bundled_g1() {
    let g1 = fixture("g1.cvc");
    let out = cvc(&["solve", "--input", &g1, "--s", "0", "--k", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("size 4"));
    assert!(text.contains("decision k=4: yes"));

    let out = cvc(&["solve", "--input", &g1, "--s", "0", "--k", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("decision k=3: no"));
}

#[test]
fn solve_single_edge() {
    let path = tmp_file("cvc_single_edge.cvc", "cvc 2 1\n0 1\n");
    let out = cvc(&["solve", "--input", &path, "--s", "0", "--json"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"size\":1"));
}

#[test]
fn weighted_solve_doubles_the_optimum() {
    // All weights 2 on G2: optimal weight is twice the unweighted optimum 4.
    let content = "cvc 6 6\n0 1\n0 3\n0 4\n1 2\n2 3\n4 5\n\
                   w 0 2\nw 1 2\nw 2 2\nw 3 2\nw 4 2\nw 5 2\n";
    let path = tmp_file("cvc_weighted_g2.cvc", content);
    let out = cvc(&["solve", "--input", &path, "--s", "1", "--weighted", "--json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"weight\":\"8\""), "got {text}");
    assert!(text.contains("\"size\":4"));
}

#[test]
fn check_free_reports_witness() {
    let g2 = fixture("g2.cvc");
    let out = cvc(&["check-free", "--input", &g2, "--s", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("not free"));
    assert!(text.contains("witness path"));

    let out = cvc(&["check-free", "--input", &g2, "--s", "1", "--json"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\"free\":true"));
}

#[test]
fn dominate_k5_is_a_single_vertex_clique() {
    let content = "cvc 5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
    let path = tmp_file("cvc_k5.cvc", content);
    let out = cvc(&["dominate", "--input", &path, "--json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"kind\":\"clique\""));
    assert!(text.contains("\"vertices\":[0]"));
}

#[test]
fn oracle_agrees_with_solve_on_bundled_instances() {
    let size = |s: &str| -> usize {
        s.split("\"size\":")
            .nth(1)
            .and_then(|t| t.split(|c: char| !c.is_ascii_digit()).next())
            .and_then(|t| t.parse().ok())
            .expect("size field")
    };
    for (name, s) in [("g1.cvc", "0"), ("g2.cvc", "1")] {
        let path = fixture(name);
        let solve = stdout(&cvc(&["solve", "--input", &path, "--s", s, "--json"]));
        let oracle = stdout(&cvc(&["oracle", "--input", &path, "--json"]));
        assert_eq!(size(&solve), 4, "{name}");
        assert_eq!(size(&oracle), 4, "{name}");
    }
}

#[test]
fn gen_parse_serialize_round_trips() {
    let out = cvc(&[
        "gen", "--family", "rejection", "--n", "9", "--s", "1", "--density", "2/5", "--seed",
        "11",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let path = tmp_file("cvc_roundtrip.cvc", &text);
    // Re-serializing through gen's own output must be byte-identical; a
    // second gen with the same spec must agree too.
    let again = stdout(&cvc(&[
        "gen", "--family", "rejection", "--n", "9", "--s", "1", "--density", "2/5", "--seed",
        "11",
    ]));
    assert_eq!(text, again);
    let solved = cvc(&["check-free", "--input", &path, "--s", "1"]);
    assert!(solved.status.success());
    assert!(stdout(&solved).contains("free"));
}

#[test]
fn exit_codes() {
    // 2: no connected cover exists.
    let inf = tmp_file("cvc_infeasible.cvc", "cvc 4 2\n0 1\n2 3\n");
    let out = cvc(&["solve", "--input", &inf, "--s", "2"]);
    assert_eq!(out.status.code(), Some(2));

    // 3: freeness verification requested and failed.
    let g2 = fixture("g2.cvc");
    let out = cvc(&["solve", "--input", &g2, "--s", "0", "--verify-free"]);
    assert_eq!(out.status.code(), Some(3));

    // 1: malformed instance.
    let bad = tmp_file("cvc_bad.cvc", "nope\n");
    let out = cvc(&["solve", "--input", &bad, "--s", "0"]);
    assert_eq!(out.status.code(), Some(1));

    // 0: answering "no" to the decision question is still success.
    let out = cvc(&["solve", "--input", &g2, "--s", "1", "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn auto_s_solves_g2() {
    let g2 = fixture("g2.cvc");
    let out = cvc(&["solve", "--input", &g2, "--auto-s", "--json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"s_used\":1"), "got {text}");
    assert!(text.contains("\"size\":4"));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let g1 = fixture("g1.cvc");
    let a = cvc(&["solve", "--input", &g1, "--s", "0", "--json"]);
    let b = cvc(&["solve", "--input", &g1, "--s", "0", "--json"]);
    assert_eq!(a.stdout, b.stdout);

    let content = "cvc 6 6\n0 1\n0 3\n0 4\n1 2\n2 3\n4 5\nw 2 7/3\nw 5 1/2\n";
    let path = tmp_file("cvc_det_weighted.cvc", content);
    let a = cvc(&["solve", "--input", &path, "--s", "1", "--weighted", "--json"]);
    let b = cvc(&["solve", "--input", &path, "--s", "1", "--weighted", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.status.success());
}

#[test]
fn must_contain_constrains_the_oracle() {
    let g1 = fixture("g1.cvc");
    let free = stdout(&cvc(&["oracle", "--input", &g1, "--json"]));
    let forced = stdout(&cvc(&[
        "oracle",
        "--input",
        &g1,
        "--must-contain",
        "4",
        "--json",
    ]));
    assert!(free.contains("\"size\":4"));
    assert!(forced.contains("\"cover\":[")); // still feasible
    assert!(forced.contains('4'));
}

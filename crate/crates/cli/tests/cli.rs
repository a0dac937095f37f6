//! End-to-end runs of the binary: golden outputs, exit codes, and the
//! on-disk formats.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use colex::testdata;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_colex"))
}

fn write_temp(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn tempdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("colex-cli-test-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn width_reports_the_golden_chains() {
    let dir = tempdir("width");
    let input = write_temp(&dir, "width_two.aut", testdata::WIDTH_TWO_DFA);
    let out = run(&["width", input.to_str().unwrap()]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["width"], 2);
    assert_eq!(value["chains"][0], serde_json::json!([1, 2, 3, 4]));
    assert_eq!(value["chains"][1], serde_json::json!([5, 6, 7]));
}

#[test]
fn abwt_build_dump_matches_the_golden_sequences() {
    let dir = tempdir("abwt");
    let input = write_temp(&dir, "width_two.aut", testdata::WIDTH_TWO_DFA);
    let out = run(&["abwt", "build", input.to_str().unwrap(), "--dump"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("CHAIN   = 1000100"));
    assert!(text.contains("FINAL   = 0001110"));
    assert!(text.contains("IN_DEG  = 10100100101010001"));
    assert!(text.contains("OUT_DEG = 01010101001001001"));
    assert!(text.contains("OUT     = (1,a) (2,b) (2,a) (2,b) (1,a) (2,b) (1,a) (2,b) (1,b) (1,c)"));
}

#[test]
fn abwt_file_round_trip_reconstructs_an_isomorphic_dfa() {
    let dir = tempdir("abwt-roundtrip");
    let input = write_temp(&dir, "width_two.aut", testdata::WIDTH_TWO_DFA);
    let stored = dir.join("width_two.abwt");
    let built = run(&[
        "abwt",
        "build",
        input.to_str().unwrap(),
        "-o",
        stored.to_str().unwrap(),
    ]);
    assert!(built.status.success());
    let inverted = run(&["abwt", "invert", stored.to_str().unwrap()]);
    assert!(inverted.status.success());
    let reconstructed = colex::Automaton::parse(&stdout(&inverted)).unwrap();
    let original = testdata::width_two();
    let as_dfa = colex::Dfa::try_from(reconstructed).unwrap();
    assert!(as_dfa.isomorphic(&original));
}

#[test]
fn equiv_exit_codes_encode_the_answer() {
    let dir = tempdir("equiv");
    let d1 = write_temp(&dir, "d1.aut", testdata::SHARED_LANG_MIN);
    let d2 = write_temp(&dir, "d2.aut", testdata::SHARED_LANG_SPLIT_A);
    let yes = run(&["equiv", d1.to_str().unwrap(), d2.to_str().unwrap()]);
    assert_eq!(yes.status.code(), Some(0));

    let other = write_temp(&dir, "width_two.aut", testdata::WIDTH_TWO_DFA);
    let no = bin()
        .args(["equiv", d1.to_str().unwrap(), other.to_str().unwrap()])
        .output()
        .unwrap();
    // Different alphabets: a usage error rather than a language answer.
    assert_eq!(no.status.code(), Some(2));

    let smaller = write_temp(
        &dir,
        "d1-smaller.aut",
        &testdata::SHARED_LANG_MIN.replace("finals 1 2 3 4 5 6", "finals 2 3 4 5 6"),
    );
    let no = run(&["equiv", d1.to_str().unwrap(), smaller.to_str().unwrap()]);
    assert_eq!(no.status.code(), Some(1));
}

#[test]
fn member_and_index_query_agree() {
    let dir = tempdir("member");
    let input = write_temp(&dir, "width_two.aut", testdata::WIDTH_TWO_DFA);
    let yes = run(&["member", input.to_str().unwrap(), "abaa", "--json"]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(stdout(&yes).trim(), r#"{"member":true}"#);
    let no = run(&["member", input.to_str().unwrap(), "ba"]);
    assert_eq!(no.status.code(), Some(1));

    let idx = dir.join("width_two.idx");
    let built = run(&[
        "index",
        "build",
        input.to_str().unwrap(),
        "-o",
        idx.to_str().unwrap(),
    ]);
    assert!(built.status.success());
    let q = run(&[
        "index",
        "query",
        idx.to_str().unwrap(),
        "--pattern",
        "abaa",
        "--op",
        "member",
    ]);
    assert_eq!(q.status.code(), Some(0));
    let q = run(&[
        "index",
        "query",
        idx.to_str().unwrap(),
        "--pattern",
        "aa",
        "--op",
        "locate",
    ]);
    let value: serde_json::Value = serde_json::from_str(stdout(&q).trim()).unwrap();
    assert_eq!(value["states"], serde_json::json!([3, 5]));
    let q = run(&[
        "index",
        "query",
        idx.to_str().unwrap(),
        "--pattern",
        "cc",
        "--op",
        "exists",
    ]);
    assert_eq!(q.status.code(), Some(1));
}

#[test]
fn index_batch_mode_reads_stdin() {
    let dir = tempdir("batch");
    let input = write_temp(&dir, "width_two.aut", testdata::WIDTH_TWO_DFA);
    let idx = dir.join("width_two.idx");
    assert!(run(&[
        "index",
        "build",
        input.to_str().unwrap(),
        "-o",
        idx.to_str().unwrap()
    ])
    .status
    .success());
    let mut child = bin()
        .args(["index", "query", idx.to_str().unwrap(), "--op", "count"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"aa\nab\ncc\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    let lines: Vec<serde_json::Value> = String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["count"], 2);
    assert_eq!(lines[1]["count"], 2);
    assert_eq!(lines[2]["count"], 0);
}

#[test]
fn lang_width_reports_the_documented_certificate() {
    let dir = tempdir("langwidth");
    let input = write_temp(&dir, "d1.aut", testdata::SHARED_LANG_MIN);
    let out = run(&[
        "lang-width",
        input.to_str().unwrap(),
        "--p",
        "1",
        "--mode",
        "search",
        "--cap",
        "6",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["answer"], "gt");
    assert_eq!(value["lower_bound"], 2);
    assert_eq!(value["certificate"]["k"], 2);

    let exact = run(&[
        "lang-width",
        input.to_str().unwrap(),
        "--p",
        "1",
        "--mode",
        "exact",
    ]);
    assert_eq!(exact.status.code(), Some(3), "budget abort is exit code 3");
    let err: serde_json::Value = serde_json::from_str(stdout(&exact).trim()).unwrap();
    assert_eq!(err["error"]["kind"], "budget");
}

#[test]
fn validate_reports_problems_as_json() {
    let dir = tempdir("validate");
    let input = write_temp(
        &dir,
        "loose.aut",
        "alphabet a\nstates 3\nsource 1\nfinals 2\nedge 1 2 a\n",
    );
    let out = run(&["validate", input.to_str().unwrap(), "--json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["unreachable"], serde_json::json!([3]));

    let bad = write_temp(
        &dir,
        "bad.aut",
        "alphabet a\nstates 1\nsource 1\nfinals 1\nedge 1 1 z\n",
    );
    let out = run(&["validate", bad.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(err["error"]["kind"], "usage");
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest"]);
    assert!(out.status.success(), "selftest output:\n{}", stdout(&out));
}

#[test]
fn bench_emits_csv() {
    let out = run(&["bench", "--seed", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("op,n,e,sigma,p,wall_ns"));
    assert!(lines.clone().count() >= 12);
    for line in lines {
        assert_eq!(line.split(',').count(), 6, "malformed row {line:?}");
    }
}

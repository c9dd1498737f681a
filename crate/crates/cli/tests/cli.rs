//! End-to-end runs of the `gpgame` binary.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_gpgame"));
    c.env_remove("GPGAME_NODE_BUDGET");
    c
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gpgame-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn gen_file(name: &str, family_args: &[&str]) -> String {
    let path = scratch(name);
    let p = path.to_str().unwrap();
    let mut args = vec!["gen"];
    args.extend_from_slice(family_args);
    args.extend_from_slice(&["--out", p]);
    let o = run(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    p.to_string()
}

#[test]
fn solve_reports_game_values() {
    let petersen = gen_file("petersen.gp", &["petersen", "5", "2"]);
    let o = run(&["solve", &petersen, "--first", "builder"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("gpg (builder first): 6"));

    let c6 = gen_file("c6.gp", &["cycle", "6"]);
    let o = run(&["solve", &c6, "--first", "blocker", "--all"]);
    let text = stdout(&o);
    assert!(text.contains("gpg' (blocker first): 3"), "{text}");
    assert!(text.contains("gp: 3"));
    assert!(text.contains("gp-: 2"));

    let k1 = gen_file("k1.gp", &["complete", "1"]);
    assert!(stdout(&run(&["solve", &k1])).contains("gpg (builder first): 1"));
}

#[test]
fn solve_writes_a_report() {
    let c5 = gen_file("c5.gp", &["cycle", "5"]);
    let out = scratch("c5-report.txt");
    let o = run(&["solve", &c5, "--all", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("# gpgame-report\tversion=1\t"));
    assert!(lines[1].starts_with("solve\t"));
    assert!(lines[1].contains("\tvalue=3\t"));
    assert!(lines[1].contains("\tgp=3\t"));
}

#[test]
fn solve_exit_codes() {
    let bad = scratch("bad.gp");
    std::fs::write(&bad, "p gp 3 1\n1 2\n").unwrap();
    assert_eq!(run(&["solve", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["solve", "/nonexistent/graph.gp"]).status.code(), Some(2));
    assert_eq!(run(&["solve"]).status.code(), Some(2));

    let p = gen_file("petersen-budget.gp", &["petersen", "5", "2"]);
    assert_eq!(run(&["solve", &p, "--budget", "3"]).status.code(), Some(3));
    let o = bin().args(["solve", &p]).env("GPGAME_NODE_BUDGET", "3").output().unwrap();
    assert_eq!(o.status.code(), Some(3));
    // the flag wins over the environment
    let o = bin().args(["solve", &p, "--budget", "1000000"]).env("GPGAME_NODE_BUDGET", "3").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn gen_writes_graph_files() {
    let header = |args: &[&str]| stdout(&run(args)).lines().next().unwrap_or_default().to_string();
    assert_eq!(header(&["gen", "kneser", "5", "2"]), "p gp 10 15");
    assert_eq!(header(&["gen", "grs", "6", "5"]), "p gp 19 29");
    assert_eq!(header(&["gen", "caterpillar", "2,0,3", "--subdiv", "0"]), "p gp 8 7");

    let labelled = stdout(&run(&["gen", "star", "3", "--labels"]));
    assert!(labelled.contains("c label 0 centre"));

    let c3 = gen_file("lex-c3.gp", &["cycle", "3"]);
    let k2 = gen_file("lex-k2.gp", &["complete", "2"]);
    assert_eq!(header(&["gen", "lex", &c3, &k2]), "p gp 6 15");
}

#[test]
fn gen_rejects_bad_parameters() {
    for args in [
        &["gen", "kneser", "3", "2"][..],
        &["gen", "kneser", "5"],
        &["gen", "cycle", "two"],
        &["gen", "dodecahedron"],
        &["gen", "multipartite", "2,3"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_suites_pass_and_write_stable_reports() {
    let a = scratch("verify-a.txt");
    let b = scratch("verify-b.txt");
    for out in [&a, &b] {
        let o = run(&["verify", "kneser", "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).contains("PASS kneser: 4 instances"));
    }
    let body = |p: &PathBuf| std::fs::read_to_string(p).unwrap().lines().skip(1).collect::<Vec<_>>().join("\n");
    assert_eq!(body(&a), body(&b));
    assert!(body(&a).ends_with("summary\trecords=4\tpassed=4\tfailed=0\tbudget_exhausted=0"));

    for suite in ["cycles", "petersen", "grs-hjk"] {
        assert_eq!(run(&["verify", suite]).status.code(), Some(0), "{suite}");
    }
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "everything"]).status.code(), Some(2));
    let o = run(&["verify", "petersen", "--budget", "2"]);
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
    assert!(stdout(&o).contains("FAIL petersen"));
}

fn play(graph: &str, extra: &[&str], input: &str) -> Output {
    let mut child = bin()
        .arg("play")
        .arg(graph)
        .args(extra)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn play_on_c5_as_builder() {
    let c5 = gen_file("play-c5.gp", &["cycle", "5"]);
    let o = play(&c5, &["--human", "builder", "--first", "builder"], "99\n0\n1\n2\n3\n4\n");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("out of range"), "{text}");
    assert!(text.contains("has size 3, equal to the optimal value 3"), "{text}");
}

#[test]
fn play_resigns_at_end_of_input() {
    let c6 = gen_file("play-c6.gp", &["cycle", "6"]);
    let o = play(&c6, &["--human", "blocker", "--first", "blocker"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("blocker resigns"));
}

//! End-to-end checks of every verb through the built binary, covering the
//! exit-code contract: 0 success, 1 property violation, 2 usage error.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.push("tests/fixtures");
    path.push(name);
    path.to_string_lossy().into_owned()
}

fn calg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_calg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn exit(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn verify_accepts_the_full_square() {
    let out = calg(&["verify", &fixture("full2.alg")]);
    assert_eq!(exit(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    for name in ["C1", "C7", "A1", "A6"] {
        assert!(text.contains(name), "{text}");
    }
    assert!(text.contains("ada: yes"));
}

#[test]
fn verify_reports_non_ada_without_a_axioms() {
    let out = calg(&["verify", &fixture("m1.alg")]);
    assert_eq!(exit(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("ada: no"));
    assert!(!text.contains("A4"));
}

#[test]
fn verify_rejects_open_universes() {
    let out = calg(&["verify", &fixture("not_closed.alg")]);
    assert_eq!(exit(&out), 2);
    assert!(stderr(&out).contains("not closed"), "{}", stderr(&out));
}

#[test]
fn bad_literals_carry_line_numbers() {
    let out = calg(&["verify", &fixture("bad_literal.alg")]);
    assert_eq!(exit(&out), 2);
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn zero_width_is_a_usage_error() {
    let out = calg(&["verify", &fixture("bad_width.alg")]);
    assert_eq!(exit(&out), 2);
    assert!(stderr(&out).contains("line 1"));
}

#[test]
fn missing_files_are_usage_errors() {
    let out = calg(&["atoms", "/nonexistent/path.alg"]);
    assert_eq!(exit(&out), 2);
}

#[test]
fn enumerate_lists_the_five_width_two_algebras() {
    let out = calg(&["enumerate", "2"]);
    assert_eq!(exit(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("subalgebras of 3^2: 5"));
    assert!(text.contains("#4: 9 elements"));
}

#[test]
fn enumerate_refuses_width_four() {
    let out = calg(&["enumerate", "4"]);
    assert_eq!(exit(&out), 2);
    assert!(stderr(&out).contains("bound"));
}

#[test]
fn emitted_algebras_round_trip_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out = calg(&["enumerate", "2", "--emit", dir.path().to_str().unwrap()]);
    assert_eq!(exit(&out), 0);
    let mut count = 0;
    for i in 0..5 {
        let path = dir.path().join(format!("m{i}.alg"));
        assert!(path.exists());
        let reread = calg(&["verify", path.to_str().unwrap()]);
        assert_eq!(exit(&reread), 0, "{}", stderr(&reread));
        count += 1;
    }
    assert_eq!(count, 5);
}

#[test]
fn atoms_of_the_full_square() {
    let out = calg(&["atoms", &fixture("full2.alg")]);
    assert_eq!(exit(&out), 0);
    assert!(stdout(&out).contains("atoms (4): TF FT FU UF"));
}

#[test]
fn atoms_structured_output() {
    let out = calg(&["atoms", &fixture("full2.alg"), "--format", "structured"]);
    assert_eq!(exit(&out), 0);
    assert_eq!(stdout(&out), "atom=TF\natom=FT\natom=FU\natom=UF\n");
}

#[test]
fn atomicity_flags_the_punctured_square() {
    let out = calg(&["atomicity", &fixture("m3.alg")]);
    assert_eq!(exit(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("atomic: false"));
    assert!(text.contains("obstruction: TU"));
}

#[test]
fn atomicity_passes_with_witnesses_on_the_square() {
    let out = calg(&["atomicity", &fixture("full2.alg")]);
    assert_eq!(exit(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("atomic: true"));
    assert!(text.contains("TU = TF + FU"));
}

#[test]
fn atomicity_structured_output() {
    let out = calg(&["atomicity", &fixture("m3.alg"), "--format", "structured"]);
    assert_eq!(exit(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("atomic=false"));
    assert!(text.contains("obstruction=TU"));
}

#[test]
fn atomicity_of_the_named_fixtures() {
    assert_eq!(exit(&calg(&["atomicity", &fixture("m0.alg")])), 0);
    assert_eq!(exit(&calg(&["atomicity", &fixture("wide9.alg")])), 0);
    assert_eq!(exit(&calg(&["atomicity", &fixture("deep15.alg")])), 1);
}

#[test]
fn gclosed_verdicts() {
    let out = calg(&["gclosed", &fixture("m1.alg")]);
    assert_eq!(exit(&out), 1);
    assert!(stdout(&out).contains("local atom: TT"));
    assert_eq!(exit(&calg(&["gclosed", &fixture("full2.alg")])), 0);
}

#[test]
fn ada_check_verdicts() {
    let out = calg(&["ada", "check", &fixture("m1.alg")]);
    assert_eq!(exit(&out), 1);
    assert!(stdout(&out).contains("down(TU) = TF"));
    let out = calg(&["ada", "check", &fixture("full2.alg")]);
    assert_eq!(exit(&out), 0);
    assert!(stdout(&out).contains("A5"));
}

#[test]
fn ada_closure_emits_a_reloadable_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let emitted = dir.path().join("closure.alg");
    let out = calg(&[
        "ada",
        "closure",
        &fixture("m1.alg"),
        "--emit",
        emitted.to_str().unwrap(),
    ]);
    assert_eq!(exit(&out), 0);
    assert!(stdout(&out).contains("closure: 9 elements (from 5)"));
    let reread = calg(&["ada", "check", emitted.to_str().unwrap()]);
    assert_eq!(exit(&reread), 0);
}

#[test]
fn ada_bijection_on_the_square() {
    let out = calg(&["ada", "atoms-bijection", &fixture("full2.alg")]);
    assert_eq!(exit(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("FU -> FT"));
    assert!(text.contains("UF -> TF"));
}

#[test]
fn ada_bijection_rejects_non_adas() {
    let out = calg(&["ada", "atoms-bijection", &fixture("m1.alg")]);
    assert_eq!(exit(&out), 2);
    assert!(stderr(&out).contains("down"));
}

#[test]
fn ann_of_tu_in_m1() {
    let out = calg(&["ann", &fixture("m1.alg"), "TU"]);
    assert_eq!(exit(&out), 0);
    assert!(stdout(&out).contains("Ann(TU) = {UU}"));
}

#[test]
fn ann_requires_membership() {
    let out = calg(&["ann", &fixture("m1.alg"), "TF"]);
    assert_eq!(exit(&out), 2);
    assert!(stderr(&out).contains("not in the algebra"));
}

#[test]
fn closed_sets_of_m1() {
    let out = calg(&["closed-sets", &fixture("m1.alg")]);
    assert_eq!(exit(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("closed sets: 2"));
    assert!(text.contains("{UU}"));
    assert!(text.contains("boolean laws: all hold"));
}

#[test]
fn partition_of_the_square() {
    let out = calg(&["partition", "2"]);
    assert_eq!(exit(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("4 classes"));
    assert!(text.contains("S{0,1} (4): TT TF FT FF"));
}

#[test]
fn cset_verify_passes_on_m1() {
    let out = calg(&["cset", "verify", &fixture("m1.alg")]);
    assert_eq!(exit(&out), 0);
    let text = stdout(&out);
    for axiom in ["EC1", "EC8"] {
        assert!(text.contains(axiom));
    }
}

#[test]
fn cset_verify_accepts_budget_and_seed() {
    let a = calg(&["cset", "verify", &fixture("full2.alg"), "--budget", "2000", "--seed", "7"]);
    let b = calg(&["cset", "verify", &fixture("full2.alg"), "--budget", "2000", "--seed", "7"]);
    assert_eq!(exit(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("sampled"));
}

#[test]
fn decide_validates_an_axiom() {
    let out = calg(&[
        "decide",
        "(and (or (var 0) (var 1)) (var 2))",
        "(or (and (var 0) (var 2)) (and (not (var 0)) (and (var 1) (var 2))))",
    ]);
    assert_eq!(exit(&out), 0);
    assert!(stdout(&out).contains("holds: true"));
}

#[test]
fn decide_refutes_or_commutativity() {
    let out = calg(&[
        "decide",
        "(or (var 0) (var 1))",
        "(or (var 1) (var 0))",
    ]);
    assert_eq!(exit(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("holds: false"));
    assert!(text.contains("counterexample: x0=T x1=U"));
}

#[test]
fn decide_structured_counterexample() {
    let out = calg(&[
        "decide",
        "--format",
        "structured",
        "(or (var 0) (var 1))",
        "(or (var 1) (var 0))",
    ]);
    assert_eq!(exit(&out), 1);
    assert_eq!(stdout(&out), "holds=false\ncounterexample=T,U\n");
}

#[test]
fn decide_rejects_down_in_c_mode() {
    let out = calg(&["decide", "(down (var 0))", "(var 0)"]);
    assert_eq!(exit(&out), 2);
    assert!(stderr(&out).contains("down"));
}

#[test]
fn decide_allows_down_in_ada_mode() {
    let out = calg(&[
        "decide",
        "--mode",
        "ada",
        "(or (down (var 0)) (var 0))",
        "(var 0)",
    ]);
    assert_eq!(exit(&out), 0);
}

#[test]
fn decide_quasi_identities_with_premises() {
    let out = calg(&[
        "decide",
        "--premise",
        "(var 0) = T",
        "(or (var 0) (var 1))",
        "T",
    ]);
    assert_eq!(exit(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("holds: true"));
}

#[test]
fn decide_rejects_malformed_terms() {
    let out = calg(&["decide", "(xor (var 0) (var 1))", "(var 0)"]);
    assert_eq!(exit(&out), 2);
}

#[test]
fn worker_count_env_is_accepted() {
    let out = Command::new(env!("CARGO_BIN_EXE_calg"))
        .env("CALG_WORKERS", "2")
        .args(["enumerate", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

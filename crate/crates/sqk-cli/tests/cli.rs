//! End-to-end tests of the command line interface, driving the built binary
//! against the bundled fixture files.

use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("fixtures");
    p.push(name);
    p.to_str().unwrap().to_string()
}

fn sqk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sqk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = sqk(args);
    assert!(
        out.status.success(),
        "sqk {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    sqk(args).status.code().unwrap()
}

#[test]
fn trefoil_invariant_reproduces_the_reference_multisets() {
    let out = stdout_of(&[
        "invariant",
        "--pd",
        &fixture("trefoil.pd"),
        "--quandle",
        &fixture("r3id.qnd"),
        "--xset",
        "X",
        "--cocycle",
        &fixture("mochizuki.cyc"),
        "--unbounded-face",
        "auto",
        "--base-color",
        "0",
    ]);
    assert_eq!(out.trim(), "0:3 1:6");
    let out = stdout_of(&[
        "invariant",
        "--pd",
        &fixture("trefoil-mirror.pd"),
        "--quandle",
        &fixture("r3id.qnd"),
        "--xset",
        "X",
        "--cocycle",
        &fixture("mochizuki.cyc"),
        "--base-color",
        "0",
    ]);
    assert_eq!(out.trim(), "0:3 2:6");
}

#[test]
fn identical_invocations_give_byte_identical_output() {
    let args = [
        "invariant",
        "--pd",
        &fixture("torus-2-4.pd"),
        "--quandle",
        &fixture("t4pair.qnd"),
        "--cocycle",
        &fixture("linking-t4.cyc"),
    ];
    let a = stdout_of(&args);
    let b = stdout_of(&args);
    assert_eq!(a, b);
    assert_eq!(a.trim(), "-2:4 0:8 2:4");
}

#[test]
fn cocycle_check_and_group_reports() {
    let out = stdout_of(&[
        "cocycle",
        "check",
        &fixture("mochizuki.cyc"),
        "--quandle",
        &fixture("r3id.qnd"),
        "--xset",
        "X",
    ]);
    assert_eq!(out.trim(), "OK");
    let out = stdout_of(&["group", "abelianize", "--sym", "--quandle", &fixture("t2swap.qnd")]);
    assert_eq!(out.trim(), "Z");
    let out = stdout_of(&["group", "abelianize", "--assoc", "--quandle", &fixture("t2swap.qnd")]);
    assert_eq!(out.trim(), "Z^2");
    let out = stdout_of(&["group", "abelianize", "--sym", "--quandle", &fixture("t1id.qnd")]);
    assert_eq!(out.trim(), "Z/2");
}

#[test]
fn dihedral_involutions_are_listed() {
    let out = stdout_of(&["quandle", "involutions", &fixture("r8.qnd")]);
    assert!(out.starts_with("4 good involutions"));
    assert_eq!(out.lines().count(), 5);
}

#[test]
fn surface_pipeline_matches_the_bound() {
    let chain = stdout_of(&["surface", "fn", "--n", "3", "--x", "e1", "--y", "e2"]);
    // pipe the generated chain into eval via stdin
    let mut child = Command::new(env!("CARGO_BIN_EXE_sqk"))
        .args(["surface", "eval", "--cocycle", &fixture("dihedral4.cyc")])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(chain.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "6:1");

    let out = stdout_of(&[
        "surface",
        "bound",
        "--cocycle",
        &fixture("dihedral4.cyc"),
        "--chain",
        &fixture("fn3.dat"),
    ]);
    assert_eq!(out.trim(), "t(F) >= 6");
}

#[test]
fn unbounded_face_choice_does_not_change_the_invariant() {
    // moving the point at infinity to any face leaves the link type alone
    for face in ["auto", "0", "1", "2", "3", "4"] {
        let out = stdout_of(&[
            "invariant",
            "--pd",
            &fixture("trefoil.pd"),
            "--quandle",
            &fixture("r3id.qnd"),
            "--xset",
            "X",
            "--cocycle",
            &fixture("mochizuki.cyc"),
            "--unbounded-face",
            face,
            "--base-color",
            "0",
        ]);
        assert_eq!(out.trim(), "0:3 1:6", "face {face}");
    }
}

#[test]
fn presentations_print_relator_words() {
    let out = stdout_of(&["group", "present", "--sym", "--quandle", &fixture("t2swap.qnd")]);
    assert!(out.starts_with("gen 2"));
    // conjugation relators plus one rho relator per generator
    assert_eq!(out.lines().count(), 1 + 4 + 2);
    assert!(out.contains("+1 +0"), "{out}");
}

#[test]
fn homology_report_line() {
    let out = stdout_of(&[
        "homology",
        "--quandle",
        &fixture("r3id.qnd"),
        "--xset",
        "X",
        "--variant",
        "Qrho",
        "--degree",
        "1",
    ]);
    assert!(out.starts_with("H_1^Qrho"), "{out}");
}

#[test]
fn color_counts() {
    let out = stdout_of(&[
        "color",
        "--pd",
        &fixture("hopf.pd"),
        "--quandle",
        &fixture("t4pair.qnd"),
        "--count",
    ]);
    assert_eq!(out.trim(), "16");
    let out = stdout_of(&[
        "color",
        "--pd",
        &fixture("unknot-0.pd"),
        "--quandle",
        &fixture("t4pair.qnd"),
        "--count",
    ]);
    assert_eq!(out.trim(), "4");
}

#[test]
fn quandle_construction_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r4.qnd").to_str().unwrap().to_string();
    let out = sqk(&["quandle", "make-dihedral", "4", "--rho", "antipodal", "-o", &path]);
    assert!(out.status.success());
    let check = stdout_of(&["quandle", "check", &path]);
    assert!(check.contains("good involution"), "{check}");

    let cover = dir.path().join("d.qnd").to_str().unwrap().to_string();
    let out = sqk(&["quandle", "double-cover", &fixture("r3id.qnd"), "-o", &cover]);
    assert!(out.status.success());
    let check = stdout_of(&["quandle", "check", &cover]);
    assert!(check.contains("order 6"), "{check}");
}

#[test]
fn exit_codes_separate_usage_from_validation() {
    // validation failure: corrupt table
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.qnd");
    std::fs::write(&bad, "quandle 2\n0 0\n0 1\n").unwrap();
    assert_eq!(exit_code(&["quandle", "check", bad.to_str().unwrap()]), 2);
    // missing file: usage/IO
    assert_eq!(exit_code(&["quandle", "check", "/no/such/file.qnd"]), 1);
    // bad flags: usage
    assert_eq!(exit_code(&["quandle", "frobnicate"]), 1);
    // mathematically incompatible inputs: validation
    assert_eq!(
        exit_code(&[
            "invariant",
            "--pd",
            &fixture("hopf.pd"),
            "--quandle",
            &fixture("t4pair.qnd"),
            "--cocycle",
            &fixture("mochizuki.cyc"),
        ]),
        2
    );
}

#[test]
fn corrupt_cocycle_files_are_rejected_on_load() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.cyc");
    // a lone indicator entry violates the rho conditions
    std::fs::write(&bad, "cocycle deg=2 coeff=Z variant=Qrho\n0 e1 e2 1\n").unwrap();
    let out = sqk(&[
        "cocycle",
        "check",
        bad.to_str().unwrap(),
        "--quandle",
        &fixture("t4pair.qnd"),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rho condition"));
}

#[test]
fn labeled_surface_chain_evaluates_over_the_six_element_quandle() {
    let dir = tempfile::tempdir().unwrap();
    let chain = dir.path().join("one.dat");
    std::fs::write(&chain, "surface coloring a\n+1 0 e1 e2 e3\n").unwrap();
    let out = stdout_of(&[
        "surface",
        "eval",
        "--cocycle",
        &fixture("triple-linking-t6.cyc"),
        "--chain",
        chain.to_str().unwrap(),
        "--quandle",
        &fixture("t6pair.qnd"),
    ]);
    assert_eq!(out.trim(), "1:1");
}

#[test]
fn size_cap_flag_is_enforced() {
    let out = sqk(&[
        "--size-cap",
        "10",
        "homology",
        "--quandle",
        &fixture("r3id.qnd"),
        "--xset",
        "X",
        "--variant",
        "Qrho",
        "--degree",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("size cap"));
}

#[test]
fn repro_suite_passes() {
    let out = sqk(&["repro"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("all items passed"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn make_conj_constructions() {
    let out = stdout_of(&["quandle", "make-conj", "--cyclic", "4"]);
    assert!(out.contains("quandle 4"));
    assert!(out.contains("rho 0 3 2 1"));
    let out = stdout_of(&["quandle", "make-conj", "--symmetric", "3"]);
    assert!(out.contains("quandle 6"));
}

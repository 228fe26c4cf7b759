use std::fs;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_torsionlab");
const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("TORSIONLAB_FIXTURES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn complex(name: &str) -> String {
    format!("{FIXTURES}/complexes/{name}.txt")
}

#[test]
fn golden_knot_conway() {
    let o = run(&["knot", "conway", "trefoil-left"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        include_str!("golden/knot_conway_trefoil_left.txt")
    );
}

#[test]
fn golden_chain_torsion() {
    let o = run(&["chain-torsion", "../../fixtures/complexes/lambda.txt"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("golden/chain_torsion_lambda.txt"));
}

#[test]
fn reports_are_deterministic() {
    let args = ["knot", "verify", "figure-eight", "5_2", "--jobs", "3"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn verify_trefoil_passes() {
    let o = run(&["knot", "verify", "trefoil-right"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.contains("conway.torsion = 1+z^2\n"));
    assert!(out.contains("conway.skein = 1+z^2\n"));
    assert!(out.contains("status = PASS\n"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn both_conway_commands_agree() {
    for name in ["unknot", "figure-eight", "granny", "square"] {
        let a = run(&["knot", "conway", name, "--quiet"]);
        let b = run(&["knot", "conway-skein", name, "--quiet"]);
        assert_eq!(stdout(&a), stdout(&b), "{name}");
    }
    let skein = stdout(&run(&["knot", "conway-skein", "5_1"]));
    assert!(skein.contains("conway = 1+3z^2+z^4\n"));
    assert!(skein.contains("skein.failures = 0\n"));
}

#[test]
fn alexander_quiet() {
    let o = run(&["knot", "alexander", "trefoil-left", "--quiet"]);
    assert_eq!(stdout(&o), "t^2-t+1\n");
}

#[test]
fn abs_torsion_values_and_errors() {
    let o = run(&[
        "knot",
        "abs-torsion",
        "trefoil-left",
        "--at",
        "2",
        "--quiet",
    ]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "3\n".to_string()));
    let o = run(&["knot", "abs-torsion", "unknot", "--at", "2", "--quiet"]);
    assert_eq!(stdout(&o), "2\n");
    let o = run(&["knot", "abs-torsion", "trefoil-left", "--at", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not acyclic") && stderr(&o).contains("a != 1"));
    let o = run(&["knot", "abs-torsion", "6_1", "--at", "1/2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("root of the Alexander polynomial"));
    let o = run(&[
        "knot",
        "abs-torsion",
        "trefoil-left",
        "--at",
        "0.5,0.8660254037844386",
        "--field",
        "complex",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[
        "knot",
        "abs-torsion",
        "figure-eight",
        "--field",
        "ratfunc",
        "--quiet",
    ]);
    assert_eq!(stdout(&o), "(-t^2+3t-1)/(t^2-2t+1)\n");
    assert_eq!(
        run(&["knot", "abs-torsion", "unknot"]).status.code(),
        Some(2)
    );
}

#[test]
fn chain_torsion_examples() {
    let o = run(&["chain-torsion", &complex("zero"), "--quiet"]);
    assert_eq!(stdout(&o), "1\n");
    let o = run(&["chain-torsion", &complex("circle"), "--quiet"]);
    assert_eq!(stdout(&o), "(1)/(t-1)\n");
    let frames = complex("circle_frame");
    let o = run(&[
        "chain-torsion",
        &complex("circle"),
        "--frames",
        &frames,
        "--quiet",
    ]);
    assert_eq!(stdout(&o), "(1/2)/(t-1)\n");
    let o = run(&["chain-torsion", &complex("not_a_complex")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("invalid chain complex"));
    let o = run(&["chain-torsion", &complex("lambda"), "--field", "ratfunc"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cw_report() {
    let file = format!("{FIXTURES}/cw/s1_s2.txt");
    let out = stdout(&run(&["cw", &file, "--at", "2"]));
    assert!(out.contains("char-class = -2\n"));
    assert!(out.contains("euler.canonical = 1\n"));
    assert!(out.contains("tau0.canonical = (t)/(t^2-2t+1)\n"));
    assert!(out.contains("torsion = 2\n"));
    let o = run(&["cw", &file, "--at", "0,1", "--field", "complex", "--quiet"]);
    assert!(stdout(&o).starts_with("-5.000000000000e-1,"));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.pd");
    fs::write(&path, "X 1 4 2 5\nX 3 6 4\n").unwrap();
    let o = run(&["knot", "conway", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
    let o = run(&["knot", "conway", "no-such-knot"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fixture_directory_override() {
    let dir = tempfile::tempdir().unwrap();
    let eight = fs::read_to_string(format!("{FIXTURES}/figure_eight.pd")).unwrap();
    fs::write(dir.path().join("mystery.pd"), eight).unwrap();
    let o = Command::new(BIN)
        .args(["knot", "conway", "mystery", "--quiet"])
        .env("TORSIONLAB_FIXTURES", dir.path())
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "1-z^2\n");
    // With an override, built-in names no longer resolve.
    let o = Command::new(BIN)
        .args(["knot", "conway", "trefoil-left"])
        .env("TORSIONLAB_FIXTURES", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn timing_is_opt_in() {
    assert!(!stdout(&run(&["knot", "alexander", "unknot"])).contains("timing"));
    assert!(stdout(&run(&["knot", "alexander", "unknot", "--timing"])).contains("timing.ms = "));
    assert_eq!(
        run(&["knot", "alexander", "unknot", "--jobs", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn selftest_exit_code_matches_report() {
    let o = run(&["selftest"]);
    let out = stdout(&o);
    for id in ["1", "2", "3", "4", "5", "6", "7", "8", "9", "10"] {
        assert!(
            out.contains(&format!("check.{id} = ")),
            "missing criterion {id}"
        );
    }
    let all_pass = !out.contains("= FAIL");
    assert_eq!(o.status.code(), Some(if all_pass { 0 } else { 1 }));
}

#[test]
fn corrupted_sign_table_is_caught() {
    let o = run(&["selftest", "--corrupt-signs"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("check.4 = FAIL sign functions"));
    assert!(out.contains("check.4.witness = N(C)"));
}

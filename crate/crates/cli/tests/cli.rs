use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use equindex::ProblemDocument;

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name)
}

fn run(args: &[&str], file: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equindex")).arg(args[0]).arg(file).args(&args[1..]).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("equindex-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn validate_reports() {
    let ok = run(&["validate"], &corpus("a1_dx.json"));
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok), "VALID\n");

    let bad = run(&["validate"], &corpus("invalid_character.json"));
    assert_eq!(bad.status.code(), Some(2));
    assert!(stdout(&bad).contains("monomial y^3 has character (1), declared (0)"), "{}", stdout(&bad));
}

#[test]
fn malformed_json_is_a_parse_error_with_position() {
    let out = run(&["validate"], &corpus("malformed.json"));
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 4"), "{}", stderr(&out));
}

#[test]
fn bad_polynomial_names_its_location() {
    let text = std::fs::read_to_string(corpus("a1_dx.json")).unwrap().replace("x^2 + y^2", "x^2 + * y");
    let out = run(&["index"], &scratch("bad_poly.json", &text));
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("equations[0].poly"), "{}", stderr(&out));
}

#[test]
fn missing_file_is_an_io_error() {
    for cmd in ["validate", "index", "chern", "conserve"] {
        let out = run(&[cmd], Path::new("/definitely/not/here.json"));
        assert_eq!(out.status.code(), Some(1), "{cmd}");
    }
}

#[test]
fn index_outputs() {
    let out = run(&["index", "--oracle"], &corpus("a1_xdx_minus_ydy.json"));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "INDEX 4\nORACLE AGREE\n");
    assert_eq!(stdout(&run(&["index"], &corpus("smooth_x_dx.json"))), "INDEX 1\n");
}

#[test]
fn exact_differential_exits_non_isolated() {
    for cmd in ["index", "chern", "conserve"] {
        let out = run(&[cmd], &corpus("a1_df.json"));
        assert_eq!(out.status.code(), Some(3), "{cmd}");
        assert!(stderr(&out).starts_with("NON_ISOLATED"));
    }
}

#[test]
fn tiny_budget_exits_five() {
    let out = run(&["index", "--budget", "1"], &corpus("a2_dx.json"));
    assert_eq!(out.status.code(), Some(5), "{}", stderr(&out));
}

#[test]
fn chern_outputs() {
    let out = run(&["chern", "--seed", "12"], &corpus("a1_xdx_minus_ydy.json"));
    assert_eq!(stdout(&out), "CHERN 2\nINDEX 4\nGENERIC_INDEX 2\nSEEDS 12 13\n");
    assert!(stdout(&run(&["chern"], &corpus("a1_generic_constants.json"))).starts_with("CHERN 0\n"));
    // on a smooth germ the generic index vanishes, so CHERN equals INDEX
    for name in ["smooth_x3_dx.json", "plane_k2.json", "z2_smooth_sign.json"] {
        let index = stdout(&run(&["index"], &corpus(name)));
        let chern = stdout(&run(&["chern"], &corpus(name)));
        assert_eq!(index.lines().next().unwrap().replace("INDEX", "CHERN"), chern.lines().next().unwrap(), "{name}");
    }
}

#[test]
fn conserve_outputs() {
    let out = run(&["conserve", "--epsilon", "1/7"], &corpus("smooth_x3_dx.json"));
    assert!(stdout(&out).starts_with("LOCAL 3  GLOBAL_DEFORMED 3\nVERDICT CONSERVED\n"), "{}", stdout(&out));
    let out = run(&["conserve"], &corpus("escape_x2_dx.json"));
    assert!(stdout(&out).starts_with("LOCAL 2  GLOBAL_DEFORMED 3\nVERDICT ESCAPED\nMODE USER"), "{}", stdout(&out));
    let out = run(&["conserve", "--epsilon", "0"], &corpus("smooth_x3_dx.json"));
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["conserve", "--epsilon", "abc"], &corpus("smooth_x3_dx.json"));
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["conserve", "--epsilon", "-1/7"], &corpus("smooth_x3_dx.json"));
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
}

#[test]
fn deformation_to_an_infinite_ideal_exits_three() {
    let text = std::fs::read_to_string(corpus("escape_x2_dx.json")).unwrap().replace("\"x^3\"", "\"-x^2\"");
    // with epsilon 1 the deformed generator x^2 - x^2 vanishes
    let out = run(&["conserve", "--epsilon", "1"], &scratch("vanishing.json", &text));
    assert_eq!(out.status.code(), Some(3), "{}", stdout(&out));
}

#[test]
fn json_dump_round_trips() {
    for name in ["a1_xdx_minus_ydy.json", "z2_sign_pair.json", "z3_character_pair.json", "escape_x2_dx.json"] {
        let out = run(&["index", "--json", "--oracle"], &corpus(name));
        let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(value["report"]["oracle"]["verdict"], "AGREE");
        let dumped = serde_json::to_string(&value["problem"]).unwrap();
        let original = ProblemDocument::from_json(&std::fs::read_to_string(corpus(name)).unwrap()).unwrap();
        let again = ProblemDocument::from_json(&dumped).unwrap();
        assert_eq!(again.to_problem().unwrap(), original.to_problem().unwrap(), "{name}");

        // and the dump is itself a usable document
        let out2 = run(&["index"], &scratch(name, &dumped));
        assert_eq!(stdout(&out2), format!("INDEX {}\n", value["report"]["value"]));
    }
}

#[test]
fn usage_errors_exit_two() {
    let out = Command::new(env!("CARGO_BIN_EXE_equindex")).arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

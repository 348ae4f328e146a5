use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gcentre"))
        .current_dir(root())
        .args(args)
        .output()
        .expect("run gcentre")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn parse_errors_carry_line_and_column() {
    let dir = std::env::temp_dir().join(format!("gcentre-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.json");
    std::fs::write(&path, "{\"field\": \"rationals\",\n \"oops\"}").unwrap();
    let o = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.starts_with("error: ParseError: "), "{err}");
    assert!(err.contains("broken.json:2:"), "{err}");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn invalid_algebras_and_missing_files_exit_1() {
    let o = run(&["validate", "data/bad_assoc.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("NotAssociative"));
    let o = run(&["centre", "data/does_not_exist.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("ParseError"));
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_errors_exit_1_and_help_exits_0() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["quiver", "data/a3.json", "--project", "tilting", "--window", "3,1"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn undefined_computations_exit_1() {
    let o = run(&["--field", "prime:2", "characters", "--group", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("CharacteristicDividesOrder"));
    let o = run(&["ghost", "data/z3_graded_truncated.json"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn validate_recognises_each_kind() {
    assert_eq!(json(&["validate", "data/dual_numbers.json"])["kind"], "algebra");
    assert_eq!(json(&["validate", "data/a3.json"])["kind"], "quiver");
    assert_eq!(json(&["validate", "data/dual_numbers_regular.json"])["kind"], "module");
}

#[test]
fn characters_of_z2() {
    let v = json(&["characters", "--group", "2"]);
    assert_eq!(v["field"], "rationals");
    let values: Vec<&Value> = v["characters"].as_array().unwrap().iter().map(|c| &c["values"]).collect();
    assert_eq!(values[0], &serde_json::json!(["1", "1"]));
    assert_eq!(values[1], &serde_json::json!(["1", "-1"]));
    assert_eq!(v["checks"]["orthogonality"], true);
}

#[test]
fn scenarios_are_anchored_and_pass() {
    let d = json(&["scenario", "dual-numbers"]);
    assert_eq!(d["anchor"], "dual-numbers example");
    assert_eq!(d["g_centre_dim"], 3);
    assert!(d["checks"].as_object().unwrap().values().all(|c| c == true));
    let b = json(&["scenario", "appendix-b"]);
    assert_eq!(b["anchor"], "A3 two-sided tilting example");
    assert_eq!(b["hom_x1_x2_dim"], 1);
    assert!(b["checks"].as_object().unwrap().values().all(|c| c == true));
}

#[test]
fn field_override_reaches_the_algebra() {
    let v = json(&["--field", "prime:3", "g-centre", "data/dual_numbers.json"]);
    assert_eq!(v["field"], "prime:3");
    // characteristic 2 divides |Z2|: the G-centre is still computed
    let v = json(&["--field", "prime:2", "g-centre", "data/dual_numbers.json"]);
    assert_eq!(v["field"], "prime:2");
}

#[test]
fn smash_with_an_action_file() {
    let v = json(&["smash", "data/dual_numbers.json", "--action", "data/dual_numbers_sign.json"]);
    assert_eq!(v["smash_dim"], 4);
    assert_eq!(v["checks"]["end_phi_isomorphism"], true);
    let op = json(&["smash", "data/dual_numbers.json", "--action", "grading", "--op"]);
    assert_eq!(op["flavor"], "op");
}

#[test]
fn json_output_is_byte_stable() {
    for args in [
        &["scenario", "appendix-b", "--format", "json"][..],
        &["end-pi", "data/kz2.json", "--format", "json"],
        &["quiver", "data/a3.json", "--project", "tilting", "--format", "json"],
    ] {
        let (a, b) = (run(args), run(args));
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn text_output_shows_checks_as_yes_no() {
    let o = run(&["super-centre", "data/m11.json"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("checks:\n"));
    assert!(text.contains("slots_agree: yes"));
}

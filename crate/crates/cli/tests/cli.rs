use std::path::Path;
use std::process::{Command, Output};

fn semihol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semihol")).args(args).output().expect("binary runs")
}

fn spec_path(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("specs").join(name).display().to_string()
}

fn with_spec(contents: &str, args: &[&str]) -> Output {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.spec");
    std::fs::write(&path, contents).unwrap();
    let path = path.display().to_string();
    let mut all = args.to_vec();
    all.extend(["--spec", path.as_str()]);
    semihol(&all)
}

#[test]
fn build_succeeds_on_builtin() {
    let out = semihol(&["build", "--spec", &spec_path("sl2_5.spec")]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn unknown_factor_name_is_bad_input() {
    let out = with_spec("[factor]\nname = SL2_11\n", &["build"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn non_central_identification_is_rejected() {
    let spec = "[factor]\nname = SL2_5\n[factor]\nname = SL2_5\n[amalgamate]\nfactors = 1, 2\nelements = x1, z\n";
    let out = with_spec(spec, &["build"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("central"));
}

#[test]
fn collapsing_identification_is_rejected() {
    let spec = "[factor]\nname = SL2_5\n[factor]\nname = SL2_5\n[amalgamate]\nfactors = 1, 2\nelements = z, z^2\n";
    let out = with_spec(spec, &["build"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_spec_is_bad_input() {
    assert_eq!(semihol(&["build"]).status.code(), Some(2));
}

#[test]
fn formula_prints_bounds() {
    let out = semihol(&["formula", "--n", "3", "--l", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("m = 2"), "{text}");
    assert!(text.contains("[4, 8]"), "{text}");
    assert!(text.contains("amalgamated count 4"), "{text}");
}

#[test]
fn formula_rejects_l_above_n() {
    assert_eq!(semihol(&["formula", "--n", "2", "--l", "3"]).status.code(), Some(2));
}

#[test]
fn oracle_guard_exceeded_exits_four() {
    let out = semihol(&["oracle-j", "--spec", &spec_path("sl2_5.spec"), "--guard", "1"]);
    assert_eq!(out.status.code(), Some(4), "{}", String::from_utf8_lossy(&out.stderr));
}

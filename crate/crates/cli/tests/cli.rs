use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn gins(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gins")).args(args).env_remove("GINS_SEED").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn block(record: &str, key: &str) -> Vec<String> {
    let header = format!("{key}:");
    record
        .lines()
        .skip_while(|l| *l != header)
        .skip(1)
        .take_while(|l| l.starts_with("  "))
        .map(|l| l.trim().to_string())
        .collect()
}

#[test]
fn gin_of_borel_ideal_echoes_input() {
    for order in ["lex", "revlex", "weight:5,3,1"] {
        let o = gins(&["gin", data("borel.ideal").to_str().unwrap(), "--order", order]);
        assert!(o.status.success(), "{order}");
        assert_eq!(block(&stdout(&o), "gin"), ["x1^2", "x1*x2", "x1*x3", "x2^2"], "{order}");
    }
}

#[test]
fn closed_formula_betti_on_revlex_gin() {
    let o = gins(&["betti", data("g1.ideal").to_str().unwrap(), "--method", "ek"]);
    assert!(o.status.success());
    assert_eq!(block(&stdout(&o), "diagram"), ["row j-i=2: 10 17 10 2", "row j-i=3: 1 3 3 1"]);
    let direct = gins(&["betti", data("g1.ideal").to_str().unwrap()]);
    assert_eq!(block(&stdout(&o), "betti"), block(&stdout(&direct), "betti"));
}

#[test]
fn closed_formula_rejects_non_stable_input() {
    let o = gins(&["betti", data("twisted_cubic.ideal").to_str().unwrap(), "--method", "ek"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn twisted_cubic_invariants() {
    let f = data("twisted_cubic.ideal");
    let f = f.to_str().unwrap();
    assert_eq!(block(&stdout(&gins(&["betti", f])), "diagram"), ["row j-i=1: 3 2"]);
    let lex = block(&stdout(&gins(&["lex", f])), "lex");
    assert_eq!(lex, ["x^2", "x*y", "x*z", "x*w^2", "y^4", "y^3*z"]);
}

#[test]
fn gins_of_four_variable_ideal() {
    let o = gins(&["gins", data("four_variable.ideal").to_str().unwrap()]);
    assert!(o.status.success());
    let r = stdout(&o);
    assert!(r.contains("\ngins: 2\n"));
    assert!(r.contains("\ncomplete: true\n"));
    assert_eq!(block(&r, "gin 1 ideal"), block(&stdout(&gins(&["gin", data("g1.ideal").to_str().unwrap()])), "gin"));
}

#[test]
fn koszul_betti_reports_its_forms() {
    let o = gins(&["koszul-betti", data("borel.ideal").to_str().unwrap(), "--seed", "4"]);
    assert!(o.status.success());
    let r = stdout(&o);
    assert!(r.contains("\nseed: 4\n"));
    assert!(r.lines().any(|l| l.starts_with("form-seeds: ")));
}

#[test]
fn parse_error_exit_code() {
    let dir = std::env::temp_dir().join(format!("gins-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.ideal");
    std::fs::write(&bad, "vars: x y\nx^2 + y\n").unwrap();
    let o = gins(&["betti", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 2"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn missing_file_is_an_error() {
    assert_eq!(gins(&["betti", "/nonexistent/none.ideal"]).status.code(), Some(1));
}

#[test]
fn mismatch_exit_code() {
    let o = gins(&["reproduce", "4.6b"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("verdict: mismatch"));
}

#[test]
fn reproductions_succeed() {
    for id in ["4.6a", "5.5", "5.7", "5.8"] {
        let o = gins(&["reproduce", id]);
        assert_eq!(o.status.code(), Some(0), "{id}\n{}", stdout(&o));
        assert!(stdout(&o).ends_with("verdict: ok\n"), "{id}");
    }
}

#[test]
fn records_are_deterministic() {
    let runs = [
        vec!["gin", "four_variable.ideal", "--seed", "9"],
        vec!["koszul-betti", "complete_intersection.ideal", "--seed", "3"],
        vec!["verify", "T4.4", "--corpus-size", "8", "--seed", "5"],
    ];
    for args in runs {
        let args: Vec<String> = args
            .iter()
            .map(|a| if a.ends_with(".ideal") { data(a).to_str().unwrap().to_string() } else { a.to_string() })
            .collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (a, b) = (gins(&args), gins(&args));
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn seed_from_environment() {
    let f = data("complete_intersection.ideal");
    let with_env = Command::new(env!("CARGO_BIN_EXE_gins"))
        .args(["koszul-betti", f.to_str().unwrap()])
        .env("GINS_SEED", "12")
        .output()
        .unwrap();
    assert!(stdout(&with_env).contains("\nseed: 12\n"));
    assert_eq!(with_env.stdout, gins(&["koszul-betti", f.to_str().unwrap(), "--seed", "12"]).stdout);
}

use std::process::{Command, Output};

fn superbw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superbw")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bw_table_lists_eight_classes() {
    let o = superbw(&["bw", "table", "--field", "R"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines[0].ends_with("R"));
    assert!(lines[7].ends_with("R⊕Rδ"));
}

#[test]
fn bw_mul_and_inv() {
    let o = superbw(&["bw", "mul", "-,1,1", "-,1,1", "--field", "R"]);
    assert_eq!(stdout(&o).trim(), "(+, -1, 1)  C⊕Cε");
    let o = superbw(&["bw", "inv", "-,1,1"]);
    assert_eq!(stdout(&o).trim(), "(-, -1, 1)  R⊕Rδ");
    let o = superbw(&["bw", "mul", "+,2,1", "+,2,1", "--field", "Fp:5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["epsilon"], "+");
}

#[test]
fn clifford_radical() {
    let o = superbw(&["clifford", "--field", "R", "--form", "0", "--semisimple"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "(+, 1, 1)  R");
    let o = superbw(&["clifford", "--field", "R", "--form", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let o = superbw(&["clifford", "--form", "-1,-1,-1,-1"]);
    assert_eq!(stdout(&o).trim(), "(+, 1, -1)  H");
}

#[test]
fn classify_json_round_trips() {
    let o = superbw(&["classify", "--group", "q:4", "--weight", "3,1,0,-2"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v["endo_name"], "R⊕Rδ");
    assert_eq!(v["bw_class"], serde_json::json!({"epsilon": "-", "a": -1, "d": 1}));
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", s);
}

#[test]
fn classify_text_and_strict() {
    let o = superbw(&["classify", "--group", "p:1", "--weight", "1,-1", "--format", "text"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("d_component: ? ("));
    let o = superbw(&["classify", "--group", "p:1", "--weight", "1,-1", "--strict"]);
    assert_eq!(o.status.code(), Some(3));
    let o = superbw(&["classify", "--group", "q:4", "--weight", "3,1,0,-2", "--strict"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn errors_are_single_line_with_no_stdout() {
    for args in [
        vec!["classify", "--group", "q:4", "--weight", "1,2"],
        vec!["classify", "--group", "q:2", "--weight", "1,2"],
        vec!["classify", "--group", "nope:3", "--weight", "1"],
        vec!["classify", "--group", "qpq:1,1@Fp:5", "--weight", "1,-1"],
        vec!["bw", "mul", "-,1", "+,1,1"],
        vec!["bw", "table", "--field", "Fp:4"],
    ] {
        let o = superbw(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        let err = String::from_utf8(o.stderr).unwrap();
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn orbit_trace() {
    let o = superbw(&["orbit", "--group", "zeroq:1", "--weight", "0,1"]);
    let s = stdout(&o);
    assert!(s.contains("*-orbit: (0,1) (1,0)"));
    assert!(s.contains("parity flips: 1"));
    let o = superbw(&["orbit", "--group", "zeroq:1", "--weight", "0,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["twist_chain"]["parity_flips"], 1);
}

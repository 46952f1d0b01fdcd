use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn trefoil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trefoil"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str, body: &str) -> String {
    let path = std::env::temp_dir().join(format!("trefoil-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path.display().to_string()
}

#[test]
fn execute_straight_line() {
    let o = trefoil(&[
        "execute",
        &data("straight_left.graph"),
        &data("straight_right.graph"),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("edge e.f a c"));
}

#[test]
fn measure_two_cycle() {
    let o = trefoil(&["execute", &data("two_cycle.graph"), "--measure", "directed"]);
    assert!(stdout(&o).contains("measure directed 1"));
    let o = trefoil(&["measure", &data("two_cycle.graph")]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn malformed_file_reports_line() {
    let bad = scratch("bad.graph", "graph F\nvertex a\nedge e a nowhere\n");
    let o = trefoil(&["dot", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn infinite_execution_exits_3_with_witness() {
    let text = std::fs::read_to_string(data("infinite_triple.graph")).unwrap();
    let pair = scratch(
        "pair.graph",
        text.trim_end().strip_suffix("graph H").unwrap(),
    );
    let o = trefoil(&["execute", &pair]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8_lossy(&o.stderr).into_owned();
    assert!(err.contains('x') && err.contains('y'), "{err}");
}

#[test]
fn cob_commands() {
    let o = trefoil(&["cob", "compose", &data("cup_cap.cob")]);
    assert!(stdout(&o).contains("circles 1"));

    let o = trefoil(&["cob", "functor", &data("segments_and_circles.cob")]);
    let out = stdout(&o);
    assert!(out.contains("wager 2"));
    assert_eq!(out.lines().filter(|l| l.starts_with("edge ")).count(), 6);

    let o = trefoil(&["cob", "identity", &data("segments_and_circles.cob")]);
    let echoed = stdout(&o);
    let original = std::fs::read_to_string(data("segments_and_circles.cob")).unwrap();
    let pairs = |s: &str| s.lines().filter(|l| l.starts_with("pair")).count();
    assert_eq!(pairs(&echoed), pairs(&original));
    assert!(echoed.contains("circles 2"));
}

#[test]
fn cob_interface_mismatch_exits_2() {
    let o = trefoil(&[
        "cob",
        "compose",
        &data("cup_cap.cob"),
        &data("segments_and_circles.cob"),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_trefoil_seed_42() {
    let o = trefoil(&["check", "trefoil", "--trials", "1000", "--seed", "42"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict:  PASS"));
}

#[test]
fn check_faithful_reports_45_images() {
    let o = trefoil(&[
        "check",
        "faithful",
        "--exhaustive-bound",
        "6",
        "--format",
        "lines",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("images_3+3=45"));
}

#[test]
fn crafted_infinite_instance_is_a_skip() {
    let o = trefoil(&[
        "check",
        "assoc",
        "--trials",
        "1",
        "--seed",
        "5",
        "--replay",
        &data("infinite_triple.graph"),
        "--format",
        "lines",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("skipped=1"));
}

#[test]
fn reports_are_byte_identical() {
    let args = [
        "check", "assoc", "--trials", "200", "--seed", "9", "--format", "lines",
    ];
    assert_eq!(trefoil(&args).stdout, trefoil(&args).stdout);
}

#[test]
fn bad_flags_exit_2() {
    assert_eq!(trefoil(&["check", "nonsense"]).status.code(), Some(2));
    assert_eq!(
        trefoil(&["check", "assoc", "--trials", "many"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn dot_draws_symmetric_pairs_once() {
    let g = scratch(
        "sym.graph",
        "graph S\nvertex a\nvertex b\nedge e a b\nedge f b a\n",
    );
    let out = stdout(&trefoil(&["dot", &g]));
    assert_eq!(out.matches("->").count(), 1);
    assert!(out.contains("dir=both"));
}

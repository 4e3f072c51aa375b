use std::io::Write;
use std::process::{Command, Output, Stdio};

const PATH3: &str = "UDUDUUDUUDDDUUUDDDUD";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dyck321"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dyck321"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn enumerate_sizes() {
    let o = run(&["enumerate", "--size", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "UUUDDD\nUUDUDD\nUUDDUD\nUDUUDD\nUDUDUD\n");
    assert_eq!(stdout(&run(&["enumerate", "--size", "0"])), "\n");
    assert_eq!(code(&run(&["enumerate", "--size", "99"])), 1);
}

#[test]
fn enumerate_json_is_line_delimited() {
    let o = run(&["enumerate", "--size", "4", "--format", "json"]);
    let lines: Vec<String> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 14);
    assert_eq!(lines[0], "UUUUDDDD");
}

#[test]
fn map_examples() {
    let b = run(&["map", "--op", "B", "--path", PATH3]);
    assert_eq!(stdout(&b), "2 3 5 1 4 7 6 8 10 9\n");
    assert_eq!(stdout(&run(&["map", "--op", "K", "--path", PATH3])), "1 2 4 6 3 5 9 7 8 10\n");
    assert_eq!(stdout(&run(&["map", "--op", "M", "--path", PATH3])), "1 2 5 3 6 4 8 9 7 10\n");
    assert_eq!(stdout(&run(&["map", "--op", "R", "--path", "UUDD"])), "UUDD\n");
    for op in ["Binv", "Kinv", "Minv"] {
        let forward = &op[..1];
        let image = stdout(&run(&["map", "--op", forward, "--path", PATH3]));
        let back = run(&["map", "--op", op, "--perm", image.trim()]);
        assert_eq!(stdout(&back).trim(), PATH3, "{op}");
    }
}

#[test]
fn map_involutions_round_trip() {
    for op in ["L", "Lprime"] {
        let once = stdout(&run(&["map", "--op", op, "--path", PATH3]));
        let twice = stdout(&run(&["map", "--op", op, "--path", once.trim()]));
        assert_eq!(twice.trim(), PATH3, "{op}");
    }
}

#[test]
fn map_reads_stdin_lines() {
    let o = run_with_stdin(&["map", "--op", "B"], "UD\nuudd\nUDUD\n");
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "1\n1 2\n2 1\n");
}

#[test]
fn map_rejects_bad_input() {
    let o = run(&["map", "--op", "B", "--path", "UUDX"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("index 3"));
    assert_eq!(code(&run(&["map", "--op", "B", "--path", "UUD"])), 1);
    assert_eq!(code(&run(&["map", "--op", "Binv", "--perm", "3 2 1"])), 1);
    assert_eq!(code(&run(&["map", "--op", "Binv", "--path", "UD"])), 1);
    let o = run_with_stdin(&["map", "--op", "L"], "UD\nDU\n");
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn codes_examples() {
    let o = stdout(&run(&["codes", "--path", PATH3]));
    assert!(o.contains("ascent-descent: n=10; A=1,2,4,6,9; D=1,2,3,6,9"));
    assert!(o.contains("lk-labels: n=10; A=4,5,7,8; D=3,5,7,8"));
    let o = stdout(&run(&["codes", "--path", "UUDD"]));
    assert!(o.contains("ascent-descent: n=2; A=; D="));
    assert!(o.contains("lk-labels: n=2; A=1; D=1"));
    let o = stdout(&run(&["codes", "--path", "UD"]));
    assert_eq!(o.matches("A=; D=").count(), 4);
    assert_eq!(code(&run(&["codes", "--path", ""])), 1);
}

#[test]
fn pairs_of_single_peak() {
    let o = stdout(&run(&["pairs", "--path", "UD"]));
    let mut lines = o.lines();
    assert_eq!(lines.next(), Some("NE;EN"));
    assert_eq!(lines.next(), Some("minimal diagonals: 1"));
}

#[test]
fn orbit_has_eight_elements() {
    let o = stdout(&run(&["orbit", "--path", "UUUDDDUD", "--op", "LprimeL"]));
    let lines: Vec<&str> = o.lines().collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[0], "UUUDDDUD");
    assert!(lines.contains(&"UDUUUDDD"));
}

#[test]
fn verify_theorem_report() {
    let o = run(&["verify", "--suite", "theorem", "--max-size", "8"]);
    assert_eq!(code(&o), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["suite"], "theorem");
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);
    assert_eq!(report["checked"], 2055);
}

#[test]
fn verify_forward_convention_fails_with_exit_two() {
    let o = run(&["verify", "--suite", "proposition", "--max-size", "4", "--convention", "forward"]);
    assert_eq!(code(&o), 2);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!report["failures"].as_array().unwrap().is_empty());
}

#[test]
fn verify_all_small() {
    let o = run(&["verify", "--suite", "all", "--max-size", "5", "--workers", "2"]);
    assert_eq!(code(&o), 0);
    let reports: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(reports.len(), 9);
    assert_eq!(code(&run(&["verify", "--suite", "theorem", "--max-size", "40"])), 1);
}

#[test]
fn render_styles() {
    assert_eq!(stdout(&run(&["render", "--path", "uudd"])), "UUDD\n");
    assert_eq!(
        stdout(&run(&["render", "--path", "UUDD", "--style", "ascii"])),
        " /\\\n/  \\\n"
    );
}

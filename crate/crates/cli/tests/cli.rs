use std::path::PathBuf;
use std::process::Command;

use quivermod_cli::run;
use quivermod_core::rational::{format_rational, parse_rational};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn invoke(args: &[&str]) -> Output {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("quivermod").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn binary(args: &[&str], threads: &str) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_quivermod"))
        .args(args)
        .env("QUIVERMOD_THREADS", threads)
        .output()
        .expect("binary runs")
}

#[test]
fn brauer_special_case_for_kronecker_two_two() {
    let k3 = fixture("k3.q");
    let o = invoke(&["brauer", "--quiver", &k3, "--theta", "1,0", "--d", "2,2"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.stdout, "order\t2\tstatus\tspecial-case\n");
}

#[test]
fn loop_scan_matches_expected_exceptions() {
    let o = invoke(&["verify-loop", "--m-max", "8", "--d-max", "12"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.stdout.lines().last(), Some("exceptions\t1\texpected\t1\tMATCH"));
}

#[test]
fn kronecker_scan_reports_reflected_cells() {
    let o = invoke(&["verify-kronecker", "--m-max", "8", "--d-max", "10"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(
        o.stdout,
        "3\t2,2\t2,2 2,4 4,2 4,10 10,4\nexceptions\t1\texpected\t1\tMATCH\n"
    );
}

#[test]
fn euler_form_from_file_and_shorthand_agree() {
    let k3 = fixture("k3.q");
    let file = invoke(&["euler", "--quiver", &k3, "--d", "2,2", "--e", "2,2"]);
    let inline = invoke(&["euler", "--quiver", "kronecker:3", "--d", "2,2", "--e", "2,2"]);
    assert_eq!(file.stdout, "-4\n");
    assert_eq!(inline.stdout, file.stdout);
}

#[test]
fn loop_file_matches_loop_shorthand() {
    let l2 = fixture("loop2.q");
    let file = invoke(&["dim", "--quiver", &l2, "--d", "2"]);
    let inline = invoke(&["dim", "--quiver", "loop:2", "--d", "2"]);
    assert_eq!(file.code, 0, "{}", file.stderr);
    assert_eq!(file.stdout, "5\n");
    assert_eq!(inline.stdout, file.stdout);
}

#[test]
fn small_invariants() {
    assert_eq!(invoke(&["gcd", "--d", "4,6"]).stdout, "2\n");
    assert_eq!(invoke(&["weights", "--d", "2,3"]).stdout, "-1,1\n");
    assert_eq!(invoke(&["slope", "--theta", "1,-1", "--d", "1,2"]).stdout, "-1/3\n");
    assert_eq!(invoke(&["hilbpoly", "--n", "0", "--t", "0"]).stdout, "1\n");
}

#[test]
fn clifford_of_hyperbolic_plane_plus_line() {
    let o = invoke(&["clifford", "--b", "0,1/2,0,1/2,0,0,0,0,1"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(
        o.stdout,
        "dimension\t8\teven_dimension\t4\tsmooth\ttrue\tenveloping_rank\t16\tazumaya\ttrue\n"
    );
}

#[test]
fn hilbert_symbol_of_hamilton_quaternions() {
    let o = invoke(&["hilbert", "-1", "-1"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.stdout, "2\t-1\ninf\t-1\nsplit\tfalse\n");
}

#[test]
fn conic_witness_lies_on_conic() {
    let o = invoke(&["conic", "1", "0", "0", "1", "0", "-2"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let line = o.stdout.trim_end();
    let w: Vec<i64> = line
        .strip_prefix("solvable\ttrue\twitness\t")
        .expect("solvable")
        .split(',')
        .map(|s| s.parse().unwrap())
        .collect();
    assert_eq!(w[0] * w[0] + w[1] * w[1] - 2 * w[2] * w[2], 0);
    assert_ne!(w, vec![0, 0, 0]);
}

#[test]
fn printed_rationals_round_trip() {
    let o = invoke(&["l2", "--A", "1/2,0,3,-1", "--B", "0,2/3,-5/7,1", "--v", "1,2"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let mut seen = 0;
    for line in o.stdout.lines() {
        for field in line.split('\t').skip(1) {
            if let Ok(x) = parse_rational(field) {
                assert_eq!(format_rational(&x), field);
                seen += 1;
            }
        }
    }
    assert!(seen >= 14);
}

#[test]
fn usage_errors_exit_two() {
    let k3 = fixture("k3.q");
    for args in [
        vec!["euler", "--quiver", k3.as_str(), "--d", "2,2", "--e", "2,2", "--bogus", "1"],
        vec!["no-such-command"],
        vec!["gcd"],
        vec!["verify-loop", "--m-min", "5", "--m-max", "3", "--d-max", "4"],
        vec!["clifford", "--b", "1,2,3"],
        vec!["euler", "--quiver", "/nonexistent.q", "--d", "1", "--e", "1"],
    ] {
        let o = invoke(&args);
        assert_eq!(o.code, 2, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}: {}", o.stdout);
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn help_exits_zero() {
    let o = invoke(&["--help"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("verify-kronecker"));
}

#[test]
fn output_is_independent_of_worker_count() {
    for args in [
        vec!["verify-loop", "--m-max", "8", "--d-max", "12"],
        vec!["verify-kronecker", "--m-max", "6", "--d-max", "10"],
        vec!["hn", "--quiver", "kronecker:3", "--theta", "1,0", "--d", "2,3"],
    ] {
        let one = binary(&args, "1");
        let four = binary(&args, "4");
        let again = binary(&args, "4");
        assert_eq!(one.status.code(), Some(0), "{args:?}");
        assert_eq!(one.stdout, four.stdout, "{args:?}");
        assert_eq!(four.stdout, again.stdout, "{args:?}");
    }
}

#[test]
fn invalid_thread_count_is_usage_error() {
    let o = binary(&["verify-loop", "--m-max", "3", "--d-max", "3"], "zero");
    assert_eq!(o.status.code(), Some(2));
}

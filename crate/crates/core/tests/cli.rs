use std::process::Command;

use dickson_chern::report::VerificationReport;

fn verify(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("spawn verify");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn signs_needs_no_prime() {
    let (code, stdout, _) = verify(&["--suite", "signs"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("overall: pass"), "{stdout}");
    assert!(!stdout.contains('\x1b'));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["--suite", "chern", "--p", "4"][..],
        &["--suite", "rep", "--p", "2"],
        &["--suite", "nope"],
        &["--suite", "dickson", "--n", "5"],
        &["--suite", "steenrod", "--l", "3"],
        &["--suite", "signs", "--threads", "0"],
        &["--suite", "signs", "--format", "xml"],
        &["--p", "3"],
    ] {
        let (code, _, stderr) = verify(args);
        assert_eq!(code, 2, "{args:?}: {stderr}");
        assert!(!stderr.is_empty());
    }
}

#[test]
fn all_at_two_runs_dickson_and_signs() {
    let (code, stdout, _) = verify(&["--suite", "all", "--p", "2", "--n", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let report = VerificationReport::from_json(&stdout).unwrap();
    assert!(report
        .checks
        .iter()
        .all(|c| c.name.starts_with("dickson: ") || c.name.starts_with("signs: ")));
}

#[test]
fn json_to_file_round_trips() {
    let path = std::env::temp_dir().join(format!("verify-{}.json", std::process::id()));
    let (code, stdout, _) = verify(&[
        "--suite",
        "dickson",
        "--p",
        "5",
        "--n",
        "2",
        "--trials",
        "5",
        "--seed",
        "11",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    let report = VerificationReport::from_json(&text).unwrap();
    assert_eq!(report.seed, 11);
    assert_eq!(report.to_json(), text);
}

#[test]
fn strict_turns_size_guard_into_failure() {
    let relaxed = verify(&["--suite", "relations", "--p", "7"]);
    let strict = verify(&["--suite", "relations", "--p", "7", "--strict"]);
    assert_eq!(relaxed.0, 0, "{}", relaxed.1);
    assert!(relaxed.1.contains("SKIP"), "{}", relaxed.1);
    assert_eq!(strict.0, 1);
}

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dyckideal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn map_examples() {
    assert_eq!(stdout(&["map", "--l", "3", "--from", "antichain", "--input", "1-3", "--to", "dyck-akop"]), "uuddudud\n");
    assert_eq!(stdout(&["map", "--l", "3", "--from", "dyck", "--input", "uuddudud", "--to", "partition"]), "3,2,0\n");
    assert_eq!(
        stdout(&["map", "--l", "7", "--from", "partition", "--input", "0,0,0,0,0,0,0", "--to", "dyck-akop"]),
        "udududududududud\n"
    );
    assert_eq!(stdout(&["map", "--l", "3", "--from", "dyck-akop", "--input", "UUDDUDUD", "--to", "antichain"]), "1-3\n");
}

#[test]
fn map_json_mirrors_library_schemas() {
    let json = stdout(&["map", "--l", "7", "--from", "partition", "--input", "5,3,1,1,1,0,0", "--to", "antichain", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value, serde_json::json!({"l": 7, "antichain": [[1, 3], [2, 5], [5, 7]]}));
    let json = stdout(&["map", "--l", "1", "--from", "partition", "--input", "0", "--to", "dyck", "--format", "json"]);
    assert_eq!(json, "{\"n\":2,\"word\":\"uudd\"}\n");
}

#[test]
fn malformed_input_exits_2_and_names_the_token() {
    let out = run(&["map", "--l", "3", "--from", "antichain", "--input", "1-3,2-x", "--to", "dyck"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("2-x"));
    assert_eq!(code(&["map", "--l", "3", "--from", "dyck", "--input", "uudd", "--to", "partition"]), 2);
    assert_eq!(code(&["map", "--l", "3", "--from", "partition", "--input", "4,0,0", "--to", "dyck"]), 2);
    assert_eq!(code(&["map", "--l", "3", "--from", "nonsense", "--input", "", "--to", "dyck"]), 2);
    assert_eq!(code(&["dual", "--l", "3", "--antichain", "1-2,1-3"]), 2);
    assert_eq!(code(&["stats", "--max-l", "11"]), 2);
    assert_eq!(code(&["verify", "--max-l", "3", "--lie-max-l", "6"]), 2);
    assert_eq!(code(&[]), 2);
}

#[test]
fn dual_examples() {
    assert_eq!(stdout(&["dual", "--l", "3", "--antichain", "1-3"]), "1-1,2-2\n");
    assert_eq!(stdout(&["dual", "--l", "3", "--antichain", ""]), "1-1,2-2,3-3\n");
    assert_eq!(stdout(&["dual", "--l", "5", "--antichain", "1-1,2-2,3-3,4-4,5-5"]), "\n");
    assert_eq!(stdout(&["dual", "--l", "3", "--antichain", "1,2"]), stdout(&["dual", "--l", "3", "--antichain", "1-1,2-2"]));
    let checked = stdout(&["dual", "--l", "3", "--antichain", "1-3", "--check-involution"]);
    assert!(checked.starts_with("1-1,2-2\ninvolution: "));
}

#[test]
fn stats_rows() {
    let csv = stdout(&["stats", "--max-l", "6"]);
    assert!(csv.starts_with("l,r,count,source\n1,0,1,formula\n1,1,1,formula\n"));
    for source in ["formula", "udu-census", "ideal-census"] {
        let total: u64 = csv
            .lines()
            .filter(|row| row.starts_with("6,") && row.ends_with(source))
            .map(|row| row.split(',').nth(2).unwrap().parse::<u64>().unwrap())
            .sum();
        assert_eq!(total, 429, "{source}");
    }
    assert_eq!(csv.lines().count(), 1 + 3 * (2 + 3 + 4 + 5 + 6 + 7));
}

#[test]
fn enumerate_counts() {
    for kind in ["partition", "dyck", "dyck-akop", "antichain"] {
        let listing = stdout(&["enumerate", "--l", "4", "--kind", kind]);
        assert_eq!(listing.lines().count(), 42, "{kind}");
    }
    assert_eq!(stdout(&["enumerate", "--l", "1", "--kind", "dyck"]), "uudd\nudud\n");
    assert_eq!(code(&["enumerate", "--l", "13"]), 2);
}

#[test]
fn verify_runs() {
    let report = stdout(&["verify", "--max-l", "5", "--lie-max-l", "4"]);
    assert!(!report.contains("FAIL"));
    assert!(report.contains("l=5: 132 ideals checked"));
    let trivial = stdout(&["verify", "--max-l", "1"]);
    assert!(trivial.contains("l=1: 2 ideals checked"));
}

#[test]
fn injected_fault_exits_1_with_counterexample() {
    let out = run(&["verify", "--max-l", "4", "--lie-max-l", "0", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let report = String::from_utf8(out.stdout).unwrap();
    assert!(report.contains("FAIL udu-prediction"));
    assert!(report.contains("counterexample (udu-prediction): {\"actual\""));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "--max-l", "6", "--lie-max-l", "3"][..],
        &["stats", "--max-l", "7"][..],
        &["enumerate", "--l", "5", "--kind", "antichain", "--format", "json"][..],
    ] {
        let first = stdout(args);
        let mut seq = args.to_vec();
        seq.push("--sequential");
        assert_eq!(first, stdout(&seq));
        let mut threads = args.to_vec();
        threads.extend(["--threads", "2"]);
        assert_eq!(first, stdout(&threads));
    }
}

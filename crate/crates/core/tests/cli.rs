use std::fs;
use std::process::Command;

use a200144::cli::{parse_bfile, run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use a200144::a200144_range;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("a200144").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn term_prints_value() {
    assert_eq!(invoke(&["term", "7"]), (EXIT_OK, "a(7) = 14\n".into(), String::new()));
    assert_eq!(invoke(&["term", "1"]).1, "a(1) = 1\n");
}

#[test]
fn bad_term_arguments_are_usage_errors() {
    for args in [&["term", "0"][..], &["term", "-3"], &["term", "seven"], &["term"]] {
        let (code, out, err) = invoke(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
}

#[test]
fn range_tsv_and_json() {
    let (code, out, _) = invoke(&["range", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "n\ta(n)\n1\t1\n2\t1\n3\t2\n4\t3\n5\t6\n");
    let (_, out, _) = invoke(&["range", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[2]["n"], 3);
    assert_eq!(v[2]["a"], 2);
}

#[test]
fn partitions_listing() {
    let (code, out, _) = invoke(&["partitions", "7", "4", "--details"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "1 1 1 4\tprofile=(3,1)\tb=4\tdivisible\n\
         1 1 2 3\tprofile=(2,1,1)\tb=12\tdivisible\n\
         1 2 2 2\tprofile=(1,3)\tb=4\tdivisible\n"
    );
    assert_eq!(invoke(&["partitions", "5", "5"]).1, "1 1 1 1 1\n");
    assert_eq!(invoke(&["partitions", "10", "3"]).1.lines().count(), 8);
    let (_, out, _) = invoke(&["partitions", "4", "2", "--details"]);
    assert!(out.ends_with("2 2\tprofile=(2)\tb=1\tnot-divisible\n"));
}

#[test]
fn partitions_bounds() {
    let (code, _, err) = invoke(&["partitions", "3", "4"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("k must be <= n"), "{err}");
    assert_eq!(invoke(&["partitions", "3", "0"]).0, EXIT_USAGE);
}

#[test]
fn bfile_contents_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b200144.txt");
    let p = path.to_str().unwrap();

    assert_eq!(invoke(&["bfile", "3", "--out", p]).0, EXIT_OK);
    assert_eq!(fs::read_to_string(&path).unwrap(), "1 1\n2 1\n3 2\n");

    assert_eq!(invoke(&["bfile", "1", "--out", p]).0, EXIT_OK);
    assert_eq!(fs::read_to_string(&path).unwrap(), "1 1\n");

    assert_eq!(invoke(&["bfile", "20", "--out", p]).0, EXIT_OK);
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 20);
    assert!(text.ends_with("20 594\n") && !text.ends_with("\n\n"));
    assert_eq!(parse_bfile(&text).unwrap(), a200144_range(20).unwrap());
}

#[test]
fn bfile_unwritable_path_leaves_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/b.txt");
    let (code, _, err) = invoke(&["bfile", "5", "--out", missing.to_str().unwrap()]);
    assert_eq!(code, EXIT_FAILURE);
    assert!(err.starts_with("error:"));
    assert!(!missing.exists());

    // A directory as target: nothing is left behind in it.
    let (code, _, _) = invoke(&["bfile", "5", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_FAILURE);
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn prime_scan_rows_and_summary() {
    let (code, out, _) = invoke(&["prime-scan", "7"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n\tp(n)\ta(n)\tdeficit\tprime");
    assert_eq!(lines[1], "1\t1\t1\tn/a (unit)\tfalse");
    for (line, n) in lines[2..8].iter().zip(2..) {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols[0], n.to_string());
        let zero = cols[3] == "0";
        assert_eq!(zero, [2, 3, 5, 7].contains(&n), "{line}");
    }
    assert_eq!(lines[8], "summary: deficit = 0 coincides exactly with primality for n = 2..7");

    let (_, out, _) = invoke(&["prime-scan", "1"]);
    assert_eq!(out.lines().nth(1), Some("1\t1\t1\tn/a (unit)\tfalse"));
    assert!(out.lines().last().unwrap().contains("nothing to compare"));

    let (_, out, _) = invoke(&["prime-scan", "20"]);
    assert!(out.ends_with("coincides exactly with primality for n = 2..20\n"));

    let (_, out, _) = invoke(&["prime-scan", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["coincides"], true);
    assert_eq!(v["rows"][3]["deficit"], "1");
    assert!(v["rows"][0]["deficit"].is_null());
}

#[test]
fn verify_dispatch() {
    let (code, out, _) = invoke(&["verify", "theorem2", "40"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "CHECK theorem2 n=1..40 PASS\n");

    let (code, out, _) = invoke(&["verify", "monotone", "20"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "CHECK monotone n=1..20 PASS\nNOTE equality a(1)=a(2)=1\n");

    let (code, out, _) = invoke(&["verify", "theorem1", "8", "--seed", "5"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("CHECK theorem1 n=1..8,trials=100,seed=5,"));

    assert_eq!(invoke(&["verify", "corollary", "12"]).0, EXIT_OK);
    assert_eq!(invoke(&["verify", "oracle", "12"]).0, EXIT_OK);

    let (code, _, err) = invoke(&["verify", "bogus", "10"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("theorem1, theorem2, corollary, oracle, monotone"));
    assert_eq!(invoke(&["verify", "monotone", "1"]).0, EXIT_USAGE);
}

#[test]
fn output_is_deterministic() {
    for args in [&["range", "25"][..], &["prime-scan", "25"], &["verify", "theorem1", "6"]] {
        assert_eq!(invoke(args), invoke(args));
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_a200144");
    let out = Command::new(bin).args(["term", "20"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "a(20) = 594\n");

    let out = Command::new(bin).args(["term", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());

    let out = Command::new(bin).args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

use std::process::Command;

use cfdiag::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("cfdiag").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn stdout(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out
}

#[test]
fn cf_subcommands() {
    assert_eq!(stdout(&["cf", "from-rational", "6/7"]), "[0; 1, 6]\n");
    assert_eq!(stdout(&["cf", "from-rational", "6/7", "--spaced"]), "0 1 6\n");
    assert_eq!(stdout(&["cf", "from-rational", "355/113"]), "[3; 7, 16]\n");
    assert_eq!(stdout(&["cf", "to-rational", "[3; 7, 15, 1]"]), "355/113\n");
    assert_eq!(stdout(&["cf", "to-rational", "0 1 6"]), "6/7\n");
    assert_eq!(stdout(&["cf", "from-real", "5"]), "[5]\n");
    assert_eq!(
        stdout(&["cf", "from-real", "1.4142135623730951", "--eps", "1e-9"]),
        "[1; 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2]\n"
    );
}

#[test]
fn cli_round_trip() {
    for x in ["6/7", "355/113", "1/1", "0", "97/3", "1000/999"] {
        let cf = stdout(&["cf", "from-rational", x]);
        let back = stdout(&["cf", "to-rational", cf.trim()]);
        let expected: cfdiag::Rational = x.parse().unwrap();
        assert_eq!(back.trim(), expected.to_string());
    }
}

#[test]
fn decimal_subcommands() {
    assert_eq!(stdout(&["decimal", "expand", "1/6"]), "0.1(6)\n");
    assert_eq!(stdout(&["decimal", "expand", "129/550"]), "0.23(45)\n");
    assert_eq!(stdout(&["decimal", "expand", "169/550"]), "0.30(72)\n");
    assert_eq!(stdout(&["decimal", "expand", "5"]), "5.(0)\n");
    assert_eq!(stdout(&["decimal", "period", "1/7"]), "period length 6, preperiod 0\n");
    assert_eq!(stdout(&["decimal", "period", "1/8"]), "period length 1, preperiod 3, terminating\n");
    assert_eq!(stdout(&["decimal", "find-period", "6"]), "1/7 (period length 6)\n");
    assert_eq!(stdout(&["decimal", "reconstruct", "0.23(45)"]), "129/550\n");
}

#[test]
fn diag_subcommands() {
    assert_eq!(
        stdout(&["diag", "cf", "--source", "rationals"]),
        "diagonal undefined at k=1: CF of 1/1 = [1] has no a_11\n"
    );
    assert_eq!(
        stdout(&["diag", "cf", "--source", "irrationals", "--depth", "3", "--format", "tsv"]),
        "1\t1\t2\n2\t2\t3\n3\t3\t4\n"
    );
    assert_eq!(
        stdout(&["diag", "decimal", "--depth", "4"]),
        "constructed 0.5555...\nk  d_kk  d_0k  differs\n1     0     5      yes\n2     0     5      yes\n3     0     5      yes\n4     3     5      yes\n"
    );
    let default_depth = stdout(&["diag", "decimal", "--format", "tsv"]);
    assert_eq!(default_depth.lines().count(), 20);
    let analysis = stdout(&["diag", "analyze", "--depth", "100", "--max-preperiod", "10", "--max-period", "20"]);
    assert!(analysis.ends_with("of 220 pairs ruled out\n"));
}

#[test]
fn approx_compare_defaults() {
    let out = stdout(&["approx", "compare"]);
    assert!(out.contains("cf [3; 7, 15, 1] = 355/113 (fractional digits 4)"));
    assert!(out.ends_with("continued fraction is closer\n"));
    let out = stdout(&["approx", "compare", "--target", "1/3", "--cf", "[0; 3]", "--decimal", "3333/10000"]);
    assert!(out.contains("decimal error 1/30000"));
}

#[test]
fn exit_codes() {
    let (code, out, err) = call(&["cf", "from-rational", "-1/2"]);
    assert_eq!((code, out.as_str()), (1, ""));
    assert_eq!(err, "domain error: negative input\n");

    assert_eq!(call(&["cf", "from-real", "1", "--eps", "0"]).0, 1);
    assert_eq!(call(&["cf", "to-rational", "[1; 0]"]).0, 1);
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["cf", "from-rational", "6/x"]).0, 2);
    assert_eq!(call(&["cf", "from-rational", "6/0"]).0, 2);
    assert_eq!(call(&["diag", "decimal", "--depth", "0"]).0, 2);
    assert_eq!(call(&["diag", "analyze", "--depth", "5", "--max-preperiod", "2", "--max-period", "2"]).0, 1);
    assert_eq!(call(&["diag", "cf"]).0, 2);
}

#[test]
fn binary_output_is_stable() {
    let bin = env!("CARGO_BIN_EXE_cfdiag");
    let args = ["diag", "decimal", "--depth", "30", "--format", "tsv"];
    let first = Command::new(bin).args(args).output().unwrap();
    let second = Command::new(bin).args(args).output().unwrap();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(String::from_utf8(first.stdout).unwrap(), stdout(&args));

    let bad = Command::new(bin).args(["decimal", "expand", "-1/3"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(String::from_utf8(bad.stderr).unwrap(), "domain error: negative input\n");
}

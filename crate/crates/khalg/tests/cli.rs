use std::process::{Command, Output};

fn khalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_khalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn homology_n2_grid() {
    let o = khalg(&["homology", "--n", "2", "--coeff", "q", "--qmax", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("  12 | . . . . . 1 1"), "{s}");
}

#[test]
fn homology_mod2_matches_series() {
    let t = khalg(&[
        "compare",
        "table:n=5,coeff=zp:2",
        "series:formula=z2,n=5",
        "--qmax",
        "20",
    ]);
    assert_eq!(t.status.code(), Some(0), "{}", stdout(&t));
}

#[test]
fn generic_seed_kills_the_class() {
    let o = khalg(&[
        "homology",
        "--n",
        "7",
        "--qmax",
        "18",
        "--diff",
        "generic:42",
        "--out",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(!s.contains(r#""q":18,"t":13"#), "{s}");
    let std = stdout(&khalg(&[
        "homology", "--n", "7", "--qmax", "18", "--out", "json",
    ]));
    assert!(std.contains(r#"{"q":18,"t":13,"betti":1,"torsion":[]}"#));
}

#[test]
fn series_and_compare() {
    let o = khalg(&["series", "--formula", "pn", "--n", "3", "--qmax", "8"]);
    assert_eq!(
        stdout(&o),
        "cutoff 8\n0 0 0 1\n2 0 0 1\n4 2 0 1\n6 4 0 1\n8 3 0 1\n8 4 0 1\n"
    );
    let o = khalg(&[
        "compare",
        "series:formula=krr-a",
        "series:formula=krr-b",
        "--qmax",
        "40",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = khalg(&[
        "compare",
        "series:formula=pn,n=4",
        "series:formula=appendix,n=4",
        "--qmax",
        "24",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn fixture_comparisons() {
    for (coeff, name) in [("q", "t79-rational"), ("zp:2", "t79-z2")] {
        let left = format!("table:n=7,coeff={coeff}");
        let right = format!("fixture:{name}");
        let o = khalg(&["compare", &left, &right, "--qmax", "18", "--tmax", "13"]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
    // the two coefficient rings differ inside the window
    let o = khalg(&[
        "compare",
        "table:n=7",
        "fixture:t79-z2",
        "--qmax",
        "18",
        "--tmax",
        "13",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains(r#""verdict":"fail""#));
}

#[test]
fn verify_suites() {
    let o = khalg(&["verify", "--suite", "torsion:5"]);
    assert_eq!(o.status.code(), Some(0));
    let o = khalg(&["verify", "--suite", "reduction", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let o = khalg(&["verify", "--suite", "identities", "--qmax", "60"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["verdict"], "pass");
        assert!(v["params"].is_object());
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["bogus"][..],
        &["homology", "--n", "3", "--coeff", "zp:4"],
        &["homology", "--n", "3", "--diff", "generic:x"],
        &["homology", "--n", "6", "--coeff", "int"],
        &["series", "--formula", "nope"],
        &["series", "--formula", "pn"],
        &["verify", "--suite", "torsion:11"],
        &["verify", "--suite", "torsion:4"],
        &["compare", "fixture:none", "fixture:t79-z2", "--qmax", "4"],
        &["fixtures", "--show", "none"],
    ] {
        let o = khalg(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn fixtures_listing_and_show() {
    let o = khalg(&["fixtures"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
    let o = khalg(&["fixtures", "--show", "t79-rational"]);
    assert!(stdout(&o).starts_with("cutoff 46\n0 0 0 1\n"));
}

#[test]
fn matrix_export() {
    let o = khalg(&["matrix", "--n", "3", "--q", "10", "--t", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("# bidegree q^10t^5 -> q^10t^4"));
    assert!(s.contains("rows 3 cols 3 nnz 4"));
    let o = khalg(&["matrix", "--n", "3", "--q", "10", "--t", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "homology", "--n", "5", "--coeff", "int", "--qmax", "20", "--out", "json",
    ];
    assert_eq!(khalg(&args).stdout, khalg(&args).stdout);
    let args = ["verify", "--suite", "all"];
    let a = khalg(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, khalg(&args).stdout);
}

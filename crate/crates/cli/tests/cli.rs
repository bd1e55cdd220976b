use std::process::Command;

use ghys_cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["ghys"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut v = vec!["--output", "json"];
    v.extend_from_slice(args);
    serde_json::from_str(&ok(&v)).unwrap()
}

#[test]
fn documented_examples() {
    let out = ok(&["section", "RL"]);
    assert!(out.contains("χ -3, genus 1, 3 circles over 2 orbits"), "{out}");
    assert!(out.contains("first-return matrix: 2,1;1,1"));

    let out = ok(&["orbifold", "--genus", "3", "--orders", "3,3,3,3"]);
    assert!(out.starts_with("χ -19, 19 boundary circles, genus 1"), "{out}");

    assert_eq!(ok(&["ghys", "RL", "RRLL"]), "bound: 6\n");
    assert!(ok(&["word", "rl"]).contains("matrix: 2,1;1,1"));
}

#[test]
fn json_outputs() {
    let v = json(&["section", "RRLRL"]);
    assert_eq!(v["surface"]["euler"], -4);
    assert_eq!(v["circles"], 4);
    assert_eq!(v["first_return"]["matrix"], "8,5;3,2");

    let v = json(&["factor", "8,5;3,2"]);
    assert_eq!(v["word"], "RRLRL");

    let v = json(&["ghys", "RL", "RRRRRRL", "--max-radius", "2"]);
    assert!(v["bound"].is_null());

    let v = json(&["descend", "RRLL"]);
    assert_eq!(v["bound"], 6);
    assert_eq!(v["steps"].as_array().unwrap().len(), 2);

    let v = json(&["fixed", "2,1;1,1", "--power", "3"]);
    assert_eq!(v["count"], "16");
    assert_eq!(v["points"].as_array().unwrap().len(), 16);

    let v = json(&["audit", "RRL", "--max-period", "3"]);
    assert_eq!(v["consistent"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
}

#[test]
fn audit_csv() {
    let out = ok(&["audit", "RL", "--max-period", "2", "--csv"]);
    assert_eq!(out.lines().next(), Some("m,lhs,interior_sum,residual"));
    assert_eq!(out.lines().count(), 3);
}

#[test]
fn graph_exports_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["graph", "--kind", "word", "--center", "RL", "--radius", "3", "--cache-dir", cache];
    let first = ok(&args);
    assert!(dir.path().join("balls.jsonl").exists());
    assert_eq!(ok(&args), first);
    let fresh = ok(&["graph", "--kind", "word", "--center", "RL", "--radius", "3", "--no-cache"]);
    assert_eq!(fresh, first);
    assert!(first.starts_with("graph ball {") && first.ends_with("}\n"));

    let out = ok(&["graph", "--kind", "conj", "--center", "2,1;1,1", "--radius", "1", "--format", "json", "--no-cache"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["center"], "+RL");
    assert_eq!(v["nodes"].as_array().unwrap().len(), 5);

    let out = ok(&["delta", "--center", "RL", "--radius", "2", "--no-cache"]);
    assert!(out.starts_with("δ: 0\n"), "{out}");
}

#[test]
fn pants_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.svg");
    let out = ok(&["pants", "RLRL", "--svg", path.to_str().unwrap()]);
    assert!(out.contains("stable tangencies: 2"));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches("<circle").count(), 8);

    let out = ok(&["pants", "RL"]);
    assert!(out.contains("degenerate"));
}

#[test]
fn domain_errors_exit_two_with_code() {
    for (args, code) in [
        (&["section", "RR"][..], "NotMixed"),
        (&["factor", "1,1;0,1"], "NotHyperbolic"),
        (&["factor", "-2,-1;-1,-1"], "NegativeTrace"),
        (&["factor", "1,2;3,4"], "InvalidDeterminant"),
        (&["word", "RXL"], "ParseError"),
        (&["orbifold", "--genus", "0", "--orders", "3"], "UnsupportedOrbifold"),
        (&["orbifold", "--genus", "1", "--orders", "2"], "UnsupportedOrbifold"),
        (&["fixed", "1,0;0,1"], "NotHyperbolicPower"),
        (&["audit", "RL", "--max-period", "9"], "InvalidArgument"),
        (&["delta", "--center", "RL", "--radius", "1", "--margin", "2", "--no-cache"], "BallTooSmall"),
        (&["graph", "--kind", "word", "--center", "RL", "--radius", "9", "--node-budget", "5", "--no-cache"], "CapExceeded"),
    ] {
        let (status, out, err) = call(args);
        assert_eq!(status, 2, "{args:?}");
        assert!(out.is_empty());
        assert!(err.starts_with(&format!("error: {code}: ")), "{args:?}: {err}");
        assert_eq!(err.lines().count(), 1);
    }
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["frobnicate"][..],
        &["word"],
        &["word", "RL", "--bogus"],
        &["--trace-cap", "0", "word", "RL"],
        &["graph", "--kind", "tree", "--center", "RL", "--radius", "1"],
        &["fixed", "2,1;1,1", "--power", "0"],
    ] {
        let (status, _, err) = call(args);
        assert_eq!(status, 1, "{args:?}");
        assert!(err.starts_with("error: UsageError: "), "{err}");
    }
    let (status, out, _) = call(&["--help"]);
    assert_eq!(status, 0);
    assert!(out.contains("Usage"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_ghys");
    let o = Command::new(bin).args(["word", "RL"]).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&o.stdout), ok(&["word", "RL"]));
    let o = Command::new(bin).args(["section", "LL"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: NotMixed"));
    let o = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn deterministic_output() {
    for args in [
        &["--output", "json", "pants", "RRLRL"][..],
        &["descend", "RRRLLRL"],
        &["--output", "json", "graph", "--kind", "conj", "--center", "RRL", "--radius", "2", "--no-cache"],
    ] {
        assert_eq!(ok(args), ok(args));
    }
}

#[test]
fn negative_entries_and_labels() {
    let (status, _, err) = call(&["descend", "-1,0;0,-1"]);
    assert_eq!(status, 2);
    assert!(err.starts_with("error: NotHyperbolic"), "{err}");
    let v = json(&["graph", "--kind", "conj", "--center", "-R^2", "--radius", "1", "--format", "json", "--no-cache"]);
    assert_eq!(v["center"], "-R^2");
}

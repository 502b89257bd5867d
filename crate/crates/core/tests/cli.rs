use std::path::PathBuf;
use std::process::{Command, Output};

fn selfdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selfdual")).args(args).env("NO_COLOR", "1").output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = selfdual(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(format!("cli-{}-{name}", std::process::id()))
}

#[test]
fn gmatrix_prints_g9() {
    let text = stdout(&["gmatrix", "-p", "3", "--lambda", "2"]);
    let rows: Vec<Vec<i64>> =
        text.lines().map(|l| l.split_whitespace().map(|v| v.parse().unwrap()).collect()).collect();
    let g3 = [[1, 0, 0], [-1, -1, 0], [1, -1, 1]];
    let sign = [[1, 0, 0], [-1, -1, 0], [1, -1, 1]];
    for i in 0..9 {
        for j in 0..9 {
            assert_eq!(rows[i][j], sign[i / 3][j / 3] * g3[i % 3][j % 3], "entry ({i},{j})");
        }
    }
}

#[test]
fn gmatrix_variants() {
    let plus = stdout(&["gmatrix", "-p", "3", "--lambda", "1", "--which", "plus", "--format", "json"]);
    assert_eq!(plus.trim(), "[[-1,0,0],[-1,0,0],[1,-1,-1]]");
    let plus = stdout(&["gmatrix", "-p", "3", "--lambda", "1", "--which", "plus", "--residues", "--format", "json"]);
    assert_eq!(plus.trim(), "[[2,0,0],[2,0,0],[1,2,2]]");
    let ups = stdout(&["gmatrix", "-p", "3", "--l", "8", "--which", "upsilon", "--delta", "4", "--residues"]);
    assert_eq!(ups, "Y5   2 1 0 1\nY7   0 0 2 2\n");
    let minus = stdout(&["gmatrix", "-p", "5", "--l", "7", "--which", "minus"]);
    assert_eq!(minus.lines().count(), 7);
}

#[test]
fn count_outputs() {
    assert_eq!(stdout(&["count", "-p", "3", "-m", "1", "-s", "3"]).trim(), "2186");
    assert_eq!(stdout(&["count", "-p", "3", "-m", "2", "-s", "2"]).trim(), "101");
    let csv = stdout(&["count", "-p", "3", "-s", "2", "--format", "csv"]);
    assert_eq!(
        csv,
        "p,m,s,case,nu,k,count\n3,1,2,unit,0,0,9\n3,1,2,even-k,1,2,3\n3,1,2,even-k,2,4,1\n3,1,2,odd-k,1,1,3\n3,1,2,odd-k,2,3,1\n"
    );
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["count", "-p", "7", "-m", "3", "-s", "3", "--format", "json"])).unwrap();
    let total = json["total"].as_str().unwrap();
    assert!(total.len() > 20, "big count stays exact: {total}");
}

#[test]
fn verify_all() {
    let out = stdout(&["verify", "-p", "3", "-m", "1", "-s", "2", "--all"]);
    assert_eq!(out.lines().next(), Some("17/17 self-dual"));
    assert!(out.contains("17/17 distinct"));
    let out = stdout(&["verify", "-p", "5", "-s", "1", "--all", "--negacyclic"]);
    assert!(out.contains("7/7 negacyclic images self-dual"));
}

#[test]
fn exported_codes_verify_after_reimport() {
    for sub in ["enumerate", "negacyclic"] {
        let path = scratch(&format!("{sub}.jsonl"));
        let p = path.to_str().unwrap();
        stdout(&[sub, "-p", "3", "-m", "2", "-s", "2", "--limit", "30", "--format", "json", "--out", p]);
        assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 30);
        assert_eq!(stdout(&["verify", "--input", p]).trim(), "30/30 self-dual");
        std::fs::remove_file(&path).unwrap();
    }
}

#[test]
fn tampered_export_fails_verification() {
    let path = scratch("tampered.json");
    let text = stdout(&["build", "-p", "3", "-s", "2", "--k", "0", "--params", "1,2", "--format", "json"]);
    let mut rec: serde_json::Value = serde_json::from_str(&text).unwrap();
    rec["generators"][0]["b"]["coeffs"][0] = serde_json::json!([2]);
    std::fs::write(&path, serde_json::to_string(&vec![rec]).unwrap()).unwrap();
    let out = selfdual(&["verify", "--input", path.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("0/1 self-dual"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn offsets_and_sampling_are_reproducible() {
    let all = stdout(&["enumerate", "-p", "3", "-s", "2"]);
    assert_eq!(all.lines().count(), 17);
    let window = stdout(&["enumerate", "-p", "3", "-s", "2", "--offset", "5", "--limit", "4"]);
    assert_eq!(window.lines().collect::<Vec<_>>(), all.lines().skip(5).take(4).collect::<Vec<_>>());
    let a =
        stdout(&["enumerate", "-p", "5", "-m", "2", "-s", "2", "--sample", "5", "--seed", "11", "--format", "json"]);
    let b =
        stdout(&["enumerate", "-p", "5", "-m", "2", "-s", "2", "--sample", "5", "--seed", "11", "--format", "json"]);
    assert_eq!(a, b);
    let c =
        stdout(&["enumerate", "-p", "5", "-m", "2", "-s", "2", "--sample", "5", "--seed", "12", "--format", "json"]);
    assert_ne!(a, c);
    let v = stdout(&["verify", "-p", "5", "-m", "2", "-s", "2", "--sample", "3", "--seed", "11"]);
    assert_eq!(v.lines().next(), Some("3/3 self-dual"));
}

#[test]
fn build_text_and_params() {
    let out = stdout(&["build", "-p", "3", "-s", "2", "--k", "2", "--params", "1"]);
    assert!(out.starts_with("<(x-1)^3*b(x) + u*(x-1)^2, (x-1)^7>  b(x) = 2*(x-1)^2\n"));
    let out = stdout(&["build", "-p", "3", "-m", "2", "-s", "2", "--k", "0", "--params", "0:1,2:-1"]);
    assert!(out.contains("0:1*"));
}

#[test]
fn errors_exit_nonzero_with_a_message() {
    for args in [
        &["count", "-p", "4", "-s", "1"][..],
        &["count", "-p", "3", "-s", "0"],
        &["build", "-p", "3", "-s", "2", "--k", "0", "--params", "1"],
        &["build", "-p", "3", "-s", "2", "--k", "9"],
        &["enumerate", "-p", "3", "-s", "1", "--format", "csv"],
        &["verify", "-p", "3", "-s", "2"],
        &["gmatrix", "-p", "3", "--lambda", "8"],
    ] {
        let out = selfdual(args);
        assert!(!out.status.success(), "{args:?} should fail");
        assert!(String::from_utf8_lossy(&out.stderr).contains("error"), "{args:?}");
    }
    assert!(!selfdual(&["frobnicate"]).status.success());
}

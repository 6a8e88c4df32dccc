use std::path::Path;
use std::process::Command;

fn qgrass(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qgrass")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn realize_reports_point_counts() {
    let dir = tempfile::tempdir().unwrap();
    let v = write(dir.path(), "v.json", r#"{"p": 2, "n": 1, "polys": [{"terms": [{"exps": [1, 1], "coef": 1}]}]}"#);
    let out = dir.path().join("report.json");
    let (code, stdout) = qgrass(&["realize", &v, "--q", "2,3", "--json-out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let counts: Vec<u64> = report
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["grassmannian_points"].as_u64().unwrap())
        .collect();
    assert_eq!(counts, vec![2, 2]);
    let saved: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(saved, report);
}

#[test]
fn budget_overflow_exits_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let v = write(dir.path(), "v.json", r#"{"p": 3, "n": 1, "polys": []}"#);
    assert_eq!(qgrass(&["--budget", "2", "realize", &v]).0, 3);
}

#[test]
fn bad_input_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let v = write(dir.path(), "v.json", r#"{"p": 4, "n": 1, "polys": []}"#);
    assert_eq!(qgrass(&["realize", &v]).0, 1);
    assert_eq!(qgrass(&["no-such-command"]).0, 1);
}

#[test]
fn grassmannian_and_connectivity() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(
        dir.path(),
        "m.json",
        r#"{"algebra": {"local_rsz": 2}, "dims": [3],
            "maps": {"T1": [[0,0,0],[1,0,0],[0,0,0]], "T2": [[0,0,0],[0,0,0],[1,0,0]]}}"#,
    );
    let (code, stdout) = qgrass(&["grassmannian", &m, "--e", "1", "--q", "3"]);
    assert_eq!(code, 0);
    let sets: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(sets[0]["points"].as_array().unwrap().len(), 4);
    let (code, stdout) = qgrass(&["connectivity", &m, "--q", "2"]);
    assert_eq!(code, 0);
    let graphs: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(graphs.as_array().unwrap().iter().all(|g| g["connected"] == true));
}

#[test]
fn auslander_on_square_zero_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.json", r#"{"relations": [[["xx", 1]], [["xy", 1]], [["yx", 1]], [["yy", 1]]]}"#);
    let m = write(dir.path(), "m.json", r#"{"x": [[0,0,0],[1,0,0],[0,0,0]], "y": [[0,0,0],[0,0,0],[1,0,0]]}"#);
    let (code, stdout) = qgrass(&["auslander", &g, &m, "--g", "1", "--q", "3"]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report[0]["auslander_count"], 4);
}

#[test]
fn lemma2_by_vertex() {
    let dir = tempfile::tempdir().unwrap();
    let alg = r#"{"vertices": ["1", "2"], "arrows": [{"label": "a", "source": "1", "target": "2"}]}"#;
    let a = write(dir.path(), "a.json", alg);
    let n = write(dir.path(), "n.json", &format!(r#"{{"algebra": {alg}, "dims": [1, 1], "maps": {{"a": [[1]]}}}}"#));
    let (code, stdout) = qgrass(&["lemma2", &a, &n, "--idem", "2", "--g", "1,0", "--q", "2,3"]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    for r in report.as_array().unwrap() {
        assert_eq!(r["w_dim"], 1);
        assert_eq!(r["lifted_count"], 1);
        assert_eq!(r["e"], serde_json::json!([1, 1]));
    }
}

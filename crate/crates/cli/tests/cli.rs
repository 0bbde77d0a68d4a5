use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/arrangement_3x4.json")
}

fn tropcx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tropcx"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_matrix(dir: &tempfile::TempDir, name: &str, rows: &[&[&str]]) -> PathBuf {
    let file = serde_json::json!({
        "rows": rows.len(),
        "cols": rows[0].len(),
        "entries": rows,
    });
    let path = dir.path().join(name);
    std::fs::write(&path, file.to_string()).unwrap();
    path
}

#[test]
fn type_of_point_is_translation_invariant() {
    let f = fixture();
    let f = f.to_str().unwrap();
    for p in ["0,0,0", "5,5,5", "-1/2,-1/2,-1/2"] {
        let o = tropcx(&["type-of-point", f, p]);
        assert!(o.status.success());
        assert_eq!(stdout(&o), "({2},{1,2},{1},{1,3})\n");
    }
}

#[test]
fn act_moves_h_to_e() {
    let f = fixture();
    let o = tropcx(&[
        "act",
        f.to_str().unwrap(),
        "({2},{1,2},{1},{1,3})",
        "({3}|{2}|{1})",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "({2},{1},{1},{1})\n");
}

#[test]
fn act_rejects_non_types() {
    let f = fixture();
    let o = tropcx(&[
        "act",
        f.to_str().unwrap(),
        "({2},{2},{1,2},{1,3})",
        "({1,2,3})",
    ]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a type"));
}

#[test]
fn enumerate_summary_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("complex.json");
    let f = fixture();
    let o = tropcx(&[
        "enumerate",
        f.to_str().unwrap(),
        "--check-geometric",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(
        report["summary"],
        serde_json::json!({"0": 7, "1": 18, "2": 12})
    );
    assert_eq!(report["cells"].as_array().unwrap().len(), 37);

    let single = write_matrix(&dir, "one.json", &[&["3"]]);
    let o = tropcx(&["enumerate", single.to_str().unwrap()]);
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["summary"], serde_json::json!({"0": 1}));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let f = fixture();
    let f = f.to_str().unwrap();
    assert_eq!(tropcx(&["type-of-point", f, "1,2"]).status.code(), Some(2));
    assert_eq!(
        tropcx(&["act", f, "({1},{2})", "({1,2,3})"]).status.code(),
        Some(2)
    );
    assert_eq!(
        tropcx(&["render", f, "--viewport", "1,2"]).status.code(),
        Some(2)
    );
    assert_eq!(tropcx(&["frobnicate"]).status.code(), Some(2));

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"rows\": 1}").unwrap();
    assert_eq!(
        tropcx(&["enumerate", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );

    assert_eq!(
        tropcx(&["enumerate", f, "--cap", "11"]).status.code(),
        Some(3)
    );
    let wide: Vec<&str> = vec!["0"; 7];
    let big = write_matrix(&dir, "big.json", &[&wide, &wide, &wide, &wide]);
    assert_eq!(
        tropcx(&["enumerate", big.to_str().unwrap()]).status.code(),
        Some(3)
    );

    let plane = write_matrix(&dir, "plane.json", &[&["0", "1"], &["1", "0"]]);
    assert_eq!(
        tropcx(&["render", plane.to_str().unwrap()]).status.code(),
        Some(5)
    );

    let missing = dir.path().join("missing.json");
    assert_eq!(
        tropcx(&["enumerate", missing.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn render_counts_and_determinism() {
    let f = fixture();
    let a = tropcx(&["render", f.to_str().unwrap()]);
    let b = tropcx(&["render", f.to_str().unwrap()]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let svg = stdout(&a);
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches(r#"class="apex""#).count(), 4);
    assert_eq!(svg.matches(r#"class="vertex""#).count(), 7);
    assert_eq!(svg.matches(r#"class="ray""#).count(), 12);

    let dir = tempfile::tempdir().unwrap();
    let single = write_matrix(&dir, "line.json", &[&["0"], &["0"], &["0"]]);
    let o = tropcx(&[
        "render",
        single.to_str().unwrap(),
        "--viewport",
        "-5,5,-5,5",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).matches(r#"class="ray""#).count(), 3);
}

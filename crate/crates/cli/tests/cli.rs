use std::process::{Command, Output};

use ade_fusion_cli::{run, DATA_ENV};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_ade-fusion"));
    c.env_remove(DATA_ENV);
    c
}

fn call(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ade-fusion").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn text(o: &Output) -> (String, String) {
    (String::from_utf8_lossy(&o.stdout).into_owned(), String::from_utf8_lossy(&o.stderr).into_owned())
}

fn bundled_data() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data")
}

#[test]
fn classify_a7_names_the_missing_extension() {
    let (code, out, _) = call(&["classify", "A7"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next().unwrap(), "EXCLUDED: theta 0⊕2 not a local extension of SU(2)_6");
}

#[test]
fn classify_d6_is_admissible() {
    let (code, out, _) = call(&["classify", "D6"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("ADMISSIBLE:"), "{out}");
    assert!(out.contains("Vir_{7/10}"));
}

#[test]
fn index_values_are_clamped_to_the_ceiling() {
    let (code, out, err) = call(&["index-values", "--max", "4.8"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[0], "1 ≈ 1.000000000000");
    assert_eq!(rows[5], "3+sqrt(3) ≈ 4.732050807569");
    assert!(err.contains("lowered"), "{err}");
}

#[test]
fn index_values_below_a_bound() {
    let (_, out, err) = call(&["index-values", "--max", "3.7", "--format", "tsv"]);
    assert!(err.is_empty());
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows[0], "symbol\tdecimal\trealization");
    assert_eq!(rows.len(), 5);
    assert!(rows[4].starts_with("4cos^2(pi/10)\t3.618033988750\t"));
}

#[test]
fn parse_errors_exit_two_with_usage() {
    for args in [&["frobnicate"][..], &["index-values", "--max", "lots"], &["classify", "Q7"], &["braidings", "A26"]] {
        let (code, out, err) = call(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(err.contains("Usage"), "{args:?}: {err}");
    }
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("table1"));
}

#[test]
fn json_is_stable_under_reserialization() {
    for args in [
        &["classify", "E6", "--format", "json"][..],
        &["braidings", "D6", "--format", "json"],
        &["index-values", "--format", "json"],
        &["graph-check", "haagerup:*", "--format", "json"],
        &["double-show", "A5", "--format", "json"],
    ] {
        let (code, out, _) = call(args);
        assert_eq!(code, 0, "{args:?}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", out, "{args:?}");
    }
}

#[test]
fn braidings_report_counts() {
    let (_, out, _) = call(&["braidings", "D6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], 4);
    let (_, out, _) = call(&["braidings", "E6"]);
    assert!(out.starts_with("E6: 0 braidings"), "{out}");
    assert!(out.contains("(2,0) eliminated"), "{out}");
}

#[test]
fn double_show_tsv_has_one_row_per_object() {
    let (code, out, _) = call(&["double-show", "A5", "--format", "tsv"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows[0], "object\tdim\t0\t2\t4");
    assert!(rows.iter().any(|r| r.starts_with("(2,2)_-\t2.000000000000\t0\t1\t0")), "{out}");
}

#[test]
fn graph_check_builtins() {
    let (_, out, _) = call(&["graph-check", "haagerup:*", "--format", "tsv"]);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r.ends_with("\ttrue")), "{out}");
    let (_, out, _) = call(&["graph-check", "D6"]);
    assert!(out.contains("pendant_ok             true"));
    assert!(out.contains("excluded               false"));
    let (_, out, _) = call(&["graph-check", "Ainf", "--depth", "20", "--format", "tsv"]);
    assert!(out.lines().nth(1).unwrap().ends_with("\ttrue"));
}

#[test]
fn graph_check_reads_files() {
    let dir = std::env::temp_dir().join(format!("ade-fusion-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("e6.graph");
    let g = ade_fusion::graph::dynkin("E6".parse().unwrap()).unwrap();
    std::fs::write(&path, g.to_text()).unwrap();
    let (code, out, _) = call(&["graph-check", path.to_str().unwrap(), "--format", "tsv"]);
    assert_eq!(code, 0);
    assert!(out.lines().nth(1).unwrap().starts_with("E6\tfalse\t"), "{out}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn missing_graph_file_exits_three() {
    let (code, _, err) = call(&["graph-check", "no/such/file.graph"]);
    assert_eq!(code, 3);
    assert!(err.contains("no/such/file.graph"), "{err}");
}

#[test]
fn missing_data_dir_exits_three_with_path() {
    let o = bin().args(["classify", "E6", "--data-dir", "/nonexistent/ade"]).output().unwrap();
    let (_, err) = text(&o);
    assert_eq!(o.status.code(), Some(3));
    assert!(err.contains("/nonexistent/ade/e6_double.json"), "{err}");
}

#[test]
fn environment_data_dir_is_used_and_the_flag_wins() {
    let o = bin().args(["classify", "A7"]).env(DATA_ENV, "/nonexistent/ade").output().unwrap();
    assert_eq!(o.status.code(), Some(3), "{:?}", text(&o));
    assert!(text(&o).1.contains("kl_table.json"));
    let data = bundled_data();
    let o = bin()
        .args(["classify", "A7", "--data-dir", data.to_str().unwrap()])
        .env(DATA_ENV, "/nonexistent/ade")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{:?}", text(&o));
}

#[test]
fn verify_passes() {
    let o = bin().args(["verify", "--format", "tsv"]).output().unwrap();
    let (out, _) = text(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert_eq!(out.lines().count(), 9);
    assert!(out.lines().skip(1).all(|l| l.split('\t').nth(1) == Some("true")), "{out}");
}

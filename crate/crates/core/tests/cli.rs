//! End-to-end tests of the `realspher` binary: output, exit codes and
//! catalog handling.

use std::path::PathBuf;
use std::process::{Command, Output};

use realspher::catalog::{Catalog, SHIPPED};
use realspher::criteria::Tri;

fn realspher(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_realspher"))
        .args(args)
        .env_remove("REALSPHER_CATALOG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("realspher-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn orbit_queries() {
    let o = realspher(&["orbit", "E8", "--min"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "240\n"));
    let o = realspher(&["orbit", "A3", "1,0,0,0"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "4\n"));
    let o = realspher(&["orbit", "B2", "0,0"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "1\n"));
    assert_eq!(realspher(&["orbit", "B2", "1,0,0"]).status.code(), Some(2));
    assert_eq!(realspher(&["orbit", "X9", "--min"]).status.code(), Some(2));
    assert_eq!(realspher(&["orbit", "B2"]).status.code(), Some(2));
}

#[test]
fn classify_headline_pairs() {
    let o = realspher(&["classify", "upq", "R", "2", "1", "3", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).starts_with("spec\tupq R 2 1 3 0\nqp\tyes\npp\tyes\nbb\tyes\n"),
        "{}",
        stdout(&o)
    );

    let o = realspher(&["classify", "rank1 Iw_O"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("qp\tyes\npp\tyes\n"));

    let o = realspher(&["classify", "upq R 2 2 2 1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["qp"], "no");
}

#[test]
fn classify_reports_parse_position() {
    let o = realspher(&["classify", "upq R 2 x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("token 4"), "{}", stderr(&o));
    assert_eq!(realspher(&["classify", "nonsense"]).status.code(), Some(2));
    assert_eq!(realspher(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn classify_bare_datum() {
    // Three independent roots with m- > 0 and no family rule: undecidable.
    let independent = r#"{"rank_a_h": 2, "rank_a_g": 2, "roots": [
        {"weight": "1,0", "m_plus": 0, "m_minus": 1},
        {"weight": "0,1", "m_plus": 0, "m_minus": 1}]}"#;
    let o = realspher(&[
        "classify",
        "--datum",
        temp_file("independent.json", independent).to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(stdout(&o).contains("qp\tunknown\n"));

    // Three roots in a plane: dependent, so (QP) fails.
    let dependent = r#"{"rank_a_h": 2, "rank_a_g": 2, "roots": [
        {"weight": "1,0", "m_plus": 0, "m_minus": 1},
        {"weight": "0,1", "m_plus": 0, "m_minus": 1},
        {"weight": "1,1", "m_plus": 0, "m_minus": 1}]}"#;
    let o = realspher(&[
        "classify",
        "--datum",
        temp_file("dependent.json", dependent).to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("qp\tno\npp\tno\nbb\tno\n"));

    let o = realspher(&["classify", "--datum", temp_file("broken.json", "{").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn report_on_shipped_catalog_is_clean() {
    let o = realspher(&["report"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut rows = out.lines();
    assert_eq!(rows.next(), Some("id\tflag\tcomputed\texpected\toutcome\twitness"));
    assert!(rows.all(|r| r.split('\t').nth(4) == Some("OK")));
}

#[test]
fn injected_fault_is_reported_once() {
    let mut catalog = Catalog::shipped();
    let entry = catalog.entries.iter_mut().find(|e| e.id == "qp-I_R").unwrap();
    entry.aliases.clear();
    entry.expected.pp = Tri::Yes;
    let path = temp_file("fault.json", &catalog.to_json());

    let o = realspher(&["report", "--catalog", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let bad: Vec<&str> = out.lines().filter(|l| l.contains("\tMISMATCH\t")).collect();
    assert_eq!(bad.len(), 1, "{bad:?}");
    assert!(bad[0].starts_with("qp-I_R\tpp\tno\tyes\tMISMATCH\t"), "{}", bad[0]);

    // The environment variable is honoured as the default catalog.
    let o = Command::new(env!("CARGO_BIN_EXE_realspher"))
        .args(["report"])
        .env("REALSPHER_CATALOG", &path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn schema_violation_names_the_entry() {
    let broken = SHIPPED.replacen("\"spec\": \"upq R 2 0 3 0\"", "\"spec\": \"upq Q 2 0 3 0\"", 1);
    assert_ne!(broken, SHIPPED, "the shipped catalog contains the trivial entry");
    let path = temp_file("schema.json", &broken);
    let o = realspher(&["verify", "--catalog", path.to_str().unwrap(), "--bounds", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("pp-A-trivial"), "{}", stderr(&o));
}

#[test]
fn verify_is_clean_and_deterministic() {
    let a = realspher(&["verify", "--bounds", "3"]);
    let b = realspher(&["verify", "--bounds", "3"]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let o = realspher(&["verify", "--bounds", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["mismatch"], 0);
}

#[test]
fn enumerate_lists_a_family() {
    let o = realspher(&["enumerate", "somn", "--bounds", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("spec\tqp\tpp\tbb\n"));
    assert!(out.contains("somn 2 2\tyes\tyes\tyes\n"), "{out}");
    assert_eq!(realspher(&["enumerate", "nonsense"]).status.code(), Some(2));
}

#[test]
fn help_documents_the_grammar() {
    let o = realspher(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("upq F i j k l"));
}

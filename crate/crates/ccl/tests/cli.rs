use std::path::Path;
use std::process::{Command, Output};

use ccl::json::CertificateFile;

fn ccl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ccl"))
        .args(args)
        .env_remove("CCL_NODE_LIMIT")
        .output()
        .unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn turan_then_cover_gives_81() {
    let dir = tempfile::tempdir().unwrap();
    let el = dir.path().join("t12.el");
    assert!(ccl(&["turan", "--n", "12", "--t", "4", "--out", path(&el)])
        .status
        .success());
    let out = ccl(&["cover", "--t", "4", "--in", path(&el)]);
    assert_eq!(out.status.code(), Some(0));
    let cert: CertificateFile = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cert.size, 81);
    assert_eq!(cert.cliques.len(), 81);
}

#[test]
fn truncated_certificate_fails_verification_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let el = dir.path().join("t12.el");
    let cert_path = dir.path().join("c.json");
    ccl(&["turan", "--n", "12", "--t", "4", "--out", path(&el)]);
    assert!(ccl(&[
        "cover",
        "--t",
        "4",
        "--in",
        path(&el),
        "--out",
        path(&cert_path)
    ])
    .status
    .success());
    let ok = ccl(&["verify", "--in", path(&el), "--cert", path(&cert_path)]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));

    let mut cert = CertificateFile::read(&cert_path).unwrap();
    let dropped = cert.cliques.pop().unwrap();
    cert.provenance.pop();
    cert.size -= 1;
    std::fs::write(&cert_path, cert.to_json()).unwrap();
    let bad = ccl(&["verify", "--in", path(&el), "--cert", path(&cert_path)]);
    assert_eq!(bad.status.code(), Some(1));
    let text = stdout(&bad);
    let witness = format!("{dropped:?}").replace(' ', "");
    assert!(
        text.replace(' ', "").contains(&witness),
        "{text} lacks {witness}"
    );
}

#[test]
fn three_cover_certificate_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let el = dir.path().join("t16.el");
    let cert_path = dir.path().join("c.json");
    ccl(&["turan", "--n", "16", "--t", "4", "--out", path(&el)]);
    let out = ccl(&[
        "cover",
        "--t",
        "3",
        "--in",
        path(&el),
        "--out",
        path(&cert_path),
    ]);
    assert!(out.status.success());
    let cert = CertificateFile::read(&cert_path).unwrap();
    assert!(cert.partition.is_some());
    assert!(cert.provenance.iter().any(|p| p == "refinement"));
    assert_eq!(
        ccl(&["verify", "--in", path(&el), "--cert", path(&cert_path)])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn exact_solves_and_respects_the_budget() {
    let dir = tempfile::tempdir().unwrap();
    let el = dir.path().join("t9.el");
    let best = dir.path().join("best.json");
    ccl(&["turan", "--n", "9", "--t", "3", "--out", path(&el)]);
    let out = ccl(&["exact", "--t", "3", "--in", path(&el)]);
    let cert: CertificateFile = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cert.size, 27);

    let hard = dir.path().join("t10.el");
    ccl(&["turan", "--n", "10", "--t", "5", "--out", path(&hard)]);
    let starved = Command::new(env!("CARGO_BIN_EXE_ccl"))
        .args([
            "exact",
            "--t",
            "3",
            "--in",
            path(&hard),
            "--out",
            path(&best),
        ])
        .env("CCL_NODE_LIMIT", "1")
        .output()
        .unwrap();
    assert_eq!(starved.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&starved.stderr).contains("budget"));
    let partial = CertificateFile::read(&best).unwrap();
    assert!(ccl(&["verify", "--in", path(&hard), "--cert", path(&best)])
        .status
        .success());
    let optimum: CertificateFile =
        serde_json::from_slice(&ccl(&["exact", "--t", "3", "--in", path(&hard)]).stdout).unwrap();
    assert!(partial.size >= optimum.size);
}

#[test]
fn parse_errors_name_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let el = dir.path().join("bad.el");
    std::fs::write(&el, "4\n0 1\n1 x\n").unwrap();
    let out = ccl(&["cover", "--t", "4", "--in", path(&el)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.el") && err.contains('3'), "{err}");
}

#[test]
fn bounds_chain_at_97() {
    let out = ccl(&["bounds", "--check", "chain", "--n", "97"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("13406") && text.contains("13824"));
}

#[test]
fn reduce_prints_the_trace() {
    let out = ccl(&["reduce", "--seq", "3,1,1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["final"], serde_json::json!([3, 2]));
    assert_eq!(v["steps"][0]["op"], 1);
}

#[test]
fn sweep_reports_are_reproducible() {
    let args = [
        "sweep",
        "--n",
        "9",
        "--t",
        "4",
        "--mode",
        "random",
        "--samples",
        "40",
        "--seed",
        "7",
    ];
    let a = ccl(&args);
    let b = ccl(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        ccl(&["sweep", "--n", "7", "--t", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        ccl(&["sweep", "--n", "9", "--t", "4", "--mode", "random"])
            .status
            .code(),
        Some(2)
    );
}

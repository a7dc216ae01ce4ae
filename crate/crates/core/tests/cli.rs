//! End-to-end checks of the command-line front end: report contents,
//! exit codes, golden comparison, and text-format round-trips.

use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bosonise"))
        .args(args)
        .output()
        .expect("CLI runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("valid JSON on stdout")
}

#[test]
fn shells_reports_dimensions() {
    for (shell, dims, expected) in [(2u32, 3u32, 28u64), (0, 3, 3), (0, 1, 1)] {
        let out = run(&[
            "shells",
            "-N",
            "2",
            "-d",
            &dims.to_string(),
            "-s",
            &shell.to_string(),
        ]);
        assert!(out.status.success());
        let v = stdout_json(&out);
        assert_eq!(v["dimension"].as_u64(), Some(expected));
    }
}

#[test]
fn shells_text_format_round_trips() {
    let out = run(&["shells", "-N", "2", "-d", "3", "-s", "1", "--format", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut parsed = 0;
    for line in text.lines() {
        if let Some(rest) = line.split(": ").nth(1) {
            if line.starts_with("basis[") {
                let p = bosonise::text::parse_polynomial(rest).expect("round-trip");
                assert_eq!(bosonise::text::format_polynomial(&p), rest);
                parsed += 1;
            }
        }
    }
    assert_eq!(parsed, 9);
}

#[test]
fn shapes_report() {
    let out = run(&["shapes", "-N", "2", "-d", "3"]);
    let v = stdout_json(&out);
    assert_eq!(v["module_rank"].as_u64(), Some(4));
    assert_eq!(v["complete"].as_bool(), Some(true));
    let shapes = v["shapes"].as_array().unwrap();
    assert_eq!(shapes.len(), 4);
    let norms: Vec<&str> = shapes.iter().map(|s| s["norm_sq"].as_str().unwrap()).collect();
    assert_eq!(norms, vec!["2", "2", "2", "8"]);

    let out = run(&["shapes", "-N", "3", "-d", "2"]);
    let v = stdout_json(&out);
    assert_eq!(v["shapes"].as_array().unwrap().len(), 6);

    let out = run(&["shapes", "-N", "2", "-d", "1", "--max-shell", "0"]);
    let v = stdout_json(&out);
    assert_eq!(v["shapes"].as_array().unwrap().len(), 1);
}

#[test]
fn multiplets_report() {
    let out = run(&["multiplets", "-N", "2", "-d", "3", "-s", "2"]);
    let v = stdout_json(&out);
    assert_eq!(v["dimension"].as_u64(), Some(28));
    let content: Vec<u64> = v["l_content"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert_eq!(content, vec![3, 3, 2, 1, 1, 1]);
}

#[test]
fn table1_matches_golden() {
    let golden = format!("{}/golden/table1.json", env!("CARGO_MANIFEST_DIR"));
    let out = run(&["table1", "--golden", &golden]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v.as_object().unwrap().len(), 11);
    for (_, entry) in v.as_object().unwrap() {
        assert_eq!(entry["matches_paper"].as_bool(), Some(true));
    }
}

#[test]
fn golden_mismatch_is_exit_one() {
    let golden = format!("{}/golden/table1.json", env!("CARGO_MANIFEST_DIR"));
    let tampered = std::env::temp_dir().join("table1_tampered.json");
    let content = std::fs::read_to_string(&golden).unwrap();
    std::fs::write(&tampered, content.replace("\"128\"", "\"129\"")).unwrap();
    let out = run(&["table1", "--golden", tampered.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let diff = String::from_utf8(out.stderr).unwrap();
    assert!(diff.contains("norm_sq"));
}

#[test]
fn decompose_psi4() {
    let mut file = tempfile_path("psi4.poly");
    let psi4 = bosonise::fock::generators::psi4();
    writeln!(file.1, "{}", bosonise::text::format_polynomial(&psi4)).unwrap();
    drop(file.1);
    let out = run(&["decompose", "--input", &file.0]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let support: Vec<u64> = v["support"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert_eq!(support, vec![3]);
    assert_eq!(v["coefficients"][3].as_str(), Some("1"));
}

#[test]
fn decompose_rejects_bad_input() {
    let mut file = tempfile_path("bad.poly");
    writeln!(file.1, "t1 + garbage").unwrap();
    drop(file.1);
    let out = run(&["decompose", "--input", &file.0]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cap_is_exit_three() {
    let out = run(&["shells", "-N", "4", "-d", "3", "-s", "6", "--cap", "100"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn rm_state_classification() {
    let out = run(&["rm", "--state", "233-II"]);
    let v = stdout_json(&out);
    assert_eq!(v["pure_rm"].as_bool(), Some(true));
    assert_eq!(v["band"].as_str(), Some("rotational"));
    assert_eq!(v["n_r"].as_u64(), Some(0));

    let out = run(&["rm", "--state", "211-I"]);
    let v = stdout_json(&out);
    assert_eq!(v["pure_rm"].as_bool(), Some(true));
    assert_eq!(v["band"].as_str(), Some("vibrational"));
    assert_eq!(v["n_r"].as_u64(), Some(1));

    let out = run(&["rm", "--state", "233-I"]);
    let v = stdout_json(&out);
    assert_eq!(v["pure_rm"].as_bool(), Some(false));

    let out = run(&["rm", "--state", "23-2-II"]);
    let v = stdout_json(&out);
    assert_eq!(v["band"].as_str(), Some("rotational"));
}

#[test]
fn rm_rejects_missing_selector() {
    let out = run(&["rm"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn laughlin_matches_golden() {
    let golden = format!("{}/golden/laughlin.json", env!("CARGO_MANIFEST_DIR"));
    let out = run(&["laughlin", "--golden", &golden]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["vandermonde_match"].as_bool(), Some(true));
}

fn tempfile_path(name: &str) -> (String, std::fs::File) {
    let path = std::env::temp_dir().join(format!("bosonise_test_{name}"));
    let file = std::fs::File::create(&path).unwrap();
    (path.to_str().unwrap().to_string(), file)
}

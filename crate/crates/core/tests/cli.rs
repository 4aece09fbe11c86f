//! The `ringlab` binary: exit codes, golden reproduction and determinism.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn ringlab(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringlab"))
        .args(args)
        .current_dir(dir)
        .env_remove("RINGLAB_BUDGET_PAIRS")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("goldens").join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn check_exit_codes() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    assert_eq!(code(&ringlab(d, &["check", "i-reversible", "T(2, Z2)"])), 0);
    assert!(!d.join("witness.json").exists());
    assert_eq!(code(&ringlab(d, &["check", "i-reversible", "T(3, Z2)"])), 1);
    assert!(d.join("witness.json").exists());
    let bad = ringlab(d, &["check", "reversible", "GF 6"]);
    assert_eq!(code(&bad), 2);
    assert!(stderr(&bad).contains("not prime"));
    assert_eq!(code(&ringlab(d, &["check", "frobnicate", "Z4"])), 2);
    assert_eq!(code(&ringlab(d, &["check", "reversible", "prod(Z2,"])), 2);
}

#[test]
fn deterministic_witnesses_match_goldens() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    for (ring, name) in [("T(3, Z2)", "t3_z2.json"), ("D(3, Z6)", "d3_z6.json")] {
        let out = ringlab(d, &["--deterministic", "check", "i-reversible", ring, "--witness-out", "w.json"]);
        assert_eq!(code(&out), 1, "{ring}");
        assert_eq!(fs::read(d.join("w.json")).unwrap(), fs::read(golden(name)).unwrap(), "{ring}");
    }
}

#[test]
fn golden_witnesses_replay() {
    let tmp = TempDir::new().unwrap();
    for name in ["eg2_4.json", "t3_z2.json", "d3_z6.json", "sequence_shift.json"] {
        let out = ringlab(tmp.path(), &["witness", "replay", golden(name).to_str().unwrap()]);
        assert_eq!(code(&out), 0, "{name}: {}", stdout(&out));
        assert!(stdout(&out).contains("replays"));
    }
}

#[test]
fn tampered_witness_does_not_replay() {
    let tmp = TempDir::new().unwrap();
    let text = fs::read_to_string(golden("t3_z2.json")).unwrap();
    let swapped = text
        .replace("[[0, 0, 1], [0, 1, 0], [0, 0, 0]]", "A")
        .replace("[[1, 0, 0], [0, 1, 0], [0, 0, 0]]", "[[0, 0, 1], [0, 1, 0], [0, 0, 0]]")
        .replace('A', "[[1, 0, 0], [0, 1, 0], [0, 0, 0]]");
    let path = tmp.path().join("swapped.json");
    fs::write(&path, swapped).unwrap();
    assert_eq!(code(&ringlab(tmp.path(), &["witness", "replay", path.to_str().unwrap()])), 1);
    fs::write(&path, "{}").unwrap();
    assert_eq!(code(&ringlab(tmp.path(), &["witness", "replay", path.to_str().unwrap()])), 2);
}

#[test]
fn maximality_reports_match_goldens() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    for (base, amb, name) in [
        ("S3(GF 2)", "T(3, GF 2)", "maximal_s3_t3_gf2.json"),
        ("S4(GF 2)", "T(4, GF 2)", "maximal_s4_t4_gf2.json"),
        ("D(5, GF2)", "T(5, GF2)", "maximal_d5_t5_gf2.json"),
    ] {
        let out = ringlab(d, &["--deterministic", "maximal", base, amb, "--json", "r.json"]);
        assert_eq!(code(&out), 0, "{base}");
        assert_eq!(fs::read(d.join("r.json")).unwrap(), fs::read(golden(name)).unwrap(), "{base}");
    }
    let out = ringlab(d, &["maximal", "D(3, GF2)", "T(3, GF2)"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("not maximal"));
}

#[test]
fn budget_refusal_names_the_flag() {
    let tmp = TempDir::new().unwrap();
    let out = ringlab(tmp.path(), &["--max-pairs", "100", "check", "i-reversible", "T(3, Z2)"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("rerun with `--max-pairs 4096`"), "{}", stderr(&out));
    let out = ringlab(tmp.path(), &["--max-degree", "1", "check", "i-reversible", "poly(Z4, id)"]);
    assert_eq!(code(&out), 0);
    let capped = Command::new(env!("CARGO_BIN_EXE_ringlab"))
        .args(["--max-pairs", "100000", "check", "i-reversible", "T(3, Z2)"])
        .env("RINGLAB_BUDGET_PAIRS", "100")
        .current_dir(tmp.path())
        .output()
        .unwrap();
    assert_eq!(code(&capped), 2);
}

#[test]
fn flags_override_config_file() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    fs::write(d.join("ringlab.toml"), "max_pairs = 100\nmax_degree = 1\n").unwrap();
    let out = ringlab(d, &["--config", "ringlab.toml", "check", "i-reversible", "T(3, Z2)"]);
    assert_eq!(code(&out), 2);
    let out = ringlab(d, &["--config", "ringlab.toml", "--max-pairs", "5000", "check", "i-reversible", "T(3, Z2)"]);
    assert_eq!(code(&out), 1);
    let out = ringlab(d, &["--config", "ringlab.toml", "--max-pairs", "4194304", "check", "i-reversible", "poly(Z4, id)"]);
    assert!(stdout(&out).contains("degree at most 1"), "{}", stdout(&out));
    let out = ringlab(
        d,
        &["--config", "ringlab.toml", "--max-pairs", "4194304", "--max-degree", "2", "check", "i-reversible", "poly(Z4, id)"],
    );
    assert!(stdout(&out).contains("degree at most 2"), "{}", stdout(&out));
    fs::write(d.join("bad.toml"), "max_pears = 3\n").unwrap();
    assert_eq!(code(&ringlab(d, &["--config", "bad.toml", "check", "reversible", "Z2"])), 2);
}

#[test]
fn suite_json_is_identical_across_runs_and_job_counts() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    let filter = "Thm-3.*,Prop-5.1,Eg-6.*,Thm-2.9";
    let mut reports = Vec::new();
    for (jobs, file) in [("1", "a.json"), ("4", "b.json"), ("4", "c.json")] {
        let out = ringlab(d, &["--deterministic", "--jobs", jobs, "suite", "--filter", filter, "--json", file]);
        assert_eq!(code(&out), 0, "{}", stdout(&out));
        reports.push(fs::read(d.join(file)).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
    assert_eq!(reports[1], reports[2]);
    let parsed: serde_json::Value = serde_json::from_slice(&reports[0]).unwrap();
    assert_eq!(parsed["pass"], true);
    assert!(parsed["claims"].as_array().unwrap().iter().all(|c| c["millis"] == 0));
}

#[test]
fn suite_witness_files_replay() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    let out = ringlab(d, &["--deterministic", "suite", "--filter", "Prop-5.1,Eg-2.4", "--witness-dir", "w"]);
    assert_eq!(code(&out), 0);
    let files: Vec<_> = fs::read_dir(d.join("w")).unwrap().map(|e| e.unwrap().path()).collect();
    assert!(files.len() >= 4);
    for f in files {
        let out = ringlab(d, &["witness", "replay", f.to_str().unwrap()]);
        assert_eq!(code(&out), 0, "{}", f.display());
    }
}

#[test]
fn suite_filters_and_controls() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    assert_eq!(code(&ringlab(d, &["suite", "--filter", "Nope-9.9"])), 2);
    let out = ringlab(d, &["suite", "--controls"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("NC-1"));
    let out = ringlab(d, &["suite", "--filter", "Eg-2.3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("out-of-scope"));
}

#[test]
fn iso_and_listing_commands() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    assert_eq!(code(&ringlab(d, &["iso", "V(3, Z6)", "skewtrunc(Z6, id, 3, left)", "vn-trunc"])), 0);
    assert_eq!(code(&ringlab(d, &["iso", "nagata(prod(Z2, Z2), swap)", "triv(prod(Z2, Z2))", "same"])), 1);
    assert_eq!(code(&ringlab(d, &["iso", "Z4", "Z4", "no-such-map"])), 2);
    let out = ringlab(d, &["claims", "--json"]);
    let claims: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(claims.as_array().unwrap().len(), ringlab::suite::EXPECTED_IDS.len());
    let out = ringlab(d, &["idempotents", "Z6", "--central"]);
    assert_eq!(stdout(&out).lines().collect::<Vec<_>>(), ["0", "1", "3", "4"]);
    let out = ringlab(d, &["show", "D(5, Z2)"]);
    assert!(stdout(&out).contains("size 2048"));
}

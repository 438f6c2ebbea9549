use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn plethz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plethz"))
        .args(args)
        .env_remove("PLETH_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn first_line(args: &[&str]) -> String {
    let o = plethz(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o).lines().next().unwrap_or_default().to_string()
}

#[test]
fn pleth_examples() {
    assert_eq!(first_line(&["pleth", "[4,2]", "[3]", "2"]), "1");
    assert_eq!(first_line(&["pleth", "[3,2,1]", "[2,1]", "2"]), "1");
    assert_eq!(first_line(&["pleth", "[2,2]", "[2]", "1"]), "0");
}

#[test]
fn pleth_with_oracle() {
    let o = plethz(&["pleth", "[4,2]", "[3]", "2", "--oracle"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1\noracle 1 PASS\n");
}

#[test]
fn deflate_examples() {
    assert_eq!(stdout(&plethz(&["deflate", "[3,1]", "2"])), "1 [1,1]\n");
    assert_eq!(stdout(&plethz(&["deflate", "[4]", "2"])), "1 [2]\n");
    // s_(2) ∘ s_(2) = s_(4) + s_(2,2)
    assert_eq!(stdout(&plethz(&["deflate", "[2,2]", "2"])), "1 [2]\n");
}

#[test]
fn zcoeff_examples() {
    assert_eq!(first_line(&["zcoeff", "[14,2]"]), "3");
    assert_eq!(first_line(&["zcoeff", "[5,1]"]), "1");
    assert_eq!(first_line(&["zcoeff", "[2,1,1]"]), "0");
}

#[test]
fn zcoeff_reports_closed_form_and_oracle() {
    let o = plethz(&["zcoeff", "[5,1]", "--oracle"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1\nclosed form hook 1\noracle 1 PASS\n");
}

#[test]
fn exit_codes() {
    assert_eq!(
        plethz(&["pleth", "[4,2", "[3]", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(plethz(&["deflate", "[3,1]", "3"]).status.code(), Some(2));
    assert_eq!(plethz(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(plethz(&["zcoeff", "[65]"]).status.code(), Some(3));
    assert_eq!(plethz(&["census", "65"]).status.code(), Some(3));
    assert_eq!(plethz(&["cache", "list"]).status.code(), Some(2));
}

fn census_files(dir: &Path, jobs: &str) -> (Vec<u8>, Vec<u8>) {
    let table = dir.join("table.csv");
    let json = dir.join("table.json");
    let cache = dir.join("cache");
    let cache = cache.to_str().unwrap();
    for (path, format) in [(&table, "csv"), (&json, "json")] {
        let o = plethz(&[
            "census",
            "16",
            "--jobs",
            jobs,
            "--cache-dir",
            cache,
            "--format",
            format,
            "-o",
            path.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    (fs::read(table).unwrap(), fs::read(json).unwrap())
}

#[test]
fn census_is_deterministic_across_workers() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let one = census_files(a.path(), "1");
    let three = census_files(b.path(), "3");
    assert_eq!(one, three);
    let csv = String::from_utf8(one.0).unwrap();
    assert_eq!(csv.lines().next(), Some("partition,z,reason"));
    assert_eq!(csv.lines().count(), 232);
    for name in ["z8.zcache", "z16.zcache"] {
        assert_eq!(
            fs::read(a.path().join("cache").join(name)).unwrap(),
            fs::read(b.path().join("cache").join(name)).unwrap()
        );
    }
}

#[test]
fn census_report_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let o = plethz(&["census", "8", "--report", report.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 23);
    let summary = String::from_utf8(o.stderr).unwrap();
    assert!(summary.starts_with("n 8: total 22, zeros 15"), "{summary}");
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(v["zeros"], 15);
    assert_eq!(v["total"], 22);
}

#[test]
fn cache_list_and_clear() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(first_line(&["zcoeff", "[6,2]", "--cache-dir", d]), "2");
    let listed = stdout(&plethz(&["cache", "list", "--cache-dir", d]));
    assert!(
        listed
            .lines()
            .any(|l| l.contains("z8.zcache") && l.ends_with("zcache v1 n=8 algo=pairing")),
        "{listed}"
    );
    assert_eq!(
        stdout(&plethz(&["cache", "clear", "--cache-dir", d])),
        format!("removed {}\n", listed.lines().count())
    );
    assert_eq!(stdout(&plethz(&["cache", "list", "--cache-dir", d])), "");
}

#[test]
fn verify_suites() {
    let o = plethz(&["verify", "deboeck", "--m", "2..3", "--n", "3..4"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
    let o = plethz(&["verify", "closed-forms"]);
    assert!(o.status.success(), "{}", stdout(&o));
}

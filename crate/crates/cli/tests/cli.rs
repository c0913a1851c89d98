use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use maxinv::catalog::{paper_fixtures, quaternion8, symmetric};
use maxinv::format::{write_action_file, write_group_file};
use maxinv::report::CHECK_NAMES;
use maxinv::GroupTable;
use serde_json::Value;
use tempfile::TempDir;

fn maxinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxinv"))
        .args(args)
        .env_remove("MAXINV_CAP")
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn group_file(dir: &Path, name: &str, g: &GroupTable) -> PathBuf {
    write(dir, &format!("{name}.grp"), &write_group_file(g))
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_trivial_group() {
    let dir = TempDir::new().unwrap();
    let path = write(dir.path(), "one.grp", "points: 1\n");
    let out = maxinv(&["analyze", "--group", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let v = json(&out);
    let entry = &v["entries"][0];
    assert_eq!(entry["group"], "one");
    assert_eq!(entry["structure"]["order"], 1);
    assert!(entry["structure"]["maximal_invariant"].as_array().unwrap().is_empty());
}

#[test]
fn analyze_reports_decomposition() {
    let dir = TempDir::new().unwrap();
    let remark = paper_fixtures().unwrap().remove(0);
    let path = group_file(dir.path(), "remark", &remark.group);
    let out = maxinv(&["analyze", "--group", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let d = &json(&out)["entries"][0]["structure"]["decomposition"];
    assert_eq!(d["e_order"], 1);
    assert_eq!(d["v_order"], 2);
}

#[test]
fn non_coprime_action_is_invalid_input() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "s3.grp", "points: 3\ngen: (0 1)\ngen: (0 1 2)\n");
    let a = write(dir.path(), "conj.act", "aut: g0 -> (1 2); g1 -> (0 1 2)\n");
    let out = maxinv(&["analyze", "--group", g.to_str().unwrap(), "--action", a.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("action not coprime"), "{}", stderr(&out));
}

#[test]
fn coprime_action_file_is_used() {
    let dir = TempDir::new().unwrap();
    let f = paper_fixtures().unwrap().into_iter().find(|f| f.name == "d14-act3").unwrap();
    let g = group_file(dir.path(), "d14", &f.group);
    let a = write(dir.path(), "sq.act", &write_action_file(&f.group, &f.actions[1].action));
    let out = maxinv(&["analyze", "--group", g.to_str().unwrap(), "--action", a.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let entry = &json(&out)["entries"][0];
    assert_eq!(entry["action"], "sq");
    assert_eq!(entry["action_order"], 3);
    assert_eq!(entry["structure"]["invariant_count"], 4);
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let s4 = group_file(dir.path(), "sym4", &symmetric(4).unwrap());
    let q8 = group_file(dir.path(), "q8", &quaternion8().unwrap());
    let out = maxinv(&["verify", "thm1.9", "--group", s4.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(json(&out)["status"], "pass");
    let out = maxinv(&["verify", "thm1.9", "--group", q8.to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    assert_eq!(json(&out)["status"], "out-of-hypothesis");
    let out = maxinv(&["verify", "thm9.9", "--group", q8.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown checker"));
}

#[test]
fn every_checker_holds_on_paper_fixtures() {
    let dir = TempDir::new().unwrap();
    for f in paper_fixtures().unwrap() {
        let g = group_file(dir.path(), &f.name, &f.group);
        for na in &f.actions {
            let mut args = vec!["--group".to_string(), g.display().to_string()];
            if !na.action.is_trivial() {
                let a = write(dir.path(), &format!("{}.act", f.name), &write_action_file(&f.group, &na.action));
                args.extend(["--action".to_string(), a.display().to_string()]);
            }
            for checker in CHECK_NAMES {
                let mut full = vec!["verify", checker];
                full.extend(args.iter().map(String::as_str));
                let out = maxinv(&full);
                let c = code(&out);
                assert!(c == 0 || c == 3, "{} {} {checker}: exit {c}", f.name, na.name);
                if checker == "lemma2.3" {
                    assert_eq!(c, 0);
                }
            }
        }
    }
}

#[test]
fn campaign_writes_report() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("r.json");
    let out = maxinv(&["campaign", "--max-order", "1", "--out", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let v: Value = serde_json::from_str(&fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 1);

    let out = maxinv(&["campaign", "--max-order", "30", "--jobs", "2", "--out", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let v: Value = serde_json::from_str(&fs::read_to_string(&out_path).unwrap()).unwrap();
    let remark = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["group"] == "remark-1.5")
        .unwrap();
    let hyp = remark["checks"]["thm1.9"]["statements"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["name"] == "hypothesis")
        .unwrap();
    assert_eq!(hyp["verdict"]["holds"], true);
}

#[test]
fn campaign_errors_are_invalid_input() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("missing").join("r.json");
    let out = maxinv(&["campaign", "--max-order", "1", "--out", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);

    let ok = dir.path().join("r.json");
    let out = Command::new(env!("CARGO_BIN_EXE_maxinv"))
        .args(["campaign", "--max-order", "30", "--out", ok.to_str().unwrap()])
        .env("MAXINV_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).starts_with("error:"));
}

#[test]
fn malformed_group_file_names_the_line() {
    let dir = TempDir::new().unwrap();
    let path = write(dir.path(), "bad.grp", "points: 3\ngen: (0 1\n");
    let out = maxinv(&["analyze", "--group", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));
}

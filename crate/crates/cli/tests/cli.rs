use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn favkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_favkit")).args(args).output().expect("run favkit")
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("favkit-{}-{name}", std::process::id()));
    std::fs::write(&p, text).unwrap();
    p
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn strip_timings(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.retain(|k, _| k != "wall_ms");
            m.values_mut().for_each(strip_timings);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_timings),
        _ => {}
    }
}

#[test]
fn mismatch_exits_one_with_diff() {
    let input = temp_file("odd.txt", "[-1,-1,0,0,0,1]\n[-1,-1,-2,0,1,1]\n");
    let expect = temp_file("odd.expect", "favorable\n277\n");
    let o = favkit(&["favorable", input.to_str().unwrap(), "--expect", expect.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&o.stderr);
    assert!(stderr.contains("mismatch: [-1,-1,0,0,0,1]"), "{stderr}");
    let v = json(&o);
    // the scan does not stop at the first mismatch
    assert_eq!(v["coverage"]["total"], 2);
    assert_eq!(v["coverage"]["matched"], 1);
    assert_eq!(v["coverage"]["mismatched"], 1);
}

#[test]
fn empty_input_exits_zero() {
    let input = temp_file("empty.txt", "");
    let o = favkit(&["favorable", input.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["coverage"]["total"], 0);
}

#[test]
fn table1_sweep_is_deterministic() {
    let a = favkit(&["favorable", "--table1", "--jobs", "1"]);
    let b = favkit(&["favorable", "--table1", "--jobs", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["coverage"]["matched"], 172);
    let csv = favkit(&["favorable", "--table1", "--rows", "1,2", "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn amiable_runs_reproduce() {
    let run = || {
        let o = favkit(&["amiable", "--table1", "--rows", "1,23"]);
        assert_eq!(o.status.code(), Some(0));
        let mut v = json(&o);
        strip_timings(&mut v);
        v
    };
    let v = run();
    assert_eq!(v, run());
    assert_eq!(v["verdicts"][0]["computed"], "alpha");
    assert_eq!(v["verdicts"][1]["computed"], "not-alpha");
    assert_eq!(v["config"]["grh_constant"], 12.0);
}

#[test]
fn timeouts_exit_two() {
    let o = favkit(&["amiable", "--table1", "--rows", "1", "--timeout-secs", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["verdicts"][0]["status"], "incomplete");
}

#[test]
fn corrupted_corner_table_is_pinpointed() {
    let table = temp_file("corners.txt", "4: 4\n5: 5\n9: 4,5,9\n11: 4,5,9,11,11'\n15: 4,5,9,11,15\n");
    let o = favkit(&["verify-all", "--corner-table", table.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["passed"], false);
    let failing: Vec<String> =
        v["failing"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|f| f.starts_with("groups: ") && f.contains("corner")), "{failing:?}");
}

#[test]
fn shuffled_field_column_fails_those_rows() {
    let mut lines: Vec<String> = favkit_core::fixtures::TABLE2_CSV.lines().map(String::from).collect();
    let swap = |l: &str, f: &str| {
        let mut parts: Vec<&str> = l.splitn(3, ',').collect();
        parts[1] = f;
        parts.join(",")
    };
    let f5 = lines[5].split(',').nth(1).unwrap().to_string();
    let f6 = lines[6].split(',').nth(1).unwrap().to_string();
    lines[5] = swap(&lines[5], &f6);
    lines[6] = swap(&lines[6], &f5);
    let path = temp_file("table2.csv", &(lines.join("\n") + "\n"));
    let o = favkit(&["curves", "--table2", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let failing = json(&o)["failing"].clone();
    let failing: Vec<&str> = failing.as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(failing.len(), 2, "{failing:?}");
    assert!(failing[0].contains("curve 5 ") && failing[1].contains("curve 6 "), "{failing:?}");
}

#[test]
fn honda_classify_reports_chi() {
    let o = favkit(&["honda", "classify", "11000", "00010"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v[0]["conductor"], 4);
    assert_eq!(v[1]["tag"], "unramified-degree-at-most-p");
}

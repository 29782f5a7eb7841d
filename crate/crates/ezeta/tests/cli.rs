use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn ezeta(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ezeta"))
        .args(args)
        .env("EZETA_CACHE_DIR", cache)
        .output()
        .unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn cf_expand_emits_json_lines() {
    let dir = tempfile::tempdir().unwrap();
    let o = ezeta(&["cf-expand", "--m", "1", "--terms", "40"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let lines: Vec<serde_json::Value> = String::from_utf8(o.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 40);
    assert_eq!(lines[0]["a_n"], "23");
    assert_eq!(lines[1]["p_n"], "162");
    assert_eq!(lines[1]["q_n"], "7");
    assert_eq!(lines[6]["a_n"], "591");
    assert_eq!(lines[39]["n"], 39);
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let o = ezeta(&["moments", "--frobnicate"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("Usage"));
    let o = ezeta(&["no-such-command"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let o = ezeta(&["moments", "--k", "0"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--k"));
    assert!(o.stdout.is_empty());
    let o = ezeta(&["--help"], dir.path());
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn computation_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    // m = 3 exceeds log_2 x / log_3 x at x = 1000
    let o = ezeta(&["theorem1-ratio", "--x-max", "1000", "--m", "3"], dir.path());
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    assert!(stderr(&o).contains("m ="));
}

#[test]
fn moments_csv_shape_and_reproducibility_line() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m.csv");
    let o = ezeta(
        &["moments", "--k", "2", "--x-max", "300", "--points", "6", "--out", out.to_str().unwrap()],
        &dir.path().join("cache"),
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    let err = stderr(&o);
    assert!(err.contains("cmd=moments") && err.contains("k=2") && err.contains("cache_misses=1"), "{err}");
    let text = fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("# ezeta ") && lines[0].contains("x_max=300.0"));
    assert!(lines[1].starts_with("# summary "));
    assert_eq!(lines[2], "x,sum,fit,rel_residual");
    assert_eq!(lines.len(), 3 + 6);
    assert!(lines[8].starts_with("300.0,"));
}

#[test]
fn warm_cache_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let run = |name: &str| {
        let out = dir.path().join(name);
        let o = ezeta(&["theorem2", "--x-max", "300", "--out", out.to_str().unwrap()], &cache);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        (fs::read(out).unwrap(), stderr(&o))
    };
    let (cold, e1) = run("a.json");
    let (warm, e2) = run("b.json");
    assert!(e1.contains("cache_hits=0") && e2.contains("cache_hits=1"));
    assert_eq!(cold, warm);
}

#[test]
fn corrupt_cache_entry_is_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let a = ezeta(&["e-table", "--x-max", "40"], &cache);
    let entry = fs::read_dir(cache.join("e-table")).unwrap().next().unwrap().unwrap().path();
    let mut bytes = fs::read(&entry).unwrap();
    let n = bytes.len();
    bytes[n / 2] ^= 0xff;
    fs::write(&entry, bytes).unwrap();
    let b = ezeta(&["e-table", "--x-max", "40"], &cache);
    assert_eq!(b.status.code(), Some(0));
    assert!(stderr(&b).contains("corrupt"), "{}", stderr(&b));
    assert!(stderr(&b).contains("cache_hits=0"));
    assert_eq!(a.stdout, b.stdout);
    let c = ezeta(&["e-table", "--x-max", "40"], &cache);
    assert!(stderr(&c).contains("cache_hits=1"));
}

#[test]
fn cache_dir_flag_overrides_environment() {
    let dir = tempfile::tempdir().unwrap();
    let flag = dir.path().join("flag");
    let o = ezeta(&["e-table", "--x-max", "5", "--cache-dir", flag.to_str().unwrap()], &dir.path().join("env"));
    assert_eq!(o.status.code(), Some(0));
    assert!(flag.join("e-table").is_dir());
    assert!(!dir.path().join("env").exists());
}

#[test]
fn every_subcommand_runs_small() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[&[&str]] = &[
        &["e-table", "--x-max", "20", "--step", "0.5"],
        &["g-report", "--x-max", "200", "--stride", "10"],
        &["delta-report", "--x-max", "5000", "--stride", "7"],
        &["afe-meansquare", "--t", "300"],
        &["lemma1", "--m", "2", "--terms", "20", "--format", "csv"],
        &["wilton-transform", "--x-max", "3000"],
        &["theorem1-ratio", "--x-max", "10000"],
        &["theorem2", "--x-max", "200", "--format", "csv"],
        &["short-interval", "--t", "400", "--u", "5", "--u", "10"],
    ];
    for args in cases {
        let o = ezeta(args, dir.path());
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        let text = String::from_utf8(o.stdout).unwrap();
        assert!(text.starts_with("# ezeta "), "{args:?}");
        assert!(text.lines().count() >= 3, "{args:?}");
    }
    let o = ezeta(&["lemma1", "--m", "1", "--terms", "20"], dir.path());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 20);
    assert!(v["summary"]["sup"].as_f64().unwrap() > 0.0);
}

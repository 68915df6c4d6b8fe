//! Black-box tests of the command-line tool: exit codes, output files,
//! metadata headers, configuration layering and reproducibility.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use recoherence_lab::table::Table;

fn tool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recoherence-lab"))
        .args(args)
        .env_remove("RECOHERENCE_LAB_JOBS")
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("recoherence-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_passes_with_defaults() {
    let out = tool(&["check"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("FAIL"));
    assert!(text.lines().count() > 30);
}

#[test]
fn compute_prints_table_with_header() {
    let out = tool(&["compute", "--r", "1", "--theta", "0", "--omega-bar-T", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let table = Table::from_csv(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(table.metadata_value("tool").unwrap(), "recoherence-lab");
    assert!(table.metadata_value("version").is_some());
    assert!(table.metadata_value("config").is_some());
    assert_eq!(table.metadata_value("seed").unwrap(), 0);
    assert_eq!(table.rows.len(), 1);
    let col = |c: &str| table.numeric_column(c).unwrap()[0];
    let expected = col("W0_mode") * (1.0 + 2.0 * col("g"));
    assert!((col("W_total") - expected).abs() < 1e-12 * expected.abs());
}

#[test]
fn one_point_sweep_equals_compute() {
    let dir = scratch("onepoint");
    let out = tool(&["compute", "--r", "0.7", "--t0-over-T", "0.4"]);
    let compute = Table::from_csv(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert!(tool(&["sweep", "--r", "0.7", "--grid", "t0_over_T=lin:0.4:0.4:1", "--out", s(&dir)]).status.success());
    let sweep = Table::read(&dir.join("sweep.csv")).unwrap();
    assert_eq!(sweep.rows, compute.rows);
}

#[test]
fn exit_codes_follow_contract() {
    let dir = scratch("codes");
    let bad_toml = dir.join("bad.toml");
    std::fs::write(&bad_toml, "[path]\nR_over_T = 0.05\nbogus = 1\n").unwrap();
    let cases: [(&[&str], i32); 8] = [
        (&["compute", "--config", s(&bad_toml)], 2),
        (&["compute", "--state", "coherent-ish"], 2),
        (&["sweep", "--grid", "mass=lin:0:1:3"], 2),
        (&["sweep", "--grid", "r=cubic:0:1:3"], 2),
        (&["compute", "--r", "-0.5"], 3),
        (&["compute", "--R-over-T", "0.9"], 3),
        (&["oracle", "--max-panels", "64", "--rel-tol", "1e-18", "--tuples", "2", "--out", s(&dir)], 4),
        (&["no-such-command"], 2),
    ];
    for (args, code) in cases {
        let out = tool(args);
        assert_eq!(out.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn config_errors_name_the_line() {
    let dir = scratch("diag");
    let path = dir.join("c.toml");
    std::fs::write(&path, "seed = 1\n[mode]\nomega_bar_T = \"three\"\n").unwrap();
    let out = tool(&["compute", "--config", s(&path)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn flags_override_config_file() {
    let dir = scratch("layer");
    let path = dir.join("c.toml");
    std::fs::write(&path, "seed = 4\n[state]\nkind = \"squeezed\"\nr = 0.3\n[mode]\nomega_bar_T = 2.0\n").unwrap();
    let out = tool(&["compute", "--config", s(&path), "--r", "1.5"]);
    let table = Table::from_csv(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(table.numeric_column("r").unwrap(), vec![1.5]);
    assert_eq!(table.numeric_column("omega_bar_T").unwrap(), vec![2.0]);
    assert_eq!(table.metadata_value("seed").unwrap(), 4);
}

#[test]
fn sweep_from_config_file() {
    let dir = scratch("cfgsweep");
    let path = dir.join("c.toml");
    let out_dir = dir.join("out");
    std::fs::write(
        &path,
        format!(
            "[[sweep.axes]]\nparam = \"r\"\nstart = 0.1\nstop = 2.0\ncount = 7\nspacing = \"log\"\n[output]\ndir = {:?}\nformat = \"json\"\n",
            s(&out_dir)
        ),
    )
    .unwrap();
    assert!(tool(&["sweep", "--config", s(&path)]).status.success());
    let t = Table::read(&out_dir.join("sweep.jsonl")).unwrap();
    assert_eq!(t.rows.len(), 7);
}

#[test]
fn unwritable_output_fails_before_computing() {
    let dir = scratch("ro");
    let blocker = dir.join("file");
    std::fs::write(&blocker, "").unwrap();
    // A regular file where the output directory should go.
    let out = tool(&["fig3", "--out", s(&blocker.join("sub"))]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_order_independent_of_jobs() {
    let (a, b) = (scratch("jobs1"), scratch("jobs8"));
    for (dir, jobs) in [(&a, "1"), (&b, "8")] {
        let out = tool(&["sweep", "--grid", "t0_over_T=lin:0:2:25", "--grid", "omega_bar_T=lin:1:9:9", "--jobs", jobs, "--out", s(dir)]);
        assert!(out.status.success());
    }
    let ta = Table::read(&a.join("sweep.csv")).unwrap();
    let tb = Table::read(&b.join("sweep.csv")).unwrap();
    assert_eq!(ta.data_csv(), tb.data_csv());
    assert_eq!(ta.rows.len(), 225);
}

#[test]
fn replay_reproduces_sweep() {
    let dir = scratch("replay");
    assert!(tool(&["sweep", "--nbar", "3", "--grid", "nbar=lin:0:10:6", "--format", "json", "--out", s(&dir)]).status.success());
    let out = tool(&["replay", s(&dir.join("sweep.jsonl")), "--out", s(&dir.join("again"))]);
    assert_eq!(out.status.code(), Some(0));
    let first = Table::read(&dir.join("sweep.jsonl")).unwrap();
    let second = Table::read(&dir.join("again/replay.jsonl")).unwrap();
    assert_eq!(first.rows, second.rows);
}

#[test]
fn fig2_writes_curves_and_minimum() {
    let dir = scratch("fig2");
    assert!(tool(&["fig2", "--r", "0.5", "1.0", "2.0", "--omega-bar-T", "3.0", "--out", s(&dir)]).status.success());
    let curves = Table::read(&dir.join("fig2_curves.csv")).unwrap();
    assert_eq!(curves.columns, ["r", "omega_bar_t0", "g"]);
    let minimum = Table::read(&dir.join("fig2_gmin.csv")).unwrap();
    assert_eq!(minimum.columns, ["r", "g_min"]);
}

#[test]
fn oracle_records_seed_and_generator() {
    let dir = scratch("oracle");
    let out = tool(&["oracle", "--seed", "99", "--tuples", "4", "--n-samples", "5000", "--out", s(&dir)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let fringe = Table::read(&dir.join("fringe.csv")).unwrap();
    assert_eq!(fringe.metadata_value("seed").unwrap(), 99);
    assert_eq!(fringe.metadata_value("generator").unwrap(), "ChaCha8Rng");
    let oracle = Table::read(&dir.join("oracle.csv")).unwrap();
    assert!(oracle.numeric_column("ratio").unwrap().iter().all(|r| (r - 1.0).abs() < 1e-9));
}

#[test]
fn estimate_json_and_text() {
    let out = tool(&["estimate", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["cavity"].as_f64().unwrap() - 1e-7).abs() < 1e-21);
    let text = String::from_utf8(tool(&["estimate", "--R-over-T", "0.5", "--dw-over-w", "0.5"]).stdout).unwrap();
    assert!(text.contains("warning"));
}

#[test]
fn si_block_reported_when_time_unit_given() {
    let out = tool(&["compute", "--T-seconds", "1e-9"]);
    let table = Table::from_csv(&String::from_utf8(out.stdout).unwrap()).unwrap();
    let si = table.metadata_value("si").unwrap();
    assert!((si["R_m"].as_f64().unwrap() - 0.05 * 299_792_458.0 * 1e-9).abs() < 1e-15);
}

use std::path::Path;
use std::process::{Command, Output};

use bilayer_susy::cli::{RunConfig, Table};
use bilayer_susy::potentials::PotentialModel;
use bilayer_susy::susy::closed_forms::consecutive_field;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bilayer-susy")).args(args).output().expect("binary runs")
}

fn run_to(dir: &Path, name: &str, args: &[&str]) -> (Output, Table) {
    let out = dir.join(name);
    let mut all: Vec<&str> = args.to_vec();
    let p = out.to_str().unwrap().to_string();
    all.extend(["--out", &p]);
    let o = run(&all);
    assert!(o.status.code() == Some(0) || o.status.code() == Some(1), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    (o, Table::from_csv(&text).unwrap())
}

fn col(t: &Table, name: &str) -> Vec<f64> {
    t.column(name).unwrap().into_iter().map(|v| v.unwrap_or(f64::NAN)).collect()
}

#[test]
fn profile_matches_oscillator_field_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let (_, t) = run_to(dir.path(), "p.csv", &["profile", "--family", "shifted-ho", "--omega", "1", "--kappa", "1", "--j", "1"]);
    let m = PotentialModel::shifted_ho(1.0, 1.0).unwrap();
    let (x, b) = (col(&t, "x"), col(&t, "B"));
    for (xi, bi) in x.iter().zip(&b) {
        let want = consecutive_field(&m, *xi).0;
        assert!((bi - want).abs() < 1e-8 * (1.0 + want.abs()), "x={xi}: {bi} vs {want}");
    }
    let text = std::fs::read_to_string(dir.path().join("p.csv")).unwrap();
    assert_eq!(Table::from_csv(&text).unwrap().to_csv(), text);
    // Every RunConfig field is echoed.
    let fields = serde_json::to_value(RunConfig::default()).unwrap();
    for key in fields.as_object().unwrap().keys() {
        assert!(t.header.iter().any(|h| h.starts_with(&format!("config.{key} = "))), "missing {key}");
    }
    let side: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("p.csv.json")).unwrap()).unwrap();
    assert_eq!(side["meta"]["command"], "profile");
    assert_eq!(side["rows"].as_u64().unwrap() as usize, x.len());
}

#[test]
fn forbidden_band_is_a_config_error() {
    let o = run(&["profile", "--transform", "confluent", "--w0", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("forbidden band"));
    assert_eq!(run(&["profile", "--kappa", "1", "--k", "1"]).status.code(), Some(2));
    assert_eq!(run(&["state", "--family", "hyp-rm", "--n", "40"]).status.code(), Some(2));
    assert_eq!(run(&["profile", "--grid", "0,1"]).status.code(), Some(2));
}

#[test]
fn trig_rows_stay_inside_domain() {
    let dir = tempfile::tempdir().unwrap();
    let (_, t) = run_to(dir.path(), "t.csv", &["profile", "--family", "trig-rm"]);
    assert!(col(&t, "x").iter().all(|&x| x > 0.0 && x < std::f64::consts::PI));
}

#[test]
fn spectrum_sweeps() {
    let dir = tempfile::tempdir().unwrap();
    let (_, t) = run_to(dir.path(), "s.csv", &["spectrum", "--ksweep=-2,2,5", "--nmax", "5"]);
    let (n, e) = (col(&t, "n_aux"), col(&t, "E"));
    for level in 0..6 {
        let es: Vec<f64> = n.iter().zip(&e).filter(|(a, _)| **a == level as f64).map(|(_, e)| *e).collect();
        assert_eq!(es.len(), 5);
        assert!(es.iter().all(|v| (v - es[0]).abs() < 1e-12), "level {level}: {es:?}");
    }
    let (_, t) = run_to(dir.path(), "c.csv", &["spectrum", "--family", "trig-rm", "--D", "2", "--transform", "confluent", "--ksweep", "0,0,1"]);
    assert!(col(&t, "present").iter().all(|&p| p == 0.0));
    let (_, t) = run_to(dir.path(), "h.csv", &["spectrum", "--family", "hyp-rm", "--ksweep", "0.5,1.5,3", "--nmax", "20"]);
    let k = col(&t, "k");
    for kv in [0.5, 1.0, 1.5] {
        let rows = t.rows.iter().zip(&k).filter(|(_, &x)| x == kv).count();
        assert!(rows > 0 && rows <= 6 * 3, "k={kv}: {rows}");
    }
    // Per (k, branch) never more than the bound-state count.
    let b = col(&t, "branch");
    let kap = col(&t, "kappa");
    for (i, row) in t.rows.iter().enumerate() {
        let m = PotentialModel::hyp_rm(8.0, 1.0, kap[i]).unwrap();
        let same = t.rows.iter().enumerate().filter(|(j, _)| k[*j] == k[i] && b[*j] == b[i]).count();
        assert!(same <= m.bound_state_count().unwrap(), "{row:?}");
    }
}

#[test]
fn state_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let (_, t) = run_to(dir.path(), "s.csv", &["state", "--n", "1"]);
    assert!(col(&t, "psi2").iter().all(|&v| v == 0.0));
    for n in ["0", "4"] {
        let (_, t) = run_to(dir.path(), "s.csv", &["state", "--n", n, "--k", "1"]);
        let (x, rho) = (col(&t, "x"), col(&t, "rho"));
        let integral: f64 = (1..x.len()).map(|i| 0.5 * (rho[i] + rho[i - 1]) * (x[i] - x[i - 1])).sum();
        assert!((integral - 1.0).abs() < 1e-4, "{integral}");
        assert!(col(&t, "Jx").iter().all(|v| v.abs() < 1e-8));
    }
}

#[test]
fn verify_reports_and_exit_codes() {
    let o = run(&["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let t = Table::from_csv(&String::from_utf8(o.stdout).unwrap()).unwrap();
    let names: Vec<String> = t.rows.iter().map(|r| format!("{:?}", r[0])).collect();
    assert!(names.iter().any(|n| n.contains("factorization")));
    let o = run(&["verify", "--tol", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    std::fs::write(&cfg, r#"{"family": "trig-rm", "D": 4.0, "alpha": 1.0, "kappa": -7.0, "j": 1, "format": "json"}"#).unwrap();
    let out = dir.path().join("o.json");
    let o = run(&["profile", "--config", cfg.to_str().unwrap(), "--kappa", "-5", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["meta"]["config"]["kappa"], -5.0);
    assert_eq!(v["meta"]["config"]["family"], "trig-rm");
    assert_eq!(v["columns"][0], "x");
    std::fs::write(&cfg, r#"{"family": "trig-rm", "bogus": 1}"#).unwrap();
    assert_eq!(run(&["profile", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn k_value_selects_a_branch() {
    let dir = tempfile::tempdir().unwrap();
    let k = -77.0 / 60.0 * 16.0 / 19.0;
    let ks = format!("{k}");
    let (_, t) = run_to(dir.path(), "p.csv", &["profile", "--family", "trig-rm", "--k", &ks]);
    let line = t.header.iter().find(|h| h.starts_with("derived.kappa_branches")).unwrap();
    assert!(line.contains("\"physical\""));
    let kline = t.header.iter().find(|h| h.starts_with("config.k = ")).unwrap();
    let kv: f64 = kline.trim_start_matches("config.k = ").parse().unwrap();
    assert!((kv - k).abs() < 1e-9, "{kv}");
}

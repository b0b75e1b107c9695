use std::fs;
use std::process::{Command, Output};

fn gridpeel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gridpeel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn peel_prints_tau() {
    for (d, n, tau) in [("2", "3", 3), ("3", "2", 1), ("3", "3", 4)] {
        let o = gridpeel(&["peel", "--d", d, "--n", n]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), format!("tau={tau}"));
    }
}

#[test]
fn peel_writes_fvector_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = gridpeel(&["peel", "--d", "3", "--n", "3", "--fvectors", "--volumes", "--out", out]);
    assert!(o.status.success());
    let csv = fs::read_to_string(dir.path().join("layers.csv")).unwrap();
    let rows: Vec<&str> = csv.lines().filter(|l| !l.starts_with('#')).skip(1).collect();
    assert_eq!(rows, ["0,8,12,6,48", "1,12,24,14,40", "2,6,12,8,8", "3,1,,,0"]);
    let trace: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("trace.json")).unwrap()).unwrap();
    assert_eq!(trace["tau"], 4);
    assert!(dir.path().join("audit.csv").exists());

    let again = gridpeel(&["peel", "--d", "3", "--n", "3", "--out", out]);
    assert_eq!(again.status.code(), Some(2));
}

#[test]
fn outputs_are_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let args = |p: &str| {
        vec![
            "peel".to_string(),
            "--d".into(),
            "3".into(),
            "--n".into(),
            "6".into(),
            "--fvectors".into(),
            "--volumes".into(),
            "--categories".into(),
            "--mu".into(),
            "2".into(),
            "--store-points".into(),
            "--seed".into(),
            "11".into(),
            "--out".into(),
            p.to_string(),
        ]
    };
    let pa = a.path().to_str().unwrap().to_string();
    let pb = b.path().to_str().unwrap().to_string();
    let run = |v: Vec<String>, threads: &str| {
        let mut v = v;
        v.extend(["--threads".to_string(), threads.to_string()]);
        let refs: Vec<&str> = v.iter().map(String::as_str).collect();
        assert!(gridpeel(&refs).status.success());
    };
    run(args(&pa), "1");
    run(args(&pb), "4");
    for f in ["trace.json", "layers.csv", "categories.csv", "audit.csv"] {
        let x = fs::read(a.path().join(f)).unwrap();
        let y = fs::read(b.path().join(f)).unwrap();
        assert_eq!(x, y, "{f} differs");
    }
    assert!(fs::read_to_string(a.path().join("layers.csv")).unwrap().starts_with("# seed=11\n"));
}

#[test]
fn census_counts() {
    for (d, mu, count) in [("3", "1", 7), ("2", "1", 3)] {
        let o = gridpeel(&["census", "--d", d, "--mu", mu]);
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["exact_count"], count);
    }
    let o = gridpeel(&["census", "--d", "3", "--mu", "60"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let r = v["density_ratio"].as_f64().unwrap();
    assert!((0.9..=1.1).contains(&r), "{r}");
}

#[test]
fn one_dimensional_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let o = gridpeel(&["sweep", "--d", "1", "--n-list", "10,20,40,80", "--out", dir.path().to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    for (n, tau) in [(10, 5), (20, 10), (40, 20), (80, 40)] {
        assert!(text.contains(&format!("n={n} tau={tau}")));
    }
    let fit: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("fit.json")).unwrap()).unwrap();
    assert!((fit["slope"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    let csv = fs::read_to_string(dir.path().join("fit.csv")).unwrap();
    assert!(csv.contains("\"target_exponent\""));
}

#[test]
fn sweep_needs_three_sizes() {
    let o = gridpeel(&["sweep", "--d", "2", "--n-list", "4,8"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_restriction_suite() {
    let o = gridpeel(&["verify", "--suite", "restriction", "--n", "5", "--samples", "50", "--seed", "7"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["checks"], 50);
    assert_eq!(v["failures"], 0);
}

#[test]
fn injected_fault_fails_oracle_suite() {
    let o = gridpeel(&["verify", "--suite", "oracle", "--samples", "3", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(4));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["passed"], false);
}

#[test]
fn usage_errors() {
    assert_eq!(gridpeel(&["peel", "--d", "2"]).status.code(), Some(2));
    assert_eq!(gridpeel(&["peel", "--d", "0", "--n", "3"]).status.code(), Some(2));
    assert_eq!(gridpeel(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(gridpeel(&["peel", "--d", "3", "--n", "3", "--categories"]).status.code(), Some(2));
}

#[test]
fn lattice_commands() {
    assert_eq!(stdout(&gridpeel(&["hyperplanes", "--v", "2,3", "--n", "2"])).trim(), "4");
    assert_eq!(stdout(&gridpeel(&["normal", "--points", "0,0,0;1,2,0;0,0,1"])).trim(), "[2,-1,0]");
    assert_eq!(stdout(&gridpeel(&["orthogonal", "--v", "2,3", "--bound", "3"])).trim(), "none");
    let o = gridpeel(&["calibrate", "--d", "3", "--mu-max", "40"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["alpha"], 0.7);
}

//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gridpeel::analysis::{conjectured_exponent, exponent_fit, face_count_audit};
use gridpeel::lattice::{enumerate_directions, filter_directions, filter_radius, CALIBRATED_ALPHA_3};
use gridpeel::peel::{grid_trace, tau_grid, PeelOptions, PeelingTrace};
use gridpeel::suites::{run_suite, Suite, SuiteConfig};
use gridpeel::Result;

const SEED: u64 = 20240611;

struct Report {
    failed: usize,
}

impl Report {
    fn line(&mut self, id: &str, ok: bool, detail: String) {
        if !ok {
            self.failed += 1;
        }
        println!("{id} {} {detail}", if ok { "PASS" } else { "FAIL" });
    }

    fn run(&mut self, id: &str, f: impl FnOnce() -> Result<(bool, String)>) {
        match f() {
            Ok((ok, detail)) => self.line(id, ok, detail),
            Err(e) => self.line(id, false, format!("error: {e}")),
        }
    }
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, Duration)> {
    let start = Instant::now();
    let v = f()?;
    Ok((v, start.elapsed()))
}

fn suite(s: Suite, samples: Option<usize>, n: Option<i64>, limit: Option<Duration>) -> Result<(bool, String)> {
    let cfg = SuiteConfig {
        seed: SEED,
        samples,
        n,
        inject_fault: false,
    };
    let (out, dt) = timed(|| run_suite(s, &cfg))?;
    let in_time = limit.is_none_or(|l| dt <= l);
    let mut detail = format!("{}: {}/{} checks passed in {:.1}s", s.name(), out.checks - out.failures, out.checks, dt.as_secs_f64());
    if let Some(d) = out.detail {
        detail.push_str(&format!("; first failure: {d}"));
    }
    Ok((out.passed && in_time, detail))
}

fn small_grids() -> Result<(bool, String)> {
    let mut ok = true;
    for d in 1..=5 {
        ok &= tau_grid(1, d)? == 1 && tau_grid(2, d)? == 1;
    }
    let t2 = grid_trace(3, 2, PeelOptions::counts_only())?;
    let t3 = grid_trace(3, 3, PeelOptions::counts_only())?;
    ok &= t2.tau == 3 && t2.layer_sizes() == [4, 4, 1];
    ok &= t3.tau == 4 && t3.layer_sizes() == [8, 12, 6, 1];
    Ok((ok, format!("[3]^2 layers {:?}, [3]^3 layers {:?}", t2.layer_sizes(), t3.layer_sizes())))
}

fn planar_sweep() -> Result<(bool, String)> {
    let ns = [128i64, 256, 512, 1024, 2048];
    let (pairs, dt) = timed(|| ns.iter().map(|&n| Ok((n, tau_grid(n, 2)?))).collect::<Result<Vec<_>>>())?;
    let fit = exponent_fit(&pairs, conjectured_exponent(2))?;
    let ok = (1.27..=1.40).contains(&fit.slope) && dt <= Duration::from_secs(600);
    Ok((ok, format!("pairs {pairs:?}, slope {:.4} (target 4/3), residual {:.4}, {:.1}s", fit.slope, fit.residual, dt.as_secs_f64())))
}

fn spatial_sweep(traces: &[PeelingTrace]) -> Result<(bool, String)> {
    let pairs: Vec<(i64, usize)> = traces.iter().map(|t| (t.n.unwrap_or_default(), t.tau)).collect();
    let envelope = pairs.iter().all(|&(n, tau)| {
        let tau = tau as i64;
        (n + 1) / 2 <= tau && tau <= n * n
    });
    let mut fit = exponent_fit(&pairs, conjectured_exponent(3))?;
    fit.add_reference(24.0 / 11.0);
    let ok = (1.4..=1.9).contains(&fit.slope) && envelope;
    Ok((
        ok,
        format!(
            "pairs {pairs:?}, slope {:.4}, distance to 1.5 {:+.4}, distance to 24/11 {:+.4}, envelope {}",
            fit.slope, fit.references[0].distance, fit.references[1].distance, envelope
        ),
    ))
}

fn conservation(traces: &[PeelingTrace]) -> Result<(bool, String)> {
    let mut ok = true;
    let mut layers = 0;
    let mut skipped = 0;
    for t in traces {
        let n = t.n.unwrap_or_default();
        ok &= t.total_points() as i64 == n * n * n;
        for a in face_count_audit(t, None)? {
            if a.degenerate {
                skipped += 1;
                continue;
            }
            layers += 1;
            ok &= a.euler_ok == Some(true) && a.edge_ok == Some(true);
        }
    }
    Ok((ok, format!("{layers} full-dimensional layers audited, {skipped} degenerate skipped")))
}

fn half_survival() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for mu in [5, 10, 20, 40] {
        let v = enumerate_directions(mu, 3)?;
        let f = filter_directions(&v, filter_radius(CALIBRATED_ALPHA_3, mu, 3))?;
        ok &= 2 * f.len() >= v.len();
        parts.push(format!("mu={mu}: {}/{}", f.len(), v.len()));
    }
    Ok((ok, format!("alpha={CALIBRATED_ALPHA_3}; {}", parts.join(", "))))
}

fn main() -> ExitCode {
    let mut r = Report { failed: 0 };
    r.run("AC1", || suite(Suite::Oracle, Some(100), None, Some(Duration::from_secs(60))));
    r.run("AC2", small_grids);
    r.run("AC3", planar_sweep);
    let traces: Result<Vec<PeelingTrace>> =
        [16i64, 24, 32, 48, 64].iter().map(|&n| grid_trace(n, 3, PeelOptions::default())).collect();
    match traces {
        Ok(traces) => {
            r.run("AC4", || spatial_sweep(&traces));
            r.run("AC5", || conservation(&traces));
        }
        Err(e) => {
            r.line("AC4", false, format!("error: {e}"));
            r.line("AC5", false, format!("error: {e}"));
        }
    }
    r.run("AC6", || suite(Suite::Categories, None, None, None));
    r.run("AC7", || suite(Suite::Hyperplanes, None, None, Some(Duration::from_secs(60))));
    r.run("AC8", || suite(Suite::Census, None, None, None));
    r.run("AC9", half_survival);
    r.run("AC10", || suite(Suite::Restriction, Some(50), Some(5), Some(Duration::from_secs(60))));
    r.run("AC11", || suite(Suite::Normal, Some(1000), None, None));
    println!("{} criteria failed", r.failed);
    if r.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! CSV and JSON renderings of traces and reports.
//!
//! CSV tables start with a `# seed=<seed>` comment line; readers should treat lines
//! starting with `#` as comments.

use serde::Serialize;
use serde_json::json;

use crate::analysis::{AndrewsAudit, CategoryRecord, FaceAudit, FitReport};
use crate::error::{Error, Result};
use crate::lattice::CensusReport;
use crate::peel::PeelingTrace;

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn table(seed: u64, header: &[String], rows: Vec<Vec<String>>) -> Result<String> {
    let mut out = format!("# seed={seed}\n").into_bytes();
    {
        let mut w = csv::Writer::from_writer(&mut out);
        let err = |e: csv::Error| Error::InvariantViolation(format!("csv: {e}"));
        w.write_record(header).map_err(err)?;
        for r in rows {
            w.write_record(&r).map_err(err)?;
        }
        w.flush().map_err(|e| Error::InvariantViolation(format!("csv: {e}")))?;
    }
    String::from_utf8(out).map_err(|e| Error::InvariantViolation(e.to_string()))
}

fn headers(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn pretty<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Error::InvariantViolation(format!("json: {e}")))
}

/// Trace as JSON; layer point lists are included when the trace stored them.
pub fn trace_json(trace: &PeelingTrace, seed: u64) -> Result<String> {
    let layers: Vec<_> = trace
        .summaries
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let mut o = json!({
                "index": s.layer_index,
                "f0": s.f0,
                "affine_dim": s.affine_dim,
            });
            if let Some(f1) = s.f1 {
                o["f1"] = json!(f1);
            }
            if let Some(f2) = s.f2 {
                o["f2"] = json!(f2);
            }
            if let Some(v) = s.normalized_volume {
                // u128 is not a JSON number type in serde_json without arbitrary precision
                o["normalized_volume"] = match u64::try_from(v) {
                    Ok(v) => json!(v),
                    Err(_) => json!(v.to_string()),
                };
            }
            if let Some(layers) = &trace.layers {
                o["points"] = json!(layers[i].iter().map(|p| p.coords().to_vec()).collect::<Vec<_>>());
            }
            o
        })
        .collect();
    let mut root = json!({
        "d": trace.dim,
        "tau": trace.tau,
        "seed": seed,
        "layers": layers,
    });
    if let Some(n) = trace.n {
        root["n"] = json!(n);
    }
    pretty(&root)
}

/// `layer_index,f0,f1,f2,normalized_volume`, blanks where a value was not computed.
pub fn layers_csv(trace: &PeelingTrace, seed: u64) -> Result<String> {
    let rows = trace
        .summaries
        .iter()
        .map(|s| {
            vec![
                s.layer_index.to_string(),
                s.f0.to_string(),
                opt(s.f1),
                opt(s.f2),
                opt(s.normalized_volume),
            ]
        })
        .collect();
    table(seed, &headers(&["layer_index", "f0", "f1", "f2", "normalized_volume"]), rows)
}

/// `layer_index,mu,filtered,c0,...,c{d-1},degenerate`.
pub fn categories_csv(records: &[CategoryRecord], d: usize, seed: u64) -> Result<String> {
    let mut header = headers(&["layer_index", "mu", "filtered"]);
    header.extend((0..d).map(|k| format!("c{k}")));
    header.push("degenerate".into());
    let rows = records
        .iter()
        .map(|r| {
            let mut row = vec![r.layer_index.to_string(), r.mu.to_string(), r.filtered.to_string()];
            row.extend(r.counts.iter().map(|c| c.to_string()));
            row.push(r.degenerate.to_string());
            row
        })
        .collect();
    table(seed, &header, rows)
}

/// `layer_index,f0,f1,f2,euler_ok,ratio`.
pub fn audit_csv(faces: &[FaceAudit], andrews: Option<&AndrewsAudit>, seed: u64) -> Result<String> {
    let rows = faces
        .iter()
        .map(|a| {
            let ratio = andrews
                .and_then(|an| an.records.get(a.layer_index))
                .and_then(|r| r.ratio)
                .map(|r| format!("{r:.6}"))
                .unwrap_or_default();
            vec![
                a.layer_index.to_string(),
                a.f0.to_string(),
                opt(a.f1),
                opt(a.f2),
                opt(a.euler_ok),
                ratio,
            ]
        })
        .collect();
    table(seed, &headers(&["layer_index", "f0", "f1", "f2", "euler_ok", "ratio"]), rows)
}

/// `n,tau` rows followed by a `# {json}` footer with the fit.
pub fn fit_csv(report: &FitReport, seed: u64) -> Result<String> {
    let rows = report.pairs.iter().map(|(n, t)| vec![n.to_string(), t.to_string()]).collect();
    let mut s = table(seed, &headers(&["n", "tau"]), rows)?;
    let footer = json!({
        "slope": report.slope,
        "intercept": report.intercept,
        "residual": report.residual,
        "target_exponent": report.target_exponent,
    });
    s.push_str(&format!("# {footer}\n"));
    Ok(s)
}

pub fn fit_json(report: &FitReport, d: usize, seed: u64) -> Result<String> {
    let mut v = serde_json::to_value(report).map_err(|e| Error::InvariantViolation(e.to_string()))?;
    v["d"] = json!(d);
    v["seed"] = json!(seed);
    pretty(&v)
}

pub fn census_json(report: &CensusReport, seed: u64) -> Result<String> {
    let mut v = serde_json::to_value(report).map_err(|e| Error::InvariantViolation(e.to_string()))?;
    v["jordan_sum"] = json!(report.jordan_sum.to_string());
    v["seed"] = json!(seed);
    pretty(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::peel::{grid_trace, PeelOptions};

    #[test]
    fn three_cube_csv() {
        let t = grid_trace(3, 3, PeelOptions::default()).unwrap();
        let csv = layers_csv(&t, 0).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(
            lines,
            vec![
                "# seed=0",
                "layer_index,f0,f1,f2,normalized_volume",
                "0,8,12,6,48",
                "1,12,24,14,40",
                "2,6,12,8,8",
                "3,1,,,0",
            ]
        );
    }

    #[test]
    fn trace_json_shape() {
        let t = grid_trace(2, 2, PeelOptions::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&trace_json(&t, 5).unwrap()).unwrap();
        assert_eq!(v["tau"], 1);
        assert_eq!(v["n"], 2);
        assert_eq!(v["seed"], 5);
        assert_eq!(v["layers"][0]["points"].as_array().unwrap().len(), 4);
        assert!(v["layers"][0].get("f1").is_none());
    }
}

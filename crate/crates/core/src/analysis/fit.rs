use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReferenceExponent {
    pub exponent: f64,
    /// `slope - exponent`.
    pub distance: f64,
}

/// Least-squares fit of `log tau = intercept + slope * log n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    pub pairs: Vec<(i64, usize)>,
    pub slope: f64,
    pub intercept: f64,
    /// Largest absolute deviation of `log tau` from the fitted line.
    pub residual: f64,
    pub target_exponent: f64,
    pub references: Vec<ReferenceExponent>,
}

impl FitReport {
    pub fn add_reference(&mut self, exponent: f64) {
        self.references.push(ReferenceExponent {
            exponent,
            distance: self.slope - exponent,
        });
    }
}

/// Conjectured growth exponent `2d / (d + 1)` of the layer number of `[n]^d`.
pub fn conjectured_exponent(d: usize) -> f64 {
    2.0 * d as f64 / (d as f64 + 1.0)
}

pub fn exponent_fit(pairs: &[(i64, usize)], target: f64) -> Result<FitReport> {
    if pairs.len() < 3 {
        return Err(Error::InvalidParameter(format!("need at least 3 (n, tau) pairs, got {}", pairs.len())));
    }
    if pairs.iter().any(|&(n, t)| n < 1 || t < 1) {
        return Err(Error::InvalidParameter("n and tau must be positive".into()));
    }
    let mut ns: Vec<i64> = pairs.iter().map(|p| p.0).collect();
    ns.sort_unstable();
    ns.dedup();
    if ns.len() != pairs.len() {
        return Err(Error::InvalidParameter("n values must be distinct".into()));
    }
    let xs: Vec<f64> = pairs.iter().map(|p| (p.0 as f64).ln()).collect();
    let ys: Vec<f64> = pairs.iter().map(|p| (p.1 as f64).ln()).collect();
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residual = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - intercept - slope * x).abs())
        .fold(0.0, f64::max);
    let mut report = FitReport {
        pairs: pairs.to_vec(),
        slope,
        intercept,
        residual,
        target_exponent: target,
        references: Vec::new(),
    };
    report.add_reference(target);
    Ok(report)
}

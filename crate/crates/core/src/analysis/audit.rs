use serde::{Deserialize, Serialize};

use super::categories::CategoryRecord;
use crate::error::{Error, Result};
use crate::peel::PeelingTrace;

/// Face-count checks for one layer polytope of a 3D trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceAudit {
    pub layer_index: usize,
    pub f0: usize,
    pub f1: Option<usize>,
    pub f2: Option<usize>,
    /// Set when the layer is not full-dimensional; no checks are made then.
    pub degenerate: bool,
    pub euler_ok: Option<bool>,
    /// `2 f1 >= 3 f2`.
    pub edge_ok: Option<bool>,
    /// `2 f0 >= f2`.
    pub vertex_ok: Option<bool>,
    pub c2: Option<usize>,
    /// `f2 >= 2 c2`.
    pub category_ok: Option<bool>,
}

impl FaceAudit {
    pub fn passed(&self) -> bool {
        [self.euler_ok, self.edge_ok, self.vertex_ok, self.category_ok]
            .iter()
            .all(|c| c.unwrap_or(true))
    }
}

pub fn face_count_audit(trace: &PeelingTrace, categories: Option<&[CategoryRecord]>) -> Result<Vec<FaceAudit>> {
    if trace.dim != 3 {
        return Err(Error::InvalidParameter(format!("face audit needs d = 3, got {}", trace.dim)));
    }
    if let Some(c) = categories {
        if c.len() != trace.summaries.len() {
            return Err(Error::InvalidParameter("category records do not match the trace".into()));
        }
    }
    trace
        .summaries
        .iter()
        .map(|s| {
            let degenerate = s.affine_dim < 3;
            let mut a = FaceAudit {
                layer_index: s.layer_index,
                f0: s.f0,
                f1: s.f1,
                f2: s.f2,
                degenerate,
                euler_ok: None,
                edge_ok: None,
                vertex_ok: None,
                c2: None,
                category_ok: None,
            };
            if degenerate {
                return Ok(a);
            }
            let (Some(f1), Some(f2)) = (s.f1, s.f2) else {
                return Err(Error::NotInstrumented("f-vectors"));
            };
            a.euler_ok = Some(s.f0 as i64 - f1 as i64 + f2 as i64 == 2);
            a.edge_ok = Some(2 * f1 >= 3 * f2);
            a.vertex_ok = Some(2 * s.f0 >= f2);
            if let Some(c) = categories {
                let c2 = c[s.layer_index].counts[2];
                a.c2 = Some(c2);
                a.category_ok = Some(f2 >= 2 * c2);
            }
            Ok(a)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AndrewsRecord {
    pub layer_index: usize,
    pub f0: usize,
    pub normalized_volume: u128,
    /// `f0 / vol^((d-1)/(d+1))`; `None` for zero-volume layers.
    pub ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AndrewsAudit {
    pub records: Vec<AndrewsRecord>,
    pub max_ratio: Option<f64>,
    pub flagged: Vec<usize>,
}

pub fn andrews_audit(trace: &PeelingTrace) -> Result<AndrewsAudit> {
    let d = trace.dim;
    let factorial: f64 = (1..=d).map(|k| k as f64).product();
    let exponent = (d as f64 - 1.0) / (d as f64 + 1.0);
    let mut records = Vec::with_capacity(trace.summaries.len());
    let mut flagged = Vec::new();
    for s in &trace.summaries {
        let vol = s.normalized_volume.ok_or(Error::NotInstrumented("volumes"))?;
        let ratio = if vol == 0 {
            flagged.push(s.layer_index);
            None
        } else {
            Some(s.f0 as f64 / (vol as f64 / factorial).powf(exponent))
        };
        records.push(AndrewsRecord {
            layer_index: s.layer_index,
            f0: s.f0,
            normalized_volume: vol,
            ratio,
        });
    }
    let max_ratio = records.iter().filter_map(|r| r.ratio).reduce(f64::max);
    Ok(AndrewsAudit {
        records,
        max_ratio,
        flagged,
    })
}

//! Per-layer instrumentation and exponent fitting.

mod audit;
mod categories;
mod fit;

pub use audit::{andrews_audit, face_count_audit, AndrewsAudit, AndrewsRecord, FaceAudit};
pub use categories::{category_sweep, classify_direction, classify_direction_strict, Category, CategoryRecord};
pub use fit::{conjectured_exponent, exponent_fit, FitReport, ReferenceExponent};

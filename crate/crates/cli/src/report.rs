//! JSON document shapes. Field order is fixed by declaration order, so
//! output is byte-for-byte reproducible.

use serde::Serialize;

use crate::verify::VerificationReport;

#[derive(Debug, Serialize)]
pub struct PolyReport {
    pub expr: String,
    pub order: usize,
    pub edges: usize,
    /// Decimal coefficients, ascending degree.
    pub polynomial: Vec<String>,
    pub gamma: Option<usize>,
    pub iota: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct GammaReport {
    pub expr: String,
    pub order: usize,
    pub gamma: usize,
    pub witness: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct IotaReport {
    pub expr: String,
    pub order: usize,
    pub iota: usize,
    pub gamma_set: Vec<usize>,
    pub monitor_set: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct VerifySummary<'a> {
    pub law: &'a str,
    pub passed: usize,
    pub failed: usize,
    pub reports: &'a [VerificationReport],
}

#[derive(Debug, Serialize)]
pub struct IsoReport {
    pub left: String,
    pub right: String,
    pub isomorphic: bool,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

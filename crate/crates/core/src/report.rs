//! Verification reports with exact witnesses.

use serde::Serialize;

use crate::cyclo::CycloNum;

/// One checked identity.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<CycloNum>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<CycloNum>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_float: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_float: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    /// Exact equality check carrying both sides as witnesses.
    pub fn equality(name: impl Into<String>, lhs: CycloNum, rhs: CycloNum) -> Self {
        let (a, b) = (lhs.to_complex(), rhs.to_complex());
        Check {
            name: name.into(),
            pass: lhs == rhs,
            lhs_float: Some([a.0, a.1]),
            rhs_float: Some([b.0, b.1]),
            lhs: Some(lhs),
            rhs: Some(rhs),
            detail: None,
        }
    }

    pub fn boolean(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        let detail = detail.into();
        Check {
            name: name.into(),
            pass,
            lhs: None,
            rhs: None,
            lhs_float: None,
            rhs_float: None,
            detail: (!detail.is_empty()).then_some(detail),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub theorem: String,
    pub algebra: String,
    pub u: i64,
    pub v: i64,
    pub checks: Vec<Check>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "serde_json::Map::is_empty")]
    pub data: serde_json::Map<String, serde_json::Value>,
}

impl Report {
    pub fn new(theorem: &str, algebra: String, u: i64, v: i64) -> Self {
        Report {
            theorem: theorem.into(),
            algebra,
            u,
            v,
            checks: vec![],
            pass: true,
            notes: vec![],
            data: serde_json::Map::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.pass &= check.pass;
        self.checks.push(check);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        self.data.insert(
            key.into(),
            serde_json::to_value(value).expect("report data serializes"),
        );
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

//! Representability verdicts: the toolkit's output. Each verdict pairs a
//! Liouvillian class with a status and a machine-checkable reason.

use serde::{Deserialize, Serialize};

/// Liouvillian representability class a verdict speaks about.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "k")]
pub enum RepresentabilityClass {
    Radicals,
    KRadicals(usize),
    Quadratures,
    KQuadratures(usize),
    GeneralizedQuadratures,
}

impl std::fmt::Display for RepresentabilityClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RepresentabilityClass::Radicals => write!(f, "radicals"),
            RepresentabilityClass::KRadicals(k) => write!(f, "{k}-radicals"),
            RepresentabilityClass::Quadratures => write!(f, "quadratures"),
            RepresentabilityClass::KQuadratures(k) => write!(f, "{k}-quadratures"),
            RepresentabilityClass::GeneralizedQuadratures => write!(f, "generalized quadratures"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictStatus {
    Representable,
    StronglyNonRepresentable,
    Inconclusive,
}

impl std::fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VerdictStatus::Representable => write!(f, "representable"),
            VerdictStatus::StronglyNonRepresentable => write!(f, "strongly non-representable"),
            VerdictStatus::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Machine fields backing a verdict so it can be recomputed from the report.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerdictEvidence {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group_order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor_signature: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derived_series_orders: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polygon_case: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub class: RepresentabilityClass,
    pub status: VerdictStatus,
    pub reason: String,
    #[serde(default)]
    pub evidence: VerdictEvidence,
}

impl Verdict {
    pub fn new(class: RepresentabilityClass, status: VerdictStatus, reason: impl Into<String>) -> Self {
        Verdict {
            class,
            status,
            reason: reason.into(),
            evidence: VerdictEvidence::default(),
        }
    }

    pub fn with_evidence(mut self, evidence: VerdictEvidence) -> Self {
        self.evidence = evidence;
        self
    }
}

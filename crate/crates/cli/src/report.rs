//! The JSON report printed by `smooth --json`.

use serde::{Deserialize, Serialize};
use supersmooth::local::{SmoothnessVerdict, Verdict};
use supersmooth::{Parity, SuperDim};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dim {
    pub even: usize,
    pub odd: usize,
}

impl From<SuperDim> for Dim {
    fn from(d: SuperDim) -> Self {
        Dim {
            even: d.even,
            odd: d.odd,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tangent {
    /// `dim m_P/m_P²`.
    pub dim: Dim,
    pub jacobian_rank: Dim,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertEntry {
    pub degree: usize,
    pub even: usize,
    pub odd: usize,
    pub total: usize,
    pub free_model: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailedGenerator {
    /// `"even"` or `"odd"`.
    pub parity: String,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub complete_intersection: bool,
    pub witness_degree: Option<usize>,
    pub failed_generator: Option<FailedGenerator>,
}

/// Every field is present for every verdict; fields that do not apply are
/// `null`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    /// `"SmoothExact"`, `"SmoothToOrder"` or `"NotSmooth"`.
    pub verdict: String,
    /// Dimension at the point; `null` unless the point is smooth (to order).
    pub dim: Option<Dim>,
    pub tangent: Tangent,
    pub hilbert: Option<Vec<HilbertEntry>>,
    pub certificate: Certificate,
    pub order: usize,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(v: &SmoothnessVerdict, timing_ms: u64) -> Self {
        let (witness_degree, failed_generator) = match &v.verdict {
            Verdict::NotSmooth(c) => (
                c.witness_degree,
                c.failed_generator.map(|g| FailedGenerator {
                    parity: match g.parity {
                        Parity::Even => "even".into(),
                        Parity::Odd => "odd".into(),
                    },
                    index: g.index,
                }),
            ),
            _ => (None, None),
        };
        Report {
            verdict: v.verdict.name().to_string(),
            dim: (!v.verdict.is_not_smooth()).then(|| v.dim.into()),
            tangent: Tangent {
                dim: v.dim.into(),
                jacobian_rank: Dim {
                    even: v.rank.even,
                    odd: v.rank.odd,
                },
            },
            hilbert: v.hilbert.as_ref().map(|rows| {
                rows.iter()
                    .map(|r| HilbertEntry {
                        degree: r.degree,
                        even: r.value.even,
                        odd: r.value.odd,
                        total: r.value.total(),
                        free_model: r.free_model,
                    })
                    .collect()
            }),
            certificate: Certificate {
                complete_intersection: v.complete_intersection,
                witness_degree,
                failed_generator,
            },
            order: v.order,
            timing_ms,
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

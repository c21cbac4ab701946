//! JSON report types. The layout is published in `schema/report.schema.json`
//! and versioned by the `schema` field.

use std::collections::BTreeMap;

use repgraph::graph::{Extended, FourCycleCensus, TriangleCensus};
use repgraph::predict::{DiameterValue, FourCyclePrediction, TriangleCountPrediction, TriangleRoute};
use repgraph::qform::CanonicalType;
use repgraph::{Field, QuadraticForm};
use serde::{Serialize, Serializer};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct FieldEcho {
    pub spec: String,
    pub order: u32,
    pub characteristic: u32,
    pub lambda: u32,
}

impl FieldEcho {
    pub fn new(field: &Field) -> FieldEcho {
        FieldEcho {
            spec: field.spec_string(),
            order: field.order(),
            characteristic: field.characteristic(),
            lambda: field.lambda(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FormEcho {
    pub source: String,
    pub dim: usize,
    pub canonical: CanonicalType,
    pub model: String,
    pub model_dsl: String,
}

impl FormEcho {
    pub fn new(source: &str, form: &QuadraticForm) -> FormEcho {
        FormEcho {
            source: source.to_string(),
            dim: form.dim(),
            canonical: form.classify(),
            model: form.canonical_name(),
            model_dsl: form.canonical_dsl(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub schema: u32,
    pub command: &'static str,
    pub field: FieldEcho,
    pub form: FormEcho,
    pub isotropic: bool,
    pub hyperbolic: bool,
    pub witt_index: usize,
    pub anisotropic_kernel_dim: usize,
    /// `square` / `non-square` in odd characteristic, `arf-trivial` /
    /// `arf-nontrivial` in characteristic 2.
    pub discriminant: &'static str,
    pub summary: String,
}

/// Diameter as reported: a number, `"inf"`, or `{"lo": .., "hi": ..}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiameterJson(pub DiameterValue);

impl Serialize for DiameterJson {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Interval {
            lo: u64,
            hi: u64,
        }
        match self.0 {
            DiameterValue::Exact(d) => s.serialize_u64(d),
            DiameterValue::Infinite => s.serialize_str("inf"),
            DiameterValue::Interval { lo, hi } => Interval { lo, hi }.serialize(s),
        }
    }
}

impl std::fmt::Display for DiameterJson {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.0 {
            DiameterValue::Exact(d) => write!(f, "{d}"),
            DiameterValue::Infinite => f.write_str("inf"),
            DiameterValue::Interval { lo, hi } => write!(f, "{lo}..{hi}"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Tagged<T> {
    pub value: T,
    pub clause: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiameterBlock {
    pub value: DiameterJson,
    pub clause: &'static str,
    /// Exact value of an interval prediction, filled in by `verify`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resolved: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum TriangleBlock {
    Predicted {
        c1: u128,
        c2: u128,
        total: u128,
        route: TriangleRoute,
        c2_diag: Option<u128>,
        c2_binary: Option<u128>,
    },
    Failed {
        error: String,
    },
}

impl From<repgraph::Result<TriangleCountPrediction>> for TriangleBlock {
    fn from(r: repgraph::Result<TriangleCountPrediction>) -> TriangleBlock {
        match r {
            Ok(t) => TriangleBlock::Predicted {
                c1: t.c1,
                c2: t.c2,
                total: t.total,
                route: t.route,
                c2_diag: t.c2_diag,
                c2_binary: t.c2_binary,
            },
            Err(e) => TriangleBlock::Failed { error: e.to_string() },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FourCycleBlock {
    pub covered: bool,
    pub total: Option<u128>,
    pub clause: Option<&'static str>,
}

impl From<FourCyclePrediction> for FourCycleBlock {
    fn from(p: FourCyclePrediction) -> FourCycleBlock {
        match p {
            FourCyclePrediction::Count { total, clause } => FourCycleBlock {
                covered: true,
                total: Some(total),
                clause: Some(clause),
            },
            FourCyclePrediction::NotCovered => FourCycleBlock {
                covered: false,
                total: None,
                clause: None,
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PredictedBlock {
    pub connected: Tagged<bool>,
    pub diameter: DiameterBlock,
    pub girth: Tagged<Extended>,
    pub triangles: TriangleBlock,
    pub four_cycles: FourCycleBlock,
}

#[derive(Debug, Clone, Serialize)]
pub struct BruteforceBlock {
    pub vertices: u64,
    pub degree: usize,
    pub connected: bool,
    pub components: u64,
    pub diameter: Extended,
    pub girth: Extended,
    pub triangles: TriangleCensus,
    pub four_cycles: FourCycleCensus,
}

#[derive(Debug, Clone, Serialize)]
pub struct Matches {
    pub connected: bool,
    pub diameter: bool,
    pub girth: bool,
    pub triangles: bool,
    /// `null` when the predictor does not cover the case.
    pub four_cycles: Option<bool>,
}

impl Matches {
    pub fn all(&self) -> bool {
        self.connected && self.diameter && self.girth && self.triangles && self.four_cycles != Some(false)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub schema: u32,
    pub command: &'static str,
    pub field: FieldEcho,
    pub form: FormEcho,
    pub a: u32,
    pub predicted: PredictedBlock,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bruteforce: Option<BruteforceBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches: Option<Matches>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_match: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<BTreeMap<&'static str, f64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub f: u32,
    pub a: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted: Option<DiameterJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clause: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Extended>,
    /// `null` when the row could not be computed.
    #[serde(rename = "match")]
    pub matches: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Full report in `--mode all`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<InvariantReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub schema: u32,
    pub command: &'static str,
    pub form: String,
    pub mode: &'static str,
    pub rows: Vec<SweepRow>,
    pub mismatches: usize,
    pub errors: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<BTreeMap<&'static str, f64>>,
}

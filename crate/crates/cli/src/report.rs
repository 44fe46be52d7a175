//! Machine-readable report documents. Serialization is deterministic:
//! field order is fixed by declaration, collections are sorted, and the
//! version stamp sits in the header, never in the payload, so identical
//! inputs produce byte-identical reports.
//!
//! Exact values are embedded as strings in a small documented grammar:
//! rationals as `p/q` (`q` omitted when 1), quadratic values as
//! `(x + y*sqrt(d))` with rational x, y and the signed squarefree tag d
//! (negative d for imaginary fields).

use dehn_core::dehn::{ObstructionRecord, TrivialityReport, Verdict};
use dehn_core::diophantine::{EliminationCertificate, NormEquationSolution};
use dehn_core::pyramid::{PyramidParam, PyramidSpec};
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
pub struct ReportDocument<P> {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub payload: P,
}

impl<P: Serialize> ReportDocument<P> {
    pub fn new(command: &str, inputs: Vec<(String, String)>, payload: P) -> Self {
        ReportDocument {
            tool: "dehn".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            inputs,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SpecEcho {
    pub n: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_squared: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<String>,
}

impl SpecEcho {
    pub fn from_spec(spec: &PyramidSpec) -> Self {
        match spec.param() {
            PyramidParam::HeightSquared(h) => SpecEcho {
                n: spec.base().n(),
                h_squared: Some(h.to_string()),
                ratio: None,
            },
            PyramidParam::RatioV { a, b } => SpecEcho {
                n: spec.base().n(),
                h_squared: None,
                ratio: Some(format!("{a}/{b}")),
            },
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ChainEntry {
    pub kind: String,
    pub detail: String,
    /// Exact value in the report grammar, where the record carries one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

pub fn chain_entry(record: &ObstructionRecord) -> ChainEntry {
    let kind = match record {
        ObstructionRecord::CaseAHit { .. } => "case_a_hit",
        ObstructionRecord::CaseAMiss { .. } => "case_a_miss",
        ObstructionRecord::VRational { .. } => "v_rational",
        ObstructionRecord::VIrrational { .. } => "v_irrational",
        ObstructionRecord::AdmissibleDenominator { .. } => "admissible_denominator",
        ObstructionRecord::BMultipleOfFour => "b_mod4",
        ObstructionRecord::UnityConstraintViolated => "unity_constraint_violated",
        ObstructionRecord::NormEquationFails { .. } => "norm_equation_fails",
        ObstructionRecord::NormEquationMember { .. } => "norm_equation_member",
        ObstructionRecord::PiNotRootOfUnity { .. } => "pi_not_root_of_unity",
        ObstructionRecord::HexagonalUnitElimination { .. } => "hexagonal_unit_elimination",
    };
    let value = match record {
        ObstructionRecord::PiNotRootOfUnity { value, .. } => Some(value.to_string()),
        _ => None,
    };
    ChainEntry {
        kind: kind.into(),
        detail: record.to_string(),
        value,
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VerdictPayload {
    pub spec: SpecEcho,
    pub verdict: String,
    pub decisive: ChainEntry,
    pub chain: Vec<ChainEntry>,
    pub dehn_invariant: String,
}

pub fn verdict_payload(report: &TrivialityReport, tensor: &str) -> VerdictPayload {
    VerdictPayload {
        spec: SpecEcho::from_spec(&report.spec),
        verdict: match report.verdict {
            Verdict::Trivial => "trivial".into(),
            Verdict::Nontrivial => "nontrivial".into(),
        },
        decisive: chain_entry(report.decisive()),
        chain: report.chain.iter().map(chain_entry).collect(),
        dehn_invariant: tensor.to_string(),
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SolutionEntry {
    pub a: u64,
    pub b: u64,
    pub k: u32,
    pub n_odd: u64,
    pub family: String,
}

pub fn solution_entry(s: &NormEquationSolution) -> SolutionEntry {
    SolutionEntry {
        a: s.a,
        b: s.b,
        k: s.k,
        n_odd: s.n_odd,
        family: s.family.to_string(),
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SolveNormPayload {
    pub b_max: u64,
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<Vec<SolutionEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Vec<SolutionEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CertificateEntry {
    /// (b, d + 2) with b > d + 2 verified.
    pub b_exceeds_two_exponent: (u64, u64),
    /// (b, s) with b > s verified.
    pub b_exceeds_three_exponent: (u64, u64),
    pub contradiction: String,
}

pub fn certificate_entry(c: &EliminationCertificate) -> CertificateEntry {
    CertificateEntry {
        b_exceeds_two_exponent: c.exceeds_two_exponent,
        b_exceeds_three_exponent: c.exceeds_three_exponent,
        contradiction: "unit_argument".into(),
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FamilyMemberEntry {
    pub member: SolutionEntry,
    pub certificate: CertificateEntry,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FamiliesPayload {
    pub s_max: u32,
    pub d_max: u32,
    pub members: Vec<FamilyMemberEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub pass: bool,
    pub expected: String,
    pub computed: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VerifyPaperPayload {
    pub checks: Vec<CheckEntry>,
    pub all_pass: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ComplexityPayload {
    pub spec: SpecEcho,
    pub tensor: String,
    pub term_count: usize,
    pub lower: u32,
    pub upper: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio_hypothesis: Option<RatioHypothesisEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RatioHypothesisEntry {
    pub ratio: String,
    pub length_parts: Vec<String>,
    pub angle: String,
    pub collapsed_term_count: u32,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RegularPyramidEntry {
    pub n: u8,
    pub h_squared: String,
    pub edge_squared: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CrystalPayload {
    pub regular_pyramids: Vec<RegularPyramidEntry>,
    pub phi_product: String,
    pub unit_prism_relation_zero: bool,
    pub integer_crystal_relation_zero: bool,
    pub scaled_crystal_relation_zero: bool,
    pub crystal_edges: (String, String),
    pub pentagonal_w: String,
    pub pentagonal_w_to_60: String,
    pub pentagonal_is_root_of_unity: bool,
}

//! The discharging engine: exact-rational initial charges, the transfer
//! rules R1-R8 with a fully logged ledger, per-element case verdicts and the
//! unbounded-face accounting.
//!
//! All arithmetic is `BigRational`; no floating point appears anywhere in
//! this module. Rules read only the pre-discharge classifications; R8 is the
//! single exception and redistributes the post-R1-R7 charges inside each
//! trio or wheel cluster.

mod rules;
mod verdicts;

use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::plane_graph::{FaceId, GraphError, PlaneGraph, VertexId};

pub use rules::{apply_rules, initial_charges};
pub use verdicts::{outer_face_accounting, verdicts, CaseVerdict, OuterFaceAccounting, VerdictSummary};

/// A charge carrier: a vertex or a face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Element {
    Vertex(VertexId),
    Face(FaceId),
}

impl Element {
    /// Stable display name; the designated outer face prints as `D`.
    pub fn display(&self, g: &PlaneGraph) -> String {
        match *self {
            Element::Vertex(v) => format!("v{v}"),
            Element::Face(f) if Some(f) == g.outer_face() => "D".into(),
            Element::Face(f) => format!("f{f}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[allow(non_camel_case_types)]
pub enum RuleId {
    R1_1,
    R1_2,
    R2_1,
    R2_2,
    R2_3,
    R3_1,
    R3_2,
    R4_1,
    R4_2,
    R5,
    R6,
    R7,
    R8,
}

impl std::fmt::Display for RuleId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RuleId::R1_1 => "R1.1",
            RuleId::R1_2 => "R1.2",
            RuleId::R2_1 => "R2.1",
            RuleId::R2_2 => "R2.2",
            RuleId::R2_3 => "R2.3",
            RuleId::R3_1 => "R3.1",
            RuleId::R3_2 => "R3.2",
            RuleId::R4_1 => "R4.1",
            RuleId::R4_2 => "R4.2",
            RuleId::R5 => "R5",
            RuleId::R6 => "R6",
            RuleId::R7 => "R7",
            RuleId::R8 => "R8",
        };
        f.write_str(s)
    }
}

/// One logged transfer. `amount` is exactly the rule's printed constant
/// (or `mu(v)` for R6, `1/t` for rich faces under R4.2, and the settlement
/// amounts of R8).
#[derive(Debug, Clone)]
pub struct Transfer {
    pub source: Element,
    pub sink: Element,
    pub amount: BigRational,
    pub rule: RuleId,
    pub justification: String,
}

#[derive(Debug, Clone)]
pub struct ChargeLedger {
    pub initial: Vec<(Element, BigRational)>,
    pub transfers: Vec<Transfer>,
    pub final_charges: Vec<(Element, BigRational)>,
}

impl ChargeLedger {
    pub fn initial_of(&self, e: Element) -> &BigRational {
        &self.initial.iter().find(|(x, _)| *x == e).unwrap().1
    }

    pub fn final_of(&self, e: Element) -> &BigRational {
        &self.final_charges.iter().find(|(x, _)| *x == e).unwrap().1
    }

    pub fn initial_sum(&self) -> BigRational {
        self.initial.iter().map(|(_, q)| q).sum()
    }

    pub fn final_sum(&self) -> BigRational {
        self.final_charges.iter().map(|(_, q)| q).sum()
    }

    /// One line per transfer: `R2.2 v7 -> f12 : 5/4 [reason]`.
    pub fn render_text(&self, g: &PlaneGraph) -> String {
        let mut out = String::new();
        for t in &self.transfers {
            out.push_str(&format!(
                "{} {} -> {} : {} [{}]\n",
                t.rule,
                t.source.display(g),
                t.sink.display(g),
                t.amount,
                t.justification
            ));
        }
        out
    }
}

#[derive(Debug, Error)]
pub enum DischargeError {
    #[error("initial charges sum to {0}, expected -12")]
    ChargeSumMismatch(String),
    #[error("rule {rule} has two applicable sub-cases for vertex {vertex} and face {face}")]
    AmbiguousRule {
        rule: &'static str,
        vertex: VertexId,
        face: FaceId,
    },
    #[error("3-face {0} belongs to two redistribution clusters")]
    OverlappingCluster(FaceId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub(crate) fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub(crate) fn whole(num: i64) -> BigRational {
    BigRational::from_integer(num.into())
}

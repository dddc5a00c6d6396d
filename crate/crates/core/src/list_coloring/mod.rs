//! List-coloring engines: a complete backtracking solver, the even-cycle
//! 2-assignment oracle, exhaustive reducibility verification for small
//! configurations, and greedy-counting certificates.

mod certificate;
mod oracle;
mod reducible;
mod solver;

pub use certificate::{
    check_certificate, CertificateCheck, CertificateError, ReducibilityCertificate, SpecialMove,
    StepTrace,
};
pub use oracle::{lemma21_oracle, Lemma21Outcome};
pub use reducible::{
    verify_reducible, verify_w5_reduction, ReducibilityOutcome, SearchBudget, W5ReductionOutcome,
    DEFAULT_CLASS_BUDGET,
};
pub use solver::{
    extend_precolored_triangle, residual, solve, Coloring, ColoringError, ListAssignment,
};

/// Per-vertex lower bounds on residual list sizes, the hypothesis shape of
/// every reducibility argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeProfile {
    pub bounds: Vec<usize>,
}

impl SizeProfile {
    pub fn uniform(n: usize, b: usize) -> SizeProfile {
        SizeProfile { bounds: vec![b; n] }
    }

    pub fn total(&self) -> usize {
        self.bounds.iter().sum()
    }
}

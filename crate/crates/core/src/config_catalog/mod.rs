//! The catalog of named small configurations: chorded-cycle fans `C(..)`,
//! the 5-wheel, and the two sanctioned face gluings `F` (a 4-face with a
//! 5-face) and `H` (two 5-faces). Provides canonical plane embeddings,
//! occurrence search in host graphs, face/vertex classification and the
//! structural checklist consumed by the discharging engine.

mod classify;
mod matching;
mod patterns;
mod structural;

pub use classify::{
    classify, Classification, FaceClass, FacePosition, Richness, TrioRecord, TrioRoleKind,
    VertexProfile, W5ClusterRecord,
};
pub use matching::{
    find_matches, find_subgraph_occurrences, forbidden_scan, pattern_automorphisms, ConfigMatch,
    ForbiddenFinding, MatchError, MatchReport, DEFAULT_MATCH_CAP,
};
pub use patterns::{build_pattern, ConfigPattern, PatternError};
pub use structural::{
    structural_scan, FacePairViolation, RecognizedGluing, StructuralReport,
    VertexPatternViolation, W5AdjacencyViolation,
};

//! Analysis toolkit for finite simple connected plane graphs.
//!
//! The crate is organised around a rotation-system embedding ([`plane_graph`])
//! and builds up to three kinds of analyses on top of it:
//!
//! * combinatorial structure: bounded-length cycle enumeration, chord
//!   classification, separating cycles and membership in the cycle family
//!   checked by [`cycle_analysis::in_family_a`];
//! * configuration search: construction and detection of the named small
//!   configurations ([`config_catalog`]), face/vertex classification and the
//!   structural checklist used by the discharging argument;
//! * verification engines: an exact-rational discharging ledger
//!   ([`discharging`]) and an exhaustive list-coloring solver with
//!   reducibility search ([`list_coloring`]).
//!
//! [`corpus`] supplies seeded graph generators, JSON reporting and the
//! lemma-scan campaigns used by the `dlab` command-line tool.

pub mod config_catalog;
pub mod corpus;
pub mod cycle_analysis;
pub mod discharging;
pub mod list_coloring;
pub mod plane_graph;

pub use plane_graph::{FaceId, PlaneGraph, VertexId};

//! Exact multiplicative Zagreb indices, the extremal families over connected
//! graphs with a fixed number of cut edges, and the machinery to check the
//! extremal bounds exhaustively on small graphs.
//!
//! The crate is organized around a compact bitset [`Graph`] (at most 64
//! vertices) and exact big-integer index values, so every comparison in the
//! verifier is an integer comparison, never a float one.

pub mod canon;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod g6;
pub mod graph;
pub mod indices;
pub mod transforms;
pub mod verify;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm, MAX_CANON_N};
pub use construct::{
    bound_thm31, bound_thm32, bound_thm41, bound_thm42, c_n_p, c_n_s, coalesce, complete, cycle,
    join_by_path, k_n_p, k_n_s, path, star, ClassSpec,
};
pub use enumerate::{count_class, enumerate_class, enumerate_connected, GraphStream, MAX_ENUM_N};
pub use error::Error;
pub use g6::{decode_g6, encode_g6, read_g6, write_g6, MAX_G6_N};
pub use graph::{CutEdgeReport, Graph, MAX_N};
pub use indices::{m1, m2, pi1, pi2, pi2_edge_form, ratio_l, ratio_t, ExactRatio, IndexValue};
pub use transforms::{
    cycle_path_cycle_rewire, merge_endblocks, merge_pendent_paths, relocate_pendent_paths,
    slide_path, tree_to_star, EdgeMoves, TransformOutcome,
};
pub use verify::{
    extremal_search, lemma_suite, verify_all, verify_theorem, CheckResult, Direction,
    ExtremalCertificate, IndexKind, SuiteReport, Theorem, TheoremReport, VerifySummary,
};

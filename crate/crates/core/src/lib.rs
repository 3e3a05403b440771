//! Exact decision procedures for t-path hypergraphs of small graphs.
//!
//! The crate builds the hypergraph `H_t(G)` whose edges are the `(t+1)`-sets of
//! vertices spanning a path of length `t` in `G`, and decides, with exact
//! arithmetic throughout, the chain of properties
//! König → packing → ideal → totally unimodular → Mengerian.
//!
//! Every negative answer carries a certificate that can be re-checked
//! independently (see [`certificate`]):
//!
//! * a fractional vertex of the covering polyhedron `{x ≥ 0, Ax ≥ 1}`,
//! * a square submatrix with determinant outside `{0, ±1}`,
//! * a monomial in the symbolic power `I^(k)` that is not in `I^k`,
//! * a cost vector violating integer max-flow min-cut.
//!
//! Data-parallel scans (survey, submatrix scan, basis enumeration, minor and
//! cost-vector sweeps) run on rayon when the default `parallel` feature is
//! enabled and fall back to plain iterators otherwise. Results are identical
//! either way.

pub mod certificate;
pub mod classify;
pub mod clutter;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod linalg;
pub mod parallel;
pub mod survey;

pub use classify::{
    classify_mengerian, decide_mengerian_exact, is_path_with_double_stars, is_star_plus_edge, Caps,
    ClassVerdict, Clause, DecisionReport, MethodTrace,
};
pub use clutter::{Clutter, Minor, VertexLabel};
pub use error::{Error, Result};
pub use graph::{build_path_hypergraph, Graph, PathHypergraphSpec};
pub use ideal::{Monomial, MonomialIdeal};
pub use linalg::{ExactMatrix, PolyhedronVertex, Rational};
pub use survey::{cross_check, enumerate_connected, SurveyOptions, SurveyReport};

/// Version tag written into every JSON report.
pub const SCHEMA_VERSION: u32 = 1;

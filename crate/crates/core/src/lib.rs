//! Exact clique counting and extremal clique bounds for simple graphs.
//!
//! The toolkit has four layers:
//!
//! * [`graph`] / [`graph6`] — immutable bitset graphs with pasting,
//!   induced-subgraph, edge-list, and graph6 primitives;
//! * [`census`] — exact total and per-size clique counts, plus a brute-force
//!   subset-enumeration oracle;
//! * [`bounds`] / [`construct`] — closed-form clique maxima for graphs
//!   constrained by edges, degree, degeneracy, planarity, or excluded minors,
//!   next to deterministic generators that attain each bound exactly;
//! * [`analysis`] / [`verify`] — degeneracy, planarity, and clique-minor
//!   recognition at desk scale, and exhaustive labeled-graph scans that
//!   check every bound and its tightness.
//!
//! All counts are arbitrary-precision integers and all fractional bounds are
//! exact rationals; nothing in the crate rounds.

pub mod analysis;
pub mod bounds;
pub mod census;
pub mod construct;
pub mod graph;
pub mod graph6;
pub mod verify;

pub use analysis::{AnalysisError, MinorSearchBudget};
pub use bounds::{BoundError, EdgeDecomposition, OpenProblemGap};
pub use census::{CensusError, CliqueCensus};
pub use construct::ConstructError;
pub use graph::{Graph, GraphError, PasteMap, VertexSet};
pub use graph6::Graph6Error;
pub use verify::{GraphClass, VerificationReport, VerifyError};

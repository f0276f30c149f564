//! Trinities of plane bipartite graphs and their counting identities:
//! arborescences of the directed duals, hypertrees of the six hypergraphs,
//! tight chord-diagram configurations and Kauffman states of universes.

pub mod corpus;
pub mod dividing;
pub mod error;
pub mod fkt;
pub mod hypertrees;
pub mod linalg;
pub mod plane_graph;
pub mod suite;
pub mod transitions;
pub mod trees;
pub mod trinity;
pub mod union_find;

pub use dividing::{ChordDiagram, Configuration, DiscSystem, TreeHugging};
pub use error::{Error, Result};
pub use fkt::{Direction, Trail, Universe, UniverseDocument, UniverseState};
pub use hypertrees::{HypergraphKind, Hypertree, HypertreeSet};
pub use plane_graph::{parse_graph, Colour, DartId, EdgeId, FaceId, GraphDocument, RotationGraph, VertexId};
pub use suite::{SuiteReport, VerificationSuite};
pub use transitions::{ConfigurationGraph, Classification};
pub use trees::{MagicReport, SpanningTree};
pub use trinity::{build_trinity, Trinity};

/// Default bound on enumerated objects per stage.
pub const DEFAULT_CAP: u64 = 1_000_000;

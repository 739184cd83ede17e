//! Reduction toolkit for MaxCut on permutation graphs.
//!
//! The crate builds the permutation-model reduction from MaxCut on cubic
//! graphs, the interval-model construction it descends from, and every
//! piece of machinery needed to check the construction at desk scale:
//! graphs and cuts, permutation/interval model realization, grained
//! gadgets, class recognizers and exact/heuristic MaxCut solvers.
//!
//! Vertex ids are zero-based everywhere in the API. The graph text format
//! and the human-facing labels are one-based.

pub mod error;
pub mod gadget;
pub mod graph;
pub mod label;
pub mod model;
pub mod recognition;
pub mod reduction;
pub mod solvers;

pub use error::{Error, Result};
pub use gadget::{GadgetSpec, GadgetVertices, LemmaReport, Relation};
pub use graph::{Cut, Graph, SetClass, SetRelation};
pub use label::{GadgetOwner, Part, VertexLabel};
pub use model::{
    Coord, Interval, IntervalModel, LabeledGraph, PermSequence, PermutationModel,
};
pub use reduction::{
    interval::IntervalReduction, params::ParamSet, perm::ReductionArtifact,
};
pub use solvers::SolveResult;

//! Verification toolkit for triangle counts in K4-free graphs.
//!
//! The library builds the extremal graphs F1-F4 and their blow-ups,
//! computes greedy clique partitions and their statistics, checks the
//! associated identities and inequalities, reproduces the r = 3 base-case
//! enumeration, and solves exact edge-disjoint triangle packing on small
//! graphs.

pub mod atlas;
pub mod canon;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod packing;
pub mod partition;
pub mod report;

pub use atlas::{base_graph, blow_up, closed_form_stats, AtlasEntry, BaseGraphId, BlowUpSpec};
pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use graph::{Graph, TriangleSet};
pub use partition::{greedy_partition, verify_greedy, CliquePartition, PartitionStats};
pub use report::VerificationReport;

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),
    #[error("graph is not K4-free")]
    NotK4Free,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("graph6 parse error: {0}")]
    Graph6Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

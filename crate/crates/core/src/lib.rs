//! Exact log discrepancies and minimal log discrepancies on log canonical
//! surface germs.
//!
//! A germ is given by the weighted dual graph of its minimal resolution plus
//! boundary branches attached at points of the exceptional locus (or at the
//! origin of a smooth germ). Everything is computed over the rationals.

pub mod catalog;
pub mod classifier;
pub mod discrepancy;
pub mod dual_graph;
pub mod error;
pub mod germfile;
pub mod linalg;
pub mod rational;
pub mod script;
pub mod suite;
pub mod tower;

pub use classifier::{classify, dlt_kind, verify_theorem, ClassificationReport, DltKind, Verdict};
pub use discrepancy::{
    AttachSite, BoundaryBranch, DiscrepancyVector, GermModel, KollarStatus, PairClass, PairStatus,
};
pub use dual_graph::{ClassTag, SingularityClass, Vertex, WeightedDualGraph};
pub use error::{Error, Result};
pub use rational::{fmt_q, parse_q, Q};
pub use tower::cluster::{BranchCluster, Position};
pub use tower::{BlowupTower, DivisorOverGerm, MldSearch, Point};

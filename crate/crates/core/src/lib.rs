//! Hoffman graphs, exact smallest-eigenvalue tests, and integral
//! representations of norm 3.
//!
//! The crate is organized around a handful of value types: plain graphs
//! ([`Graph`]), exact symmetric integer matrices ([`SymmetricIntMatrix`]),
//! edge-signed graphs ([`EdgeSignedGraph`]), Hoffman graphs
//! ([`HoffmanGraph`]), and integer vector representations ([`ReducedRep`],
//! [`FullRep`]). On top of those sit the constructors for the named
//! families ([`catalog`]) and the enumeration and verification engines
//! ([`classify`]).
//!
//! All spectral decisions that matter (is the smallest eigenvalue exactly
//! -3?) are made in exact rational arithmetic; floating point is used for
//! reporting and pruning only.

pub mod catalog;
pub mod classify;
pub mod graph;
pub mod hoffman;
pub mod io;
pub mod matrix;
pub mod random;
pub mod repr;
pub mod signed;

mod error;

pub use catalog::{FamilyFMember, FamilyFTag};
pub use classify::{
    MainTheoremReport, ReducibilityVerdict, SeedlingVerdict, SmallTreeLikeMember, TreeCensusEntry,
};
pub use error::Error;
pub use graph::{Graph, SmithKind};
pub use hoffman::{HoffmanGraph, Label, TreeLikeCheck, TreeLikeViolation, WeightedMinusGraph};
pub use matrix::{LambdaOrder, SymmetricIntMatrix};
pub use repr::{FullRep, ReducedRep, Representability, SolveOutcome};
pub use signed::{EdgeSignedGraph, MinusMatchingClass};

pub type Result<T> = std::result::Result<T, Error>;

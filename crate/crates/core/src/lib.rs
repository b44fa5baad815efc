//! Graphs as partition-layered collections of shared OBDDs, and the
//! maximum-bisimulation quotient computed together with its layered encoding.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, JSON reports and
//! the command-line tool live in the `rankbisim-cli` companion crate.
//!
//! Module map:
//!
//! - [`obdd`]: reduced ordered BDD kernel with a shared unique table.
//! - [`graph`]: rooted graphs, SCC condensation, well-founded part, ranks.
//! - [`standard`]: the monolithic `χ(x̄, ȳ)` edge-relation encoding.
//! - [`layered`]: per-block destination lists and successor functions.
//! - [`quotient`]: rank-based Ackermann encoding and the quotient graph.
//! - [`oracles`]: explicit-state reference implementations used in tests.
//! - [`generators`]: graph families, worked-example fixtures, random graphs.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bits;
mod error;
pub mod generators;
pub mod graph;
pub mod layered;
pub mod obdd;
pub mod oracles;
pub mod quotient;
pub mod standard;
pub mod vars;

pub use bits::Bits;
pub use error::EncodeError;
pub use graph::{Graph, GraphError, NodeId, RankMap, SccGraph};
pub use layered::{LayeredRepr, Partition, SizeReport};
pub use obdd::{Assignment, BddError, BddRef, Kernel, Op, VarId};
pub use quotient::{EncodingPair, QuotientResult};
pub use standard::StandardRepr;

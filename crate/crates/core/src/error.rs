use thiserror::Error;

use crate::graph::GraphError;
use crate::layered::PartitionError;
use crate::obdd::BddError;

/// Failure while building or querying an OBDD encoding of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Bdd(#[from] BddError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("node {0} is out of range")]
    UnknownNode(u32),
    #[error("partition covers {found} nodes, graph has {expected}")]
    PartitionSize { expected: usize, found: usize },
    #[error("block {0} does not exist")]
    UnknownBlock(usize),
}

//! Rooted directed graphs with dense node ids and binary node codes.

mod rank;
mod scc;
mod validate;

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;
use thiserror::Error;

use crate::bits::{width_for, Bits, MAX_WIDTH};

pub use rank::{rank_acyclic, rank_general, RankMap};
pub use scc::{scc, well_founded_mask, well_founded_part, SccGraph};
pub use validate::{validate, Diagnostic};

pub type NodeId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one node")]
    Empty,
    #[error("node {id} is out of range for a graph of {n} nodes")]
    NodeOutOfRange { id: NodeId, n: usize },
    #[error("expected {expected} codes, got {found}")]
    CodeCount { expected: usize, found: usize },
    #[error("node codes are not distinct fixed-width bitstrings wide enough for {n} nodes")]
    InvalidCodes { n: usize },
    #[error("code {0} does not name a node")]
    UnknownCode(Bits),
    #[error("graph has a cycle through node {0}; use the general rank instead")]
    Cyclic(NodeId),
    #[error("too many nodes for {MAX_WIDTH}-bit codes")]
    TooLarge,
}

/// A rooted directed graph `⟨N, ≻, r⟩` on nodes `0..n`.
///
/// Successor lists are sorted and duplicate-free; self-loops are allowed.
/// Reachability from the root is not enforced here (see [`validate`]),
/// because some of the families studied are not rooted as given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    succ: Vec<Vec<NodeId>>,
    root: NodeId,
    codes: Option<Vec<Bits>>,
}

/// Resolved, validated code assignment of a graph.
#[derive(Clone, Debug)]
pub struct CodeTable {
    pub width: u32,
    pub codes: Vec<Bits>,
    node_of: HashMap<u64, NodeId>,
}

impl CodeTable {
    pub fn node_of(&self, code: u64) -> Option<NodeId> {
        self.node_of.get(&code).copied()
    }
}

impl Graph {
    pub fn new(n: usize, root: NodeId, edges: impl IntoIterator<Item = (NodeId, NodeId)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n as u64 > (1u64 << 32) - 1 {
            return Err(GraphError::TooLarge);
        }
        let check = |id: NodeId| {
            if (id as usize) < n {
                Ok(id)
            } else {
                Err(GraphError::NodeOutOfRange { id, n })
            }
        };
        check(root)?;
        let mut succ = vec![Vec::new(); n];
        for (a, b) in edges {
            check(a)?;
            check(b)?;
            succ[a as usize].push(b);
        }
        for s in &mut succ {
            s.sort_unstable();
            s.dedup();
        }
        Ok(Graph { succ, root, codes: None })
    }

    /// Attach explicit node codes.
    pub fn with_codes(mut self, codes: Vec<Bits>) -> Result<Self, GraphError> {
        if codes.len() != self.n() {
            return Err(GraphError::CodeCount { expected: self.n(), found: codes.len() });
        }
        self.codes = Some(codes);
        Ok(self)
    }

    pub fn without_codes(mut self) -> Self {
        self.codes = None;
        self
    }

    pub fn n(&self) -> usize {
        self.succ.len()
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn successors(&self, a: NodeId) -> &[NodeId] {
        &self.succ[a as usize]
    }

    pub fn has_edge(&self, a: NodeId, b: NodeId) -> bool {
        self.succ[a as usize].binary_search(&b).is_ok()
    }

    pub fn is_leaf(&self, a: NodeId) -> bool {
        self.succ[a as usize].is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    /// Edges in `(source, target)` lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(a, s)| s.iter().map(move |&b| (a as NodeId, b)))
    }

    pub fn predecessors(&self) -> Vec<Vec<NodeId>> {
        let mut pred = vec![Vec::new(); self.n()];
        for (a, b) in self.edges() {
            pred[b as usize].push(a);
        }
        pred
    }

    /// Width of default codes: `max(1, ⌈log2 n⌉)`.
    pub fn default_code_width(&self) -> u32 {
        width_for(self.n())
    }

    pub fn has_custom_codes(&self) -> bool {
        self.codes.is_some()
    }

    pub fn custom_codes(&self) -> Option<&[Bits]> {
        self.codes.as_deref()
    }

    /// The code of `a`: the explicit one if present, otherwise `a` in binary.
    pub fn code(&self, a: NodeId) -> Bits {
        match &self.codes {
            Some(c) => c[a as usize],
            None => Bits::new(a as u64, self.default_code_width()).expect("node id fits its default width"),
        }
    }

    /// Codes of all nodes, checked to be distinct, of one width, and wide
    /// enough to number every node.
    pub fn code_table(&self) -> Result<CodeTable, GraphError> {
        let codes: Vec<Bits> = (0..self.n() as NodeId).map(|a| self.code(a)).collect();
        let width = codes[0].width();
        let invalid = GraphError::InvalidCodes { n: self.n() };
        if width > MAX_WIDTH || width < self.default_code_width() || codes.iter().any(|c| c.width() != width) {
            return Err(invalid);
        }
        let mut node_of = HashMap::with_capacity(codes.len());
        for (a, c) in codes.iter().enumerate() {
            if node_of.insert(c.value(), a as NodeId).is_some() {
                return Err(invalid);
            }
        }
        Ok(CodeTable { width, codes, node_of })
    }

    /// Nodes reachable from `from` (including `from`), as a mask.
    pub fn reachable_mask(&self, from: NodeId) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([from]);
        seen[from as usize] = true;
        while let Some(a) = queue.pop_front() {
            for &b in self.successors(a) {
                if !seen[b as usize] {
                    seen[b as usize] = true;
                    queue.push_back(b);
                }
            }
        }
        seen
    }

    /// The subgraph induced by `nodes` (in the given order) together with
    /// the map from new ids to old ids. The root becomes new node 0.
    pub fn induced(&self, nodes: &[NodeId]) -> (Graph, Vec<NodeId>) {
        let mut new_id = vec![NodeId::MAX; self.n()];
        for (i, &a) in nodes.iter().enumerate() {
            new_id[a as usize] = i as NodeId;
        }
        let succ = nodes
            .iter()
            .map(|&a| {
                let mut s: Vec<NodeId> = self
                    .successors(a)
                    .iter()
                    .filter_map(|&b| (new_id[b as usize] != NodeId::MAX).then_some(new_id[b as usize]))
                    .collect();
                s.sort_unstable();
                s
            })
            .collect();
        let codes = self.codes.as_ref().map(|c| nodes.iter().map(|&a| c[a as usize]).collect());
        (Graph { succ, root: 0, codes }, nodes.to_vec())
    }

    /// Drops nodes unreachable from the root, keeping the relative order of
    /// the others. Returns the pruned graph and the kept original ids.
    pub fn prune_unreachable(&self) -> (Graph, Vec<NodeId>) {
        let mask = self.reachable_mask(self.root);
        let kept: Vec<NodeId> = (0..self.n() as NodeId).filter(|&a| mask[a as usize]).collect();
        let (mut g, map) = self.induced(&kept);
        g.root = kept.iter().position(|&a| a == self.root).expect("root is reachable from itself") as NodeId;
        (g, map)
    }

    pub fn is_acyclic(&self) -> bool {
        rank_acyclic(self).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_dedups_and_checks_range() {
        let g = Graph::new(3, 0, [(0, 1), (0, 1), (1, 2), (2, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.successors(0), &[1]);
        assert!(g.has_edge(2, 2));
        assert_eq!(Graph::new(2, 0, [(0, 5)]), Err(GraphError::NodeOutOfRange { id: 5, n: 2 }));
        assert_eq!(Graph::new(0, 0, []), Err(GraphError::Empty));
        assert!(Graph::new(2, 3, []).is_err());
    }

    #[test]
    fn default_codes() {
        let g = Graph::new(5, 0, []).unwrap();
        assert_eq!(g.default_code_width(), 3);
        assert_eq!(g.code(4).to_string(), "100");
        let one = Graph::new(1, 0, []).unwrap();
        assert_eq!(one.code(0).to_string(), "0");
        let t = g.code_table().unwrap();
        assert_eq!(t.node_of(3), Some(3));
    }

    #[test]
    fn code_table_rejects_duplicates() {
        let c: Bits = "01".parse().unwrap();
        let g = Graph::new(2, 0, []).unwrap().with_codes(vec![c, c]).unwrap();
        assert!(g.code_table().is_err());
        assert!(Graph::new(2, 0, []).unwrap().with_codes(vec![c]).is_err());
    }

    #[test]
    fn prune_keeps_order() {
        let g = Graph::new(4, 1, [(1, 3), (3, 1), (0, 1)]).unwrap();
        let (p, map) = g.prune_unreachable();
        assert_eq!(map, vec![1, 3]);
        assert_eq!(p.n(), 2);
        assert_eq!(p.root(), 0);
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 0)]);
    }
}

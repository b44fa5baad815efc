use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use super::{Graph, NodeId};
use crate::bits::{width_for, Bits};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    /// No path from the root reaches this node.
    Unreachable(NodeId),
    /// Two nodes carry the same code.
    DuplicateCode { code: Bits, first: NodeId, second: NodeId },
    /// A code's width differs from the width of node 0's code.
    CodeWidth { node: NodeId, width: u32, expected: u32 },
    /// The common code width cannot number every node.
    CodesTooNarrow { width: u32, needed: u32 },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::Unreachable(a) => write!(f, "node {a} is not reachable from the root"),
            Diagnostic::DuplicateCode { code, first, second } => {
                write!(f, "nodes {first} and {second} share code {code}")
            }
            Diagnostic::CodeWidth { node, width, expected } => {
                write!(f, "node {node} has a {width}-bit code, expected {expected} bits")
            }
            Diagnostic::CodesTooNarrow { width, needed } => {
                write!(f, "{width}-bit codes cannot number all nodes, need at least {needed}")
            }
        }
    }
}

/// Reachability and code diagnostics. An empty report means the graph is a
/// rooted graph with a usable code assignment.
pub fn validate(g: &Graph) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let reach = g.reachable_mask(g.root());
    out.extend(
        reach
            .iter()
            .enumerate()
            .filter(|(_, &r)| !r)
            .map(|(a, _)| Diagnostic::Unreachable(a as NodeId)),
    );
    if let Some(codes) = g.custom_codes() {
        let expected = codes[0].width();
        let needed = width_for(g.n());
        if expected < needed {
            out.push(Diagnostic::CodesTooNarrow { width: expected, needed });
        }
        let mut seen: HashMap<Bits, NodeId> = HashMap::new();
        for (a, &c) in codes.iter().enumerate() {
            let a = a as NodeId;
            if c.width() != expected {
                out.push(Diagnostic::CodeWidth { node: a, width: c.width(), expected });
            }
            if let Some(&first) = seen.get(&c) {
                out.push(Diagnostic::DuplicateCode { code: c, first, second: a });
            } else {
                seen.insert(c, a);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valid_graph_has_empty_report() {
        let g = Graph::new(3, 0, [(0, 1), (1, 2)]).unwrap();
        assert!(validate(&g).is_empty());
    }

    #[test]
    fn unreachable_node_is_named() {
        let g = Graph::new(3, 0, [(0, 1)]).unwrap();
        assert_eq!(validate(&g), vec![Diagnostic::Unreachable(2)]);
    }

    #[test]
    fn duplicate_and_width_diagnostics() {
        let c = |s: &str| s.parse::<Bits>().unwrap();
        let g = Graph::new(3, 0, [(0, 1), (0, 2)]).unwrap().with_codes(vec![c("00"), c("01"), c("00")]).unwrap();
        assert_eq!(
            validate(&g),
            vec![Diagnostic::DuplicateCode { code: c("00"), first: 0, second: 2 }]
        );
        let g = Graph::new(3, 0, [(0, 1), (0, 2)]).unwrap().with_codes(vec![c("0"), c("01"), c("1")]).unwrap();
        let d = validate(&g);
        assert!(d.contains(&Diagnostic::CodesTooNarrow { width: 1, needed: 2 }));
        assert!(d.contains(&Diagnostic::CodeWidth { node: 1, width: 2, expected: 1 }));
    }
}

//! Text graph formats: the edge list and Aldebaran `.aut`.
//!
//! Edge list (UTF-8, one item per line, `#` starts a comment):
//!
//! ```text
//! nodes <n> root <r>
//! code <id> <bitstring>      # optional, one per node
//! <from> <to>
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rankbisim::{Bits, Graph, NodeId};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    Graph(String),
    #[error("node {node} is not reachable from the root")]
    Unreachable { node: NodeId },
}

fn at(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line { line, message: message.into() }
}

/// How to treat nodes the root does not reach.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reachability {
    /// Reject the input.
    Strict,
    /// Drop them, with a warning.
    Prune,
}

/// A parsed graph plus the original id of every kept node.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub graph: Graph,
    pub original_ids: Vec<NodeId>,
}

fn finish(graph: Graph, mode: Reachability) -> Result<Parsed, ParseError> {
    let reach = graph.reachable_mask(graph.root());
    match reach.iter().position(|&r| !r) {
        None => {
            let original_ids = (0..graph.n() as NodeId).collect();
            Ok(Parsed { graph, original_ids })
        }
        Some(node) if mode == Reachability::Strict => Err(ParseError::Unreachable { node: node as NodeId }),
        Some(_) => {
            let dropped = reach.iter().filter(|&&r| !r).count();
            log::warn!("dropping {dropped} node(s) not reachable from the root");
            let (graph, original_ids) = graph.prune_unreachable();
            Ok(Parsed { graph, original_ids })
        }
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn number<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T, ParseError> {
    tok.parse().map_err(|_| at(line, format!("expected {what}, found {tok:?}")))
}

pub fn parse_edge_list(text: &str, mode: Reachability) -> Result<Parsed, ParseError> {
    let mut header: Option<(usize, NodeId)> = None;
    let mut codes: Vec<Option<Bits>> = Vec::new();
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let body = strip_comment(raw);
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        let Some((n, _)) = header else {
            match toks.as_slice() {
                ["nodes", n, "root", r] => {
                    let n: usize = number(n, line, "a node count")?;
                    let r: NodeId = number(r, line, "a root id")?;
                    if n == 0 {
                        return Err(at(line, "a graph needs at least one node"));
                    }
                    if r as usize >= n {
                        return Err(at(line, format!("root {r} is out of range for {n} nodes")));
                    }
                    header = Some((n, r));
                    codes = vec![None; n];
                    continue;
                }
                _ => return Err(at(line, "expected header `nodes <n> root <r>`")),
            }
        };
        let check = |id: NodeId| {
            if (id as usize) < n {
                Ok(id)
            } else {
                Err(at(line, format!("node {id} is out of range for {n} nodes")))
            }
        };
        match toks.as_slice() {
            ["code", id, bits] => {
                let id = check(number(id, line, "a node id")?)?;
                let bits: Bits = bits.parse().map_err(|e| at(line, format!("{e}")))?;
                if codes[id as usize].replace(bits).is_some() {
                    return Err(at(line, format!("node {id} has two codes")));
                }
            }
            [a, b] => {
                let a = check(number(a, line, "a node id")?)?;
                let b = check(number(b, line, "a node id")?)?;
                edges.push((a, b));
            }
            _ => return Err(at(line, format!("cannot parse {body:?}"))),
        }
    }
    let Some((n, root)) = header else {
        return Err(at(last_line.max(1), "missing header `nodes <n> root <r>`"));
    };
    let mut graph = Graph::new(n, root, edges).map_err(|e| ParseError::Graph(e.to_string()))?;
    let given = codes.iter().filter(|c| c.is_some()).count();
    if given > 0 {
        if given != n {
            return Err(ParseError::Graph(format!("codes given for {given} of {n} nodes")));
        }
        let codes = codes.into_iter().map(|c| c.expect("all present")).collect();
        graph = graph.with_codes(codes).map_err(|e| ParseError::Graph(e.to_string()))?;
        graph.code_table().map_err(|e| ParseError::Graph(e.to_string()))?;
    }
    finish(graph, mode)
}

/// Serializes `g`; parsing the result gives `g` back.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("nodes {} root {}\n", g.n(), g.root());
    if let Some(codes) = g.custom_codes() {
        for (a, c) in codes.iter().enumerate() {
            writeln!(out, "code {a} {c}").expect("write to string");
        }
    }
    for (a, b) in g.edges() {
        writeln!(out, "{a} {b}").expect("write to string");
    }
    out
}

/// Parses `(from, label, to)`: the first and last comma-separated fields
/// are states, whatever lies between is the label.
fn aut_triple(body: &str, line: usize) -> Result<(u64, &str, u64), ParseError> {
    let inner = body
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| at(line, "expected `(from, \"label\", to)`"))?;
    let (from, rest) = inner.split_once(',').ok_or_else(|| at(line, "missing label"))?;
    let (label, to) = rest.rsplit_once(',').ok_or_else(|| at(line, "missing target state"))?;
    Ok((number(from.trim(), line, "a state")?, label.trim(), number(to.trim(), line, "a state")?))
}

/// Aldebaran `.aut`. Labels are dropped; repeated transitions become one edge.
pub fn parse_aut(text: &str, mode: Reachability) -> Result<Parsed, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or_else(|| at(1, "missing `des` header"))?;
    let fields = header
        .strip_prefix("des")
        .map(str::trim)
        .and_then(|s| s.strip_prefix('('))
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| at(hline, "expected `des (first, transitions, states)`"))?;
    let nums: Vec<&str> = fields.split(',').map(str::trim).collect();
    let [first, ntrans, nstates] = nums.as_slice() else {
        return Err(at(hline, "header needs three fields"));
    };
    let first: u64 = number(first, hline, "the initial state")?;
    let ntrans: usize = number(ntrans, hline, "a transition count")?;
    let nstates: u64 = number(nstates, hline, "a state count")?;
    if nstates == 0 || first >= nstates {
        return Err(at(hline, format!("initial state {first} is out of range for {nstates} states")));
    }
    let mut edges = Vec::new();
    let mut labels = BTreeSet::new();
    let mut seen = 0usize;
    for (line, body) in lines {
        let (from, label, to) = aut_triple(body, line)?;
        for s in [from, to] {
            if s >= nstates {
                return Err(at(line, format!("state {s} is out of range for {nstates} states")));
            }
        }
        labels.insert(label.to_owned());
        edges.push((from as NodeId, to as NodeId));
        seen += 1;
    }
    if seen != ntrans {
        return Err(at(hline, format!("header declares {ntrans} transitions, found {seen}")));
    }
    if !labels.is_empty() {
        log::warn!("ignoring {} distinct transition label(s)", labels.len());
    }
    let n = usize::try_from(nstates).map_err(|_| at(hline, "too many states"))?;
    let graph = Graph::new(n, first as NodeId, edges).map_err(|e| ParseError::Graph(e.to_string()))?;
    finish(graph, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rankbisim::generators::{fixture, Fixture};

    #[test]
    fn single_node_and_two_cycle() {
        let p = parse_edge_list("nodes 1 root 0\n", Reachability::Strict).unwrap();
        assert_eq!(p.graph.n(), 1);
        let p = parse_edge_list("nodes 2 root 0\n0 1\n1 0\n", Reachability::Strict).unwrap();
        assert_eq!(p.graph.edges().collect::<Vec<_>>(), [(0, 1), (1, 0)]);
    }

    #[test]
    fn example8_with_codes() {
        let text = "# Example 8\nnodes 5 root 3\ncode 0 000\ncode 1 001\ncode 2 010\ncode 3 011\ncode 4 100\n\
                    1 0\n1 2\n2 1\n3 1\n3 4\n4 3\n";
        let p = parse_edge_list(text, Reachability::Strict).unwrap();
        assert_eq!(p.graph.without_codes(), fixture(Fixture::Example8));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_edge_list("nodes 2 root 0\n0 7\n", Reachability::Strict).unwrap_err();
        assert!(e.to_string().starts_with("line 2"), "{e}");
        let e = parse_edge_list("0 1\n", Reachability::Strict).unwrap_err();
        assert!(e.to_string().starts_with("line 1"), "{e}");
        let e = parse_edge_list("nodes 2 root 0\n0 x\n", Reachability::Strict).unwrap_err();
        assert!(e.to_string().contains("line 2"));
    }

    #[test]
    fn unreachable_nodes_by_mode() {
        let text = "nodes 3 root 0\n0 1\n2 2\n";
        assert!(matches!(parse_edge_list(text, Reachability::Strict), Err(ParseError::Unreachable { node: 2 })));
        let p = parse_edge_list(text, Reachability::Prune).unwrap();
        assert_eq!(p.graph.n(), 2);
        assert_eq!(p.original_ids, [0, 1]);
    }

    #[test]
    fn edge_list_round_trip() {
        for g in [fixture(Fixture::Example21), fixture(Fixture::Example14)] {
            let p = parse_edge_list(&write_edge_list(&g), Reachability::Strict).unwrap();
            assert_eq!(p.graph, g);
        }
    }

    #[test]
    fn aut_examples() {
        let p = parse_aut("des (0,1,2)\n(0, \"a\", 1)\n", Reachability::Strict).unwrap();
        assert_eq!(p.graph.edges().collect::<Vec<_>>(), [(0, 1)]);
        let p = parse_aut("des (0,2,2)\n(0,\"a\",1)\n(1,\"b\",0)\n", Reachability::Strict).unwrap();
        assert_eq!(p.graph.edge_count(), 2);
        let p = parse_aut("des (0,3,2)\n(0,\"a\",1)\n(0,\"a\",1)\n(0,\"x, y\",1)\n", Reachability::Strict).unwrap();
        assert_eq!(p.graph.edge_count(), 1);
    }

    #[test]
    fn aut_arity_mismatch() {
        assert!(parse_aut("des (0,2,2)\n(0,\"a\",1)\n", Reachability::Strict).is_err());
        assert!(parse_aut("des (0,1,2)\n(0,\"a\",5)\n", Reachability::Strict).is_err());
        assert!(parse_aut("(0,\"a\",1)\n", Reachability::Strict).is_err());
    }
}

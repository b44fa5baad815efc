//! Graph families, reconstructed worked examples, and seeded random graphs.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use hashbrown::HashSet;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, NodeId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("{m} edges do not fit in a graph of {n} nodes (at most {max})")]
    Infeasible { n: usize, m: usize, max: usize },
    #[error("invalid parameters: {0}")]
    BadParams(&'static str),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(alloc::string::String),
}

/// `n` disjoint self-loops. Node 0 is the nominal root, which does not
/// reach the other loops when `n > 1`; see [`gen_self_loops_rooted`].
///
/// # Panics
///
/// If `n == 0`.
pub fn gen_self_loops(n: usize) -> Graph {
    assert!(n >= 1, "need at least one self-loop");
    Graph::new(n, 0, (0..n as NodeId).map(|a| (a, a))).expect("ids in range")
}

/// `n` self-loops plus a fresh root (node `n`) with an edge to each of them.
pub fn gen_self_loops_rooted(n: usize) -> Graph {
    assert!(n >= 1, "need at least one self-loop");
    let root = n as NodeId;
    let edges = (0..root).flat_map(|a| [(a, a), (root, a)]);
    Graph::new(n + 1, root, edges).expect("ids in range")
}

/// Directed cycle `0 → 1 → … → n-1 → 0`; a single self-loop for `n = 1`.
pub fn gen_cycle(n: usize) -> Graph {
    assert!(n >= 1, "need at least one node");
    let n32 = n as NodeId;
    Graph::new(n, 0, (0..n32).map(|a| (a, (a + 1) % n32))).expect("ids in range")
}

/// Path `n-1 → n-2 → … → 0`, rooted at `n-1`.
pub fn gen_chain(n: usize) -> Graph {
    assert!(n >= 1, "need at least one node");
    Graph::new(n, n as NodeId - 1, (1..n as NodeId).map(|a| (a, a - 1))).expect("ids in range")
}

/// `2^q` cliques of `2^(u-q)` nodes joined in a ring.
///
/// Clique `j` holds nodes `j·s .. (j+1)·s` with `s = 2^(u-q)`, so the first
/// `q` code bits name the clique. Each clique is complete including
/// self-loops. Its last member links to the first member of clique `j+1`,
/// and its first member links to the last member of clique `j-1`, so every
/// clique has three kinds of nodes.
pub fn gen_clique_cycle(u: u32, q: u32) -> Result<Graph, GenError> {
    if q < 1 || q >= u {
        return Err(GenError::BadParams("clique-cycle needs 1 <= q < u"));
    }
    if u > 24 {
        return Err(GenError::BadParams("clique-cycle needs u <= 24"));
    }
    let cliques = 1u32 << q;
    let size = 1u32 << (u - q);
    let mut edges = Vec::new();
    for j in 0..cliques {
        let base = j * size;
        for a in 0..size {
            for b in 0..size {
                edges.push((base + a, base + b));
            }
        }
        let next = ((j + 1) % cliques) * size;
        let prev = ((j + cliques - 1) % cliques) * size;
        edges.push((base + size - 1, next));
        edges.push((base, prev + size - 1));
    }
    Ok(Graph::new((cliques * size) as usize, 0, edges).expect("ids in range"))
}

/// Complete downward tree, numbered breadth-first from the root 0.
pub fn gen_nary_tree(arity: usize, depth: usize) -> Result<Graph, GenError> {
    if arity == 0 {
        return Err(GenError::BadParams("tree arity must be at least 1"));
    }
    let mut edges = Vec::new();
    let mut level: Vec<NodeId> = alloc::vec![0];
    let mut next: NodeId = 1;
    for _ in 0..depth {
        let mut below = Vec::with_capacity(level.len() * arity);
        for &p in &level {
            for _ in 0..arity {
                edges.push((p, next));
                below.push(next);
                next = next.checked_add(1).ok_or(GenError::BadParams("tree too large"))?;
            }
        }
        level = below;
    }
    Ok(Graph::new(next as usize, 0, edges).expect("ids in range"))
}

/// The reconstructed graphs of the worked examples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    /// Four nodes `00..11` with edges `01→00, 11→01, 10→00, 10→01`. No node
    /// reaches all others; the root is `10`.
    Example5,
    /// Five nodes `000..100`, edges `1→0, 1→2, 2→1, 3→1, 3→4, 4→3`, root 3.
    /// Blocks `C = {000}`, `B = {001, 010}`, `A = {011, 100}`.
    Example8,
    /// `a1..a8` as nodes 0..7: `a4→a1, a5→a2, a6→{a3,a4}, a7→a5, a8→{a6,a7}`,
    /// root `a8`.
    Example14,
    /// Nodes `a b c d L M` = 0..5: two 2-cycles `a↔b`, `c↔d` with `b→c`;
    /// `a, c → L` (a leaf) and `b, d → M` with `M → L`. Root `a`. The four
    /// cycle nodes share rank 2, and `a, c` (resp. `b, d`) agree on their
    /// lower-rank successors.
    Example21,
}

impl Fixture {
    pub const ALL: [Fixture; 4] = [Fixture::Example5, Fixture::Example8, Fixture::Example14, Fixture::Example21];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Example5 => "example5",
            Fixture::Example8 => "example8",
            Fixture::Example14 => "example14",
            Fixture::Example21 => "example21",
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fixture {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| GenError::UnknownFixture(s.into()))
    }
}

pub fn fixture(which: Fixture) -> Graph {
    let (n, root, edges): (usize, NodeId, &[(NodeId, NodeId)]) = match which {
        Fixture::Example5 => (4, 2, &[(1, 0), (3, 1), (2, 0), (2, 1)]),
        Fixture::Example8 => (5, 3, &[(1, 0), (1, 2), (2, 1), (3, 1), (3, 4), (4, 3)]),
        Fixture::Example14 => (8, 7, &[(3, 0), (4, 1), (5, 2), (5, 3), (6, 4), (7, 5), (7, 6)]),
        Fixture::Example21 => (
            6,
            0,
            &[(0, 1), (1, 0), (2, 3), (3, 2), (1, 2), (0, 4), (2, 4), (1, 5), (3, 5), (5, 4)],
        ),
    };
    Graph::new(n, root, edges.iter().copied()).expect("fixture ids in range")
}

/// Seeded random graph with `m` distinct edges (self-loops allowed unless
/// `acyclic`). Nodes the sampled edges leave unreachable from the root
/// (node 0) get an extra edge from the root, so the edge count can exceed
/// `m`. With `acyclic`, edges follow a random topological order that
/// starts at the root.
pub fn gen_random(n: usize, m: usize, seed: u64, acyclic: bool) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError::BadParams("need at least one node"));
    }
    let max = if acyclic { n * (n - 1) / 2 } else { n * n };
    if m > max {
        return Err(GenError::Infeasible { n, m, max });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // position in the topological order; the root comes first
    let mut order: Vec<NodeId> = (1..n as NodeId).collect();
    order.shuffle(&mut rng);
    order.insert(0, 0);
    let mut pos = alloc::vec![0usize; n];
    for (i, &a) in order.iter().enumerate() {
        pos[a as usize] = i;
    }
    let orient = |a: NodeId, b: NodeId| if pos[a as usize] < pos[b as usize] { (a, b) } else { (b, a) };

    let mut edges: Vec<(NodeId, NodeId)> = Vec::with_capacity(m);
    if m * 2 <= max {
        let mut seen = HashSet::with_capacity(m);
        while edges.len() < m {
            let a = rng.random_range(0..n as NodeId);
            let b = rng.random_range(0..n as NodeId);
            let e = if acyclic {
                if a == b {
                    continue;
                }
                orient(a, b)
            } else {
                (a, b)
            };
            if seen.insert(e) {
                edges.push(e);
            }
        }
    } else {
        let mut all: Vec<(NodeId, NodeId)> = Vec::with_capacity(max);
        for a in 0..n as NodeId {
            for b in 0..n as NodeId {
                if !acyclic || pos[a as usize] < pos[b as usize] {
                    all.push((a, b));
                }
            }
        }
        all.shuffle(&mut rng);
        all.truncate(m);
        edges = all;
    }

    let g = Graph::new(n, 0, edges.iter().copied()).expect("ids in range");
    let reach = g.reachable_mask(0);
    edges.extend((1..n as NodeId).filter(|&a| !reach[a as usize]).map(|a| (0, a)));
    Ok(Graph::new(n, 0, edges).expect("ids in range"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{rank_acyclic, rank_general, validate};

    #[test]
    fn small_families() {
        let g = gen_self_loops(1);
        assert_eq!((g.n(), g.edge_count()), (1, 1));
        assert_eq!(gen_cycle(1).edges().collect::<Vec<_>>(), vec![(0, 0)]);
        assert_eq!(gen_chain(1).edge_count(), 0);
        assert_eq!(rank_acyclic(&gen_chain(3)).unwrap().rank, vec![0, 1, 2]);
        let t = gen_nary_tree(2, 0).unwrap();
        assert_eq!(t.n(), 1);
        let t = gen_nary_tree(2, 2).unwrap();
        assert_eq!(t.n(), 7);
        assert_eq!(rank_acyclic(&t).unwrap().rho, 2);
    }

    #[test]
    fn clique_cycle_shape() {
        let g = gen_clique_cycle(5, 3).unwrap();
        assert_eq!(g.n(), 32);
        assert_eq!(g.edge_count(), 8 * 16 + 16);
        assert!(gen_clique_cycle(3, 3).is_err());
        assert!(gen_clique_cycle(3, 0).is_err());
    }

    #[test]
    fn all_rooted_generators_validate() {
        let graphs = [
            gen_self_loops_rooted(4),
            gen_self_loops(1),
            gen_cycle(8),
            gen_chain(6),
            gen_clique_cycle(5, 3).unwrap(),
            gen_clique_cycle(4, 1).unwrap(),
            gen_nary_tree(3, 3).unwrap(),
            fixture(Fixture::Example8),
            fixture(Fixture::Example14),
            fixture(Fixture::Example21),
            gen_random(40, 90, 7, false).unwrap(),
            gen_random(40, 90, 7, true).unwrap(),
        ];
        for g in &graphs {
            assert!(validate(g).is_empty(), "{g:?}");
        }
        // the bare self-loops and the printed Example 5 graph are not rooted
        assert!(!validate(&gen_self_loops(4)).is_empty());
        assert!(!validate(&fixture(Fixture::Example5)).is_empty());
    }

    #[test]
    fn random_is_reproducible() {
        assert_eq!(gen_random(1, 0, 3, false).unwrap().n(), 1);
        assert_eq!(gen_random(30, 60, 11, false).unwrap(), gen_random(30, 60, 11, false).unwrap());
        let d = gen_random(30, 300, 5, true).unwrap();
        assert!(rank_acyclic(&d).is_ok());
        assert!(matches!(gen_random(3, 4, 0, true), Err(GenError::Infeasible { .. })));
        assert!(gen_random(3, 9, 0, false).unwrap().edge_count() == 9);
        let _ = rank_general(&gen_random(50, 200, 1, false).unwrap());
    }

    #[test]
    fn fixture_names_roundtrip() {
        for f in Fixture::ALL {
            assert_eq!(f.name().parse::<Fixture>().unwrap(), f);
        }
        assert!("example9".parse::<Fixture>().is_err());
    }
}

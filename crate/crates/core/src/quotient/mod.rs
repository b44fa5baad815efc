//! Bisimulation quotient through the rank-based Ackermann encoding.
//!
//! Nodes are processed rank by rank, lowest first. Every node receives an
//! [`EncodingPair`] `⟨rank, 𝔸⟩`, and two nodes get equal pairs exactly when
//! they are bisimilar. At rank `i` the destination list `D_i` holds the pairs
//! of all successors of rank-`i` nodes, the successor function of `a` is the
//! set of positions of its successors in `D_i`, and `𝔸(a)` is the index of
//! that function in the list `Cod_i` of distinct successor functions.
//!
//! On cyclic graphs a rank can contain edges among its own nodes. Those
//! ranks are settled by a [`RankSystem`] whose solution is the coarsest
//! refinement of the grouping by lower-rank successors that is stable under
//! the rank's internal edges.

mod system;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashMap;

use crate::bits::{width_for, Bits, MAX_WIDTH};
use crate::error::EncodeError;
use crate::graph::{rank_acyclic, rank_general, Graph, GraphError, NodeId, RankMap};
use crate::layered::{build_layered, LayeredRepr, Partition};
use crate::obdd::{BddRef, Kernel};
use crate::vars;

pub use system::{solve_rank_system, verify_rank_system, RankSolution, RankSystem};

/// Canonical name `⟨rank, 𝔸⟩` of a bisimulation class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EncodingPair {
    pub rank: i32,
    pub code: u32,
}

impl EncodingPair {
    pub fn new(rank: i32, code: u32) -> Self {
        EncodingPair { rank, code }
    }
}

impl fmt::Display for EncodingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.rank, self.code)
    }
}

/// The encoding of one rank.
#[derive(Clone, Debug)]
pub struct RankLayer {
    pub rank: i32,
    /// `B_i`, ascending.
    pub members: Vec<NodeId>,
    /// `D_i`, ascending.
    pub dests: Vec<EncodingPair>,
    /// Position variables of `D_i`.
    pub width: u32,
    /// `≻_i(a)`, aligned with `members`.
    pub succ: Vec<BddRef>,
    /// `Cod_i`; `𝔸(a)` is the index of `≻_i(a)` here.
    pub cod: Vec<BddRef>,
    /// The rank's equation system and its solution, for the general path.
    pub system: Option<(RankSystem, RankSolution)>,
}

impl RankLayer {
    pub fn succ_of(&self, a: NodeId) -> Option<BddRef> {
        self.members.binary_search(&a).ok().map(|i| self.succ[i])
    }

    /// `d_i(p)`, the 0-based position of `p` in `D_i`.
    pub fn position(&self, p: EncodingPair) -> Option<usize> {
        self.dests.binary_search(&p).ok()
    }
}

#[derive(Clone, Debug)]
pub struct QuotientResult {
    pub ranks: RankMap,
    /// Pair of every input node.
    pub pairs: Vec<EncodingPair>,
    pub layers: Vec<RankLayer>,
    /// One node per class, ordered by pair, carrying pair codes.
    pub quotient: Graph,
    /// Quotient node of every input node.
    pub class_of: Vec<NodeId>,
    /// Pair of every quotient node.
    pub classes: Vec<EncodingPair>,
}

impl QuotientResult {
    pub fn pair_of(&self, a: NodeId) -> Result<EncodingPair, EncodeError> {
        self.pairs.get(a as usize).copied().ok_or(EncodeError::UnknownNode(a))
    }

    pub fn layer(&self, rank: i32) -> Option<&RankLayer> {
        self.layers.iter().find(|l| l.rank == rank)
    }

    /// `(rank, number of classes)`, ascending by rank.
    pub fn classes_per_rank(&self) -> Vec<(i32, usize)> {
        self.layers.iter().map(|l| (l.rank, l.cod.len())).collect()
    }

    pub fn quotient_edges(&self) -> Vec<(EncodingPair, EncodingPair)> {
        self.quotient
            .edges()
            .map(|(a, b)| (self.classes[a as usize], self.classes[b as usize]))
            .collect()
    }

    /// Systems of every rank, lowest rank first.
    pub fn systems(&self) -> impl Iterator<Item = &(RankSystem, RankSolution)> + '_ {
        self.layers.iter().filter_map(|l| l.system.as_ref())
    }
}

fn first_appearance(fs: &[BddRef]) -> (Vec<BddRef>, Vec<u32>) {
    let mut cod = Vec::new();
    let mut index: HashMap<BddRef, u32> = HashMap::new();
    let ids = fs
        .iter()
        .map(|&f| {
            *index.entry(f).or_insert_with(|| {
                cod.push(f);
                cod.len() as u32 - 1
            })
        })
        .collect();
    (cod, ids)
}

fn positions(dests: &[EncodingPair], width: u32, targets: impl Iterator<Item = EncodingPair>) -> Vec<Bits> {
    targets
        .map(|p| {
            let i = dests.binary_search(&p).expect("target is a destination");
            Bits::new(i as u64, width).expect("position fits its width")
        })
        .collect()
}

/// Ackermann encoding of an acyclic graph, rank by rank.
pub fn encode_acyclic(k: &mut Kernel, g: &Graph) -> Result<QuotientResult, EncodeError> {
    let ranks = rank_acyclic(g)?;
    let mut pairs = vec![EncodingPair::new(0, 0); g.n()];
    let mut layers = Vec::new();
    for (i, members) in ranks.layers() {
        let mut dests: Vec<EncodingPair> =
            members.iter().flat_map(|&a| g.successors(a).iter().map(|&b| pairs[b as usize])).collect();
        dests.sort_unstable();
        dests.dedup();
        let width = width_for(dests.len());
        let zs = vars::zs(width);
        let mut succ = Vec::with_capacity(members.len());
        for &a in &members {
            let pos = positions(&dests, width, g.successors(a).iter().map(|&b| pairs[b as usize]));
            succ.push(k.from_minterms(&zs, &pos)?);
        }
        let (cod, codes) = first_appearance(&succ);
        for (&a, &c) in members.iter().zip(&codes) {
            pairs[a as usize] = EncodingPair::new(i, c);
        }
        layers.push(RankLayer { rank: i, members, dests, width, succ, cod, system: None });
    }
    finish(g, ranks, pairs, layers)
}

/// Ackermann encoding of an arbitrary graph. Ranks start at `-1`.
pub fn encode_cyclic(k: &mut Kernel, g: &Graph) -> Result<QuotientResult, EncodeError> {
    let ranks = rank_general(g);
    let mut pairs = vec![EncodingPair::new(0, 0); g.n()];
    let mut index_in_layer = vec![u32::MAX; g.n()];
    let mut layers = Vec::new();
    for (i, members) in ranks.layers() {
        for (j, &a) in members.iter().enumerate() {
            index_in_layer[a as usize] = j as u32;
        }
        let mut lower: Vec<Vec<EncodingPair>> = Vec::with_capacity(members.len());
        let mut internal: Vec<Vec<u32>> = Vec::with_capacity(members.len());
        for &a in &members {
            let (mut lo, mut inner) = (Vec::new(), Vec::new());
            for &b in g.successors(a) {
                if ranks.get(b) < i {
                    lo.push(pairs[b as usize]);
                } else {
                    debug_assert_eq!(ranks.get(b), i);
                    inner.push(index_in_layer[b as usize]);
                }
            }
            lower.push(lo);
            internal.push(inner);
        }
        let sys = RankSystem::build(k, i, members.clone(), &lower, internal)?;
        let sol = solve_rank_system(k, &sys)?;

        let base = sys.lower_dests.len() as u32;
        let has_internal = sys.internal.iter().any(|v| !v.is_empty());
        let mut dests = sys.lower_dests.clone();
        if has_internal {
            let mut reached: Vec<EncodingPair> = sys
                .internal
                .iter()
                .flatten()
                .map(|&b| EncodingPair::new(i, sol.position[b as usize] - base))
                .collect();
            reached.sort_unstable();
            reached.dedup();
            dests.extend(reached);
        }
        let width = width_for(dests.len());
        let zs = vars::zs(width);
        let mut succ = Vec::with_capacity(members.len());
        for (j, lo) in lower.iter().enumerate() {
            let targets = lo
                .iter()
                .copied()
                .chain(sys.internal[j].iter().map(|&b| EncodingPair::new(i, sol.position[b as usize] - base)));
            let pos = positions(&dests, width, targets);
            succ.push(k.from_minterms(&zs, &pos)?);
        }
        let classes = sol.class_count(&sys);
        let mut cod = vec![BddRef::FALSE; classes];
        for (j, &a) in members.iter().enumerate() {
            let c = sol.position[j] - base;
            pairs[a as usize] = EncodingPair::new(i, c);
            cod[c as usize] = succ[j];
        }
        debug_assert_eq!(first_appearance(&cod).0.len(), cod.len());
        layers.push(RankLayer { rank: i, members, dests, width, succ, cod, system: Some((sys, sol)) });
    }
    finish(g, ranks, pairs, layers)
}

/// Builds the quotient graph. Its nodes are numbered by ascending pair and
/// coded as `rank + 1` followed by `𝔸`, each in a fixed-width field, so the
/// code order is the pair order.
fn finish(g: &Graph, ranks: RankMap, pairs: Vec<EncodingPair>, layers: Vec<RankLayer>) -> Result<QuotientResult, EncodeError> {
    let mut classes: Vec<EncodingPair> = pairs.clone();
    classes.sort_unstable();
    classes.dedup();
    let class_of: Vec<NodeId> =
        pairs.iter().map(|p| classes.binary_search(p).expect("pair is a class") as NodeId).collect();
    let edges = g.edges().map(|(a, b)| (class_of[a as usize], class_of[b as usize]));
    let quotient = Graph::new(classes.len(), class_of[g.root() as usize], edges)?;
    let codes = pair_codes(&classes, ranks.rho)?;
    let quotient = quotient.with_codes(codes)?;
    Ok(QuotientResult { ranks, pairs, layers, quotient, class_of, classes })
}

fn pair_codes(classes: &[EncodingPair], rho: i32) -> Result<Vec<Bits>, EncodeError> {
    let rank_width = width_for((rho + 2) as usize);
    let max_code = classes.iter().map(|p| p.code).max().unwrap_or(0);
    let code_width = width_for(max_code as usize + 1);
    let width = rank_width + code_width;
    if width > MAX_WIDTH {
        return Err(GraphError::TooLarge.into());
    }
    Ok(classes
        .iter()
        .map(|p| {
            let value = (((p.rank + 1) as u64) << code_width) | p.code as u64;
            Bits::new(value, width).expect("pair fits its code width")
        })
        .collect())
}

/// Layered form of the quotient graph with one block per rank. Destination
/// lists are keyed by pair codes.
pub fn quotient_layered(k: &mut Kernel, q: &QuotientResult) -> Result<LayeredRepr, EncodeError> {
    let labels: Vec<i64> = q.classes.iter().map(|p| p.rank as i64).collect();
    build_layered(k, &q.quotient, &Partition::from_labels(&labels))
}

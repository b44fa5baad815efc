//! Explicit-state reference implementations, kept independent of the OBDD
//! code so they can check it.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::graph::{Graph, GraphError, NodeId};

/// A node partition with classes numbered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodePartition {
    pub class_of: Vec<u32>,
    pub classes: Vec<Vec<NodeId>>,
}

impl NodePartition {
    /// Renumbers arbitrary labels canonically.
    pub fn from_labels<L: Eq + core::hash::Hash>(labels: &[L]) -> Self {
        let mut ids: HashMap<&L, u32> = HashMap::new();
        let mut classes: Vec<Vec<NodeId>> = Vec::new();
        let class_of = labels
            .iter()
            .enumerate()
            .map(|(a, l)| {
                let id = *ids.entry(l).or_insert_with(|| {
                    classes.push(Vec::new());
                    classes.len() as u32 - 1
                });
                classes[id as usize].push(a as NodeId);
                id
            })
            .collect();
        NodePartition { class_of, classes }
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_labels(&vec![0u8; n])
    }

    pub fn singletons(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn same_class(&self, a: NodeId, b: NodeId) -> bool {
        self.class_of[a as usize] == self.class_of[b as usize]
    }
}

/// Maximum bisimulation as a greatest fixpoint on node pairs: start from
/// all pairs and drop `(a, b)` while some successor of one side has no
/// related successor on the other.
pub fn naive_bisimulation(g: &Graph) -> NodePartition {
    let n = g.n();
    let mut rel = vec![true; n * n];
    let related = |rel: &[bool], a: NodeId, b: NodeId| rel[a as usize * n + b as usize];
    loop {
        let mut changed = false;
        for a in 0..n as NodeId {
            for b in 0..n as NodeId {
                if !related(&rel, a, b) {
                    continue;
                }
                let forth = g.successors(a).iter().all(|&x| g.successors(b).iter().any(|&y| related(&rel, x, y)));
                let back = g.successors(b).iter().all(|&y| g.successors(a).iter().any(|&x| related(&rel, x, y)));
                if !(forth && back) {
                    rel[a as usize * n + b as usize] = false;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let labels: Vec<NodeId> =
        (0..n).map(|a| (0..n as NodeId).find(|&b| rel[a * n + b as usize]).expect("reflexive")).collect();
    NodePartition::from_labels(&labels)
}

/// Coarsest refinement of `initial` that is stable under the edge relation,
/// by Paige and Tarjan's algorithm with compound blocks and per-edge counts.
pub fn paige_tarjan(g: &Graph, initial: &NodePartition) -> NodePartition {
    let n = g.n();
    let edges: Vec<(NodeId, NodeId)> = g.edges().collect();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, &(_, y)) in edges.iter().enumerate() {
        preds[y as usize].push(e);
    }

    let mut st = Refiner {
        block_of: initial.class_of.clone(),
        blocks: initial.classes.clone(),
        compound_of: vec![0; initial.len()],
        compounds: vec![(0..initial.len() as u32).collect()],
    };
    // Stability with respect to the whole node set.
    let has_succ: Vec<bool> = (0..n as NodeId).map(|a| !g.is_leaf(a)).collect();
    st.split(&has_succ, &(0..n as NodeId).collect::<Vec<_>>());

    // count[edge_count[e]] = |succ(x) ∩ S| for edge e = (x, y), y ∈ S.
    let mut counts: Vec<u32> = Vec::new();
    let mut edge_count = vec![0usize; edges.len()];
    let mut first_edge: Vec<Option<usize>> = vec![None; n];
    for (e, &(x, _)) in edges.iter().enumerate() {
        match first_edge[x as usize] {
            Some(f) => {
                edge_count[e] = edge_count[f];
                counts[edge_count[e]] += 1;
            }
            None => {
                first_edge[x as usize] = Some(e);
                edge_count[e] = counts.len();
                counts.push(1);
            }
        }
    }

    let mut in_pre = vec![false; n];
    let mut count_b = vec![0u32; n];
    while let Some(s) = st.compounds.iter().position(|c| c.len() >= 2) {
        let (b0, b1) = (st.compounds[s][0], st.compounds[s][1]);
        let b = if st.blocks[b0 as usize].len() <= st.blocks[b1 as usize].len() { b0 } else { b1 };
        st.compounds[s].retain(|&x| x != b);
        st.compound_of[b as usize] = st.compounds.len() as u32;
        st.compounds.push(vec![b]);

        let splitter = st.blocks[b as usize].clone();
        let mut pre_b: Vec<NodeId> = Vec::new();
        for &y in &splitter {
            for &e in &preds[y as usize] {
                let x = edges[e].0;
                if !in_pre[x as usize] {
                    in_pre[x as usize] = true;
                    pre_b.push(x);
                }
                count_b[x as usize] += 1;
            }
        }
        st.split(&in_pre, &pre_b);

        // Nodes of pre(B) with no successor in S − B.
        let mut only_b = vec![false; n];
        let mut some_edge: HashMap<NodeId, usize> = HashMap::new();
        for &y in &splitter {
            for &e in &preds[y as usize] {
                some_edge.entry(edges[e].0).or_insert(e);
            }
        }
        for &x in &pre_b {
            only_b[x as usize] = counts[edge_count[some_edge[&x]]] == count_b[x as usize];
        }
        st.split(&only_b, &pre_b);

        let mut new_count: HashMap<NodeId, usize> = HashMap::new();
        for &y in &splitter {
            for &e in &preds[y as usize] {
                let x = edges[e].0;
                counts[edge_count[e]] -= 1;
                let c = *new_count.entry(x).or_insert_with(|| {
                    counts.push(count_b[x as usize]);
                    counts.len() - 1
                });
                edge_count[e] = c;
            }
        }
        for &x in &pre_b {
            in_pre[x as usize] = false;
            count_b[x as usize] = 0;
        }
    }
    NodePartition::from_labels(&st.block_of)
}

struct Refiner {
    block_of: Vec<u32>,
    blocks: Vec<Vec<NodeId>>,
    compound_of: Vec<u32>,
    compounds: Vec<Vec<u32>>,
}

impl Refiner {
    /// Splits every block meeting `touched` into its marked and unmarked
    /// parts; the marked part becomes a new block in the same compound.
    fn split(&mut self, marked: &[bool], touched: &[NodeId]) {
        let mut seen: Vec<u32> = touched.iter().map(|&x| self.block_of[x as usize]).collect();
        seen.sort_unstable();
        seen.dedup();
        for d in seen {
            let (inside, outside): (Vec<NodeId>, Vec<NodeId>) =
                self.blocks[d as usize].iter().partition(|&&x| marked[x as usize]);
            if inside.is_empty() || outside.is_empty() {
                continue;
            }
            let id = self.blocks.len() as u32;
            for &x in &inside {
                self.block_of[x as usize] = id;
            }
            self.blocks[d as usize] = outside;
            self.blocks.push(inside);
            let c = self.compound_of[d as usize];
            self.compound_of.push(c);
            self.compounds[c as usize].push(id);
        }
    }
}

/// Exact Ackermann number `A(a) = Σ_{b ∈ succ(a)} 2^{A(b)}` in hereditary
/// base-2 form. Equal forms are equal numbers. `value` holds the number
/// itself when it has at most [`ACK_VALUE_BITS`] bits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AckNumber {
    pub form: u32,
    pub value: Option<BigUint>,
}

pub const ACK_VALUE_BITS: u64 = 1 << 16;

/// Ackermann numbers of every node of an acyclic graph. Repeated equal
/// successor values count once.
pub fn ackermann_numbers(g: &Graph) -> Result<Vec<AckNumber>, GraphError> {
    let order = crate::graph::rank_acyclic(g)?.layers();
    let mut forms: HashMap<Vec<u32>, u32> = HashMap::new();
    let mut out: Vec<Option<AckNumber>> = vec![None; g.n()];
    for (_, layer) in order {
        for a in layer {
            let succ: Vec<&AckNumber> =
                g.successors(a).iter().map(|&b| out[b as usize].as_ref().expect("successor has lower rank")).collect();
            let mut exponents: Vec<u32> = succ.iter().map(|s| s.form).collect();
            exponents.sort_unstable();
            exponents.dedup();
            let fresh = forms.len() as u32;
            let form = *forms.entry(exponents).or_insert(fresh);
            let mut distinct: Vec<&AckNumber> = Vec::new();
            for s in succ {
                if !distinct.iter().any(|d| d.form == s.form) {
                    distinct.push(s);
                }
            }
            let value = distinct.iter().try_fold(BigUint::zero(), |acc, s| {
                let e = s.value.as_ref()?.to_u64().filter(|&e| e < ACK_VALUE_BITS)?;
                Some(acc + (BigUint::one() << e))
            });
            out[a as usize] = Some(AckNumber { form, value });
        }
    }
    Ok(out.into_iter().map(|x| x.expect("every node has a rank")).collect())
}

pub fn ackermann_number(g: &Graph, a: NodeId) -> Result<AckNumber, GraphError> {
    let n = g.n();
    let mut all = ackermann_numbers(g)?;
    if a as usize >= n {
        return Err(GraphError::NodeOutOfRange { id: a, n });
    }
    Ok(all.swap_remove(a as usize))
}

pub fn brute_image(g: &Graph, set: &[NodeId]) -> Vec<NodeId> {
    let mut out: Vec<NodeId> = set.iter().flat_map(|&a| g.successors(a).iter().copied()).collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn brute_preimage(g: &Graph, set: &[NodeId]) -> Vec<NodeId> {
    (0..g.n() as NodeId).filter(|&a| g.successors(a).iter().any(|b| set.contains(b))).collect()
}

//! Partition-layered representation.
//!
//! For each block `B_j` of a node partition we keep the sorted list `D_j` of
//! nodes reached from `B_j`, the map `𝒟_j = {⟨code(b), d_j(b)⟩}` as an OBDD
//! over `(ȳ, z̄)`, and for every `a ∈ B_j` the OBDD of `≻_j(a)`: the set of
//! positions `d_j(b)` with `a ≻ b`, over `z̄`. All OBDDs live in one kernel,
//! so equal successor functions in different blocks are one handle.
//!
//! Positions are 0-based, and a block with `h` destinations uses
//! `max(1, ⌈log2 h⌉)` position variables.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;
use thiserror::Error;

use crate::bits::{width_for, Bits};
use crate::error::EncodeError;
use crate::graph::{CodeTable, Graph, NodeId, RankMap};
use crate::obdd::{Assignment, BddRef, Kernel};
use crate::standard::{decode, StandardRepr};
use crate::vars;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("node {0} appears in more than one block")]
    Overlap(NodeId),
    #[error("node {0} is in no block")]
    Uncovered(NodeId),
    #[error("node {id} is out of range for {n} nodes")]
    OutOfRange { id: NodeId, n: usize },
    #[error("blocks must be non-empty")]
    EmptyBlock,
    #[error("prefix of {q} bits is longer than the {width}-bit codes")]
    PrefixTooLong { q: u32, width: u32 },
}

/// Disjoint cover of the nodes by non-empty blocks, in a fixed block order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<NodeId>>,
    block_of: Vec<u32>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<NodeId>>) -> Result<Self, PartitionError> {
        let mut block_of = vec![u32::MAX; n];
        let mut blocks = blocks;
        for (j, b) in blocks.iter_mut().enumerate() {
            if b.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            b.sort_unstable();
            for &a in b.iter() {
                let slot = block_of.get_mut(a as usize).ok_or(PartitionError::OutOfRange { id: a, n })?;
                if *slot != u32::MAX {
                    return Err(PartitionError::Overlap(a));
                }
                *slot = j as u32;
            }
        }
        if let Some(a) = block_of.iter().position(|&j| j == u32::MAX) {
            return Err(PartitionError::Uncovered(a as NodeId));
        }
        Ok(Partition { blocks, block_of })
    }

    /// Blocks from per-node labels; blocks are ordered by label.
    pub fn from_labels(labels: &[i64]) -> Self {
        let mut distinct: Vec<i64> = labels.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let mut blocks = vec![Vec::new(); distinct.len()];
        let mut block_of = Vec::with_capacity(labels.len());
        for (a, l) in labels.iter().enumerate() {
            let j = distinct.binary_search(l).expect("label is present");
            blocks[j].push(a as NodeId);
            block_of.push(j as u32);
        }
        Partition { blocks, block_of }
    }

    /// The single block `{N}`.
    pub fn trivial(n: usize) -> Self {
        Self::from_labels(&vec![0; n])
    }

    /// Blocks by the first `q` bits of the node codes.
    pub fn by_prefix(g: &Graph, q: u32) -> Result<Self, EncodeError> {
        let table = g.code_table()?;
        if q > table.width {
            return Err(EncodeError::Partition(PartitionError::PrefixTooLong { q, width: table.width }));
        }
        let labels: Vec<i64> = table
            .codes
            .iter()
            .map(|c| if q == 0 { 0 } else { (c.value() >> (table.width - q)) as i64 })
            .collect();
        Ok(Self::from_labels(&labels))
    }

    /// Blocks `B_i` of equal rank, ascending by rank.
    pub fn by_rank(ranks: &RankMap) -> Self {
        let labels: Vec<i64> = ranks.rank.iter().map(|&r| r as i64).collect();
        Self::from_labels(&labels)
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn n(&self) -> usize {
        self.block_of.len()
    }

    pub fn blocks(&self) -> &[Vec<NodeId>] {
        &self.blocks
    }

    pub fn block(&self, j: usize) -> &[NodeId] {
        &self.blocks[j]
    }

    pub fn block_of(&self, a: NodeId) -> usize {
        self.block_of[a as usize] as usize
    }
}

/// Encoding of one block.
#[derive(Clone, Debug)]
pub struct BlockRepr {
    /// `D_j`, ascending by destination code.
    pub dests: Vec<NodeId>,
    /// Number of position variables `z1..z_width`.
    pub width: u32,
    /// `χ𝒟_j(ȳ, z̄)`.
    pub dmap: BddRef,
    /// `(a, ≻_j(a))` for each member, ascending by node id.
    pub succ: Vec<(NodeId, BddRef)>,
    /// `χ_{B_j}(x̄)`.
    pub chi: BddRef,
    dest_codes: Vec<u64>,
}

impl BlockRepr {
    /// `d_j(b)`, if `b ∈ D_j`.
    pub fn position(&self, code: Bits) -> Option<Bits> {
        self.dest_codes
            .binary_search(&code.value())
            .ok()
            .map(|p| Bits::new(p as u64, self.width).expect("position fits the block width"))
    }

    pub fn h(&self) -> usize {
        self.dests.len()
    }
}

#[derive(Clone, Debug)]
pub struct LayeredRepr {
    pub partition: Partition,
    pub blocks: Vec<BlockRepr>,
    pub root: NodeId,
    table: CodeTable,
}

/// Node counts of a layered representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SizeReport {
    /// Distinct non-empty successor functions across all blocks.
    pub distinct_succ: usize,
    /// Internal nodes of all successor OBDDs, shared nodes counted once.
    pub succ_nodes: usize,
    /// Internal nodes of all `𝒟_j` OBDDs, shared nodes counted once.
    pub dmap_nodes: usize,
    /// Internal nodes of everything above together.
    pub total_nodes: usize,
}

/// Builds the layered representation of `g` over partition `p`.
pub fn build_layered(k: &mut Kernel, g: &Graph, p: &Partition) -> Result<LayeredRepr, EncodeError> {
    if p.n() != g.n() {
        return Err(EncodeError::PartitionSize { expected: g.n(), found: p.n() });
    }
    let table = g.code_table()?;
    let xs = vars::xs(table.width);
    let ys = vars::ys(table.width);
    let mut blocks = Vec::with_capacity(p.len());
    for members in p.blocks() {
        let mut dests: Vec<NodeId> = members.iter().flat_map(|&a| g.successors(a).iter().copied()).collect();
        dests.sort_unstable_by_key(|&b| table.codes[b as usize].value());
        dests.dedup();
        let dest_codes: Vec<u64> = dests.iter().map(|&b| table.codes[b as usize].value()).collect();
        let width = width_for(dests.len());
        let zs = vars::zs(width);
        let pos = |b: NodeId| {
            let p = dest_codes.binary_search(&table.codes[b as usize].value()).expect("successor is a destination");
            Bits::new(p as u64, width).expect("position fits the block width")
        };

        let mut succ = Vec::with_capacity(members.len());
        for &a in members {
            let positions: Vec<Bits> = g.successors(a).iter().map(|&b| pos(b)).collect();
            succ.push((a, k.from_minterms(&zs, &positions)?));
        }
        let mut entries = Vec::with_capacity(dests.len());
        for (i, &code) in dest_codes.iter().enumerate() {
            let position = Bits::new(i as u64, width).expect("position fits the block width");
            entries.push((code, k.from_minterms(&zs, &[position])?));
        }
        let dmap = k.from_trie(&ys, entries)?;
        let member_codes: Vec<Bits> = members.iter().map(|&a| table.codes[a as usize]).collect();
        let chi = k.from_minterms(&xs, &member_codes)?;
        blocks.push(BlockRepr { dests, width, dmap, succ, chi, dest_codes });
    }
    Ok(LayeredRepr { partition: p.clone(), blocks, root: g.root(), table })
}

impl LayeredRepr {
    pub fn n(&self) -> usize {
        self.table.codes.len()
    }

    pub fn code_table(&self) -> &CodeTable {
        &self.table
    }

    pub fn code(&self, a: NodeId) -> Bits {
        self.table.codes[a as usize]
    }

    /// `≻_j(a)` for the block `j` holding `a`.
    pub fn succ_of(&self, a: NodeId) -> BddRef {
        let block = &self.blocks[self.partition.block_of(a)];
        let i = block.succ.binary_search_by_key(&a, |&(m, _)| m).expect("member of its block");
        block.succ[i].1
    }

    /// Edge test recovered from the partition, the `D_j` lists and the
    /// successor functions alone.
    pub fn has_edge(&self, k: &Kernel, a: NodeId, b: NodeId) -> Result<bool, EncodeError> {
        let block = &self.blocks[self.partition.block_of(a)];
        let Some(position) = block.position(self.code(b)) else {
            return Ok(false);
        };
        let asg = Assignment::from_bits(&vars::zs(block.width), position)?;
        Ok(k.eval(self.succ_of(a), &asg)?)
    }

    fn check_nodes(&self, set: &[NodeId]) -> Result<(), EncodeError> {
        match set.iter().find(|&&a| a as usize >= self.n()) {
            Some(&a) => Err(EncodeError::UnknownNode(a)),
            None => Ok(()),
        }
    }

    fn chi_over(&self, k: &mut Kernel, vars: &[crate::obdd::VarId], set: &[NodeId]) -> Result<BddRef, EncodeError> {
        self.check_nodes(set)?;
        let codes: Vec<Bits> = set.iter().map(|&a| self.code(a)).collect();
        Ok(k.from_minterms(vars, &codes)?)
    }
}

/// `≻(S)`: per block, OR the successor functions of `S ∩ B_j`, conjoin with
/// `χ𝒟_j` and quantify the positions away; OR over blocks gives `χ≻(S)(ȳ)`.
pub fn image(k: &mut Kernel, r: &LayeredRepr, set: &[NodeId]) -> Result<Vec<NodeId>, EncodeError> {
    r.check_nodes(set)?;
    let mut per_block: Vec<Vec<NodeId>> = vec![Vec::new(); r.blocks.len()];
    for &a in set {
        per_block[r.partition.block_of(a)].push(a);
    }
    let mut result = BddRef::FALSE;
    for (j, members) in per_block.iter().enumerate() {
        if members.is_empty() {
            continue;
        }
        let mut f = BddRef::FALSE;
        for &a in members {
            f = k.or(f, r.succ_of(a))?;
        }
        if f.is_false() {
            continue;
        }
        let block = &r.blocks[j];
        let conj = k.and(f, block.dmap)?;
        let targets = k.exists(conj, &vars::zs(block.width))?;
        result = k.or(result, targets)?;
    }
    decode(k, result, &vars::ys(r.table.width), &r.table)
}

/// `≪(S)`: per block, `g_B(z̄) = ∃ȳ (χ_S(ȳ) ∧ χ𝒟_B(ȳ, z̄))`; a member `a`
/// is a predecessor iff `g_B ∧ ≻_B(a)` is satisfiable.
pub fn preimage(k: &mut Kernel, r: &LayeredRepr, set: &[NodeId]) -> Result<Vec<NodeId>, EncodeError> {
    let ys = vars::ys(r.table.width);
    let chi = r.chi_over(k, &ys, set)?;
    let mut out = Vec::new();
    if chi.is_false() {
        return Ok(out);
    }
    for block in &r.blocks {
        let conj = k.and(chi, block.dmap)?;
        let g_b = k.exists(conj, &ys)?;
        if g_b.is_false() {
            continue;
        }
        for &(a, f) in &block.succ {
            if !k.and(g_b, f)?.is_false() {
                out.push(a);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// `S ∩ B_j` computed as `χ_S(x̄) ∧ χ_{B_j}(x̄)`.
pub fn intersect_block(k: &mut Kernel, r: &LayeredRepr, set: &[NodeId], j: usize) -> Result<Vec<NodeId>, EncodeError> {
    let block = r.blocks.get(j).ok_or(EncodeError::UnknownBlock(j))?;
    let xs = vars::xs(r.table.width);
    let chi = r.chi_over(k, &xs, set)?;
    let both = k.and(chi, block.chi)?;
    decode(k, both, &xs, &r.table)
}

/// The monolithic relation `⋁_a χ_{code(a)}(x̄) ∧ ∃z̄ (≻_j(a)(z̄) ∧ χ𝒟_j(ȳ, z̄))`.
pub fn to_standard(k: &mut Kernel, r: &LayeredRepr) -> Result<StandardRepr, EncodeError> {
    let mut entries = Vec::new();
    for block in &r.blocks {
        let zs = vars::zs(block.width);
        let mut rows: HashMap<BddRef, BddRef> = HashMap::new();
        for &(a, f) in &block.succ {
            if f.is_false() {
                continue;
            }
            let row = match rows.get(&f) {
                Some(&row) => row,
                None => {
                    let conj = k.and(f, block.dmap)?;
                    let row = k.exists(conj, &zs)?;
                    rows.insert(f, row);
                    row
                }
            };
            entries.push((r.code(a).value(), row));
        }
    }
    let rel = k.from_trie(&vars::xs(r.table.width), entries)?;
    Ok(StandardRepr::from_parts(r.table.width, rel, r.root, r.table.clone()))
}

/// Decodes the relation and rebuilds the layered form over `p`.
pub fn from_standard(k: &mut Kernel, s: &StandardRepr, p: &Partition) -> Result<LayeredRepr, EncodeError> {
    let g = s.to_graph(k, true)?;
    build_layered(k, &g, p)
}

pub fn size_report(k: &Kernel, r: &LayeredRepr) -> Result<SizeReport, EncodeError> {
    let mut succ: Vec<BddRef> = r
        .blocks
        .iter()
        .flat_map(|b| b.succ.iter().map(|&(_, f)| f))
        .filter(|f| !f.is_false())
        .collect();
    succ.sort_unstable();
    succ.dedup();
    let dmaps: Vec<BddRef> = r.blocks.iter().map(|b| b.dmap).collect();
    let mut all = succ.clone();
    all.extend_from_slice(&dmaps);
    Ok(SizeReport {
        distinct_succ: succ.len(),
        succ_nodes: k.node_count(&succ)?,
        dmap_nodes: k.node_count(&dmaps)?,
        total_nodes: k.node_count(&all)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{fixture, gen_clique_cycle, Fixture};
    use crate::standard::encode_standard;

    fn bits(s: &str) -> Bits {
        s.parse().unwrap()
    }

    /// Blocks C = {000}, B = {001, 010}, A = {011, 100}, in that order.
    fn example8() -> (Graph, Partition) {
        let g = fixture(Fixture::Example8);
        let p = Partition::new(5, vec![vec![0], vec![1, 2], vec![3, 4]]).unwrap();
        (g, p)
    }

    #[test]
    fn partition_validation() {
        assert_eq!(Partition::new(2, vec![vec![0], vec![0, 1]]), Err(PartitionError::Overlap(0)));
        assert_eq!(Partition::new(3, vec![vec![0], vec![1]]), Err(PartitionError::Uncovered(2)));
        assert_eq!(Partition::new(2, vec![vec![], vec![0, 1]]), Err(PartitionError::EmptyBlock));
        let g = gen_clique_cycle(5, 3).unwrap();
        let p = Partition::by_prefix(&g, 3).unwrap();
        assert_eq!(p.len(), 8);
        assert_eq!(p.block(2), &[8, 9, 10, 11]);
        assert!(Partition::by_prefix(&g, 6).is_err());
    }

    #[test]
    fn example8_lists_and_sharing() {
        let (g, p) = example8();
        let mut k = Kernel::new();
        let r = build_layered(&mut k, &g, &p).unwrap();
        let codes = |b: &BlockRepr| b.dests.iter().map(|&d| g.code(d).to_string()).collect::<Vec<_>>();
        assert!(r.blocks[0].dests.is_empty());
        assert_eq!(codes(&r.blocks[1]), ["000", "001", "010"]);
        assert_eq!(codes(&r.blocks[2]), ["001", "011", "100"]);
        assert_eq!(r.succ_of(0), BddRef::FALSE);
        assert_eq!(r.succ_of(1), r.succ_of(3));
        assert_eq!(r.succ_of(2), r.succ_of(4));
        assert_ne!(r.succ_of(1), r.succ_of(2));
        let nz2 = k.nvar(vars::z(1));
        assert_eq!(r.succ_of(1), nz2);
        let z = vars::zs(2);
        assert_eq!(r.succ_of(2), k.from_minterms(&z, &[bits("01")]).unwrap());
        let rep = size_report(&k, &r).unwrap();
        assert_eq!(rep.succ_nodes, 3);
        assert_eq!(rep.distinct_succ, 2);
    }

    #[test]
    fn example8_image_and_preimage() {
        let (g, p) = example8();
        let mut k = Kernel::new();
        let r = build_layered(&mut k, &g, &p).unwrap();
        assert!(image(&mut k, &r, &[]).unwrap().is_empty());
        assert_eq!(image(&mut k, &r, &[1]).unwrap(), vec![0, 2]);
        assert_eq!(image(&mut k, &r, &[3, 4]).unwrap(), vec![1, 3, 4]);
        assert!(preimage(&mut k, &r, &[]).unwrap().is_empty());
        assert_eq!(preimage(&mut k, &r, &[0]).unwrap(), vec![1]);
        assert_eq!(preimage(&mut k, &r, &[3]).unwrap(), vec![4]);
        assert_eq!(intersect_block(&mut k, &r, &[1, 3], 2).unwrap(), vec![3]);
        assert_eq!(intersect_block(&mut k, &r, &[0, 1, 2, 3, 4], 1).unwrap(), vec![1, 2]);
        assert!(intersect_block(&mut k, &r, &[0], 2).unwrap().is_empty());
        assert_eq!(image(&mut k, &r, &[9]), Err(EncodeError::UnknownNode(9)));
    }

    #[test]
    fn remark7_recovers_edges() {
        let (g, p) = example8();
        let mut k = Kernel::new();
        let r = build_layered(&mut k, &g, &p).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(r.has_edge(&k, a, b).unwrap(), g.has_edge(a, b));
            }
        }
    }

    #[test]
    fn conversion_roundtrip() {
        let (g, p) = example8();
        let mut k = Kernel::new();
        let r = build_layered(&mut k, &g, &p).unwrap();
        let s = to_standard(&mut k, &r).unwrap();
        assert_eq!(s.rel, encode_standard(&mut k, &g).unwrap().rel);
        let back = from_standard(&mut k, &s, &p).unwrap();
        for a in 0..5 {
            assert_eq!(back.succ_of(a), r.succ_of(a));
        }
        let trivial = build_layered(&mut k, &g, &Partition::trivial(5)).unwrap();
        assert_eq!(to_standard(&mut k, &trivial).unwrap().rel, s.rel);
    }

    #[test]
    fn example5_trivial_partition_matches_formula() {
        let g = fixture(Fixture::Example5);
        let mut k = Kernel::new();
        let r = build_layered(&mut k, &g, &Partition::trivial(4)).unwrap();
        let s = to_standard(&mut k, &r).unwrap();
        let order = [vars::x(0), vars::x(1), vars::y(0), vars::y(1)];
        let formula = k
            .from_minterms(&order, &[bits("0100"), bits("1101"), bits("1000"), bits("1001")])
            .unwrap();
        assert_eq!(s.rel, formula);
    }

    #[test]
    fn single_node_sizes_are_zero() {
        let g = Graph::new(1, 0, []).unwrap();
        let mut k = Kernel::new();
        let r = build_layered(&mut k, &g, &Partition::trivial(1)).unwrap();
        assert_eq!(size_report(&k, &r).unwrap(), SizeReport::default());
        assert_eq!(to_standard(&mut k, &r).unwrap().rel, BddRef::FALSE);
    }

    #[test]
    fn clique_cycle_has_three_kinds_per_clique() {
        let g = gen_clique_cycle(5, 3).unwrap();
        let p = Partition::by_prefix(&g, 3).unwrap();
        let mut k = Kernel::new();
        let r = build_layered(&mut k, &g, &p).unwrap();
        for b in &r.blocks {
            let mut fs: Vec<BddRef> = b.succ.iter().map(|&(_, f)| f).collect();
            fs.sort_unstable();
            fs.dedup();
            assert_eq!(fs.len(), 3);
        }
        assert!(size_report(&k, &r).unwrap().total_nodes <= 256);
    }
}

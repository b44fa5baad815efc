//! Per-rank equation system for ranks whose nodes point at each other.
//!
//! Unknowns are a function `W_a(z̄)` and a position `d_a` per rank member.
//! The equations are
//!
//! - `W_a = (⋁_{a≻b, b in rank} χ_{d_b}) ∨ ≻′(a)`, and
//! - `W_a = W_a′` if and only if `d_a = d_a′`,
//!
//! where `≻′(a)` is the set of positions, in the lower-rank list `D′`, of the
//! successors of `a` below the rank. Positions `d_a` range over
//! `|D′| .. |D′| + |B|`, and fewer distinct positions is better.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{first_appearance, positions, EncodingPair};
use crate::bits::{width_for, Bits};
use crate::error::EncodeError;
use crate::graph::NodeId;
use crate::obdd::{BddRef, Kernel};
use crate::vars;

#[derive(Clone, Debug)]
pub struct RankSystem {
    pub rank: i32,
    /// `B_i`, ascending.
    pub members: Vec<NodeId>,
    /// `D′_i`: pairs of successors below the rank, ascending.
    pub lower_dests: Vec<EncodingPair>,
    /// Position variables of every `W_a`.
    pub width: u32,
    /// `≻′_i(a)`, aligned with `members`.
    pub lower_succ: Vec<BddRef>,
    /// `Cod′_i`, by first appearance.
    pub lower_cod: Vec<BddRef>,
    /// `𝔸′(a)`: index of `≻′_i(a)` in `Cod′_i`.
    pub approx: Vec<u32>,
    /// Successors inside the rank, as indices into `members`.
    pub internal: Vec<Vec<u32>>,
}

/// An assignment to the unknowns, aligned with `members`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankSolution {
    pub position: Vec<u32>,
    pub w: Vec<BddRef>,
}

impl RankSolution {
    /// Number of distinct positions.
    pub fn class_count(&self, sys: &RankSystem) -> usize {
        let base = sys.lower_dests.len() as u32;
        self.position.iter().map(|&d| d - base + 1).max().unwrap_or(0) as usize
    }

    /// Members grouped by position, lowest position first.
    pub fn classes(&self, sys: &RankSystem) -> Vec<Vec<NodeId>> {
        let base = sys.lower_dests.len() as u32;
        let mut out = vec![Vec::new(); self.class_count(sys)];
        for (&a, &d) in sys.members.iter().zip(&self.position) {
            out[(d - base) as usize].push(a);
        }
        out
    }
}

impl RankSystem {
    /// `lower[j]` are the pairs of member `j`'s successors below the rank;
    /// `internal[j]` its successors inside the rank.
    pub fn build(
        k: &mut Kernel,
        rank: i32,
        members: Vec<NodeId>,
        lower: &[Vec<EncodingPair>],
        internal: Vec<Vec<u32>>,
    ) -> Result<Self, EncodeError> {
        let mut lower_dests: Vec<EncodingPair> = lower.iter().flatten().copied().collect();
        lower_dests.sort_unstable();
        lower_dests.dedup();
        let width = width_for(lower_dests.len() + members.len());
        let zs = vars::zs(width);
        let mut lower_succ = Vec::with_capacity(members.len());
        for lo in lower {
            let pos = positions(&lower_dests, width, lo.iter().copied());
            lower_succ.push(k.from_minterms(&zs, &pos)?);
        }
        let (lower_cod, approx) = first_appearance(&lower_succ);
        Ok(RankSystem { rank, members, lower_dests, width, lower_succ, lower_cod, approx, internal })
    }

    fn position_bits(&self, d: u32) -> Bits {
        Bits::new(d as u64, self.width).expect("position fits the system width")
    }

    /// Right-hand side of the first equation for member `j`.
    fn rhs(&self, k: &mut Kernel, position: &[u32], j: usize) -> Result<BddRef, EncodeError> {
        let inner: Vec<Bits> = self.internal[j].iter().map(|&b| self.position_bits(position[b as usize])).collect();
        let f = k.from_minterms(&vars::zs(self.width), &inner)?;
        Ok(k.or(f, self.lower_succ[j])?)
    }
}

/// Coarsest refinement of the `𝔸′` grouping that is stable under the
/// rank's internal edges. Classes are numbered by smallest member.
pub fn solve_rank_system(k: &mut Kernel, sys: &RankSystem) -> Result<RankSolution, EncodeError> {
    let n = sys.members.len();
    let mut class = sys.approx.clone();
    let mut count = sys.lower_cod.len();
    let mut signature: Vec<u32> = Vec::new();
    loop {
        let mut ids: HashMap<Vec<u32>, u32> = HashMap::with_capacity(count);
        let mut next = Vec::with_capacity(n);
        for j in 0..n {
            signature.clear();
            signature.push(class[j]);
            let start = signature.len();
            signature.extend(sys.internal[j].iter().map(|&b| class[b as usize]));
            signature[start..].sort_unstable();
            let mut len = start;
            for i in start..signature.len() {
                if i == start || signature[i] != signature[len - 1] {
                    signature[len] = signature[i];
                    len += 1;
                }
            }
            signature.truncate(len);
            let fresh = ids.len() as u32;
            let id = *ids.entry_ref(signature.as_slice()).or_insert(fresh);
            next.push(id);
        }
        let refined = ids.len();
        class = next;
        if refined == count {
            break;
        }
        count = refined;
    }
    let base = sys.lower_dests.len() as u32;
    let position: Vec<u32> = class.iter().map(|&c| base + c).collect();
    let mut w = Vec::with_capacity(n);
    for j in 0..n {
        w.push(sys.rhs(k, &position, j)?);
    }
    Ok(RankSolution { position, w })
}

/// Checks both equations for every member and the position range.
pub fn verify_rank_system(k: &mut Kernel, sys: &RankSystem, sol: &RankSolution) -> Result<bool, EncodeError> {
    let n = sys.members.len();
    if sol.position.len() != n || sol.w.len() != n {
        return Ok(false);
    }
    let base = sys.lower_dests.len() as u32;
    if sol.position.iter().any(|&d| d < base || d >= base + n as u32) {
        return Ok(false);
    }
    for j in 0..n {
        if sys.rhs(k, &sol.position, j)? != sol.w[j] {
            return Ok(false);
        }
    }
    let mut by_w: HashMap<BddRef, u32> = HashMap::new();
    let mut by_d: HashMap<u32, BddRef> = HashMap::new();
    for (&f, &d) in sol.w.iter().zip(&sol.position) {
        if *by_w.entry(f).or_insert(d) != d || *by_d.entry(d).or_insert(f) != f {
            return Ok(false);
        }
    }
    Ok(true)
}

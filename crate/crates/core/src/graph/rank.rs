use alloc::vec;
use alloc::vec::Vec;

use super::scc::{component_well_founded, scc};
use super::{Graph, GraphError, NodeId};

/// Rank of every node, `-1` for non-well-founded leaf components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankMap {
    pub rank: Vec<i32>,
    /// Maximum rank.
    pub rho: i32,
}

impl RankMap {
    fn from_ranks(rank: Vec<i32>) -> Self {
        let rho = rank.iter().copied().max().unwrap_or(0);
        RankMap { rank, rho }
    }

    pub fn get(&self, a: NodeId) -> i32 {
        self.rank[a as usize]
    }

    pub fn min_rank(&self) -> i32 {
        self.rank.iter().copied().min().unwrap_or(0)
    }

    /// `(i, B_i)` for every non-empty rank layer, ascending by rank; each
    /// layer lists its nodes ascending.
    pub fn layers(&self) -> Vec<(i32, Vec<NodeId>)> {
        let lo = self.min_rank();
        let mut buckets: Vec<Vec<NodeId>> = vec![Vec::new(); (self.rho - lo + 1) as usize];
        for (a, &r) in self.rank.iter().enumerate() {
            buckets[(r - lo) as usize].push(a as NodeId);
        }
        buckets
            .into_iter()
            .enumerate()
            .filter(|(_, b)| !b.is_empty())
            .map(|(i, b)| (i as i32 + lo, b))
            .collect()
    }
}

/// Height in an acyclic graph: leaves are 0, otherwise one more than the
/// highest successor.
pub fn rank_acyclic(g: &Graph) -> Result<RankMap, GraphError> {
    const WHITE: u8 = 0;
    const GREY: u8 = 1;
    const BLACK: u8 = 2;
    let n = g.n();
    let mut color = vec![WHITE; n];
    let mut rank = vec![0i32; n];
    let mut calls: Vec<(NodeId, usize)> = Vec::new();
    for start in 0..n as NodeId {
        if color[start as usize] != WHITE {
            continue;
        }
        color[start as usize] = GREY;
        calls.push((start, 0));
        while let Some(top) = calls.last_mut() {
            let (v, pos) = *top;
            let succ = g.successors(v);
            if pos < succ.len() {
                top.1 += 1;
                let w = succ[pos];
                match color[w as usize] {
                    WHITE => {
                        color[w as usize] = GREY;
                        calls.push((w, 0));
                    }
                    GREY => return Err(GraphError::Cyclic(w)),
                    _ => {}
                }
                continue;
            }
            calls.pop();
            color[v as usize] = BLACK;
            rank[v as usize] = succ.iter().map(|&b| rank[b as usize] + 1).max().unwrap_or(0);
        }
    }
    Ok(RankMap::from_ranks(rank))
}

/// Rank through the SCC condensation: leaves of `G` get 0, other nodes of
/// leaf components get -1, and the rest take the maximum over successor
/// components of `rank + 1` (well-founded successors) or `rank`
/// (non-well-founded ones). Agrees with [`rank_acyclic`] on acyclic graphs.
pub fn rank_general(g: &Graph) -> RankMap {
    let s = scc(g);
    let wf = component_well_founded(&s);
    let mut comp_rank = vec![0i32; s.len()];
    for c in 0..s.len() {
        let members = &s.components[c];
        comp_rank[c] = if members.len() == 1 && g.is_leaf(members[0]) {
            0
        } else if s.is_leaf(c as u32) {
            -1
        } else {
            s.comp_succ[c]
                .iter()
                .map(|&d| comp_rank[d as usize] + i32::from(wf[d as usize]))
                .max()
                .expect("a non-leaf component has a successor component")
        };
    }
    RankMap::from_ranks(s.comp_of.iter().map(|&c| comp_rank[c as usize]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{fixture, gen_chain, gen_cycle, gen_self_loops, Fixture};

    #[test]
    fn single_node_rank_zero() {
        let g = Graph::new(1, 0, []).unwrap();
        assert_eq!(rank_acyclic(&g).unwrap().rank, vec![0]);
        assert_eq!(rank_general(&g).rank, vec![0]);
    }

    #[test]
    fn chain_ranks_are_positions() {
        let g = gen_chain(5);
        let r = rank_acyclic(&g).unwrap();
        assert_eq!(r.rank, vec![0, 1, 2, 3, 4]);
        assert_eq!(r.rho, 4);
        assert_eq!(rank_general(&g), r);
    }

    #[test]
    fn example14_ranks() {
        let g = fixture(Fixture::Example14);
        let r = rank_acyclic(&g).unwrap();
        assert_eq!(r.rank, vec![0, 0, 0, 1, 1, 2, 2, 3]);
        assert_eq!(r.layers()[1], (1, vec![3, 4]));
    }

    #[test]
    fn cyclic_input_rejected() {
        let g = gen_cycle(3);
        assert!(matches!(rank_acyclic(&g), Err(GraphError::Cyclic(_))));
        let loops = gen_self_loops(1);
        assert!(rank_acyclic(&loops).is_err());
    }

    #[test]
    fn strongly_connected_is_minus_one() {
        assert!(rank_general(&gen_cycle(6)).rank.iter().all(|&r| r == -1));
        assert_eq!(rank_general(&gen_self_loops(1)).rank, vec![-1]);
    }

    #[test]
    fn example8_general_ranks() {
        let g = fixture(Fixture::Example8);
        assert_eq!(rank_general(&g).rank, vec![0, 1, 1, 1, 1]);
    }
}

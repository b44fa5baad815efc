use alloc::vec;
use alloc::vec::Vec;

use super::{Graph, NodeId};

/// The condensation `G^scc` of a graph.
///
/// Components are numbered in the order Tarjan's algorithm completes them,
/// which is a reverse topological order: every component edge goes from a
/// higher index to a lower one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccGraph {
    pub components: Vec<Vec<NodeId>>,
    pub comp_of: Vec<u32>,
    /// Component-level successors, sorted, without self-edges.
    pub comp_succ: Vec<Vec<u32>>,
    /// Whether the component contains a cycle (more than one node, or a self-loop).
    pub cyclic: Vec<bool>,
    pub root: u32,
}

impl SccGraph {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_leaf(&self, c: u32) -> bool {
        self.comp_succ[c as usize].is_empty()
    }
}

const UNVISITED: u32 = u32::MAX;

/// Strongly connected components by an iterative Tarjan traversal.
pub fn scc(g: &Graph) -> SccGraph {
    let n = g.n();
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<NodeId> = Vec::new();
    let mut comp_of = vec![UNVISITED; n];
    let mut components: Vec<Vec<NodeId>> = Vec::new();
    let mut next = 0u32;
    // (node, position in its successor list)
    let mut calls: Vec<(NodeId, usize)> = Vec::new();

    for start in 0..n as NodeId {
        if index[start as usize] != UNVISITED {
            continue;
        }
        calls.push((start, 0));
        index[start as usize] = next;
        low[start as usize] = next;
        next += 1;
        stack.push(start);
        on_stack[start as usize] = true;

        while let Some(top) = calls.last_mut() {
            let (v, pos) = *top;
            let succ = g.successors(v);
            if pos < succ.len() {
                let w = succ[pos];
                top.1 += 1;
                if index[w as usize] == UNVISITED {
                    index[w as usize] = next;
                    low[w as usize] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w as usize] = true;
                    calls.push((w, 0));
                } else if on_stack[w as usize] {
                    low[v as usize] = low[v as usize].min(index[w as usize]);
                }
                continue;
            }
            calls.pop();
            if let Some(&(parent, _)) = calls.last() {
                low[parent as usize] = low[parent as usize].min(low[v as usize]);
            }
            if low[v as usize] == index[v as usize] {
                let id = components.len() as u32;
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack holds the component");
                    on_stack[w as usize] = false;
                    comp_of[w as usize] = id;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                components.push(comp);
            }
        }
    }

    let mut comp_succ = vec![Vec::new(); components.len()];
    let mut cyclic = vec![false; components.len()];
    for (a, b) in g.edges() {
        let (ca, cb) = (comp_of[a as usize], comp_of[b as usize]);
        if ca == cb {
            cyclic[ca as usize] = true;
        } else {
            comp_succ[ca as usize].push(cb);
        }
    }
    for s in &mut comp_succ {
        s.sort_unstable();
        s.dedup();
    }
    SccGraph {
        root: comp_of[g.root() as usize],
        components,
        comp_of,
        comp_succ,
        cyclic,
    }
}

/// `WF(G)` as a mask: nodes whose reachable subgraph is acyclic.
pub fn well_founded_mask(g: &Graph) -> Vec<bool> {
    let s = scc(g);
    let comp_wf = component_well_founded(&s);
    s.comp_of.iter().map(|&c| comp_wf[c as usize]).collect()
}

pub(crate) fn component_well_founded(s: &SccGraph) -> Vec<bool> {
    let mut wf = vec![false; s.len()];
    // successors have lower indices, so they are already decided
    for c in 0..s.len() {
        wf[c] = !s.cyclic[c] && s.comp_succ[c].iter().all(|&d| wf[d as usize]);
    }
    wf
}

/// `WF(G)`, ascending.
pub fn well_founded_part(g: &Graph) -> Vec<NodeId> {
    well_founded_mask(g)
        .iter()
        .enumerate()
        .filter_map(|(a, &w)| w.then_some(a as NodeId))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{fixture, gen_chain, gen_cycle, Fixture};

    #[test]
    fn dag_components_are_singletons() {
        let g = gen_chain(4);
        let s = scc(&g);
        assert_eq!(s.len(), 4);
        assert!(s.components.iter().all(|c| c.len() == 1));
        assert!(s.cyclic.iter().all(|&c| !c));
        assert_eq!(s.comp_succ.iter().map(Vec::len).sum::<usize>(), 3);
        assert_eq!(well_founded_part(&g), vec![0, 1, 2, 3]);
    }

    #[test]
    fn cycle_is_one_component() {
        let g = gen_cycle(5);
        let s = scc(&g);
        assert_eq!(s.len(), 1);
        assert!(s.comp_succ[0].is_empty());
        assert!(s.cyclic[0]);
        assert!(well_founded_part(&g).is_empty());
    }

    #[test]
    fn example8_components() {
        let g = fixture(Fixture::Example8);
        let s = scc(&g);
        let mut comps = s.components.clone();
        comps.sort();
        assert_eq!(comps, vec![vec![0], vec![1, 2], vec![3, 4]]);
        let c = |a: NodeId| s.comp_of[a as usize];
        assert_eq!(s.comp_succ[c(3) as usize], vec![c(1)]);
        assert_eq!(s.comp_succ[c(1) as usize], vec![c(0)]);
        assert!(s.comp_succ[c(0) as usize].is_empty());
        assert_eq!(s.root, c(3));
        assert_eq!(well_founded_part(&g), vec![0]);
    }

    #[test]
    fn deep_chain_does_not_overflow() {
        let g = gen_chain(200_000);
        assert_eq!(scc(&g).len(), 200_000);
    }
}

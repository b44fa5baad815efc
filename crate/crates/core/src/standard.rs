//! The classical encoding: one OBDD of `χ≻(x̄, ȳ)` over source codes `x̄`
//! followed by target codes `ȳ`.

use alloc::vec::Vec;

use crate::bits::Bits;
use crate::error::EncodeError;
use crate::graph::{CodeTable, Graph, NodeId};
use crate::obdd::{BddRef, Kernel};
use crate::vars;

#[derive(Clone, Debug)]
pub struct StandardRepr {
    /// Code width `u`.
    pub width: u32,
    /// `χ≻` over `x1..xu, y1..yu`.
    pub rel: BddRef,
    pub root: NodeId,
    table: CodeTable,
}

impl StandardRepr {
    pub fn n(&self) -> usize {
        self.table.codes.len()
    }

    pub fn codes(&self) -> &[Bits] {
        &self.table.codes
    }

    pub fn node_of(&self, code: u64) -> Option<NodeId> {
        self.table.node_of(code)
    }

    pub fn code_table(&self) -> &CodeTable {
        &self.table
    }

    /// `χ_S` over `x̄`.
    pub fn set_to_bdd(&self, k: &mut Kernel, nodes: &[NodeId]) -> Result<BddRef, EncodeError> {
        let codes = self.codes_of(nodes)?;
        Ok(k.from_minterms(&vars::xs(self.width), &codes)?)
    }

    /// Decodes a set over `x̄` into node ids, ascending.
    pub fn bdd_to_set(&self, k: &Kernel, f: BddRef) -> Result<Vec<NodeId>, EncodeError> {
        decode(k, f, &vars::xs(self.width), &self.table)
    }

    fn codes_of(&self, nodes: &[NodeId]) -> Result<Vec<Bits>, EncodeError> {
        nodes
            .iter()
            .map(|&a| self.table.codes.get(a as usize).copied().ok_or(EncodeError::UnknownNode(a)))
            .collect()
    }

    /// The edge list the relation denotes, in `(source, target)` order.
    pub fn edges(&self, k: &mut Kernel) -> Result<Vec<(NodeId, NodeId)>, EncodeError> {
        let xs = vars::xs(self.width);
        let ys = vars::ys(self.width);
        let sources = k.exists(self.rel, &ys)?;
        let mut edges = Vec::new();
        for a in decode(k, sources, &xs, &self.table)? {
            let src = k.from_minterms(&xs, &[self.table.codes[a as usize]])?;
            let row = k.and(src, self.rel)?;
            let targets = k.exists(row, &xs)?;
            edges.extend(decode(k, targets, &ys, &self.table)?.into_iter().map(|b| (a, b)));
        }
        Ok(edges)
    }

    /// Rebuilds the graph; `explicit_codes` attaches the code table to it.
    pub fn to_graph(&self, k: &mut Kernel, explicit_codes: bool) -> Result<Graph, EncodeError> {
        let g = Graph::new(self.n(), self.root, self.edges(k)?)?;
        Ok(if explicit_codes { g.with_codes(self.table.codes.clone())? } else { g })
    }
}

impl StandardRepr {
    pub(crate) fn from_parts(width: u32, rel: BddRef, root: NodeId, table: CodeTable) -> Self {
        StandardRepr { width, rel, root, table }
    }
}

/// Decodes a set of codes over `vars` to node ids, ascending.
pub(crate) fn decode(k: &Kernel, f: BddRef, vars: &[crate::obdd::VarId], table: &CodeTable) -> Result<Vec<NodeId>, EncodeError> {
    let mut out = k
        .minterms(f, vars)?
        .into_iter()
        .map(|c| table.node_of(c).ok_or(EncodeError::UnknownNode(c as u32)))
        .collect::<Result<Vec<_>, _>>()?;
    out.sort_unstable();
    Ok(out)
}

/// `χ≻` of `g` over its node codes (default codes if it has none).
pub fn encode_standard(k: &mut Kernel, g: &Graph) -> Result<StandardRepr, EncodeError> {
    let table = g.code_table()?;
    let w = table.width;
    let ys = vars::ys(w);
    let mut entries = Vec::new();
    for a in 0..g.n() as NodeId {
        let succ = g.successors(a);
        if succ.is_empty() {
            continue;
        }
        let targets: Vec<Bits> = succ.iter().map(|&b| table.codes[b as usize]).collect();
        let leaf = k.from_minterms(&ys, &targets)?;
        entries.push((table.codes[a as usize].value(), leaf));
    }
    let rel = k.from_trie(&vars::xs(w), entries)?;
    Ok(StandardRepr { width: w, rel, root: g.root(), table })
}

/// Successors of the set `set` (over `x̄`), returned over `x̄`.
///
/// The relational product yields a set over `ȳ`; it is moved back onto `x̄`
/// by enumerating its members and rebuilding.
pub fn image_standard(k: &mut Kernel, s: &StandardRepr, set: BddRef) -> Result<BddRef, EncodeError> {
    let xs = vars::xs(s.width);
    let ys = vars::ys(s.width);
    let conj = k.and(set, s.rel)?;
    let targets = k.exists(conj, &xs)?;
    let codes = k
        .minterms(targets, &ys)?
        .into_iter()
        .map(|c| Bits::new(c, s.width).expect("minterm fits its width"))
        .collect::<Vec<_>>();
    Ok(k.from_minterms(&xs, &codes)?)
}

/// Internal node count of the relation OBDD.
pub fn size_standard(k: &Kernel, s: &StandardRepr) -> Result<usize, EncodeError> {
    Ok(k.node_count(&[s.rel])?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{fixture, gen_cycle, gen_self_loops, Fixture};
    use crate::obdd::Assignment;

    fn bits(s: &str) -> Bits {
        s.parse().unwrap()
    }

    #[test]
    fn empty_relation_is_false() {
        let mut k = Kernel::new();
        let g = Graph::new(3, 0, []).unwrap();
        let s = encode_standard(&mut k, &g).unwrap();
        assert_eq!(s.rel, BddRef::FALSE);
        assert_eq!(size_standard(&k, &s).unwrap(), 0);
    }

    #[test]
    fn example5_formula() {
        let mut k = Kernel::new();
        let s = encode_standard(&mut k, &fixture(Fixture::Example5)).unwrap();
        let order = [vars::x(0), vars::x(1), vars::y(0), vars::y(1)];
        let expected = k
            .from_minterms(&order, &[bits("0100"), bits("1101"), bits("1000"), bits("1001")])
            .unwrap();
        assert_eq!(s.rel, expected);
    }

    #[test]
    fn exact_membership() {
        let mut k = Kernel::new();
        let g = fixture(Fixture::Example8);
        let s = encode_standard(&mut k, &g).unwrap();
        let (xs, ys) = (vars::xs(3), vars::ys(3));
        for a in 0..5 {
            for b in 0..5 {
                let mut asg = Assignment::from_bits(&xs, g.code(a)).unwrap();
                asg.set_bits(&ys, g.code(b)).unwrap();
                assert_eq!(k.eval(s.rel, &asg).unwrap(), g.has_edge(a, b));
            }
        }
        assert_eq!(s.edges(&mut k).unwrap(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn section9_counts() {
        let mut k = Kernel::new();
        let loops4 = encode_standard(&mut k, &gen_self_loops(4)).unwrap();
        assert_eq!(size_standard(&k, &loops4).unwrap(), 9);
        let loops8 = encode_standard(&mut k, &gen_self_loops(8)).unwrap();
        assert_eq!(size_standard(&k, &loops8).unwrap(), 21);
        let cyc4 = encode_standard(&mut k, &gen_cycle(4)).unwrap();
        assert_eq!(size_standard(&k, &cyc4).unwrap(), 9);
    }

    #[test]
    fn image_of_example5() {
        let mut k = Kernel::new();
        let s = encode_standard(&mut k, &fixture(Fixture::Example5)).unwrap();
        assert_eq!(image_standard(&mut k, &s, BddRef::FALSE).unwrap(), BddRef::FALSE);
        let set = s.set_to_bdd(&mut k, &[2]).unwrap();
        let img = image_standard(&mut k, &s, set).unwrap();
        assert_eq!(s.bdd_to_set(&k, img).unwrap(), vec![0, 1]);
    }
}

//! Reduced ordered binary decision diagrams with a shared unique table.
//!
//! A [`Kernel`] owns every node. Handles ([`BddRef`]) are canonical: two
//! handles from the same kernel are equal iff they denote the same boolean
//! function. There are no complement edges, so node counts are those of a
//! plain ROBDD. The variable order is the natural order on [`VarId`] and is
//! never changed.
//!
//! ```
//! use rankbisim::obdd::{Kernel, Op, VarId};
//!
//! let mut k = Kernel::new();
//! let a = k.var(VarId(0));
//! let b = k.var(VarId(1));
//! let f = k.apply(Op::Or, a, b).unwrap();
//! let nf = k.not(f).unwrap();
//! assert!(k.apply(Op::And, f, nf).unwrap().is_false());
//! ```

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;
use core::sync::atomic::{AtomicU32, Ordering};

use hashbrown::{HashMap, HashSet};
use thiserror::Error;

use crate::bits::{Bits, MAX_WIDTH};
use crate::vars;

/// Position of a variable in the kernel's fixed order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId(pub u32);

const TERMINAL_VAR: u32 = u32::MAX;

static NEXT_KERNEL: AtomicU32 = AtomicU32::new(1);

/// Handle to a node of a [`Kernel`].
///
/// The terminals are kernel-independent; every other handle is tagged with
/// the kernel that created it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BddRef {
    kernel: u32,
    index: u32,
}

impl BddRef {
    pub const FALSE: BddRef = BddRef { kernel: 0, index: 0 };
    pub const TRUE: BddRef = BddRef { kernel: 0, index: 1 };

    pub fn is_false(self) -> bool {
        self == Self::FALSE
    }

    pub fn is_true(self) -> bool {
        self == Self::TRUE
    }

    pub fn is_terminal(self) -> bool {
        self.index < 2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    And,
    Or,
    Xor,
}

impl Op {
    pub fn eval(self, a: bool, b: bool) -> bool {
        match self {
            Op::And => a && b,
            Op::Or => a || b,
            Op::Xor => a != b,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BddError {
    #[error("handle {0:?} does not belong to this kernel")]
    ForeignHandle(BddRef),
    #[error("variable order violated: {var:?} must precede the children's top variable {child:?}")]
    OrderViolation { var: VarId, child: VarId },
    #[error("variables must be listed in strictly increasing order")]
    UnsortedVariables,
    #[error("bitstring has width {found}, expected {expected}")]
    WidthMismatch { expected: u32, found: u32 },
    #[error("variable {0:?} is not assigned")]
    MissingVariable(VarId),
    #[error("too many variables for a 64-bit minterm ({0})")]
    TooManyVariables(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Node {
    var: u32,
    lo: u32,
    hi: u32,
}

/// A truth assignment to some variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    bits: BTreeMap<VarId, bool>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Assign the characters of `code` to `vars`, leftmost character first.
    pub fn from_bits(vars: &[VarId], code: Bits) -> Result<Self, BddError> {
        let mut a = Self::new();
        a.set_bits(vars, code)?;
        Ok(a)
    }

    pub fn set(&mut self, v: VarId, value: bool) -> &mut Self {
        self.bits.insert(v, value);
        self
    }

    pub fn with(mut self, v: VarId, value: bool) -> Self {
        self.bits.insert(v, value);
        self
    }

    pub fn set_bits(&mut self, vars: &[VarId], code: Bits) -> Result<&mut Self, BddError> {
        if code.width() as usize != vars.len() {
            return Err(BddError::WidthMismatch { expected: vars.len() as u32, found: code.width() });
        }
        for (i, &v) in vars.iter().enumerate() {
            self.bits.insert(v, code.bit(i as u32));
        }
        Ok(self)
    }

    pub fn get(&self, v: VarId) -> Option<bool> {
        self.bits.get(&v).copied()
    }
}

/// Shared node table, unique table and operation caches.
///
/// A kernel is single-owner. Distinct kernels are independent.
pub struct Kernel {
    id: u32,
    nodes: Vec<Node>,
    unique: HashMap<Node, u32>,
    apply_cache: HashMap<(Op, u32, u32), u32>,
    not_cache: HashMap<u32, u32>,
}

impl Default for Kernel {
    fn default() -> Self {
        Self::new()
    }
}

impl Kernel {
    pub fn new() -> Self {
        let terminal = |v| Node { var: TERMINAL_VAR, lo: v, hi: v };
        Kernel {
            id: NEXT_KERNEL.fetch_add(1, Ordering::Relaxed),
            nodes: alloc::vec![terminal(0), terminal(1)],
            unique: HashMap::new(),
            apply_cache: HashMap::new(),
            not_cache: HashMap::new(),
        }
    }

    /// Number of internal nodes ever created (live or not).
    pub fn table_size(&self) -> usize {
        self.nodes.len() - 2
    }

    pub fn clear_caches(&mut self) {
        self.apply_cache.clear();
        self.not_cache.clear();
    }

    fn handle(&self, index: u32) -> BddRef {
        if index < 2 {
            BddRef { kernel: 0, index }
        } else {
            BddRef { kernel: self.id, index }
        }
    }

    fn check(&self, f: BddRef) -> Result<u32, BddError> {
        if f.is_terminal() && f.kernel == 0 {
            return Ok(f.index);
        }
        if f.kernel != self.id || f.index as usize >= self.nodes.len() {
            return Err(BddError::ForeignHandle(f));
        }
        Ok(f.index)
    }

    /// Top variable of `f`, `None` for terminals.
    pub fn top_var(&self, f: BddRef) -> Result<Option<VarId>, BddError> {
        let i = self.check(f)?;
        let v = self.nodes[i as usize].var;
        Ok((v != TERMINAL_VAR).then_some(VarId(v)))
    }

    /// `(lo, hi)` children of a non-terminal node.
    pub fn children(&self, f: BddRef) -> Result<Option<(BddRef, BddRef)>, BddError> {
        let i = self.check(f)?;
        if i < 2 {
            return Ok(None);
        }
        let n = self.nodes[i as usize];
        Ok(Some((self.handle(n.lo), self.handle(n.hi))))
    }

    fn var_of(&self, i: u32) -> u32 {
        self.nodes[i as usize].var
    }

    fn mk_raw(&mut self, var: u32, lo: u32, hi: u32) -> u32 {
        if lo == hi {
            return lo;
        }
        let node = Node { var, lo, hi };
        if let Some(&i) = self.unique.get(&node) {
            return i;
        }
        let i = self.nodes.len() as u32;
        self.nodes.push(node);
        self.unique.insert(node, i);
        i
    }

    /// The canonical node testing `var` with the given cofactors.
    pub fn mk(&mut self, var: VarId, lo: BddRef, hi: BddRef) -> Result<BddRef, BddError> {
        let l = self.check(lo)?;
        let h = self.check(hi)?;
        for c in [l, h] {
            let cv = self.var_of(c);
            if var.0 >= cv {
                return Err(BddError::OrderViolation { var, child: VarId(cv) });
            }
        }
        let i = self.mk_raw(var.0, l, h);
        Ok(self.handle(i))
    }

    /// The positive literal of `v`.
    pub fn var(&mut self, v: VarId) -> BddRef {
        let i = self.mk_raw(v.0, 0, 1);
        self.handle(i)
    }

    /// The negative literal of `v`.
    pub fn nvar(&mut self, v: VarId) -> BddRef {
        let i = self.mk_raw(v.0, 1, 0);
        self.handle(i)
    }

    pub fn apply(&mut self, op: Op, f: BddRef, g: BddRef) -> Result<BddRef, BddError> {
        let a = self.check(f)?;
        let b = self.check(g)?;
        let r = self.apply_rec(op, a, b);
        Ok(self.handle(r))
    }

    pub fn and(&mut self, f: BddRef, g: BddRef) -> Result<BddRef, BddError> {
        self.apply(Op::And, f, g)
    }

    pub fn or(&mut self, f: BddRef, g: BddRef) -> Result<BddRef, BddError> {
        self.apply(Op::Or, f, g)
    }

    pub fn xor(&mut self, f: BddRef, g: BddRef) -> Result<BddRef, BddError> {
        self.apply(Op::Xor, f, g)
    }

    fn apply_rec(&mut self, op: Op, f: u32, g: u32) -> u32 {
        match op {
            Op::And => {
                if f == 0 || g == 0 {
                    return 0;
                }
                if f == 1 {
                    return g;
                }
                if g == 1 || f == g {
                    return f;
                }
            }
            Op::Or => {
                if f == 1 || g == 1 {
                    return 1;
                }
                if f == 0 {
                    return g;
                }
                if g == 0 || f == g {
                    return f;
                }
            }
            Op::Xor => {
                if f == g {
                    return 0;
                }
                if f == 0 {
                    return g;
                }
                if g == 0 {
                    return f;
                }
                if f == 1 {
                    return self.not_rec(g);
                }
                if g == 1 {
                    return self.not_rec(f);
                }
            }
        }
        let key = (op, f.min(g), f.max(g));
        if let Some(&r) = self.apply_cache.get(&key) {
            return r;
        }
        let nf = self.nodes[f as usize];
        let ng = self.nodes[g as usize];
        let v = nf.var.min(ng.var);
        let (f0, f1) = if nf.var == v { (nf.lo, nf.hi) } else { (f, f) };
        let (g0, g1) = if ng.var == v { (ng.lo, ng.hi) } else { (g, g) };
        let lo = self.apply_rec(op, f0, g0);
        let hi = self.apply_rec(op, f1, g1);
        let r = self.mk_raw(v, lo, hi);
        self.apply_cache.insert(key, r);
        r
    }

    pub fn not(&mut self, f: BddRef) -> Result<BddRef, BddError> {
        let a = self.check(f)?;
        let r = self.not_rec(a);
        Ok(self.handle(r))
    }

    fn not_rec(&mut self, f: u32) -> u32 {
        if f < 2 {
            return 1 - f;
        }
        if let Some(&r) = self.not_cache.get(&f) {
            return r;
        }
        let n = self.nodes[f as usize];
        let lo = self.not_rec(n.lo);
        let hi = self.not_rec(n.hi);
        let r = self.mk_raw(n.var, lo, hi);
        self.not_cache.insert(f, r);
        r
    }

    /// Existential quantification of `f` over `vars`.
    pub fn exists(&mut self, f: BddRef, vars: &[VarId]) -> Result<BddRef, BddError> {
        let a = self.check(f)?;
        let mut set: Vec<u32> = vars.iter().map(|v| v.0).collect();
        set.sort_unstable();
        set.dedup();
        let mut cache = HashMap::new();
        let r = self.exists_rec(a, &set, &mut cache);
        Ok(self.handle(r))
    }

    fn exists_rec(&mut self, f: u32, set: &[u32], cache: &mut HashMap<u32, u32>) -> u32 {
        let n = self.nodes[f as usize];
        if f < 2 || set.last().is_none_or(|&m| n.var > m) {
            return f;
        }
        if let Some(&r) = cache.get(&f) {
            return r;
        }
        let lo = self.exists_rec(n.lo, set, cache);
        let hi = self.exists_rec(n.hi, set, cache);
        let r = if set.binary_search(&n.var).is_ok() {
            self.apply_rec(Op::Or, lo, hi)
        } else {
            self.mk_raw(n.var, lo, hi)
        };
        cache.insert(f, r);
        r
    }

    /// Characteristic function of a set of bitstrings over `vars`; the
    /// leftmost character of each code is tested by `vars[0]`.
    pub fn from_minterms(&mut self, vars: &[VarId], codes: &[Bits]) -> Result<BddRef, BddError> {
        let entries: Vec<(u64, BddRef)> = codes
            .iter()
            .map(|c| {
                if c.width() as usize != vars.len() {
                    Err(BddError::WidthMismatch { expected: vars.len() as u32, found: c.width() })
                } else {
                    Ok((c.value(), BddRef::TRUE))
                }
            })
            .collect::<Result<_, _>>()?;
        self.from_trie(vars, entries)
    }

    /// Builds `⋁ (code = c ∧ leaf_c)` over `vars`, with each leaf function
    /// depending only on variables below `vars`. Duplicate codes are OR-ed.
    pub fn from_trie(&mut self, vars: &[VarId], mut entries: Vec<(u64, BddRef)>) -> Result<BddRef, BddError> {
        if vars.len() > MAX_WIDTH as usize {
            return Err(BddError::TooManyVariables(vars.len()));
        }
        if vars.windows(2).any(|w| w[0] >= w[1]) {
            return Err(BddError::UnsortedVariables);
        }
        let width = vars.len() as u32;
        let mut raw: Vec<(u64, u32)> = Vec::with_capacity(entries.len());
        entries.sort_unstable();
        for (code, leaf) in entries.drain(..) {
            if width < 64 && code >> width != 0 {
                return Err(BddError::WidthMismatch { expected: width, found: 64 - code.leading_zeros() });
            }
            let l = self.check(leaf)?;
            if let Some(last) = vars.last() {
                let lv = self.var_of(l);
                if lv <= last.0 {
                    return Err(BddError::OrderViolation { var: *last, child: VarId(lv) });
                }
            }
            match raw.last_mut() {
                Some((c, prev)) if *c == code => *prev = self.apply_rec(Op::Or, *prev, l),
                _ => raw.push((code, l)),
            }
        }
        let var_ids: Vec<u32> = vars.iter().map(|v| v.0).collect();
        let r = self.trie_rec(&var_ids, 0, &raw);
        Ok(self.handle(r))
    }

    fn trie_rec(&mut self, vars: &[u32], level: usize, entries: &[(u64, u32)]) -> u32 {
        if entries.is_empty() {
            return 0;
        }
        if level == vars.len() {
            debug_assert_eq!(entries.len(), 1);
            return entries[0].1;
        }
        let shift = vars.len() - 1 - level;
        let split = entries.partition_point(|(c, _)| (c >> shift) & 1 == 0);
        let lo = self.trie_rec(vars, level + 1, &entries[..split]);
        let hi = self.trie_rec(vars, level + 1, &entries[split..]);
        self.mk_raw(vars[level], lo, hi)
    }

    pub fn eval(&self, f: BddRef, a: &Assignment) -> Result<bool, BddError> {
        let mut i = self.check(f)?;
        while i >= 2 {
            let n = self.nodes[i as usize];
            let v = VarId(n.var);
            let b = a.get(v).ok_or(BddError::MissingVariable(v))?;
            i = if b { n.hi } else { n.lo };
        }
        Ok(i == 1)
    }

    /// All satisfying assignments of `f` restricted to `vars`, as codes
    /// (leftmost character = `vars[0]`), in ascending order. Every variable
    /// in `f`'s support must be listed.
    pub fn minterms(&self, f: BddRef, vars: &[VarId]) -> Result<Vec<u64>, BddError> {
        let i = self.check(f)?;
        if vars.len() > MAX_WIDTH as usize {
            return Err(BddError::TooManyVariables(vars.len()));
        }
        if vars.windows(2).any(|w| w[0] >= w[1]) {
            return Err(BddError::UnsortedVariables);
        }
        let mut out = Vec::new();
        self.minterms_rec(i, vars, 0, 0, &mut out)?;
        Ok(out)
    }

    fn minterms_rec(&self, f: u32, vars: &[VarId], level: usize, acc: u64, out: &mut Vec<u64>) -> Result<(), BddError> {
        if f == 0 {
            return Ok(());
        }
        let n = self.nodes[f as usize];
        if level == vars.len() {
            if f == 1 {
                out.push(acc);
                return Ok(());
            }
            return Err(BddError::MissingVariable(VarId(n.var)));
        }
        let v = vars[level].0;
        if n.var < v {
            return Err(BddError::MissingVariable(VarId(n.var)));
        }
        let (lo, hi) = if n.var == v { (n.lo, n.hi) } else { (f, f) };
        self.minterms_rec(lo, vars, level + 1, acc << 1, out)?;
        self.minterms_rec(hi, vars, level + 1, (acc << 1) | 1, out)
    }

    /// Variables `f` depends on, ascending.
    pub fn support(&self, f: BddRef) -> Result<Vec<VarId>, BddError> {
        let i = self.check(f)?;
        let mut seen = HashSet::new();
        let mut vars = Vec::new();
        let mut stack = alloc::vec![i];
        while let Some(j) = stack.pop() {
            if j < 2 || !seen.insert(j) {
                continue;
            }
            let n = self.nodes[j as usize];
            vars.push(VarId(n.var));
            stack.push(n.lo);
            stack.push(n.hi);
        }
        vars.sort_unstable();
        vars.dedup();
        Ok(vars)
    }

    /// Distinct internal nodes reachable from `roots`, shared nodes counted once.
    pub fn node_count(&self, roots: &[BddRef]) -> Result<usize, BddError> {
        let mut seen = HashSet::new();
        let mut stack = Vec::new();
        for &r in roots {
            stack.push(self.check(r)?);
        }
        while let Some(j) = stack.pop() {
            if j < 2 || !seen.insert(j) {
                continue;
            }
            let n = self.nodes[j as usize];
            stack.push(n.lo);
            stack.push(n.hi);
        }
        Ok(seen.len())
    }

    /// Checks the reduced, unique and ordered invariants over the whole table.
    pub fn check_invariants(&self) -> Result<(), String> {
        let mut seen = HashSet::new();
        for (i, n) in self.nodes.iter().enumerate().skip(2) {
            if n.lo == n.hi {
                return Err(alloc::format!("node {i} is redundant"));
            }
            if !seen.insert(*n) {
                return Err(alloc::format!("node {i} duplicates another node"));
            }
            for c in [n.lo, n.hi] {
                if self.var_of(c) <= n.var {
                    return Err(alloc::format!("node {i} is out of order"));
                }
            }
        }
        Ok(())
    }

    /// DOT rendering of the graphs rooted at `roots`: solid edges are `hi`,
    /// dashed edges are `lo`, terminals are boxes. Output is deterministic.
    pub fn to_dot(&self, roots: &[BddRef]) -> Result<String, BddError> {
        self.to_dot_with(roots, vars::name)
    }

    pub fn to_dot_with(&self, roots: &[BddRef], name: impl Fn(VarId) -> String) -> Result<String, BddError> {
        let mut order = Vec::new();
        let mut ids: HashMap<u32, usize> = HashMap::new();
        for &r in roots {
            let mut stack = alloc::vec![self.check(r)?];
            while let Some(j) = stack.pop() {
                if ids.contains_key(&j) {
                    continue;
                }
                ids.insert(j, order.len());
                order.push(j);
                if j >= 2 {
                    let n = self.nodes[j as usize];
                    stack.push(n.hi);
                    stack.push(n.lo);
                }
            }
        }
        let mut out = String::from("digraph bdd {\n");
        for &j in &order {
            let id = ids[&j];
            if j < 2 {
                let _ = writeln!(out, "  n{id} [shape=box,label=\"{j}\"];");
            } else {
                let label = name(VarId(self.nodes[j as usize].var));
                let _ = writeln!(out, "  n{id} [shape=oval,label=\"{label}\"];");
            }
        }
        for &j in &order {
            if j < 2 {
                continue;
            }
            let n = self.nodes[j as usize];
            let id = ids[&j];
            let _ = writeln!(out, "  n{id} -> n{} [style=dashed];", ids[&n.lo]);
            let _ = writeln!(out, "  n{id} -> n{} [style=solid];", ids[&n.hi]);
        }
        out.push_str("}\n");
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn bits(s: &str) -> Bits {
        s.parse().unwrap()
    }

    const Z1: VarId = VarId(0);
    const Z2: VarId = VarId(1);

    #[test]
    fn mk_literal_and_redundancy() {
        let mut k = Kernel::new();
        let lit = k.mk(Z1, BddRef::FALSE, BddRef::TRUE).unwrap();
        assert_eq!(lit, k.var(Z1));
        let f = k.var(Z2);
        assert_eq!(k.mk(Z1, f, f).unwrap(), f);
        let a = k.mk(Z1, BddRef::TRUE, BddRef::FALSE).unwrap();
        let b = k.mk(Z1, BddRef::TRUE, BddRef::FALSE).unwrap();
        assert_eq!(a, b);
        assert_eq!(k.table_size(), 3);
    }

    #[test]
    fn mk_rejects_order_violation() {
        let mut k = Kernel::new();
        let f = k.var(Z1);
        assert!(matches!(k.mk(Z2, f, BddRef::TRUE), Err(BddError::OrderViolation { .. })));
        assert!(k.mk(Z1, f, BddRef::TRUE).is_err());
    }

    #[test]
    fn foreign_handles_rejected() {
        let mut k1 = Kernel::new();
        let mut k2 = Kernel::new();
        let f = k1.var(Z1);
        let g = k2.var(Z1);
        assert_eq!(k1.apply(Op::And, f, g), Err(BddError::ForeignHandle(g)));
        assert!(k2.not(f).is_err());
        // terminals are shared by every kernel
        assert_eq!(k2.or(BddRef::TRUE, g).unwrap(), BddRef::TRUE);
    }

    #[test]
    fn apply_identities() {
        let mut k = Kernel::new();
        let a = k.var(Z1);
        let b = k.var(Z2);
        let f = k.xor(a, b).unwrap();
        assert_eq!(k.or(f, BddRef::FALSE).unwrap(), f);
        let nf = k.not(f).unwrap();
        assert_eq!(k.and(f, nf).unwrap(), BddRef::FALSE);
        assert_eq!(k.not(nf).unwrap(), f);
        assert_eq!(k.not(BddRef::TRUE).unwrap(), BddRef::FALSE);
        let nz = k.not(a).unwrap();
        assert_eq!(k.children(nz).unwrap(), Some((BddRef::TRUE, BddRef::FALSE)));
    }

    #[test]
    fn or_of_two_minterms_is_not_z2() {
        let mut k = Kernel::new();
        let m00 = k.from_minterms(&[Z1, Z2], &[bits("00")]).unwrap();
        let m10 = k.from_minterms(&[Z1, Z2], &[bits("10")]).unwrap();
        let f = k.or(m00, m10).unwrap();
        let nz2 = k.nvar(Z2);
        assert_eq!(f, nz2);
        assert_eq!(k.node_count(&[f]).unwrap(), 1);
        assert_eq!(k.from_minterms(&[Z1, Z2], &[bits("00"), bits("10")]).unwrap(), nz2);
    }

    #[test]
    fn from_minterms_cases() {
        let mut k = Kernel::new();
        assert_eq!(k.from_minterms(&[Z1, Z2], &[]).unwrap(), BddRef::FALSE);
        assert_eq!(k.from_minterms(&[Z1], &[bits("0"), bits("1")]).unwrap(), BddRef::TRUE);
        assert!(matches!(
            k.from_minterms(&[Z1, Z2], &[bits("0")]),
            Err(BddError::WidthMismatch { expected: 2, found: 1 })
        ));
        assert_eq!(k.from_minterms(&[Z2, Z1], &[]), Err(BddError::UnsortedVariables));
    }

    #[test]
    fn exists_cases() {
        let mut k = Kernel::new();
        assert_eq!(k.exists(BddRef::FALSE, &[Z1]).unwrap(), BddRef::FALSE);
        let z1 = k.var(Z1);
        assert_eq!(k.exists(z1, &[Z1]).unwrap(), BddRef::TRUE);
        let m01 = k.from_minterms(&[Z1, Z2], &[bits("01")]).unwrap();
        let r = k.exists(m01, &[Z2]).unwrap();
        assert_eq!(r, k.nvar(Z1));
    }

    #[test]
    fn eval_cases() {
        let mut k = Kernel::new();
        assert!(k.eval(BddRef::TRUE, &Assignment::new()).unwrap());
        let z1 = k.var(Z1);
        assert!(!k.eval(z1, &Assignment::new().with(Z1, false)).unwrap());
        let m = k.from_minterms(&[Z1, Z2], &[bits("01")]).unwrap();
        let a = Assignment::from_bits(&[Z1, Z2], bits("01")).unwrap();
        assert!(k.eval(m, &a).unwrap());
        assert_eq!(k.eval(m, &Assignment::new().with(Z1, false)), Err(BddError::MissingVariable(Z2)));
    }

    #[test]
    fn minterms_roundtrip_with_dont_cares() {
        let mut k = Kernel::new();
        let nz2 = k.nvar(Z2);
        assert_eq!(k.minterms(nz2, &[Z1, Z2]).unwrap(), vec![0b00, 0b10]);
        assert_eq!(k.minterms(nz2, &[Z1]), Err(BddError::MissingVariable(Z2)));
        assert_eq!(k.minterms(BddRef::TRUE, &[Z1]).unwrap(), vec![0, 1]);
    }

    #[test]
    fn dot_output() {
        let mut k = Kernel::new();
        let d = k.to_dot(&[BddRef::FALSE]).unwrap();
        assert_eq!(d.matches("shape=box").count(), 1);
        assert!(d.contains("label=\"0\""));
        let z = k.var(VarId(vars::Z_BASE));
        let d1 = k.to_dot(&[z]).unwrap();
        assert_eq!(d1.matches("shape=oval").count(), 1);
        assert_eq!(d1.matches("shape=box").count(), 2);
        assert!(d1.contains("label=\"z1\""));
        assert_eq!(d1, k.to_dot(&[z]).unwrap());
    }
}

//! The work behind each subcommand, kept free of argument parsing and
//! process exit so it can be tested directly.

use std::collections::BTreeMap;
use std::path::Path;

use rankbisim::generators::{
    fixture, gen_chain, gen_clique_cycle, gen_cycle, gen_nary_tree, gen_random, gen_self_loops, gen_self_loops_rooted,
    Fixture, GenError,
};
use rankbisim::layered::{build_layered, image, intersect_block, preimage, size_report};
use rankbisim::quotient::{encode_cyclic, quotient_layered, QuotientResult};
use rankbisim::standard::{encode_standard, size_standard};
use rankbisim::{BddRef, EncodeError, Graph, Kernel, NodeId, Partition};
use serde::Serialize;
use thiserror::Error;

use crate::formats::{parse_aut, parse_edge_list, write_edge_list, ParseError, Parsed, Reachability};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Encode(#[from] EncodeError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    /// Process exit code: 2 for bad input, 3 for I/O failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 3,
            _ => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Edgelist,
    Aut,
}

impl Format {
    /// `.aut` files are Aldebaran, anything else an edge list.
    pub fn infer(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("aut") => Format::Aut,
            _ => Format::Edgelist,
        }
    }
}

pub fn parse(text: &str, format: Format, mode: Reachability) -> Result<Parsed, CliError> {
    Ok(match format {
        Format::Edgelist => parse_edge_list(text, mode)?,
        Format::Aut => parse_aut(text, mode)?,
    })
}

pub fn load(path: &Path, format: Option<Format>, mode: Reachability) -> Result<Parsed, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    parse(&text, format.unwrap_or_else(|| Format::infer(path)), mode)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankCount {
    pub rank: i32,
    pub classes: usize,
}

/// `pairs` maps input node ids to `[rank, code]`.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientReport {
    pub pairs: BTreeMap<NodeId, (i32, u32)>,
    pub classes_per_rank: Vec<RankCount>,
    pub quotient_edges: Vec<((i32, u32), (i32, u32))>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareReport {
    pub nodes: usize,
    pub edges: usize,
    pub standard_size: usize,
    pub quotient_nodes: usize,
    pub quotient_edges: usize,
    pub quotient_standard_size: usize,
    pub quotient_layered: rankbisim::SizeReport,
    pub classes_per_rank: Vec<RankCount>,
}

fn classes_per_rank(q: &QuotientResult) -> Vec<RankCount> {
    q.classes_per_rank().into_iter().map(|(rank, classes)| RankCount { rank, classes }).collect()
}

/// Quotient edge list (with pair codes) and the pairs report.
pub fn quotient(parsed: &Parsed) -> Result<(String, QuotientReport), CliError> {
    let mut k = Kernel::new();
    let q = encode_cyclic(&mut k, &parsed.graph)?;
    let report = QuotientReport {
        pairs: parsed
            .original_ids
            .iter()
            .zip(&q.pairs)
            .map(|(&a, p)| (a, (p.rank, p.code)))
            .collect(),
        classes_per_rank: classes_per_rank(&q),
        quotient_edges: q.quotient_edges().into_iter().map(|(a, b)| ((a.rank, a.code), (b.rank, b.code))).collect(),
    };
    Ok((write_edge_list(&q.quotient), report))
}

pub fn compare(g: &Graph) -> Result<CompareReport, CliError> {
    let mut k = Kernel::new();
    let s = encode_standard(&mut k, g)?;
    let q = encode_cyclic(&mut k, g)?;
    let qs = encode_standard(&mut k, &q.quotient)?;
    let r = quotient_layered(&mut k, &q)?;
    Ok(CompareReport {
        nodes: g.n(),
        edges: g.edge_count(),
        standard_size: size_standard(&k, &s)?,
        quotient_nodes: q.quotient.n(),
        quotient_edges: q.quotient.edge_count(),
        quotient_standard_size: size_standard(&k, &qs)?,
        quotient_layered: size_report(&k, &r)?,
        classes_per_rank: classes_per_rank(&q),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// Maps input node ids through pruning.
fn to_internal(parsed: &Parsed, nodes: &[NodeId]) -> Result<Vec<NodeId>, CliError> {
    nodes
        .iter()
        .map(|&a| {
            parsed
                .original_ids
                .iter()
                .position(|&o| o == a)
                .map(|i| i as NodeId)
                .ok_or_else(|| CliError::Usage(format!("unknown node {a}")))
        })
        .collect()
}

/// Iterated image or preimage over a layered representation whose blocks
/// share the first `prefix` code bits. Each step splits the current set
/// into its per-block parts before applying the operator.
pub fn walk(parsed: &Parsed, nodes: &[NodeId], steps: usize, prefix: u32, dir: Direction) -> Result<Vec<NodeId>, CliError> {
    let g = &parsed.graph;
    let p = Partition::by_prefix(g, prefix)?;
    let mut k = Kernel::new();
    let r = build_layered(&mut k, g, &p)?;
    let mut set = to_internal(parsed, nodes)?;
    set.sort_unstable();
    set.dedup();
    for _ in 0..steps {
        let mut next = Vec::new();
        for j in 0..p.len() {
            let part = intersect_block(&mut k, &r, &set, j)?;
            if part.is_empty() {
                continue;
            }
            next.extend(match dir {
                Direction::Forward => image(&mut k, &r, &part)?,
                Direction::Backward => preimage(&mut k, &r, &part)?,
            });
        }
        next.sort_unstable();
        next.dedup();
        set = next;
    }
    Ok(set.into_iter().map(|a| parsed.original_ids[a as usize]).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum DotTarget {
    Standard,
    Layered,
    Quotient,
}

fn distinct(mut fs: Vec<BddRef>) -> Vec<BddRef> {
    fs.sort_unstable();
    fs.dedup();
    fs
}

pub fn dot(g: &Graph, what: DotTarget, prefix: u32) -> Result<String, CliError> {
    let mut k = Kernel::new();
    let roots = match what {
        DotTarget::Standard => vec![encode_standard(&mut k, g)?.rel],
        DotTarget::Layered => {
            let r = build_layered(&mut k, g, &Partition::by_prefix(g, prefix)?)?;
            let mut fs: Vec<BddRef> = r.blocks.iter().flat_map(|b| b.succ.iter().map(|&(_, f)| f)).collect();
            fs.extend(r.blocks.iter().map(|b| b.dmap));
            distinct(fs)
        }
        DotTarget::Quotient => {
            let q = encode_cyclic(&mut k, g)?;
            let r = quotient_layered(&mut k, &q)?;
            distinct(r.blocks.iter().flat_map(|b| b.succ.iter().map(|&(_, f)| f)).collect())
        }
    };
    Ok(k.to_dot(&roots).map_err(EncodeError::from)?)
}

/// Builds a generator family from its name and integer parameters.
pub fn generate(family: &str, params: &[String], acyclic: bool) -> Result<Graph, CliError> {
    let nums = || -> Result<Vec<u64>, CliError> {
        params
            .iter()
            .map(|p| p.parse().map_err(|_| CliError::Usage(format!("expected a number, found {p:?}"))))
            .collect()
    };
    let arity = |want: usize, got: &[u64]| {
        if got.len() == want {
            Ok(())
        } else {
            Err(CliError::Usage(format!("{family} takes {want} parameter(s), got {}", got.len())))
        }
    };
    let positive = |v: u64| {
        if v == 0 {
            Err(CliError::Usage(format!("{family} needs a positive size")))
        } else {
            Ok(v as usize)
        }
    };
    Ok(match family {
        "fixture" => {
            let [name] = params else {
                return Err(CliError::Usage("fixture takes one name".into()));
            };
            fixture(name.parse::<Fixture>()?)
        }
        "self-loops" | "self-loops-rooted" | "cycle" | "chain" => {
            let v = nums()?;
            arity(1, &v)?;
            let n = positive(v[0])?;
            match family {
                "self-loops" => gen_self_loops(n),
                "self-loops-rooted" => gen_self_loops_rooted(n),
                "cycle" => gen_cycle(n),
                _ => gen_chain(n),
            }
        }
        "clique-cycle" => {
            let v = nums()?;
            arity(2, &v)?;
            gen_clique_cycle(v[0] as u32, v[1] as u32)?
        }
        "tree" => {
            let v = nums()?;
            arity(2, &v)?;
            gen_nary_tree(v[0] as usize, v[1] as usize)?
        }
        "random" => {
            let v = nums()?;
            arity(3, &v)?;
            gen_random(v[0] as usize, v[1] as usize, v[2], acyclic)?
        }
        other => return Err(CliError::Usage(format!("unknown family {other:?}"))),
    })
}

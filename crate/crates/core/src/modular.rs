//! Drawing through transitive modules.
//!
//! A transitive module is a vertex set whose members have the same
//! predecessors and the same successors outside the set, under the
//! transitive closure. Given a partition of the vertices into such modules,
//! the graph is drawn as a quotient (one vertex per module) plus one small
//! drawing per module, and the module drawings are inserted into room made
//! in the quotient drawing. The resulting dimension is the largest width
//! among the quotient and the module graphs, which can be far below the
//! width of the whole graph.

use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::channels::{min_channel_decomposition, pad_decomposition, width};
use crate::ctc::build_ctc;
use crate::draw::{kd_draw, DominanceDrawing, Provenance};
use crate::error::{Error, Result};
use crate::graph::{reach_oracle, DagBuilder, ReachMatrix, StGraph};

/// Disjoint blocks `M_1..M_h` covering every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruencePartition {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl CongruencePartition {
    /// Checks disjointness and coverage only; module-ness is checked by
    /// [`validate_partition`].
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut block_of = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::NotAPartition(format!("block {b} is empty")));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::NotAPartition(format!(
                        "vertex index {v} out of range"
                    )));
                }
                if block_of[v] != usize::MAX {
                    return Err(Error::NotAPartition(format!(
                        "vertex {v} is in blocks {} and {b}",
                        block_of[v]
                    )));
                }
                block_of[v] = b;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::NotAPartition(format!("vertex {v} is not covered")));
        }
        Ok(CongruencePartition { blocks, block_of })
    }

    pub fn from_ids<S: AsRef<str>>(g: &StGraph, blocks: &[Vec<S>]) -> Result<Self> {
        let dag = g.dag();
        let blocks = blocks
            .iter()
            .map(|b| b.iter().map(|id| dag.require(id.as_ref())).collect())
            .collect::<Result<Vec<Vec<usize>>>>()?;
        Self::from_blocks(g.n(), blocks)
    }

    pub fn singletons(n: usize) -> Self {
        CongruencePartition {
            blocks: (0..n).map(|v| vec![v]).collect(),
            block_of: (0..n).collect(),
        }
    }

    /// Number of blocks.
    pub fn h(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn to_json(&self, g: &StGraph, include_virtual: bool) -> PartitionJson {
        let dag = g.dag();
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .filter(|&&v| include_virtual || !g.is_virtual(v))
                    .map(|&v| dag.id(v).to_owned())
                    .collect::<Vec<_>>()
            })
            .filter(|b| !b.is_empty())
            .collect();
        PartitionJson { blocks }
    }
}

/// Partition file: `{"blocks": [[ids...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub blocks: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighborSide {
    Predecessor,
    Successor,
}

/// Members `u` and `v` of `block` disagree on whether `witness` (outside
/// the block) is a predecessor / successor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionViolation {
    pub block: usize,
    pub u: String,
    pub v: String,
    pub witness: String,
    pub side: NeighborSide,
}

impl fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            NeighborSide::Predecessor => "predecessor",
            NeighborSide::Successor => "successor",
        };
        write!(
            f,
            "block {}: {} is an external {side} of exactly one of {} and {}",
            self.block, self.witness, self.u, self.v
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartitionReport {
    pub violations: Vec<PartitionViolation>,
}

impl PartitionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every block is a transitive module, comparing each member with
/// the block's first member against the BFS reachability oracle.
pub fn validate_partition(g: &StGraph, p: &CongruencePartition) -> Result<PartitionReport> {
    if p.block_of.len() != g.n() {
        return Err(Error::NotAPartition(format!(
            "partition covers {} vertices, graph has {}",
            p.block_of.len(),
            g.n()
        )));
    }
    let dag = g.dag();
    let r = reach_oracle(dag);
    let mut violations = Vec::new();
    for (b, block) in p.blocks.iter().enumerate() {
        let rep = block[0];
        for &u in &block[1..] {
            let mismatch = (0..g.n()).filter(|&w| p.block_of[w] != b).find_map(|w| {
                if r.reaches(w, rep) != r.reaches(w, u) {
                    Some((w, NeighborSide::Predecessor))
                } else if r.reaches(rep, w) != r.reaches(u, w) {
                    Some((w, NeighborSide::Successor))
                } else {
                    None
                }
            });
            if let Some((w, side)) = mismatch {
                violations.push(PartitionViolation {
                    block: b,
                    u: dag.id(rep).to_owned(),
                    v: dag.id(u).to_owned(),
                    witness: dag.id(w).to_owned(),
                    side,
                });
            }
        }
    }
    Ok(PartitionReport { violations })
}

fn require_valid(g: &StGraph, p: &CongruencePartition) -> Result<()> {
    let report = validate_partition(g, p).map_err(|e| Error::InvalidPartition(e.to_string()))?;
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(Error::InvalidPartition(v.to_string())),
    }
}

/// Groups vertices into transitive modules.
///
/// Two interior vertices are related when `{u, v}` is itself a transitive
/// module, i.e. their strict closure neighbourhoods differ at most in `u`
/// and `v`. Blocks are the connected components of that relation; the
/// source and the sink always stay singletons. The result is validated and
/// replaced by the all-singletons partition if a component is not a module.
pub fn find_congruence_partition(g: &StGraph) -> CongruencePartition {
    let n = g.n();
    let closure = g.dag().transitive_closure();
    let succ: Vec<FixedBitSet> = (0..n)
        .map(|u| {
            let mut row = closure.row(u).clone();
            row.remove(u);
            row
        })
        .collect();
    let mut pred = vec![FixedBitSet::with_capacity(n); n];
    for (u, v) in closure.strict_pairs() {
        pred[v].insert(u);
    }

    let differ_only_in = |a: &FixedBitSet, b: &FixedBitSet, u: usize, v: usize| {
        a.symmetric_difference(b).all(|w| w == u || w == v)
    };
    let interior: Vec<usize> = (0..n)
        .filter(|&v| v != g.source() && v != g.sink())
        .collect();
    let mut parent: Vec<usize> = (0..n).collect();
    for (i, &u) in interior.iter().enumerate() {
        for &v in &interior[i + 1..] {
            if differ_only_in(&succ[u], &succ[v], u, v) && differ_only_in(&pred[u], &pred[v], u, v)
            {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut block_ids = IndexMap::new();
    for v in 0..n {
        let root = find(&mut parent, v);
        block_ids.entry(root).or_insert_with(Vec::new).push(v);
    }
    let blocks: Vec<Vec<usize>> = block_ids.into_values().collect();
    let p = CongruencePartition::from_blocks(n, blocks).expect("components partition V");
    match validate_partition(g, &p) {
        Ok(report) if report.is_valid() => p,
        _ => CongruencePartition::singletons(n),
    }
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// The graph on blocks: vertex `mu{i}` stands for block `i`.
#[derive(Debug, Clone)]
pub struct QuotientGraph {
    graph: StGraph,
    blocks: Vec<Vec<usize>>,
}

impl QuotientGraph {
    pub fn graph(&self) -> &StGraph {
        &self.graph
    }

    /// Original vertices merged into `mu{i}`.
    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    pub fn h(&self) -> usize {
        self.blocks.len()
    }
}

/// Merges every block into one vertex; `mu{i} -> mu{j}` whenever some edge
/// leaves block `i` for block `j`.
pub fn quotient_graph(g: &StGraph, p: &CongruencePartition) -> Result<QuotientGraph> {
    require_valid(g, p)?;
    let names: Vec<String> = (0..p.h()).map(|i| format!("mu{i}")).collect();
    let mut b = DagBuilder::default();
    for name in &names {
        b.vertex(name);
    }
    let mut seen = HashSet::new();
    for (u, v) in g.dag().edges() {
        let (bu, bv) = (p.block_of(u), p.block_of(v));
        if bu != bv && seen.insert((bu, bv)) {
            b.edge(&names[bu], &names[bv])?;
        }
    }
    let dag = b
        .build()
        .map_err(|e| Error::InvalidPartition(e.to_string()))?;
    let (source, sink) = (p.block_of(g.source()), p.block_of(g.sink()));
    if dag.sources() != [source] || dag.sinks() != [sink] {
        return Err(Error::InvalidPartition(
            "quotient is not an st-graph".into(),
        ));
    }
    Ok(QuotientGraph {
        graph: StGraph::from_parts(dag, source, sink, false, false),
        blocks: p.blocks().to_vec(),
    })
}

/// The subgraph induced by one block, closed with a virtual source `__s{i}`
/// and/or sink `__t{i}`.
#[derive(Debug, Clone)]
pub struct ModuleInducedGraph {
    graph: StGraph,
    original: Vec<Option<usize>>,
}

impl ModuleInducedGraph {
    pub fn graph(&self) -> &StGraph {
        &self.graph
    }

    /// Original vertex behind local vertex `v`; `None` for `__s{i}`/`__t{i}`.
    pub fn original(&self, v: usize) -> Option<usize> {
        self.original[v]
    }

    /// Number of real (non-virtual) members.
    pub fn members(&self) -> usize {
        self.original.iter().flatten().count()
    }
}

/// One st-graph per block. Every block gets a virtual source wired to its
/// internal sources unless it holds the graph's source, and a virtual sink
/// fed by its internal sinks unless it holds the graph's sink.
pub fn module_induced_graphs(
    g: &StGraph,
    p: &CongruencePartition,
) -> Result<Vec<ModuleInducedGraph>> {
    require_valid(g, p)?;
    let dag = g.dag();
    p.blocks()
        .iter()
        .enumerate()
        .map(|(i, block)| {
            let in_block = |v: usize| p.block_of(v) == i;
            let add_source = !block.contains(&g.source());
            let add_sink = !block.contains(&g.sink());
            let s_name = format!("__s{i}");
            let t_name = format!("__t{i}");

            let mut b = DagBuilder::default();
            let mut original = Vec::with_capacity(block.len() + 2);
            if add_source {
                b.vertex(&s_name);
                original.push(None);
            }
            for &v in block {
                b.vertex(dag.id(v));
                original.push(Some(v));
            }
            if add_sink {
                b.vertex(&t_name);
                original.push(None);
            }
            for &u in block {
                let internal_succ: Vec<usize> = dag
                    .successors(u)
                    .iter()
                    .copied()
                    .filter(|&w| in_block(w))
                    .collect();
                for &w in &internal_succ {
                    b.edge(dag.id(u), dag.id(w))?;
                }
                if add_source && !dag.predecessors(u).iter().any(|&w| in_block(w)) {
                    b.edge(&s_name, dag.id(u))?;
                }
                if add_sink && internal_succ.is_empty() {
                    b.edge(dag.id(u), &t_name)?;
                }
            }
            let local = b.build()?;
            let source = if add_source {
                0
            } else {
                local.require(dag.id(g.source()))?
            };
            let sink = if add_sink {
                local.n() - 1
            } else {
                local.require(dag.id(g.sink()))?
            };
            if local.sources() != [source] || local.sinks() != [sink] {
                return Err(Error::InvalidPartition(format!(
                    "block {i} does not induce an st-graph"
                )));
            }
            Ok(ModuleInducedGraph {
                graph: StGraph::from_parts(local, source, sink, add_source, add_sink),
                original,
            })
        })
        .collect()
}

/// Widths of the quotient (`widths[0]`) and of every module graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeckProfile {
    pub widths: Vec<usize>,
    /// Maximum of `widths`: the dimension the modular drawing achieves.
    pub w_n: usize,
    /// Largest vertex count among the quotient (`h`) and the blocks.
    pub rho: usize,
    /// Largest width among the graphs with `rho` vertices.
    pub w_rho: usize,
}

pub fn dimensional_neck(quotient: &QuotientGraph, members: &[ModuleInducedGraph]) -> NeckProfile {
    let sized: Vec<(usize, usize)> = std::iter::once((quotient.h(), width(quotient.graph())))
        .chain(members.iter().map(|m| (m.members(), width(m.graph()))))
        .collect();
    let widths: Vec<usize> = sized.iter().map(|&(_, w)| w).collect();
    let w_n = widths.iter().copied().max().unwrap_or(0);
    let rho = sized.iter().map(|&(n, _)| n).max().unwrap_or(0);
    let w_rho = sized
        .iter()
        .filter(|&&(n, _)| n == rho)
        .map(|&(_, w)| w)
        .max()
        .unwrap_or(0);
    NeckProfile {
        widths,
        w_n,
        rho,
        w_rho,
    }
}

/// Draws every graph with its minimum decomposition padded with `(s, t)`
/// channels up to the largest width among them, so all drawings share one
/// dimension.
pub fn drawings_computation(graphs: &[&StGraph]) -> Vec<DominanceDrawing> {
    let decompositions: Vec<_> = graphs
        .iter()
        .map(|g| min_channel_decomposition(g))
        .collect();
    let w_n = decompositions.iter().map(|d| d.k()).max().unwrap_or(0);
    graphs
        .iter()
        .zip(&decompositions)
        .map(|(g, d)| {
            let padded = pad_decomposition(d, w_n).expect("w_n is the maximum size");
            let ctc = build_ctc(g, &padded).expect("padded minimum decomposition is valid");
            kd_draw(g, &padded, &ctc).expect("closure matches decomposition")
        })
        .collect()
}

/// Makes room in the quotient drawing for the module drawings.
///
/// In every dimension `g`, `mu_j` moves up by the extent of every module
/// `i` that sits strictly below it, or level with it and reaches it. The
/// sums are taken over the original coordinates, which is the closed form
/// of applying the pairwise shifts one after another.
pub fn shifter(
    quotient: &DominanceDrawing,
    members: &[DominanceDrawing],
    quotient_reach: &ReachMatrix,
) -> Result<DominanceDrawing> {
    let h = quotient.len();
    if members.len() != h {
        return Err(Error::DimensionMismatch {
            expected: h,
            found: members.len(),
        });
    }
    if quotient_reach.n() != h {
        return Err(Error::DimensionMismatch {
            expected: h,
            found: quotient_reach.n(),
        });
    }
    let k = quotient.k();
    if let Some(m) = members.iter().find(|m| m.k() != k) {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: m.k(),
        });
    }
    let extents: Vec<Vec<i64>> = members
        .iter()
        .map(|m| (0..k).map(|g| m.extent(g)).collect())
        .collect();
    let point = |i: usize| quotient.get_index(i).expect("index in range").1;

    let mut coords = IndexMap::with_capacity(h);
    for j in 0..h {
        let (id, pj) = quotient.get_index(j).expect("index in range");
        let shifted = (0..k)
            .map(|g| {
                let shift: i64 = (0..h)
                    .filter(|&i| i != j)
                    .filter(|&i| {
                        let pi = point(i);
                        pi[g] < pj[g] || (pi[g] == pj[g] && quotient_reach.reaches(i, j))
                    })
                    .map(|i| extents[i][g])
                    .sum();
                pj[g] + shift
            })
            .collect();
        coords.insert(id.to_owned(), shifted);
    }
    DominanceDrawing::new(k, coords, Provenance::Nd)
}

/// Full modular pipeline: quotient and module graphs, common-dimension
/// drawings, shifting, then every vertex placed at its module's shifted
/// origin plus its coordinates inside the module drawing. Virtual module
/// terminals are not part of the result.
pub fn nd_draw(g: &StGraph, p: &CongruencePartition) -> Result<DominanceDrawing> {
    let quotient = quotient_graph(g, p)?;
    let members = module_induced_graphs(g, p)?;
    let graphs: Vec<&StGraph> = std::iter::once(quotient.graph())
        .chain(members.iter().map(ModuleInducedGraph::graph))
        .collect();
    let drawings = drawings_computation(&graphs);
    let reach = quotient.graph().dag().transitive_closure();
    let origin = shifter(&drawings[0], &drawings[1..], &reach)?;
    let k = origin.k();

    let mut local = vec![(0usize, 0usize); g.n()];
    for (i, m) in members.iter().enumerate() {
        for v in 0..m.graph().n() {
            if let Some(orig) = m.original(v) {
                local[orig] = (i, v);
            }
        }
    }
    let dag = g.dag();
    let mut coords = IndexMap::with_capacity(g.n());
    for (v, &(i, lv)) in local.iter().enumerate() {
        let base = origin
            .get_index(i)
            .expect("one quotient vertex per block")
            .1;
        let inner = drawings[i + 1]
            .get_index(lv)
            .expect("member drawing covers its graph")
            .1;
        let point = base.iter().zip(inner).map(|(a, b)| a + b).collect();
        coords.insert(dag.id(v).to_owned(), point);
    }
    DominanceDrawing::new(k, coords, Provenance::Nd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::draw::{draw_kd, verify_dominance};
    use crate::graph::{parse_edge_list, to_st_graph};

    const MODG: &str = "s a\ns b\ns c\na t\nb t\nc t";
    const DIAMOND: &str = "s a\ns b\na t\nb t";

    fn st(text: &str) -> StGraph {
        to_st_graph(parse_edge_list(text).unwrap())
    }

    fn partition(g: &StGraph, blocks: &[&[&str]]) -> CongruencePartition {
        let blocks: Vec<Vec<&str>> = blocks.iter().map(|b| b.to_vec()).collect();
        CongruencePartition::from_ids(g, &blocks).unwrap()
    }

    fn ids(g: &StGraph, p: &CongruencePartition) -> Vec<Vec<String>> {
        p.to_json(g, true).blocks
    }

    #[test]
    fn partition_construction_errors() {
        assert!(matches!(
            CongruencePartition::from_blocks(3, vec![vec![0, 1], vec![1, 2]]),
            Err(Error::NotAPartition(_))
        ));
        assert!(matches!(
            CongruencePartition::from_blocks(3, vec![vec![0, 1]]),
            Err(Error::NotAPartition(_))
        ));
        assert!(matches!(
            CongruencePartition::from_blocks(2, vec![vec![0, 1], vec![]]),
            Err(Error::NotAPartition(_))
        ));
    }

    #[test]
    fn validate_examples() {
        let g = st(MODG);
        let singles = CongruencePartition::singletons(g.n());
        assert!(validate_partition(&g, &singles).unwrap().is_valid());
        let p = partition(&g, &[&["s"], &["a", "b"], &["c"], &["t"]]);
        assert!(validate_partition(&g, &p).unwrap().is_valid());

        let d = st(DIAMOND);
        let p = partition(&d, &[&["s", "a"], &["b"], &["t"]]);
        let report = validate_partition(&d, &p).unwrap();
        assert_eq!(
            report.violations,
            vec![PartitionViolation {
                block: 0,
                u: "s".into(),
                v: "a".into(),
                witness: "b".into(),
                side: NeighborSide::Successor,
            }]
        );
        assert!(matches!(
            validate_partition(&d, &CongruencePartition::singletons(3)),
            Err(Error::NotAPartition(_))
        ));
    }

    #[test]
    fn finder_examples() {
        let g = st("s v\nv t");
        assert_eq!(
            ids(&g, &find_congruence_partition(&g)),
            [["s"], ["v"], ["t"]]
        );
        let g = st(MODG);
        assert_eq!(
            ids(&g, &find_congruence_partition(&g)),
            vec![vec!["s"], vec!["a", "b", "c"], vec!["t"]]
        );
        // Crossing "N" shape a->c, a->d, b->d has no nontrivial module.
        let g = st("s a\ns b\na c\na d\nb d\nc t\nd t");
        let p = find_congruence_partition(&g);
        assert_eq!(p.h(), g.n());
    }

    #[test]
    fn quotient_examples() {
        let g = st(MODG);
        let p = partition(&g, &[&["s"], &["a", "b"], &["c"], &["t"]]);
        let q = quotient_graph(&g, &p).unwrap();
        let edges: Vec<(&str, &str)> = q
            .graph()
            .dag()
            .edges()
            .map(|(u, v)| (q.graph().dag().id(u), q.graph().dag().id(v)))
            .collect();
        assert_eq!(
            edges,
            [
                ("mu0", "mu1"),
                ("mu0", "mu2"),
                ("mu1", "mu3"),
                ("mu2", "mu3")
            ]
        );
        assert_eq!(q.block(1), &[1, 2]);

        let singles = CongruencePartition::singletons(g.n());
        let q = quotient_graph(&g, &singles).unwrap();
        assert_eq!(q.graph().dag().edge_count(), g.dag().edge_count());

        let d = st(DIAMOND);
        let bad = partition(&d, &[&["s", "a"], &["b"], &["t"]]);
        assert!(matches!(
            quotient_graph(&d, &bad),
            Err(Error::InvalidPartition(_))
        ));
        assert!(matches!(
            module_induced_graphs(&d, &bad),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn module_graph_examples() {
        let g = st(MODG);
        let p = partition(&g, &[&["s"], &["a", "b"], &["c"], &["t"]]);
        let members = module_induced_graphs(&g, &p).unwrap();
        let edge_names = |m: &ModuleInducedGraph| -> Vec<(String, String)> {
            let d = m.graph().dag();
            d.edges()
                .map(|(u, v)| (d.id(u).to_owned(), d.id(v).to_owned()))
                .collect()
        };
        let pair = |a: &str, b: &str| (a.to_owned(), b.to_owned());
        assert_eq!(edge_names(&members[0]), [pair("s", "__t0")]);
        assert_eq!(
            edge_names(&members[1]),
            [
                pair("__s1", "a"),
                pair("__s1", "b"),
                pair("a", "__t1"),
                pair("b", "__t1")
            ]
        );
        assert_eq!(
            edge_names(&members[2]),
            [pair("__s2", "c"), pair("c", "__t2")]
        );
        assert_eq!(edge_names(&members[3]), [pair("__s3", "t")]);
        assert!(!members[0].graph().has_virtual_source());
        assert!(members[1].graph().has_virtual_source() && members[1].graph().has_virtual_sink());
        assert_eq!(members[1].members(), 2);
        assert_eq!(members[1].original(0), None);
        assert_eq!(members[1].original(1), Some(1));
    }

    #[test]
    fn neck_examples() {
        let g = st(MODG);
        let p = partition(&g, &[&["s"], &["a", "b"], &["c"], &["t"]]);
        let q = quotient_graph(&g, &p).unwrap();
        let members = module_induced_graphs(&g, &p).unwrap();
        let neck = dimensional_neck(&q, &members);
        assert_eq!(neck.widths, [2, 1, 2, 1, 1]);
        assert_eq!((neck.w_n, neck.rho, neck.w_rho), (2, 4, 2));
        assert_eq!(width(&g), 3);

        let singles = CongruencePartition::singletons(g.n());
        let q = quotient_graph(&g, &singles).unwrap();
        let members = module_induced_graphs(&g, &singles).unwrap();
        assert_eq!(dimensional_neck(&q, &members).w_n, 3);
    }

    #[test]
    fn drawings_computation_examples() {
        let g = st(MODG);
        let p = partition(&g, &[&["s"], &["a", "b"], &["c"], &["t"]]);
        let q = quotient_graph(&g, &p).unwrap();
        let members = module_induced_graphs(&g, &p).unwrap();
        let graphs: Vec<&StGraph> = std::iter::once(q.graph())
            .chain(members.iter().map(|m| m.graph()))
            .collect();
        let drawings = drawings_computation(&graphs);
        assert!(drawings.iter().all(|d| d.k() == 2));

        let ab = &drawings[2];
        assert_eq!(ab.get("__s1").unwrap(), [0, 0]);
        assert_eq!(ab.get("a").unwrap(), [1, 2]);
        assert_eq!(ab.get("b").unwrap(), [2, 1]);
        assert_eq!(ab.get("__t1").unwrap(), [2, 2]);

        let c = &drawings[3];
        assert_eq!(c.get("c").unwrap(), [1, 1]);
        assert_eq!(c.get("__t2").unwrap(), [2, 1]);

        // Block {s} is the single edge s -> __t0.
        let s = &drawings[1];
        assert_eq!(s.get("s").unwrap(), [0, 0]);
        assert_eq!(s.get("__t0").unwrap(), [1, 1]);

        for (graph, drawing) in graphs.iter().zip(&drawings) {
            assert!(verify_dominance(graph.dag(), drawing).unwrap().is_empty());
        }
    }

    #[test]
    fn shifter_examples() {
        let g = st(MODG);
        let p = partition(&g, &[&["s"], &["a", "b"], &["c"], &["t"]]);
        let q = quotient_graph(&g, &p).unwrap();
        let members = module_induced_graphs(&g, &p).unwrap();
        let graphs: Vec<&StGraph> = std::iter::once(q.graph())
            .chain(members.iter().map(|m| m.graph()))
            .collect();
        let drawings = drawings_computation(&graphs);
        let quotient = &drawings[0];
        assert_eq!(quotient.get("mu0").unwrap(), [0, 0]);
        assert_eq!(quotient.get("mu1").unwrap(), [1, 2]);
        assert_eq!(quotient.get("mu2").unwrap(), [2, 1]);
        assert_eq!(quotient.get("mu3").unwrap(), [2, 2]);

        let reach = q.graph().dag().transitive_closure();
        let shifted = shifter(quotient, &drawings[1..], &reach).unwrap();
        // Extents: {s} (1,1), {a,b} (2,2), {c} (2,1), {t} (1,1).
        // mu3 in dimension 1: level with mu1 and reached from it, above
        // mu0 and mu2, so it moves by 1 + 2 + 1.
        assert_eq!(shifted.get("mu3").unwrap()[1], 2 + 1 + 2 + 1);
        assert_eq!(shifted.get("mu0").unwrap(), [0, 0]);
        // mu2 in dimension 0: level with mu3 but not reached from it.
        assert_eq!(shifted.get("mu2").unwrap()[0], 2 + 1 + 2);

        let single = DominanceDrawing::new(
            2,
            [("mu0".to_owned(), vec![0, 0])].into_iter().collect(),
            Provenance::Kd,
        )
        .unwrap();
        let mut b = DagBuilder::default();
        b.vertex("mu0");
        let r1 = b.build().unwrap().transitive_closure();
        let unchanged = shifter(&single, &drawings[1..2], &r1).unwrap();
        assert_eq!(unchanged.get("mu0").unwrap(), [0, 0]);

        assert!(matches!(
            shifter(quotient, &drawings[1..3], &reach),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn nd_draw_reduces_dimension() {
        let g = st(MODG);
        let p = partition(&g, &[&["s"], &["a", "b"], &["c"], &["t"]]);
        let nd = nd_draw(&g, &p).unwrap();
        assert_eq!(nd.k(), 2);
        assert_eq!(nd.provenance(), Provenance::Nd);
        assert_eq!(nd.ids().collect::<Vec<_>>(), ["s", "a", "b", "c", "t"]);
        assert!(verify_dominance(g.dag(), &nd).unwrap().is_empty());
        assert_eq!(draw_kd(&g).k(), 3);
    }

    #[test]
    fn nd_draw_with_singletons_keeps_strict_order() {
        let g = st("s a\ns b\na c\nb c\nc d\nc e\nd t\ne t\na e");
        let kd = draw_kd(&g);
        let nd = nd_draw(&g, &CongruencePartition::singletons(g.n())).unwrap();
        assert_eq!(nd.k(), kd.k());
        assert!(verify_dominance(g.dag(), &nd).unwrap().is_empty());
        for (u, pu) in kd.iter() {
            for (v, pv) in kd.iter() {
                for dim in 0..kd.k() {
                    if pu[dim] < pv[dim] {
                        assert!(nd.get(u).unwrap()[dim] < nd.get(v).unwrap()[dim]);
                    }
                }
            }
        }
    }

    #[test]
    fn nd_draw_whole_graph_block() {
        let g = st(DIAMOND);
        let p = CongruencePartition::from_blocks(g.n(), vec![(0..g.n()).collect()]).unwrap();
        let nd = nd_draw(&g, &p).unwrap();
        assert!(verify_dominance(g.dag(), &nd).unwrap().is_empty());
        assert_eq!(nd.k(), 2);
    }
}

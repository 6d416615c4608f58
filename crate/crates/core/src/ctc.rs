//! Compressed transitive closure: for every channel `C_i` and vertex `v`,
//! the position in `C_i` of the lowest vertex of `C_i` that `v` reaches.
//!
//! The table is `k × n` and answers reachability with one lookup: `u`
//! reaches `v = (i, j)` exactly when `u`'s projection on `C_i` sits at a
//! position `<= j`.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::channels::{validate_decomposition, ChannelDecomposition};
use crate::error::{Error, Result};
use crate::graph::StGraph;

#[derive(Debug, Clone)]
pub struct CompressedTransitiveClosure<'a> {
    graph: &'a StGraph,
    decomposition: &'a ChannelDecomposition,
    // table[i][v] = position of Proj_{C_i}(v) in C_i
    table: Vec<Vec<usize>>,
    edge_visits: usize,
}

/// Builds the projection table with one reverse-topological sweep per
/// channel. Each sweep reads every out-edge of every vertex outside the
/// channel at most once, so construction costs at most `k·m` edge visits.
pub fn build_ctc<'a>(
    g: &'a StGraph,
    d: &'a ChannelDecomposition,
) -> Result<CompressedTransitiveClosure<'a>> {
    let report = validate_decomposition(g, d);
    if !report.is_valid() {
        return Err(Error::InvalidDecomposition(format!(
            "{:?}",
            report.violations
        )));
    }
    let dag = g.dag();
    let n = g.n();
    let reverse_topo: Vec<usize> = dag.topological_order().into_iter().rev().collect();
    let mut table = Vec::with_capacity(d.k());
    let mut edge_visits = 0;
    for i in 0..d.k() {
        let mut row = vec![usize::MAX; n];
        for &v in &reverse_topo {
            row[v] = match d.position_in(v, i) {
                Some(j) => j,
                None => {
                    edge_visits += dag.successors(v).len();
                    dag.successors(v)
                        .iter()
                        .map(|&w| row[w])
                        .min()
                        .expect("only the sink has no successors and it is in every channel")
                }
            };
        }
        table.push(row);
    }
    Ok(CompressedTransitiveClosure {
        graph: g,
        decomposition: d,
        table,
        edge_visits,
    })
}

impl<'a> CompressedTransitiveClosure<'a> {
    pub fn k(&self) -> usize {
        self.table.len()
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &'a StGraph {
        self.graph
    }

    pub fn decomposition(&self) -> &'a ChannelDecomposition {
        self.decomposition
    }

    /// Out-edges read while building the table.
    pub fn edge_visits(&self) -> usize {
        self.edge_visits
    }

    /// Position of `Proj_{C_i}(v)` by vertex index.
    #[inline]
    pub fn position(&self, v: usize, i: usize) -> usize {
        self.table[i][v]
    }

    /// `(i, j)` of the projection of vertex `id` onto channel `i`.
    pub fn projection(&self, id: &str, i: usize) -> Result<(usize, usize)> {
        let v = self.graph.dag().require(id)?;
        if i >= self.k() {
            return Err(Error::ChannelOutOfRange {
                index: i,
                k: self.k(),
            });
        }
        Ok((i, self.table[i][v]))
    }

    /// Reachability by vertex index; reflexive.
    pub fn reaches(&self, u: usize, v: usize) -> bool {
        // Source and sink are in every channel; channel 0 is as good as any.
        let (i, j) = self.decomposition.locate(v).unwrap_or((0, 0));
        self.table[i][u] <= j
    }

    pub fn reach_ctc(&self, u: &str, v: &str) -> Result<bool> {
        let dag = self.graph.dag();
        Ok(self.reaches(dag.require(u)?, dag.require(v)?))
    }

    pub fn to_json(&self, include_virtual: bool) -> CtcJson {
        let dag = self.graph.dag();
        let proj = (0..self.n())
            .filter(|&v| include_virtual || !self.graph.is_virtual(v))
            .map(|v| {
                let row = self.table.iter().map(|r| r[v]).collect();
                (dag.id(v).to_owned(), row)
            })
            .collect();
        CtcJson { k: self.k(), proj }
    }
}

/// Debug dump: `{"k": int, "proj": {"vertex": [j_0, ..., j_{k-1}]}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CtcJson {
    pub k: usize,
    pub proj: IndexMap<String, Vec<usize>>,
}

/// Free-function form of [`CompressedTransitiveClosure::reach_ctc`].
pub fn reach_ctc(ctc: &CompressedTransitiveClosure<'_>, u: &str, v: &str) -> Result<bool> {
    ctc.reach_ctc(u, v)
}

/// Free-function form of [`CompressedTransitiveClosure::projection`].
pub fn projection(
    ctc: &CompressedTransitiveClosure<'_>,
    v: &str,
    i: usize,
) -> Result<(usize, usize)> {
    ctc.projection(v, i)
}

//! DAG representation, st-augmentation, deterministic topological ordering,
//! and the brute-force oracles the rest of the crate is checked against.
//!
//! Vertices are opaque string tokens. Internally every vertex gets a dense
//! index in first-appearance order and all algorithms work on indices.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet, VecDeque};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Id of the vertex added by [`to_st_graph`] in front of all sources.
pub const VIRTUAL_SOURCE: &str = "__S";
/// Id of the vertex added by [`to_st_graph`] behind all sinks.
pub const VIRTUAL_SINK: &str = "__T";
/// Prefix reserved for vertices the library synthesizes.
pub const RESERVED_PREFIX: &str = "__";
/// Largest graph [`max_antichain_bruteforce`] accepts by default.
pub const DEFAULT_ORACLE_LIMIT: usize = 20;

/// An immutable directed acyclic graph.
#[derive(Debug, Clone)]
pub struct Dag {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Dag {
    pub fn builder() -> DagBuilder {
        DagBuilder::default()
    }

    /// Builds a DAG from `(from, to)` pairs; vertices are numbered in
    /// first-appearance order.
    pub fn from_edges<'a, I>(edges: I) -> Result<Dag>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut b = DagBuilder::default();
        for (u, v) in edges {
            b.edge(u, v)?;
        }
        b.build()
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn id(&self, v: usize) -> &str {
        &self.ids[v]
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn require(&self, id: &str) -> Result<usize> {
        self.index_of(id)
            .ok_or_else(|| Error::UnknownVertex(id.to_owned()))
    }

    /// Direct successors of `v`, sorted by index.
    pub fn successors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    /// Direct predecessors of `v`, sorted by index.
    pub fn predecessors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, succ)| succ.iter().map(move |&v| (u, v)))
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&v| self.in_adj[v].is_empty())
            .collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&v| self.out_adj[v].is_empty())
            .collect()
    }

    /// Topological order with ties broken by lexicographic vertex id.
    pub fn topological_order(&self) -> Vec<usize> {
        kahn(&self.ids, &self.out_adj, &self.in_adj).expect("Dag is acyclic by construction")
    }

    pub fn topological_ids(&self) -> Vec<&str> {
        self.topological_order()
            .into_iter()
            .map(|v| self.id(v))
            .collect()
    }

    /// Reflexive transitive closure by a reverse-topological bitset sweep.
    pub fn transitive_closure(&self) -> ReachMatrix {
        let n = self.n();
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for &v in self.topological_order().iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(v);
            for &w in &self.out_adj[v] {
                row.union_with(&rows[w]);
            }
            rows[v] = row;
        }
        ReachMatrix { rows }
    }
}

/// Incremental constructor for [`Dag`]; acyclicity is checked in
/// [`DagBuilder::build`].
#[derive(Debug, Default, Clone)]
pub struct DagBuilder {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
    seen: HashSet<(usize, usize)>,
}

impl DagBuilder {
    /// Registers `id` (no-op if present) and returns its index.
    pub fn vertex(&mut self, id: &str) -> usize {
        if let Some(&v) = self.index.get(id) {
            return v;
        }
        let v = self.ids.len();
        self.ids.push(id.to_owned());
        self.index.insert(id.to_owned(), v);
        v
    }

    pub fn edge(&mut self, from: &str, to: &str) -> Result<&mut Self> {
        if from == to {
            return Err(Error::SelfLoop {
                vertex: from.to_owned(),
            });
        }
        let u = self.vertex(from);
        let v = self.vertex(to);
        if !self.seen.insert((u, v)) {
            return Err(Error::DuplicateEdge {
                from: from.to_owned(),
                to: to.to_owned(),
            });
        }
        self.edges.push((u, v));
        Ok(self)
    }

    pub fn build(self) -> Result<Dag> {
        let n = self.ids.len();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        out_adj.iter_mut().for_each(|a| a.sort_unstable());
        in_adj.iter_mut().for_each(|a| a.sort_unstable());
        if let Err(v) = kahn(&self.ids, &out_adj, &in_adj) {
            return Err(Error::CycleDetected {
                vertex: self.ids[v].clone(),
            });
        }
        Ok(Dag {
            ids: self.ids,
            index: self.index,
            out_adj,
            in_adj,
            edge_count: self.edges.len(),
        })
    }
}

/// Kahn's algorithm with a lexicographic frontier. On failure returns a
/// vertex that lies on a cycle.
fn kahn(
    ids: &[String],
    out_adj: &[Vec<usize>],
    in_adj: &[Vec<usize>],
) -> Result<Vec<usize>, usize> {
    let n = ids.len();
    let mut indeg: Vec<usize> = in_adj.iter().map(Vec::len).collect();
    let mut frontier: BinaryHeap<Reverse<(&str, usize)>> = (0..n)
        .filter(|&v| indeg[v] == 0)
        .map(|v| Reverse((ids[v].as_str(), v)))
        .collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse((_, v))) = frontier.pop() {
        order.push(v);
        for &w in &out_adj[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                frontier.push(Reverse((ids[w].as_str(), w)));
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }
    // Every leftover vertex has a leftover predecessor; walking backwards
    // must revisit a vertex, and that vertex is on a cycle.
    let mut seen = vec![false; n];
    let mut v = (0..n).find(|&v| indeg[v] > 0).expect("leftover vertex");
    while !seen[v] {
        seen[v] = true;
        v = *in_adj[v]
            .iter()
            .find(|&&u| indeg[u] > 0)
            .expect("leftover vertex has a leftover predecessor");
    }
    Err(v)
}

/// Parses the edge-list text format: one `u v` pair per line, `#` comment
/// lines and blank lines ignored.
pub fn parse_edge_list(text: &str) -> Result<Dag> {
    let mut b = DagBuilder::default();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (Some(u), Some(v), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(Error::MalformedLine { line: lineno + 1 });
        };
        for id in [u, v] {
            if id.starts_with(RESERVED_PREFIX) {
                return Err(Error::ReservedId { id: id.to_owned() });
            }
        }
        b.edge(u, v)?;
    }
    b.build()
}

/// A DAG with a unique source and a unique sink.
#[derive(Debug, Clone)]
pub struct StGraph {
    dag: Dag,
    source: usize,
    sink: usize,
    virtual_source: bool,
    virtual_sink: bool,
}

impl StGraph {
    /// Caller guarantees `source` and `sink` are the unique source and sink.
    pub(crate) fn from_parts(
        dag: Dag,
        source: usize,
        sink: usize,
        virtual_source: bool,
        virtual_sink: bool,
    ) -> StGraph {
        debug_assert_eq!(dag.sources(), vec![source]);
        debug_assert_eq!(dag.sinks(), vec![sink]);
        StGraph {
            dag,
            source,
            sink,
            virtual_source,
            virtual_sink,
        }
    }

    pub fn dag(&self) -> &Dag {
        &self.dag
    }

    pub fn into_dag(self) -> Dag {
        self.dag
    }

    pub fn n(&self) -> usize {
        self.dag.n()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn has_virtual_source(&self) -> bool {
        self.virtual_source
    }

    pub fn has_virtual_sink(&self) -> bool {
        self.virtual_sink
    }

    /// True for `__S`/`__T` added by augmentation.
    pub fn is_virtual(&self, v: usize) -> bool {
        (self.virtual_source && v == self.source) || (self.virtual_sink && v == self.sink)
    }
}

/// Adds a virtual source `__S` and/or sink `__T` where `g` lacks a unique
/// one. A DAG that already is an st-graph is returned unchanged.
pub fn to_st_graph(g: Dag) -> StGraph {
    let sources = g.sources();
    let sinks = g.sinks();
    if sources.len() == 1 && sinks.len() == 1 {
        return StGraph {
            source: sources[0],
            sink: sinks[0],
            dag: g,
            virtual_source: false,
            virtual_sink: false,
        };
    }
    let add_source = sources.len() != 1;
    let add_sink = sinks.len() != 1;
    let mut b = DagBuilder::default();
    for id in g.ids() {
        b.vertex(id);
    }
    for (u, v) in g.edges() {
        b.edge(g.id(u), g.id(v)).expect("edges of a valid Dag");
    }
    let source = if add_source {
        let s = b.vertex(VIRTUAL_SOURCE);
        for &v in &sources {
            b.edge(VIRTUAL_SOURCE, g.id(v)).expect("fresh edge");
        }
        s
    } else {
        sources[0]
    };
    let sink = if add_sink {
        let t = b.vertex(VIRTUAL_SINK);
        for &v in &sinks {
            b.edge(g.id(v), VIRTUAL_SINK).expect("fresh edge");
        }
        t
    } else {
        sinks[0]
    };
    if g.is_empty() {
        b.edge(VIRTUAL_SOURCE, VIRTUAL_SINK).expect("fresh edge");
    }
    let dag = b.build().expect("augmenting a DAG keeps it acyclic");
    StGraph {
        dag,
        source,
        sink,
        virtual_source: add_source,
        virtual_sink: add_sink,
    }
}

/// Lexicographic-tie-break topological order, as vertex indices.
pub fn topological_order(g: &Dag) -> Vec<usize> {
    g.topological_order()
}

/// Reflexive reachability relation `r(u, v)` stored as bitset rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachMatrix {
    rows: Vec<FixedBitSet>,
}

impl ReachMatrix {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn reaches(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.reaches(u, v) || self.reaches(v, u)
    }

    /// Everything reachable from `u` (including `u`).
    pub fn row(&self, u: usize) -> &FixedBitSet {
        &self.rows[u]
    }

    /// Number of true entries, diagonal included.
    pub fn count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum()
    }

    /// All ordered pairs `(u, v)` with `u != v` and `r(u, v)`.
    pub fn strict_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v != u).map(move |v| (u, v)))
    }
}

/// Reachability by an independent BFS from every vertex. O(n·m); used as
/// the ground truth in tests.
pub fn reach_oracle(g: &Dag) -> ReachMatrix {
    let n = g.n();
    let mut rows = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    for start in 0..n {
        let mut row = FixedBitSet::with_capacity(n);
        row.insert(start);
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for &w in g.successors(v) {
                if !row.put(w) {
                    queue.push_back(w);
                }
            }
        }
        rows.push(row);
    }
    ReachMatrix { rows }
}

/// A maximum antichain by exhaustive search, limited to
/// [`DEFAULT_ORACLE_LIMIT`] vertices.
pub fn max_antichain_bruteforce(g: &Dag) -> Result<Vec<usize>> {
    max_antichain_bruteforce_with_limit(g, DEFAULT_ORACLE_LIMIT)
}

pub fn max_antichain_bruteforce_with_limit(g: &Dag, limit: usize) -> Result<Vec<usize>> {
    let n = g.n();
    if n > limit {
        return Err(Error::TooLargeForOracle { n, limit });
    }
    let r = reach_oracle(g);
    let mut best = Vec::new();
    let mut current = Vec::new();
    extend_antichain(&r, 0, &mut current, &mut best);
    Ok(best)
}

fn extend_antichain(r: &ReachMatrix, next: usize, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    let n = r.n();
    if current.len() > best.len() {
        best.clone_from(current);
    }
    if next == n || current.len() + (n - next) <= best.len() {
        return;
    }
    if current.iter().all(|&u| !r.comparable(u, next)) {
        current.push(next);
        extend_antichain(r, next + 1, current, best);
        current.pop();
    }
    extend_antichain(r, next + 1, current, best);
}

//! Channel decompositions: chain covers of an st-graph in which the source
//! and the sink belong to every chain.
//!
//! A minimum decomposition has exactly as many channels as the width of the
//! graph, and its size is the dimension of the drawing built from it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ReachMatrix, StGraph};
use crate::matching::hopcroft_karp;

/// Ordered chains over vertex indices. Positions are 0-based: the source
/// sits at position 0 of every channel and the sink at the last position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChannelDecomposition {
    source: usize,
    sink: usize,
    channels: Vec<Vec<usize>>,
    // First occurrence of each vertex as (channel, position).
    membership: Vec<Option<(usize, usize)>>,
}

impl ChannelDecomposition {
    /// Wraps raw channels without checking them; use
    /// [`validate_decomposition`] to certify the result.
    pub fn from_channels(g: &StGraph, channels: Vec<Vec<usize>>) -> Result<Self> {
        let n = g.n();
        if let Some(&v) = channels.iter().flatten().find(|&&v| v >= n) {
            return Err(Error::InvalidDecomposition(format!(
                "vertex index {v} out of range (n = {n})"
            )));
        }
        let mut membership = vec![None; n];
        for (i, chain) in channels.iter().enumerate() {
            for (j, &v) in chain.iter().enumerate() {
                membership[v].get_or_insert((i, j));
            }
        }
        Ok(ChannelDecomposition {
            source: g.source(),
            sink: g.sink(),
            channels,
            membership,
        })
    }

    pub fn from_ids<S: AsRef<str>>(g: &StGraph, channels: &[Vec<S>]) -> Result<Self> {
        let chains = channels
            .iter()
            .map(|c| c.iter().map(|id| g.dag().require(id.as_ref())).collect())
            .collect::<Result<Vec<Vec<usize>>>>()?;
        Self::from_channels(g, chains)
    }

    /// Number of channels, i.e. the drawing dimension.
    pub fn k(&self) -> usize {
        self.channels.len()
    }

    pub fn channels(&self) -> &[Vec<usize>] {
        &self.channels
    }

    pub fn channel(&self, i: usize) -> &[usize] {
        &self.channels[i]
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    /// `(channel, position)` of `v`. The source and sink live in every
    /// channel; for them channel 0 is reported.
    pub fn locate(&self, v: usize) -> Option<(usize, usize)> {
        self.membership.get(v).copied().flatten()
    }

    /// Position of `v` inside channel `i`, if `v` belongs to it.
    pub fn position_in(&self, v: usize, i: usize) -> Option<usize> {
        let chain = &self.channels[i];
        if v == self.source {
            return (chain.first() == Some(&v)).then_some(0);
        }
        if v == self.sink {
            return (chain.last() == Some(&v)).then(|| chain.len() - 1);
        }
        match self.locate(v) {
            Some((c, j)) if c == i => Some(j),
            _ => None,
        }
    }

    pub fn to_json(&self, g: &StGraph, include_virtual: bool) -> DecompositionJson {
        let channels = self
            .channels
            .iter()
            .map(|c| {
                c.iter()
                    .filter(|&&v| include_virtual || !g.is_virtual(v))
                    .map(|&v| g.dag().id(v).to_owned())
                    .collect()
            })
            .collect();
        DecompositionJson {
            k: self.k(),
            channels,
        }
    }
}

/// Interchange form: `{"k": int, "channels": [[ids...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub k: usize,
    pub channels: Vec<Vec<String>>,
}

/// Minimum channel decomposition via a Dilworth chain cover.
///
/// The interior vertices (everything except the source and sink) are split
/// into left and right copies with an edge `u -> v` for every strict
/// reachability pair. A maximum matching links each vertex to its successor
/// in a chain; `n - |matching|` chains remain, which is the width. Every chain
/// is then closed with the source in front and the sink behind.
pub fn min_channel_decomposition(g: &StGraph) -> ChannelDecomposition {
    let (s, t) = (g.source(), g.sink());
    if s == t {
        return ChannelDecomposition::from_channels(g, vec![vec![s]]).expect("in range");
    }
    let closure = g.dag().transitive_closure();
    let interior: Vec<usize> = (0..g.n()).filter(|&v| v != s && v != t).collect();
    if interior.is_empty() {
        return ChannelDecomposition::from_channels(g, vec![vec![s, t]]).expect("in range");
    }
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in interior.iter().enumerate() {
        local[v] = i;
    }
    let adj: Vec<Vec<usize>> = interior
        .iter()
        .map(|&u| {
            closure
                .row(u)
                .ones()
                .filter(|&v| v != u && v != t)
                .map(|v| local[v])
                .collect()
        })
        .collect();
    let next = hopcroft_karp(&adj, interior.len());

    let mut has_pred = vec![false; interior.len()];
    for &v in next.iter().flatten() {
        has_pred[v] = true;
    }
    let channels = (0..interior.len())
        .filter(|&head| !has_pred[head])
        .map(|head| {
            let mut chain = vec![s];
            let mut cur = Some(head);
            while let Some(u) = cur {
                chain.push(interior[u]);
                cur = next[u];
            }
            chain.push(t);
            chain
        })
        .collect();
    ChannelDecomposition::from_channels(g, channels).expect("in range")
}

/// Width of the st-graph: size of a minimum channel decomposition.
pub fn width(g: &StGraph) -> usize {
    min_channel_decomposition(g).k()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionViolation {
    EmptyChannel {
        channel: usize,
    },
    MissingSource {
        channel: usize,
    },
    MissingSink {
        channel: usize,
    },
    /// Consecutive vertices `from`, `to` with no path `from ⇝ to`.
    NotAChain {
        channel: usize,
        from: usize,
        to: usize,
    },
    Uncovered {
        vertex: usize,
    },
    Duplicated {
        vertex: usize,
        occurrences: usize,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DecompositionReport {
    pub violations: Vec<DecompositionViolation>,
}

impl DecompositionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_decomposition(g: &StGraph, d: &ChannelDecomposition) -> DecompositionReport {
    validate_with(g, d, &g.dag().transitive_closure())
}

pub(crate) fn validate_with(
    g: &StGraph,
    d: &ChannelDecomposition,
    closure: &ReachMatrix,
) -> DecompositionReport {
    use DecompositionViolation::*;
    let (s, t) = (g.source(), g.sink());
    let mut violations = Vec::new();
    let mut occurrences = vec![0usize; g.n()];
    if d.k() == 0 {
        violations.push(EmptyChannel { channel: 0 });
    }
    for (i, chain) in d.channels().iter().enumerate() {
        if chain.is_empty() {
            violations.push(EmptyChannel { channel: i });
            continue;
        }
        if chain[0] != s {
            violations.push(MissingSource { channel: i });
        }
        if chain[chain.len() - 1] != t {
            violations.push(MissingSink { channel: i });
        }
        for pair in chain.windows(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || !closure.reaches(u, v) {
                violations.push(NotAChain {
                    channel: i,
                    from: u,
                    to: v,
                });
            }
        }
        for &v in chain {
            if v != s && v != t {
                occurrences[v] += 1;
            }
        }
    }
    for (v, &count) in occurrences.iter().enumerate() {
        if v == s || v == t {
            continue;
        }
        match count {
            0 => violations.push(Uncovered { vertex: v }),
            1 => {}
            c => violations.push(Duplicated {
                vertex: v,
                occurrences: c,
            }),
        }
    }
    DecompositionReport { violations }
}

/// Appends `(s, t)` dummy channels until the decomposition has `k_target`
/// channels.
pub fn pad_decomposition(
    d: &ChannelDecomposition,
    k_target: usize,
) -> Result<ChannelDecomposition> {
    if k_target < d.k() {
        return Err(Error::TargetSmallerThanSize {
            size: d.k(),
            target: k_target,
        });
    }
    let dummy = if d.source == d.sink {
        vec![d.source]
    } else {
        vec![d.source, d.sink]
    };
    let mut padded = d.clone();
    padded
        .channels
        .extend(std::iter::repeat_n(dummy, k_target - d.k()));
    Ok(padded)
}

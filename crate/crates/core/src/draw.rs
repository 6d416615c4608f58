//! Coordinate assignment: k-dimensional dominance drawings from a channel
//! decomposition, the distinct-coordinates transform, and a brute-force
//! verifier.
//!
//! In a dominance drawing `u` reaches `v` exactly when every coordinate of
//! `u` is `<=` the matching coordinate of `v`.

use std::collections::HashMap;
use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::channels::{min_channel_decomposition, validate_decomposition, ChannelDecomposition};
use crate::ctc::{build_ctc, CompressedTransitiveClosure};
use crate::error::{Error, Result};
use crate::graph::{reach_oracle, Dag, StGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Kd,
    Nd,
    Distinct,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Kd => "kd",
            Provenance::Nd => "nd",
            Provenance::Distinct => "distinct",
        })
    }
}

/// Per-vertex integer coordinate vectors of a common length `k`.
///
/// Serializes as `{"k": int, "coords": {"vertex": [int; k]}, "provenance": ...}`
/// with vertices in insertion order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDrawing")]
pub struct DominanceDrawing {
    k: usize,
    coords: IndexMap<String, Vec<i64>>,
    provenance: Provenance,
}

#[derive(Deserialize)]
struct RawDrawing {
    k: usize,
    coords: IndexMap<String, Vec<i64>>,
    provenance: Provenance,
}

impl TryFrom<RawDrawing> for DominanceDrawing {
    type Error = Error;

    fn try_from(raw: RawDrawing) -> Result<Self> {
        DominanceDrawing::new(raw.k, raw.coords, raw.provenance)
    }
}

impl DominanceDrawing {
    pub fn new(
        k: usize,
        coords: IndexMap<String, Vec<i64>>,
        provenance: Provenance,
    ) -> Result<Self> {
        if let Some(bad) = coords.values().find(|c| c.len() != k) {
            return Err(Error::DimensionMismatch {
                expected: k,
                found: bad.len(),
            });
        }
        Ok(DominanceDrawing {
            k,
            coords,
            provenance,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn get(&self, id: &str) -> Option<&[i64]> {
        self.coords.get(id).map(Vec::as_slice)
    }

    /// Coordinates of the `i`-th vertex in insertion order.
    pub fn get_index(&self, i: usize) -> Option<(&str, &[i64])> {
        self.coords
            .get_index(i)
            .map(|(id, c)| (id.as_str(), c.as_slice()))
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.coords.get_index_of(id)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &[i64])> {
        self.coords
            .iter()
            .map(|(id, c)| (id.as_str(), c.as_slice()))
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.coords.keys().map(String::as_str)
    }

    /// Largest value in dimension `g` (0 for an empty drawing).
    pub fn extent(&self, g: usize) -> i64 {
        self.coords.values().map(|c| c[g]).max().unwrap_or(0)
    }

    /// Keeps only vertices for which `keep` returns true.
    pub fn retain(mut self, mut keep: impl FnMut(&str) -> bool) -> Self {
        self.coords.retain(|id, _| keep(id));
        self
    }

    /// Drops the virtual source/sink of `g` from the drawing.
    pub fn without_virtual(self, g: &StGraph) -> Self {
        let dag = g.dag();
        self.retain(|id| dag.index_of(id).is_none_or(|v| !g.is_virtual(v)))
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("drawing serializes")
    }
}

/// `a ⪯ b`: every coordinate of `a` is at most the matching one of `b`.
#[inline]
pub fn dominates(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// kD-Draw. A vertex `v` at position `j` of channel `C_i` gets `D_i(v) = j`;
/// every other coordinate `D_h(v)` is the position of `v`'s projection on
/// `C_h`. With two channels this is the classic two-dimensional drawing.
pub fn kd_draw(
    g: &StGraph,
    d: &ChannelDecomposition,
    ctc: &CompressedTransitiveClosure<'_>,
) -> Result<DominanceDrawing> {
    if ctc.k() != d.k() || ctc.n() != g.n() || ctc.decomposition() != d {
        return Err(Error::InvalidDecomposition(
            "compressed closure was built from a different decomposition".into(),
        ));
    }
    let k = d.k();
    let dag = g.dag();
    let mut coords = IndexMap::with_capacity(g.n());
    for v in 0..g.n() {
        let mut point = vec![0i64; k];
        let own = if v == g.source() || v == g.sink() {
            None
        } else {
            d.locate(v)
        };
        if let Some((i, j)) = own {
            point[i] = j as i64;
        }
        for (h, x) in point.iter_mut().enumerate() {
            if own.is_none_or(|(i, _)| i != h) {
                *x = ctc.position(v, h) as i64;
            }
        }
        coords.insert(dag.id(v).to_owned(), point);
    }
    DominanceDrawing::new(k, coords, Provenance::Kd)
}

/// Minimum decomposition, compressed closure and kD-Draw in one call.
pub fn draw_kd(g: &StGraph) -> DominanceDrawing {
    let d = min_channel_decomposition(g);
    debug_assert!(validate_decomposition(g, &d).is_valid());
    let ctc = build_ctc(g, &d).expect("minimum decomposition is valid");
    kd_draw(g, &d, &ctc).expect("closure matches decomposition")
}

/// Re-ranks every dimension by `(old coordinate, topological position)` so
/// each dimension becomes a permutation of `0..n` and a linear extension of
/// reachability. Ties between comparable vertices are broken along the
/// topological order, so dominance is preserved.
pub fn make_distinct<S: AsRef<str>>(
    drawing: &DominanceDrawing,
    topo: &[S],
) -> Result<DominanceDrawing> {
    let rank: HashMap<&str, usize> = topo
        .iter()
        .enumerate()
        .map(|(i, id)| (id.as_ref(), i))
        .collect();
    let topo_pos = drawing
        .ids()
        .map(|id| {
            rank.get(id)
                .copied()
                .ok_or_else(|| Error::UnknownVertex(id.to_owned()))
        })
        .collect::<Result<Vec<usize>>>()?;

    let n = drawing.len();
    let mut out: Vec<Vec<i64>> = vec![vec![0; drawing.k()]; n];
    let mut order: Vec<usize> = (0..n).collect();
    #[allow(clippy::needless_range_loop)]
    for g in 0..drawing.k() {
        let value = |v: usize| drawing.coords[v][g];
        order.sort_by_key(|&v| (value(v), topo_pos[v]));
        for (r, &v) in order.iter().enumerate() {
            out[v][g] = r as i64;
        }
    }
    let coords = drawing.coords.keys().cloned().zip(out).collect();
    DominanceDrawing::new(drawing.k(), coords, Provenance::Distinct)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DominanceViolation {
    /// `from` reaches `to` but is not dominated by it.
    PathNotDominated { from: String, to: String },
    /// `from ⪯ to` although `to` is unreachable from `from`.
    FalseDominance { from: String, to: String },
    /// Two distinct vertices share every coordinate.
    Coincident { a: String, b: String },
}

impl fmt::Display for DominanceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DominanceViolation::PathNotDominated { from, to } => {
                write!(f, "{from} reaches {to} but is not dominated by it")
            }
            DominanceViolation::FalseDominance { from, to } => {
                write!(f, "{from} is dominated by {to} but has no path to it")
            }
            DominanceViolation::Coincident { a, b } => write!(f, "{a} and {b} share a point"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DominanceReport {
    pub violations: Vec<DominanceViolation>,
}

impl DominanceReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `u ⪯ v ⇔ r(u, v)` for every ordered pair of vertices of `g`
/// against a BFS oracle, plus distinctness of points. Extra vertices in the
/// drawing are ignored.
pub fn verify_dominance(g: &Dag, drawing: &DominanceDrawing) -> Result<DominanceReport> {
    let points = (0..g.n())
        .map(|v| {
            drawing
                .get(g.id(v))
                .ok_or_else(|| Error::MissingVertexCoordinates(g.id(v).to_owned()))
        })
        .collect::<Result<Vec<&[i64]>>>()?;
    let r = reach_oracle(g);
    let mut violations = Vec::new();
    let name = |v: usize| g.id(v).to_owned();
    for u in 0..g.n() {
        for v in 0..g.n() {
            if u == v {
                continue;
            }
            let dom = dominates(points[u], points[v]);
            match (r.reaches(u, v), dom) {
                (true, false) => violations.push(DominanceViolation::PathNotDominated {
                    from: name(u),
                    to: name(v),
                }),
                (false, true) => violations.push(DominanceViolation::FalseDominance {
                    from: name(u),
                    to: name(v),
                }),
                _ => {}
            }
            if u < v && points[u] == points[v] {
                violations.push(DominanceViolation::Coincident {
                    a: name(u),
                    b: name(v),
                });
            }
        }
    }
    Ok(DominanceReport { violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_edge_list, to_st_graph};

    fn st(text: &str) -> StGraph {
        to_st_graph(parse_edge_list(text).unwrap())
    }

    fn point(d: &DominanceDrawing, id: &str) -> Vec<i64> {
        d.get(id).unwrap().to_vec()
    }

    #[test]
    fn chain_is_one_dimensional() {
        let g = st("s v\nv t");
        let d = draw_kd(&g);
        assert_eq!(d.k(), 1);
        assert_eq!(point(&d, "s"), [0]);
        assert_eq!(point(&d, "v"), [1]);
        assert_eq!(point(&d, "t"), [2]);
    }

    #[test]
    fn diamond_drawing() {
        let g = st("s a\ns b\na t\nb t");
        let d = draw_kd(&g);
        assert_eq!(d.provenance(), Provenance::Kd);
        assert_eq!(point(&d, "s"), [0, 0]);
        assert_eq!(point(&d, "a"), [1, 2]);
        assert_eq!(point(&d, "b"), [2, 1]);
        assert_eq!(point(&d, "t"), [2, 2]);
        assert!(verify_dominance(g.dag(), &d).unwrap().is_empty());
    }

    #[test]
    fn kd_draw_rejects_foreign_closure() {
        let g = st("s a\ns b\na t\nb t");
        let d = min_channel_decomposition(&g);
        let padded = crate::channels::pad_decomposition(&d, 3).unwrap();
        let ctc = build_ctc(&g, &padded).unwrap();
        assert!(matches!(
            kd_draw(&g, &d, &ctc),
            Err(Error::InvalidDecomposition(_))
        ));
        let drawing = kd_draw(&g, &padded, &ctc).unwrap();
        assert_eq!(drawing.k(), 3);
        // Dummy channel (s, t): everything but s projects onto t.
        assert_eq!(point(&drawing, "a"), [1, 2, 1]);
        assert!(verify_dominance(g.dag(), &drawing).unwrap().is_empty());
    }

    #[test]
    fn distinct_diamond() {
        let g = st("s a\ns b\na t\nb t");
        let d = draw_kd(&g);
        let topo = g.dag().topological_ids();
        let dd = make_distinct(&d, &topo).unwrap();
        assert_eq!(dd.provenance(), Provenance::Distinct);
        assert_eq!(point(&dd, "s"), [0, 0]);
        assert_eq!(point(&dd, "a"), [1, 2]);
        assert_eq!(point(&dd, "b"), [2, 1]);
        assert_eq!(point(&dd, "t"), [3, 3]);
        assert!(verify_dominance(g.dag(), &dd).unwrap().is_empty());
    }

    #[test]
    fn distinct_is_identity_on_distinct_chain() {
        let g = st("s v\nv t");
        let d = draw_kd(&g);
        let dd = make_distinct(&d, &g.dag().topological_ids()).unwrap();
        assert_eq!(dd.iter().collect::<Vec<_>>(), d.iter().collect::<Vec<_>>());
        assert!(matches!(
            make_distinct(&d, &["s", "v"]),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn verifier_reports_coincident_points() {
        let g = parse_edge_list("s a\ns b\na t\nb t").unwrap();
        let coords: IndexMap<String, Vec<i64>> =
            [("s", [0, 0]), ("a", [1, 1]), ("b", [1, 1]), ("t", [2, 2])]
                .into_iter()
                .map(|(id, c)| (id.to_owned(), c.to_vec()))
                .collect();
        let d = DominanceDrawing::new(2, coords, Provenance::Kd).unwrap();
        let report = verify_dominance(&g, &d).unwrap();
        assert!(report.violations.contains(&DominanceViolation::Coincident {
            a: "a".into(),
            b: "b".into()
        }));
    }

    #[test]
    fn verifier_reports_reversed_pair() {
        let g = parse_edge_list("s v\nv t").unwrap();
        let coords: IndexMap<String, Vec<i64>> = [("s", 1), ("v", 0), ("t", 2)]
            .into_iter()
            .map(|(id, c)| (id.to_owned(), vec![c]))
            .collect();
        let d = DominanceDrawing::new(1, coords, Provenance::Kd).unwrap();
        let report = verify_dominance(&g, &d).unwrap();
        assert!(report
            .violations
            .contains(&DominanceViolation::PathNotDominated {
                from: "s".into(),
                to: "v".into()
            }));
        assert!(report
            .violations
            .contains(&DominanceViolation::FalseDominance {
                from: "v".into(),
                to: "s".into()
            }));

        let partial = d.clone().retain(|id| id != "t");
        assert!(matches!(
            verify_dominance(&g, &partial),
            Err(Error::MissingVertexCoordinates(id)) if id == "t"
        ));
    }

    #[test]
    fn json_round_trip_and_validation() {
        let g = st("s a\ns b\na t\nb t");
        let d = draw_kd(&g);
        let text = serde_json::to_string(&d).unwrap();
        assert_eq!(
            text,
            r#"{"k":2,"coords":{"s":[0,0],"a":[1,2],"b":[2,1],"t":[2,2]},"provenance":"kd"}"#
        );
        let back: DominanceDrawing = serde_json::from_str(&text).unwrap();
        assert_eq!(back, d);
        let bad = r#"{"k":2,"coords":{"s":[0]},"provenance":"nd"}"#;
        assert!(serde_json::from_str::<DominanceDrawing>(bad).is_err());
    }

    #[test]
    fn virtual_vertices_can_be_dropped() {
        let g = st("a x\nb x");
        let d = draw_kd(&g).without_virtual(&g);
        assert_eq!(d.ids().collect::<Vec<_>>(), ["a", "x", "b"]);
    }
}

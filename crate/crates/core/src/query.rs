//! Reachability index over a dominance drawing: `u` reaches `v` iff `u`'s
//! point is dominated by `v`'s. Each query is at most `k` comparisons and
//! has no false positives when the drawing is a certified dominance drawing.

use std::collections::HashMap;

use crate::draw::DominanceDrawing;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct ReachIndex<'a> {
    drawing: &'a DominanceDrawing,
    lookup: HashMap<&'a str, &'a [i64]>,
}

pub fn build_index(drawing: &DominanceDrawing) -> Result<ReachIndex<'_>> {
    if drawing.is_empty() {
        return Err(Error::EmptyDrawing);
    }
    Ok(ReachIndex {
        drawing,
        lookup: drawing.iter().collect(),
    })
}

impl<'a> ReachIndex<'a> {
    pub fn k(&self) -> usize {
        self.drawing.k()
    }

    pub fn len(&self) -> usize {
        self.lookup.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lookup.is_empty()
    }

    pub fn drawing(&self) -> &'a DominanceDrawing {
        self.drawing
    }

    fn point(&self, id: &str) -> Result<&'a [i64]> {
        self.lookup
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(id.to_owned()))
    }

    /// Does `u` reach `v`? Reflexive.
    pub fn query(&self, u: &str, v: &str) -> Result<bool> {
        self.query_counted(u, v).map(|(answer, _)| answer)
    }

    /// Like [`query`](Self::query), also returning the number of coordinate
    /// comparisons made (never more than `k`).
    pub fn query_counted(&self, u: &str, v: &str) -> Result<(bool, usize)> {
        let (pu, pv) = (self.point(u)?, self.point(v)?);
        let mut comparisons = 0;
        for (a, b) in pu.iter().zip(pv) {
            comparisons += 1;
            if a > b {
                return Ok((false, comparisons));
            }
        }
        Ok((true, comparisons))
    }

    /// Answers every pair in order. An unknown vertex fails the whole batch
    /// and names the offending pair.
    pub fn batch_query<S: AsRef<str>>(&self, pairs: &[(S, S)]) -> Result<Vec<bool>> {
        pairs
            .iter()
            .enumerate()
            .map(|(i, (u, v))| {
                self.query(u.as_ref(), v.as_ref()).map_err(|e| match e {
                    Error::UnknownVertex(vertex) => Error::UnknownVertexInPair { pair: i, vertex },
                    e => e,
                })
            })
            .collect()
    }
}

/// Free-function form of [`ReachIndex::query`].
pub fn query(index: &ReachIndex<'_>, u: &str, v: &str) -> Result<bool> {
    index.query(u, v)
}

/// Free-function form of [`ReachIndex::batch_query`].
pub fn batch_query<S: AsRef<str>>(index: &ReachIndex<'_>, pairs: &[(S, S)]) -> Result<Vec<bool>> {
    index.batch_query(pairs)
}

/// Parses a pairs file: one `u v` per line, `#` comments and blank lines
/// ignored.
pub fn parse_pairs(text: &str) -> Result<Vec<(String, String)>> {
    let mut pairs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(u), Some(v), None) => pairs.push((u.to_owned(), v.to_owned())),
            _ => return Err(Error::MalformedLine { line: lineno + 1 }),
        }
    }
    Ok(pairs)
}

/// `u v yes|no`, one line per pair.
pub fn format_answers<S: AsRef<str>>(pairs: &[(S, S)], answers: &[bool]) -> String {
    pairs
        .iter()
        .zip(answers)
        .map(|((u, v), &a)| {
            format!(
                "{} {} {}\n",
                u.as_ref(),
                v.as_ref(),
                if a { "yes" } else { "no" }
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::draw::draw_kd;
    use crate::graph::{parse_edge_list, to_st_graph};

    fn diamond_drawing() -> DominanceDrawing {
        draw_kd(&to_st_graph(parse_edge_list("s a\ns b\na t\nb t").unwrap()))
    }

    #[test]
    fn diamond_queries() {
        let d = diamond_drawing();
        let idx = build_index(&d).unwrap();
        assert_eq!((idx.k(), idx.len()), (2, 4));
        assert!(idx.query("s", "t").unwrap());
        assert!(!idx.query("a", "b").unwrap());
        assert!(query(&idx, "b", "b").unwrap());
        assert!(matches!(idx.query("s", "x"), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn comparisons_are_bounded_by_k() {
        let d = diamond_drawing();
        let idx = build_index(&d).unwrap();
        assert_eq!(idx.query_counted("s", "t").unwrap(), (true, 2));
        assert_eq!(idx.query_counted("b", "a").unwrap(), (false, 1));
    }

    #[test]
    fn batch() {
        let d = diamond_drawing();
        let idx = build_index(&d).unwrap();
        let ids = ["s", "a", "b", "t"];
        let all: Vec<(&str, &str)> = ids
            .iter()
            .flat_map(|&u| ids.iter().map(move |&v| (u, v)))
            .collect();
        let answers = batch_query(&idx, &all).unwrap();
        assert_eq!(answers.iter().filter(|&&a| a).count(), 9);

        let empty: Vec<(&str, &str)> = vec![];
        assert!(idx.batch_query(&empty).unwrap().is_empty());

        let reversed: Vec<_> = all.iter().rev().copied().collect();
        let mut back = idx.batch_query(&reversed).unwrap();
        back.reverse();
        assert_eq!(back, answers);

        assert!(matches!(
            idx.batch_query(&[("s", "t"), ("s", "zz")]),
            Err(Error::UnknownVertexInPair { pair: 1, .. })
        ));
    }

    #[test]
    fn chain_and_empty() {
        let d = draw_kd(&to_st_graph(parse_edge_list("s v\nv t").unwrap()));
        assert_eq!(build_index(&d).unwrap().k(), 1);
        let empty = d.retain(|_| false);
        assert!(matches!(build_index(&empty), Err(Error::EmptyDrawing)));
    }

    #[test]
    fn pairs_format() {
        let pairs = parse_pairs("# q\ns t\n\na b\n").unwrap();
        assert_eq!(pairs.len(), 2);
        assert_eq!(format_answers(&pairs, &[true, false]), "s t yes\na b no\n");
        assert!(matches!(
            parse_pairs("s"),
            Err(Error::MalformedLine { line: 1 })
        ));
    }
}

//! Hopcroft–Karp maximum bipartite matching.
//!
//! Left vertices are scanned in index order and adjacency lists are used in
//! the order given, so the matching is a deterministic function of the input.

use std::collections::VecDeque;

const FREE: usize = usize::MAX;

/// Returns `mate[u]` for every left vertex `u`: the matched right vertex, if any.
pub(crate) fn hopcroft_karp(adj: &[Vec<usize>], right: usize) -> Vec<Option<usize>> {
    let left = adj.len();
    let mut mate_left = vec![FREE; left];
    let mut mate_right = vec![FREE; right];
    let mut dist = vec![0usize; left];

    loop {
        // Layer free left vertices, then alternate along matched edges.
        let mut queue = VecDeque::new();
        for u in 0..left {
            if mate_left[u] == FREE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                let w = mate_right[v];
                if w == FREE {
                    found = true;
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !found {
            break;
        }
        for u in 0..left {
            if mate_left[u] == FREE {
                augment(u, adj, &mut mate_left, &mut mate_right, &mut dist);
            }
        }
    }

    mate_left
        .into_iter()
        .map(|v| (v != FREE).then_some(v))
        .collect()
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    mate_left: &mut [usize],
    mate_right: &mut [usize],
    dist: &mut [usize],
) -> bool {
    for &v in &adj[u] {
        let w = mate_right[v];
        let ok = w == FREE
            || (dist[w] == dist[u].wrapping_add(1) && augment(w, adj, mate_left, mate_right, dist));
        if ok {
            mate_left[u] = v;
            mate_right[v] = u;
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn size(m: &[Option<usize>]) -> usize {
        m.iter().flatten().count()
    }

    // Exhaustive maximum matching for tiny instances.
    fn brute(adj: &[Vec<usize>], u: usize, used: &mut Vec<bool>) -> usize {
        if u == adj.len() {
            return 0;
        }
        let mut best = brute(adj, u + 1, used);
        for &v in &adj[u] {
            if !used[v] {
                used[v] = true;
                best = best.max(1 + brute(adj, u + 1, used));
                used[v] = false;
            }
        }
        best
    }

    #[test]
    fn small_cases() {
        assert_eq!(size(&hopcroft_karp(&[], 0)), 0);
        assert_eq!(size(&hopcroft_karp(&[vec![], vec![]], 2)), 0);
        let adj = vec![vec![0, 1], vec![0], vec![1, 2]];
        assert_eq!(size(&hopcroft_karp(&adj, 3)), 3);
    }

    #[test]
    fn matches_exhaustive_search() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let l = rng.random_range(0..7);
            let r = rng.random_range(1..7);
            let adj: Vec<Vec<usize>> = (0..l)
                .map(|_| (0..r).filter(|_| rng.random_bool(0.35)).collect())
                .collect();
            let m = hopcroft_karp(&adj, r);
            // A proper matching: edges exist and right sides are distinct.
            let mut taken = vec![false; r];
            for (u, v) in m.iter().enumerate() {
                if let Some(v) = *v {
                    assert!(adj[u].contains(&v));
                    assert!(!taken[v]);
                    taken[v] = true;
                }
            }
            assert_eq!(size(&m), brute(&adj, 0, &mut vec![false; r]));
        }
    }
}

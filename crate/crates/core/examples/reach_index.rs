//! Using a drawing as a reachability index: each query is at most k integer
//! comparisons.
//!
//! `cargo run --example reach_index`

use domdraw::generate::random_dag;
use domdraw::{build_index, draw_kd, reach_oracle, to_st_graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> domdraw::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let g = to_st_graph(random_dag(200, 0.08, &mut rng));
    let drawing = draw_kd(&g);
    let index = build_index(&drawing)?;
    let ids = g.dag().ids();

    let pairs: Vec<(&str, &str)> = (0..10_000)
        .map(|_| {
            let u = rng.random_range(0..g.n());
            let v = rng.random_range(0..g.n());
            (ids[u].as_str(), ids[v].as_str())
        })
        .collect();
    let answers = index.batch_query(&pairs)?;

    let oracle = reach_oracle(g.dag());
    let wrong = pairs
        .iter()
        .zip(&answers)
        .filter(|((u, v), &a)| {
            a != oracle.reaches(g.dag().index_of(u).unwrap(), g.dag().index_of(v).unwrap())
        })
        .count();
    println!(
        "n = {}, k = {}, {} queries, {} reachable, {wrong} wrong",
        g.n(),
        index.k(),
        pairs.len(),
        answers.iter().filter(|&&a| a).count()
    );
    Ok(())
}

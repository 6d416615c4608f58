//! A k-dimensional dominance drawing with k equal to the width, checked
//! against the reachability oracle.
//!
//! `cargo run --example kd_drawing [SEED]`

use domdraw::generate::random_dag;
use domdraw::{draw_kd, to_st_graph, verify_dominance, width};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> domdraw::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = to_st_graph(random_dag(12, 0.25, &mut rng));

    let drawing = draw_kd(&g);
    println!(
        "n = {}, m = {}, width = {}",
        g.n(),
        g.dag().edge_count(),
        width(&g)
    );
    for (id, p) in drawing.iter() {
        println!("{id:>4} {p:?}");
    }
    let report = verify_dominance(g.dag(), &drawing)?;
    println!("violations: {}", report.violations.len());
    Ok(())
}

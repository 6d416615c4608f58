//! SVG of a two-dimensional drawing, written to stdout or to the given path.
//!
//! `cargo run --example render_svg -- diamond.svg`

use domdraw::generate::width_two_dag;
use domdraw::{draw_kd, make_distinct, render_svg, to_st_graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> domdraw::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let g = to_st_graph(width_two_dag(4, 3, 0.3, &mut rng));
    let drawing = make_distinct(&draw_kd(&g), &g.dag().topological_ids())?;
    let svg = render_svg(&drawing, g.dag())?;
    match std::env::args_os().nth(1) {
        Some(path) => std::fs::write(path, svg)?,
        None => print!("{svg}"),
    }
    Ok(())
}

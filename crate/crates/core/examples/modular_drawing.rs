//! Modular drawing: split the graph into transitive modules, draw the
//! quotient and every module in the largest of their widths, then shift the
//! pieces into one drawing.
//!
//! Three parallel diamonds have width 6, but no module or quotient is wider
//! than 3.
//!
//! `cargo run --example modular_drawing [COUNT]`

use domdraw::generate::parallel_diamonds;
use domdraw::{
    dimensional_neck, draw_kd, module_induced_graphs, nd_draw, quotient_graph, to_st_graph,
    validate_partition, verify_dominance,
};

fn main() -> domdraw::Result<()> {
    let count = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let m = parallel_diamonds(count);
    let g = to_st_graph(m.dag.clone());
    let p = m.partition(&g);
    assert!(validate_partition(&g, &p)?.is_valid());

    let quotient = quotient_graph(&g, &p)?;
    let members = module_induced_graphs(&g, &p)?;
    let neck = dimensional_neck(&quotient, &members);
    println!("widths (quotient first): {:?}", neck.widths);
    println!(
        "w_N = {}, rho = {}, w_rho = {}",
        neck.w_n, neck.rho, neck.w_rho
    );

    let nd = nd_draw(&g, &p)?;
    let kd = draw_kd(&g);
    println!(
        "kD-Draw uses {} dimensions, ND-Draw uses {}",
        kd.k(),
        nd.k()
    );
    assert!(verify_dominance(g.dag(), &nd)?.is_empty());
    for (id, point) in nd.iter() {
        println!("{id:>3} {point:?}");
    }
    Ok(())
}

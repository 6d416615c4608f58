//! Spreading a drawing so every dimension is a permutation of `0..n`.
//!
//! `cargo run --example distinct_coordinates`

use domdraw::{draw_kd, make_distinct, parse_edge_list, to_st_graph, verify_dominance};

fn main() -> domdraw::Result<()> {
    let g = to_st_graph(parse_edge_list("s a\ns b\na t\nb t\n")?);
    let kd = draw_kd(&g);
    let distinct = make_distinct(&kd, &g.dag().topological_ids())?;
    for (id, p) in kd.iter() {
        println!("{id}: {p:?} -> {:?}", distinct.get(id).unwrap());
    }
    assert!(verify_dominance(g.dag(), &distinct)?.is_empty());
    Ok(())
}

//! The compressed transitive closure: one projection per vertex and channel,
//! answering reachability in constant time.
//!
//! `cargo run --example compressed_closure`

use domdraw::{build_ctc, min_channel_decomposition, parse_edge_list, reach_oracle, to_st_graph};

fn main() -> domdraw::Result<()> {
    let g = to_st_graph(parse_edge_list("s a\ns b\na t\nb t\n")?);
    let d = min_channel_decomposition(&g);
    let ctc = build_ctc(&g, &d)?;

    println!(
        "k = {}, edge visits = {} (bound k*m = {})",
        ctc.k(),
        ctc.edge_visits(),
        ctc.k() * g.dag().edge_count()
    );
    for id in g.dag().ids() {
        let proj: Vec<String> = (0..ctc.k())
            .map(|i| {
                let (i, j) = ctc.projection(id, i).expect("known vertex");
                format!("C{i}[{j}]")
            })
            .collect();
        println!("Proj({id}) = {}", proj.join(", "));
    }

    let oracle = reach_oracle(g.dag());
    let ids = g.dag().ids();
    for u in 0..g.n() {
        for v in 0..g.n() {
            assert_eq!(ctc.reach_ctc(&ids[u], &ids[v])?, oracle.reaches(u, v));
        }
    }
    println!("all {} pairs agree with BFS", g.n() * g.n());
    Ok(())
}

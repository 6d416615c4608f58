//! Width of a DAG and a minimum channel decomposition.
//!
//! `cargo run --example width_and_channels`

use domdraw::{
    max_antichain_bruteforce, min_channel_decomposition, parse_edge_list, to_st_graph,
    validate_decomposition,
};

fn main() -> domdraw::Result<()> {
    // Two sources (a, b) and two sinks (e, f): a virtual __S and __T are added.
    let dag = parse_edge_list(
        "a c\n\
         b c\n\
         b d\n\
         c e\n\
         d f\n",
    )?;
    let antichain: Vec<_> = max_antichain_bruteforce(&dag)?
        .into_iter()
        .map(|v| dag.id(v).to_owned())
        .collect();

    let g = to_st_graph(dag);
    let d = min_channel_decomposition(&g);
    assert!(validate_decomposition(&g, &d).is_valid());

    println!("width = {}", d.k());
    println!("a largest antichain: {antichain:?}");
    for (i, chain) in d.channels().iter().enumerate() {
        let ids: Vec<&str> = chain.iter().map(|&v| g.dag().id(v)).collect();
        println!("C{i}: {}", ids.join(" -> "));
    }
    println!("{}", serde_json::to_string(&d.to_json(&g, false))?);
    Ok(())
}

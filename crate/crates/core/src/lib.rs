//! Multidimensional dominance drawings of directed acyclic graphs.
//!
//! A dominance drawing places every vertex at an integer point so that `u`
//! reaches `v` exactly when each coordinate of `u` is at most the matching
//! coordinate of `v`. The coordinates are therefore an exact reachability
//! index with `k` comparisons per query.
//!
//! The pipeline:
//!
//! 1. [`graph`]: parse a DAG and close it into an st-graph.
//! 2. [`channels`]: cover it with a minimum number of chains through the
//!    source and sink (the width `w_G`).
//! 3. [`ctc`]: project every vertex onto every chain, a `k × n` table.
//! 4. [`draw`]: read the coordinates off the projections (`kd_draw`),
//!    optionally make them distinct, and verify them.
//! 5. [`modular`]: split the graph into transitive modules and draw in as
//!    few dimensions as the widest quotient/module graph needs.
//! 6. [`query`]: answer reachability from the coordinates.
//!
//! ```
//! use domdraw::{draw_kd, parse_edge_list, to_st_graph, build_index};
//!
//! let g = to_st_graph(parse_edge_list("s a\ns b\na t\nb t").unwrap());
//! let drawing = draw_kd(&g);
//! assert_eq!(drawing.k(), 2);
//! let index = build_index(&drawing).unwrap();
//! assert!(index.query("s", "t").unwrap());
//! assert!(!index.query("a", "b").unwrap());
//! ```

pub mod channels;
pub mod cli;
pub mod ctc;
pub mod draw;
pub mod error;
pub mod generate;
pub mod graph;
mod matching;
pub mod modular;
pub mod query;
pub mod svg;

pub use channels::{
    min_channel_decomposition, pad_decomposition, validate_decomposition, width,
    ChannelDecomposition,
};
pub use ctc::{build_ctc, CompressedTransitiveClosure};
pub use draw::{draw_kd, kd_draw, make_distinct, verify_dominance, DominanceDrawing, Provenance};
pub use error::{Error, Result};
pub use graph::{
    max_antichain_bruteforce, parse_edge_list, reach_oracle, to_st_graph, topological_order, Dag,
    ReachMatrix, StGraph,
};
pub use modular::{
    dimensional_neck, drawings_computation, find_congruence_partition, module_induced_graphs,
    nd_draw, quotient_graph, shifter, validate_partition, CongruencePartition, NeckProfile,
};
pub use query::{build_index, ReachIndex};
pub use svg::render_svg;

//! Random and structured DAG families for tests, benchmarks and examples.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Dag, DagBuilder, StGraph};
use crate::modular::CongruencePartition;

/// `n` vertices `v0..v{n-1}` in a hidden random order; each forward pair
/// becomes an edge with probability `p`.
pub fn random_dag<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Dag {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut b = DagBuilder::default();
    for name in &names {
        b.vertex(name);
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                b.edge(&names[order[i]], &names[order[j]])
                    .expect("forward edge");
            }
        }
    }
    b.build().expect("forward edges only")
}

/// Two chains `a0..` and `b0..` interleaved in a random order, with cross
/// edges (forward in that order) added with probability `p`. The chain heads
/// get no incoming cross edge, so they stay incomparable and the width is
/// exactly 2.
pub fn width_two_dag<R: Rng + ?Sized>(len_a: usize, len_b: usize, p: f64, rng: &mut R) -> Dag {
    assert!(len_a > 0 && len_b > 0, "both chains need a vertex");
    let mut slots: Vec<(char, usize)> = (0..len_a)
        .map(|i| ('a', i))
        .chain((0..len_b).map(|i| ('b', i)))
        .collect();
    slots.shuffle(rng);
    // Restore chain order inside the shuffled interleaving.
    let (mut na, mut nb) = (0, 0);
    for slot in &mut slots {
        if slot.0 == 'a' {
            slot.1 = na;
            na += 1;
        } else {
            slot.1 = nb;
            nb += 1;
        }
    }
    let name = |(c, i): (char, usize)| format!("{c}{i}");
    let mut b = DagBuilder::default();
    for c in ['a', 'b'] {
        let len = if c == 'a' { len_a } else { len_b };
        b.vertex(&name((c, 0)));
        for i in 1..len {
            b.edge(&name((c, i - 1)), &name((c, i)))
                .expect("chain edge");
        }
    }
    for i in 0..slots.len() {
        for j in i + 1..slots.len() {
            let (from, to) = (slots[i], slots[j]);
            if from.0 != to.0 && to.1 != 0 && rng.random_bool(p) {
                b.edge(&name(from), &name(to)).expect("fresh cross edge");
            }
        }
    }
    b.build().expect("forward edges only")
}

/// A graph whose vertex set splits into known transitive modules.
#[derive(Debug, Clone)]
pub struct ModularGraph {
    pub dag: Dag,
    /// Vertex ids of each module, in module order.
    pub blocks: Vec<Vec<String>>,
}

impl ModularGraph {
    /// The known partition over the st-augmented graph; `__S`/`__T`, if
    /// added, become singleton blocks.
    pub fn partition(&self, st: &StGraph) -> CongruencePartition {
        let mut blocks = self.blocks.clone();
        for v in 0..st.n() {
            if st.is_virtual(v) {
                blocks.push(vec![st.dag().id(v).to_owned()]);
            }
        }
        CongruencePartition::from_ids(st, &blocks).expect("blocks cover the graph")
    }
}

/// Random quotient DAG on `h` nodes with edge probability `p`; node `i` is
/// replaced by a random DAG `m{i}_*` of 1 to `max_member` vertices. Every
/// quotient edge `i -> j` becomes edges from all sinks of module `i` to all
/// sources of module `j`, which makes every module transitive.
pub fn modular_composition<R: Rng + ?Sized>(
    h: usize,
    max_member: usize,
    p: f64,
    rng: &mut R,
) -> ModularGraph {
    assert!(max_member > 0);
    let quotient = random_dag(h, p, rng);
    let members: Vec<Dag> = (0..h)
        .map(|_| {
            let size = rng.random_range(1..=max_member);
            random_dag(size, p, rng)
        })
        .collect();
    let local = |i: usize, v: usize| format!("m{i}_{v}");

    let mut b = DagBuilder::default();
    let mut blocks = Vec::with_capacity(h);
    for (i, m) in members.iter().enumerate() {
        let ids: Vec<String> = (0..m.n()).map(|v| local(i, v)).collect();
        for id in &ids {
            b.vertex(id);
        }
        for (u, v) in m.edges() {
            b.edge(&ids[u], &ids[v]).expect("member edge");
        }
        blocks.push(ids);
    }
    for (qi, qj) in quotient.edges() {
        let (i, j) = (
            vertex_number(quotient.id(qi)),
            vertex_number(quotient.id(qj)),
        );
        for u in members[i].sinks() {
            for v in members[j].sources() {
                b.edge(&local(i, u), &local(j, v))
                    .expect("fresh cross edge");
            }
        }
    }
    ModularGraph {
        dag: b.build().expect("quotient and members are acyclic"),
        blocks,
    }
}

fn vertex_number(id: &str) -> usize {
    id[1..].parse().expect("generated ids are v<number>")
}

/// `s -> {B_1..B_count} -> t` where every `B_i` is a diamond
/// `x -> {y, z} -> w`. The whole graph has width `2·count`; with each
/// diamond as a module the largest width among quotient and modules is
/// `count`.
pub fn parallel_diamonds(count: usize) -> ModularGraph {
    let mut b = DagBuilder::default();
    let mut blocks = vec![vec!["s".to_owned()]];
    for i in 0..count {
        let [x, y, z, w] = ["x", "y", "z", "w"].map(|c| format!("{c}{i}"));
        let (x, y, z, w) = (x.as_str(), y.as_str(), z.as_str(), w.as_str());
        for (u, v) in [("s", x), (x, y), (x, z), (y, w), (z, w), (w, "t")] {
            b.edge(u, v).expect("fresh edge");
        }
        blocks.push([x, y, z, w].map(str::to_owned).to_vec());
    }
    blocks.push(vec!["t".to_owned()]);
    ModularGraph {
        dag: b.build().expect("acyclic"),
        blocks,
    }
}

/// `s -> {a_1..a_count} -> t`: an antichain of `count` vertices between a
/// source and a sink.
pub fn wide_antichain(count: usize) -> Dag {
    let mut b = DagBuilder::default();
    for i in 0..count {
        let v = format!("a{i}");
        b.edge("s", &v).expect("fresh edge");
        b.edge(&v, "t").expect("fresh edge");
    }
    b.build().expect("acyclic")
}

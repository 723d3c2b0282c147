//! Timing harness behind `bflow bench`.

use crate::dp::{b_chromatic, ValidatedGraph};
use crate::gen::random_tree;
use crate::graph::line_graph_of_tree;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::Instant;

/// One measurement: the b-chromatic number of the line graph of a random
/// tree with `edges` edges, and how long it took.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BenchRow {
    pub edges: usize,
    pub n: usize,
    pub omega: usize,
    pub m_degree: usize,
    pub b: usize,
    pub millis: f64,
}

/// Times `b_chromatic` on one random tree per requested size. Each row is
/// seeded from `(seed, size)`, so a size's measurement does not depend on
/// its position in the list.
pub fn run_bench(sizes: &[usize], seed: u64) -> Vec<BenchRow> {
    sizes
        .iter()
        .map(|&edges| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (edges as u64).rotate_left(17));
            let tree = random_tree(edges, &mut rng);
            let lg = line_graph_of_tree(&tree).expect("benchmark sizes are at least one edge");
            let vg = ValidatedGraph::new(lg).expect("line graphs of trees always validate");
            let start = Instant::now();
            let b = b_chromatic(&vg);
            let millis = start.elapsed().as_secs_f64() * 1e3;
            BenchRow {
                edges,
                n: vg.graph().n(),
                omega: vg.profile().omega(),
                m_degree: vg.profile().m_degree(),
                b,
                millis,
            }
        })
        .collect()
}

/// Plain-text table for `--human`.
pub fn render_table(rows: &[BenchRow]) -> String {
    let mut out = String::from("edges        n    omega  m-degree        b      millis\n");
    for r in rows {
        out.push_str(&format!(
            "{:>5} {:>8} {:>8} {:>9} {:>8} {:>11.2}\n",
            r.edges, r.n, r.omega, r.m_degree, r.b, r.millis
        ));
    }
    out
}

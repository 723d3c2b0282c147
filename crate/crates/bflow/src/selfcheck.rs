//! Consistency harness: runs every independent method against every other
//! on a corpus of small trees and reports disagreements with enough detail
//! to reproduce them.

use crate::dp::{b_chromatic, b_chromatic_on, decide_k, ValidatedGraph};
use crate::flow::is_flow_feasible;
use crate::gen::{all_trees, random_tree};
use crate::graph::{line_graph_of_tree, Tree};
use crate::oracle::{cross_check_flow_vs_coloring, max_realized_colors, Budget};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

#[derive(Debug, Clone)]
pub struct SelfcheckConfig {
    /// Largest tree edge count in the corpus.
    pub max_edges: usize,
    /// 0 = exhaustive over all non-isomorphic trees up to `max_edges`;
    /// otherwise this many seeded random trees.
    pub samples: usize,
    pub seed: u64,
    pub jobs: usize,
    pub budget: Budget,
}

impl Default for SelfcheckConfig {
    fn default() -> Self {
        SelfcheckConfig {
            max_edges: 7,
            samples: 0,
            seed: 0,
            jobs: 1,
            budget: Budget::default(),
        }
    }
}

/// One reproducible disagreement or error.
#[derive(Debug, Clone, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Failure {
    /// Edge-list document of the tree whose line graph misbehaved.
    pub tree: String,
    pub k: Option<usize>,
    pub check: String,
    pub detail: String,
}

#[derive(Debug)]
pub struct SelfcheckOutcome {
    pub trees_checked: usize,
    pub failures: Vec<Failure>,
}

impl SelfcheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the full suite with the production solver.
pub fn run_selfcheck(cfg: &SelfcheckConfig) -> SelfcheckOutcome {
    run_selfcheck_with(cfg, |vg, k| decide_k(vg, k).expect("k >= 1 in sweep"))
}

/// Runs the suite with a caller-supplied decision procedure in place of
/// the table solver, so a deliberately broken solver must be caught.
pub fn run_selfcheck_with<F>(cfg: &SelfcheckConfig, decide: F) -> SelfcheckOutcome
where
    F: Fn(&ValidatedGraph, usize) -> bool + Sync,
{
    let trees = corpus(cfg);
    let next = AtomicUsize::new(0);
    let failures = Mutex::new(Vec::new());
    let jobs = cfg.jobs.max(1).min(trees.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= trees.len() {
                    break;
                }
                let mut found = check_tree(&trees[i], i, cfg, &decide);
                if !found.is_empty() {
                    failures.lock().unwrap().append(&mut found);
                }
            });
        }
    });
    let mut failures = failures.into_inner().unwrap();
    failures.sort_by(|a, b| (&a.tree, a.k, &a.check).cmp(&(&b.tree, b.k, &b.check)));
    SelfcheckOutcome {
        trees_checked: trees.len(),
        failures,
    }
}

fn corpus(cfg: &SelfcheckConfig) -> Vec<Tree> {
    if cfg.samples == 0 {
        (2..=cfg.max_edges + 1).flat_map(all_trees).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        (0..cfg.samples)
            .map(|_| {
                let edges = rand::Rng::random_range(&mut rng, 1..=cfg.max_edges);
                random_tree(edges, &mut rng)
            })
            .collect()
    }
}

fn check_tree<F>(tree: &Tree, index: usize, cfg: &SelfcheckConfig, decide: &F) -> Vec<Failure>
where
    F: Fn(&ValidatedGraph, usize) -> bool + Sync,
{
    let mut failures = Vec::new();
    let doc = tree.as_graph().to_edge_list();
    let fail = |failures: &mut Vec<Failure>, k: Option<usize>, check: &str, detail: String| {
        failures.push(Failure {
            tree: doc.clone(),
            k,
            check: check.to_string(),
            detail,
        });
    };

    let lg = match line_graph_of_tree(tree) {
        Ok(g) => g,
        Err(e) => {
            fail(&mut failures, None, "line-graph", e.to_string());
            return failures;
        }
    };
    let vg = match ValidatedGraph::new(lg) {
        Ok(vg) => vg,
        Err(e) => {
            fail(&mut failures, None, "validate", e.to_string());
            return failures;
        }
    };
    let (omega, m) = (vg.profile().omega(), vg.profile().m_degree());
    let rbt = vg.rooted_default();

    // Solver versus exhaustive coloring search.
    for k in omega..=m {
        let solver = decide(&vg, k);
        match max_realized_colors(vg.graph(), k, &cfg.budget) {
            Ok(realized) => {
                if solver != (realized == k) {
                    fail(
                        &mut failures,
                        Some(k),
                        "oracle-equivalence",
                        format!("solver says {solver}, search realizes {realized} of {k}"),
                    );
                }
            }
            Err(e) => fail(&mut failures, Some(k), "oracle-equivalence", e.to_string()),
        }
    }

    // Flow feasibility versus coloring search, per candidate set.
    for k in omega + 1..=m {
        match cross_check_flow_vs_coloring(&vg, &rbt, k, 4, &cfg.budget) {
            Ok(report) => {
                if let Some(mismatch) = report.mismatch {
                    fail(
                        &mut failures,
                        Some(k),
                        "flow-vs-coloring",
                        format!(
                            "W = {:?}: flow {}, coloring {}",
                            mismatch.w, mismatch.flow_feasible, mismatch.coloring_exists
                        ),
                    );
                }
            }
            Err(e) => fail(&mut failures, Some(k), "flow-vs-coloring", e.to_string()),
        }
    }

    // Dropping a vertex from a routable set must keep it routable.
    for k in omega + 1..=m {
        let dense = vg.profile().dense_vertices(k);
        let mut sets: Vec<Vec<usize>> = vec![vec![]];
        subsets_up_to(&dense, k.min(4), 0, &mut vec![], &mut sets);
        for w in &sets {
            let feasible = match is_flow_feasible(vg.graph(), vg.decomp(), &rbt, w, k) {
                Ok(f) => f,
                Err(e) => {
                    fail(&mut failures, Some(k), "subflow-closure", e.to_string());
                    continue;
                }
            };
            if !feasible || w.is_empty() {
                continue;
            }
            for drop in 0..w.len() {
                let mut smaller = w.clone();
                smaller.remove(drop);
                match is_flow_feasible(vg.graph(), vg.decomp(), &rbt, &smaller, k) {
                    Ok(true) => {}
                    Ok(false) => fail(
                        &mut failures,
                        Some(k),
                        "subflow-closure",
                        format!("W = {w:?} routes but {smaller:?} does not"),
                    ),
                    Err(e) => fail(&mut failures, Some(k), "subflow-closure", e.to_string()),
                }
            }
        }
    }

    // The rooting and the child order are arbitrary choices; the answer
    // must not depend on them.
    let baseline = b_chromatic(&vg);
    for root in 0..vg.decomp().block_count() {
        let other = vg.rooted(root).expect("valid block id");
        let b = b_chromatic_on(&vg, &other);
        if b != baseline {
            fail(
                &mut failures,
                None,
                "root-independence",
                format!("root {root} gives {b}, default gives {baseline}"),
            );
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(index as u64));
    for round in 0..3 {
        let mut shuffled = vg.rooted_default();
        shuffled.shuffle_children(&mut rng);
        let b = b_chromatic_on(&vg, &shuffled);
        if b != baseline {
            fail(
                &mut failures,
                None,
                "child-order-independence",
                format!("shuffle {round} gives {b}, stored order gives {baseline}"),
            );
        }
    }

    failures
}

fn subsets_up_to(
    pool: &[usize],
    cap: usize,
    from: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == cap {
        return;
    }
    for i in from..pool.len() {
        current.push(pool[i]);
        out.push(current.clone());
        subsets_up_to(pool, cap, i + 1, current, out);
        current.pop();
    }
}

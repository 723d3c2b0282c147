//! Brute-force ground truth at desk scale.
//!
//! Everything here enumerates proper colorings outright, with no reliance
//! on block structure, so it can arbitrate disagreements between the table
//! solver and the flow checker. Searches carry an explicit node budget and
//! report exhaustion as an error rather than guessing.

use crate::blocks::RootedBlockTree;
use crate::dp::ValidatedGraph;
use crate::flow::{is_flow_feasible, NetworkError};
use crate::graph::SimpleGraph;
use thiserror::Error;

/// Limit on explored search nodes. One node is one visit in the
/// backtracking tree; properness and symmetry pruning keep the real count
/// far below `k^n` on reasonable inputs.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    limit: u64,
}

impl Budget {
    pub const DEFAULT_LIMIT: u64 = 100_000_000;

    pub fn new(limit: u64) -> Self {
        Budget { limit }
    }

    /// Reads `BFLOW_BUDGET` (branch nodes), falling back to the default.
    pub fn from_env() -> Self {
        let limit = std::env::var("BFLOW_BUDGET")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(Self::DEFAULT_LIMIT);
        Budget { limit }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            limit: Self::DEFAULT_LIMIT,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("search budget of {limit} branch nodes exceeded")]
    BudgetExceeded { limit: u64 },
    #[error(transparent)]
    Network(#[from] NetworkError),
}

/// A total assignment of colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub k: usize,
}

/// Which colors have a vertex adjacent to all other `k - 1` colors, with
/// one witness per color. Index `c - 1` holds the witness for color `c`.
#[derive(Debug, Clone)]
pub struct RealizationReport {
    pub k: usize,
    pub witnesses: Vec<Option<usize>>,
}

impl RealizationReport {
    pub fn realized_colors(&self) -> Vec<usize> {
        self.witnesses
            .iter()
            .enumerate()
            .filter_map(|(i, w)| w.map(|_| i + 1))
            .collect()
    }

    pub fn realized_count(&self) -> usize {
        self.witnesses.iter().filter(|w| w.is_some()).count()
    }
}

/// Realization data of a total proper coloring. For each color, a witness
/// vertex of that color whose neighborhood spans every other color.
pub fn realization_report(g: &SimpleGraph, c: &Coloring) -> RealizationReport {
    let mut witnesses = vec![None; c.k];
    let mut seen = vec![0u32; c.k + 1];
    let mut stamp = 0u32;
    for v in 0..g.n() {
        let cv = c.colors[v];
        if witnesses[cv - 1].is_some() {
            continue;
        }
        stamp += 1;
        let mut distinct = 0;
        for &u in g.neighbors(v) {
            let cu = c.colors[u];
            if cu != cv && seen[cu] != stamp {
                seen[cu] = stamp;
                distinct += 1;
            }
        }
        if distinct == c.k - 1 {
            witnesses[cv - 1] = Some(v);
        }
    }
    RealizationReport { k: c.k, witnesses }
}

/// True iff `c` is a proper coloring that uses and realizes every color.
pub fn verify_b_coloring(g: &SimpleGraph, c: &Coloring) -> bool {
    if c.colors.len() != g.n() || c.k == 0 {
        return false;
    }
    if c.colors.iter().any(|&x| x < 1 || x > c.k) {
        return false;
    }
    for (u, v) in g.edges() {
        if c.colors[u] == c.colors[v] {
            return false;
        }
    }
    realization_report(g, c).realized_count() == c.k
}

/// Backtracking state shared by the searches. Neighbor color counts are
/// maintained incrementally so that a vertex's saturation and each basis
/// candidate's remaining potential are O(1) to read.
struct Search<'a> {
    g: &'a SimpleGraph,
    k: usize,
    colors: Vec<usize>,
    /// `cnt[v * k + (c-1)]`: neighbors of v currently colored c.
    cnt: Vec<u32>,
    /// Distinct colors present in each vertex's neighborhood.
    distinct: Vec<u32>,
    uncolored_nbrs: Vec<u32>,
    highest_used: usize,
    nodes: u64,
    limit: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a SimpleGraph, k: usize, budget: &Budget) -> Self {
        let n = g.n();
        Search {
            g,
            k,
            colors: vec![0; n],
            cnt: vec![0; n * k],
            distinct: vec![0; n],
            uncolored_nbrs: (0..n).map(|v| g.degree(v) as u32).collect(),
            highest_used: 0,
            nodes: 0,
            limit: budget.limit(),
        }
    }

    fn tick(&mut self) -> Result<(), OracleError> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(OracleError::BudgetExceeded { limit: self.limit });
        }
        Ok(())
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        let g = self.g;
        for &u in g.neighbors(v) {
            let slot = u * self.k + c - 1;
            self.cnt[slot] += 1;
            if self.cnt[slot] == 1 {
                self.distinct[u] += 1;
            }
            self.uncolored_nbrs[u] -= 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = 0;
        let g = self.g;
        for &u in g.neighbors(v) {
            let slot = u * self.k + c - 1;
            self.cnt[slot] -= 1;
            if self.cnt[slot] == 0 {
                self.distinct[u] -= 1;
            }
            self.uncolored_nbrs[u] += 1;
        }
    }

    fn can_take(&self, v: usize, c: usize) -> bool {
        self.cnt[v * self.k + c - 1] == 0
    }

    /// Most saturated uncolored vertex, lowest id on ties.
    fn pick_vertex(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.colors[v] == 0)
            .max_by_key(|&v| (self.distinct[v], std::cmp::Reverse(v)))
    }
}

/// Maximum, over all proper colorings with colors from `1..=k`, of the
/// number of colors some vertex realizes. Equals `k` exactly when the
/// graph has a b-coloring with k colors.
pub fn max_realized_colors(
    g: &SimpleGraph,
    k: usize,
    budget: &Budget,
) -> Result<usize, OracleError> {
    if k == 0 {
        return Ok(0);
    }
    let mut s = Search::new(g, k, budget);
    let mut best = 0;
    max_realized_rec(&mut s, 0, &mut best)?;
    Ok(best)
}

fn max_realized_rec(s: &mut Search, v: usize, best: &mut usize) -> Result<(), OracleError> {
    if *best == s.k {
        return Ok(());
    }
    s.tick()?;
    if v == s.g.n() {
        let mut realized = 0;
        for u in 0..s.g.n() {
            // Neighbors never share u's color, so k - 1 distinct neighbor
            // colors means u sees everything else.
            if s.distinct[u] as usize == s.k - 1 {
                realized |= 1u64 << ((s.colors[u] - 1) & 63);
            }
        }
        let count = if s.k <= 64 {
            realized.count_ones() as usize
        } else {
            // Beyond 64 colors the bit trick would alias; recount exactly.
            let mut seen = vec![false; s.k + 1];
            let mut c = 0;
            for u in 0..s.g.n() {
                if s.distinct[u] as usize == s.k - 1 && !seen[s.colors[u]] {
                    seen[s.colors[u]] = true;
                    c += 1;
                }
            }
            c
        };
        *best = (*best).max(count);
        return Ok(());
    }
    // Colors used so far appear in increasing order of first use, which
    // fixes one representative per color permutation without changing the
    // realized count.
    let hi = s.highest_used;
    for c in 1..=s.k.min(hi + 1) {
        if !s.can_take(v, c) {
            continue;
        }
        s.assign(v, c);
        s.highest_used = hi.max(c);
        max_realized_rec(s, v + 1, best)?;
        s.unassign(v);
        s.highest_used = hi;
    }
    Ok(())
}

/// Whether some proper coloring with colors from `1..=k` gives every
/// vertex of `w` a distinct color that it realizes. Returns false without
/// searching when `w` is too large or contains a vertex of degree below
/// `k - 1`, since such a vertex can never see `k - 1` other colors.
pub fn exists_coloring_realizing(
    g: &SimpleGraph,
    w: &[usize],
    k: usize,
    budget: &Budget,
) -> Result<bool, OracleError> {
    let mut w: Vec<usize> = w.to_vec();
    w.sort_unstable();
    w.dedup();
    if w.len() > k || k == 0 {
        return Ok(false);
    }
    if w.iter().any(|&v| g.degree(v) + 1 < k) {
        return Ok(false);
    }
    let mut s = Search::new(g, k, budget);
    for (i, &v) in w.iter().enumerate() {
        s.assign(v, i + 1);
    }
    s.highest_used = w.len();
    exists_rec(&mut s, &w)
}

fn exists_rec(s: &mut Search, w: &[usize]) -> Result<bool, OracleError> {
    s.tick()?;
    // Every basis candidate must still be able to reach k - 1 distinct
    // neighbor colors with its uncolored neighbors.
    for &v in w {
        if ((s.distinct[v] + s.uncolored_nbrs[v]) as usize) < s.k - 1 {
            return Ok(false);
        }
    }
    let Some(v) = s.pick_vertex() else {
        return Ok(w.iter().all(|&u| s.distinct[u] as usize == s.k - 1));
    };
    let hi = s.highest_used;
    for c in 1..=s.k.min(hi + 1) {
        if !s.can_take(v, c) {
            continue;
        }
        s.assign(v, c);
        s.highest_used = hi.max(c);
        let found = exists_rec(s, w)?;
        s.unassign(v);
        s.highest_used = hi;
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

/// One disagreement between the flow checker and the coloring search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckMismatch {
    pub w: Vec<usize>,
    pub flow_feasible: bool,
    pub coloring_exists: bool,
}

/// Result of sweeping candidate sets on one instance.
#[derive(Debug, Clone)]
pub struct CrossCheckReport {
    pub k: usize,
    pub subsets_checked: usize,
    pub mismatch: Option<CrossCheckMismatch>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Checks, for every `W ⊆ D_k` with `|W| ≤ min(k, size_cap)`, that the
/// flow network routes `|W|` units exactly when the coloring search finds
/// a proper k-coloring realizing all of `W`. Requires `k` above the
/// largest block size, like the network construction itself.
pub fn cross_check_flow_vs_coloring(
    vg: &ValidatedGraph,
    rbt: &RootedBlockTree,
    k: usize,
    size_cap: usize,
    budget: &Budget,
) -> Result<CrossCheckReport, OracleError> {
    let dense = vg.profile().dense_vertices(k);
    let cap = size_cap.min(k);
    let mut chosen = Vec::new();
    let mut report = CrossCheckReport {
        k,
        subsets_checked: 0,
        mismatch: None,
    };
    sweep_subsets(vg, rbt, k, budget, &dense, cap, 0, &mut chosen, &mut report)?;
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn sweep_subsets(
    vg: &ValidatedGraph,
    rbt: &RootedBlockTree,
    k: usize,
    budget: &Budget,
    dense: &[usize],
    cap: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    report: &mut CrossCheckReport,
) -> Result<bool, OracleError> {
    let flow = is_flow_feasible(vg.graph(), vg.decomp(), rbt, chosen, k)?;
    let coloring = exists_coloring_realizing(vg.graph(), chosen, k, budget)?;
    report.subsets_checked += 1;
    if flow != coloring {
        report.mismatch = Some(CrossCheckMismatch {
            w: chosen.clone(),
            flow_feasible: flow,
            coloring_exists: coloring,
        });
        return Ok(true);
    }
    if chosen.len() == cap {
        return Ok(false);
    }
    for i in from..dense.len() {
        chosen.push(dense[i]);
        let stop = sweep_subsets(vg, rbt, k, budget, dense, cap, i + 1, chosen, report)?;
        chosen.pop();
        if stop {
            return Ok(true);
        }
    }
    Ok(false)
}

//! Dynamic program over the rooted block tree.
//!
//! Instead of materializing one flow network per candidate set `W`, the
//! solver sweeps the block tree bottom-up and records, per block, which
//! boundary profiles some flow can realize. A profile says how many units
//! cross each part of the block's frontier; the stored value is the most
//! flow that can additionally land on the block's remaining vertex nodes.
//! Merging a child amounts to deciding whether its cut vertex stays a plain
//! pass-through (weak case) or becomes a new source (strong case, available
//! only when the cut vertex has degree at least k - 1).
//!
//! The decision "does some W of size k route fully" then reads off the root
//! table, and the b-chromatic number scans k downward.

use crate::blocks::{root_decomposition, BlockDecomposition, RootedBlockTree, ValidateError};
use crate::graph::{DegreeProfile, SimpleGraph};
use std::fmt::Write as _;
use thiserror::Error;

/// Table value: a maximum flow amount, or [`INFEASIBLE`].
pub type Val = i64;

/// Sentinel for profiles no flow realizes. Far below every reachable value
/// so that max-combining never needs a special case, yet far from i64::MIN
/// so accidental arithmetic on it stays visibly enormous instead of
/// wrapping.
pub const INFEASIBLE: Val = i64::MIN / 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DpError {
    #[error("k must be at least 1")]
    InvalidK,
    #[error("the table recurrence needs k > omega, got k = {k} with omega = {omega}")]
    KNotAboveClique { k: usize, omega: usize },
}

/// A graph that passed structural validation, bundled with its block
/// decomposition and degree data. All solver entry points start here.
#[derive(Debug, Clone)]
pub struct ValidatedGraph {
    graph: SimpleGraph,
    decomp: BlockDecomposition,
    profile: DegreeProfile,
}

impl ValidatedGraph {
    pub fn new(graph: SimpleGraph) -> Result<Self, ValidateError> {
        let decomp = crate::blocks::validate_claw_free_block(&graph)?;
        let profile = DegreeProfile::new(&graph, &decomp);
        Ok(ValidatedGraph {
            graph,
            decomp,
            profile,
        })
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn decomp(&self) -> &BlockDecomposition {
        &self.decomp
    }

    pub fn profile(&self) -> &DegreeProfile {
        &self.profile
    }

    /// Rooted block tree at the given block.
    pub fn rooted(&self, root_block: usize) -> Result<RootedBlockTree, ValidateError> {
        root_decomposition(&self.decomp, root_block)
    }

    /// Rooted block tree at the default root (block 0).
    pub fn rooted_default(&self) -> RootedBlockTree {
        root_decomposition(&self.decomp, 0).expect("block 0 exists in a validated graph")
    }
}

/// Index into a partial-merge table: `b` units through the vertex node
/// shared with the parent, `j1` units into the cut-vertex nodes of the
/// children merged so far, `j2` units into the block's cash node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PKey {
    pub b: usize,
    pub j1: usize,
    pub j2: usize,
}

/// Index into a finished block table: `b` as in [`PKey`], `j` units into
/// the block's cash node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SKey {
    pub b: usize,
    pub j: usize,
}

/// Block geometry a combine step needs: `q` vertex nodes besides the one
/// shared with the parent, `merged` children already folded in.
#[derive(Debug, Clone, Copy)]
pub struct Geometry {
    pub q: usize,
    pub merged: usize,
}

/// Per-block table while children are being merged. Entry `(b, j1, j2)`
/// holds the most flow that can reach the still-unmerged vertex nodes.
#[derive(Debug, Clone)]
pub struct PTable {
    pub block: usize,
    pub q: usize,
    pub merged: usize,
    b_dim: usize,
    j1_dim: usize,
    j2_dim: usize,
    vals: Vec<Val>,
}

impl PTable {
    fn idx(&self, b: usize, j1: usize, j2: usize) -> usize {
        (b * self.j1_dim + j1) * self.j2_dim + j2
    }

    pub fn get(&self, b: usize, j1: usize, j2: usize) -> Val {
        self.vals[self.idx(b, j1, j2)]
    }

    fn set(&mut self, b: usize, j1: usize, j2: usize, v: Val) {
        let i = self.idx(b, j1, j2);
        self.vals[i] = v;
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.b_dim, self.j1_dim, self.j2_dim)
    }
}

/// Finished table of one block: entry `(b, j)` holds the most flow that can
/// land on the block's own vertex nodes besides the shared one.
#[derive(Debug, Clone)]
pub struct STable {
    pub block: usize,
    b_dim: usize,
    j_dim: usize,
    vals: Vec<Val>,
}

impl STable {
    pub fn get(&self, b: usize, j: usize) -> Val {
        self.vals[b * self.j_dim + j]
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.b_dim, self.j_dim)
    }
}

/// Table for a block before any child is merged. Only the empty flow
/// exists: nothing can reach the shared vertex node or the cash node yet.
pub fn base_p_table(
    block: usize,
    is_root: bool,
    num_children: usize,
    q: usize,
    j2_dim: usize,
) -> PTable {
    let b_dim = if is_root { 1 } else { 2 };
    let j1_dim = num_children + 1;
    let mut t = PTable {
        block,
        q,
        merged: 0,
        b_dim,
        j1_dim,
        j2_dim,
        vals: vec![INFEASIBLE; b_dim * j1_dim * j2_dim],
    };
    t.set(0, 0, 0, 0);
    t
}

/// Merge step where the next child's cut vertex is a pass-through, not a
/// source. `e1`/`w1` come from the partial table, `e2`/`w2` from the
/// child's finished table, and the result is the value the merged flow
/// gives `target`, or [`INFEASIBLE`].
///
/// The child contributes a pool of `w2 + e2.j` movable units (spare flow
/// on its vertex nodes plus its cash), which must cover every increase the
/// target demands: `b - e1.b` onto the shared node, `d1` onto earlier cut
/// nodes, `d2` into the cash node. Flow already sitting on the cut vertex
/// node (either carried up by the child, `e2.b`, or placed there by the
/// old flow) stays, which is what the `t` window tracks: `t` is the total
/// on that node after the merge.
pub fn weak_combine(
    e1: PKey,
    w1: Val,
    e2: (usize, usize),
    w2: Val,
    target: PKey,
    geom: Geometry,
) -> Val {
    if w1 < 0 || w2 < 0 {
        return INFEASIBLE;
    }
    let (q, l) = (geom.q as i64, geom.merged as i64);
    let (b, j1, j2) = (target.b as i64, target.j1 as i64, target.j2 as i64);
    let (b1, j1p, j2p) = (e1.b as i64, e1.j1 as i64, e1.j2 as i64);
    let (b2, jc) = (e2.0 as i64, e2.1 as i64);

    if b1 > b {
        return INFEASIBLE;
    }
    let d1 = j1 - j1p - b2;
    if d1 < 0 {
        return INFEASIBLE;
    }
    let d2 = j2 - j2p;
    if d2 < 0 {
        return INFEASIBLE;
    }
    // Feasible window for t. Lower end: the unit the child carries up has
    // nowhere else to go, and j1 minus the merged cut nodes' capacity.
    // Upper end: node capacity 1, the old flow can re-aim at most w1 units
    // here, and overshooting d1 is pointless.
    let t_hi = 1.min(b2 + w1).min(b2 + d1);
    let t_lo = b2.max(j1 - l);
    if t_lo > t_hi {
        return INFEASIBLE;
    }
    // Check the pool at the cheapest t; the achievable value is the same
    // for every feasible t because a unit kept on the cut node frees the
    // pool by exactly the unit it costs elsewhere.
    if w2 + jc < (b - b1) + (d1 + b2 - t_hi) + d2 {
        return INFEASIBLE;
    }
    (q - (l + 1)).min(w1 + w2 + jc - ((b - b1) + d1 + d2))
}

/// Merge step where the next child's cut vertex becomes a source, which is
/// only possible when its degree is at least k - 1. The new unit enters
/// through the child's copy of the cut vertex, so the child entry must
/// have `e2.b = 0` and the target must count the unit in `j1`.
///
/// The child's movable units now travel two roads: its cash (`e2.j`) goes
/// straight to this block's vertex nodes, while spare flow on its vertex
/// nodes (`w2`) either funds the cash node increase `d2` directly or rides
/// the repeat-color channel, which holds at most `deg_x - k + 1` units, to
/// the vertex nodes. The scan over `r1` splits that channel between
/// covering demand and padding the value.
#[allow(clippy::too_many_arguments)]
pub fn strong_combine(
    e1: PKey,
    w1: Val,
    e2: (usize, usize),
    w2: Val,
    target: PKey,
    geom: Geometry,
    deg_x: usize,
    k: usize,
) -> Val {
    if w1 < 0 || w2 < 0 || e2.0 != 0 {
        return INFEASIBLE;
    }
    let dcap = deg_x as i64 + 1 - k as i64;
    if dcap < 0 {
        return INFEASIBLE;
    }
    let (q, l) = (geom.q as i64, geom.merged as i64);
    let (b, j1, j2) = (target.b as i64, target.j1 as i64, target.j2 as i64);
    let (b1, j1p, j2p) = (e1.b as i64, e1.j1 as i64, e1.j2 as i64);
    let jc = e2.1 as i64;

    if b1 > b || j1 < 1 {
        return INFEASIBLE;
    }
    let a0 = b - b1;
    let a1 = j1 - 1 - j1p;
    if a1 < 0 {
        return INFEASIBLE;
    }
    let d2 = j2 - j2p;
    if d2 < 0 || d2 > w2 {
        return INFEASIBLE;
    }
    let mut best = INFEASIBLE;
    for r1 in 0..=dcap {
        if d2 > w2 - r1 {
            break;
        }
        if jc + r1 < a0 + a1 {
            continue;
        }
        let r2 = (w2 - r1 - d2).min(dcap - r1);
        let v = (q - l - 1).min(w1 + jc + r1 + r2 - a0 - a1);
        best = best.max(v);
    }
    best
}

/// Folds one child's finished table into the partial table, trying both
/// merge modes for every entry pair. `deg_x` is the degree of the cut
/// vertex between the two blocks in the whole graph.
pub fn combine_child(p: &PTable, s_child: &STable, deg_x: usize, k: usize) -> PTable {
    let (b_dim, j1_dim, j2_dim) = p.dims();
    let (cb_dim, cj_dim) = s_child.dims();
    let geom = Geometry {
        q: p.q,
        merged: p.merged,
    };
    let strong_possible = deg_x + 1 >= k;

    let mut out = PTable {
        block: p.block,
        q: p.q,
        merged: p.merged + 1,
        b_dim,
        j1_dim,
        j2_dim,
        vals: vec![INFEASIBLE; b_dim * j1_dim * j2_dim],
    };

    for b in 0..b_dim {
        for j1 in 0..=(p.merged + 1).min(j1_dim - 1) {
            for j2 in 0..j2_dim {
                let target = PKey { b, j1, j2 };
                let mut best = INFEASIBLE;
                for b1 in 0..=b {
                    for j1p in 0..=j1.min(p.merged) {
                        for j2p in 0..=j2 {
                            let w1 = p.get(b1, j1p, j2p);
                            if w1 < 0 {
                                continue;
                            }
                            let e1 = PKey {
                                b: b1,
                                j1: j1p,
                                j2: j2p,
                            };
                            for b2 in 0..cb_dim {
                                for jc in 0..cj_dim {
                                    let w2 = s_child.get(b2, jc);
                                    if w2 < 0 {
                                        continue;
                                    }
                                    best =
                                        best.max(weak_combine(e1, w1, (b2, jc), w2, target, geom));
                                    if strong_possible && b2 == 0 {
                                        best = best.max(strong_combine(
                                            e1,
                                            w1,
                                            (b2, jc),
                                            w2,
                                            target,
                                            geom,
                                            deg_x,
                                            k,
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
                out.set(b, j1, j2, if best < 0 { INFEASIBLE } else { best });
            }
        }
    }
    out
}

/// Collapses a fully merged table: flow on the merged cut nodes and flow on
/// the remaining nodes both count toward the block's own vertex nodes.
pub fn finalize_s_table(p: &PTable) -> STable {
    let (b_dim, j1_dim, j2_dim) = p.dims();
    let mut s = STable {
        block: p.block,
        b_dim,
        j_dim: j2_dim,
        vals: vec![INFEASIBLE; b_dim * j2_dim],
    };
    for b in 0..b_dim {
        for j in 0..j2_dim {
            let mut best = INFEASIBLE;
            for j1 in 0..j1_dim {
                let w = p.get(b, j1, j);
                if w >= 0 {
                    best = best.max(w + j1 as i64);
                }
            }
            s.vals[b * j2_dim + j] = best;
        }
    }
    s
}

fn solve_root_table(
    vg: &ValidatedGraph,
    rbt: &RootedBlockTree,
    k: usize,
    mut trace: Option<&mut String>,
) -> STable {
    let decomp = vg.decomp();
    let mut tables: Vec<Option<STable>> = vec![None; decomp.block_count()];
    for block in rbt.post_order() {
        let size = decomp.block(block).len();
        let is_root = block == rbt.root();
        let q = if is_root { size } else { size - 1 };
        let children = rbt.children(block);
        let mut p = base_p_table(block, is_root, children.len(), q, k - size + 1);
        for &(cut, child) in children {
            let s_child = tables[child]
                .take()
                .expect("children precede parents in post order");
            p = combine_child(&p, &s_child, vg.graph().degree(cut), k);
        }
        let s = finalize_s_table(&p);
        if let Some(out) = trace.as_deref_mut() {
            dump_tables(out, &p, &s);
        }
        tables[block] = Some(s);
    }
    tables[rbt.root()].take().expect("root visited last")
}

fn dump_tables(out: &mut String, p: &PTable, s: &STable) {
    let (b_dim, j1_dim, j2_dim) = p.dims();
    writeln!(out, "block {} P_{}", p.block, p.merged).unwrap();
    for b in 0..b_dim {
        for j1 in 0..j1_dim {
            for j2 in 0..j2_dim {
                let v = p.get(b, j1, j2);
                if v >= 0 {
                    writeln!(out, "  ({b},{j1},{j2}) = {v}").unwrap();
                }
            }
        }
    }
    let (sb_dim, sj_dim) = s.dims();
    writeln!(out, "block {} S", s.block).unwrap();
    for b in 0..sb_dim {
        for j in 0..sj_dim {
            let v = s.get(b, j);
            if v >= 0 {
                writeln!(out, "  ({b},{j}) = {v}").unwrap();
            }
        }
    }
}

/// Largest `|W|` any flow can route with budget `k`, read off the root
/// table. Defined for `k > omega` only; never exceeds `k`.
pub fn max_basis_size(
    vg: &ValidatedGraph,
    rbt: &RootedBlockTree,
    k: usize,
) -> Result<usize, DpError> {
    let omega = vg.profile().omega();
    if k <= omega {
        return Err(DpError::KNotAboveClique { k, omega });
    }
    let s = solve_root_table(vg, rbt, k, None);
    let (_, j_dim) = s.dims();
    let mut best = 0i64;
    for j in 0..j_dim {
        let v = s.get(0, j);
        if v >= 0 {
            best = best.max(v + j as i64);
        }
    }
    Ok(best as usize)
}

/// Per-block table dump of the run for `k`, for debugging and golden tests.
pub fn trace_tables(
    vg: &ValidatedGraph,
    rbt: &RootedBlockTree,
    k: usize,
) -> Result<String, DpError> {
    let omega = vg.profile().omega();
    if k <= omega {
        return Err(DpError::KNotAboveClique { k, omega });
    }
    let mut out = String::new();
    solve_root_table(vg, rbt, k, Some(&mut out));
    Ok(out)
}

/// Whether the graph has a b-coloring with exactly `k` colors, using the
/// given rooting for the table sweep.
pub fn decide_k_on(vg: &ValidatedGraph, rbt: &RootedBlockTree, k: usize) -> Result<bool, DpError> {
    if k == 0 {
        return Err(DpError::InvalidK);
    }
    let profile = vg.profile();
    let omega = profile.omega();
    if k < omega {
        return Ok(false);
    }
    if k == omega {
        return Ok(true);
    }
    if k > profile.m_degree() || profile.dense_count(k) < k {
        return Ok(false);
    }
    Ok(max_basis_size(vg, rbt, k).expect("k > omega checked") >= k)
}

/// Whether the graph has a b-coloring with exactly `k` colors.
pub fn decide_k(vg: &ValidatedGraph, k: usize) -> Result<bool, DpError> {
    if k == 0 {
        return Err(DpError::InvalidK);
    }
    let profile = vg.profile();
    if k < profile.omega() {
        return Ok(false);
    }
    if k == profile.omega() {
        return Ok(true);
    }
    if k > profile.m_degree() || profile.dense_count(k) < k {
        return Ok(false);
    }
    decide_k_on(vg, &vg.rooted_default(), k)
}

/// The b-chromatic number: scans k downward from the degree bound; the
/// clique number always answers yes, so the scan terminates.
pub fn b_chromatic_on(vg: &ValidatedGraph, rbt: &RootedBlockTree) -> usize {
    let profile = vg.profile();
    for k in (profile.omega()..=profile.m_degree()).rev() {
        if decide_k_on(vg, rbt, k).expect("k >= omega >= 1") {
            return k;
        }
    }
    profile.omega()
}

/// The b-chromatic number with the default rooting.
pub fn b_chromatic(vg: &ValidatedGraph) -> usize {
    let profile = vg.profile();
    let (omega, m) = (profile.omega(), profile.m_degree());
    if m == omega {
        return omega;
    }
    b_chromatic_on(vg, &vg.rooted_default())
}

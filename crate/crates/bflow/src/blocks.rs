//! Block-cut structure: biconnected components, validation of the
//! claw-free block-graph conditions, and the rooted block tree the solver
//! runs on.

use crate::graph::SimpleGraph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ValidateError {
    #[error("graph is empty")]
    Empty,
    #[error("graph is not connected")]
    NotConnected,
    #[error("block {block:?} is not a clique: vertices {u} and {v} are not adjacent")]
    BlockNotClique {
        block: Vec<usize>,
        u: usize,
        v: usize,
    },
    #[error("vertex {vertex} lies in {count} blocks; at most 2 are allowed (induced claw)")]
    ClawAt { vertex: usize, count: usize },
    #[error("block id {id} out of range ({count} blocks)")]
    InvalidBlockId { id: usize, count: usize },
}

/// The blocks (maximal 2-connected components) of a connected graph,
/// with dense ids. Block vertex lists are sorted, and the blocks
/// themselves are sorted lexicographically, so ids are stable for a given
/// input graph.
#[derive(Debug, Clone)]
pub struct BlockDecomposition {
    blocks: Vec<Vec<usize>>,
    blocks_of: Vec<Vec<usize>>,
}

impl BlockDecomposition {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block(&self, id: usize) -> &[usize] {
        &self.blocks[id]
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Ids of the blocks containing `v` (one for internal vertices, two
    /// for cut vertices).
    pub fn blocks_of(&self, v: usize) -> &[usize] {
        &self.blocks_of[v]
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.blocks_of[v].len() == 2
    }

    pub fn cut_vertices(&self) -> Vec<usize> {
        (0..self.blocks_of.len())
            .filter(|&v| self.is_cut_vertex(v))
            .collect()
    }

    pub fn max_block_size(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).max().unwrap_or(0)
    }
}

/// Computes the biconnected components of `g` and checks the two
/// conditions that characterize claw-free block graphs: every block is a
/// clique, and every vertex lies in at most two blocks.
pub fn validate_claw_free_block(g: &SimpleGraph) -> Result<BlockDecomposition, ValidateError> {
    if g.n() == 0 {
        return Err(ValidateError::Empty);
    }
    if !g.is_connected() {
        return Err(ValidateError::NotConnected);
    }

    let mut blocks = biconnected_components(g);
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort();

    let mut blocks_of = vec![Vec::new(); g.n()];
    for (id, block) in blocks.iter().enumerate() {
        for &v in block {
            blocks_of[v].push(id);
        }
    }

    for block in &blocks {
        for i in 0..block.len() {
            for j in i + 1..block.len() {
                if !g.has_edge(block[i], block[j]) {
                    return Err(ValidateError::BlockNotClique {
                        block: block.clone(),
                        u: block[i],
                        v: block[j],
                    });
                }
            }
        }
    }
    for (v, ids) in blocks_of.iter().enumerate() {
        if ids.len() > 2 {
            return Err(ValidateError::ClawAt {
                vertex: v,
                count: ids.len(),
            });
        }
    }

    Ok(BlockDecomposition { blocks, blocks_of })
}

/// Iterative lowpoint search over a connected graph; returns the vertex
/// sets of the biconnected components. A single isolated vertex forms one
/// block of size 1.
fn biconnected_components(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    if n == 1 {
        return vec![vec![0]];
    }
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();

    // Frames: (vertex, parent, next neighbor index).
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, UNSEEN, 0)];
    disc[0] = timer;
    low[0] = timer;
    timer += 1;

    while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
        if *idx < g.degree(v) {
            let w = g.neighbors(v)[*idx];
            *idx += 1;
            if disc[w] == UNSEEN {
                edge_stack.push((v, w));
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push((w, v, 0));
            } else if w != parent && disc[w] < disc[v] {
                edge_stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&mut (u, _, _)) = stack.last_mut() {
                low[u] = low[u].min(low[v]);
                if low[v] >= disc[u] {
                    // Everything above the tree edge (u, v) is one block.
                    let mut verts = Vec::new();
                    while let Some(&(a, b)) = edge_stack.last() {
                        edge_stack.pop();
                        verts.push(a);
                        verts.push(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    verts.sort_unstable();
                    verts.dedup();
                    blocks.push(verts);
                }
            }
        }
    }
    blocks
}

/// The block-cut structure rooted at one block: parent pointers, the cut
/// vertex connecting each block to its parent, and per-block ordered
/// children. Immutable during solving; tests may reorder children.
#[derive(Debug, Clone)]
pub struct RootedBlockTree {
    root: usize,
    parent: Vec<Option<usize>>,
    cut_to_parent: Vec<Option<usize>>,
    /// Per block: `(cut vertex, child block)` pairs. Each cut vertex of a
    /// block other than its parent connector has exactly one child block.
    children: Vec<Vec<(usize, usize)>>,
}

impl RootedBlockTree {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, block: usize) -> Option<usize> {
        self.parent[block]
    }

    /// The cut vertex separating `block` from its parent; `None` at the
    /// root.
    pub fn cut_to_parent(&self, block: usize) -> Option<usize> {
        self.cut_to_parent[block]
    }

    pub fn children(&self, block: usize) -> &[(usize, usize)] {
        &self.children[block]
    }

    /// Blocks ordered so that every block appears after all of its
    /// children.
    pub fn post_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.children.len());
        let mut stack = vec![(self.root, false)];
        while let Some((b, expanded)) = stack.pop() {
            if expanded {
                order.push(b);
            } else {
                stack.push((b, true));
                for &(_, c) in &self.children[b] {
                    stack.push((c, false));
                }
            }
        }
        order
    }

    /// Vertices of `block` in solving order: the cut vertex to the parent
    /// first (absent at the root), then the cut vertices with children in
    /// the stored child order, then the remaining vertices.
    pub fn vertex_order(&self, block: usize, decomp: &BlockDecomposition) -> Vec<usize> {
        let mut order = Vec::with_capacity(decomp.block(block).len());
        if let Some(x0) = self.cut_to_parent[block] {
            order.push(x0);
        }
        for &(x, _) in &self.children[block] {
            order.push(x);
        }
        for &v in decomp.block(block) {
            if Some(v) != self.cut_to_parent[block]
                && !self.children[block].iter().any(|&(x, _)| x == v)
            {
                order.push(v);
            }
        }
        order
    }

    /// Randomly permutes every block's child list. Solver results must not
    /// depend on child order; the independence tests rely on this hook.
    pub fn shuffle_children(&mut self, rng: &mut impl rand::Rng) {
        use rand::seq::SliceRandom;
        for list in &mut self.children {
            list.shuffle(rng);
        }
    }
}

/// Orients the block-cut structure away from `root`. Children are stored
/// in ascending cut-vertex order, which makes the construction
/// deterministic for a given decomposition.
pub fn root_decomposition(
    decomp: &BlockDecomposition,
    root: usize,
) -> Result<RootedBlockTree, ValidateError> {
    let nb = decomp.block_count();
    if root >= nb {
        return Err(ValidateError::InvalidBlockId {
            id: root,
            count: nb,
        });
    }
    let mut parent = vec![None; nb];
    let mut cut_to_parent = vec![None; nb];
    let mut children = vec![Vec::new(); nb];
    let mut seen = vec![false; nb];
    let mut queue = std::collections::VecDeque::from([root]);
    seen[root] = true;
    while let Some(b) = queue.pop_front() {
        for &v in decomp.block(b) {
            if Some(v) == cut_to_parent[b] {
                continue;
            }
            for &other in decomp.blocks_of(v) {
                if other != b && !seen[other] {
                    seen[other] = true;
                    parent[other] = Some(b);
                    cut_to_parent[other] = Some(v);
                    children[b].push((v, other));
                    queue.push_back(other);
                }
            }
        }
    }
    Ok(RootedBlockTree {
        root,
        parent,
        cut_to_parent,
        children,
    })
}

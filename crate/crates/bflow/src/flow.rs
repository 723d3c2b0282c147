//! The flow network that certifies whether a vertex set `W` can
//! simultaneously realize distinct colors in some proper k-coloring, plus a
//! node-capacitated max-flow solver. This is the solver-independent checker
//! the dynamic program is validated against.

use crate::blocks::{BlockDecomposition, RootedBlockTree};
use crate::graph::SimpleGraph;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NetworkError {
    #[error("k = {k} must exceed the largest block size {omega}")]
    KTooSmall { k: usize, omega: usize },
    #[error("vertex {vertex} has degree {degree} < k - 1 = {}, so it cannot realize a color", k - 1)]
    SourceNotDense {
        vertex: usize,
        degree: usize,
        k: usize,
    },
}

/// What a network node stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    /// One unit of color passing through vertex `vertex` inside `block`.
    BlockVertex { block: usize, vertex: usize },
    /// Colors absent from `block`; capacity `k - |block|`.
    BlockCash { block: usize },
    /// Colors repeated across the cut vertex between `child` and `parent`.
    PairCash { child: usize, parent: usize },
    /// The color that `vertex` must realize; emits one unit.
    Source { vertex: usize },
}

#[derive(Debug, Clone, Copy)]
pub struct NetNode {
    pub kind: NodeKind,
    pub capacity: usize,
}

/// Directed network with capacities on nodes. Sinks are the nodes of the
/// root block; a set `W` is certified feasible iff `|W|` unit paths can be
/// routed from the sources to the sinks.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    pub nodes: Vec<NetNode>,
    pub arcs: Vec<(usize, usize)>,
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
    pub k: usize,
}

#[derive(Debug, Clone)]
pub struct FlowResult {
    /// Units routed from sources to sinks.
    pub value: usize,
    /// Flow through each node, indexed like `FlowNetwork::nodes`.
    pub per_node: Vec<usize>,
}

/// Builds the network for `(G, W)` with color budget `k`. Requires
/// `k > omega` and every vertex of `W` to have degree at least `k - 1`.
pub fn build_network(
    g: &SimpleGraph,
    decomp: &BlockDecomposition,
    rbt: &RootedBlockTree,
    w: &[usize],
    k: usize,
) -> Result<FlowNetwork, NetworkError> {
    let omega = decomp.max_block_size();
    if k <= omega {
        return Err(NetworkError::KTooSmall { k, omega });
    }
    for &v in w {
        if g.degree(v) + 1 < k {
            return Err(NetworkError::SourceNotDense {
                vertex: v,
                degree: g.degree(v),
                k,
            });
        }
    }
    let in_w = {
        let mut flags = vec![false; g.n()];
        for &v in w {
            flags[v] = true;
        }
        flags
    };

    let nb = decomp.block_count();
    let mut nodes = Vec::new();
    let mut arcs = Vec::new();
    let mut sources = Vec::new();

    // Vertex nodes and the cash node of each block, in block-id order.
    let mut vertex_base = vec![0usize; nb];
    let mut cash_node = vec![0usize; nb];
    for b in 0..nb {
        vertex_base[b] = nodes.len();
        for &v in decomp.block(b) {
            nodes.push(NetNode {
                kind: NodeKind::BlockVertex {
                    block: b,
                    vertex: v,
                },
                capacity: 1,
            });
        }
        cash_node[b] = nodes.len();
        nodes.push(NetNode {
            kind: NodeKind::BlockCash { block: b },
            capacity: k - decomp.block(b).len(),
        });
    }
    let vertex_node = |b: usize, v: usize| -> usize {
        vertex_base[b]
            + decomp
                .block(b)
                .binary_search(&v)
                .expect("vertex not in block")
    };

    // One gadget per parent-child block pair.
    for b in 0..nb {
        for &(x, child) in rbt.children(b) {
            let pair = nodes.len();
            if !in_w[x] {
                nodes.push(NetNode {
                    kind: NodeKind::PairCash { child, parent: b },
                    capacity: k - 1,
                });
                for &y in decomp.block(child) {
                    if y != x {
                        arcs.push((vertex_node(child, y), pair));
                    }
                }
                for &z in decomp.block(b) {
                    if z != x {
                        arcs.push((pair, vertex_node(b, z)));
                    }
                }
                arcs.push((vertex_node(child, x), vertex_node(b, x)));
                arcs.push((cash_node[child], pair));
                arcs.push((pair, cash_node[b]));
            } else {
                // Degree in the full graph, not the subgraph the child
                // network spans: W membership is defined globally.
                nodes.push(NetNode {
                    kind: NodeKind::PairCash { child, parent: b },
                    capacity: g.degree(x) + 1 - k,
                });
                let source = nodes.len();
                nodes.push(NetNode {
                    kind: NodeKind::Source { vertex: x },
                    capacity: 1,
                });
                sources.push(source);
                for &y in decomp.block(child) {
                    if y != x {
                        arcs.push((vertex_node(child, y), pair));
                        arcs.push((vertex_node(child, y), cash_node[b]));
                    }
                }
                for &z in decomp.block(b) {
                    if z != x {
                        arcs.push((cash_node[child], vertex_node(b, z)));
                        arcs.push((pair, vertex_node(b, z)));
                    }
                }
                arcs.push((vertex_node(child, x), vertex_node(b, x)));
                arcs.push((source, vertex_node(child, x)));
            }
        }
    }

    let root = rbt.root();
    let mut sinks: Vec<usize> = decomp
        .block(root)
        .iter()
        .map(|&v| vertex_node(root, v))
        .collect();
    sinks.push(cash_node[root]);

    Ok(FlowNetwork {
        nodes,
        arcs,
        sources,
        sinks,
        k,
    })
}

/// Maximum number of unit source-to-sink paths respecting node capacities.
/// Standard reduction: split every node into an in/out pair joined by an
/// arc of the node's capacity, then run breadth-first augmentation.
pub fn max_flow(net: &FlowNetwork) -> FlowResult {
    let n = net.nodes.len();
    // Split node i into 2i (in) and 2i+1 (out); super source/sink at the end.
    let s = 2 * n;
    let t = 2 * n + 1;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (to, cap, paired reverse index)
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * n + 2];
    let push = |edges: &mut Vec<(usize, usize, usize)>,
                adj: &mut Vec<Vec<usize>>,
                u: usize,
                v: usize,
                cap: usize| {
        let id = edges.len();
        edges.push((v, cap, id + 1));
        edges.push((u, 0, id));
        adj[u].push(id);
        adj[v].push(id + 1);
    };

    let mut split_arc = vec![0usize; n];
    for (i, node) in net.nodes.iter().enumerate() {
        split_arc[i] = edges.len();
        push(&mut edges, &mut adj, 2 * i, 2 * i + 1, node.capacity);
    }
    for &(u, v) in &net.arcs {
        push(&mut edges, &mut adj, 2 * u + 1, 2 * v, usize::MAX / 2);
    }
    for &src in &net.sources {
        push(&mut edges, &mut adj, s, 2 * src, 1);
    }
    for &sink in &net.sinks {
        push(&mut edges, &mut adj, 2 * sink + 1, t, usize::MAX / 2);
    }

    let mut value = 0;
    loop {
        // BFS for a shortest augmenting path.
        let mut pred: Vec<Option<usize>> = vec![None; 2 * n + 2];
        let mut queue = std::collections::VecDeque::from([s]);
        let mut reached = false;
        'bfs: while let Some(u) = queue.pop_front() {
            for &eid in &adj[u] {
                let (to, cap, _) = edges[eid];
                if cap > 0 && pred[to].is_none() && to != s {
                    pred[to] = Some(eid);
                    if to == t {
                        reached = true;
                        break 'bfs;
                    }
                    queue.push_back(to);
                }
            }
        }
        if !reached {
            break;
        }
        // Unit augmentation (all source arcs have capacity 1).
        let mut v = t;
        while v != s {
            let eid = pred[v].unwrap();
            edges[eid].1 -= 1;
            let rev = edges[eid].2;
            edges[rev].1 += 1;
            v = edges[rev].0;
        }
        value += 1;
    }

    let per_node = (0..n)
        .map(|i| {
            let (_, _, rev) = edges[split_arc[i]];
            edges[rev].1
        })
        .collect();
    FlowResult { value, per_node }
}

/// True iff every vertex of `W` can be routed, i.e. the network admits a
/// flow of value `|W|`.
pub fn is_flow_feasible(
    g: &SimpleGraph,
    decomp: &BlockDecomposition,
    rbt: &RootedBlockTree,
    w: &[usize],
    k: usize,
) -> Result<bool, NetworkError> {
    let net = build_network(g, decomp, rbt, w, k)?;
    Ok(max_flow(&net).value == w.len())
}

impl FlowNetwork {
    /// Deterministic text form for golden tests: one `id kind capacity`
    /// line per node, then one `from -> to` line per arc.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, node) in self.nodes.iter().enumerate() {
            let kind = match node.kind {
                NodeKind::BlockVertex { block, vertex } => {
                    format!("block_vertex({block},{vertex})")
                }
                NodeKind::BlockCash { block } => format!("block_cash({block})"),
                NodeKind::PairCash { child, parent } => format!("pair_cash({child},{parent})"),
                NodeKind::Source { vertex } => format!("source({vertex})"),
            };
            writeln!(out, "{i} {kind} {}", node.capacity).unwrap();
        }
        for &(u, v) in &self.arcs {
            writeln!(out, "{u} -> {v}").unwrap();
        }
        out
    }
}

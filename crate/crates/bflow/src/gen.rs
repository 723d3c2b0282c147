//! Tree generators for tests, self-checks, and benchmarks.

use crate::graph::Tree;
use rand::Rng;
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

/// Uniformly random labeled tree with the given number of edges, decoded
/// from a random Prüfer sequence.
pub fn random_tree(edges: usize, rng: &mut impl Rng) -> Tree {
    let n = edges + 1;
    match n {
        1 => Tree::from_edges(1, []).unwrap(),
        2 => Tree::from_edges(2, [(0, 1)]).unwrap(),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            prufer_decode(n, &seq)
        }
    }
}

fn prufer_decode(n: usize, seq: &[usize]) -> Tree {
    let mut deg = vec![1usize; n];
    for &s in seq {
        deg[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| deg[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf, s));
        deg[s] -= 1;
        if deg[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(u) = leaves.pop().unwrap();
    let Reverse(v) = leaves.pop().unwrap();
    edges.push((u, v));
    Tree::from_edges(n, edges).unwrap()
}

/// Caterpillar: a spine path with `spine_edges` edges plus `leaves` pendant
/// vertices, each hung on a uniformly random spine vertex.
pub fn caterpillar(spine_edges: usize, leaves: usize, rng: &mut impl Rng) -> Tree {
    let spine = spine_edges + 1;
    let n = spine + leaves;
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    for leaf in 0..leaves {
        edges.push((rng.random_range(0..spine), spine + leaf));
    }
    Tree::from_edges(n, edges).unwrap()
}

/// All trees with exactly `n` vertices, one per isomorphism class, grown by
/// attaching a leaf to every vertex of every smaller tree and deduplicating
/// by canonical form.
pub fn all_trees(n: usize) -> Vec<Tree> {
    assert!(n >= 1, "a tree has at least one vertex");
    let mut current = vec![Tree::from_edges(1, []).unwrap()];
    for size in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for tree in &current {
            let base = tree.edge_list();
            for attach in 0..size - 1 {
                let mut edges = base.clone();
                edges.push((attach, size - 1));
                let grown = Tree::from_edges(size, edges).unwrap();
                if seen.insert(canonical_form(&grown)) {
                    next.push(grown);
                }
            }
        }
        current = next;
    }
    current
}

/// Canonical string invariant under isomorphism: the rooted shape string
/// taken at the centroid, minimized over both centroids when the tree has
/// two.
pub fn canonical_form(t: &Tree) -> String {
    let g = t.as_graph();
    centroids(t)
        .into_iter()
        .map(|c| shape(c, usize::MAX, g))
        .min()
        .expect("every tree has a centroid")
}

fn shape(v: usize, parent: usize, g: &crate::graph::SimpleGraph) -> String {
    let mut parts: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| shape(u, v, g))
        .collect();
    parts.sort();
    format!("({})", parts.concat())
}

fn centroids(t: &Tree) -> Vec<usize> {
    let g = t.as_graph();
    let n = g.n();
    if n == 1 {
        return vec![0];
    }
    // Subtree sizes from a post-order walk rooted at 0.
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![0usize];
    let mut visited = vec![false; n];
    while let Some(v) = stack.pop() {
        visited[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !visited[u] {
                parent[u] = v;
                stack.push(u);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
        }
    }
    let mut best = n;
    let mut result = Vec::new();
    for v in 0..n {
        let mut heaviest = n - size[v];
        for &u in g.neighbors(v) {
            if parent[u] == v {
                heaviest = heaviest.max(size[u]);
            }
        }
        if heaviest < best {
            best = heaviest;
            result.clear();
        }
        if heaviest == best {
            result.push(v);
        }
    }
    result
}

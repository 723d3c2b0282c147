//! Simple undirected graphs, trees, line graphs, and the degree-derived
//! quantities the solver works with.

use crate::blocks::BlockDecomposition;
use thiserror::Error;

/// Errors raised while constructing or parsing graphs and trees.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {id} out of range (vertex count is {n})")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("a tree on {n} vertices needs {} edges, found {m}", n - 1)]
    NotATree { n: usize, m: usize },
    #[error("tree has no edges, so its line graph would be empty")]
    EmptyLineGraph,
}

/// An undirected simple graph on vertices `0..n`, stored as sorted
/// adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl SimpleGraph {
    /// Builds a graph from an edge list. Rejects self-loops, duplicate edges
    /// (in either orientation), and out-of-range endpoints.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            insert_edge(&mut adj, u, v)?;
            m += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(SimpleGraph { adj, m })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut queue = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push(v);
                }
            }
        }
        reached == n
    }

    /// Serializes the graph in the edge-list format accepted by
    /// [`parse_graph`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn insert_edge(adj: &mut [Vec<usize>], u: usize, v: usize) -> Result<(), GraphError> {
    let n = adj.len();
    if u >= n {
        return Err(GraphError::VertexOutOfRange { id: u, n });
    }
    if v >= n {
        return Err(GraphError::VertexOutOfRange { id: v, n });
    }
    if u == v {
        return Err(GraphError::SelfLoop(u));
    }
    if adj[u].contains(&v) {
        return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
    }
    adj[u].push(v);
    adj[v].push(u);
    Ok(())
}

/// Parses the edge-list text format: a header line `n m`, followed by `m`
/// lines `u v`. Lines starting with `#` are comments; blank lines are
/// skipped. All errors carry the 1-based line number.
pub fn parse_graph(text: &str) -> Result<SimpleGraph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_no, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        msg: "missing `n m` header".into(),
    })?;
    let mut it = header.split_whitespace();
    let parse_num = |tok: Option<&str>, what: &str, line: usize| -> Result<usize, GraphError> {
        tok.ok_or_else(|| GraphError::Parse {
            line,
            msg: format!("missing {what}"),
        })?
        .parse::<usize>()
        .map_err(|_| GraphError::Parse {
            line,
            msg: format!("invalid {what}"),
        })
    };
    let n = parse_num(it.next(), "vertex count", header_no)?;
    let m = parse_num(it.next(), "edge count", header_no)?;
    if it.next().is_some() {
        return Err(GraphError::Parse {
            line: header_no,
            msg: "header must be exactly `n m`".into(),
        });
    }
    if n == 0 {
        return Err(GraphError::Parse {
            line: header_no,
            msg: "vertex count must be at least 1".into(),
        });
    }

    let mut adj = vec![Vec::new(); n];
    let mut found = 0;
    for (line, text) in lines {
        if found == m {
            return Err(GraphError::Parse {
                line,
                msg: format!("expected {m} edges, found more"),
            });
        }
        let mut it = text.split_whitespace();
        let u = parse_num(it.next(), "edge endpoint", line)?;
        let v = parse_num(it.next(), "edge endpoint", line)?;
        if it.next().is_some() {
            return Err(GraphError::Parse {
                line,
                msg: "edge line must be exactly `u v`".into(),
            });
        }
        insert_edge(&mut adj, u, v).map_err(|e| GraphError::Parse {
            line,
            msg: e.to_string(),
        })?;
        found += 1;
    }
    if found != m {
        return Err(GraphError::Parse {
            line: header_no,
            msg: format!("expected {m} edges, found {found}"),
        });
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(SimpleGraph { adj, m })
}

/// A connected graph with `n - 1` edges.
#[derive(Debug, Clone)]
pub struct Tree {
    graph: SimpleGraph,
}

impl Tree {
    pub fn from_graph(graph: SimpleGraph) -> Result<Self, GraphError> {
        let (n, m) = (graph.n(), graph.edge_count());
        if n == 0 || m + 1 != n {
            return Err(GraphError::NotATree { n, m });
        }
        if !graph.is_connected() {
            return Err(GraphError::NotConnected);
        }
        Ok(Tree { graph })
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        Tree::from_graph(SimpleGraph::from_edges(n, edges)?)
    }

    pub fn as_graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// The tree's edges in lexicographic order; their positions are the
    /// vertex ids of the line graph.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.graph.edges()
    }
}

/// Builds the line graph of a tree: one vertex per tree edge, two vertices
/// adjacent iff the edges share a tree endpoint. The tree must have at
/// least one edge.
pub fn line_graph_of_tree(t: &Tree) -> Result<SimpleGraph, GraphError> {
    if t.edge_count() == 0 {
        return Err(GraphError::EmptyLineGraph);
    }
    let edges = t.edge_list();
    let mut edge_id = vec![Vec::new(); t.n()];
    for (id, &(u, v)) in edges.iter().enumerate() {
        edge_id[u].push(id);
        edge_id[v].push(id);
    }
    let mut lg_edges = Vec::new();
    for ids in &edge_id {
        for i in 0..ids.len() {
            for j in i + 1..ids.len() {
                lg_edges.push((ids[i], ids[j]));
            }
        }
    }
    // Two distinct tree edges share at most one endpoint, so no pair is
    // generated twice.
    SimpleGraph::from_edges(edges.len(), lg_edges)
}

/// The largest `k` such that at least `k` vertices have degree at least
/// `k - 1`. An upper bound for the b-chromatic number.
pub fn m_degree(g: &SimpleGraph) -> usize {
    let mut degs: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    let mut m = 0;
    for k in 1..=degs.len() {
        if degs[k - 1] + 1 >= k {
            m = k;
        }
    }
    m
}

/// The vertices of degree at least `k - 1`.
pub fn dense_vertices(g: &SimpleGraph, k: usize) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.degree(v) + 1 >= k).collect()
}

/// Degrees, clique number, and the m-degree of a validated graph, bundled
/// for the solver. Immutable after construction.
#[derive(Debug, Clone)]
pub struct DegreeProfile {
    degrees: Vec<usize>,
    omega: usize,
    m_degree: usize,
}

impl DegreeProfile {
    pub fn new(g: &SimpleGraph, decomp: &BlockDecomposition) -> Self {
        DegreeProfile {
            degrees: (0..g.n()).map(|v| g.degree(v)).collect(),
            omega: decomp.max_block_size(),
            m_degree: m_degree(g),
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    /// Size of the largest block, which for block graphs is the clique
    /// number.
    pub fn omega(&self) -> usize {
        self.omega
    }

    pub fn m_degree(&self) -> usize {
        self.m_degree
    }

    pub fn dense_vertices(&self, k: usize) -> Vec<usize> {
        (0..self.degrees.len())
            .filter(|&v| self.degrees[v] + 1 >= k)
            .collect()
    }

    pub fn dense_count(&self, k: usize) -> usize {
        self.degrees.iter().filter(|&&d| d + 1 >= k).count()
    }

    pub fn is_dense(&self, v: usize, k: usize) -> bool {
        self.degrees[v] + 1 >= k
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{complete, path};

    #[test]
    fn parses_a_path() {
        let g = parse_graph("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parses_isolated_vertex() {
        let g = parse_graph("1 0\n").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_skips_comments_and_blanks() {
        let g = parse_graph("# a path\n\n3 2\n0 1\n# middle\n1 2\n\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn parse_rejects_self_loop() {
        let err = parse_graph("2 1\n0 0\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn parse_rejects_duplicate_edge() {
        let err = parse_graph("3 2\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn parse_rejects_out_of_range() {
        let err = parse_graph("2 1\n0 5\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn parse_rejects_wrong_edge_count() {
        assert!(parse_graph("3 2\n0 1\n").is_err());
        assert!(parse_graph("3 1\n0 1\n1 2\n").is_err());
    }

    #[test]
    fn edge_list_round_trips() {
        let g = parse_graph("4 3\n0 1\n0 2\n0 3\n").unwrap();
        assert_eq!(parse_graph(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn line_graph_of_star_is_complete() {
        let t = Tree::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let lg = line_graph_of_tree(&t).unwrap();
        assert_eq!(lg, complete(3));
    }

    #[test]
    fn line_graph_of_path_is_path() {
        let t = Tree::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let lg = line_graph_of_tree(&t).unwrap();
        assert_eq!(lg, path(3));
    }

    #[test]
    fn line_graph_of_double_star_is_bowtie() {
        // Centers 0-1, leaves 2,3 on 0 and 4,5 on 1. Edge ids in
        // lexicographic order: (0,1)=0, (0,2)=1, (0,3)=2, (1,4)=3, (1,5)=4.
        let t = Tree::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let lg = line_graph_of_tree(&t).unwrap();
        let bowtie =
            SimpleGraph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        assert_eq!(lg, bowtie);
    }

    #[test]
    fn line_graph_size_matches_degree_sums() {
        let t = Tree::from_edges(7, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (5, 6)]).unwrap();
        let lg = line_graph_of_tree(&t).unwrap();
        assert_eq!(lg.n(), t.edge_count());
        let expect: usize = (0..t.n())
            .map(|v| {
                let d = t.as_graph().degree(v);
                d * d.saturating_sub(1) / 2
            })
            .sum();
        assert_eq!(lg.edge_count(), expect);
    }

    #[test]
    fn single_vertex_tree_has_no_line_graph() {
        let t = Tree::from_edges(1, []).unwrap();
        assert_eq!(
            line_graph_of_tree(&t).unwrap_err(),
            GraphError::EmptyLineGraph
        );
    }

    #[test]
    fn tree_rejects_cycles_and_disconnection() {
        let c3 = SimpleGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(Tree::from_graph(c3).is_err());
        let split = SimpleGraph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            Tree::from_graph(split),
            Err(GraphError::NotATree { .. })
        ));
        // Right edge count for a tree, but a triangle plus an isolated vertex.
        let loop_plus = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(
            Tree::from_graph(loop_plus),
            Err(GraphError::NotConnected)
        ));
    }

    #[test]
    fn m_degree_examples() {
        assert_eq!(m_degree(&complete(5)), 5);
        assert_eq!(m_degree(&path(5)), 3);
        assert_eq!(m_degree(&complete(2)), 2);
        assert_eq!(m_degree(&complete(1)), 1);
    }

    #[test]
    fn m_degree_defining_property() {
        for g in [complete(5), path(7), complete(3)] {
            let m = m_degree(&g);
            assert!(dense_vertices(&g, m).len() >= m);
            assert!(dense_vertices(&g, m + 1).len() < m + 1);
        }
    }

    #[test]
    fn dense_vertices_examples() {
        let bowtie =
            SimpleGraph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        assert_eq!(dense_vertices(&bowtie, 4), vec![0]);
        assert_eq!(dense_vertices(&complete(5), 5).len(), 5);
        assert!(dense_vertices(&complete(5), 6).is_empty());
    }
}

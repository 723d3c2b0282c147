//! Small graph constructors shared by the unit tests.

use crate::graph::SimpleGraph;

pub(crate) fn path(n: usize) -> SimpleGraph {
    SimpleGraph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
}

pub(crate) fn complete(n: usize) -> SimpleGraph {
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            e.push((i, j));
        }
    }
    SimpleGraph::from_edges(n, e).unwrap()
}

/// Two triangles sharing vertex 0; the line graph of a double star.
pub(crate) fn bowtie() -> SimpleGraph {
    SimpleGraph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
}

/// Three triangles chained through cut vertices 2 and 4.
pub(crate) fn triangle_chain() -> SimpleGraph {
    SimpleGraph::from_edges(
        7,
        [
            (0, 1),
            (0, 2),
            (1, 2),
            (2, 3),
            (2, 4),
            (3, 4),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
    )
    .unwrap()
}

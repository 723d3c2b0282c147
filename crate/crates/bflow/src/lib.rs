//! b-coloring solver for claw-free block graphs (line graphs of trees).
//!
//! A b-coloring with k colors is a proper coloring in which every color
//! class contains a vertex adjacent to all other k - 1 colors; the
//! b-chromatic number is the largest such k. On claw-free block graphs
//! both questions are polynomial. This crate provides:
//!
//! * [`graph`]: simple graphs, trees, line graphs, degree bounds.
//! * [`blocks`]: validation of the input class and the rooted block tree.
//! * [`flow`]: a flow network certifying which vertex sets can
//!   simultaneously realize distinct colors, with its own max-flow solver.
//! * [`dp`]: a dynamic program over the block tree answering the decision
//!   problem and computing the b-chromatic number.
//! * [`oracle`]: brute-force coloring search for cross-validation.
//! * [`gen`]: tree generators (random, caterpillar, exhaustive).
//! * [`selfcheck`] and [`bench`]: the consistency and timing harnesses
//!   behind the CLI subcommands of the same names.

pub mod bench;
pub mod blocks;
pub mod dp;
pub mod flow;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod report;
pub mod selfcheck;

#[cfg(test)]
mod testutil;

pub use blocks::{
    root_decomposition, validate_claw_free_block, BlockDecomposition, RootedBlockTree,
    ValidateError,
};
pub use dp::{
    b_chromatic, b_chromatic_on, decide_k, decide_k_on, max_basis_size, DpError, ValidatedGraph,
};
pub use flow::{build_network, is_flow_feasible, max_flow, FlowNetwork, FlowResult, NetworkError};
pub use graph::{line_graph_of_tree, parse_graph, DegreeProfile, GraphError, SimpleGraph, Tree};
pub use oracle::{
    cross_check_flow_vs_coloring, exists_coloring_realizing, max_realized_colors,
    verify_b_coloring, Budget, Coloring, CrossCheckReport, OracleError,
};

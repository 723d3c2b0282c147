//! Randomized invariants over generated trees and their line graphs.

use bflow::dp::{b_chromatic, decide_k, decide_k_on, max_basis_size, ValidatedGraph};
use bflow::gen::random_tree;
use bflow::graph::{line_graph_of_tree, m_degree, parse_graph};
use bflow::{build_network, is_flow_feasible, max_flow};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_tree() -> impl Strategy<Value = bflow::graph::Tree> {
    (1usize..=30, any::<u64>())
        .prop_map(|(edges, seed)| random_tree(edges, &mut ChaCha8Rng::seed_from_u64(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn line_graphs_of_trees_validate(tree in arb_tree()) {
        let lg = line_graph_of_tree(&tree).unwrap();
        prop_assert_eq!(lg.n(), tree.edge_count());
        let vg = ValidatedGraph::new(lg).unwrap();

        // Edges sharing a tree vertex form the blocks, so the largest block
        // is the largest tree degree.
        let max_deg = (0..tree.n()).map(|v| tree.as_graph().degree(v)).max().unwrap();
        prop_assert_eq!(vg.profile().omega(), max_deg);
    }

    #[test]
    fn m_degree_is_the_largest_self_supporting_k(tree in arb_tree()) {
        let g = line_graph_of_tree(&tree).unwrap();
        let m = m_degree(&g);
        let count = |k: usize| (0..g.n()).filter(|&v| g.degree(v) + 1 >= k).count();
        prop_assert!(count(m) >= m);
        prop_assert!(count(m + 1) < m + 1);
    }

    #[test]
    fn sandwich_bounds_hold(tree in arb_tree()) {
        let vg = ValidatedGraph::new(line_graph_of_tree(&tree).unwrap()).unwrap();
        let b = b_chromatic(&vg);
        prop_assert!(vg.profile().omega() <= b);
        prop_assert!(b <= vg.profile().m_degree());
    }

    #[test]
    fn flow_value_is_bounded_by_the_candidate_set(
        tree in arb_tree(),
        pick in any::<u64>(),
    ) {
        let vg = ValidatedGraph::new(line_graph_of_tree(&tree).unwrap()).unwrap();
        let (omega, m) = (vg.profile().omega(), vg.profile().m_degree());
        prop_assume!(m > omega);
        let k = omega + 1 + (pick as usize % (m - omega));
        let rbt = vg.rooted_default();

        let dense = vg.profile().dense_vertices(k);
        let mut bits = pick;
        let w: Vec<usize> = dense
            .iter()
            .copied()
            .filter(|_| {
                bits = bits.rotate_left(1);
                bits & 1 == 1
            })
            .take(k)
            .collect();

        let net = build_network(vg.graph(), vg.decomp(), &rbt, &w, k).unwrap();
        let result = max_flow(&net);
        prop_assert!(result.value <= w.len());
        for (node, used) in result.per_node.iter().enumerate() {
            prop_assert!(*used <= net.nodes[node].capacity);
        }
        prop_assert_eq!(
            result.value == w.len(),
            is_flow_feasible(vg.graph(), vg.decomp(), &rbt, &w, k).unwrap()
        );
    }

    #[test]
    fn table_value_caps_at_k_and_decides_k(tree in arb_tree()) {
        let vg = ValidatedGraph::new(line_graph_of_tree(&tree).unwrap()).unwrap();
        let (omega, m) = (vg.profile().omega(), vg.profile().m_degree());
        let rbt = vg.rooted_default();
        for k in omega + 1..=m {
            let value = max_basis_size(&vg, &rbt, k).unwrap();
            prop_assert!(value <= k.min(vg.profile().dense_count(k)));
            prop_assert_eq!(decide_k_on(&vg, &rbt, k).unwrap(), value >= k);
        }
    }

    #[test]
    fn edge_list_round_trips(tree in arb_tree()) {
        let g = line_graph_of_tree(&tree).unwrap();
        let parsed = parse_graph(&g.to_edge_list()).unwrap();
        prop_assert_eq!(parsed.n(), g.n());
        prop_assert_eq!(parsed.edges(), g.edges());
    }

    #[test]
    fn decide_is_monotone_below_b(tree in arb_tree()) {
        let vg = ValidatedGraph::new(line_graph_of_tree(&tree).unwrap()).unwrap();
        let b = b_chromatic(&vg);
        for k in vg.profile().omega()..=b {
            prop_assert!(decide_k(&vg, k).unwrap(), "k = {} within [omega, b]", k);
        }
        for k in b + 1..=vg.profile().m_degree() {
            prop_assert!(!decide_k(&vg, k).unwrap(), "k = {} above b", k);
        }
    }
}

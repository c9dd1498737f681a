use proptest::prelude::*;

use gpgame::families::{random_connected_graph, random_tree};
use gpgame::graph::{DistanceMatrix, Graph, VertexSet};
use gpgame::position::{
    extends_general_position, gpg_is_2_by_lines, gpg_prime_is_2_by_lines, is_general_position, line, side_partition,
    LineTable,
};
use gpgame::solver::{gp_lower_number, gp_number, oracle_solve, solve_game, Player};

fn graph() -> impl Strategy<Value = Graph> {
    (3usize..10, any::<u64>(), 0usize..100).prop_map(|(n, seed, extra)| {
        let max = n * (n - 1) / 2;
        let m = n - 1 + extra % (max + 2 - n);
        random_connected_graph(n, m, seed).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subsets_of_general_position_sets_stay_in_general_position(g in graph(), bits in any::<u64>()) {
        let d = DistanceMatrix::new(&g);
        let s = VertexSet::from_bits(bits & VertexSet::full(g.order()).bits());
        if is_general_position(&d, s) {
            for v in s {
                prop_assert!(is_general_position(&d, s.without(v)));
            }
        }
    }

    #[test]
    fn incremental_check_agrees_with_full_check(g in graph(), bits in any::<u64>(), v in 0usize..10) {
        let d = DistanceMatrix::new(&g);
        let v = v % g.order();
        let s = VertexSet::from_bits(bits & VertexSet::full(g.order()).bits()).without(v);
        if is_general_position(&d, s) {
            prop_assert_eq!(extends_general_position(&d, s, v), is_general_position(&d, s.with(v)));
            let table = LineTable::new(&d);
            prop_assert_eq!(table.is_general_position(s.with(v)), is_general_position(&d, s.with(v)));
        }
    }

    #[test]
    fn lines_are_symmetric_and_contain_their_ends(g in graph()) {
        let d = DistanceMatrix::new(&g);
        for x in 0..g.order() {
            for y in x + 1..g.order() {
                let l = line(&d, x, y).unwrap();
                prop_assert_eq!(l, line(&d, y, x).unwrap());
                prop_assert!(l.contains(x) && l.contains(y));
            }
        }
    }

    #[test]
    fn side_partitions_partition_the_vertices(g in graph()) {
        let d = DistanceMatrix::new(&g);
        for (u, v) in g.edges() {
            let p = side_partition(&d, u, v).unwrap();
            prop_assert!(p.w_uv.is_disjoint(p.w_vu) && p.w_uv.is_disjoint(p.equi) && p.w_vu.is_disjoint(p.equi));
            prop_assert_eq!(p.w_uv.union(p.w_vu).union(p.equi), g.vertices());
            prop_assert!(p.w_uv.contains(u) && p.w_vu.contains(v));
            if g.is_bipartite() {
                prop_assert!(p.equi.is_empty());
            }
        }
    }

    #[test]
    fn solver_matches_oracle_and_sandwich(g in graph()) {
        let d = DistanceMatrix::new(&g);
        let (gp, gpl) = (gp_number(&d).unwrap(), gp_lower_number(&d).unwrap());
        for first in [Player::Builder, Player::Blocker] {
            let v = solve_game(&g, first).unwrap().value;
            prop_assert_eq!(v, oracle_solve(&g, first));
            prop_assert!(gpl <= v && v <= gp);
        }
    }

    #[test]
    fn universal_line_tests_match_the_solver(g in graph()) {
        let d = DistanceMatrix::new(&g);
        prop_assert_eq!(gpg_is_2_by_lines(&d).unwrap(), solve_game(&g, Player::Builder).unwrap().value == 2);
        prop_assert_eq!(gpg_prime_is_2_by_lines(&d).unwrap(), solve_game(&g, Player::Blocker).unwrap().value == 2);
    }

    #[test]
    fn trees_have_gp_equal_to_leaves(n in 2usize..16, seed in any::<u64>()) {
        let t = random_tree(n, seed).unwrap();
        prop_assert_eq!(gp_number(&DistanceMatrix::new(&t)).unwrap(), t.leaf_count());
    }

    #[test]
    fn solving_is_deterministic(g in graph()) {
        let a = solve_game(&g, Player::Blocker).unwrap();
        let b = solve_game(&g, Player::Blocker).unwrap();
        prop_assert_eq!(a.value, b.value);
        prop_assert_eq!(a.principal_variation, b.principal_variation);
    }
}

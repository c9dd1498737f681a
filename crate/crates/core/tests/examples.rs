//! Documented worked examples for the public API.

use gpgame::families::{
    caterpillar, cocktail_party, complete, cycle, family_h, generalized_petersen, grs, hjk, kneser, lexicographic,
    multipartite, path, random_tree, star, CaterpillarSpec, FamilyHSpec,
};
use gpgame::formulas::{realisable_pair_witness, PairWitness};
use gpgame::graph::{basic_invariants, read_graph, write_graph, DistanceMatrix, Graph, VertexSet};
use gpgame::position::{
    forced_final_size, gpg_is_2_by_lines, gpg_prime_is_2_by_lines, in_class_g, in_class_g2, is_universal_line, line,
    playable_vertices,
};
use gpgame::solver::{best_move, gp_lower_number, gp_number, solve_game, GameSolver, GameState, Player, SolverConfig};

fn values(g: &Graph) -> (usize, usize) {
    (solve_game(g, Player::Builder).unwrap().value, solve_game(g, Player::Blocker).unwrap().value)
}

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

#[test]
fn graph_construction_examples() {
    let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
    assert_eq!(p3.size(), 2);
    let c4 = Graph::new(4, &[(0, 1), (0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    assert_eq!(c4.size(), 4);
    let inv = basic_invariants(&star(5).unwrap());
    assert_eq!((inv.max_degree, inv.leaf_count, inv.is_tree, inv.is_bipartite), (5, 5, true, true));
    let inv = basic_invariants(&cycle(6).unwrap());
    assert_eq!((inv.max_degree, inv.leaf_count, inv.diameter), (2, 0, Some(3)));
}

#[test]
fn graph_files_round_trip() {
    let g = kneser(5, 2).unwrap();
    let mut buf = Vec::new();
    write_graph(&g, &mut buf, true).unwrap();
    let text = String::from_utf8(buf.clone()).unwrap();
    assert!(text.starts_with("p gp 10 15\n"));
    assert!(text.contains("c label 0 {1,2}"));
    let back = read_graph(&buf[..]).unwrap();
    assert_eq!(back, g);
    assert_eq!(back.label(9), "{4,5}");
}

#[test]
fn position_examples() {
    let c6 = DistanceMatrix::new(&cycle(6).unwrap());
    assert!(playable_vertices(&c6, set(&[0, 3])).unwrap().is_empty());
    assert_eq!(forced_final_size(&c6, set(&[0, 1])).unwrap(), Some(2));
    // adjacent vertices of C6: every other vertex is within one of the two forms
    assert_eq!(line(&c6, 0, 1).unwrap(), VertexSet::full(6));
    let c4 = DistanceMatrix::new(&cycle(4).unwrap());
    assert!(is_universal_line(&c4, 0, 2).unwrap());
    let pet = DistanceMatrix::new(&generalized_petersen(5, 2).unwrap());
    for x in 0..10 {
        for y in x + 1..10 {
            assert!(!is_universal_line(&pet, x, y).unwrap());
        }
    }
    assert_eq!(forced_final_size(&pet, set(&[0, 1])).unwrap(), Some(6));
}

#[test]
fn universal_line_examples() {
    let d = |g: Graph| DistanceMatrix::new(&g);
    assert!(gpg_is_2_by_lines(&d(cocktail_party(3).unwrap())).unwrap());
    assert!(!gpg_is_2_by_lines(&d(complete(3).unwrap())).unwrap());
    assert!(gpg_prime_is_2_by_lines(&d(multipartite(&[3, 2]).unwrap())).unwrap());
    assert!(!gpg_prime_is_2_by_lines(&d(cycle(6).unwrap())).unwrap());
    let drawn = FamilyHSpec { blocks: vec![3, 2], pendant_at_block: vec![3, 0], paths_at_u: vec![3, 2, 1, 1] };
    let g = family_h(&drawn).unwrap();
    assert!(gpg_prime_is_2_by_lines(&d(g.clone())).unwrap());
    assert_eq!(values(&g), (2, 2));
}

#[test]
fn class_examples() {
    let d = |g: Graph| DistanceMatrix::new(&g);
    assert!(in_class_g(&d(cycle(5).unwrap())));
    let p102 = d(generalized_petersen(10, 2).unwrap());
    assert!(in_class_g2(&p102) && !in_class_g(&p102));
    let lex = lexicographic(&complete(2).unwrap(), &cycle(5).unwrap()).unwrap();
    assert!(in_class_g(&d(lex)));
}

#[test]
fn game_value_examples() {
    assert_eq!(values(&cycle(6).unwrap()), (2, 3));
    assert_eq!(values(&cycle(5).unwrap()), (3, 3));
    assert_eq!(values(&generalized_petersen(5, 2).unwrap()), (6, 6));
    assert_eq!(values(&multipartite(&[4, 4, 4]).unwrap()), (3, 4));
    assert_eq!(values(&grs(6, 5).unwrap()), (8, 7));
    assert_eq!(values(&grs(4, 3).unwrap()), (6, 5));
    assert_eq!(values(&hjk(2, 2).unwrap()), (5, 4));
    assert_eq!(values(&hjk(2, 1).unwrap()), (4, 4));
    assert_eq!(values(&complete(1).unwrap()), (1, 1));
    assert_eq!(values(&path(4).unwrap()), (2, 2));
}

#[test]
fn best_move_examples() {
    for n in 1..=6 {
        assert_eq!(best_move(&complete(n).unwrap(), &GameState::new(Player::Builder)).unwrap(), 0);
    }
    // Blocker opened at 0 on C6; Builder keeps the game going to 3 with
    // the vertex at distance 2
    let c6 = cycle(6).unwrap();
    let state = GameState::new(Player::Blocker).play(0);
    let reply = best_move(&c6, &state).unwrap();
    assert_eq!(reply, 2);
    let mut solver = GameSolver::new(&c6, Player::Blocker, SolverConfig::default());
    assert_eq!(solver.value(set(&[0, reply])).unwrap(), 3);
    assert_eq!(solver.value(set(&[0, 1])).unwrap(), 2);
}

#[test]
fn set_number_examples() {
    for seed in 0..5 {
        let t = random_tree(9, seed).unwrap();
        assert_eq!(gp_number(&DistanceMatrix::new(&t)).unwrap(), t.leaf_count());
    }
    let d = DistanceMatrix::new(&multipartite(&[4, 3, 2]).unwrap());
    assert_eq!((gp_number(&d).unwrap(), gp_lower_number(&d).unwrap()), (4, 2));
    assert_eq!(gp_lower_number(&DistanceMatrix::new(&kneser(6, 2).unwrap())).unwrap(), 3);
}

#[test]
fn caterpillar_examples() {
    assert_eq!(caterpillar(&CaterpillarSpec::new(vec![0, 0, 0])).unwrap(), path(3).unwrap());
    assert_eq!(caterpillar(&CaterpillarSpec::new(vec![1, 0, 1])).unwrap().order(), 5);
    let t = caterpillar(&CaterpillarSpec::new(vec![3, 0, 1])).unwrap();
    // the leaf bound gives 2 and the tree attains it
    assert_eq!(solve_game(&t, Player::Blocker).unwrap().value, 2);
}

#[test]
fn pair_witnesses_realise_their_pairs() {
    for (a, b) in [(2, 2), (2, 5), (3, 4), (5, 3), (6, 3), (7, 5), (5, 4), (6, 5)] {
        match realisable_pair_witness(a, b).unwrap() {
            PairWitness::Realised(f) => {
                let g = f.value.build().unwrap();
                assert_eq!(values(&g), (a, b), "{}", f.value);
            }
            other => panic!("({a},{b}) should be realised, got {other:?}"),
        }
    }
}

#[test]
fn pair_witness_edge_cases() {
    assert!(matches!(realisable_pair_witness(5, 2).unwrap(), PairWitness::Impossible));
    // H(j,k) needs j >= k, so (6,4) has no construction
    assert!(matches!(realisable_pair_witness(6, 4).unwrap(), PairWitness::Open));
    assert!(realisable_pair_witness(1, 3).is_err());
}

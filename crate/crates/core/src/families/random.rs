//! Seeded random graphs for test corpora.
//!
//! All randomness comes from [`SplitMix64`](crate::rng::SplitMix64), so a
//! given `(parameters, seed)` produces the same graph on every platform.

use super::{bad, FamilyError};
use crate::graph::Graph;
use crate::rng::SplitMix64;

fn tree_edges(n: usize, rng: &mut SplitMix64) -> Vec<(usize, usize)> {
    if n <= 1 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    // Prüfer decoding: the sequence has n-2 entries drawn uniformly.
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Uniform labelled tree on `n` vertices (Prüfer sequence of `n − 2` draws of
/// `below(n)`).
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(bad("random tree needs n >= 1"));
    }
    let mut rng = SplitMix64::new(seed);
    Ok(Graph::new(n, &tree_edges(n, &mut rng))?)
}

/// Random spanning tree plus `m − (n − 1)` further edges picked from a
/// shuffled list of the remaining pairs (ascending `(u, v)` before shuffling).
pub fn random_connected_graph(n: usize, m: usize, seed: u64) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(bad("random graph needs n >= 1"));
    }
    let max = n * (n - 1) / 2;
    if m + 1 < n || m > max {
        return Err(bad(format!("a connected graph on {n} vertices has between {} and {max} edges, not {m}", n - 1)));
    }
    let mut rng = SplitMix64::new(seed);
    let tree = Graph::new(n, &tree_edges(n, &mut rng))?;
    let mut extra: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !tree.has_edge(u, v)).collect();
    rng.shuffle(&mut extra);
    let edges: Vec<_> = tree.edges().chain(extra.into_iter().take(m + 1 - n)).collect();
    Ok(Graph::new(n, &edges)?)
}

/// Like [`random_connected_graph`], but extra edges only join the two colour
/// classes of the spanning tree, so the result stays bipartite.
pub fn random_connected_bipartite(n: usize, m: usize, seed: u64) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(bad("random graph needs n >= 1"));
    }
    let mut rng = SplitMix64::new(seed);
    let tree = Graph::new(n, &tree_edges(n, &mut rng))?;
    let side = tree.two_colouring().expect("trees are bipartite");
    let mut extra: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| side[u] != side[v] && !tree.has_edge(u, v))
        .collect();
    let max = n - 1 + extra.len();
    if m + 1 < n || m > max {
        return Err(bad(format!("this seed admits between {} and {max} edges, not {m}", n - 1)));
    }
    rng.shuffle(&mut extra);
    let edges: Vec<_> = tree.edges().chain(extra.into_iter().take(m + 1 - n)).collect();
    Ok(Graph::new(n, &edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn trees_are_deterministic() {
        assert_eq!(random_tree(5, 1).unwrap(), random_tree(5, 1).unwrap());
        assert_eq!(random_tree(1, 99).unwrap().order(), 1);
        let t = random_tree(12, 3).unwrap();
        assert!(t.is_tree());
    }

    #[test]
    fn connected_graph_contract() {
        let g = random_connected_graph(8, 12, 7).unwrap();
        assert!(g.is_connected());
        assert_eq!(g.size(), 12);
        assert!(random_connected_graph(5, 3, 0).is_err());
        assert!(random_connected_graph(5, 11, 0).is_err());
        assert_eq!(random_connected_graph(5, 10, 0).unwrap().size(), 10);
    }

    proptest! {
        #[test]
        fn prufer_trees_are_trees(n in 1usize..30, seed in any::<u64>()) {
            let t = random_tree(n, seed).unwrap();
            prop_assert!(t.is_tree());
            prop_assert_eq!(t.order(), n);
        }

        #[test]
        fn bipartite_graphs_stay_bipartite(n in 2usize..14, extra in 0usize..20, seed in any::<u64>()) {
            let probe = random_connected_bipartite(n, n - 1, seed).unwrap();
            let side = probe.two_colouring().unwrap();
            let a = side.iter().filter(|&&s| s).count();
            let m = (n - 1 + extra).min(a * (n - a));
            let g = random_connected_bipartite(n, m, seed).unwrap();
            prop_assert!(g.is_connected());
            prop_assert!(g.is_bipartite());
            prop_assert_eq!(g.size(), m);
        }
    }
}

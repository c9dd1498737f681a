//! Closed-form game values and bounds, each paired with the hypothesis check
//! that licenses it.
//!
//! Every function returns either [`Formula`] (a value and the result it comes
//! from) or [`NotApplicable`] explaining which hypothesis failed. A harness
//! can therefore tell "no prediction" apart from "wrong prediction".

use std::fmt;

use thiserror::Error;

use crate::families::{is_in_family_t, CaterpillarSpec, FamilySpec, GrsSpec, HjkSpec, MultipartiteSpec};
use crate::graph::{DistanceMatrix, Graph};
use crate::position::{in_class_g, side_partition};

/// Which known result a value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    CompleteGraph,
    CompleteMultipartite,
    MultipartiteSetNumbers,
    Cycle,
    KneserPairs,
    KneserLowerTable,
    GluedCyclesAndTriangles,
    GluedCyclesSingleTriangle,
    CliqueWithConnectors,
    ConnectedBipartite,
    CaterpillarMinMax,
    TreeLeaves,
    TreeLeafBound,
    FamilyT,
    MinMaxSidePartition,
    MaxSidePartition,
    ClassGSidePartition,
    SmallBuilderRealisation,
    UniversalLines,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::CompleteGraph => "complete-graph",
            Source::CompleteMultipartite => "complete-multipartite",
            Source::MultipartiteSetNumbers => "multipartite-gp",
            Source::Cycle => "cycle",
            Source::KneserPairs => "kneser-pairs",
            Source::KneserLowerTable => "kneser-lower-gp",
            Source::GluedCyclesAndTriangles => "glued-c4-triangles",
            Source::GluedCyclesSingleTriangle => "glued-c4-one-triangle",
            Source::CliqueWithConnectors => "clique-with-connectors",
            Source::ConnectedBipartite => "connected-bipartite",
            Source::CaterpillarMinMax => "caterpillar-minmax",
            Source::TreeLeaves => "tree-leaves",
            Source::TreeLeafBound => "tree-leaf-bound",
            Source::FamilyT => "family-t",
            Source::MinMaxSidePartition => "minmax-side-partition",
            Source::MaxSidePartition => "max-side-partition",
            Source::ClassGSidePartition => "class-g-side-partition",
            Source::SmallBuilderRealisation => "small-builder-realisation",
            Source::UniversalLines => "universal-lines",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Formula<T> {
    pub value: T,
    pub origin: Source,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{origin} does not apply: {reason}")]
pub struct NotApplicable {
    pub origin: Source,
    pub reason: String,
}

pub type FormulaResult<T> = Result<Formula<T>, NotApplicable>;

fn ok<T>(value: T, origin: Source) -> FormulaResult<T> {
    Ok(Formula { value, origin })
}

fn na<T>(origin: Source, reason: impl Into<String>) -> FormulaResult<T> {
    Err(NotApplicable { origin, reason: reason.into() })
}

/// `(gpg, gpg')` of `K_n`.
pub fn complete_values(n: usize) -> FormulaResult<(usize, usize)> {
    if n < 1 {
        return na(Source::CompleteGraph, "n must be at least 1");
    }
    ok((n, n), Source::CompleteGraph)
}

fn check_parts(parts: &[usize], source: Source) -> Result<(), NotApplicable> {
    if parts.len() < 2 {
        return Err(NotApplicable { origin: source, reason: "needs at least two parts".into() });
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(NotApplicable { origin: source, reason: "parts must be sorted largest first".into() });
    }
    Ok(())
}

/// `(min{r1,t}, max{rt,t})` for `K_{r1..rt}`, `t >= 2`, every part at least 2.
pub fn multipartite_values(parts: &[usize]) -> FormulaResult<(usize, usize)> {
    let src = Source::CompleteMultipartite;
    check_parts(parts, src)?;
    if parts.iter().any(|&r| r < 2) {
        return na(src, "every part needs at least two vertices");
    }
    let t = parts.len();
    ok((parts[0].min(t), parts[t - 1].max(t)), src)
}

/// `(gp, gp⁻) = (max{r1,t}, min{rt,t})` for a complete multipartite graph.
pub fn multipartite_set_numbers(parts: &[usize]) -> FormulaResult<(usize, usize)> {
    let src = Source::MultipartiteSetNumbers;
    check_parts(parts, src)?;
    if parts.contains(&0) {
        return na(src, "parts must be non-empty");
    }
    let t = parts.len();
    ok((parts[0].max(t), parts[t - 1].min(t)), src)
}

/// Cycle values. Odd cycles give `(3,3)` and even cycles from 6 on give
/// `(2,3)`; `C4 = K_{2,2}` and `C3 = K_3` come from their own families.
pub fn cycle_values(n: usize) -> FormulaResult<(usize, usize)> {
    match n {
        0..=2 => na(Source::Cycle, "a cycle needs at least 3 vertices"),
        3 => complete_values(3),
        4 => multipartite_values(&[2, 2]),
        n if n % 2 == 1 => ok((3, 3), Source::Cycle),
        _ => ok((2, 3), Source::Cycle),
    }
}

/// Both games on `K(n,2)` end with six vertices once `n >= 4`.
pub fn kneser2_values(n: usize) -> FormulaResult<(usize, usize)> {
    if n < 4 {
        return na(Source::KneserPairs, "needs n >= 4");
    }
    ok((6, 6), Source::KneserPairs)
}

/// Lower general position number of `K(n,2)`.
pub fn kneser2_gp_lower(n: usize) -> FormulaResult<usize> {
    let v = match n {
        0..=2 => return na(Source::KneserLowerTable, "needs n >= 3"),
        3 => 3,
        4 => 6,
        5 => 4,
        6..=11 => n / 2,
        _ => 6,
    };
    ok(v, Source::KneserLowerTable)
}

/// `G(r,s)`: `(r+2, s+2)` when `r > s` and `s` is odd and at least 3;
/// `(r+2, 3)` when `s = 1 < r`.
pub fn grs_values(r: usize, s: usize) -> FormulaResult<(usize, usize)> {
    if s == 1 && r > 1 {
        return ok((r + 2, 3), Source::GluedCyclesSingleTriangle);
    }
    let src = Source::GluedCyclesAndTriangles;
    if s == 1 {
        return na(src, "needs r > s");
    }
    if s < 3 || s.is_multiple_of(2) {
        return na(src, "needs s odd and at least 3, or s = 1");
    }
    if r <= s {
        return na(src, "needs r > s");
    }
    ok((r + 2, s + 2), src)
}

/// `H(j,k)`: `(1+j+k, j+2)` for `j >= k >= 1`.
pub fn hjk_values(j: usize, k: usize) -> FormulaResult<(usize, usize)> {
    if k < 1 || j < k {
        return na(Source::CliqueWithConnectors, "needs j >= k >= 1");
    }
    ok((1 + j + k, j + 2), Source::CliqueWithConnectors)
}

/// Builder-first value 2 of a connected bipartite graph on at least two
/// vertices.
pub fn bipartite_gpg(g: &Graph) -> FormulaResult<usize> {
    let src = Source::ConnectedBipartite;
    if g.order() < 2 {
        return na(src, "needs at least 2 vertices");
    }
    if !g.is_connected() {
        return na(src, "graph is disconnected");
    }
    if !g.is_bipartite() {
        return na(src, "graph is not bipartite");
    }
    ok(2, src)
}

/// `gp(T) = ℓ(T)` for a tree with at least two vertices.
pub fn tree_gp(g: &Graph) -> FormulaResult<usize> {
    if !g.is_tree() || g.order() < 2 {
        return na(Source::TreeLeaves, "needs a tree on at least 2 vertices");
    }
    ok(g.leaf_count(), Source::TreeLeaves)
}

/// `max(Σ_{j<i} t_j, Σ_{j>i} t_j)` for every central index `i` (0-based).
fn caterpillar_costs(t: &[usize]) -> Vec<usize> {
    let total: usize = t.iter().sum();
    let mut before = 0;
    t.iter()
        .map(|&ti| {
            let after = total - before - ti;
            let c = before.max(after);
            before += ti;
            c
        })
        .collect()
}

fn check_caterpillar(spec: &CaterpillarSpec) -> Result<(), NotApplicable> {
    let src = Source::CaterpillarMinMax;
    if spec.validate().is_err() {
        return Err(NotApplicable { origin: src, reason: "invalid caterpillar spec".into() });
    }
    if !spec.has_leaves_at_ends() {
        return Err(NotApplicable { origin: src, reason: "needs t_1 >= 1 and t_k >= 1".into() });
    }
    Ok(())
}

/// Blocker-first value of a (possibly subdivided) caterpillar:
/// `1 + min_i max(Σ_{j<i} t_j, Σ_{j>i} t_j)`. Subdivisions do not matter.
pub fn caterpillar_gpg_prime(spec: &CaterpillarSpec) -> FormulaResult<usize> {
    check_caterpillar(spec)?;
    let best = caterpillar_costs(&spec.t).into_iter().min().unwrap();
    ok(best + 1, Source::CaterpillarMinMax)
}

/// Central indices (0-based) at which a Blocker opening attains the
/// caterpillar value, ascending.
pub fn caterpillar_optimal_openings(spec: &CaterpillarSpec) -> FormulaResult<Vec<usize>> {
    check_caterpillar(spec)?;
    let costs = caterpillar_costs(&spec.t);
    let best = *costs.iter().min().unwrap();
    ok((0..costs.len()).filter(|&i| costs[i] == best).collect(), Source::CaterpillarMinMax)
}

/// `ℓ(T) − Δ(T) + 2`, an upper bound on `gpg'` of a tree with at least two
/// vertices.
pub fn tree_gpg_prime_upper(g: &Graph) -> FormulaResult<usize> {
    if !g.is_tree() {
        return na(Source::TreeLeafBound, "graph is not a tree");
    }
    if g.order() < 2 {
        return na(Source::TreeLeafBound, "needs at least 2 vertices");
    }
    ok(g.leaf_count() + 2 - g.max_degree(), Source::TreeLeafBound)
}

/// Whether the leaf bound is attained, decided by family-T membership.
pub fn tree_equality_holds(g: &Graph) -> FormulaResult<bool> {
    match is_in_family_t(g) {
        Ok(b) => ok(b, Source::FamilyT),
        Err(e) => na(Source::FamilyT, e.to_string()),
    }
}

fn check_connected(d: &DistanceMatrix, src: Source) -> Result<(), NotApplicable> {
    if d.order() < 2 {
        return Err(NotApplicable { origin: src, reason: "needs at least 2 vertices".into() });
    }
    if d.diameter().is_none() {
        return Err(NotApplicable { origin: src, reason: "graph is disconnected".into() });
    }
    Ok(())
}

fn equi_size(d: &DistanceMatrix, u: usize, v: usize) -> usize {
    side_partition(d, u, v).expect("caller passes edges").equi.len()
}

/// `2 + max_u min_{v ∈ N(u)} |equi(u,v)|`.
pub fn gpg_upper_min_max(d: &DistanceMatrix) -> FormulaResult<usize> {
    let src = Source::MinMaxSidePartition;
    check_connected(d, src)?;
    let n = d.order();
    let best =
        (0..n).map(|u| (0..n).filter(|&v| d.is_edge(u, v)).map(|v| equi_size(d, u, v)).min().unwrap()).max().unwrap();
    ok(2 + best, src)
}

fn max_edge_equi(d: &DistanceMatrix) -> usize {
    let n = d.order();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| d.is_edge(u, v))
        .map(|(u, v)| equi_size(d, u, v))
        .max()
        .unwrap_or(0)
}

/// `2 + max over edges |equi(u,v)|`.
pub fn gpg_upper_max_edge(d: &DistanceMatrix) -> FormulaResult<usize> {
    let src = Source::MaxSidePartition;
    check_connected(d, src)?;
    ok(2 + max_edge_equi(d), src)
}

/// The same edge bound for the Blocker-first game, valid on class G.
pub fn gpg_prime_upper_class_g(d: &DistanceMatrix) -> FormulaResult<usize> {
    let src = Source::ClassGSidePartition;
    check_connected(d, src)?;
    if !in_class_g(d) {
        return na(src, "graph is not in class G");
    }
    ok(2 + max_edge_equi(d), src)
}

/// What is known about a target pair `(gpg, gpg') = (a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairWitness {
    /// A construction attaining the pair.
    Realised(Formula<FamilySpec>),
    /// No graph attains the pair: `gpg' = 2` forces `gpg = 2`.
    Impossible,
    /// Not settled by any known construction.
    Open,
}

/// A graph with `gpg = a` and `gpg' = b`, when one of the known
/// constructions provides it. Never searches.
pub fn realisable_pair_witness(a: usize, b: usize) -> Result<PairWitness, NotApplicable> {
    if a < 2 || b < 2 {
        return Err(NotApplicable { origin: Source::SmallBuilderRealisation, reason: "needs a, b >= 2".into() });
    }
    let found = |spec, source| Ok(PairWitness::Realised(Formula { value: spec, origin: source }));
    if a == b {
        return found(FamilySpec::Complete(a), Source::CompleteGraph);
    }
    if a < b {
        return found(
            FamilySpec::Multipartite(MultipartiteSpec { parts: vec![b; a] }),
            Source::SmallBuilderRealisation,
        );
    }
    if b == 2 {
        return Ok(PairWitness::Impossible);
    }
    if b == 3 {
        return found(FamilySpec::Grs(GrsSpec { r: a - 2, s: 1 }), Source::GluedCyclesSingleTriangle);
    }
    if b % 2 == 1 {
        return found(FamilySpec::Grs(GrsSpec { r: a - 2, s: b - 2 }), Source::GluedCyclesAndTriangles);
    }
    let (j, k) = (b - 2, a + 1 - b);
    if j >= k {
        return found(FamilySpec::Hjk(HjkSpec { j, k }), Source::CliqueWithConnectors);
    }
    Ok(PairWitness::Open)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{caterpillar, complete, cycle, generalized_petersen, path, star};

    fn val<T>(r: FormulaResult<T>) -> T {
        r.unwrap().value
    }

    #[test]
    fn multipartite_examples() {
        assert_eq!(val(multipartite_values(&[4, 2])), (2, 2));
        assert_eq!(val(multipartite_values(&[3, 3, 3])), (3, 3));
        assert_eq!(val(multipartite_values(&[5, 2, 2])), (3, 3));
        assert_eq!(val(multipartite_values(&[4, 4, 4])), (3, 4));
        assert!(multipartite_values(&[3, 1]).is_err());
        assert!(multipartite_values(&[3]).is_err());
        assert!(multipartite_values(&[2, 3]).is_err());
        assert_eq!(val(multipartite_set_numbers(&[4, 2])), (4, 2));
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(val(cycle_values(7)), (3, 3));
        assert_eq!(val(cycle_values(8)), (2, 3));
        let c4 = cycle_values(4).unwrap();
        assert_eq!(c4.value, (2, 2));
        assert_eq!(c4.origin, Source::CompleteMultipartite);
        assert_eq!(cycle_values(3).unwrap().origin, Source::CompleteGraph);
        assert!(cycle_values(2).is_err());
    }

    #[test]
    fn kneser_examples() {
        assert_eq!(val(kneser2_values(5)), (6, 6));
        assert!(kneser2_values(3).is_err());
        let table: Vec<_> = (3..=14).map(|n| val(kneser2_gp_lower(n))).collect();
        assert_eq!(table, vec![3, 6, 4, 3, 3, 4, 4, 5, 5, 6, 6, 6]);
    }

    #[test]
    fn glued_examples() {
        assert_eq!(val(grs_values(6, 5)), (8, 7));
        assert_eq!(val(grs_values(4, 1)), (6, 3));
        assert!(grs_values(4, 2).is_err());
        assert!(grs_values(3, 3).is_err());
        assert!(grs_values(1, 1).is_err());
        assert_eq!(val(hjk_values(3, 2)), (6, 5));
        assert!(hjk_values(1, 2).is_err());
    }

    #[test]
    fn caterpillar_examples() {
        assert_eq!(val(caterpillar_gpg_prime(&CaterpillarSpec::new(vec![1, 1]))), 2);
        assert_eq!(val(caterpillar_gpg_prime(&CaterpillarSpec::new(vec![2, 0, 3]))), 3);
        assert_eq!(val(caterpillar_gpg_prime(&CaterpillarSpec::new(vec![1, 5]))), 2);
        assert_eq!(val(caterpillar_optimal_openings(&CaterpillarSpec::new(vec![2, 0, 3]))), vec![2]);
        assert_eq!(val(caterpillar_optimal_openings(&CaterpillarSpec::new(vec![1, 1]))), vec![0, 1]);
        assert!(caterpillar_gpg_prime(&CaterpillarSpec::new(vec![0, 2])).is_err());
        let sub = CaterpillarSpec::uniform(vec![2, 0, 3], 1);
        assert_eq!(val(caterpillar_gpg_prime(&sub)), 3);
    }

    #[test]
    fn bipartite_and_tree_leaves() {
        assert_eq!(val(bipartite_gpg(&cycle(6).unwrap())), 2);
        assert!(bipartite_gpg(&cycle(5).unwrap()).is_err());
        assert!(bipartite_gpg(&complete(1).unwrap()).is_err());
        assert_eq!(val(tree_gp(&star(5).unwrap())), 5);
        assert_eq!(val(tree_gp(&path(2).unwrap())), 2);
    }

    #[test]
    fn tree_bound_examples() {
        assert_eq!(val(tree_gpg_prime_upper(&star(6).unwrap())), 2);
        assert!(val(tree_equality_holds(&star(6).unwrap())));
        assert_eq!(val(tree_gpg_prime_upper(&path(7).unwrap())), 2);
        assert!(val(tree_equality_holds(&path(7).unwrap())));
        let t301 = caterpillar(&CaterpillarSpec::new(vec![3, 0, 1])).unwrap();
        assert_eq!(val(tree_gpg_prime_upper(&t301)), 2);
        assert!(tree_gpg_prime_upper(&cycle(5).unwrap()).is_err());
        assert!(tree_equality_holds(&path(2).unwrap()).is_err());
    }

    #[test]
    fn side_partition_bounds() {
        for n in 2..=6 {
            let d = DistanceMatrix::new(&complete(n).unwrap());
            assert_eq!(val(gpg_upper_min_max(&d)), n);
            assert_eq!(val(gpg_upper_max_edge(&d)), n);
            assert_eq!(val(gpg_prime_upper_class_g(&d)), n);
        }
        let p = DistanceMatrix::new(&generalized_petersen(5, 2).unwrap());
        assert_eq!(val(gpg_upper_min_max(&p)), 6);
        let c6 = DistanceMatrix::new(&cycle(6).unwrap());
        assert_eq!(val(gpg_upper_max_edge(&c6)), 2);
        assert!(gpg_prime_upper_class_g(&c6).is_err());
        let k1 = DistanceMatrix::new(&complete(1).unwrap());
        assert!(gpg_upper_min_max(&k1).is_err());
    }

    #[test]
    fn pair_witnesses() {
        let w = |a, b| match realisable_pair_witness(a, b).unwrap() {
            PairWitness::Realised(f) => Some(f.value),
            _ => None,
        };
        assert_eq!(w(3, 5), Some(FamilySpec::Multipartite(MultipartiteSpec { parts: vec![5, 5, 5] })));
        assert_eq!(w(7, 5), Some(FamilySpec::Grs(GrsSpec { r: 5, s: 3 })));
        assert_eq!(w(5, 4), Some(FamilySpec::Hjk(HjkSpec { j: 2, k: 2 })));
        assert_eq!(w(4, 4), Some(FamilySpec::Complete(4)));
        assert_eq!(realisable_pair_witness(7, 4).unwrap(), PairWitness::Open);
        assert_eq!(realisable_pair_witness(5, 2).unwrap(), PairWitness::Impossible);
        assert!(realisable_pair_witness(1, 3).is_err());
    }
}

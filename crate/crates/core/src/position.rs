//! Geodesic predicates: general position, playable vertices, edge side
//! partitions, lines and the polynomial tests built on them.
//!
//! The free functions work straight from the distance matrix and favour
//! clarity. [`LineTable`] precomputes one mask per vertex pair and is what the
//! search code uses; the two are cross-checked in the tests.

use thiserror::Error;

use crate::graph::{DistanceMatrix, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PositionError {
    #[error("vertex set {0} is not in general position")]
    NotGeneralPosition(VertexSet),
    #[error("{0}{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("a line needs two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("vertices {0} and {1} lie in different components")]
    Unreachable(usize, usize),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("graph must have at least two vertices")]
    TooSmall,
    #[error("graph must be connected")]
    Disconnected,
}

/// `y` lies on some shortest `x,z`-path (all three pairwise distances finite).
#[inline]
fn between(d: &DistanceMatrix, x: usize, y: usize, z: usize) -> bool {
    match (d.get(x, y), d.get(y, z), d.get(x, z)) {
        (Some(a), Some(b), Some(c)) => a + b == c,
        _ => false,
    }
}

/// Some member of `{x, y, z}` lies on a geodesic between the other two.
#[inline]
fn collinear(d: &DistanceMatrix, x: usize, y: usize, z: usize) -> bool {
    between(d, x, y, z) || between(d, y, x, z) || between(d, x, z, y)
}

fn check_subset(d: &DistanceMatrix, s: VertexSet) -> Result<(), PositionError> {
    if !s.is_subset(VertexSet::full(d.order())) {
        let v = s.difference(VertexSet::full(d.order())).first().unwrap();
        return Err(PositionError::OutOfRange(v));
    }
    Ok(())
}

/// No member of `s` lies strictly inside a geodesic between two others.
/// Triples that straddle components never conflict.
pub fn is_general_position(d: &DistanceMatrix, s: VertexSet) -> bool {
    let members = s.to_vec();
    for (i, &x) in members.iter().enumerate() {
        for (j, &y) in members.iter().enumerate().skip(i + 1) {
            for &z in &members[j + 1..] {
                if collinear(d, x, y, z) {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether `s ∪ {v}` stays in general position, assuming `s` already is.
/// Only triples through `v` are inspected.
pub fn extends_general_position(d: &DistanceMatrix, s: VertexSet, v: usize) -> bool {
    let members = s.to_vec();
    for (i, &x) in members.iter().enumerate() {
        for &y in &members[i + 1..] {
            if collinear(d, x, y, v) {
                return false;
            }
        }
    }
    true
}

/// Vertices outside `s` whose addition keeps `s` in general position.
pub fn playable_vertices(d: &DistanceMatrix, s: VertexSet) -> Result<VertexSet, PositionError> {
    check_subset(d, s)?;
    if !is_general_position(d, s) {
        return Err(PositionError::NotGeneralPosition(s));
    }
    Ok(VertexSet::full(d.order()).difference(s).iter().filter(|&v| extends_general_position(d, s, v)).collect())
}

/// If `s` together with everything currently playable is in general
/// position, every continuation of the game ends with exactly that set, and
/// its size is returned.
pub fn forced_final_size(d: &DistanceMatrix, s: VertexSet) -> Result<Option<usize>, PositionError> {
    let playable = playable_vertices(d, s)?;
    let all = s.union(playable);
    Ok(is_general_position(d, all).then_some(all.len()))
}

/// Split of the vertex set relative to an edge `uv`: vertices strictly
/// closer to `u`, strictly closer to `v`, and equidistant from both.
/// Vertices in other components count as equidistant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SidePartition {
    pub w_uv: VertexSet,
    pub w_vu: VertexSet,
    pub equi: VertexSet,
}

impl SidePartition {
    pub fn sizes(&self) -> (usize, usize, usize) {
        (self.w_uv.len(), self.w_vu.len(), self.equi.len())
    }
}

pub fn side_partition(d: &DistanceMatrix, u: usize, v: usize) -> Result<SidePartition, PositionError> {
    let n = d.order();
    for x in [u, v] {
        if x >= n {
            return Err(PositionError::OutOfRange(x));
        }
    }
    if !d.is_edge(u, v) {
        return Err(PositionError::NotAnEdge(u, v));
    }
    let mut p = SidePartition { w_uv: VertexSet::EMPTY, w_vu: VertexSet::EMPTY, equi: VertexSet::EMPTY };
    for w in 0..n {
        // UNREACHABLE is the largest byte, so the comparison is still right
        // within u's component and gives equality elsewhere.
        let (du, dv) = (d.raw(u, w), d.raw(v, w));
        if du < dv {
            p.w_uv.insert(w);
        } else if dv < du {
            p.w_vu.insert(w);
        } else {
            p.equi.insert(w);
        }
    }
    Ok(p)
}

fn check_pair(d: &DistanceMatrix, x: usize, y: usize) -> Result<(), PositionError> {
    let n = d.order();
    for v in [x, y] {
        if v >= n {
            return Err(PositionError::OutOfRange(v));
        }
    }
    if x == y {
        return Err(PositionError::SameVertex(x));
    }
    if !d.reachable(x, y) {
        return Err(PositionError::Unreachable(x, y));
    }
    Ok(())
}

/// The line through `x` and `y`: all `z` with `d(x,y) = d(x,z) + d(z,y)` or
/// `d(x,y) = |d(x,z) - d(z,y)|`.
pub fn line(d: &DistanceMatrix, x: usize, y: usize) -> Result<VertexSet, PositionError> {
    check_pair(d, x, y)?;
    let dxy = d.get(x, y).unwrap() as i64;
    let mut out = VertexSet::EMPTY;
    for z in 0..d.order() {
        let (Some(a), Some(b)) = (d.get(x, z), d.get(z, y)) else { continue };
        let (a, b) = (a as i64, b as i64);
        if dxy == a + b || dxy == (a - b).abs() {
            out.insert(z);
        }
    }
    Ok(out)
}

pub fn is_universal_line(d: &DistanceMatrix, x: usize, y: usize) -> Result<bool, PositionError> {
    Ok(line(d, x, y)? == VertexSet::full(d.order()))
}

fn check_connected_pairable(d: &DistanceMatrix) -> Result<(), PositionError> {
    if d.order() < 2 {
        return Err(PositionError::TooSmall);
    }
    if d.diameter().is_none() {
        return Err(PositionError::Disconnected);
    }
    Ok(())
}

/// Every vertex lies in a pair whose line is universal. Equivalent to the
/// Builder-first game ending with two vertices.
pub fn gpg_is_2_by_lines(d: &DistanceMatrix) -> Result<bool, PositionError> {
    check_connected_pairable(d)?;
    let n = d.order();
    for x in 0..n {
        let mut found = false;
        for y in (0..n).filter(|&y| y != x) {
            if is_universal_line(d, x, y)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Some vertex `u` has a universal line with every other vertex.
/// Equivalent to the Blocker-first game ending with two vertices.
pub fn gpg_prime_is_2_by_lines(d: &DistanceMatrix) -> Result<bool, PositionError> {
    Ok(universal_hub(d)?.is_some())
}

/// Smallest vertex `u` such that `{u, v}` induces a universal line for every
/// `v != u`.
pub fn universal_hub(d: &DistanceMatrix) -> Result<Option<usize>, PositionError> {
    check_connected_pairable(d)?;
    let n = d.order();
    for u in 0..n {
        let mut all = true;
        for v in (0..n).filter(|&v| v != u) {
            if !is_universal_line(d, u, v)? {
                all = false;
                break;
            }
        }
        if all {
            return Ok(Some(u));
        }
    }
    Ok(None)
}

/// Every pair `x, y` at distance at least 2 admits an edge `yz` with
/// `d(x,z) = d(x,y)`. Pairs in different components are skipped.
pub fn in_class_g(d: &DistanceMatrix) -> bool {
    equidistant_pivots(d, |dxy| dxy >= 2)
}

/// As [`in_class_g`], restricted to pairs at distance exactly 2.
pub fn in_class_g2(d: &DistanceMatrix) -> bool {
    equidistant_pivots(d, |dxy| dxy == 2)
}

fn equidistant_pivots(d: &DistanceMatrix, applies: impl Fn(u32) -> bool) -> bool {
    let n = d.order();
    (0..n).all(|x| {
        (0..n).all(|y| match d.get(x, y) {
            Some(dxy) if applies(dxy) => (0..n).any(|z| d.is_edge(y, z) && d.get(x, z) == Some(dxy)),
            _ => true,
        })
    })
}

/// Per-pair line masks for fast incremental play.
///
/// For `x != y` in one component, `line(x, y)` is the set of vertices `z`
/// such that one of `x, y, z` lies on a geodesic between the other two (plus
/// `x` and `y`). For pairs in different components it is just `{x, y}`.
/// A set `S` is in general position iff `line(x, y) ∩ S = {x, y}` for all
/// pairs in `S`, and the playable vertices of `S` are those outside every
/// `line(x, y)` with `x, y ∈ S`.
#[derive(Clone, Debug)]
pub struct LineTable {
    n: usize,
    lines: Vec<VertexSet>,
}

impl LineTable {
    pub fn new(d: &DistanceMatrix) -> Self {
        let n = d.order();
        let mut lines = vec![VertexSet::EMPTY; n * n];
        for x in 0..n {
            for y in 0..n {
                if x == y {
                    continue;
                }
                let mut m = VertexSet::singleton(x).with(y);
                if d.reachable(x, y) {
                    for z in 0..n {
                        if z != x && z != y && collinear(d, x, y, z) {
                            m.insert(z);
                        }
                    }
                }
                lines[x * n + y] = m;
            }
        }
        LineTable { n, lines }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn line(&self, x: usize, y: usize) -> VertexSet {
        self.lines[x * self.n + y]
    }

    pub fn is_general_position(&self, s: VertexSet) -> bool {
        let mut rest = s;
        while let Some(x) = rest.first() {
            rest.remove(x);
            for y in rest {
                let hit = self.line(x, y).intersection(s);
                if hit.len() != 2 {
                    return false;
                }
            }
        }
        true
    }

    /// Vertices blocked by adding `v` to `s`: everything on a line through
    /// `v` and a member of `s`.
    #[inline]
    pub fn blocked_by(&self, s: VertexSet, v: usize) -> VertexSet {
        let row = &self.lines[v * self.n..(v + 1) * self.n];
        let mut acc = VertexSet::singleton(v);
        for x in s {
            acc = acc.union(row[x]);
        }
        acc
    }

    /// Playable set after `v` joins `s`, given the playable set of `s`.
    #[inline]
    pub fn advance(&self, s: VertexSet, playable: VertexSet, v: usize) -> VertexSet {
        playable.difference(self.blocked_by(s, v))
    }

    /// Playable set of `s`, computed from scratch. `s` must be in general
    /// position.
    pub fn playable(&self, s: VertexSet) -> VertexSet {
        let mut blocked = s;
        let mut rest = s;
        while let Some(x) = rest.first() {
            rest.remove(x);
            for y in rest {
                blocked = blocked.union(self.line(x, y));
            }
        }
        VertexSet::full(self.n).difference(blocked)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn dist(n: usize, edges: &[(usize, usize)]) -> DistanceMatrix {
        DistanceMatrix::new(&Graph::new(n, edges).unwrap())
    }

    fn cycle(n: usize) -> DistanceMatrix {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        dist(n, &e)
    }

    fn complete(n: usize) -> DistanceMatrix {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        dist(n, &e)
    }

    fn petersen() -> DistanceMatrix {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        dist(10, &e)
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn path_triples() {
        let p4 = dist(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(!is_general_position(&p4, set(&[0, 1, 3])));
        assert!(is_general_position(&p4, set(&[0, 3])));
        assert!(is_general_position(&p4, VertexSet::EMPTY));
    }

    #[test]
    fn four_cycle_triples() {
        let c4 = cycle(4);
        assert!(!is_general_position(&c4, set(&[0, 2, 1])));
        assert!(is_general_position(&c4, set(&[0, 2])));
        assert!(is_general_position(&c4, set(&[0, 1])));
    }

    #[test]
    fn petersen_six_set() {
        // outer 0-1-2-3-4, inner pentagram 5..9, spokes i ~ i+5; this is the
        // maximal set built from an edge uv together with everything
        // equidistant from u and v.
        let d = petersen();
        let s = side_partition(&d, 0, 1).unwrap();
        let six = s.equi.with(0).with(1);
        assert_eq!(six.len(), 6);
        assert!(is_general_position(&d, six));
        assert!(playable_vertices(&d, six).unwrap().is_empty());
    }

    #[test]
    fn playable_sets() {
        let c6 = cycle(6);
        assert_eq!(playable_vertices(&c6, VertexSet::EMPTY).unwrap(), VertexSet::full(6));
        assert_eq!(playable_vertices(&c6, set(&[0, 3])).unwrap(), VertexSet::EMPTY);
        let k5 = complete(5);
        assert_eq!(playable_vertices(&k5, set(&[1, 3])).unwrap(), set(&[0, 2, 4]));
        let p3 = dist(3, &[(0, 1), (1, 2)]);
        assert_eq!(playable_vertices(&p3, set(&[0, 1, 2])), Err(PositionError::NotGeneralPosition(set(&[0, 1, 2]))));
    }

    #[test]
    fn closure_values() {
        assert_eq!(forced_final_size(&cycle(6), set(&[0, 1])).unwrap(), Some(2));
        assert_eq!(forced_final_size(&complete(5), set(&[0])).unwrap(), Some(5));
        assert_eq!(forced_final_size(&petersen(), set(&[0, 1])).unwrap(), Some(6));
        // C6 from a single vertex: antipode and neighbours conflict
        assert_eq!(forced_final_size(&cycle(6), set(&[0])).unwrap(), None);
    }

    #[test]
    fn side_partitions() {
        let c6 = cycle(6);
        let p = side_partition(&c6, 0, 1).unwrap();
        assert!(p.equi.is_empty());
        assert!(p.w_uv.contains(0) && p.w_vu.contains(1));
        for (u, v) in [(0, 1), (0, 4), (0, 5), (5, 7)] {
            assert_eq!(side_partition(&petersen(), u, v).unwrap().sizes(), (3, 3, 4));
        }
        for n in 2..7 {
            assert_eq!(side_partition(&complete(n), 0, 1).unwrap().sizes(), (1, 1, n - 2));
        }
        assert_eq!(side_partition(&c6, 0, 2), Err(PositionError::NotAnEdge(0, 2)));
    }

    #[test]
    fn lines() {
        let p3 = dist(3, &[(0, 1), (1, 2)]);
        assert_eq!(line(&p3, 0, 2).unwrap(), set(&[0, 1, 2]));
        assert!(is_universal_line(&cycle(4), 0, 2).unwrap());
        // even cycle, adjacent pair: every other vertex is one step nearer
        // to one end than the other, so the line is everything
        assert_eq!(line(&cycle(6), 0, 1).unwrap(), VertexSet::full(6));
        assert_eq!(line(&cycle(6), 0, 2).unwrap(), set(&[0, 1, 2, 3, 5]));
        let pet = petersen();
        for x in 0..10 {
            for y in 0..10 {
                if x != y {
                    assert!(!is_universal_line(&pet, x, y).unwrap());
                }
            }
        }
        assert_eq!(line(&p3, 1, 1), Err(PositionError::SameVertex(1)));
        let split = dist(4, &[(0, 1), (2, 3)]);
        assert_eq!(line(&split, 0, 2), Err(PositionError::Unreachable(0, 2)));
    }

    #[test]
    fn path_endpoints_are_universal() {
        for n in 2..8 {
            let e: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            assert!(is_universal_line(&dist(n, &e), 0, n - 1).unwrap());
        }
    }

    #[test]
    fn universal_line_tests() {
        // cocktail party K_{2,2,2}: pairs 0-1, 2-3, 4-5 are the non-edges
        let mut e = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                if i / 2 != j / 2 {
                    e.push((i, j));
                }
            }
        }
        let cp = dist(6, &e);
        assert!(gpg_is_2_by_lines(&cp).unwrap());
        assert!(!gpg_is_2_by_lines(&complete(3)).unwrap());
        assert!(gpg_is_2_by_lines(&cycle(8)).unwrap());

        let k23 = dist(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert!(gpg_prime_is_2_by_lines(&k23).unwrap());
        assert!(!gpg_prime_is_2_by_lines(&cycle(6)).unwrap());
        assert_eq!(gpg_is_2_by_lines(&complete(1)), Err(PositionError::TooSmall));
        assert_eq!(gpg_is_2_by_lines(&dist(2, &[])), Err(PositionError::Disconnected));
    }

    #[test]
    fn classes() {
        assert!(in_class_g(&cycle(5)));
        assert!(in_class_g(&petersen()));
        assert!(in_class_g(&complete(4)));
        assert!(!in_class_g(&cycle(6)));
        assert!(in_class_g2(&cycle(5)));
    }

    #[test]
    fn table_agrees_with_direct_checks() {
        let graphs = [cycle(5), cycle(6), petersen(), complete(4), dist(6, &[(0, 1), (2, 3), (4, 5)])];
        for d in &graphs {
            let t = LineTable::new(d);
            let n = d.order();
            for bits in 0u64..(1 << n) {
                let s = VertexSet::from_bits(bits);
                let gp = is_general_position(d, s);
                assert_eq!(t.is_general_position(s), gp, "{s}");
                if gp {
                    assert_eq!(t.playable(s), playable_vertices(d, s).unwrap());
                    for v in t.playable(s) {
                        assert!(extends_general_position(d, s, v));
                        assert_eq!(t.advance(s, t.playable(s), v), t.playable(s.with(v)));
                    }
                }
            }
            for x in 0..n {
                for y in 0..n {
                    if x != y && d.reachable(x, y) {
                        assert_eq!(t.line(x, y), line(d, x, y).unwrap());
                    }
                }
            }
        }
    }
}

use super::{bad, labelled, FamilyError};
use crate::graph::{DistanceMatrix, Graph};

/// `T_{t1..tk}`: a central path `u1..uk` with `t_i` leaves hanging off
/// `u_i`, optionally with edges subdivided.
///
/// Base edges are numbered central-path edges first (`u_i u_{i+1}` in order),
/// then leaf edges in the order of their central vertex. `subdivisions` is
/// either empty (no subdivision) or one count per base edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CaterpillarSpec {
    pub t: Vec<usize>,
    pub subdivisions: Vec<usize>,
}

impl CaterpillarSpec {
    pub fn new(t: Vec<usize>) -> Self {
        CaterpillarSpec { t, subdivisions: Vec::new() }
    }

    pub fn with_subdivisions(mut self, subdivisions: Vec<usize>) -> Self {
        self.subdivisions = subdivisions;
        self
    }

    /// Every base edge subdivided `c` times.
    pub fn uniform(t: Vec<usize>, c: usize) -> Self {
        let m = CaterpillarSpec::new(t.clone()).base_edge_count();
        CaterpillarSpec { t, subdivisions: vec![c; m] }
    }

    pub fn k(&self) -> usize {
        self.t.len()
    }

    pub fn base_edge_count(&self) -> usize {
        self.k().saturating_sub(1) + self.t.iter().sum::<usize>()
    }

    pub fn order(&self) -> usize {
        self.k() + self.t.iter().sum::<usize>() + self.subdivisions.iter().sum::<usize>()
    }

    /// Whether the end-leaf hypotheses `t_1 >= 1` and `t_k >= 1` hold.
    pub fn has_leaves_at_ends(&self) -> bool {
        self.k() >= 2 && self.t[0] >= 1 && self.t[self.k() - 1] >= 1
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        if self.k() < 2 {
            return Err(bad("caterpillar needs a central path of at least 2 vertices"));
        }
        if !self.subdivisions.is_empty() && self.subdivisions.len() != self.base_edge_count() {
            return Err(bad(format!(
                "caterpillar has {} base edges but {} subdivision counts were given",
                self.base_edge_count(),
                self.subdivisions.len()
            )));
        }
        Ok(())
    }
}

/// Central vertices get ids `0..k`, leaves follow in order, subdivision
/// vertices are appended last.
pub fn caterpillar(spec: &CaterpillarSpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let k = spec.k();
    let mut labels: Vec<String> = (1..=k).map(|i| format!("u{i}")).collect();
    let mut base = Vec::with_capacity(spec.base_edge_count());
    for i in 1..k {
        base.push((i - 1, i));
    }
    for (i, &ti) in spec.t.iter().enumerate() {
        for j in 1..=ti {
            base.push((i, labels.len()));
            labels.push(format!("u{}.{j}", i + 1));
        }
    }
    let mut edges = Vec::new();
    for (idx, &(a, b)) in base.iter().enumerate() {
        let c = spec.subdivisions.get(idx).copied().unwrap_or(0);
        let mut prev = a;
        for j in 1..=c {
            let s = labels.len();
            labels.push(format!("s{}.{j}", idx + 1));
            edges.push((prev, s));
            prev = s;
        }
        edges.push((prev, b));
    }
    labelled(labels.len(), &edges, labels)
}

/// Membership in the family of trees attaining `gpg' = ℓ − Δ + 2`: stars,
/// and subdivisions of caterpillars whose heavier end carries at least as
/// many leaves as the rest of the central path.
///
/// Works on the branch vertices (degree at least 3): they must lie on one
/// path, and an end `e` of that path must satisfy
/// `deg(e) − 1 >= ℓ − (deg(e) − 1)`.
pub fn is_in_family_t(g: &Graph) -> Result<bool, FamilyError> {
    if !g.is_tree() {
        return Err(bad("family-T membership is defined for trees only"));
    }
    if g.order() < 3 {
        return Err(bad("family-T membership needs at least 3 vertices"));
    }
    let branch: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= 3).collect();
    if branch.len() <= 2 {
        return Ok(true);
    }
    let d = DistanceMatrix::new(g);
    let far = |from: usize| *branch.iter().max_by_key(|&&b| (d.raw(from, b), std::cmp::Reverse(b))).unwrap();
    let a = far(branch[0]);
    let b = far(a);
    let dab = d.raw(a, b);
    if branch.iter().any(|&c| d.raw(a, c) + d.raw(c, b) != dab) {
        return Ok(false);
    }
    let leaves = g.leaf_count();
    Ok([a, b].iter().any(|&e| 2 * (g.degree(e) - 1) >= leaves))
}

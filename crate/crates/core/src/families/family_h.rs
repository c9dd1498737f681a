use super::{bad, labelled, FamilyError};
use crate::graph::Graph;

/// Shape of a graph built from `K_{2,n_i}` blocks glued at a hub `u`.
///
/// Block `i` has the two-vertex side `{u, u_i'}` and `blocks[i]` vertices on
/// the other side; `pendant_at_block[i]` is the length of the path hanging
/// off `u_i'`, and every entry of `paths_at_u` adds one more path at `u`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FamilyHSpec {
    pub blocks: Vec<usize>,
    pub pendant_at_block: Vec<usize>,
    pub paths_at_u: Vec<usize>,
}

impl FamilyHSpec {
    pub fn order(&self) -> usize {
        1 + self.blocks.iter().map(|n| n + 1).sum::<usize>()
            + self.pendant_at_block.iter().sum::<usize>()
            + self.paths_at_u.iter().sum::<usize>()
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        if let Some(n) = self.blocks.iter().find(|&&n| n < 2) {
            return Err(bad(format!("block K_{{2,{n}}} needs at least 2 vertices on its large side")));
        }
        if !self.pendant_at_block.is_empty() && self.pendant_at_block.len() != self.blocks.len() {
            return Err(bad("need one pendant path length per block"));
        }
        if self.order() < 2 {
            return Err(bad("family-H graph needs at least 2 vertices"));
        }
        Ok(())
    }
}

fn add_path(edges: &mut Vec<(usize, usize)>, labels: &mut Vec<String>, from: usize, len: usize, tag: &str) {
    let mut prev = from;
    for j in 1..=len {
        let v = labels.len();
        labels.push(format!("{tag}.{j}"));
        edges.push((prev, v));
        prev = v;
    }
}

/// The hub `u` is vertex 0. Each block follows as `u_i'`, its large side,
/// then its pendant path; paths at the hub come last.
pub fn family_h(spec: &FamilyHSpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let mut labels = vec!["u".to_string()];
    let mut edges = Vec::new();
    for (i, &n) in spec.blocks.iter().enumerate() {
        let b = i + 1;
        let hub2 = labels.len();
        labels.push(format!("u{b}'"));
        for j in 1..=n {
            let w = labels.len();
            labels.push(format!("w{b}.{j}"));
            edges.push((0, w));
            edges.push((hub2, w));
        }
        let len = spec.pendant_at_block.get(i).copied().unwrap_or(0);
        add_path(&mut edges, &mut labels, hub2, len, &format!("p{b}"));
    }
    for (i, &len) in spec.paths_at_u.iter().enumerate() {
        add_path(&mut edges, &mut labels, 0, len, &format!("q{}", i + 1));
    }
    labelled(labels.len(), &edges, labels)
}

//! Largest general position sets and smallest maximal ones.

use crate::graph::{DistanceMatrix, VertexSet};
use crate::position::LineTable;

use super::{SolveError, DEFAULT_NODE_BUDGET};

/// `gp(G)`: order of a largest general position set.
pub fn gp_number(d: &DistanceMatrix) -> Result<usize, SolveError> {
    gp_number_with(d, DEFAULT_NODE_BUDGET)
}

/// Branch and bound over vertices in ascending order: take the smallest
/// undecided candidate or drop it, and abandon a branch once the chosen set
/// plus every remaining candidate cannot beat the incumbent.
pub fn gp_number_with(d: &DistanceMatrix, budget: u64) -> Result<usize, SolveError> {
    let table = LineTable::new(d);
    let mut search = MaxSearch { table: &table, best: 0, nodes: 0, budget };
    search.branch(VertexSet::EMPTY, VertexSet::full(d.order()))?;
    Ok(search.best)
}

struct MaxSearch<'a> {
    table: &'a LineTable,
    best: usize,
    nodes: u64,
    budget: u64,
}

impl MaxSearch<'_> {
    fn branch(&mut self, chosen: VertexSet, candidates: VertexSet) -> Result<(), SolveError> {
        if chosen.len() + candidates.len() <= self.best {
            return Ok(());
        }
        let Some(v) = candidates.first() else {
            self.best = chosen.len();
            return Ok(());
        };
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SolveError::BudgetExhausted { budget: self.budget });
        }
        self.branch(chosen.with(v), self.table.advance(chosen, candidates, v))?;
        self.branch(chosen, candidates.without(v))
    }
}

/// `gp⁻(G)`: order of a smallest maximal general position set.
pub fn gp_lower_number(d: &DistanceMatrix) -> Result<usize, SolveError> {
    gp_lower_number_with(d, DEFAULT_NODE_BUDGET)
}

/// Tries sizes 1, 2, ... and returns the first size at which some general
/// position set has nothing left to add.
pub fn gp_lower_number_with(d: &DistanceMatrix, budget: u64) -> Result<usize, SolveError> {
    let table = LineTable::new(d);
    let mut search = MinMaximalSearch { table: &table, nodes: 0, budget };
    let all = VertexSet::full(d.order());
    for k in 1..=d.order() {
        if search.exists(VertexSet::EMPTY, all, all, k)? {
            return Ok(k);
        }
    }
    unreachable!("a largest general position set is maximal")
}

struct MinMaximalSearch<'a> {
    table: &'a LineTable,
    nodes: u64,
    budget: u64,
}

impl MinMaximalSearch<'_> {
    /// Is there a maximal set of exactly `k` vertices extending `chosen` by
    /// members of `candidates` (all larger than the members of `chosen`)?
    fn exists(
        &mut self,
        chosen: VertexSet,
        playable: VertexSet,
        candidates: VertexSet,
        k: usize,
    ) -> Result<bool, SolveError> {
        if chosen.len() == k {
            return Ok(playable.is_empty());
        }
        if chosen.len() + candidates.len() < k {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SolveError::BudgetExhausted { budget: self.budget });
        }
        for v in candidates {
            let next = self.table.advance(chosen, playable, v);
            let above = VertexSet::from_bits(u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0) & next.bits());
            if self.exists(chosen.with(v), next, above, k)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn d(n: usize, e: &[(usize, usize)]) -> DistanceMatrix {
        DistanceMatrix::new(&Graph::new(n, e).unwrap())
    }

    #[test]
    fn small_graphs() {
        let c5 = d(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(gp_number(&c5).unwrap(), 3);
        assert_eq!(gp_lower_number(&c5).unwrap(), 3);
        let c6 = d(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert_eq!(gp_number(&c6).unwrap(), 3);
        assert_eq!(gp_lower_number(&c6).unwrap(), 2);
        let k1 = d(1, &[]);
        assert_eq!((gp_number(&k1).unwrap(), gp_lower_number(&k1).unwrap()), (1, 1));
        // star with four leaves
        let star = d(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(gp_number(&star).unwrap(), 4);
        assert_eq!(gp_lower_number(&star).unwrap(), 2);
        // three disjoint edges: everything is in general position
        let matching = d(6, &[(0, 1), (2, 3), (4, 5)]);
        assert_eq!(gp_number(&matching).unwrap(), 6);
        assert_eq!(gp_lower_number(&matching).unwrap(), 6);
    }

    #[test]
    fn budget() {
        let c6 = d(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert_eq!(gp_number_with(&c6, 2), Err(SolveError::BudgetExhausted { budget: 2 }));
    }
}

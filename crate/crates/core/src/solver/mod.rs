//! Exact values of the Builder-Blocker general position game.
//!
//! Positions are sets: the player to move is determined by the parity of the
//! chosen set and who opened, so the memo is keyed by the set alone and every
//! move order reaching the same set shares one entry. All cutoffs are exact:
//!
//! * a node whose chosen set together with its playable set is already in
//!   general position is worth exactly their combined size (every remaining
//!   playable vertex will be played, in any order);
//! * the value of a node lies in `|S| + 1 ..= |S| + |playable|`, so Builder can
//!   stop at a child reaching the top and Blocker at a child reaching the
//!   bottom.
//!
//! Memo entries are always exact values, never window bounds.

mod oracle;
mod sets;

pub use oracle::oracle_solve;
pub use sets::{gp_lower_number, gp_lower_number_with, gp_number, gp_number_with};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{DistanceMatrix, Graph, VertexSet};
use crate::position::LineTable;
use crate::rng::SplitMix64;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// One root child searched on its own: vertex, value, private memo, work done.
type RootResult = (usize, Result<u8, SolveError>, HashMap<u64, u8>, SearchStats);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Player {
    Builder,
    Blocker,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Builder => Player::Blocker,
            Player::Blocker => Player::Builder,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Builder => "builder",
            Player::Blocker => "blocker",
        })
    }
}

impl FromStr for Player {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "builder" => Ok(Player::Builder),
            "blocker" => Ok(Player::Blocker),
            _ => Err(format!("expected `builder` or `blocker`, got `{s}`")),
        }
    }
}

/// A position: the marked vertices and who opened the game.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GameState {
    pub chosen: VertexSet,
    pub first_player: Player,
}

impl GameState {
    pub fn new(first_player: Player) -> Self {
        GameState { chosen: VertexSet::EMPTY, first_player }
    }

    pub fn to_move(&self) -> Player {
        if self.chosen.len().is_multiple_of(2) {
            self.first_player
        } else {
            self.first_player.other()
        }
    }

    #[must_use]
    pub fn play(self, v: usize) -> Self {
        GameState { chosen: self.chosen.with(v), ..self }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },
    #[error("position is terminal, there is no move to make")]
    Terminal,
    #[error("position {0} is not in general position")]
    IllegalPosition(VertexSet),
    #[error("position {0} mentions vertices outside the graph")]
    OutOfRange(VertexSet),
}

/// Order in which children are expanded. Values never depend on it; only
/// the amount of work does.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MoveOrdering {
    #[default]
    Ascending,
    Descending,
    /// A fixed pseudo-random permutation of the vertex ids.
    Shuffled(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub node_budget: u64,
    pub ordering: MoveOrdering,
    /// Worker threads for the root fan-out; 1 searches on the calling thread.
    pub threads: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { node_budget: DEFAULT_NODE_BUDGET, ordering: MoveOrdering::Ascending, threads: 1 }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Positions expanded (memo misses with at least one playable vertex).
    pub nodes: u64,
    pub memo_hits: u64,
    /// Positions settled by the closed-playable-set rule.
    pub closure_cutoffs: u64,
}

impl SearchStats {
    fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.memo_hits += other.memo_hits;
        self.closure_cutoffs += other.closure_cutoffs;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameOutcome {
    /// Size of the final general position set under optimal play.
    pub value: usize,
    /// One optimal game, always taking the lowest-id optimal move.
    pub principal_variation: Vec<usize>,
    pub stats: SearchStats,
}

/// Game value from the empty position with default settings: `gpg` when
/// Builder opens, `gpg'` when Blocker opens.
pub fn solve_game(g: &Graph, first: Player) -> Result<GameOutcome, SolveError> {
    solve_game_with(g, first, &SolverConfig::default())
}

pub fn solve_game_with(g: &Graph, first: Player, config: &SolverConfig) -> Result<GameOutcome, SolveError> {
    GameSolver::new(g, first, config.clone()).solve()
}

/// Lowest-id optimal move for the player to move in `state`.
pub fn best_move(g: &Graph, state: &GameState) -> Result<usize, SolveError> {
    GameSolver::new(g, state.first_player, SolverConfig::default()).best_move(state.chosen)
}

/// A solver bound to one graph and one opening player. The memo persists
/// across calls, so repeated queries from related positions are cheap.
pub struct GameSolver {
    table: LineTable,
    first: Player,
    config: SolverConfig,
    ranks: Vec<u8>,
    memo: HashMap<u64, u8>,
    counter: AtomicU64,
    stats: SearchStats,
}

impl GameSolver {
    pub fn new(g: &Graph, first: Player, config: SolverConfig) -> Self {
        let table = LineTable::new(&DistanceMatrix::new(g));
        Self::from_table(table, first, config)
    }

    pub fn from_table(table: LineTable, first: Player, config: SolverConfig) -> Self {
        let ranks = vertex_ranks(table.order(), config.ordering);
        GameSolver {
            table,
            first,
            config,
            ranks,
            memo: HashMap::new(),
            counter: AtomicU64::new(0),
            stats: SearchStats::default(),
        }
    }

    pub fn first_player(&self) -> Player {
        self.first
    }

    pub fn table(&self) -> &LineTable {
        &self.table
    }

    /// Cumulative statistics over every query made so far.
    pub fn stats(&self) -> SearchStats {
        self.stats
    }

    fn worker<'a>(&'a self, memo: &'a mut HashMap<u64, u8>) -> Worker<'a> {
        Worker {
            table: &self.table,
            first: self.first,
            ranks: &self.ranks,
            shuffled: !matches!(self.config.ordering, MoveOrdering::Ascending),
            budget: self.config.node_budget,
            counter: &self.counter,
            memo,
            stats: SearchStats::default(),
        }
    }

    fn validate(&self, chosen: VertexSet) -> Result<VertexSet, SolveError> {
        if !chosen.is_subset(VertexSet::full(self.table.order())) {
            return Err(SolveError::OutOfRange(chosen));
        }
        if !self.table.is_general_position(chosen) {
            return Err(SolveError::IllegalPosition(chosen));
        }
        Ok(self.table.playable(chosen))
    }

    fn search(&mut self, chosen: VertexSet, playable: VertexSet) -> Result<usize, SolveError> {
        let mut memo = std::mem::take(&mut self.memo);
        let mut w = self.worker(&mut memo);
        let r = w.value(chosen, playable);
        let local = w.stats;
        self.memo = memo;
        self.stats.absorb(&local);
        r.map(usize::from)
    }

    /// Exact value of the position `chosen` (final set size under optimal
    /// play from here on).
    pub fn value(&mut self, chosen: VertexSet) -> Result<usize, SolveError> {
        let playable = self.validate(chosen)?;
        if let Some(&v) = self.memo.get(&chosen.bits()) {
            return Ok(v as usize);
        }
        if self.config.threads > 1 && chosen.is_empty() {
            return self.parallel_root(playable);
        }
        self.search(chosen, playable)
    }

    /// Root evaluation fanned out over worker threads, each with its own
    /// memo. The memos are merged afterwards; every entry is an exact value
    /// for the same opening player, so the merge is order-independent.
    fn parallel_root(&mut self, playable: VertexSet) -> Result<usize, SolveError> {
        if playable.is_empty() {
            return Ok(0);
        }
        let pool = rayon::ThreadPoolBuilder::new().num_threads(self.config.threads).build().expect("thread pool");
        let me = &*self;
        let results: Vec<RootResult> = pool.install(|| {
            playable
                .to_vec()
                .into_par_iter()
                .map(|v| {
                    let mut memo = HashMap::new();
                    let mut w = me.worker(&mut memo);
                    let child = VertexSet::singleton(v);
                    let r = w.value(child, me.table.advance(VertexSet::EMPTY, playable, v));
                    let stats = w.stats;
                    (v, r, memo, stats)
                })
                .collect()
        });
        let builder = self.first == Player::Builder;
        let mut best: Option<u8> = None;
        self.stats.nodes += 1;
        for (_, r, memo, stats) in results {
            self.stats.absorb(&stats);
            let val = r?;
            best = Some(match best {
                None => val,
                Some(b) if builder => b.max(val),
                Some(b) => b.min(val),
            });
            self.memo.extend(memo);
        }
        let best = best.unwrap();
        self.memo.insert(0, best);
        Ok(best as usize)
    }

    /// Lowest-id move achieving the value of `chosen` for the player to move.
    pub fn best_move(&mut self, chosen: VertexSet) -> Result<usize, SolveError> {
        let playable = self.validate(chosen)?;
        if playable.is_empty() {
            return Err(SolveError::Terminal);
        }
        let target = self.value(chosen)?;
        for v in playable {
            let child = self.table.advance(chosen, playable, v);
            if self.search(chosen.with(v), child)? == target {
                return Ok(v);
            }
        }
        unreachable!("some child attains the minimax value")
    }

    /// Value and principal variation from the empty position.
    pub fn solve(&mut self) -> Result<GameOutcome, SolveError> {
        let value = self.value(VertexSet::EMPTY)?;
        let mut pv = Vec::with_capacity(value);
        let mut chosen = VertexSet::EMPTY;
        while !self.table.playable(chosen).is_empty() {
            let v = self.best_move(chosen)?;
            pv.push(v);
            chosen.insert(v);
        }
        debug_assert_eq!(pv.len(), value);
        Ok(GameOutcome { value, principal_variation: pv, stats: self.stats })
    }
}

fn vertex_ranks(n: usize, ordering: MoveOrdering) -> Vec<u8> {
    let mut ids: Vec<u8> = (0..n as u8).collect();
    match ordering {
        MoveOrdering::Ascending => {}
        MoveOrdering::Descending => ids.reverse(),
        MoveOrdering::Shuffled(seed) => SplitMix64::new(seed).shuffle(&mut ids),
    }
    // ranks[v] = position of v in expansion order
    let mut ranks = vec![0u8; n];
    for (pos, &v) in ids.iter().enumerate() {
        ranks[v as usize] = pos as u8;
    }
    ranks
}

struct Worker<'a> {
    table: &'a LineTable,
    first: Player,
    ranks: &'a [u8],
    shuffled: bool,
    budget: u64,
    counter: &'a AtomicU64,
    memo: &'a mut HashMap<u64, u8>,
    stats: SearchStats,
}

impl Worker<'_> {
    fn value(&mut self, chosen: VertexSet, playable: VertexSet) -> Result<u8, SolveError> {
        let size = chosen.len() as u8;
        if playable.is_empty() {
            return Ok(size);
        }
        if let Some(&v) = self.memo.get(&chosen.bits()) {
            self.stats.memo_hits += 1;
            return Ok(v);
        }
        self.stats.nodes += 1;
        if self.counter.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Err(SolveError::BudgetExhausted { budget: self.budget });
        }

        let top = size + playable.len() as u8;
        if self.table.is_general_position(chosen.union(playable)) {
            self.stats.closure_cutoffs += 1;
            self.memo.insert(chosen.bits(), top);
            return Ok(top);
        }

        let builder = chosen.len().is_multiple_of(2) == (self.first == Player::Builder);
        let bottom = size + 1;

        let mut moves = [0u8; 64];
        let mut k = 0;
        for v in playable {
            moves[k] = v as u8;
            k += 1;
        }
        let moves = &mut moves[..k];
        if self.shuffled {
            moves.sort_unstable_by_key(|&v| self.ranks[v as usize]);
        }

        let mut best = if builder { 0 } else { u8::MAX };
        for &v in moves.iter() {
            let v = v as usize;
            let child = self.table.advance(chosen, playable, v);
            let val = self.value(chosen.with(v), child)?;
            if builder {
                best = best.max(val);
                if best == top {
                    break;
                }
            } else {
                best = best.min(val);
                if best == bottom {
                    break;
                }
            }
        }
        self.memo.insert(chosen.bits(), best);
        Ok(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::new(n, &e).unwrap()
    }

    fn values(g: &Graph) -> (usize, usize) {
        (solve_game(g, Player::Builder).unwrap().value, solve_game(g, Player::Blocker).unwrap().value)
    }

    #[test]
    fn cycles() {
        assert_eq!(values(&cycle(6)), (2, 3));
        assert_eq!(values(&cycle(5)), (3, 3));
        assert_eq!(values(&cycle(4)), (2, 2));
    }

    #[test]
    fn singleton_and_complete() {
        assert_eq!(values(&complete(1)), (1, 1));
        assert_eq!(values(&complete(2)), (2, 2));
        assert_eq!(values(&complete(6)), (6, 6));
        assert_eq!(solve_game(&complete(1), Player::Builder).unwrap().principal_variation, vec![0]);
    }

    #[test]
    fn best_moves() {
        let k5 = complete(5);
        assert_eq!(best_move(&k5, &GameState::new(Player::Builder)).unwrap(), 0);
        // Blocker opened at 0 on C6. A neighbour or the antipode would close
        // the game at two vertices; a vertex at distance two keeps one more.
        let c6 = cycle(6);
        let state = GameState::new(Player::Blocker).play(0);
        assert_eq!(state.to_move(), Player::Builder);
        assert_eq!(best_move(&c6, &state).unwrap(), 2);
        let done = state.play(3);
        assert_eq!(best_move(&c6, &done), Err(SolveError::Terminal));
        let bad = GameState::new(Player::Builder).play(0).play(1).play(2);
        assert_eq!(best_move(&c6, &bad), Err(SolveError::IllegalPosition(bad.chosen)));
    }

    #[test]
    fn principal_variation_replays() {
        let g = cycle(7);
        let out = solve_game(&g, Player::Blocker).unwrap();
        assert_eq!(out.principal_variation.len(), out.value);
        let d = DistanceMatrix::new(&g);
        let mut s = VertexSet::EMPTY;
        for &v in &out.principal_variation {
            assert!(crate::position::playable_vertices(&d, s).unwrap().contains(v));
            s.insert(v);
        }
        assert!(crate::position::playable_vertices(&d, s).unwrap().is_empty());
    }

    #[test]
    fn budget_is_reported() {
        let cfg = SolverConfig { node_budget: 3, ..SolverConfig::default() };
        let r = solve_game_with(&cycle(9), Player::Builder, &cfg);
        assert_eq!(r, Err(SolveError::BudgetExhausted { budget: 3 }));
    }

    #[test]
    fn orderings_and_threads_agree() {
        let g = cycle(9);
        let base = solve_game(&g, Player::Builder).unwrap();
        for ordering in [MoveOrdering::Descending, MoveOrdering::Shuffled(11)] {
            for threads in [1, 3] {
                let cfg = SolverConfig { ordering, threads, ..SolverConfig::default() };
                let out = solve_game_with(&g, Player::Builder, &cfg).unwrap();
                assert_eq!(out.value, base.value);
                assert_eq!(out.principal_variation, base.principal_variation);
            }
        }
    }

    #[test]
    fn player_parsing() {
        assert_eq!("Builder".parse::<Player>(), Ok(Player::Builder));
        assert_eq!("blocker".parse::<Player>(), Ok(Player::Blocker));
        assert!("bob".parse::<Player>().is_err());
    }
}

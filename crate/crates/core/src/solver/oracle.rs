use crate::graph::{DistanceMatrix, Graph, VertexSet};
use crate::position::extends_general_position;

use super::Player;

/// Plain minimax straight from the definition: no memo, no cutoffs, legality
/// checked triple by triple against the distance matrix. Exponential; meant
/// for cross-checking [`super::solve_game`] on small graphs.
pub fn oracle_solve(g: &Graph, first: Player) -> usize {
    let d = DistanceMatrix::new(g);
    play(&d, VertexSet::EMPTY, first)
}

fn play(d: &DistanceMatrix, chosen: VertexSet, mover: Player) -> usize {
    let mut best: Option<usize> = None;
    for v in 0..d.order() {
        if chosen.contains(v) || !extends_general_position(d, chosen, v) {
            continue;
        }
        let val = play(d, chosen.with(v), mover.other());
        best = Some(match (best, mover) {
            (None, _) => val,
            (Some(b), Player::Builder) => b.max(val),
            (Some(b), Player::Blocker) => b.min(val),
        });
    }
    best.unwrap_or(chosen.len())
}

//! Interactive games against the solver.

use std::io::{BufRead, Write};

use gpgame::graph::{Graph, VertexSet};
use gpgame::solver::{GameSolver, GameState, Player, SolveError, SolverConfig};

/// The non-solver side of a game.
pub trait Opponent {
    /// Picks one of `playable`, or `None` to resign.
    fn choose(&mut self, state: &GameState, playable: VertexSet) -> Option<usize>;
    fn notify(&mut self, _msg: &str) {}
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlayOutcome {
    pub moves: Vec<usize>,
    pub final_set: VertexSet,
    /// Value of the game under optimal play from the empty position.
    pub value: usize,
    pub resigned: bool,
}

impl PlayOutcome {
    /// True when the solver's side did at least as well as the game value.
    pub fn solver_held(&self, solver_role: Player) -> bool {
        match solver_role {
            Player::Builder => self.final_set.len() >= self.value,
            Player::Blocker => self.final_set.len() <= self.value,
        }
    }
}

pub fn game_name(first: Player) -> &'static str {
    match first {
        Player::Builder => "gpg",
        Player::Blocker => "gpg'",
    }
}

fn list(s: VertexSet) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Plays one game; the solver takes the role opposite `human`.
///
/// Moves returned by the opponent that are not playable are rejected and
/// the opponent is asked again.
pub fn play_game(
    g: &Graph,
    human: Player,
    first: Player,
    cfg: SolverConfig,
    opponent: &mut dyn Opponent,
) -> Result<PlayOutcome, SolveError> {
    let mut solver = GameSolver::new(g, first, cfg);
    let value = solver.value(VertexSet::EMPTY)?;
    opponent.notify(&format!(
        "{} on {} vertices: {first} moves first, optimal value {value}; you are {human}",
        game_name(first),
        g.order()
    ));
    let mut state = GameState::new(first);
    let mut moves = Vec::new();
    loop {
        let playable = solver.table().playable(state.chosen);
        if playable.is_empty() {
            break;
        }
        opponent.notify(&format!("chosen: {}  playable: {}", state.chosen, list(playable)));
        let mover = state.to_move();
        let v = if mover == human {
            loop {
                match opponent.choose(&state, playable) {
                    None => {
                        opponent.notify(&format!("{human} resigns"));
                        return Ok(PlayOutcome { moves, final_set: state.chosen, value, resigned: true });
                    }
                    Some(v) if playable.contains(v) => break v,
                    Some(v) => opponent.notify(&format!("vertex {v} is not playable, try again")),
                }
            }
        } else {
            let v = solver.best_move(state.chosen)?;
            opponent.notify(&format!("{mover} (solver) plays {v} [{}]", g.label(v)));
            v
        };
        moves.push(v);
        state = state.play(v);
    }
    let size = state.chosen.len();
    let verdict = match size.cmp(&value) {
        std::cmp::Ordering::Equal => "equal to",
        std::cmp::Ordering::Greater => "above",
        std::cmp::Ordering::Less => "below",
    };
    opponent
        .notify(&format!("game over: final set {} has size {size}, {verdict} the optimal value {value}", state.chosen));
    Ok(PlayOutcome { moves, final_set: state.chosen, value, resigned: false })
}

/// A human at a terminal: reads vertex ids or labels line by line.
pub struct Terminal<'g, R, W> {
    graph: &'g Graph,
    input: R,
    output: W,
}

impl<'g, R: BufRead, W: Write> Terminal<'g, R, W> {
    pub fn new(graph: &'g Graph, input: R, output: W) -> Self {
        Terminal { graph, input, output }
    }

    fn parse(&self, token: &str) -> Result<usize, String> {
        if let Ok(v) = token.parse::<usize>() {
            return if v < self.graph.order() {
                Ok(v)
            } else {
                Err(format!("vertex {v} is out of range 0..{}", self.graph.order()))
            };
        }
        (0..self.graph.order())
            .find(|&v| self.graph.label(v) == token)
            .ok_or_else(|| format!("`{token}` is neither a vertex id nor a label"))
    }
}

impl<R: BufRead, W: Write> Opponent for Terminal<'_, R, W> {
    fn choose(&mut self, state: &GameState, playable: VertexSet) -> Option<usize> {
        loop {
            let _ = write!(self.output, "your move ({}): ", state.to_move());
            let _ = self.output.flush();
            let mut line = String::new();
            match self.input.read_line(&mut line) {
                Ok(0) | Err(_) => {
                    let _ = writeln!(self.output);
                    return None;
                }
                Ok(_) => {}
            }
            let token = line.trim();
            if token.is_empty() {
                continue;
            }
            if matches!(token, "q" | "quit" | "resign") {
                return None;
            }
            match self.parse(token) {
                Ok(v) if playable.contains(v) => return Some(v),
                Ok(v) => {
                    let _ = writeln!(self.output, "vertex {v} cannot be added to {}", state.chosen);
                }
                Err(msg) => {
                    let _ = writeln!(self.output, "{msg}");
                }
            }
        }
    }

    fn notify(&mut self, msg: &str) {
        let _ = writeln!(self.output, "{msg}");
    }
}

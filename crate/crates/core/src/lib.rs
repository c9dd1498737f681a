//! Exact solver for the Builder–Blocker general position game.
//!
//! Two players alternately mark vertices of a graph so that the marked set
//! stays in general position (no marked vertex on a shortest path between two
//! others). Builder wants the final set large, Blocker wants it small. The
//! crate computes the optimal outcome exactly, along with the largest and
//! smallest maximal general position sets, closed-form values for the known
//! families, and generators for those families.
//!
//! ```
//! use gpgame::families::cycle;
//! use gpgame::solver::{solve_game, Player};
//!
//! let c6 = cycle(6).unwrap();
//! assert_eq!(solve_game(&c6, Player::Builder).unwrap().value, 2);
//! assert_eq!(solve_game(&c6, Player::Blocker).unwrap().value, 3);
//! ```

pub mod families;
pub mod formulas;
pub mod graph;
pub mod position;
pub mod rng;
pub mod solver;
pub mod verify;

//! Pieces of the `gpgame` command-line tool that are worth testing on their own.

pub mod gen;
pub mod play;
pub mod report;

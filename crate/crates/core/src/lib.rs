//! Minimum Rosenthal potential in congestion games.
//!
//! The crate models congestion games with exact rational latencies and
//! computes states of minimum potential. It picks a polynomial algorithm
//! when the game's class admits one (symmetric singleton, general singleton,
//! symmetric size-2, symmetric non-increasing) and otherwise falls back to an
//! exhaustive oracle or to improving dynamics. Alongside it ships the greedy
//! `H_n`-approximation for non-increasing singleton games, the hardness
//! reductions as instance generators, and exact Stirling/Bell arithmetic for
//! the `Λ_d` approximation factor.

pub mod approx;
pub mod cli;
pub mod combinatorics;
pub mod dynamics;
pub mod error;
pub mod fixtures;
pub mod game;
pub mod generators;
pub mod io;
pub mod matching;
pub mod rational;
pub mod solvers;

pub use error::{Error, Result};
pub use game::{Direction, Game, GameClass, Latency, Monotonicity, Resource, State, Strategy, Violation};
pub use rational::Rational;
pub use solvers::{solve, Algorithm, Optimality, SolveResult};

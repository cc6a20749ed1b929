//! Minimum-potential solvers and the class-based dispatcher.
//!
//! | class                                          | solver                |
//! |------------------------------------------------|-----------------------|
//! | symmetric, size 1, non-decreasing              | greedy insertion      |
//! | size 1, non-decreasing                         | bipartite matching    |
//! | symmetric, size ≤ 2, non-decreasing            | fixed-size matching   |
//! | symmetric, non-increasing                      | one-strategy profiles |
//! | anything else                                  | oracle, else heuristic |

mod nonincreasing;
mod oracle;
mod singleton;
mod size2;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::approx::greedy_nonincreasing_singleton;
use crate::dynamics::{default_max_moves, run_improving_dynamics, Policy};
use crate::error::{Error, Result};
use crate::game::{Game, State};
use crate::rational::Rational;

pub use nonincreasing::solve_symmetric_nonincreasing;
pub use oracle::{
    for_each_state, pure_nash_equilibria, solve_brute_force, solve_brute_force_with_budget, DEFAULT_BUDGET,
};
pub use singleton::{canonical_slots, singleton_bipartite_edges, solve_general_singleton, solve_symmetric_singleton};
pub use size2::{solve_symmetric_size2, Size2Instance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    BruteForce,
    GreedyInsertion,
    SingletonMatching,
    Size2Matching,
    NonincreasingEnum,
    Dynamics,
    GreedyCover,
}

impl Algorithm {
    pub const ALL: [Algorithm; 7] = [
        Algorithm::BruteForce,
        Algorithm::GreedyInsertion,
        Algorithm::SingletonMatching,
        Algorithm::Size2Matching,
        Algorithm::NonincreasingEnum,
        Algorithm::Dynamics,
        Algorithm::GreedyCover,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Algorithm::BruteForce => "brute-force",
            Algorithm::GreedyInsertion => "greedy-insertion",
            Algorithm::SingletonMatching => "singleton-matching",
            Algorithm::Size2Matching => "size2-matching",
            Algorithm::NonincreasingEnum => "nonincreasing-enum",
            Algorithm::Dynamics => "dynamics",
            Algorithm::GreedyCover => "greedy-cover",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.label() == s)
            .ok_or_else(|| Error::Domain(format!("unknown algorithm {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Optimality {
    ProvenOptimal,
    Heuristic,
}

impl fmt::Display for Optimality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Optimality::ProvenOptimal => "proven-optimal",
            Optimality::Heuristic => "heuristic",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub state: State,
    /// Always `game.potential(&state)`.
    pub potential: Rational,
    pub algorithm: Algorithm,
    pub optimality: Optimality,
}

pub(crate) fn require(ok: bool, solver: &'static str, reason: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::class_mismatch(solver, reason()))
    }
}

/// The algorithm [`solve`] picks for `game` under `budget`.
pub fn choose_algorithm(game: &Game, budget: u128) -> Algorithm {
    let class = game.classify();
    let up = class.monotonicity.is_non_decreasing();
    let down = class.monotonicity.is_non_increasing();
    match () {
        _ if class.size == 1 && class.symmetric && up => Algorithm::GreedyInsertion,
        _ if class.size == 1 && up => Algorithm::SingletonMatching,
        _ if class.size <= 2 && class.symmetric && up => Algorithm::Size2Matching,
        _ if class.symmetric && down => Algorithm::NonincreasingEnum,
        _ if game.state_count() <= budget => Algorithm::BruteForce,
        _ if class.size == 1 && down => Algorithm::GreedyCover,
        _ => Algorithm::Dynamics,
    }
}

/// Minimum-potential state with the default oracle budget.
pub fn solve(game: &Game) -> SolveResult {
    solve_with_budget(game, DEFAULT_BUDGET)
}

/// Routes `game` to the polynomial solver for its class. Hard classes use
/// the oracle when `Π|S_i| ≤ budget`, and otherwise a heuristic whose
/// result is flagged [`Optimality::Heuristic`].
pub fn solve_with_budget(game: &Game, budget: u128) -> SolveResult {
    let algorithm = choose_algorithm(game, budget);
    run_algorithm(game, algorithm, budget).expect("dispatch only picks applicable solvers on valid games")
}

/// Runs one named algorithm, failing if `game` is outside its class.
pub fn run_algorithm(game: &Game, algorithm: Algorithm, budget: u128) -> Result<SolveResult> {
    match algorithm {
        Algorithm::BruteForce => solve_brute_force_with_budget(game, budget),
        Algorithm::GreedyInsertion => solve_symmetric_singleton(game),
        Algorithm::SingletonMatching => solve_general_singleton(game),
        Algorithm::Size2Matching => solve_symmetric_size2(game),
        Algorithm::NonincreasingEnum => solve_symmetric_nonincreasing(game),
        Algorithm::GreedyCover => greedy_nonincreasing_singleton(game),
        Algorithm::Dynamics => {
            let start = State::new(vec![0; game.players()]);
            let out = run_improving_dynamics(game, &start, Policy::BestResponse, default_max_moves(game))?;
            let potential = game.potential(&out.state)?;
            Ok(SolveResult {
                state: out.state,
                potential,
                algorithm: Algorithm::Dynamics,
                optimality: Optimality::Heuristic,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::game::{Latency, Resource};
    use crate::rational::int;

    #[test]
    fn dispatch_table() {
        let res = vec![
            Resource::new("a", Latency::linear()),
            Resource::new("b", Latency::linear()),
        ];
        let g = Game::symmetric(2, res.clone(), vec![vec![0], vec![1]]).unwrap();
        let r = solve(&g);
        assert_eq!(r.algorithm, Algorithm::GreedyInsertion);
        assert_eq!(r.optimality, Optimality::ProvenOptimal);
        assert_eq!(
            solve(&fixtures::two_equilibria_singleton()).algorithm,
            Algorithm::SingletonMatching
        );
        assert_eq!(
            solve(&fixtures::two_equilibria_pairs()).algorithm,
            Algorithm::Size2Matching
        );
        assert_eq!(
            solve(&fixtures::non_increasing_pair()).algorithm,
            Algorithm::NonincreasingEnum
        );

        let three: Vec<Resource> = (0..3)
            .map(|r| Resource::new(format!("r{r}"), Latency::linear()))
            .collect();
        let g = Game::symmetric(2, three, vec![vec![0, 1, 2]]).unwrap();
        let r = solve(&g);
        assert_eq!(r.algorithm, Algorithm::BruteForce);
        assert_eq!(r.potential, int(9));
    }

    #[test]
    fn heuristic_fallback_when_over_budget() {
        let res: Vec<Resource> = (0..4)
            .map(|r| Resource::new(format!("r{r}"), Latency::linear()))
            .collect();
        let g = Game::new(2, res, vec![vec![vec![0, 1], vec![2, 3]], vec![vec![0, 2], vec![1, 3]]]).unwrap();
        assert_eq!(choose_algorithm(&g, DEFAULT_BUDGET), Algorithm::BruteForce);
        let r = solve_with_budget(&g, 1);
        assert_eq!(r.algorithm, Algorithm::Dynamics);
        assert_eq!(r.optimality, Optimality::Heuristic);
        assert_eq!(r.potential, g.potential(&r.state).unwrap());
    }

    #[test]
    fn labels_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.label().parse::<Algorithm>().unwrap(), a);
        }
        assert!("simplex".parse::<Algorithm>().is_err());
    }
}

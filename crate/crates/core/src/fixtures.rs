//! Small hand-built games with known equilibria, used as regression
//! fixtures by the tests and bundled with the CLI.

use crate::game::{Game, Latency, Resource, State};
use crate::rational::{int, ratio, Rational};

/// Two players on three resources (`ℓ1(h)=h`, `ℓ2(h)=2h`, `ℓ3(h)=h`);
/// player `a` picks from `{r2, r3}`, player `b` from `{r1, r3}`.
///
/// Pure equilibria at potentials 3 (`a→r2, b→r3`) and 2 (`a→r3, b→r1`).
pub fn two_equilibria_singleton() -> Game {
    let resources = vec![
        Resource::new("r1", Latency::linear()),
        Resource::new("r2", Latency::scaled_linear(int(2))),
        Resource::new("r3", Latency::linear()),
    ];
    Game::new(2, resources, vec![vec![vec![1], vec![2]], vec![vec![0], vec![2]]]).expect("fixture is valid")
}

/// Two players, four resources (`h`, `4h`, `2h`, `2h`), every pair of
/// resources is a strategy. Pure equilibria at potentials 9 and 7.
pub fn two_equilibria_pairs() -> Game {
    let resources = vec![
        Resource::new("r1", Latency::linear()),
        Resource::new("r2", Latency::scaled_linear(int(4))),
        Resource::new("r3", Latency::scaled_linear(int(2))),
        Resource::new("r4", Latency::scaled_linear(int(2))),
    ];
    let mut pairs = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            pairs.push(vec![a, b]);
        }
    }
    Game::symmetric(2, resources, pairs).expect("fixture is valid")
}

/// Four players, two resources sharing `ℓ = (2, 2, 2, 1)`, symmetric
/// singleton. Everyone on one resource has potential 7; a 2–2 split is an
/// equilibrium with potential 8.
pub fn non_increasing_pair() -> Game {
    let values = || Latency::table([int(2), int(2), int(2), int(1)]);
    let resources = vec![Resource::new("r1", values()), Resource::new("r2", values())];
    Game::symmetric(4, resources, vec![vec![0], vec![1]]).expect("fixture is valid")
}

/// State where player `i` plays the resource set `sets[i]`.
pub fn pairs_state(game: &Game, sets: &[&[usize]]) -> State {
    State::new(
        sets.iter()
            .enumerate()
            .map(|(i, s)| game.strategy_index(i, s).expect("strategy exists"))
            .collect(),
    )
}

/// A fixture document shipped with the crate and its minimum potential.
pub struct Bundled {
    pub name: &'static str,
    pub json: &'static str,
    pub min_potential: fn() -> Rational,
}

pub const BUNDLED: [Bundled; 4] = [
    Bundled {
        name: "two-equilibria-singleton",
        json: include_str!("../fixtures/two-equilibria-singleton.json"),
        min_potential: || int(2),
    },
    Bundled {
        name: "two-equilibria-pairs",
        json: include_str!("../fixtures/two-equilibria-pairs.json"),
        min_potential: || int(7),
    },
    Bundled {
        name: "non-increasing-pair",
        json: include_str!("../fixtures/non-increasing-pair.json"),
        min_potential: || int(7),
    },
    Bundled {
        name: "greedy-tight-3",
        json: include_str!("../fixtures/greedy-tight-3.json"),
        min_potential: || ratio(101, 100),
    },
];

//! Independent reference implementations for the integration tests. Nothing
//! here calls into the solvers: potentials are recomputed from the
//! definition and every search is plain enumeration.

#![allow(dead_code)]

use std::collections::BTreeSet;

use congestion_core::generators::{random_game, GameTemplate};
use congestion_core::{Game, Monotonicity, Rational, State};
use num_traits::Zero;
use proptest::prelude::*;

/// Every state in lexicographic order.
pub fn all_states(game: &Game) -> Vec<State> {
    let sizes: Vec<usize> = (0..game.players()).map(|i| game.strategies(i).len()).collect();
    let mut out = Vec::new();
    let mut cur = vec![0; sizes.len()];
    loop {
        out.push(State::new(cur.clone()));
        let mut i = sizes.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < sizes[i] {
                break;
            }
            cur[i] = 0;
        }
    }
}

fn loads(game: &Game, state: &State) -> Vec<usize> {
    let mut n = vec![0; game.resource_count()];
    for (i, &s) in state.choices().iter().enumerate() {
        for &r in game.strategy(i, s) {
            n[r] += 1;
        }
    }
    n
}

fn ell(game: &Game, r: usize, h: usize) -> Rational {
    game.resources()[r].latency.eval(h).expect("load within table")
}

/// `Σ_r Σ_{j ≤ n_r} ℓ_r(j)`, straight from the definition.
pub fn naive_potential(game: &Game, state: &State) -> Rational {
    loads(game, state)
        .iter()
        .enumerate()
        .map(|(r, &n)| (1..=n).map(|j| ell(game, r, j)).sum::<Rational>())
        .sum()
}

pub fn naive_cost(game: &Game, state: &State, player: usize) -> Rational {
    let n = loads(game, state);
    game.strategy(player, state.choice(player))
        .iter()
        .map(|&r| ell(game, r, n[r]))
        .sum()
}

pub fn naive_social_cost(game: &Game, state: &State) -> Rational {
    (0..game.players()).map(|i| naive_cost(game, state, i)).sum()
}

/// Potential obtained by inserting players one at a time and summing the
/// latency each one meets on arrival.
pub fn insertion_potential(game: &Game, state: &State) -> Rational {
    let mut n = vec![0; game.resource_count()];
    let mut total = Rational::zero();
    for (i, &s) in state.choices().iter().enumerate() {
        for &r in game.strategy(i, s) {
            n[r] += 1;
            total += ell(game, r, n[r]);
        }
    }
    total
}

pub fn naive_is_nash(game: &Game, state: &State) -> bool {
    (0..game.players()).all(|i| {
        let c = naive_cost(game, state, i);
        (0..game.strategies(i).len()).all(|t| naive_cost(game, &state.deviate(i, t), i) >= c)
    })
}

pub fn naive_min_potential(game: &Game) -> Rational {
    all_states(game)
        .iter()
        .map(|s| naive_potential(game, s))
        .min()
        .expect("at least one state")
}

/// Smallest total weight of sets covering `0..elements`.
pub fn min_set_cover(elements: usize, sets: &[Vec<usize>], weights: &[Rational]) -> Option<Rational> {
    let full: BTreeSet<usize> = (0..elements).collect();
    (0u32..1 << sets.len())
        .filter(|mask| {
            let covered: BTreeSet<usize> = (0..sets.len())
                .filter(|c| mask >> c & 1 == 1)
                .flat_map(|c| sets[c].iter().copied())
                .collect();
            covered == full
        })
        .map(|mask| {
            (0..sets.len())
                .filter(|c| mask >> c & 1 == 1)
                .map(|c| weights[c].clone())
                .sum::<Rational>()
        })
        .min()
}

pub fn min_vertex_cover(vertices: usize, edges: &[(usize, usize)]) -> usize {
    (0u32..1 << vertices)
        .filter(|mask| edges.iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1))
        .map(|mask| mask.count_ones() as usize)
        .min()
        .expect("the full vertex set is a cover")
}

/// Whether some `q` triples are pairwise disjoint in every coordinate.
pub fn has_perfect_3dm(q: usize, triples: &[(usize, usize, usize)]) -> bool {
    fn go(x: usize, q: usize, triples: &[(usize, usize, usize)], ys: &mut Vec<bool>, zs: &mut Vec<bool>) -> bool {
        if x == q {
            return true;
        }
        for &(a, y, z) in triples {
            if a == x && !ys[y] && !zs[z] {
                ys[y] = true;
                zs[z] = true;
                let ok = go(x + 1, q, triples, ys, zs);
                ys[y] = false;
                zs[z] = false;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    go(0, q, triples, &mut vec![false; q], &mut vec![false; q])
}

/// Whether some subfamily partitions `0..3q`.
pub fn has_exact_cover(q: usize, sets: &[[usize; 3]]) -> bool {
    (0u32..1 << sets.len()).any(|mask| {
        let chosen: Vec<&[usize; 3]> = (0..sets.len())
            .filter(|c| mask >> c & 1 == 1)
            .map(|c| &sets[c])
            .collect();
        let elems: BTreeSet<usize> = chosen.iter().flat_map(|s| s.iter().copied()).collect();
        chosen.len() == q && elems.len() == 3 * q
    })
}

pub fn template(symmetric: bool, size: usize, monotonicity: Monotonicity) -> GameTemplate {
    GameTemplate {
        symmetric,
        size,
        monotonicity,
    }
}

/// Random games of one class with `1 ≤ n ≤ max_n` players and
/// `size ≤ m ≤ max_m` resources.
pub fn games(t: GameTemplate, max_n: usize, max_m: usize) -> impl Strategy<Value = Game> {
    let min_n = if t.symmetric && t.monotonicity != Monotonicity::Mixed {
        1
    } else {
        2
    };
    let min_m = t
        .size
        .max(if t.monotonicity == Monotonicity::Mixed { 2 } else { 1 })
        .max(if t.symmetric { 1 } else { 2 });
    (min_n..=max_n, min_m..=max_m, any::<u64>())
        .prop_map(move |(n, m, seed)| random_game(t, n, m, seed).expect("feasible template"))
}

/// Any random game: every class, mixed sizes.
pub fn any_game(max_n: usize, max_m: usize) -> impl Strategy<Value = Game> {
    let monotonicity = prop_oneof![
        Just(Monotonicity::NonDecreasing),
        Just(Monotonicity::NonIncreasing),
        Just(Monotonicity::Constant),
        Just(Monotonicity::Mixed),
    ];
    (any::<bool>(), 1usize..=3, monotonicity)
        .prop_flat_map(move |(symmetric, size, mono)| games(template(symmetric, size, mono), max_n, max_m.max(size)))
}

/// A game together with one of its states.
pub fn game_and_state(max_n: usize, max_m: usize) -> impl Strategy<Value = (Game, State)> {
    any_game(max_n, max_m).prop_flat_map(|g| {
        let choices: Vec<_> = (0..g.players()).map(|i| 0..g.strategies(i).len()).collect();
        (Just(g), choices).prop_map(|(g, c)| (g, State::new(c)))
    })
}

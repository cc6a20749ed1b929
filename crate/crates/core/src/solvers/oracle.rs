//! Exhaustive search over the state space.

use std::ops::{AddAssign, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use super::{Algorithm, Optimality, SolveResult};
use crate::dynamics::is_pure_nash;
use crate::error::{Error, Result};
use crate::game::{Game, State};
use crate::rational::Rational;

pub const DEFAULT_BUDGET: u128 = 10_000_000;

fn check_budget(game: &Game, budget: u128) -> Result<()> {
    let states = game.state_count();
    if states > budget {
        return Err(Error::BudgetExceeded { states, budget });
    }
    Ok(())
}

/// Global minimizer of the potential with the default budget.
pub fn solve_brute_force(game: &Game) -> Result<SolveResult> {
    solve_brute_force_with_budget(game, DEFAULT_BUDGET)
}

/// Global minimizer of the potential by enumerating all `Π_i |S_i|`
/// states. Among minimizers the lexicographically smallest choice vector
/// wins. The first player's choices are searched in parallel.
pub fn solve_brute_force_with_budget(game: &Game, budget: u128) -> Result<SolveResult> {
    check_budget(game, budget)?;
    let n = game.players();
    let lat: Vec<Vec<Rational>> = (0..game.resource_count())
        .map(|r| (0..=n).map(|k| game.latency(r, k)).collect())
        .collect::<Result<_>>()?;
    let choices = match scaled(&lat) {
        Some(ints) => minimize(game, &ints),
        None => minimize(game, &lat),
    };
    let state = State::new(choices);
    let potential = game.potential(&state)?;
    Ok(SolveResult {
        state,
        potential,
        algorithm: Algorithm::BruteForce,
        optimality: Optimality::ProvenOptimal,
    })
}

/// Latency table over a common denominator, when every partial sum of the
/// potential is guaranteed to fit in `i128`.
fn scaled(lat: &[Vec<Rational>]) -> Option<Vec<Vec<i128>>> {
    let mut den = BigInt::one();
    for v in lat.iter().flatten() {
        den = den.lcm(v.denom());
    }
    let mut out = Vec::with_capacity(lat.len());
    for row in lat {
        let mut ints = Vec::with_capacity(row.len());
        for v in row {
            let x = (v.numer() * (&den / v.denom())).to_i64()?;
            // at most n·m terms are ever summed; 2^63 · 2^40 stays in range
            ints.push(x as i128);
        }
        out.push(ints);
    }
    let terms = lat.len() * lat.first().map_or(0, Vec::len);
    (terms < 1 << 40).then_some(out)
}

trait Value: Clone + Ord + Zero + Send + Sync + for<'a> AddAssign<&'a Self> + for<'a> SubAssign<&'a Self> {}
impl<T> Value for T where T: Clone + Ord + Zero + Send + Sync + for<'a> AddAssign<&'a T> + for<'a> SubAssign<&'a T> {}

fn minimize<T: Value>(game: &Game, lat: &[Vec<T>]) -> Vec<usize> {
    let best = (0..game.strategies(0).len())
        .into_par_iter()
        .map(|first| search_partition(game, lat, first))
        .collect::<Vec<_>>();
    let mut winner: Option<(T, Vec<usize>)> = None;
    for (value, choices) in best {
        if winner.as_ref().is_none_or(|(v, _)| value < *v) {
            winner = Some((value, choices));
        }
    }
    winner.expect("player 0 has a strategy").1
}

/// Best state with player 0 fixed to `first`, walking the remaining players
/// as an odometer (last player fastest) with incremental potential updates.
fn search_partition<T: Value>(game: &Game, lat: &[Vec<T>], first: usize) -> (T, Vec<usize>) {
    let n = game.players();
    let mut choices = vec![0usize; n];
    choices[0] = first;
    let mut loads = vec![0usize; game.resource_count()];
    let mut phi = T::zero();
    for (i, &k) in choices.iter().enumerate() {
        for &r in game.strategy(i, k) {
            loads[r] += 1;
            phi += &lat[r][loads[r]];
        }
    }
    let mut best = (phi.clone(), choices.clone());
    loop {
        let mut i = n;
        loop {
            if i <= 1 {
                return best;
            }
            i -= 1;
            let next = choices[i] + 1;
            let wraps = next == game.strategies(i).len();
            let to = if wraps { 0 } else { next };
            for &r in game.strategy(i, choices[i]) {
                phi -= &lat[r][loads[r]];
                loads[r] -= 1;
            }
            for &r in game.strategy(i, to) {
                loads[r] += 1;
                phi += &lat[r][loads[r]];
            }
            choices[i] = to;
            if !wraps {
                break;
            }
        }
        if phi < best.0 {
            best = (phi.clone(), choices.clone());
        }
    }
}

/// Every pure Nash equilibrium, in lexicographic order of choice vectors.
pub fn pure_nash_equilibria(game: &Game, budget: u128) -> Result<Vec<State>> {
    check_budget(game, budget)?;
    let mut out = Vec::new();
    for_each_state(game, |s| {
        if is_pure_nash(game, s)? {
            out.push(s.clone());
        }
        Ok(())
    })?;
    Ok(out)
}

/// Calls `f` on every state in lexicographic order.
pub fn for_each_state(game: &Game, mut f: impl FnMut(&State) -> Result<()>) -> Result<()> {
    let n = game.players();
    let mut choices = vec![0usize; n];
    loop {
        f(&State::new(choices.clone()))?;
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            choices[i] += 1;
            if choices[i] < game.strategies(i).len() {
                break;
            }
            choices[i] = 0;
        }
    }
}

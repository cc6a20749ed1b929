//! Best responses, improving-move dynamics and pure Nash equilibria.
//!
//! Tie-breaking is deterministic everywhere: the lowest strategy index wins
//! among equally good deviations, and players are scanned in index order.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{Game, State};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Policy {
    /// The first player (by index) with an improving move jumps to its best
    /// response.
    BestResponse,
    /// The first player (by index) takes its first improving strategy (by
    /// index).
    FirstImproving,
}

impl std::str::FromStr for Policy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "best-response" => Ok(Policy::BestResponse),
            "first-improving" => Ok(Policy::FirstImproving),
            other => Err(Error::Domain(format!("unknown policy {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Move {
    pub player: usize,
    pub from: usize,
    pub to: usize,
    #[serde(with = "crate::io::rational_string")]
    pub potential_before: Rational,
    #[serde(with = "crate::io::rational_string")]
    pub potential_after: Rational,
}

/// Improving moves in the order they were played. The potential strictly
/// decreases at every step.
pub type MoveTrace = Vec<Move>;

#[derive(Clone, Debug)]
pub struct DynamicsOutcome {
    pub state: State,
    pub trace: MoveTrace,
    /// `false` when `max_moves` ran out before reaching an equilibrium.
    pub converged: bool,
}

/// `10 · n · Σ_i |S_i|`.
pub fn default_max_moves(game: &Game) -> usize {
    10 * game.players() * game.total_strategies()
}

/// Cost to `player` of each of its strategies, others fixed.
fn deviation_costs(game: &Game, state: &State, player: usize) -> Result<Vec<Rational>> {
    let mut loads = game.congestion(state)?;
    for &r in game.strategy(player, state.choice(player)) {
        loads[r] -= 1;
    }
    game.strategies(player)
        .iter()
        .map(|t| {
            t.iter().try_fold(Rational::from_integer(0.into()), |acc, &r| {
                Ok(acc + game.latency(r, loads[r] + 1)?)
            })
        })
        .collect()
}

fn check_player(game: &Game, player: usize) -> Result<()> {
    if player >= game.players() {
        return Err(Error::InvalidPlayer {
            player,
            players: game.players(),
        });
    }
    Ok(())
}

/// Index of a cost-minimizing strategy for `player` against `state`.
pub fn best_response(game: &Game, state: &State, player: usize) -> Result<usize> {
    check_player(game, player)?;
    let costs = deviation_costs(game, state, player)?;
    Ok(argmin(&costs))
}

fn argmin(costs: &[Rational]) -> usize {
    let mut best = 0;
    for (k, c) in costs.iter().enumerate().skip(1) {
        if *c < costs[best] {
            best = k;
        }
    }
    best
}

/// The move `player` would make under `policy`, if it has an improving one.
pub fn improving_move(game: &Game, state: &State, player: usize, policy: Policy) -> Result<Option<usize>> {
    check_player(game, player)?;
    let costs = deviation_costs(game, state, player)?;
    let current = &costs[state.choice(player)];
    let pick = match policy {
        Policy::BestResponse => Some(argmin(&costs)).filter(|&k| costs[k] < *current),
        Policy::FirstImproving => costs.iter().position(|c| c < current),
    };
    Ok(pick)
}

pub fn is_pure_nash(game: &Game, state: &State) -> Result<bool> {
    game.check_state(state)?;
    for i in 0..game.players() {
        if improving_move(game, state, i, Policy::FirstImproving)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Plays improving moves from `start` until no player can improve or
/// `max_moves` moves have been made.
pub fn run_improving_dynamics(game: &Game, start: &State, policy: Policy, max_moves: usize) -> Result<DynamicsOutcome> {
    game.check_state(start)?;
    let mut state = start.clone();
    let mut potential = game.potential(&state)?;
    let mut trace = Vec::new();
    loop {
        let mut mover = None;
        for i in 0..game.players() {
            if let Some(to) = improving_move(game, &state, i, policy)? {
                mover = Some((i, to));
                break;
            }
        }
        let Some((player, to)) = mover else {
            return Ok(DynamicsOutcome {
                state,
                trace,
                converged: true,
            });
        };
        if trace.len() >= max_moves {
            return Ok(DynamicsOutcome {
                state,
                trace,
                converged: false,
            });
        }
        let next = state.deviate(player, to);
        let after = game.potential(&next)?;
        debug_assert!(after < potential);
        trace.push(Move {
            player,
            from: state.choice(player),
            to,
            potential_before: potential,
            potential_after: after.clone(),
        });
        state = next;
        potential = after;
    }
}

/// Inserts players `0..n` one at a time, each taking the resource with the
/// lowest latency at its next load (ties to the lowest resource index).
///
/// Requires a symmetric singleton game with non-decreasing latencies; the
/// result is then an equilibrium of minimum potential.
pub fn greedy_sequential_insertion(game: &Game) -> Result<State> {
    const NAME: &str = "greedy sequential insertion";
    let class = game.classify();
    if class.size != 1 {
        return Err(Error::class_mismatch(NAME, format!("size is {}, not 1", class.size)));
    }
    if !class.symmetric {
        return Err(Error::class_mismatch(NAME, "game is not symmetric"));
    }
    if !class.monotonicity.is_non_decreasing() {
        return Err(Error::class_mismatch(
            NAME,
            format!("latencies are {}, not non-decreasing", class.monotonicity),
        ));
    }
    let mut candidates: Vec<usize> = game.strategies(0).iter().map(|s| s[0]).collect();
    candidates.sort_unstable();
    let mut loads = vec![0usize; game.resource_count()];
    let mut choices = Vec::with_capacity(game.players());
    for player in 0..game.players() {
        let mut best: Option<(usize, Rational)> = None;
        for &r in &candidates {
            let cost = game.latency(r, loads[r] + 1)?;
            if best.as_ref().is_none_or(|(_, c)| cost < *c) {
                best = Some((r, cost));
            }
        }
        let (r, _) = best.expect("strategy sets are non-empty");
        loads[r] += 1;
        choices.push(game.strategy_index(player, &[r]).expect("symmetric game"));
    }
    Ok(State::new(choices))
}

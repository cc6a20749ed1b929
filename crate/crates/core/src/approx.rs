//! Approximations: the cost-effectiveness greedy for non-increasing
//! singleton games and the averaging transform that turns potential into
//! social cost.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::game::{Game, Latency, State};
use crate::rational::Rational;
use crate::solvers::{Algorithm, Optimality, SolveResult};

/// Set-cover style greedy for singleton games with non-increasing
/// latencies. Repeatedly picks the resource minimizing
/// `α_r = (Σ_{t≤ν_r} ℓ_r(t)) / ν_r`, where `ν_r` counts the unassigned
/// players able to use `r`, and sends all of them there (ties to the lowest
/// resource index). The result is within a factor `H_n` of optimal.
pub fn greedy_nonincreasing_singleton(game: &Game) -> Result<SolveResult> {
    const NAME: &str = "greedy cover";
    let class = game.classify();
    if class.size != 1 {
        return Err(Error::class_mismatch(NAME, format!("size is {}, not 1", class.size)));
    }
    if !class.monotonicity.is_non_increasing() {
        return Err(Error::class_mismatch(
            NAME,
            format!("latencies are {}, not non-increasing", class.monotonicity),
        ));
    }
    let n = game.players();
    let m = game.resource_count();
    let users: Vec<Vec<usize>> = (0..m)
        .map(|r| (0..n).filter(|&i| game.strategy_index(i, &[r]).is_some()).collect())
        .collect();
    let mut assigned: Vec<Option<usize>> = vec![None; n];
    let mut open = vec![true; m];
    let mut remaining = n;
    while remaining > 0 {
        let mut best: Option<(usize, Rational)> = None;
        for r in (0..m).filter(|&r| open[r]) {
            let nu = users[r].iter().filter(|&&i| assigned[i].is_none()).count();
            if nu == 0 {
                continue;
            }
            let total = game.resources()[r]
                .latency
                .cumulative(nu)
                .ok_or(Error::LatencyOutOfRange {
                    resource: r,
                    load: nu,
                    len: game.resources()[r].latency.table_len().unwrap_or(0),
                })?;
            let alpha = total / Rational::from_integer(BigInt::from(nu));
            if best.as_ref().is_none_or(|(_, a)| alpha < *a) {
                best = Some((r, alpha));
            }
        }
        let (r, _) = best.ok_or_else(|| Error::Infeasible("an unassigned player has no resource".into()))?;
        for &i in &users[r] {
            if assigned[i].is_none() {
                assigned[i] = Some(r);
                remaining -= 1;
            }
        }
        open[r] = false;
    }
    let choices = assigned
        .into_iter()
        .enumerate()
        .map(|(i, r)| {
            game.strategy_index(i, &[r.expect("all assigned")])
                .expect("r is usable by i")
        })
        .collect();
    let state = State::new(choices);
    let potential = game.potential(&state)?;
    Ok(SolveResult {
        state,
        potential,
        algorithm: Algorithm::GreedyCover,
        optimality: Optimality::Heuristic,
    })
}

/// The game `G̃` whose latencies are running averages,
/// `ℓ̃(x) = (Σ_{h≤x} ℓ(h)) / x` for `x = 1..=n`, as tables. Players and
/// strategies are unchanged, and `Φ_G(s) = SC_G̃(s)` for every state.
pub fn tilde_transform(game: &Game) -> Result<Game> {
    let n = game.players();
    let latencies = (0..game.resource_count())
        .map(|r| {
            let mut acc = Rational::from_integer(0.into());
            let mut values = Vec::with_capacity(n);
            for x in 1..=n {
                acc += game.latency(r, x)?;
                values.push(&acc / Rational::from_integer(BigInt::from(x)));
            }
            Ok(Latency::Table(values))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(game.with_latencies(latencies))
}

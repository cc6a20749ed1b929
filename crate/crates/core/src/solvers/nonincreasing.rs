use super::{require, Algorithm, Optimality, SolveResult};
use crate::error::Result;
use crate::game::{Game, State};

/// Symmetric games with non-increasing latencies: some profile where every
/// player uses the same strategy minimizes the potential, so trying each of
/// the `|S|` shared strategies suffices.
pub fn solve_symmetric_nonincreasing(game: &Game) -> Result<SolveResult> {
    const NAME: &str = "non-increasing enumeration";
    let class = game.classify();
    require(class.symmetric, NAME, || "game is not symmetric".into())?;
    require(class.monotonicity.is_non_increasing(), NAME, || {
        format!("latencies are {}, not non-increasing", class.monotonicity)
    })?;
    let n = game.players();
    let mut best: Option<SolveResult> = None;
    for s in game.strategies(0) {
        let choices = (0..n)
            .map(|i| game.strategy_index(i, s).expect("symmetric game"))
            .collect();
        let state = State::new(choices);
        let potential = game.potential(&state)?;
        if best.as_ref().is_none_or(|b| potential < b.potential) {
            best = Some(SolveResult {
                state,
                potential,
                algorithm: Algorithm::NonincreasingEnum,
                optimality: Optimality::ProvenOptimal,
            });
        }
    }
    Ok(best.expect("strategy sets are non-empty"))
}

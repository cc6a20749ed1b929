//! Singleton games with non-decreasing latencies.

use num_traits::Zero;

use super::{require, Algorithm, Optimality, SolveResult};
use crate::dynamics::greedy_sequential_insertion;
use crate::error::{Error, Result};
use crate::game::{Game, State};
use crate::matching::{min_weight_perfect_bipartite_matching, Edge, Matching};
use crate::rational::Rational;

/// Symmetric singleton, non-decreasing: sequential insertion.
pub fn solve_symmetric_singleton(game: &Game) -> Result<SolveResult> {
    const NAME: &str = "symmetric singleton solver";
    let class = game.classify();
    require(class.size == 1, NAME, || format!("size is {}, not 1", class.size))?;
    require(class.symmetric, NAME, || "game is not symmetric".into())?;
    require(class.monotonicity.is_non_decreasing(), NAME, || {
        format!("latencies are {}, not non-decreasing", class.monotonicity)
    })?;
    let state = greedy_sequential_insertion(game)?;
    let potential = game.potential(&state)?;
    Ok(SolveResult {
        state,
        potential,
        algorithm: Algorithm::GreedyInsertion,
        optimality: Optimality::ProvenOptimal,
    })
}

/// Slot `(r, μ)` of the bipartite construction, `μ` counted from 1.
fn slot(n: usize, r: usize, mu: usize) -> usize {
    r * n + (mu - 1)
}

/// The square bipartite graph for a singleton game: left side is the `n`
/// players followed by `(m−1)·n` dummies, right side the slots `(r, μ)`.
/// Player `i` reaches `(r, μ)` with weight `ℓ_r(μ)` when `{r} ∈ S_i`;
/// dummies reach every slot at weight 0.
pub fn singleton_bipartite_edges(game: &Game) -> Result<(usize, Vec<Edge>)> {
    let n = game.players();
    let m = game.resource_count();
    let mut edges = Vec::new();
    for i in 0..n {
        for s in game.strategies(i) {
            let r = s[0];
            for mu in 1..=n {
                edges.push((i, slot(n, r, mu), game.latency(r, mu)?));
            }
        }
    }
    for d in 0..(m - 1) * n {
        for t in 0..m * n {
            edges.push((n + d, t, Rational::zero()));
        }
    }
    Ok((m * n, edges))
}

/// Players' resources read off a bipartite matching.
fn resources_of_players(game: &Game, matching: &Matching) -> Vec<usize> {
    let n = game.players();
    let mut out = vec![usize::MAX; n];
    for &(l, t, _) in &matching.edges {
        if l < n {
            out[l] = t / n;
        }
    }
    out
}

/// Moves matched player slots of each resource down to `μ = 1..n_r`. With
/// non-decreasing latencies this never increases the matching weight.
pub fn canonical_slots(game: &Game, resources: &[usize]) -> Result<Vec<(usize, usize, Rational)>> {
    let n = game.players();
    let mut next = vec![1usize; game.resource_count()];
    resources
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            let mu = next[r];
            next[r] += 1;
            Ok((i, slot(n, r, mu), game.latency(r, mu)?))
        })
        .collect()
}

/// Any singleton game with non-decreasing latencies, via a minimum-weight
/// perfect matching between players (padded with dummies) and resource
/// slots.
pub fn solve_general_singleton(game: &Game) -> Result<SolveResult> {
    const NAME: &str = "singleton matching solver";
    let class = game.classify();
    require(class.size == 1, NAME, || format!("size is {}, not 1", class.size))?;
    require(class.monotonicity.is_non_decreasing(), NAME, || {
        format!("latencies are {}, not non-decreasing", class.monotonicity)
    })?;
    let n = game.players();
    let left = n * game.resource_count();
    let (right, edges) = singleton_bipartite_edges(game)?;
    let matching = min_weight_perfect_bipartite_matching(left, right, &edges)?;
    let resources = resources_of_players(game, &matching);
    let choices = resources
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            game.strategy_index(i, &[r])
                .ok_or_else(|| Error::Infeasible(format!("player {i} matched outside its strategies")))
        })
        .collect::<Result<Vec<_>>>()?;
    let state = State::new(choices);
    let potential = game.potential(&state)?;
    debug_assert!(potential <= matching.weight);
    Ok(SolveResult {
        state,
        potential,
        algorithm: Algorithm::SingletonMatching,
        optimality: Optimality::ProvenOptimal,
    })
}

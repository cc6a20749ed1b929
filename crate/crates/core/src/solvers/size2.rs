//! Symmetric games with strategies of at most two resources and
//! non-decreasing latencies, via a maximum-weight matching of fixed size.
//!
//! Each real resource `r` gets `n` vertex copies `(r, 1..=n)`, and a
//! fictitious resource `r₀` gets `n` more so singleton strategies become
//! pairs. Strategy `{j, k}` joins every copy `(j, a)` to every copy `(k, b)`
//! with weight `C − ℓ_j(a) − ℓ_k(b)`; singleton `{j}` joins `(j, a)` to the
//! `r₀` copies with weight `C − ℓ_j(a)`. With `C = 2·max_r ℓ_r(n)` every
//! state maps to a size-`n` matching of weight `n·C − Φ`, and every size-`n`
//! matching maps back to a state with `Φ ≤ n·C − w`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::{require, Algorithm, Optimality, SolveResult};
use crate::error::{Error, Result};
use crate::game::{Game, State, Strategy};
use crate::matching::{max_weight_matching_of_size, Matching, WeightedGraph};
use crate::rational::Rational;

/// The matching instance built from a symmetric size-2 game.
#[derive(Clone, Debug)]
pub struct Size2Instance {
    pub graph: WeightedGraph,
    pub c: Rational,
    players: usize,
    resources: usize,
    latency: Vec<Vec<Rational>>,
}

impl Size2Instance {
    fn fictitious(&self) -> usize {
        self.resources
    }

    /// Vertex of copy `a` (from 1) of resource `r`; `r == m` is `r₀`.
    pub fn vertex(&self, r: usize, a: usize) -> usize {
        r * self.players + (a - 1)
    }

    /// `(resource, copy)` of a vertex.
    pub fn copy_of(&self, v: usize) -> (usize, usize) {
        (v / self.players, v % self.players + 1)
    }

    fn ell(&self, r: usize, a: usize) -> Rational {
        if r == self.fictitious() {
            Rational::zero()
        } else {
            self.latency[r][a].clone()
        }
    }

    fn weight(&self, j: usize, a: usize, k: usize, b: usize) -> Rational {
        &self.c - self.ell(j, a) - self.ell(k, b)
    }

    pub fn build(game: &Game) -> Result<Self> {
        let n = game.players();
        let m = game.resource_count();
        let latency: Vec<Vec<Rational>> = (0..m)
            .map(|r| (0..=n).map(|k| game.latency(r, k)).collect())
            .collect::<Result<_>>()?;
        let top = latency
            .iter()
            .map(|row| row[n].clone())
            .max()
            .unwrap_or_else(Rational::zero);
        let c = top * Rational::from_integer(2.into());
        let pairs = padded_pairs(game.strategies(0), m);
        let mut inst = Size2Instance {
            graph: WeightedGraph::new(0, Vec::new())?,
            c,
            players: n,
            resources: m,
            latency,
        };
        let mut edges = Vec::new();
        for (j, k) in pairs {
            for a in 1..=n {
                for b in 1..=n {
                    edges.push((inst.vertex(j, a), inst.vertex(k, b), inst.weight(j, a, k, b)));
                }
            }
        }
        inst.graph = WeightedGraph::new((m + 1) * n, edges)?;
        Ok(inst)
    }

    /// The matching a state induces: the `t`-th user of resource `r` (in
    /// player order) takes copy `(r, t)`, and singleton players take
    /// distinct `r₀` copies. Its weight is `n·C − Φ(s)`.
    pub fn matching_for_state(&self, game: &Game, state: &State) -> Result<Matching> {
        game.check_state(state)?;
        let mut next = vec![1usize; self.resources + 1];
        let mut edges = Vec::new();
        for i in 0..self.players {
            let s = game.strategy(i, state.choice(i));
            let (j, k) = pad(s, self.fictitious());
            let a = next[j];
            next[j] += 1;
            let b = next[k];
            next[k] += 1;
            edges.push((self.vertex(j, a), self.vertex(k, b), self.weight(j, a, k, b)));
        }
        let weight = edges.iter().fold(Rational::zero(), |acc, e| acc + &e.2);
        Ok(Matching { edges, weight })
    }

    /// Shifts the copies used on each real resource down to `1..=n_r`,
    /// preserving which copy of which edge moves where by rank. The weight
    /// does not decrease when latencies are non-decreasing.
    pub fn repair_holes(&self, matching: &Matching) -> Matching {
        let mut used: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for &(u, v, _) in &matching.edges {
            for w in [u, v] {
                let (r, a) = self.copy_of(w);
                used.entry(r).or_default().insert(a);
            }
        }
        let rank: BTreeMap<(usize, usize), usize> = used
            .iter()
            .flat_map(|(&r, copies)| copies.iter().enumerate().map(move |(t, &a)| ((r, a), t + 1)))
            .collect();
        let edges: Vec<_> = matching
            .edges
            .iter()
            .map(|&(u, v, _)| {
                let (j, a) = self.copy_of(u);
                let (k, b) = self.copy_of(v);
                let (a, b) = (rank[&(j, a)], rank[&(k, b)]);
                (self.vertex(j, a), self.vertex(k, b), self.weight(j, a, k, b))
            })
            .collect();
        let weight = edges.iter().fold(Rational::zero(), |acc, e| acc + &e.2);
        Matching { edges, weight }
    }

    /// The state a size-`n` matching encodes: each edge is one player's
    /// strategy (dropping `r₀`), assigned to players in edge order.
    pub fn state_from_matching(&self, game: &Game, matching: &Matching) -> Result<State> {
        if matching.len() != self.players {
            return Err(Error::Infeasible(format!(
                "matching has {} edges, need one per player ({})",
                matching.len(),
                self.players
            )));
        }
        let choices = matching
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v, _))| {
                let set: Vec<usize> = [self.copy_of(u).0, self.copy_of(v).0]
                    .into_iter()
                    .filter(|&r| r != self.fictitious())
                    .collect();
                game.strategy_index(i, &set)
                    .ok_or_else(|| Error::Infeasible(format!("edge {set:?} is not a strategy")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(State::new(choices))
    }
}

fn pad(s: &[usize], fictitious: usize) -> (usize, usize) {
    match *s {
        [j] => (j, fictitious),
        [j, k] => (j, k),
        _ => unreachable!("size is at most 2"),
    }
}

/// Distinct strategies as resource pairs, singletons padded with `r₀`.
fn padded_pairs(strategies: &[Strategy], fictitious: usize) -> Vec<(usize, usize)> {
    let set: BTreeSet<(usize, usize)> = strategies.iter().map(|s| pad(s, fictitious)).collect();
    set.into_iter().collect()
}

pub fn solve_symmetric_size2(game: &Game) -> Result<SolveResult> {
    const NAME: &str = "size-2 matching solver";
    let class = game.classify();
    require(class.symmetric, NAME, || "game is not symmetric".into())?;
    require(class.size <= 2, NAME, || format!("size is {}, above 2", class.size))?;
    require(class.monotonicity.is_non_decreasing(), NAME, || {
        format!("latencies are {}, not non-decreasing", class.monotonicity)
    })?;
    let inst = Size2Instance::build(game)?;
    let matching = max_weight_matching_of_size(&inst.graph, game.players())?;
    let repaired = inst.repair_holes(&matching);
    let state = inst.state_from_matching(game, &repaired)?;
    let potential = game.potential(&state)?;
    Ok(SolveResult {
        state,
        potential,
        algorithm: Algorithm::Size2Matching,
        optimality: Optimality::ProvenOptimal,
    })
}

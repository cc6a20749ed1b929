//! Congestion games: players, resources with latency functions, strategy
//! sets, states, and the quantities derived from them (congestion, player
//! cost, Rosenthal potential, social cost, classification).

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A latency function `ℓ : ℕ → ℚ≥0` with `ℓ(0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Latency {
    /// `values[h - 1] = ℓ(h)` for `h = 1..=values.len()`.
    Table(Vec<Rational>),
    /// `coeffs[q] = α_q`, `ℓ(x) = Σ α_q x^q` for `x ≥ 1`.
    Polynomial(Vec<Rational>),
}

impl Latency {
    /// `ℓ(h) = h`.
    pub fn linear() -> Self {
        Latency::Polynomial(vec![Rational::zero(), Rational::one()])
    }

    /// `ℓ(h) = a·h`.
    pub fn scaled_linear(a: Rational) -> Self {
        Latency::Polynomial(vec![Rational::zero(), a])
    }

    pub fn table<I: IntoIterator<Item = Rational>>(values: I) -> Self {
        Latency::Table(values.into_iter().collect())
    }

    /// Value at `load` users, or `None` past the end of a table.
    /// `ℓ(0)` is `0` for every kind.
    pub fn eval(&self, load: usize) -> Option<Rational> {
        if load == 0 {
            return Some(Rational::zero());
        }
        match self {
            Latency::Table(values) => values.get(load - 1).cloned(),
            Latency::Polynomial(coeffs) => {
                let x = Rational::from_integer(BigInt::from(load));
                Some(coeffs.iter().rev().fold(Rational::zero(), |acc, a| acc * &x + a))
            }
        }
    }

    /// `Σ_{h=1}^{load} ℓ(h)`.
    pub fn cumulative(&self, load: usize) -> Option<Rational> {
        (1..=load).try_fold(Rational::zero(), |acc, h| self.eval(h).map(|v| acc + v))
    }

    pub fn table_len(&self) -> Option<usize> {
        match self {
            Latency::Table(v) => Some(v.len()),
            Latency::Polynomial(_) => None,
        }
    }

    /// Values on `1..=upto`, stopping early at the end of a table.
    pub fn values_upto(&self, upto: usize) -> Vec<Rational> {
        (1..=upto).map_while(|h| self.eval(h)).collect()
    }
}

/// Direction a latency function can be declared to follow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    NonDecreasing,
    NonIncreasing,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::NonDecreasing => "non-decreasing",
            Direction::NonIncreasing => "non-increasing",
        })
    }
}

/// Monotonicity of a whole game's latencies over loads `1..=n`.
///
/// `Constant` means every latency is constant there, which satisfies both
/// directions at once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Monotonicity {
    NonDecreasing,
    NonIncreasing,
    Constant,
    Mixed,
}

impl Monotonicity {
    pub fn is_non_decreasing(self) -> bool {
        matches!(self, Monotonicity::NonDecreasing | Monotonicity::Constant)
    }

    pub fn is_non_increasing(self) -> bool {
        matches!(self, Monotonicity::NonIncreasing | Monotonicity::Constant)
    }

    /// True when a game of this monotonicity also belongs to `wanted`.
    pub fn satisfies(self, wanted: Monotonicity) -> bool {
        match wanted {
            Monotonicity::NonDecreasing => self.is_non_decreasing(),
            Monotonicity::NonIncreasing => self.is_non_increasing(),
            Monotonicity::Constant => self == Monotonicity::Constant,
            Monotonicity::Mixed => true,
        }
    }
}

impl fmt::Display for Monotonicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Monotonicity::NonDecreasing => "non-decreasing",
            Monotonicity::NonIncreasing => "non-increasing",
            Monotonicity::Constant => "constant",
            Monotonicity::Mixed => "mixed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resource {
    pub name: String,
    pub latency: Latency,
    /// Optional declared direction, enforced by [`Game::validate`].
    pub declared: Option<Direction>,
}

impl Resource {
    pub fn new(name: impl Into<String>, latency: Latency) -> Self {
        Resource {
            name: name.into(),
            latency,
            declared: None,
        }
    }

    pub fn declared(mut self, direction: Direction) -> Self {
        self.declared = Some(direction);
        self
    }
}

/// A strategy: a set of resource indices, kept sorted.
pub type Strategy = Vec<usize>;

/// One strategy choice per player, as an index into that player's list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct State(Vec<usize>);

impl State {
    pub fn new(choices: Vec<usize>) -> Self {
        State(choices)
    }

    pub fn choices(&self) -> &[usize] {
        &self.0
    }

    pub fn choice(&self, player: usize) -> usize {
        self.0[player]
    }

    /// `[s_{-i}, t]`.
    pub fn deviate(&self, player: usize, strategy: usize) -> State {
        let mut next = self.0.clone();
        next[player] = strategy;
        State(next)
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

impl From<Vec<usize>> for State {
    fn from(v: Vec<usize>) -> Self {
        State(v)
    }
}

/// A broken invariant found by [`Game::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoPlayers,
    NoResources,
    StrategyListCount {
        expected: usize,
        found: usize,
    },
    EmptyStrategySet {
        player: usize,
    },
    EmptyStrategy {
        player: usize,
        strategy: usize,
    },
    UnknownResource {
        player: usize,
        strategy: usize,
        resource: usize,
    },
    RepeatedResource {
        player: usize,
        strategy: usize,
        resource: usize,
    },
    DuplicateStrategy {
        player: usize,
        first: usize,
        second: usize,
    },
    DuplicateResourceName {
        name: String,
    },
    NonPositiveAtOne {
        resource: usize,
    },
    NegativeValue {
        resource: usize,
        load: usize,
    },
    NegativeCoefficient {
        resource: usize,
        degree: usize,
    },
    TableTooShort {
        resource: usize,
        len: usize,
        needed: usize,
    },
    DeclaredDirection {
        resource: usize,
        direction: Direction,
        load: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            NoPlayers => write!(f, "game has no players"),
            NoResources => write!(f, "game has no resources"),
            StrategyListCount { expected, found } => {
                write!(f, "expected {expected} per-player strategy sets, found {found}")
            }
            EmptyStrategySet { player } => write!(f, "player {player}: empty strategy set"),
            EmptyStrategy { player, strategy } => {
                write!(f, "player {player}, strategy {strategy}: empty strategy")
            }
            UnknownResource {
                player,
                strategy,
                resource,
            } => write!(
                f,
                "player {player}, strategy {strategy}: unknown resource index {resource}"
            ),
            RepeatedResource {
                player,
                strategy,
                resource,
            } => write!(
                f,
                "player {player}, strategy {strategy}: resource {resource} listed twice"
            ),
            DuplicateStrategy { player, first, second } => {
                write!(f, "player {player}: strategies {first} and {second} are the same set")
            }
            DuplicateResourceName { name } => write!(f, "resource name {name:?} used twice"),
            NonPositiveAtOne { resource } => {
                write!(f, "resource {resource}: ℓ(1) must be positive")
            }
            NegativeValue { resource, load } => {
                write!(f, "resource {resource}: ℓ({load}) is negative")
            }
            NegativeCoefficient { resource, degree } => write!(
                f,
                "resource {resource}: polynomial coefficient of degree {degree} is negative"
            ),
            TableTooShort { resource, len, needed } => write!(
                f,
                "resource {resource}: table has {len} values, needs {needed} (one per possible user)"
            ),
            DeclaredDirection {
                resource,
                direction,
                load,
            } => write!(
                f,
                "resource {resource}: declared {direction} but ℓ({load}) → ℓ({}) breaks it",
                load + 1
            ),
        }
    }
}

/// Classification driving solver dispatch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameClass {
    pub symmetric: bool,
    pub size: usize,
    pub monotonicity: Monotonicity,
    pub identical_latencies: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Game {
    players: usize,
    resources: Vec<Resource>,
    strategies: Vec<Vec<Strategy>>,
    shared: bool,
}

impl Game {
    /// Builds and validates a game with per-player strategy sets.
    pub fn new(players: usize, resources: Vec<Resource>, strategies: Vec<Vec<Strategy>>) -> Result<Self> {
        let game = Self::from_parts(players, resources, strategies, false);
        game.validate().map_err(Error::Validation)?;
        Ok(game)
    }

    /// Builds and validates a symmetric game: every player gets `shared`.
    pub fn symmetric(players: usize, resources: Vec<Resource>, shared: Vec<Strategy>) -> Result<Self> {
        let game = Self::from_parts(players, resources, vec![shared; players], true);
        game.validate().map_err(Error::Validation)?;
        Ok(game)
    }

    /// Assembles a game without validating it. Strategies are sorted.
    pub fn from_parts(
        players: usize,
        resources: Vec<Resource>,
        mut strategies: Vec<Vec<Strategy>>,
        shared: bool,
    ) -> Self {
        for set in &mut strategies {
            for s in set.iter_mut() {
                s.sort_unstable();
            }
        }
        Game {
            players,
            resources,
            strategies,
            shared,
        }
    }

    pub fn players(&self) -> usize {
        self.players
    }

    pub fn resources(&self) -> &[Resource] {
        &self.resources
    }

    pub fn resource_count(&self) -> usize {
        self.resources.len()
    }

    pub fn strategies(&self, player: usize) -> &[Strategy] {
        &self.strategies[player]
    }

    pub fn strategy(&self, player: usize, index: usize) -> &Strategy {
        &self.strategies[player][index]
    }

    /// Whether the strategy space was given once for all players.
    pub fn is_declared_symmetric(&self) -> bool {
        self.shared
    }

    pub fn total_strategies(&self) -> usize {
        self.strategies.iter().map(Vec::len).sum()
    }

    /// `Π_i |S_i|`, saturating.
    pub fn state_count(&self) -> u128 {
        self.strategies
            .iter()
            .fold(1u128, |acc, s| acc.saturating_mul(s.len() as u128))
    }

    /// Index of `strategy` (a resource set in any order) in player's list.
    pub fn strategy_index(&self, player: usize, strategy: &[usize]) -> Option<usize> {
        let mut key = strategy.to_vec();
        key.sort_unstable();
        self.strategies[player].iter().position(|s| *s == key)
    }

    pub fn latency(&self, resource: usize, load: usize) -> Result<Rational> {
        let f = &self.resources[resource].latency;
        f.eval(load).ok_or(Error::LatencyOutOfRange {
            resource,
            load,
            len: f.table_len().unwrap_or(0),
        })
    }

    /// `prefix[r][k] = Σ_{h=1}^{k} ℓ_r(h)` for `k = 0..=n`.
    pub fn prefix_potentials(&self) -> Result<Vec<Vec<Rational>>> {
        (0..self.resources.len())
            .map(|r| {
                let mut acc = Rational::zero();
                let mut row = Vec::with_capacity(self.players + 1);
                row.push(acc.clone());
                for h in 1..=self.players {
                    acc += self.latency(r, h)?;
                    row.push(acc.clone());
                }
                Ok(row)
            })
            .collect()
    }

    pub fn check_state(&self, state: &State) -> Result<()> {
        if state.0.len() != self.players {
            return Err(Error::InvalidState(format!(
                "state has {} choices, game has {} players",
                state.0.len(),
                self.players
            )));
        }
        for (i, &k) in state.0.iter().enumerate() {
            if k >= self.strategies[i].len() {
                return Err(Error::InvalidState(format!(
                    "player {i} chooses strategy {k} but has only {}",
                    self.strategies[i].len()
                )));
            }
        }
        Ok(())
    }

    /// `n_r(s)` for every resource.
    pub fn congestion(&self, state: &State) -> Result<Vec<usize>> {
        self.check_state(state)?;
        Ok(self.loads_unchecked(state))
    }

    pub(crate) fn loads_unchecked(&self, state: &State) -> Vec<usize> {
        let mut loads = vec![0; self.resources.len()];
        for (i, &k) in state.0.iter().enumerate() {
            for &r in &self.strategies[i][k] {
                loads[r] += 1;
            }
        }
        loads
    }

    /// `c_i(s) = Σ_{r∈s_i} ℓ_r(n_r(s))`.
    pub fn player_cost(&self, state: &State, player: usize) -> Result<Rational> {
        if player >= self.players {
            return Err(Error::InvalidPlayer {
                player,
                players: self.players,
            });
        }
        let loads = self.congestion(state)?;
        self.cost_under_loads(&loads, self.strategy(player, state.choice(player)))
    }

    /// Cost of using `strategy` when resource loads already include the
    /// player.
    pub(crate) fn cost_under_loads(&self, loads: &[usize], strategy: &[usize]) -> Result<Rational> {
        strategy
            .iter()
            .try_fold(Rational::zero(), |acc, &r| Ok(acc + self.latency(r, loads[r])?))
    }

    /// Rosenthal potential `Φ(s) = Σ_r Σ_{j=0}^{n_r(s)} ℓ_r(j)`.
    pub fn potential(&self, state: &State) -> Result<Rational> {
        let loads = self.congestion(state)?;
        self.potential_of_loads(&loads)
    }

    pub fn potential_of_loads(&self, loads: &[usize]) -> Result<Rational> {
        loads.iter().enumerate().try_fold(Rational::zero(), |acc, (r, &k)| {
            let f = &self.resources[r].latency;
            let v = f.cumulative(k).ok_or(Error::LatencyOutOfRange {
                resource: r,
                load: k,
                len: f.table_len().unwrap_or(0),
            })?;
            Ok(acc + v)
        })
    }

    /// `SC(s) = Σ_i c_i(s)`.
    pub fn social_cost(&self, state: &State) -> Result<Rational> {
        let loads = self.congestion(state)?;
        (0..self.players).try_fold(Rational::zero(), |acc, i| {
            Ok(acc + self.cost_under_loads(&loads, self.strategy(i, state.choice(i)))?)
        })
    }

    pub fn classify(&self) -> GameClass {
        let symmetric = self.is_symmetric();
        let size = self.strategies.iter().flatten().map(Vec::len).max().unwrap_or(0);
        let n = self.players.max(1);
        let curves: Vec<Vec<Rational>> = self.resources.iter().map(|r| r.latency.values_upto(n)).collect();
        let mut up = true;
        let mut down = true;
        for c in &curves {
            for w in c.windows(2) {
                up &= w[1] >= w[0];
                down &= w[1] <= w[0];
            }
        }
        let monotonicity = match (up, down) {
            (true, true) => Monotonicity::Constant,
            (true, false) => Monotonicity::NonDecreasing,
            (false, true) => Monotonicity::NonIncreasing,
            (false, false) => Monotonicity::Mixed,
        };
        let identical_latencies = curves.windows(2).all(|w| w[0] == w[1]);
        GameClass {
            symmetric,
            size,
            monotonicity,
            identical_latencies,
        }
    }

    /// True iff all players' strategy sets are equal as sets.
    pub fn is_symmetric(&self) -> bool {
        let Some(first) = self.strategies.first() else {
            return true;
        };
        let key: BTreeSet<&Strategy> = first.iter().collect();
        self.strategies[1..]
            .iter()
            .all(|s| s.len() == first.len() && s.iter().collect::<BTreeSet<_>>() == key)
    }

    /// Player 0's list when the game is symmetric.
    pub fn shared_strategies(&self) -> Option<&[Strategy]> {
        if self.is_symmetric() {
            self.strategies.first().map(Vec::as_slice)
        } else {
            None
        }
    }

    /// Checks every structural and latency invariant; collects all
    /// violations instead of stopping at the first.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut out = Vec::new();
        if self.players == 0 {
            out.push(Violation::NoPlayers);
        }
        if self.resources.is_empty() {
            out.push(Violation::NoResources);
        }
        if self.strategies.len() != self.players {
            out.push(Violation::StrategyListCount {
                expected: self.players,
                found: self.strategies.len(),
            });
        }
        let m = self.resources.len();
        for (player, set) in self.strategies.iter().enumerate() {
            if set.is_empty() {
                out.push(Violation::EmptyStrategySet { player });
            }
            for (strategy, s) in set.iter().enumerate() {
                if s.is_empty() {
                    out.push(Violation::EmptyStrategy { player, strategy });
                }
                for w in s.windows(2) {
                    if w[0] == w[1] {
                        out.push(Violation::RepeatedResource {
                            player,
                            strategy,
                            resource: w[0],
                        });
                    }
                }
                for &resource in s {
                    if resource >= m {
                        out.push(Violation::UnknownResource {
                            player,
                            strategy,
                            resource,
                        });
                    }
                }
                if let Some(first) = set[..strategy].iter().position(|t| t == s) {
                    out.push(Violation::DuplicateStrategy {
                        player,
                        first,
                        second: strategy,
                    });
                }
            }
        }
        let mut names = BTreeSet::new();
        for r in &self.resources {
            if !names.insert(r.name.as_str()) {
                out.push(Violation::DuplicateResourceName { name: r.name.clone() });
            }
        }
        for (idx, r) in self.resources.iter().enumerate() {
            validate_latency(idx, r, self.players, &mut out);
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    /// Same players and strategies, new latency functions.
    pub fn with_latencies(&self, latencies: Vec<Latency>) -> Game {
        assert_eq!(latencies.len(), self.resources.len());
        let resources = self
            .resources
            .iter()
            .zip(latencies)
            .map(|(r, latency)| Resource {
                name: r.name.clone(),
                latency,
                declared: None,
            })
            .collect();
        Game {
            players: self.players,
            resources,
            strategies: self.strategies.clone(),
            shared: self.shared,
        }
    }
}

fn validate_latency(resource: usize, r: &Resource, players: usize, out: &mut Vec<Violation>) {
    match &r.latency {
        Latency::Table(values) => {
            if values.len() < players.max(1) {
                out.push(Violation::TableTooShort {
                    resource,
                    len: values.len(),
                    needed: players.max(1),
                });
            }
            for (i, v) in values.iter().enumerate() {
                if v.is_negative() {
                    out.push(Violation::NegativeValue { resource, load: i + 1 });
                }
            }
        }
        Latency::Polynomial(coeffs) => {
            for (degree, a) in coeffs.iter().enumerate() {
                if a.is_negative() {
                    out.push(Violation::NegativeCoefficient { resource, degree });
                }
            }
        }
    }
    match r.latency.eval(1) {
        Some(v) if v.is_positive() => {}
        _ => out.push(Violation::NonPositiveAtOne { resource }),
    }
    if let Some(direction) = r.declared {
        let values = r.latency.values_upto(players.max(1));
        for (h, w) in values.windows(2).enumerate() {
            let ok = match direction {
                Direction::NonDecreasing => w[1] >= w[0],
                Direction::NonIncreasing => w[1] <= w[0],
            };
            if !ok {
                out.push(Violation::DeclaredDirection {
                    resource,
                    direction,
                    load: h + 1,
                });
                break;
            }
        }
    }
}

/// Renders a strategy as resource names.
pub fn strategy_names(game: &Game, strategy: &[usize]) -> Vec<String> {
    strategy.iter().map(|&r| game.resources()[r].name.clone()).collect()
}

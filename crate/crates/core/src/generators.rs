//! Instance builders: hardness reductions as game constructors, the greedy
//! tightness family, and seeded random games of a requested class.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{Game, Latency, Monotonicity, Resource, Strategy};
use crate::rational::{int, Rational};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInstance(msg.into())
}

/// Three-dimensional matching: `X = Y = Z = 0..q`, triples `(x, y, z)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeDmInstance {
    pub q: usize,
    pub triples: Vec<(usize, usize, usize)>,
}

impl ThreeDmInstance {
    /// Potential reached exactly when a perfect matching exists.
    pub fn threshold(&self) -> usize {
        2 * self.q
    }
}

/// Exact cover by 3-sets of the ground set `0..3q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct X3cInstance {
    pub q: usize,
    pub sets: Vec<[usize; 3]>,
}

impl X3cInstance {
    pub fn threshold(&self) -> usize {
        3 * self.q
    }
}

/// A simple undirected graph on `0..vertices`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexCoverInstance {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

/// Weighted set cover over the ground set `0..elements`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub elements: usize,
    pub sets: Vec<Vec<usize>>,
    pub weights: Vec<Rational>,
}

fn identity_resources(names: impl IntoIterator<Item = String>) -> Vec<Resource> {
    names.into_iter().map(|n| Resource::new(n, Latency::linear())).collect()
}

/// `ℓ(1) = w`, `ℓ(h) = 0` for `1 < h ≤ players`.
fn step(w: Rational, players: usize) -> Latency {
    Latency::table(std::iter::once(w).chain(std::iter::repeat_n(Rational::zero(), players.saturating_sub(1))))
}

/// Player `x` gets one strategy `{y, z}` per triple `(x, y, z)`; resources
/// are `Y ∪ Z` with `ℓ(h) = h`. A state of potential `2q` exists iff the
/// triples contain a perfect matching.
pub fn from_3dm(inst: &ThreeDmInstance) -> Result<Game> {
    let q = inst.q;
    if q == 0 {
        return Err(invalid("3DM needs q ≥ 1"));
    }
    let mut per_player: Vec<Vec<Strategy>> = vec![Vec::new(); q];
    let mut seen = BTreeSet::new();
    for &(x, y, z) in &inst.triples {
        if x >= q || y >= q || z >= q {
            return Err(invalid(format!("triple ({x}, {y}, {z}) outside 0..{q}")));
        }
        if !seen.insert((x, y, z)) {
            return Err(invalid(format!("triple ({x}, {y}, {z}) listed twice")));
        }
        per_player[x].push(vec![y, q + z]);
    }
    if let Some(x) = per_player.iter().position(Vec::is_empty) {
        return Err(invalid(format!("element x{x} is in no triple")));
    }
    let names = (0..q).map(|y| format!("y{y}")).chain((0..q).map(|z| format!("z{z}")));
    Game::new(q, identity_resources(names), per_player)
}

/// Symmetric game with `q` players sharing the strategy set `C` over
/// resources `X` with `ℓ(h) = h`. Potential `3q` is reachable iff `C`
/// contains an exact cover.
pub fn from_x3c(inst: &X3cInstance) -> Result<Game> {
    let q = inst.q;
    if q == 0 {
        return Err(invalid("X3C needs q ≥ 1"));
    }
    if inst.sets.is_empty() {
        return Err(invalid("X3C needs at least one set"));
    }
    let mut shared = Vec::new();
    for s in &inst.sets {
        let set: BTreeSet<usize> = s.iter().copied().collect();
        if set.len() != 3 {
            return Err(invalid(format!("set {s:?} does not have three distinct elements")));
        }
        if let Some(e) = set.iter().find(|&&e| e >= 3 * q) {
            return Err(invalid(format!("element {e} outside 0..{}", 3 * q)));
        }
        let strategy: Strategy = set.into_iter().collect();
        if shared.contains(&strategy) {
            return Err(invalid(format!("set {s:?} listed twice")));
        }
        shared.push(strategy);
    }
    Game::symmetric(q, identity_resources((0..3 * q).map(|e| format!("x{e}"))), shared)
}

/// One player per edge choosing either endpoint; every vertex resource has
/// `ℓ(1) = 1` and `ℓ(h) = 0` beyond. The minimum potential equals the
/// minimum vertex cover size.
pub fn from_vertex_cover(inst: &VertexCoverInstance) -> Result<Game> {
    let n = inst.edges.len();
    if n == 0 {
        return Err(invalid("graph has no edges"));
    }
    let mut seen = BTreeSet::new();
    for &(u, v) in &inst.edges {
        if u == v {
            return Err(invalid(format!("self-loop at {u}")));
        }
        if u >= inst.vertices || v >= inst.vertices {
            return Err(invalid(format!("edge ({u}, {v}) outside 0..{}", inst.vertices)));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(invalid(format!("edge ({u}, {v}) listed twice")));
        }
    }
    let resources = (0..inst.vertices)
        .map(|v| Resource::new(format!("v{v}"), step(int(1), n)))
        .collect();
    let strategies = inst.edges.iter().map(|&(u, v)| vec![vec![u], vec![v]]).collect();
    Game::new(n, resources, strategies)
}

/// One resource per set (`ℓ(1) = w_C`, zero beyond) and one player per
/// element, choosing among the sets that contain it. The minimum potential
/// equals the minimum weight of a cover.
pub fn from_set_cover(inst: &SetCoverInstance) -> Result<Game> {
    let n = inst.elements;
    if n == 0 {
        return Err(invalid("ground set is empty"));
    }
    if inst.weights.len() != inst.sets.len() {
        return Err(invalid(format!(
            "{} sets but {} weights",
            inst.sets.len(),
            inst.weights.len()
        )));
    }
    if let Some(w) = inst.weights.iter().find(|w| !w.is_positive()) {
        return Err(invalid(format!("set weight {w} is not positive")));
    }
    let mut strategies: Vec<Vec<Strategy>> = vec![Vec::new(); n];
    for (c, set) in inst.sets.iter().enumerate() {
        let members: BTreeSet<usize> = set.iter().copied().collect();
        for &e in &members {
            if e >= n {
                return Err(invalid(format!("set {c} contains {e}, outside 0..{n}")));
            }
            strategies[e].push(vec![c]);
        }
    }
    if let Some(e) = strategies.iter().position(Vec::is_empty) {
        return Err(invalid(format!("element {e} is not covered")));
    }
    let resources = inst
        .weights
        .iter()
        .enumerate()
        .map(|(c, w)| Resource::new(format!("C{c}"), step(w.clone(), n)))
        .collect();
    Game::new(n, resources, strategies)
}

/// `n` players; player `i` chooses `{r_0}` or `{r_i}`, with
/// `ℓ_{r_0}(1) = 1 + eps`, `ℓ_{r_i}(1) = 1/i`, and zero latency beyond one
/// user. The cost-effectiveness greedy pays `H_n`; the optimum is `1 + eps`.
pub fn greedy_tight_instance(n: usize, eps: &Rational) -> Result<Game> {
    if n == 0 {
        return Err(Error::Domain("tight family needs n ≥ 1".into()));
    }
    if !eps.is_positive() {
        return Err(Error::Domain(format!("eps must be positive, got {eps}")));
    }
    let mut resources = vec![Resource::new("r0", step(Rational::one() + eps, n))];
    for i in 1..=n {
        resources.push(Resource::new(
            format!("r{i}"),
            step(Rational::new(BigInt::one(), BigInt::from(i)), n),
        ));
    }
    let strategies = (1..=n).map(|i| vec![vec![0], vec![i]]).collect();
    Game::new(n, resources, strategies)
}

/// Class a random game must belong to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameTemplate {
    pub symmetric: bool,
    pub size: usize,
    pub monotonicity: Monotonicity,
}

/// Knobs for [`random_game_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomConfig {
    /// Upper bound on `|S_i|`.
    pub max_strategies: usize,
    /// Latency values are `a/b` with `1 ≤ a ≤ max_numerator`,
    /// `1 ≤ b ≤ max_denominator`.
    pub max_numerator: i64,
    pub max_denominator: i64,
}

impl Default for RandomConfig {
    fn default() -> Self {
        RandomConfig {
            max_strategies: 4,
            max_numerator: 12,
            max_denominator: 3,
        }
    }
}

pub fn random_game(template: GameTemplate, n: usize, m: usize, seed: u64) -> Result<Game> {
    random_game_with(template, n, m, seed, &RandomConfig::default())
}

/// Deterministic random game of the requested class.
pub fn random_game_with(template: GameTemplate, n: usize, m: usize, seed: u64, config: &RandomConfig) -> Result<Game> {
    let infeasible = |why: &str| {
        Err(Error::Domain(format!(
            "cannot generate {template:?} with n={n}, m={m}: {why}"
        )))
    };
    if n == 0 || m == 0 || template.size == 0 || config.max_strategies == 0 {
        return infeasible("n, m, size and strategy count must be positive");
    }
    if template.size > m {
        return infeasible("size exceeds the number of resources");
    }
    if !template.symmetric && n < 2 {
        return infeasible("a single player is always symmetric");
    }
    if template.monotonicity == Monotonicity::Mixed && (n < 2 || m < 2) {
        return infeasible("mixed latencies need two resources and two players");
    }
    if !template.symmetric && template.size == m && m == 1 {
        return infeasible("only one strategy exists");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let latencies: Vec<Latency> = (0..m)
        .map(|r| random_latency(&mut rng, template.monotonicity, r, n, config))
        .collect();
    let resources: Vec<Resource> = latencies
        .into_iter()
        .enumerate()
        .map(|(r, l)| Resource::new(format!("r{r}"), l))
        .collect();
    for _ in 0..64 {
        let strategies = if template.symmetric {
            vec![random_strategy_set(&mut rng, template.size, m, config.max_strategies); n]
        } else {
            (0..n)
                .map(|_| random_strategy_set(&mut rng, template.size, m, config.max_strategies))
                .collect()
        };
        let game = Game::from_parts(n, resources.clone(), strategies, template.symmetric);
        if game.is_symmetric() == template.symmetric {
            game.validate().map_err(Error::Validation)?;
            return Ok(game);
        }
    }
    infeasible("could not draw distinct strategy sets")
}

fn random_value(rng: &mut ChaCha8Rng, config: &RandomConfig) -> Rational {
    Rational::new(
        BigInt::from(rng.gen_range(1..=config.max_numerator)),
        BigInt::from(rng.gen_range(1..=config.max_denominator)),
    )
}

fn random_latency(
    rng: &mut ChaCha8Rng,
    shape: Monotonicity,
    resource: usize,
    n: usize,
    config: &RandomConfig,
) -> Latency {
    let mut values: Vec<Rational> = (0..n).map(|_| random_value(rng, config)).collect();
    match shape {
        Monotonicity::NonDecreasing => values.sort(),
        Monotonicity::NonIncreasing => {
            values.sort_by(|a, b| b.cmp(a));
            // occasional zero tails, as in the covering reductions
            if n > 1 && rng.gen_bool(0.25) {
                let from = rng.gen_range(1..n);
                values[from..].iter_mut().for_each(|v| *v = Rational::zero());
            }
        }
        Monotonicity::Constant => {
            let c = values[0].clone();
            values.iter_mut().for_each(|v| *v = c.clone());
        }
        Monotonicity::Mixed => match resource {
            0 => values = (1..=n as i64).map(int).collect(),
            1 => values = (1..=n as i64).rev().map(int).collect(),
            _ => {}
        },
    }
    Latency::Table(values)
}

fn random_strategy_set(rng: &mut ChaCha8Rng, size: usize, m: usize, max_strategies: usize) -> Vec<Strategy> {
    let count = rng.gen_range(1..=max_strategies);
    let mut set: Vec<Strategy> = Vec::new();
    let mut first: Strategy = sample(rng, m, size).into_vec();
    first.sort_unstable();
    set.push(first);
    for _ in 1..count {
        let k = rng.gen_range(1..=size);
        let mut s: Strategy = sample(rng, m, k).into_vec();
        s.sort_unstable();
        if !set.contains(&s) {
            set.push(s);
        }
    }
    set
}

//! JSON encoding of games and solver results.
//!
//! A game document looks like
//!
//! ```json
//! {
//!   "version": 1,
//!   "players": 2,
//!   "resources": [
//!     {"name": "r1", "latency": {"kind": "poly", "coeffs": ["0", "1"]}},
//!     {"name": "r2", "latency": {"kind": "table", "values": ["1/3", "2"]}, "monotone": "non-decreasing"}
//!   ],
//!   "strategies": {"symmetric": [["r1"], ["r2"], ["r1", "r2"]]}
//! }
//! ```
//!
//! `strategies` may instead be `{"per_player": [[["r1"]], [["r2"]]]}`.
//! Rationals are strings `"p/q"` or `"p"`; bare JSON integers are accepted
//! on input.

use std::collections::HashMap;
use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::game::{strategy_names, Direction, Game, GameClass, Latency, Monotonicity, Resource, State};
use crate::rational::{self, Rational};
use crate::solvers::SolveResult;

pub const FORMAT_VERSION: u32 = 1;

/// Decimal places in the rendered potential.
pub const DECIMAL_PLACES: usize = 6;

/// Serde adapter for a [`Rational`] stored as its canonical string.
pub mod rational_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::rational::{self, Rational};

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational::format(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        rational::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// A rational that reads from a string or a JSON integer and writes as a
/// string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalText(pub Rational);

impl Serialize for RationalText {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&rational::format(&self.0))
    }
}

impl<'de> Deserialize<'de> for RationalText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;

        impl<'de> Visitor<'de> for V {
            type Value = RationalText;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string such as \"1/3\" or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<RationalText, E> {
                rational::parse(v).map(RationalText).map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<RationalText, E> {
                Ok(RationalText(rational::int(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<RationalText, E> {
                Ok(RationalText(Rational::from_integer(v.into())))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<RationalText, E> {
                Err(E::custom(format!(
                    "floating-point value {v} is not allowed; write it as a string like \"p/q\""
                )))
            }
        }

        d.deserialize_any(V)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum LatencyDoc {
    #[serde(rename = "table")]
    Table { values: Vec<RationalText> },
    #[serde(rename = "poly", alias = "polynomial")]
    Poly { coeffs: Vec<RationalText> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResourceDoc {
    pub name: String,
    pub latency: LatencyDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monotone: Option<Direction>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub enum StrategiesDoc {
    #[serde(rename = "symmetric")]
    Symmetric(Vec<Vec<String>>),
    #[serde(rename = "per_player")]
    PerPlayer(Vec<Vec<Vec<String>>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameDocument {
    pub version: u32,
    pub players: usize,
    pub resources: Vec<ResourceDoc>,
    pub strategies: StrategiesDoc,
}

/// Parses JSON text into a document, reporting the line, column and field
/// path of the first problem.
pub fn parse_document(text: &str) -> Result<GameDocument> {
    let mut de = serde_json::Deserializer::from_str(text);
    let doc: GameDocument = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        let message = if path.is_empty() || path == "." {
            strip_position(&inner)
        } else {
            format!("{path}: {}", strip_position(&inner))
        };
        Error::Parse {
            line: inner.line(),
            column: inner.column(),
            message,
        }
    })?;
    de.end().map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e),
    })?;
    Ok(doc)
}

fn strip_position(e: &serde_json::Error) -> String {
    let full = e.to_string();
    match full.rfind(" at line ") {
        Some(i) => full[..i].to_string(),
        None => full,
    }
}

/// Parses and validates a game document.
pub fn parse_game(text: &str) -> Result<Game> {
    document_to_game(&parse_document(text)?)
}

pub fn document_to_game(doc: &GameDocument) -> Result<Game> {
    let field = |path: String, message: String| Error::Document { path, message };
    if doc.version != FORMAT_VERSION {
        return Err(field(
            "version".into(),
            format!("unsupported version {}, expected {FORMAT_VERSION}", doc.version),
        ));
    }
    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut resources = Vec::with_capacity(doc.resources.len());
    for (r, res) in doc.resources.iter().enumerate() {
        if let Some(first) = index.insert(res.name.as_str(), r) {
            return Err(field(
                format!("resources[{r}].name"),
                format!("name {:?} already used by resources[{first}]", res.name),
            ));
        }
        let latency = match &res.latency {
            LatencyDoc::Table { values } => Latency::Table(values.iter().map(|v| v.0.clone()).collect()),
            LatencyDoc::Poly { coeffs } => Latency::Polynomial(coeffs.iter().map(|v| v.0.clone()).collect()),
        };
        let mut resource = Resource::new(res.name.clone(), latency);
        resource.declared = res.monotone;
        resources.push(resource);
    }
    let resolve = |set: &[Vec<String>], path: &str| -> Result<Vec<Vec<usize>>> {
        set.iter()
            .enumerate()
            .map(|(s, names)| {
                names
                    .iter()
                    .enumerate()
                    .map(|(k, name)| {
                        index
                            .get(name.as_str())
                            .copied()
                            .ok_or_else(|| field(format!("{path}[{s}][{k}]"), format!("unknown resource {name:?}")))
                    })
                    .collect()
            })
            .collect()
    };
    match &doc.strategies {
        StrategiesDoc::Symmetric(set) => {
            let shared = resolve(set, "strategies.symmetric")?;
            Game::symmetric(doc.players, resources, shared)
        }
        StrategiesDoc::PerPlayer(sets) => {
            if sets.len() != doc.players {
                return Err(field(
                    "strategies.per_player".into(),
                    format!("{} strategy sets for {} players", sets.len(), doc.players),
                ));
            }
            let strategies = sets
                .iter()
                .enumerate()
                .map(|(i, set)| resolve(set, &format!("strategies.per_player[{i}]")))
                .collect::<Result<_>>()?;
            Game::new(doc.players, resources, strategies)
        }
    }
}

pub fn game_to_document(game: &Game) -> GameDocument {
    let resources = game
        .resources()
        .iter()
        .map(|r| ResourceDoc {
            name: r.name.clone(),
            latency: match &r.latency {
                Latency::Table(v) => LatencyDoc::Table {
                    values: v.iter().cloned().map(RationalText).collect(),
                },
                Latency::Polynomial(c) => LatencyDoc::Poly {
                    coeffs: c.iter().cloned().map(RationalText).collect(),
                },
            },
            monotone: r.declared,
        })
        .collect();
    let names = |player: usize| -> Vec<Vec<String>> {
        game.strategies(player)
            .iter()
            .map(|s| strategy_names(game, s))
            .collect()
    };
    let strategies = if game.is_declared_symmetric() {
        StrategiesDoc::Symmetric(names(0))
    } else {
        StrategiesDoc::PerPlayer((0..game.players()).map(names).collect())
    };
    GameDocument {
        version: FORMAT_VERSION,
        players: game.players(),
        resources,
        strategies,
    }
}

/// Pretty-printed JSON document for `game`, newline-terminated.
pub fn serialize_game(game: &Game) -> String {
    to_json(&game_to_document(game))
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("in-memory serialization cannot fail");
    s.push('\n');
    s
}

/// Where a class sits among the known complexity results.
pub fn complexity_cell(class: &GameClass) -> String {
    let symmetry = if class.symmetric { "symmetric" } else { "general" };
    let size = match class.size {
        1 => "size 1".to_string(),
        2 => "size 2".to_string(),
        _ => "size ≥ 3".to_string(),
    };
    let verdict = match class.monotonicity {
        m if m.is_non_decreasing() => match (class.symmetric, class.size) {
            (_, 1) | (true, 2) => "polynomial",
            _ => "NP-hard",
        },
        m if m.is_non_increasing() => match (class.symmetric, class.size) {
            (true, _) => "polynomial",
            (false, 1) if class.identical_latencies => "NP-hard",
            (false, 1) => "NP-hard, tight H_n-approximation",
            _ => "NP-hard",
        },
        _ => "no structural result; oracle or heuristic",
    };
    let monotonicity = match class.monotonicity {
        Monotonicity::Constant => "constant (non-decreasing)".to_string(),
        m => m.to_string(),
    };
    format!("{monotonicity} / {symmetry} / {size}: {verdict}")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub symmetric: bool,
    pub size: usize,
    pub monotonicity: Monotonicity,
    pub identical_latencies: bool,
    pub cell: String,
}

impl ClassReport {
    pub fn of(game: &Game) -> Self {
        let c = game.classify();
        ClassReport {
            cell: complexity_cell(&c),
            symmetric: c.symmetric,
            size: c.size,
            monotonicity: c.monotonicity,
            identical_latencies: c.identical_latencies,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StateReport {
    /// Strategy index per player.
    pub choices: Vec<usize>,
    /// Resource names per player.
    pub strategies: Vec<Vec<String>>,
}

impl StateReport {
    pub fn of(game: &Game, state: &State) -> Self {
        StateReport {
            choices: state.choices().to_vec(),
            strategies: state
                .choices()
                .iter()
                .enumerate()
                .map(|(i, &s)| strategy_names(game, game.strategy(i, s)))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub algorithm: String,
    pub optimality: String,
    pub class: ClassReport,
    pub potential: String,
    pub potential_decimal: String,
    pub state: StateReport,
}

impl SolveReport {
    pub fn new(game: &Game, result: &SolveResult) -> Self {
        SolveReport {
            algorithm: result.algorithm.label().to_string(),
            optimality: result.optimality.to_string(),
            class: ClassReport::of(game),
            potential: rational::format(&result.potential),
            potential_decimal: rational::to_decimal(&result.potential, DECIMAL_PLACES),
            state: StateReport::of(game, &result.state),
        }
    }
}

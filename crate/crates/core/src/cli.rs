//! The `congestion` command-line interface.
//!
//! Results go to standard output as JSON and diagnostics go to standard
//! error. Exit codes: 0 on success, 1 when the instance is infeasible, out of
//! a solver's class or over budget, 2 on input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::approx::{greedy_nonincreasing_singleton, tilde_transform};
use crate::combinatorics::{lambda_bell_table, lambda_d, lambda_d_y, verify_dobinski_variant};
use crate::dynamics::{default_max_moves, is_pure_nash, run_improving_dynamics, Move, Policy};
use crate::error::{Error, Result};
use crate::game::{Game, Monotonicity, State};
use crate::generators::{
    from_3dm, from_set_cover, from_vertex_cover, from_x3c, greedy_tight_instance, random_game, GameTemplate,
    SetCoverInstance, ThreeDmInstance, VertexCoverInstance, X3cInstance,
};
use crate::io::{
    parse_game, serialize_game, to_json, ClassReport, RationalText, SolveReport, StateReport, DECIMAL_PLACES,
};
use crate::rational::{self, Rational};
use crate::solvers::{pure_nash_equilibria, run_algorithm, solve_with_budget, Algorithm, DEFAULT_BUDGET};

#[derive(Debug, Parser)]
#[command(name = "congestion", version, about = "Minimum-potential states of congestion games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimum-potential state, by class dispatch or a named algorithm.
    Solve(SolveArgs),
    /// Exhaustive minimum, optionally listing every pure equilibrium.
    Oracle(OracleArgs),
    /// Greedy approximation for non-increasing singleton games.
    Approx(ApproxArgs),
    /// Improving-move dynamics from a start state.
    Dynamics(DynamicsArgs),
    /// Build a game from a reduction, the greedy tight family, or at random.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Stirling, Bell and approximation-factor arithmetic.
    #[command(subcommand)]
    Combi(CombiCommand),
    /// Validate a game document and report its class.
    Check(InputArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Game document (JSON).
    #[arg(long)]
    input: PathBuf,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    /// `auto`, `oracle`, or an algorithm label.
    #[arg(long, default_value = "auto")]
    algorithm: String,
    /// Largest state space the oracle will enumerate.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Also list every pure Nash equilibrium.
    #[arg(long)]
    equilibria: bool,
}

#[derive(Debug, Args)]
struct ApproxArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Print the running-average transformed game instead of solving.
    #[arg(long)]
    tilde: bool,
}

#[derive(Debug, Args)]
struct DynamicsArgs {
    #[command(flatten)]
    input: InputArgs,
    /// `best-response` or `first-improving`.
    #[arg(long, default_value = "best-response")]
    policy: String,
    /// Defaults to `10 · n · Σ|S_i|`.
    #[arg(long)]
    max_moves: Option<usize>,
    /// Comma-separated strategy indices; defaults to all zeros.
    #[arg(long, value_delimiter = ',')]
    start: Option<Vec<usize>>,
    /// Include every move in the output.
    #[arg(long)]
    trace: bool,
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// From a 3DM instance `{"q": .., "triples": [[x, y, z], ..]}`.
    #[command(name = "3dm")]
    ThreeDm(InputArgs),
    /// From an X3C instance `{"q": .., "sets": [[a, b, c], ..]}`.
    X3c(InputArgs),
    /// From a graph `{"vertices": .., "edges": [[u, v], ..]}`.
    Vc(InputArgs),
    /// From `{"elements": .., "sets": [[..], ..], "weights": ["p/q", ..]}`.
    Setcover(InputArgs),
    /// The instance on which the greedy approximation pays `H_n`.
    Tight {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1/100")]
        eps: String,
    },
    /// A seeded random game of the requested class.
    Random {
        #[arg(long)]
        players: usize,
        #[arg(long)]
        resources: usize,
        #[arg(long, default_value_t = 1)]
        size: usize,
        #[arg(long)]
        asymmetric: bool,
        /// `non-decreasing`, `non-increasing`, `constant` or `mixed`.
        #[arg(long, default_value = "non-decreasing")]
        monotonicity: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum CombiCommand {
    /// `Λ_d` against `B_{d+1}` for `d = 1..=dmax`.
    Table {
        #[arg(long, allow_negative_numbers = true)]
        dmax: i64,
    },
    /// `Λ_d`, or `Λ_d(y)` with `--y`.
    Lambda {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        y: Option<i64>,
    },
    /// Checks both Dobinski series against the exact values.
    Verify {
        #[arg(long, allow_negative_numbers = true)]
        dmax: i64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ClassMismatch { .. } | Error::Infeasible(_) | Error::BudgetExceeded { .. } => 1,
        _ => 2,
    }
}

enum Failure {
    Error(Error),
    /// Output was written but the run counts as failed.
    Unmet(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{e}");
            return code;
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(Failure::Unmet(text)) => {
            let _ = out.write_all(text.as_bytes());
            let _ = writeln!(err, "error: verification failed");
            1
        }
        Err(Failure::Error(e)) => {
            report(err, &e);
            exit_code(&e)
        }
    }
}

fn report(err: &mut dyn Write, e: &Error) {
    match e {
        Error::Validation(violations) => {
            let _ = writeln!(err, "error: invalid game ({} problems)", violations.len());
            for v in violations {
                let _ = writeln!(err, "  - {v}");
            }
        }
        other => {
            let _ = writeln!(err, "error: {other}");
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))
}

fn load(input: &InputArgs) -> Result<Game> {
    parse_game(&read(&input.input)?)
}

fn load_json<T: for<'de> Deserialize<'de>>(input: &InputArgs) -> Result<T> {
    serde_json::from_str(&read(&input.input)?).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn non_negative(name: &str, v: i64) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Domain(format!("{name} must be non-negative, got {v}")))
}

fn degree(name: &str, v: i64) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::Domain(format!("{name} must be in 0..=4294967295, got {v}")))
}

fn execute(command: Command) -> std::result::Result<String, Failure> {
    match command {
        Command::Solve(args) => {
            let game = load(&args.input)?;
            let result = match args.algorithm.as_str() {
                "auto" => solve_with_budget(&game, args.budget),
                "oracle" => run_algorithm(&game, Algorithm::BruteForce, args.budget)?,
                label => run_algorithm(&game, label.parse()?, args.budget)?,
            };
            Ok(to_json(&SolveReport::new(&game, &result)))
        }
        Command::Oracle(args) => {
            let game = load(&args.input)?;
            let result = run_algorithm(&game, Algorithm::BruteForce, args.budget)?;
            let equilibria = if args.equilibria {
                let states = pure_nash_equilibria(&game, args.budget)?;
                Some(
                    states
                        .iter()
                        .map(|s| EquilibriumReport::new(&game, s))
                        .collect::<Result<Vec<_>>>()?,
                )
            } else {
                None
            };
            Ok(to_json(&OracleReport {
                solution: SolveReport::new(&game, &result),
                equilibria,
            }))
        }
        Command::Approx(args) => {
            let game = load(&args.input)?;
            if args.tilde {
                Ok(serialize_game(&tilde_transform(&game)?))
            } else {
                let result = greedy_nonincreasing_singleton(&game)?;
                Ok(to_json(&SolveReport::new(&game, &result)))
            }
        }
        Command::Dynamics(args) => {
            let game = load(&args.input)?;
            let policy: Policy = args.policy.parse()?;
            let start = State::new(args.start.unwrap_or_else(|| vec![0; game.players()]));
            let max_moves = args.max_moves.unwrap_or_else(|| default_max_moves(&game));
            let start_potential = game.potential(&start)?;
            let outcome = run_improving_dynamics(&game, &start, policy, max_moves)?;
            let potential = game.potential(&outcome.state)?;
            let report = DynamicsReport {
                converged: outcome.converged,
                equilibrium: is_pure_nash(&game, &outcome.state)?,
                moves: outcome.trace.len(),
                start_potential: rational::format(&start_potential),
                potential: rational::format(&potential),
                potential_decimal: rational::to_decimal(&potential, DECIMAL_PLACES),
                state: StateReport::of(&game, &outcome.state),
                trace: args.trace.then_some(outcome.trace),
            };
            Ok(to_json(&report))
        }
        Command::Gen(g) => Ok(serialize_game(&generate(g)?)),
        Command::Combi(c) => combi(c),
        Command::Check(input) => {
            let game = load(&input)?;
            Ok(to_json(&CheckReport {
                valid: true,
                players: game.players(),
                resources: game.resource_count(),
                states: game.state_count().to_string(),
                class: ClassReport::of(&game),
            }))
        }
    }
}

#[derive(Deserialize)]
struct SetCoverDoc {
    elements: usize,
    sets: Vec<Vec<usize>>,
    weights: Vec<RationalText>,
}

fn generate(command: GenCommand) -> Result<Game> {
    match command {
        GenCommand::ThreeDm(input) => from_3dm(&load_json::<ThreeDmInstance>(&input)?),
        GenCommand::X3c(input) => from_x3c(&load_json::<X3cInstance>(&input)?),
        GenCommand::Vc(input) => from_vertex_cover(&load_json::<VertexCoverInstance>(&input)?),
        GenCommand::Setcover(input) => {
            let doc: SetCoverDoc = load_json(&input)?;
            from_set_cover(&SetCoverInstance {
                elements: doc.elements,
                sets: doc.sets,
                weights: doc.weights.into_iter().map(|w| w.0).collect(),
            })
        }
        GenCommand::Tight { n, eps } => greedy_tight_instance(n, &rational::parse(&eps)?),
        GenCommand::Random {
            players,
            resources,
            size,
            asymmetric,
            monotonicity,
            seed,
        } => {
            let monotonicity = match monotonicity.as_str() {
                "non-decreasing" => Monotonicity::NonDecreasing,
                "non-increasing" => Monotonicity::NonIncreasing,
                "constant" => Monotonicity::Constant,
                "mixed" => Monotonicity::Mixed,
                other => return Err(Error::Domain(format!("unknown monotonicity {other:?}"))),
            };
            let template = GameTemplate {
                symmetric: !asymmetric,
                size,
                monotonicity,
            };
            random_game(template, players, resources, seed)
        }
    }
}

#[derive(Serialize)]
struct TableRow {
    d: u32,
    bell_next: String,
    lambda: String,
    lambda_decimal: String,
}

#[derive(Serialize)]
struct LambdaReport {
    d: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    y: Option<u64>,
    value: String,
    decimal: String,
}

fn combi(command: CombiCommand) -> std::result::Result<String, Failure> {
    match command {
        CombiCommand::Table { dmax } => {
            let rows: Vec<TableRow> = lambda_bell_table(degree("dmax", dmax)?)?
                .into_iter()
                .map(|c| TableRow {
                    d: c.d,
                    bell_next: c.bell_next.to_string(),
                    lambda: rational::format(&c.lambda),
                    lambda_decimal: rational::to_decimal(&c.lambda, 2),
                })
                .collect();
            Ok(to_json(&rows))
        }
        CombiCommand::Lambda { d, y } => {
            let d = degree("d", d)?;
            let y = y.map(|y| non_negative("y", y)).transpose()?;
            let value: Rational = match y {
                Some(y) => lambda_d_y(d, y)?,
                None => lambda_d(d)?,
            };
            Ok(to_json(&LambdaReport {
                d,
                y,
                value: rational::format(&value),
                decimal: rational::to_decimal(&value, DECIMAL_PLACES),
            }))
        }
        CombiCommand::Verify { dmax, tol } => {
            let report = verify_dobinski_variant(degree("dmax", dmax)?, tol)?;
            let text = to_json(&report);
            if report.all_pass {
                Ok(text)
            } else {
                Err(Failure::Unmet(text))
            }
        }
    }
}

#[derive(Serialize)]
struct EquilibriumReport {
    potential: String,
    state: StateReport,
}

impl EquilibriumReport {
    fn new(game: &Game, state: &State) -> Result<Self> {
        Ok(EquilibriumReport {
            potential: rational::format(&game.potential(state)?),
            state: StateReport::of(game, state),
        })
    }
}

#[derive(Serialize)]
struct OracleReport {
    #[serde(flatten)]
    solution: SolveReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    equilibria: Option<Vec<EquilibriumReport>>,
}

#[derive(Serialize)]
struct DynamicsReport {
    converged: bool,
    equilibrium: bool,
    moves: usize,
    start_potential: String,
    potential: String,
    potential_decimal: String,
    state: StateReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<Move>>,
}

#[derive(Serialize)]
struct CheckReport {
    valid: bool,
    players: usize,
    resources: usize,
    /// `Π|S_i|`, as a string since it may exceed 2^53.
    states: String,
    class: ClassReport,
}

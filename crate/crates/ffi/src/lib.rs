//! C ABI over `congestion-core`.
//!
//! Games and solutions are opaque handles owned by the caller and released
//! with the matching `*_free` function. Every fallible call returns a
//! [`CgStatus`]; on failure [`cg_last_error`] describes what went wrong on
//! the calling thread. Rationals cross the boundary as `"p/q"` strings
//! allocated here and released with [`cg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use congestion_core::combinatorics::{bell, lambda_d, lambda_d_y, stirling2};
use congestion_core::io::{parse_game, serialize_game};
use congestion_core::rational::{format, to_f64};
use congestion_core::solvers::{run_algorithm, solve_with_budget, DEFAULT_BUDGET};
use congestion_core::{Algorithm, Error, Game, Optimality, SolveResult, State};

/// Largest degree accepted by the combinatorial entry points.
pub const CG_MAX_DEGREE: i64 = 2048;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CgStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    ClassMismatch = 5,
    Infeasible = 6,
    BudgetExceeded = 7,
    Domain = 8,
    BufferTooSmall = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CgAlgorithm {
    Auto = 0,
    BruteForce = 1,
    GreedyInsertion = 2,
    SingletonMatching = 3,
    Size2Matching = 4,
    NonincreasingEnum = 5,
    Dynamics = 6,
    GreedyCover = 7,
}

/// A validated game.
pub struct CgGame {
    game: Game,
}

/// The outcome of [`cg_solve`].
pub struct CgSolution {
    result: SolveResult,
}

struct Failure {
    status: CgStatus,
    message: String,
}

impl Failure {
    fn new(status: CgStatus, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse { .. } => CgStatus::Parse,
            Error::ClassMismatch { .. } => CgStatus::ClassMismatch,
            Error::Infeasible(_) => CgStatus::Infeasible,
            Error::BudgetExceeded { .. } => CgStatus::BudgetExceeded,
            Error::Domain(_) => CgStatus::Domain,
            _ => CgStatus::InvalidInput,
        };
        Failure::new(status, e.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: Option<String>) {
    let c = message.map(|m| CString::new(m.replace('\0', " ")).expect("interior nul removed"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> CgStatus {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|payload| {
        let msg = payload
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| payload.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "unknown panic".into());
        Err(Failure::new(CgStatus::Panic, format!("internal error: {msg}")))
    });
    match outcome {
        Ok(()) => {
            set_last_error(None);
            CgStatus::Ok
        }
        Err(f) => {
            set_last_error(Some(f.message));
            f.status
        }
    }
}

fn non_null<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    // SAFETY: callers pass either null or a pointer obtained from this library.
    unsafe { p.as_ref() }.ok_or_else(|| Failure::new(CgStatus::NullArgument, format!("{name} is null")))
}

fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(CgStatus::NullArgument, "output pointer is null"));
    }
    // SAFETY: checked non-null; the caller provides writable storage.
    unsafe { out.write(value) };
    Ok(())
}

fn check_out<T>(out: *mut T) -> Result<(), Failure> {
    if out.is_null() {
        Err(Failure::new(CgStatus::NullArgument, "output pointer is null"))
    } else {
        Ok(())
    }
}

fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    check_out(out)?;
    let c = CString::new(s).map_err(|_| Failure::new(CgStatus::Panic, "string contains a nul byte"))?;
    write_out(out, c.into_raw())
}

fn degree(v: i64, name: &str) -> Result<u32, Failure> {
    if !(0..=CG_MAX_DEGREE).contains(&v) {
        return Err(Failure::new(
            CgStatus::Domain,
            format!("{name} must lie in 0..={CG_MAX_DEGREE}, got {v}"),
        ));
    }
    Ok(v as u32)
}

fn algorithm(a: CgAlgorithm) -> Option<Algorithm> {
    match a {
        CgAlgorithm::Auto => None,
        CgAlgorithm::BruteForce => Some(Algorithm::BruteForce),
        CgAlgorithm::GreedyInsertion => Some(Algorithm::GreedyInsertion),
        CgAlgorithm::SingletonMatching => Some(Algorithm::SingletonMatching),
        CgAlgorithm::Size2Matching => Some(Algorithm::Size2Matching),
        CgAlgorithm::NonincreasingEnum => Some(Algorithm::NonincreasingEnum),
        CgAlgorithm::Dynamics => Some(Algorithm::Dynamics),
        CgAlgorithm::GreedyCover => Some(Algorithm::GreedyCover),
    }
}

fn algorithm_label(a: Algorithm) -> &'static CStr {
    match a {
        Algorithm::BruteForce => c"brute-force",
        Algorithm::GreedyInsertion => c"greedy-insertion",
        Algorithm::SingletonMatching => c"singleton-matching",
        Algorithm::Size2Matching => c"size2-matching",
        Algorithm::NonincreasingEnum => c"nonincreasing-enum",
        Algorithm::Dynamics => c"dynamics",
        Algorithm::GreedyCover => c"greedy-cover",
    }
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn cg_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

/// Message for the last failed call on this thread, or null after a
/// successful call. Valid until the next call into this library.
#[no_mangle]
pub extern "C" fn cg_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and validates a game document.
///
/// # Safety
/// `json` must be null or a nul-terminated string; `out` must be null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn cg_game_from_json(json: *const c_char, out: *mut *mut CgGame) -> CgStatus {
    guard(|| {
        check_out(out)?;
        if json.is_null() {
            return Err(Failure::new(CgStatus::NullArgument, "json is null"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|e| Failure::new(CgStatus::InvalidUtf8, e.to_string()))?;
        let game = parse_game(text)?;
        write_out(out, Box::into_raw(Box::new(CgGame { game })))
    })
}

/// Releases a game. Null is ignored.
///
/// # Safety
/// `game` must be null or a handle from [`cg_game_from_json`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cg_game_free(game: *mut CgGame) {
    if !game.is_null() {
        drop(Box::from_raw(game));
    }
}

/// Canonical JSON rendering of a game.
///
/// # Safety
/// `game` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cg_game_to_json(game: *const CgGame, out: *mut *mut c_char) -> CgStatus {
    guard(|| write_string(out, serialize_game(&non_null(game, "game")?.game)))
}

/// Number of players.
///
/// # Safety
/// `game` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cg_game_players(game: *const CgGame, out: *mut usize) -> CgStatus {
    guard(|| write_out(out, non_null(game, "game")?.game.players()))
}

/// Size of `player`'s strategy set.
///
/// # Safety
/// `game` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cg_game_strategy_count(game: *const CgGame, player: usize, out: *mut usize) -> CgStatus {
    guard(|| {
        let g = &non_null(game, "game")?.game;
        if player >= g.players() {
            return Err(Error::InvalidPlayer {
                player,
                players: g.players(),
            }
            .into());
        }
        write_out(out, g.strategies(player).len())
    })
}

/// Exact potential of the state given by `choices[0..len]`.
///
/// # Safety
/// `game` must be null or a live handle; `choices` must be null or point to
/// `len` readable values; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cg_game_potential(
    game: *const CgGame,
    choices: *const usize,
    len: usize,
    out: *mut *mut c_char,
) -> CgStatus {
    guard(|| {
        let g = &non_null(game, "game")?.game;
        check_out(out)?;
        let choices = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(non_null(choices, "choices")?, len)
        };
        let potential = g.potential(&State::new(choices.to_vec()))?;
        write_string(out, format(&potential))
    })
}

/// Minimum-potential search. `Auto` picks the solver for the game's class;
/// any other value runs that solver and fails with
/// `CG_STATUS_CLASS_MISMATCH` outside its class. A `budget` of 0 uses the
/// default state budget for the exhaustive oracle.
///
/// # Safety
/// `game` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cg_solve(
    game: *const CgGame,
    algo: CgAlgorithm,
    budget: u64,
    out: *mut *mut CgSolution,
) -> CgStatus {
    guard(|| {
        let g = &non_null(game, "game")?.game;
        check_out(out)?;
        let budget = if budget == 0 {
            DEFAULT_BUDGET
        } else {
            u128::from(budget)
        };
        let result = match algorithm(algo) {
            None => solve_with_budget(g, budget),
            Some(a) => run_algorithm(g, a, budget)?,
        };
        write_out(out, Box::into_raw(Box::new(CgSolution { result })))
    })
}

/// Releases a solution. Null is ignored.
///
/// # Safety
/// `solution` must be null or a handle from [`cg_solve`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cg_solution_free(solution: *mut CgSolution) {
    if !solution.is_null() {
        drop(Box::from_raw(solution));
    }
}

/// Exact potential as a `"p/q"` string (`"p"` for integers).
///
/// # Safety
/// `solution` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cg_solution_potential(solution: *const CgSolution, out: *mut *mut c_char) -> CgStatus {
    guard(|| write_string(out, format(&non_null(solution, "solution")?.result.potential)))
}

/// Potential rounded to the nearest double.
///
/// # Safety
/// `solution` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cg_solution_potential_f64(solution: *const CgSolution, out: *mut f64) -> CgStatus {
    guard(|| write_out(out, to_f64(&non_null(solution, "solution")?.result.potential)))
}

/// Copies the chosen strategy index of each player into `buf`. `written`
/// receives the player count, also when `cap` is too small.
///
/// # Safety
/// `solution` must be null or a live handle; `buf` must be null or point to
/// `cap` writable values; `written` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cg_solution_choices(
    solution: *const CgSolution,
    buf: *mut usize,
    cap: usize,
    written: *mut usize,
) -> CgStatus {
    guard(|| {
        let choices = non_null(solution, "solution")?.result.state.choices();
        write_out(written, choices.len())?;
        if cap < choices.len() {
            return Err(Failure::new(
                CgStatus::BufferTooSmall,
                format!("buffer holds {cap} entries, {} needed", choices.len()),
            ));
        }
        if !choices.is_empty() {
            check_out(buf)?;
            ptr::copy_nonoverlapping(choices.as_ptr(), buf, choices.len());
        }
        Ok(())
    })
}

/// Static label of the algorithm that produced `solution`, or null.
///
/// # Safety
/// `solution` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cg_solution_algorithm(solution: *const CgSolution) -> *const c_char {
    solution
        .as_ref()
        .map_or(ptr::null(), |s| algorithm_label(s.result.algorithm).as_ptr())
}

/// Whether the potential is proven minimal (false for heuristics).
///
/// # Safety
/// `solution` must be null or a live handle; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cg_solution_proven_optimal(solution: *const CgSolution, out: *mut bool) -> CgStatus {
    guard(|| {
        let s = non_null(solution, "solution")?;
        write_out(out, s.result.optimality == Optimality::ProvenOptimal)
    })
}

/// Bell number `B_d` as a decimal string.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cg_bell(d: i64, out: *mut *mut c_char) -> CgStatus {
    guard(|| {
        check_out(out)?;
        write_string(out, bell(degree(d, "d")?).to_string())
    })
}

/// Stirling number of the second kind `S(d, k)` as a decimal string.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cg_stirling2(d: i64, k: i64, out: *mut *mut c_char) -> CgStatus {
    guard(|| {
        check_out(out)?;
        let v = stirling2(degree(d, "d")?, degree(k, "k")?)?;
        write_string(out, v.to_string())
    })
}

/// `Λ_d` as a `"p/q"` string; needs `d ≥ 1`.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cg_lambda(d: i64, out: *mut *mut c_char) -> CgStatus {
    guard(|| {
        check_out(out)?;
        write_string(out, format(&lambda_d(degree(d, "d")?)?))
    })
}

/// `Λ_d(y)` as a `"p/q"` string; needs `d ≥ 1` and `y ≥ 1`.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn cg_lambda_y(d: i64, y: i64, out: *mut *mut c_char) -> CgStatus {
    guard(|| {
        check_out(out)?;
        let y = u64::try_from(y).map_err(|_| Failure::new(CgStatus::Domain, format!("y must be positive, got {y}")))?;
        write_string(out, format(&lambda_d_y(degree(d, "d")?, y)?))
    })
}

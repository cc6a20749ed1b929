#ifndef CONGESTION_H
#define CONGESTION_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Largest degree accepted by the combinatorial entry points.
 */
#define CG_MAX_DEGREE 2048

typedef enum {
  CG_ALGORITHM_AUTO = 0,
  CG_ALGORITHM_BRUTE_FORCE = 1,
  CG_ALGORITHM_GREEDY_INSERTION = 2,
  CG_ALGORITHM_SINGLETON_MATCHING = 3,
  CG_ALGORITHM_SIZE2_MATCHING = 4,
  CG_ALGORITHM_NONINCREASING_ENUM = 5,
  CG_ALGORITHM_DYNAMICS = 6,
  CG_ALGORITHM_GREEDY_COVER = 7,
} CgAlgorithm;

typedef enum {
  CG_STATUS_OK = 0,
  CG_STATUS_NULL_ARGUMENT = 1,
  CG_STATUS_INVALID_UTF8 = 2,
  CG_STATUS_PARSE = 3,
  CG_STATUS_INVALID_INPUT = 4,
  CG_STATUS_CLASS_MISMATCH = 5,
  CG_STATUS_INFEASIBLE = 6,
  CG_STATUS_BUDGET_EXCEEDED = 7,
  CG_STATUS_DOMAIN = 8,
  CG_STATUS_BUFFER_TOO_SMALL = 9,
  CG_STATUS_PANIC = 10,
} CgStatus;

/**
 * A validated game.
 */
typedef struct CgGame CgGame;

/**
 * The outcome of [`cg_solve`].
 */
typedef struct CgSolution CgSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static nul-terminated string.
 */
const char *cg_version(void);

/**
 * Message for the last failed call on this thread, or null after a
 * successful call. Valid until the next call into this library.
 */
const char *cg_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void cg_string_free(char *s);

/**
 * Parses and validates a game document.
 *
 * # Safety
 * `json` must be null or a nul-terminated string; `out` must be null or
 * writable.
 */
CgStatus cg_game_from_json(const char *json, CgGame **out);

/**
 * Releases a game. Null is ignored.
 *
 * # Safety
 * `game` must be null or a handle from [`cg_game_from_json`] not yet freed.
 */
void cg_game_free(CgGame *game);

/**
 * Canonical JSON rendering of a game.
 *
 * # Safety
 * `game` must be null or a live handle; `out` must be null or writable.
 */
CgStatus cg_game_to_json(const CgGame *game, char **out);

/**
 * Number of players.
 *
 * # Safety
 * `game` must be null or a live handle; `out` must be null or writable.
 */
CgStatus cg_game_players(const CgGame *game, size_t *out);

/**
 * Size of `player`'s strategy set.
 *
 * # Safety
 * `game` must be null or a live handle; `out` must be null or writable.
 */
CgStatus cg_game_strategy_count(const CgGame *game, size_t player, size_t *out);

/**
 * Exact potential of the state given by `choices[0..len]`.
 *
 * # Safety
 * `game` must be null or a live handle; `choices` must be null or point to
 * `len` readable values; `out` must be null or writable.
 */
CgStatus cg_game_potential(const CgGame *game, const size_t *choices, size_t len, char **out);

/**
 * Minimum-potential search. `Auto` picks the solver for the game's class;
 * any other value runs that solver and fails with
 * `CG_STATUS_CLASS_MISMATCH` outside its class. A `budget` of 0 uses the
 * default state budget for the exhaustive oracle.
 *
 * # Safety
 * `game` must be null or a live handle; `out` must be null or writable.
 */
CgStatus cg_solve(const CgGame *game, CgAlgorithm algo, uint64_t budget, CgSolution **out);

/**
 * Releases a solution. Null is ignored.
 *
 * # Safety
 * `solution` must be null or a handle from [`cg_solve`] not yet freed.
 */
void cg_solution_free(CgSolution *solution);

/**
 * Exact potential as a `"p/q"` string (`"p"` for integers).
 *
 * # Safety
 * `solution` must be null or a live handle; `out` must be null or writable.
 */
CgStatus cg_solution_potential(const CgSolution *solution, char **out);

/**
 * Potential rounded to the nearest double.
 *
 * # Safety
 * `solution` must be null or a live handle; `out` must be null or writable.
 */
CgStatus cg_solution_potential_f64(const CgSolution *solution, double *out);

/**
 * Copies the chosen strategy index of each player into `buf`. `written`
 * receives the player count, also when `cap` is too small.
 *
 * # Safety
 * `solution` must be null or a live handle; `buf` must be null or point to
 * `cap` writable values; `written` must be null or writable.
 */
CgStatus cg_solution_choices(const CgSolution *solution, size_t *buf, size_t cap, size_t *written);

/**
 * Static label of the algorithm that produced `solution`, or null.
 *
 * # Safety
 * `solution` must be null or a live handle.
 */
const char *cg_solution_algorithm(const CgSolution *solution);

/**
 * Whether the potential is proven minimal (false for heuristics).
 *
 * # Safety
 * `solution` must be null or a live handle; `out` must be null or writable.
 */
CgStatus cg_solution_proven_optimal(const CgSolution *solution, bool *out);

/**
 * Bell number `B_d` as a decimal string.
 *
 * # Safety
 * `out` must be null or writable.
 */
CgStatus cg_bell(int64_t d, char **out);

/**
 * Stirling number of the second kind `S(d, k)` as a decimal string.
 *
 * # Safety
 * `out` must be null or writable.
 */
CgStatus cg_stirling2(int64_t d, int64_t k, char **out);

/**
 * `Λ_d` as a `"p/q"` string; needs `d ≥ 1`.
 *
 * # Safety
 * `out` must be null or writable.
 */
CgStatus cg_lambda(int64_t d, char **out);

/**
 * `Λ_d(y)` as a `"p/q"` string; needs `d ≥ 1` and `y ≥ 1`.
 *
 * # Safety
 * `out` must be null or writable.
 */
CgStatus cg_lambda_y(int64_t d, int64_t y, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONGESTION_H */

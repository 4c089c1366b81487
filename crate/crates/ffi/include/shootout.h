#ifndef SHOOTOUT_H
#define SHOOTOUT_H

/* Generated by cbindgen from shootout-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum ShootoutStatus {
  /**
   * Success.
   */
  SHOOTOUT_STATUS_OK = 0,
  /**
   * A parameter violates its domain (targets, probabilities, tolerances).
   */
  SHOOTOUT_STATUS_INVALID_ARGUMENT = 1,
  /**
   * A solver could not finish (tail tolerance unreachable, bracket or
   * convergence failure).
   */
  SHOOTOUT_STATUS_SOLVER_FAILURE = 2,
  /**
   * A required pointer was null.
   */
  SHOOTOUT_STATUS_NULL_POINTER = 3,
  /**
   * An index was out of range for the handle it addresses.
   */
  SHOOTOUT_STATUS_OUT_OF_RANGE = 4,
} ShootoutStatus;

/**
 * Which game a simulation batch runs.
 */
typedef enum ShootoutModel {
  SHOOTOUT_MODEL_ROUND_BASED = 0,
  SHOOTOUT_MODEL_SEQUENTIAL = 1,
} ShootoutModel;

/**
 * Opaque exact solution handle (win probabilities, expected rounds and
 * per-score values).
 */
typedef struct ShootoutSolution ShootoutSolution;

/**
 * Opaque sweep handle.
 */
typedef struct ShootoutSweep ShootoutSweep;

/**
 * Simulation batch summary (mirrors the library's estimate).
 */
typedef struct ShootoutEstimate {
  /**
   * First kicker's win frequency over resolved trials.
   */
  double a_win_freq;
  /**
   * Mean rounds over resolved trials (half-rounds possible sequentially).
   */
  double mean_rounds;
  /**
   * 95% confidence halfwidth of `a_win_freq`.
   */
  double ci95_halfwidth_winfreq;
  /**
   * Trials cut off by the sudden-death round cap.
   */
  uint64_t unresolved_count;
} ShootoutEstimate;

/**
 * One row of a sweep over the second kicker's success probability.
 */
typedef struct ShootoutSweepRow {
  double q;
  double p_a;
  double p_b;
  double er;
  double q_a_seq;
  double er_seq;
} ShootoutSweepRow;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Exact win probabilities and expected rounds of the round-based game.
 * Any out-pointer may be null to skip that value.
 *
 * # Safety
 * Every non-null out-pointer must be valid for a write of its pointee type.
 */
enum ShootoutStatus shootout_win_prob(uint32_t m,
                                      uint32_t n,
                                      double p,
                                      double q,
                                      double *out_p_a,
                                      double *out_p_b,
                                      double *out_expected_rounds);

/**
 * Sequential-variant win probability and expected length.
 *
 * # Safety
 * Every non-null out-pointer must be valid for a write of its pointee type.
 */
enum ShootoutStatus shootout_sequential(uint32_t m,
                                        uint32_t n,
                                        double p,
                                        double q,
                                        double *out_q_a_win,
                                        double *out_expected_kicks,
                                        double *out_expected_rounds);

/**
 * Sudden-death closed forms for the first kicker.
 *
 * # Safety
 * Every non-null out-pointer must be valid for a write of its pointee type.
 */
enum ShootoutStatus shootout_sudden_death(double p,
                                          double q,
                                          double *out_win_prob,
                                          double *out_expected_rounds);

/**
 * Evaluates one of the truncated series. `which` selects the quantity:
 * 0 = P_A, 1 = P_B, 2 = expected rounds.
 *
 * # Safety
 * Every non-null out-pointer must be valid for a write of its pointee type.
 */
enum ShootoutStatus shootout_series(uint32_t m,
                                    uint32_t n,
                                    double p,
                                    double q,
                                    double epsilon,
                                    uint32_t which,
                                    double *out_value,
                                    double *out_tail_bound,
                                    uint32_t *out_truncation_round);

/**
 * B's balancing probability for the given `(m, n, p)`.
 *
 * # Safety
 * Every non-null out-pointer must be valid for a write of its pointee type.
 */
enum ShootoutStatus shootout_balancing_probability(uint32_t m,
                                                   uint32_t n,
                                                   double p,
                                                   double tol,
                                                   double *out_q_star,
                                                   double *out_residual,
                                                   uint32_t *out_iterations);

/**
 * Runs a seeded simulation batch and writes its summary.
 *
 * # Safety
 * Every non-null out-pointer must be valid for a write of its pointee type.
 */
enum ShootoutStatus shootout_simulate(uint32_t m,
                                      uint32_t n,
                                      double p,
                                      double q,
                                      enum ShootoutModel model,
                                      uint64_t trials,
                                      uint64_t seed,
                                      uint32_t sd_round_cap,
                                      struct ShootoutEstimate *out_estimate);

/**
 * Counts profitable deliberate misses; zero certifies strategyproofness of
 * the instance.
 *
 * # Safety
 * Every non-null out-pointer must be valid for a write of its pointee type.
 */
enum ShootoutStatus shootout_audit_deviation_count(uint32_t m,
                                                   uint32_t n,
                                                   double p,
                                                   double q,
                                                   size_t *out_count);

/**
 * Solves the round-based game and returns an owning handle.
 *
 * # Safety
 * Every non-null out-pointer must be valid for a write of its pointee type.
 */
enum ShootoutStatus shootout_solution_new(uint32_t m,
                                          uint32_t n,
                                          double p,
                                          double q,
                                          struct ShootoutSolution **out_solution);

/**
 * First kicker's win probability; NaN on a null handle.
 *
 * # Safety
 * The handle must be null or a pointer obtained from [`shootout_solution_new`]
 * that has not been freed.
 */
double shootout_solution_p_a_win(const struct ShootoutSolution *solution);

/**
 * Second kicker's win probability; NaN on a null handle.
 *
 * # Safety
 * The handle must be null or a pointer obtained from [`shootout_solution_new`]
 * that has not been freed.
 */
double shootout_solution_p_b_win(const struct ShootoutSolution *solution);

/**
 * Expected rounds including sudden death; NaN on a null handle.
 *
 * # Safety
 * The handle must be null or a pointer obtained from [`shootout_solution_new`]
 * that has not been freed.
 */
double shootout_solution_expected_rounds(const struct ShootoutSolution *solution);

/**
 * Per-score values for `0 <= a <= m`, `0 <= b <= n`: the first kicker's win
 * probability and the expected remaining rounds from that score.
 *
 * # Safety
 * The handle must be null or a pointer obtained from [`shootout_solution_new`]
 * that has not been freed.
 * Non-null out-pointers must be valid for writes.
 */
enum ShootoutStatus shootout_solution_state_value(const struct ShootoutSolution *solution,
                                                  uint32_t a,
                                                  uint32_t b,
                                                  double *out_a_win_prob,
                                                  double *out_expected_remaining_rounds);

/**
 * Frees a solution handle; a null pointer is a no-op.
 *
 * # Safety
 * The handle must be null or a pointer obtained from [`shootout_solution_new`]
 * that has not been freed; it must not be used after this call.
 */
void shootout_solution_free(struct ShootoutSolution *solution);

/**
 * Sweeps both game variants over `grid_size` evenly spaced values of `q` in
 * `[0.005, 0.995]` and returns an owning handle.
 *
 * # Safety
 * Every non-null out-pointer must be valid for a write of its pointee type.
 */
enum ShootoutStatus shootout_sweep_new(uint32_t m,
                                       uint32_t n,
                                       double p,
                                       size_t grid_size,
                                       struct ShootoutSweep **out_sweep);

/**
 * Number of rows held by a sweep handle; zero on a null handle.
 *
 * # Safety
 * The handle must be null or a pointer obtained from [`shootout_sweep_new`]
 * that has not been freed.
 */
size_t shootout_sweep_len(const struct ShootoutSweep *sweep);

/**
 * Copies one sweep row out of the handle.
 *
 * # Safety
 * The handle must be null or a pointer obtained from [`shootout_sweep_new`]
 * that has not been freed.
 * `out_row` must be null or valid for a write.
 */
enum ShootoutStatus shootout_sweep_row(const struct ShootoutSweep *sweep,
                                       size_t index,
                                       struct ShootoutSweepRow *out_row);

/**
 * Frees a sweep handle; a null pointer is a no-op.
 *
 * # Safety
 * The handle must be null or a pointer obtained from [`shootout_sweep_new`]
 * that has not been freed; it must not be used after this call.
 */
void shootout_sweep_free(struct ShootoutSweep *sweep);

/**
 * Static, NUL-terminated crate version string; do not free.
 */
const char *shootout_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SHOOTOUT_H */

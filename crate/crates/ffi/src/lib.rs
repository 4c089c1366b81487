//! C ABI over the shootout analysis library.
//!
//! Conventions: fallible calls return a [`ShootoutStatus`] and write results
//! through out-pointers, which are left untouched on failure. Aggregate
//! results (sweeps, per-score solutions) live behind opaque handles with
//! explicit `_free` functions; handles are not thread-safe to mutate but may
//! be read from any number of threads. The generated header is
//! `include/shootout.h`.

use std::ffi::c_char;

use shootout::{
    Model, RuleParams, SimConfig, SweepRow, balancing_probability, default_q_grid, er_series,
    estimate, pa_series, pb_series, solve_round_model, solve_sequential_model,
    strategyproofness_audit, sudden_death_expected_rounds, sudden_death_win_prob, sweep_q,
};

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShootoutStatus {
    /// Success.
    Ok = 0,
    /// A parameter violates its domain (targets, probabilities, tolerances).
    InvalidArgument = 1,
    /// A solver could not finish (tail tolerance unreachable, bracket or
    /// convergence failure).
    SolverFailure = 2,
    /// A required pointer was null.
    NullPointer = 3,
    /// An index was out of range for the handle it addresses.
    OutOfRange = 4,
}

fn status_of(err: &shootout::Error) -> ShootoutStatus {
    use shootout::Error::*;
    match err {
        TailTolerance { .. } | BracketFailure { .. } | NoConvergence { .. } => {
            ShootoutStatus::SolverFailure
        }
        _ => ShootoutStatus::InvalidArgument,
    }
}

/// Simulation batch summary (mirrors the library's estimate).
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct ShootoutEstimate {
    /// First kicker's win frequency over resolved trials.
    pub a_win_freq: f64,
    /// Mean rounds over resolved trials (half-rounds possible sequentially).
    pub mean_rounds: f64,
    /// 95% confidence halfwidth of `a_win_freq`.
    pub ci95_halfwidth_winfreq: f64,
    /// Trials cut off by the sudden-death round cap.
    pub unresolved_count: u64,
}

/// One row of a sweep over the second kicker's success probability.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct ShootoutSweepRow {
    pub q: f64,
    pub p_a: f64,
    pub p_b: f64,
    pub er: f64,
    pub q_a_seq: f64,
    pub er_seq: f64,
}

/// Which game a simulation batch runs.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShootoutModel {
    RoundBased = 0,
    Sequential = 1,
}

/// Opaque exact solution handle (win probabilities, expected rounds and
/// per-score values).
pub struct ShootoutSolution {
    inner: shootout::ExactSolution,
    m: u32,
    n: u32,
}

/// Opaque sweep handle.
pub struct ShootoutSweep {
    rows: Vec<SweepRow>,
}

unsafe fn write_out<T>(ptr: *mut T, value: T) {
    // Caller-validated non-null out-pointer.
    unsafe { *ptr = value };
}

/// Exact win probabilities and expected rounds of the round-based game.
/// Any out-pointer may be null to skip that value.
///
/// # Safety
/// Every non-null out-pointer must be valid for a write of its pointee type.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn shootout_win_prob(
    m: u32,
    n: u32,
    p: f64,
    q: f64,
    out_p_a: *mut f64,
    out_p_b: *mut f64,
    out_expected_rounds: *mut f64,
) -> ShootoutStatus {
    let params = match RuleParams::new(m, n, p, q) {
        Ok(params) => params,
        Err(err) => return status_of(&err),
    };
    let sol = solve_round_model(&params);
    unsafe {
        if !out_p_a.is_null() {
            write_out(out_p_a, sol.p_a_win);
        }
        if !out_p_b.is_null() {
            write_out(out_p_b, sol.p_b_win);
        }
        if !out_expected_rounds.is_null() {
            write_out(out_expected_rounds, sol.expected_rounds);
        }
    }
    ShootoutStatus::Ok
}

/// Sequential-variant win probability and expected length.
///
/// # Safety
/// Every non-null out-pointer must be valid for a write of its pointee type.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn shootout_sequential(
    m: u32,
    n: u32,
    p: f64,
    q: f64,
    out_q_a_win: *mut f64,
    out_expected_kicks: *mut f64,
    out_expected_rounds: *mut f64,
) -> ShootoutStatus {
    let params = match RuleParams::new(m, n, p, q) {
        Ok(params) => params,
        Err(err) => return status_of(&err),
    };
    let sol = solve_sequential_model(&params);
    unsafe {
        if !out_q_a_win.is_null() {
            write_out(out_q_a_win, sol.q_a_win);
        }
        if !out_expected_kicks.is_null() {
            write_out(out_expected_kicks, sol.expected_kicks);
        }
        if !out_expected_rounds.is_null() {
            write_out(out_expected_rounds, sol.expected_rounds);
        }
    }
    ShootoutStatus::Ok
}

/// Sudden-death closed forms for the first kicker.
///
/// # Safety
/// Every non-null out-pointer must be valid for a write of its pointee type.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn shootout_sudden_death(
    p: f64,
    q: f64,
    out_win_prob: *mut f64,
    out_expected_rounds: *mut f64,
) -> ShootoutStatus {
    let win = match sudden_death_win_prob(p, q) {
        Ok(win) => win,
        Err(err) => return status_of(&err),
    };
    let rounds = sudden_death_expected_rounds(p, q).expect("domain already checked");
    unsafe {
        if !out_win_prob.is_null() {
            write_out(out_win_prob, win);
        }
        if !out_expected_rounds.is_null() {
            write_out(out_expected_rounds, rounds);
        }
    }
    ShootoutStatus::Ok
}

/// Evaluates one of the truncated series. `which` selects the quantity:
/// 0 = P_A, 1 = P_B, 2 = expected rounds.
///
/// # Safety
/// Every non-null out-pointer must be valid for a write of its pointee type.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn shootout_series(
    m: u32,
    n: u32,
    p: f64,
    q: f64,
    epsilon: f64,
    which: u32,
    out_value: *mut f64,
    out_tail_bound: *mut f64,
    out_truncation_round: *mut u32,
) -> ShootoutStatus {
    if out_value.is_null() {
        return ShootoutStatus::NullPointer;
    }
    let params = match RuleParams::new(m, n, p, q) {
        Ok(params) => params,
        Err(err) => return status_of(&err),
    };
    let result = match which {
        0 => pa_series(&params, epsilon),
        1 => pb_series(&params, epsilon),
        2 => er_series(&params, epsilon),
        _ => return ShootoutStatus::InvalidArgument,
    };
    match result {
        Ok(series) => {
            unsafe {
                write_out(out_value, series.value);
                if !out_tail_bound.is_null() {
                    write_out(out_tail_bound, series.tail_bound);
                }
                if !out_truncation_round.is_null() {
                    write_out(out_truncation_round, series.truncation_round);
                }
            }
            ShootoutStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// B's balancing probability for the given `(m, n, p)`.
///
/// # Safety
/// Every non-null out-pointer must be valid for a write of its pointee type.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn shootout_balancing_probability(
    m: u32,
    n: u32,
    p: f64,
    tol: f64,
    out_q_star: *mut f64,
    out_residual: *mut f64,
    out_iterations: *mut u32,
) -> ShootoutStatus {
    if out_q_star.is_null() {
        return ShootoutStatus::NullPointer;
    }
    match balancing_probability(m, n, p, tol) {
        Ok(result) => {
            unsafe {
                write_out(out_q_star, result.q_star);
                if !out_residual.is_null() {
                    write_out(out_residual, result.residual);
                }
                if !out_iterations.is_null() {
                    write_out(out_iterations, result.iterations);
                }
            }
            ShootoutStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// Runs a seeded simulation batch and writes its summary.
///
/// # Safety
/// Every non-null out-pointer must be valid for a write of its pointee type.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn shootout_simulate(
    m: u32,
    n: u32,
    p: f64,
    q: f64,
    model: ShootoutModel,
    trials: u64,
    seed: u64,
    sd_round_cap: u32,
    out_estimate: *mut ShootoutEstimate,
) -> ShootoutStatus {
    if out_estimate.is_null() {
        return ShootoutStatus::NullPointer;
    }
    let params = match RuleParams::new(m, n, p, q) {
        Ok(params) => params,
        Err(err) => return status_of(&err),
    };
    let model = match model {
        ShootoutModel::RoundBased => Model::RoundBased,
        ShootoutModel::Sequential => Model::Sequential,
    };
    let config = match SimConfig::new(params, model, trials, seed, sd_round_cap) {
        Ok(config) => config,
        Err(err) => return status_of(&err),
    };
    let batch = estimate(&config);
    unsafe {
        write_out(
            out_estimate,
            ShootoutEstimate {
                a_win_freq: batch.a_win_freq,
                mean_rounds: batch.mean_rounds,
                ci95_halfwidth_winfreq: batch.ci95_halfwidth_winfreq,
                unresolved_count: batch.unresolved_count,
            },
        );
    }
    ShootoutStatus::Ok
}

/// Counts profitable deliberate misses; zero certifies strategyproofness of
/// the instance.
///
/// # Safety
/// Every non-null out-pointer must be valid for a write of its pointee type.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn shootout_audit_deviation_count(
    m: u32,
    n: u32,
    p: f64,
    q: f64,
    out_count: *mut usize,
) -> ShootoutStatus {
    if out_count.is_null() {
        return ShootoutStatus::NullPointer;
    }
    let params = match RuleParams::new(m, n, p, q) {
        Ok(params) => params,
        Err(err) => return status_of(&err),
    };
    match strategyproofness_audit(&params) {
        Ok(report) => {
            unsafe { write_out(out_count, report.profitable_deviations.len()) };
            ShootoutStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// Solves the round-based game and returns an owning handle.
///
/// # Safety
/// Every non-null out-pointer must be valid for a write of its pointee type.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn shootout_solution_new(
    m: u32,
    n: u32,
    p: f64,
    q: f64,
    out_solution: *mut *mut ShootoutSolution,
) -> ShootoutStatus {
    if out_solution.is_null() {
        return ShootoutStatus::NullPointer;
    }
    let params = match RuleParams::new(m, n, p, q) {
        Ok(params) => params,
        Err(err) => return status_of(&err),
    };
    let handle = Box::new(ShootoutSolution {
        inner: solve_round_model(&params),
        m,
        n,
    });
    unsafe { write_out(out_solution, Box::into_raw(handle)) };
    ShootoutStatus::Ok
}

/// First kicker's win probability; NaN on a null handle.
///
/// # Safety
/// The handle must be null or a pointer obtained from [`shootout_solution_new`]
/// that has not been freed.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn shootout_solution_p_a_win(solution: *const ShootoutSolution) -> f64 {
    match unsafe { solution.as_ref() } {
        Some(sol) => sol.inner.p_a_win,
        None => f64::NAN,
    }
}

/// Second kicker's win probability; NaN on a null handle.
///
/// # Safety
/// The handle must be null or a pointer obtained from [`shootout_solution_new`]
/// that has not been freed.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn shootout_solution_p_b_win(solution: *const ShootoutSolution) -> f64 {
    match unsafe { solution.as_ref() } {
        Some(sol) => sol.inner.p_b_win,
        None => f64::NAN,
    }
}

/// Expected rounds including sudden death; NaN on a null handle.
///
/// # Safety
/// The handle must be null or a pointer obtained from [`shootout_solution_new`]
/// that has not been freed.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn shootout_solution_expected_rounds(
    solution: *const ShootoutSolution,
) -> f64 {
    match unsafe { solution.as_ref() } {
        Some(sol) => sol.inner.expected_rounds,
        None => f64::NAN,
    }
}

/// Per-score values for `0 <= a <= m`, `0 <= b <= n`: the first kicker's win
/// probability and the expected remaining rounds from that score.
///
/// # Safety
/// The handle must be null or a pointer obtained from [`shootout_solution_new`]
/// that has not been freed.
/// Non-null out-pointers must be valid for writes.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn shootout_solution_state_value(
    solution: *const ShootoutSolution,
    a: u32,
    b: u32,
    out_a_win_prob: *mut f64,
    out_expected_remaining_rounds: *mut f64,
) -> ShootoutStatus {
    let Some(sol) = (unsafe { solution.as_ref() }) else {
        return ShootoutStatus::NullPointer;
    };
    if a > sol.m || b > sol.n {
        return ShootoutStatus::OutOfRange;
    }
    let value = sol.inner.state_values[&(a, b)];
    unsafe {
        if !out_a_win_prob.is_null() {
            write_out(out_a_win_prob, value.a_win_prob);
        }
        if !out_expected_remaining_rounds.is_null() {
            write_out(
                out_expected_remaining_rounds,
                value.expected_remaining_rounds,
            );
        }
    }
    ShootoutStatus::Ok
}

/// Frees a solution handle; a null pointer is a no-op.
///
/// # Safety
/// The handle must be null or a pointer obtained from [`shootout_solution_new`]
/// that has not been freed; it must not be used after this call.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn shootout_solution_free(solution: *mut ShootoutSolution) {
    if !solution.is_null() {
        drop(unsafe { Box::from_raw(solution) });
    }
}

/// Sweeps both game variants over `grid_size` evenly spaced values of `q` in
/// `[0.005, 0.995]` and returns an owning handle.
///
/// # Safety
/// Every non-null out-pointer must be valid for a write of its pointee type.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn shootout_sweep_new(
    m: u32,
    n: u32,
    p: f64,
    grid_size: usize,
    out_sweep: *mut *mut ShootoutSweep,
) -> ShootoutStatus {
    if out_sweep.is_null() {
        return ShootoutStatus::NullPointer;
    }
    let grid = match default_q_grid(grid_size) {
        Ok(grid) => grid,
        Err(err) => return status_of(&err),
    };
    match sweep_q(m, n, p, &grid) {
        Ok(rows) => {
            unsafe { write_out(out_sweep, Box::into_raw(Box::new(ShootoutSweep { rows }))) };
            ShootoutStatus::Ok
        }
        Err(err) => status_of(&err),
    }
}

/// Number of rows held by a sweep handle; zero on a null handle.
///
/// # Safety
/// The handle must be null or a pointer obtained from [`shootout_sweep_new`]
/// that has not been freed.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn shootout_sweep_len(sweep: *const ShootoutSweep) -> usize {
    match unsafe { sweep.as_ref() } {
        Some(s) => s.rows.len(),
        None => 0,
    }
}

/// Copies one sweep row out of the handle.
///
/// # Safety
/// The handle must be null or a pointer obtained from [`shootout_sweep_new`]
/// that has not been freed.
/// `out_row` must be null or valid for a write.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn shootout_sweep_row(
    sweep: *const ShootoutSweep,
    index: usize,
    out_row: *mut ShootoutSweepRow,
) -> ShootoutStatus {
    let Some(s) = (unsafe { sweep.as_ref() }) else {
        return ShootoutStatus::NullPointer;
    };
    if out_row.is_null() {
        return ShootoutStatus::NullPointer;
    }
    let Some(row) = s.rows.get(index) else {
        return ShootoutStatus::OutOfRange;
    };
    unsafe {
        write_out(
            out_row,
            ShootoutSweepRow {
                q: row.q,
                p_a: row.p_a,
                p_b: row.p_b,
                er: row.er,
                q_a_seq: row.q_a_seq,
                er_seq: row.er_seq,
            },
        );
    }
    ShootoutStatus::Ok
}

/// Frees a sweep handle; a null pointer is a no-op.
///
/// # Safety
/// The handle must be null or a pointer obtained from [`shootout_sweep_new`]
/// that has not been freed; it must not be used after this call.
#[unsafe(no_mangle)]
pub unsafe extern "C" fn shootout_sweep_free(sweep: *mut ShootoutSweep) {
    if !sweep.is_null() {
        drop(unsafe { Box::from_raw(sweep) });
    }
}

/// Static, NUL-terminated crate version string; do not free.
#[unsafe(no_mangle)]
pub extern "C" fn shootout_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

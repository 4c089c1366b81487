//! Exercises the C ABI exactly as a foreign caller would: through raw
//! pointers and status codes.

use std::ffi::CStr;
use std::ptr;

use shootout_ffi::*;

#[test]
fn win_prob_round_trips_the_exact_solver() {
    let mut p_a = f64::NAN;
    let mut p_b = f64::NAN;
    let mut er = f64::NAN;
    let status = unsafe { shootout_win_prob(5, 4, 0.75, 0.6, &mut p_a, &mut p_b, &mut er) };
    assert_eq!(status, ShootoutStatus::Ok);
    assert!((p_a - 0.5).abs() < 0.01);
    assert!((p_a + p_b - 1.0).abs() < 1e-12);
    assert!((er - 6.06).abs() < 0.01);

    let expected =
        shootout::solve_round_model(&shootout::RuleParams::new(5, 4, 0.75, 0.6).unwrap());
    assert_eq!(p_a, expected.p_a_win);
    assert_eq!(er, expected.expected_rounds);
}

#[test]
fn invalid_parameters_map_to_invalid_argument() {
    let mut out = 0.0f64;
    let status =
        unsafe { shootout_win_prob(1, 1, 0.5, 0.5, &mut out, ptr::null_mut(), ptr::null_mut()) };
    assert_eq!(status, ShootoutStatus::InvalidArgument);
    let status =
        unsafe { shootout_win_prob(5, 4, 1.5, 0.5, &mut out, ptr::null_mut(), ptr::null_mut()) };
    assert_eq!(status, ShootoutStatus::InvalidArgument);
}

#[test]
fn series_statuses_and_values() {
    let mut value = 0.0f64;
    let mut tail = 0.0f64;
    let mut round = 0u32;
    let status = unsafe {
        shootout_series(
            2, 1, 0.75, 0.75, 1e-12, 0, &mut value, &mut tail, &mut round,
        )
    };
    assert_eq!(status, ShootoutStatus::Ok);
    assert!((value - 0.1).abs() < 1e-10);
    assert!(tail <= 1e-12);
    assert!(round > 5);

    // which = 2 selects expected rounds.
    let status = unsafe {
        shootout_series(
            2, 1, 0.75, 0.75, 1e-12, 2, &mut value, &mut tail, &mut round,
        )
    };
    assert_eq!(status, ShootoutStatus::Ok);
    assert!((value - 1.6).abs() < 1e-10);

    let status = unsafe {
        shootout_series(
            2, 1, 0.75, 0.75, 1e-12, 9, &mut value, &mut tail, &mut round,
        )
    };
    assert_eq!(status, ShootoutStatus::InvalidArgument);

    let status = unsafe {
        shootout_series(
            2,
            1,
            0.75,
            0.75,
            1e-12,
            0,
            ptr::null_mut(),
            &mut tail,
            &mut round,
        )
    };
    assert_eq!(status, ShootoutStatus::NullPointer);

    // Unreachable tolerance surfaces as a solver failure.
    let status = unsafe {
        shootout_series(
            2, 1, 0.01, 0.5, 1e-300, 0, &mut value, &mut tail, &mut round,
        )
    };
    assert_eq!(status, ShootoutStatus::SolverFailure);
}

#[test]
fn balance_and_sequential_and_audit() {
    let mut q_star = 0.0f64;
    let mut residual = 0.0f64;
    let mut iterations = 0u32;
    let status = unsafe {
        shootout_balancing_probability(
            5,
            4,
            0.75,
            1e-10,
            &mut q_star,
            &mut residual,
            &mut iterations,
        )
    };
    assert_eq!(status, ShootoutStatus::Ok);
    assert!((q_star - 0.60).abs() < 0.005);
    assert!(residual.abs() <= 1e-10);
    assert!(iterations > 0);

    let mut q_a = 0.0f64;
    let mut kicks = 0.0f64;
    let mut rounds = 0.0f64;
    let status = unsafe { shootout_sequential(5, 4, 0.75, 0.6, &mut q_a, &mut kicks, &mut rounds) };
    assert_eq!(status, ShootoutStatus::Ok);
    assert!((rounds - kicks / 2.0).abs() < 1e-12);
    assert!(q_a > 0.5 && q_a < 0.6);

    let mut count = usize::MAX;
    let status = unsafe { shootout_audit_deviation_count(5, 4, 0.75, 0.6, &mut count) };
    assert_eq!(status, ShootoutStatus::Ok);
    assert_eq!(count, 0);
}

#[test]
fn sudden_death_closed_forms() {
    let mut win = 0.0f64;
    let mut rounds = 0.0f64;
    let status = unsafe { shootout_sudden_death(0.75, 0.6, &mut win, &mut rounds) };
    assert_eq!(status, ShootoutStatus::Ok);
    assert!((win - 2.0 / 3.0).abs() < 1e-15);
    assert!((rounds - 1.0 / 0.45).abs() < 1e-12);
}

#[test]
fn simulate_is_deterministic_across_calls() {
    let mut first = ShootoutEstimate {
        a_win_freq: 0.0,
        mean_rounds: 0.0,
        ci95_halfwidth_winfreq: 0.0,
        unresolved_count: u64::MAX,
    };
    let status = unsafe {
        shootout_simulate(
            5,
            4,
            0.75,
            0.6,
            ShootoutModel::RoundBased,
            20_000,
            42,
            10_000,
            &mut first,
        )
    };
    assert_eq!(status, ShootoutStatus::Ok);
    assert!((first.a_win_freq - 0.5).abs() < 0.02);
    assert_eq!(first.unresolved_count, 0);

    let mut second = first;
    second.a_win_freq = -1.0;
    let status = unsafe {
        shootout_simulate(
            5,
            4,
            0.75,
            0.6,
            ShootoutModel::RoundBased,
            20_000,
            42,
            10_000,
            &mut second,
        )
    };
    assert_eq!(status, ShootoutStatus::Ok);
    assert_eq!(first.a_win_freq, second.a_win_freq);
    assert_eq!(first.mean_rounds, second.mean_rounds);

    let status = unsafe {
        shootout_simulate(
            5,
            4,
            0.75,
            0.6,
            ShootoutModel::Sequential,
            0,
            42,
            10_000,
            &mut second,
        )
    };
    assert_eq!(status, ShootoutStatus::InvalidArgument);
}

#[test]
fn solution_handle_exposes_state_values() {
    let mut handle: *mut ShootoutSolution = ptr::null_mut();
    let status = unsafe { shootout_solution_new(5, 4, 0.75, 0.6, &mut handle) };
    assert_eq!(status, ShootoutStatus::Ok);
    assert!(!handle.is_null());

    let p_a = unsafe { shootout_solution_p_a_win(handle) };
    let p_b = unsafe { shootout_solution_p_b_win(handle) };
    assert!((p_a + p_b - 1.0).abs() < 1e-12);
    assert!((unsafe { shootout_solution_expected_rounds(handle) } - 6.06).abs() < 0.01);

    let mut win = 0.0f64;
    let mut remaining = 0.0f64;
    let status = unsafe { shootout_solution_state_value(handle, 5, 4, &mut win, &mut remaining) };
    assert_eq!(status, ShootoutStatus::Ok);
    assert!((win - 2.0 / 3.0).abs() < 1e-15);
    assert!((remaining - 1.0 / 0.45).abs() < 1e-12);

    let status = unsafe { shootout_solution_state_value(handle, 6, 0, &mut win, &mut remaining) };
    assert_eq!(status, ShootoutStatus::OutOfRange);

    unsafe { shootout_solution_free(handle) };
    assert!(unsafe { shootout_solution_p_a_win(ptr::null()) }.is_nan());
    unsafe { shootout_solution_free(ptr::null_mut()) };
}

#[test]
fn sweep_handle_round_trips_rows() {
    let mut handle: *mut ShootoutSweep = ptr::null_mut();
    let status = unsafe { shootout_sweep_new(5, 4, 0.75, 101, &mut handle) };
    assert_eq!(status, ShootoutStatus::Ok);
    assert_eq!(unsafe { shootout_sweep_len(handle) }, 101);

    let mut row = ShootoutSweepRow {
        q: 0.0,
        p_a: 0.0,
        p_b: 0.0,
        er: 0.0,
        q_a_seq: 0.0,
        er_seq: 0.0,
    };
    let status = unsafe { shootout_sweep_row(handle, 0, &mut row) };
    assert_eq!(status, ShootoutStatus::Ok);
    assert!((row.q - 0.005).abs() < 1e-12);
    assert!((row.p_a + row.p_b - 1.0).abs() < 1e-9);

    let status = unsafe { shootout_sweep_row(handle, 101, &mut row) };
    assert_eq!(status, ShootoutStatus::OutOfRange);

    unsafe { shootout_sweep_free(handle) };
    assert_eq!(unsafe { shootout_sweep_len(ptr::null()) }, 0);

    let mut bad: *mut ShootoutSweep = ptr::null_mut();
    let status = unsafe { shootout_sweep_new(5, 4, 0.75, 1, &mut bad) };
    assert_eq!(status, ShootoutStatus::InvalidArgument);
    assert!(bad.is_null());
}

#[test]
fn version_string_is_static_and_nul_terminated() {
    let version = shootout_version();
    assert!(!version.is_null());
    let text = unsafe { CStr::from_ptr(version) }.to_str().unwrap();
    assert_eq!(text, env!("CARGO_PKG_VERSION"));
}

//! Analysis toolkit for handicapped penalty shootouts.
//!
//! The first kicker A needs `m` goals, the second kicker B needs `n < m`;
//! verdicts fall at the end of each round and a `(m, n)` tie triggers sudden
//! death. The crate computes each team's win probability and the expected
//! shootout length three mutually cross-validating ways:
//!
//! - [`chain`]: exact finite-state sweeps (the reference), plus the (2, 1)
//!   closed forms, the sequential alternating-kick variant and a
//!   strategyproofness audit;
//! - [`series`]: direct evaluation of the round-indexed infinite series with
//!   certified truncation bounds;
//! - [`sim`]: seeded, reproducible Monte Carlo.
//!
//! [`balance`] layers root-finding on top: the balancing probability `q*(p)`
//! that equalizes the two teams, sweeps over `q`, and a search over target
//! pairs `(m, n)`.

pub mod balance;
pub mod chain;
pub mod error;
pub mod model;
pub mod series;
pub mod sim;

pub use balance::{
    BalanceResult, HandicapRank, SweepRow, balancing_probability, default_q_grid, handicap_search,
    sweep_q,
};
pub use chain::{
    AuditState, Deviation, DeviationReport, ExactSolution, MidGameValues21, SequentialSolution,
    StateValue, expected_rounds_21, solve_round_model, solve_sequential_model,
    strategyproofness_audit, sudden_death_expected_rounds, sudden_death_win_prob, win_prob_21,
    win_prob_21_at_1_0,
};
pub use error::Error;
pub use model::{
    Outcome, Phase, RoundVerdict, RuleParams, ScoreState, Team, Transcript, adjudicate_round,
    adjudicate_sudden_death, replay,
};
pub use series::{
    SERIES_ROUND_CAP, SeriesResult, binomial_cdf, er_series, negative_binomial_round_pmf,
    pa_series, pb_series, running_tail_bound,
};
pub use sim::{
    BatchEstimate, Model, SequentialTranscript, SimConfig, estimate, render_sequential_transcript,
    render_transcript, simulate_one, simulate_one_sequential, trial_rng,
};

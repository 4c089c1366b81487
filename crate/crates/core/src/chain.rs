//! Exact finite-state solvers.
//!
//! The round-based game is an absorbing chain over score pairs `(a, b)` with
//! `a < m`, `b < n`. One round moves `(a, b)` to `(a+1, b)`, `(a+1, b+1)`,
//! `(a, b+1)` or back to itself with probabilities `p(1-q)`, `pq`, `(1-p)q`
//! and `(1-p)(1-q)`. Self-loops are folded analytically (divide by
//! `1 - (1-p)(1-q)`), so the sweep over the grid is finite and exact; the
//! `(m, n)` corner takes its value from the sudden-death closed forms rather
//! than any iteration.
//!
//! This module is the reference the series evaluator and the Monte Carlo
//! simulator are validated against.

use std::collections::BTreeMap;

use crate::error::{Error, check_probability};
use crate::model::{Phase, RuleParams, Team};

/// Exact win probabilities and expected length of the round-based game.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactSolution {
    pub p_a_win: f64,
    /// Computed by its own boundary-value sweep, not as `1 - p_a_win`, so the
    /// normalization check is meaningful.
    pub p_b_win: f64,
    /// Expected rounds including the sudden-death segment.
    pub expected_rounds: f64,
    /// Per-score values: A's win probability and the expected remaining
    /// rounds, for every `(a, b)` with `a <= m`, `b <= n`. Absorbing scores
    /// carry their boundary values; `(m, n)` carries the sudden-death values.
    pub state_values: BTreeMap<(u32, u32), StateValue>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateValue {
    pub a_win_prob: f64,
    pub expected_remaining_rounds: f64,
}

/// Win probability and expected length when the teams alternate single kicks
/// and the first team at its target wins (no sudden death can arise).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SequentialSolution {
    pub q_a_win: f64,
    pub expected_kicks: f64,
    /// `expected_kicks / 2`; half-rounds occur when the game ends on A's kick.
    pub expected_rounds: f64,
}

/// A decision point examined by the strategyproofness audit.
///
/// `a_scored` is `None` when A is about to kick (scores are the round-start
/// counts) and `Some(outcome)` when B is about to kick having observed A's
/// outcome (scores already include A's kick). Sudden-death states carry the
/// entry score `(m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditState {
    pub phase: Phase,
    pub a_goals: u32,
    pub b_goals: u32,
    pub a_scored: Option<bool>,
}

impl std::fmt::Display for AuditState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let phase = match self.phase {
            Phase::Regulation => "regulation",
            Phase::SuddenDeath => "sudden death",
        };
        match self.a_scored {
            None => write!(f, "{phase} ({}, {}), A to kick", self.a_goals, self.b_goals),
            Some(scored) => write!(
                f,
                "{phase} ({}, {}) after A {}, B to kick",
                self.a_goals,
                self.b_goals,
                if scored { "scored" } else { "missed" }
            ),
        }
    }
}

/// One profitable deliberate miss. Values are the kicking team's own win
/// probability, so `deviation_value > honest_value` always reads as a gain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Deviation {
    pub state: AuditState,
    pub team: Team,
    pub honest_value: f64,
    pub deviation_value: f64,
}

/// Outcome of the strategyproofness audit; expected to be empty.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DeviationReport {
    pub profitable_deviations: Vec<Deviation>,
}

impl DeviationReport {
    pub fn is_empty(&self) -> bool {
        self.profitable_deviations.is_empty()
    }
}

/// Probability that the first kicker wins a sudden-death segment,
/// `p(1-q) / (p + q - 2pq)`.
pub fn sudden_death_win_prob(p: f64, q: f64) -> Result<f64, Error> {
    check_probability("p", p)?;
    check_probability("q", q)?;
    Ok(sd_win_raw(p, q))
}

/// Expected number of sudden-death rounds, `1 / (p + q - 2pq)`.
pub fn sudden_death_expected_rounds(p: f64, q: f64) -> Result<f64, Error> {
    check_probability("p", p)?;
    check_probability("q", q)?;
    Ok(1.0 / decision_rate(p, q))
}

/// Closed-form win probability of the first kicker under the (2, 1) rule,
/// `p^2 (1-q)^2 / ((p + q - 2pq)(p + q - pq))`.
pub fn win_prob_21(p: f64, q: f64) -> Result<f64, Error> {
    check_probability("p", p)?;
    check_probability("q", q)?;
    let d = decision_rate(p, q);
    Ok(p * p * (1.0 - q) * (1.0 - q) / (d * (p + q - p * q)))
}

/// Closed-form expected rounds under the (2, 1) rule,
/// `(2p + q - 3pq) / ((p + q - 2pq)(p + q - pq))`.
pub fn expected_rounds_21(p: f64, q: f64) -> Result<f64, Error> {
    check_probability("p", p)?;
    check_probability("q", q)?;
    let d = decision_rate(p, q);
    Ok((2.0 * p + q - 3.0 * p * q) / (d * (p + q - p * q)))
}

/// Closed-form (2, 1) state values at score (1, 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MidGameValues21 {
    /// A's win probability with A about to kick at (1, 0): `p(1-q) / (p+q-2pq)`.
    pub a_to_kick: f64,
    /// A's win probability with B about to kick at (1, 0): `p(1-q)^2 / (p+q-2pq)`.
    pub b_to_kick: f64,
}

pub fn win_prob_21_at_1_0(p: f64, q: f64) -> Result<MidGameValues21, Error> {
    check_probability("p", p)?;
    check_probability("q", q)?;
    let d = decision_rate(p, q);
    Ok(MidGameValues21 {
        a_to_kick: p * (1.0 - q) / d,
        b_to_kick: p * (1.0 - q) * (1.0 - q) / d,
    })
}

pub(crate) fn decision_rate(p: f64, q: f64) -> f64 {
    p + q - 2.0 * p * q
}

pub(crate) fn sd_win_raw(p: f64, q: f64) -> f64 {
    p * (1.0 - q) / decision_rate(p, q)
}

/// Solves the round-based game exactly.
pub fn solve_round_model(params: &RuleParams) -> ExactSolution {
    let m = params.m() as usize;
    let n = params.n() as usize;
    let (p, q) = (params.p(), params.q());

    let sd_a = sd_win_raw(p, q);
    let sd_b = q * (1.0 - p) / decision_rate(p, q);
    let sd_er = 1.0 / decision_rate(p, q);

    let w_up = p * (1.0 - q);
    let w_diag = p * q;
    let w_right = (1.0 - p) * q;
    let advance = p + q - p * q; // 1 - (1-p)(1-q)

    let mut v_a = vec![vec![0.0f64; n + 1]; m + 1];
    let mut v_b = vec![vec![0.0f64; n + 1]; m + 1];
    let mut er = vec![vec![0.0f64; n + 1]; m + 1];
    for cell in v_a[m].iter_mut().take(n) {
        *cell = 1.0;
    }
    for row in v_b.iter_mut().take(m) {
        row[n] = 1.0;
    }
    v_a[m][n] = sd_a;
    v_b[m][n] = sd_b;
    er[m][n] = sd_er;

    for a in (0..m).rev() {
        for b in (0..n).rev() {
            v_a[a][b] =
                (w_up * v_a[a + 1][b] + w_diag * v_a[a + 1][b + 1] + w_right * v_a[a][b + 1])
                    / advance;
            v_b[a][b] =
                (w_up * v_b[a + 1][b] + w_diag * v_b[a + 1][b + 1] + w_right * v_b[a][b + 1])
                    / advance;
            er[a][b] =
                (1.0 + w_up * er[a + 1][b] + w_diag * er[a + 1][b + 1] + w_right * er[a][b + 1])
                    / advance;
        }
    }

    let mut state_values = BTreeMap::new();
    for a in 0..=m {
        for b in 0..=n {
            state_values.insert(
                (a as u32, b as u32),
                StateValue {
                    a_win_prob: v_a[a][b],
                    expected_remaining_rounds: er[a][b],
                },
            );
        }
    }

    ExactSolution {
        p_a_win: v_a[0][0],
        p_b_win: v_b[0][0],
        expected_rounds: er[0][0],
        state_values,
    }
}

/// Solves the sequential (alternating single kicks) game exactly.
///
/// The miss-miss two-cycle between "A to kick" and "B to kick" at the same
/// score is folded analytically, mirroring the self-loop treatment of the
/// round-based sweep.
pub fn solve_sequential_model(params: &RuleParams) -> SequentialSolution {
    let m = params.m() as usize;
    let n = params.n() as usize;
    let (p, q) = (params.p(), params.q());
    let advance = p + q - p * q;

    // va/vb: A's win probability with A (resp. B) to kick at (a, b).
    // ka/kb: expected remaining kicks from the same decision points.
    let mut va = vec![vec![0.0f64; n]; m];
    let mut vb = vec![vec![0.0f64; n]; m];
    let mut ka = vec![vec![0.0f64; n]; m];
    let mut kb = vec![vec![0.0f64; n]; m];

    for a in (0..m).rev() {
        for b in (0..n).rev() {
            let after_a = if a + 1 == m { 1.0 } else { vb[a + 1][b] };
            let after_b = if b + 1 == n { 0.0 } else { va[a][b + 1] };
            va[a][b] = (p * after_a + (1.0 - p) * q * after_b) / advance;
            vb[a][b] = q * after_b + (1.0 - q) * va[a][b];

            let k_after_a = if a + 1 == m { 0.0 } else { kb[a + 1][b] };
            let k_after_b = if b + 1 == n { 0.0 } else { ka[a][b + 1] };
            ka[a][b] = (2.0 - p + p * k_after_a + (1.0 - p) * q * k_after_b) / advance;
            kb[a][b] = 1.0 + q * k_after_b + (1.0 - q) * ka[a][b];
        }
    }

    let expected_kicks = ka[0][0];
    SequentialSolution {
        q_a_win: va[0][0],
        expected_kicks,
        expected_rounds: expected_kicks / 2.0,
    }
}

const AUDIT_TOLERANCE: f64 = 1e-12;
const AUDIT_ITERATION_CAP: u64 = 1_000_000;
const DEVIATION_MARGIN: f64 = 1e-9;

// A's win probability once the round closed at (a, b), reading absorbing
// scores off the boundary.
fn continuation(w: &[Vec<f64>], sd: f64, m: usize, n: usize, a: usize, b: usize) -> f64 {
    if a == m && b == n {
        sd
    } else if a == m {
        1.0
    } else if b == n {
        0.0
    } else {
        w[a][b]
    }
}

// Value iteration to the fixed point of the {honest, deliberate-miss} game.
// Returns A's win probability per round-start score plus the sudden-death
// value under optimal play by both teams.
fn audit_fixed_point(params: &RuleParams) -> Result<(Vec<Vec<f64>>, f64), Error> {
    let m = params.m() as usize;
    let n = params.n() as usize;
    let (p, q) = (params.p(), params.q());

    let mut w = vec![vec![0.0f64; n]; m];
    let mut sd = 0.0f64;

    let mut delta = f64::INFINITY;
    for _ in 0..AUDIT_ITERATION_CAP {
        delta = 0.0f64;

        // B minimizes A's value; a deliberate miss pins the no-goal branch.
        let b1 = (q * sd + (1.0 - q) * 1.0).min(1.0);
        let b0 = ((1.0 - q) * sd).min(sd);
        let sd_next = (p * b1 + (1.0 - p) * b0).max(b0);
        delta = delta.max((sd_next - sd).abs());

        let mut w_next = vec![vec![0.0f64; n]; m];
        for a in 0..m {
            for b in 0..n {
                let b_val = |s: usize| -> f64 {
                    let c_score = continuation(&w, sd, m, n, a + s, b + 1);
                    let c_miss = continuation(&w, sd, m, n, a + s, b);
                    (q * c_score + (1.0 - q) * c_miss).min(c_miss)
                };
                let honest = p * b_val(1) + (1.0 - p) * b_val(0);
                let next = honest.max(b_val(0));
                delta = delta.max((next - w[a][b]).abs());
                w_next[a][b] = next;
            }
        }

        sd = sd_next;
        w = w_next;
        if delta < AUDIT_TOLERANCE {
            return Ok((w, sd));
        }
    }
    Err(Error::NoConvergence {
        iteration_cap: AUDIT_ITERATION_CAP,
        delta,
    })
}

/// Checks that no deliberate miss is profitable at any kick.
///
/// Value iteration on the zero-sum game where every kick chooses its success
/// probability from {honest, 0}: A maximizes and B minimizes A's win
/// probability, B kicks knowing A's outcome for the round, and sudden death
/// is part of the same fixed point. At the fixed point every decision node is
/// scanned and any miss that beats honesty by more than `1e-9` is reported.
pub fn strategyproofness_audit(params: &RuleParams) -> Result<DeviationReport, Error> {
    let m = params.m() as usize;
    let n = params.n() as usize;
    let (p, q) = (params.p(), params.q());

    let (w, sd) = audit_fixed_point(params)?;
    let cont = |a: usize, b: usize| continuation(&w, sd, m, n, a, b);
    let b_choice =
        |c_score: f64, c_miss: f64| -> (f64, f64) { (q * c_score + (1.0 - q) * c_miss, c_miss) };

    let mut report = DeviationReport::default();
    let mut record = |state: AuditState, team: Team, honest_a: f64, miss_a: f64| {
        // Stored values are the kicker's own win probability.
        let (honest_value, deviation_value) = match team {
            Team::A => (honest_a, miss_a),
            Team::B => (1.0 - honest_a, 1.0 - miss_a),
        };
        if deviation_value > honest_value + DEVIATION_MARGIN {
            report.profitable_deviations.push(Deviation {
                state,
                team,
                honest_value,
                deviation_value,
            });
        }
    };

    for a in 0..m {
        for b in 0..n {
            for s in 0..=1usize {
                let (honest, miss) = b_choice(cont(a + s, b + 1), cont(a + s, b));
                record(
                    AuditState {
                        phase: Phase::Regulation,
                        a_goals: (a + s) as u32,
                        b_goals: b as u32,
                        a_scored: Some(s == 1),
                    },
                    Team::B,
                    honest,
                    miss,
                );
            }
            let b_val = |s: usize| -> f64 {
                let (h, mi) = b_choice(cont(a + s, b + 1), cont(a + s, b));
                h.min(mi)
            };
            record(
                AuditState {
                    phase: Phase::Regulation,
                    a_goals: a as u32,
                    b_goals: b as u32,
                    a_scored: None,
                },
                Team::A,
                p * b_val(1) + (1.0 - p) * b_val(0),
                b_val(0),
            );
        }
    }

    let sd_state = |a_scored: Option<bool>| AuditState {
        phase: Phase::SuddenDeath,
        a_goals: params.m(),
        b_goals: params.n(),
        a_scored,
    };
    let (sd_h1, sd_m1) = b_choice(sd, 1.0);
    let (sd_h0, sd_m0) = b_choice(0.0, sd);
    record(sd_state(Some(true)), Team::B, sd_h1, sd_m1);
    record(sd_state(Some(false)), Team::B, sd_h0, sd_m0);
    let b1 = sd_h1.min(sd_m1);
    let b0 = sd_h0.min(sd_m0);
    record(sd_state(None), Team::A, p * b1 + (1.0 - p) * b0, b0);

    Ok(report)
}

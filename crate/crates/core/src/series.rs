//! Direct evaluation of the closed-form round-indexed series.
//!
//! A's win probability is a sum over the decision round `r >= m` of the
//! negative-binomial chance that A's m-th goal lands exactly on round `r`,
//! times the chance B is still short of `n` (plus the boundary case where B
//! reaches exactly `n` on the same round and the game moves to sudden death).
//! B's probability mirrors it with an extra finite block `r = n .. m-1` where
//! B wins outright, and the expected-rounds series weights the same events by
//! `r` (or `r + 1/(p+q-2pq)` for sudden death).
//!
//! Truncation control: the game is still undecided after round `r` only if A
//! has fewer than `m` goals in `r` rounds, so the binomial left tail
//! `P[Bin(r, p) <= m-1]` bounds all omitted probability mass. For the
//! expected-rounds series the residual length from any live state is
//! stochastically dominated by the waiting time for A's m-th goal (mean
//! `m/p`), which gives the closed-form envelope
//! `tail(r) * (r + 1/(p+q-2pq) + m/p)`.

use crate::chain::{decision_rate, sd_win_raw};
use crate::error::Error;
use crate::model::RuleParams;

/// Hard cap on the summation round; reaching it before the requested
/// tolerance yields [`Error::TailTolerance`].
pub const SERIES_ROUND_CAP: u32 = 10_000;

/// A truncated series value together with its certificate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: f64,
    /// Last round included in the sum.
    pub truncation_round: u32,
    /// Guaranteed upper bound on the omitted contribution; at most the
    /// requested epsilon on success.
    pub tail_bound: f64,
}

fn check_epsilon(epsilon: f64) -> Result<(), Error> {
    if epsilon.is_finite() && epsilon > 0.0 {
        Ok(())
    } else {
        Err(Error::EpsilonDomain(epsilon))
    }
}

/// `P[Bin(trials, success) <= up_to]`, evaluated by forward term recursion.
pub fn binomial_cdf(trials: u32, up_to: u32, success: f64) -> f64 {
    if up_to >= trials {
        return 1.0;
    }
    let fail = 1.0 - success;
    let ratio = success / fail;
    let mut term = fail.powi(trials as i32);
    let mut acc = term;
    for i in 0..up_to {
        term *= (trials - i) as f64 / (i + 1) as f64 * ratio;
        acc += term;
    }
    acc.min(1.0)
}

/// Probability that the `goals`-th success lands exactly on round `round`:
/// `C(round-1, goals-1) s^goals (1-s)^(round-goals)`. Zero when
/// `round < goals`.
pub fn negative_binomial_round_pmf(round: u32, goals: u32, success: f64) -> f64 {
    if goals == 0 || round < goals {
        return 0.0;
    }
    let mut value = success.powi(goals as i32) * (1.0 - success).powi((round - goals) as i32);
    for j in 1..goals {
        value *= (round - goals + j) as f64 / j as f64;
    }
    value
}

/// Upper bound on the probability the shootout is still in regulation after
/// round `r`: the A-side binomial left tail `P[Bin(r, p) <= m-1]`. Strictly
/// decreasing in `r` and never above 1.
pub fn running_tail_bound(params: &RuleParams, r: u32) -> f64 {
    binomial_cdf(r, params.m() - 1, params.p())
}

/// A's win probability as a truncated series, with `tail_bound < epsilon`
/// guaranteed on success.
pub fn pa_series(params: &RuleParams, epsilon: f64) -> Result<SeriesResult, Error> {
    check_epsilon(epsilon)?;
    let (m, n) = (params.m(), params.n());
    let (p, q) = (params.p(), params.q());
    let sd_a = sd_win_raw(p, q);

    let mut value = 0.0f64;
    let mut negbin_a = p.powi(m as i32);
    let mut r = m;
    loop {
        let b_short = binomial_cdf(r, n - 1, q);
        let b_exact = negative_binomial_round_pmf(r, n, q);
        value += negbin_a * (b_short + b_exact * sd_a);

        let bound = binomial_cdf(r, m - 1, p);
        if bound < epsilon {
            return Ok(SeriesResult {
                value,
                truncation_round: r,
                tail_bound: bound,
            });
        }
        if r >= SERIES_ROUND_CAP {
            return Err(Error::TailTolerance {
                requested: epsilon,
                achieved: bound,
                round_cap: SERIES_ROUND_CAP,
            });
        }
        r += 1;
        negbin_a *= (r - 1) as f64 / (r - m) as f64 * (1.0 - p);
    }
}

/// B's win probability as a truncated series: the finite block
/// `r = n .. m-1` where B wins outright, plus the guarded tail `r >= m`.
pub fn pb_series(params: &RuleParams, epsilon: f64) -> Result<SeriesResult, Error> {
    check_epsilon(epsilon)?;
    let (m, n) = (params.m(), params.n());
    let (p, q) = (params.p(), params.q());
    let sd_b = q * (1.0 - p) / decision_rate(p, q);

    let mut value = 0.0f64;
    let mut negbin_b = q.powi(n as i32);
    let mut negbin_a = p.powi(m as i32);
    let mut r = n;
    loop {
        if r < m {
            value += negbin_b;
        } else {
            let a_short = binomial_cdf(r, m - 1, p);
            value += negbin_b * (a_short + negbin_a * sd_b);
            if a_short < epsilon {
                return Ok(SeriesResult {
                    value,
                    truncation_round: r,
                    tail_bound: a_short,
                });
            }
            if r >= SERIES_ROUND_CAP {
                return Err(Error::TailTolerance {
                    requested: epsilon,
                    achieved: a_short,
                    round_cap: SERIES_ROUND_CAP,
                });
            }
        }
        r += 1;
        negbin_b *= (r - 1) as f64 / (r - n) as f64 * (1.0 - q);
        if r > m {
            negbin_a *= (r - 1) as f64 / (r - m) as f64 * (1.0 - p);
        }
    }
}

/// Expected rounds as a truncated series of the three event families
/// (A wins, B wins, sudden death entered), each weighted by its round count.
///
/// The inner sum of the B-wins term runs to `min(r, m-1)`: up to round
/// `m - 1` a count above `r` is impossible, and from `m` on B's win requires
/// A below `m`. (For `r < m` the inner sum is then identically 1.)
pub fn er_series(params: &RuleParams, epsilon: f64) -> Result<SeriesResult, Error> {
    check_epsilon(epsilon)?;
    let (m, n) = (params.m(), params.n());
    let (p, q) = (params.p(), params.q());
    let sd_rounds = 1.0 / decision_rate(p, q);
    let residual_rounds = m as f64 / p;

    let mut value = 0.0f64;
    let mut negbin_b = q.powi(n as i32);
    let mut negbin_a = p.powi(m as i32);
    let mut r = n;
    loop {
        let a_short_capped = binomial_cdf(r, (m - 1).min(r), p);
        value += r as f64 * negbin_b * a_short_capped;

        if r >= m {
            let b_short = binomial_cdf(r, n - 1, q);
            value += r as f64 * negbin_a * b_short;
            value += (r as f64 + sd_rounds) * negbin_a * negative_binomial_round_pmf(r, n, q);

            let tail = binomial_cdf(r, m - 1, p);
            let envelope = tail * (r as f64 + sd_rounds + residual_rounds);
            if envelope < epsilon {
                return Ok(SeriesResult {
                    value,
                    truncation_round: r,
                    tail_bound: envelope,
                });
            }
            if r >= SERIES_ROUND_CAP {
                return Err(Error::TailTolerance {
                    requested: epsilon,
                    achieved: envelope,
                    round_cap: SERIES_ROUND_CAP,
                });
            }
        }
        r += 1;
        negbin_b *= (r - 1) as f64 / (r - n) as f64 * (1.0 - q);
        if r > m {
            negbin_a *= (r - 1) as f64 / (r - m) as f64 * (1.0 - p);
        }
    }
}

use thiserror::Error;

/// Errors surfaced by the solvers, the series evaluator and the simulator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("goal targets must be positive (got m={m}, n={n})")]
    ZeroTarget { m: u32, n: u32 },

    #[error("the first kicker's target must exceed the second kicker's (got m={m}, n={n})")]
    TargetOrder { m: u32, n: u32 },

    #[error("goal target {m} exceeds the supported limit of {limit}")]
    TargetTooLarge { m: u32, limit: u32 },

    #[error("{name} must lie strictly inside (0, 1), got {value}")]
    ProbabilityDomain { name: &'static str, value: f64 },

    #[error("score state violates the rule invariants: {reason} (a={a}, b={b}, round={round})")]
    InvalidScoreState {
        reason: &'static str,
        a: u32,
        b: u32,
        round: u32,
    },

    #[error("epsilon must be positive and finite, got {0}")]
    EpsilonDomain(f64),

    #[error("tolerance must be positive and finite, got {0}")]
    ToleranceDomain(f64),

    #[error(
        "requested tail tolerance {requested:e} not reached by round {round_cap} (best bound {achieved:e})"
    )]
    TailTolerance {
        requested: f64,
        achieved: f64,
        round_cap: u32,
    },

    #[error(
        "balance residual does not change sign on [{lo}, {hi}] (f(lo)={f_lo:.6e}, f(hi)={f_hi:.6e})"
    )]
    BracketFailure {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error(
        "value iteration did not converge within {iteration_cap} iterations (last delta {delta:e})"
    )]
    NoConvergence { iteration_cap: u64, delta: f64 },

    #[error("grid must hold at least {required} points, got {got}")]
    GridTooSmall { required: usize, got: usize },

    #[error("trial count must be at least 1")]
    ZeroTrials,

    #[error("sudden-death round cap must be at least 1")]
    ZeroRoundCap,

    #[error("m_max must be at least 2 so that some pair with m > n exists, got {0}")]
    SearchRangeTooSmall(u32),
}

pub(crate) fn check_probability(name: &'static str, value: f64) -> Result<(), Error> {
    if value.is_finite() && value > 0.0 && value < 1.0 {
        Ok(())
    } else {
        Err(Error::ProbabilityDomain { name, value })
    }
}

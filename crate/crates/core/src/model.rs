//! Rule definition shared by every solver and the simulator.
//!
//! A shootout instance is the tuple `(m, n, p, q)`: the first kicker A needs
//! `m` goals, the second kicker B needs `n < m` goals, and their per-kick
//! success probabilities are `p` and `q`. Kicks happen in rounds (A kicks,
//! then B kicks) and verdicts are checked at the end of each round:
//! A wins at `a = m, b < n`, B wins at `b = n, a < m`, and `(m, n)` sends the
//! game to sudden death, where the first round in which exactly one team
//! scores decides the winner.
//!
//! Adjudication is end-of-round throughout. B always takes its kick even when
//! the kick cannot change the verdict; this keeps the round structure uniform
//! and leaves every probability unchanged because B's kick closes the round.

use crate::error::{Error, check_probability};

/// The tuple `(m, n, p, q)` defining a shootout instance.
///
/// Construction enforces `m > n >= 1` and `0 < p, q < 1`, so a value of this
/// type is always solvable (the sudden-death decision rate `p + q - 2pq` is
/// strictly positive).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RuleParams {
    m: u32,
    n: u32,
    p: f64,
    q: f64,
}

impl RuleParams {
    /// Largest accepted goal target; keeps every solver's state space small.
    pub const MAX_TARGET: u32 = 1_000;

    pub fn new(m: u32, n: u32, p: f64, q: f64) -> Result<Self, Error> {
        if m == 0 || n == 0 {
            return Err(Error::ZeroTarget { m, n });
        }
        if m <= n {
            return Err(Error::TargetOrder { m, n });
        }
        if m > Self::MAX_TARGET {
            return Err(Error::TargetTooLarge {
                m,
                limit: Self::MAX_TARGET,
            });
        }
        check_probability("p", p)?;
        check_probability("q", q)?;
        Ok(Self { m, n, p, q })
    }

    /// Goals the first kicker needs.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Goals the second kicker needs.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Per-kick success probability of the first kicker.
    pub fn p(&self) -> f64 {
        self.p
    }

    /// Per-kick success probability of the second kicker.
    pub fn q(&self) -> f64 {
        self.q
    }
}

/// Which segment of the shootout a state belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Phase {
    Regulation,
    SuddenDeath,
}

/// Running goal counts at the end of a round.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScoreState {
    pub a_goals: u32,
    pub b_goals: u32,
    /// Current round number, starting at 1.
    pub round: u32,
    pub phase: Phase,
}

/// End-of-round adjudication result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoundVerdict {
    AWins,
    BWins,
    GoToSuddenDeath,
    Continue,
}

/// Final result of a (possibly truncated) shootout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    AWins,
    BWins,
    /// The run was cut off by the simulator's round cap before a verdict.
    Unresolved,
}

/// One of the two teams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Team {
    A,
    B,
}

impl std::fmt::Display for Team {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Team::A => write!(f, "A"),
            Team::B => write!(f, "B"),
        }
    }
}

/// Per-round kick record of a single shootout, kept replayable: feeding
/// `rounds` and `sd_rounds` back through [`replay`] reproduces `result` and
/// `final_score`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    /// Regulation rounds as `(a_scored, b_scored)`.
    pub rounds: Vec<(bool, bool)>,
    /// Sudden-death rounds; non-empty only when regulation ended at `(m, n)`.
    pub sd_rounds: Vec<(bool, bool)>,
    pub result: Outcome,
    /// Cumulative goals including sudden death.
    pub final_score: (u32, u32),
}

/// Applies the end-of-round verdict to a regulation state whose counts
/// already include both kicks of the current round.
pub fn adjudicate_round(params: &RuleParams, state: &ScoreState) -> Result<RoundVerdict, Error> {
    let invalid = |reason| Error::InvalidScoreState {
        reason,
        a: state.a_goals,
        b: state.b_goals,
        round: state.round,
    };
    if state.phase != Phase::Regulation {
        return Err(invalid("phase must be regulation"));
    }
    if state.round == 0 {
        return Err(invalid("round numbering starts at 1"));
    }
    if state.a_goals > params.m() || state.b_goals > params.n() {
        return Err(invalid("goal count exceeds its target"));
    }
    if state.a_goals > state.round || state.b_goals > state.round {
        return Err(invalid("goal count exceeds the round count"));
    }
    Ok(
        match (state.a_goals == params.m(), state.b_goals == params.n()) {
            (true, false) => RoundVerdict::AWins,
            (false, true) => RoundVerdict::BWins,
            (true, true) => RoundVerdict::GoToSuddenDeath,
            (false, false) => RoundVerdict::Continue,
        },
    )
}

/// Decides one sudden-death round: the round is decisive exactly when one
/// team scores and the other does not.
pub fn adjudicate_sudden_death(a_scored: bool, b_scored: bool) -> RoundVerdict {
    match (a_scored, b_scored) {
        (true, false) => RoundVerdict::AWins,
        (false, true) => RoundVerdict::BWins,
        _ => RoundVerdict::Continue,
    }
}

/// Rebuilds the canonical [`Transcript`] from raw kick outcomes.
///
/// Rejects sequences that keep kicking after a verdict and sudden-death kicks
/// that do not follow a `(m, n)` regulation finish. A sequence that stops
/// before any verdict replays to [`Outcome::Unresolved`].
pub fn replay(
    params: &RuleParams,
    rounds: &[(bool, bool)],
    sd_rounds: &[(bool, bool)],
) -> Result<Transcript, Error> {
    let mut a = 0u32;
    let mut b = 0u32;
    let mut verdict = RoundVerdict::Continue;
    for (idx, &(ka, kb)) in rounds.iter().enumerate() {
        let round = idx as u32 + 1;
        if verdict != RoundVerdict::Continue {
            return Err(Error::InvalidScoreState {
                reason: "kicks recorded after the regulation verdict",
                a,
                b,
                round,
            });
        }
        a += ka as u32;
        b += kb as u32;
        verdict = adjudicate_round(
            params,
            &ScoreState {
                a_goals: a,
                b_goals: b,
                round,
                phase: Phase::Regulation,
            },
        )?;
    }

    let finish = |result, a, b| Transcript {
        rounds: rounds.to_vec(),
        sd_rounds: sd_rounds.to_vec(),
        result,
        final_score: (a, b),
    };

    match verdict {
        RoundVerdict::AWins | RoundVerdict::BWins | RoundVerdict::Continue => {
            if !sd_rounds.is_empty() {
                return Err(Error::InvalidScoreState {
                    reason: "sudden-death kicks without a (m, n) regulation finish",
                    a,
                    b,
                    round: rounds.len() as u32,
                });
            }
            let result = match verdict {
                RoundVerdict::AWins => Outcome::AWins,
                RoundVerdict::BWins => Outcome::BWins,
                _ => Outcome::Unresolved,
            };
            Ok(finish(result, a, b))
        }
        RoundVerdict::GoToSuddenDeath => {
            let mut result = Outcome::Unresolved;
            for (idx, &(ka, kb)) in sd_rounds.iter().enumerate() {
                if result != Outcome::Unresolved {
                    return Err(Error::InvalidScoreState {
                        reason: "kicks recorded after sudden death was decided",
                        a,
                        b,
                        round: (rounds.len() + idx) as u32,
                    });
                }
                a += ka as u32;
                b += kb as u32;
                match adjudicate_sudden_death(ka, kb) {
                    RoundVerdict::AWins => result = Outcome::AWins,
                    RoundVerdict::BWins => result = Outcome::BWins,
                    _ => {}
                }
            }
            Ok(finish(result, a, b))
        }
    }
}

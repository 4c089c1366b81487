//! Seeded Monte Carlo simulation of both game variants.
//!
//! Reproducibility contract: trial `i` of a batch draws from
//! `ChaCha8Rng::seed_from_u64(seed)` switched to stream `i` via
//! `set_stream(i)`, and a kick succeeds exactly when the next `f64` drawn
//! with `RngExt::random` is below the kicker's success probability. Kicks are
//! drawn in game order (A then B within a round; alternating kicks in the
//! sequential variant). Trials therefore have independent, order-free
//! streams: batches can run on any number of threads and still produce
//! bit-identical estimates, because per-trial contributions are integers
//! merged additively.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Error;
use crate::model::{
    Outcome, Phase, RoundVerdict, RuleParams, ScoreState, Transcript, adjudicate_round,
    adjudicate_sudden_death,
};

/// Which game a batch simulates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    RoundBased,
    Sequential,
}

/// Inputs of a simulation batch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimConfig {
    pub params: RuleParams,
    /// Consulted by [`estimate`]; the single-trial entry points pick the
    /// game explicitly.
    pub model: Model,
    pub trials: u64,
    pub seed: u64,
    /// Sudden death stops after this many rounds and the trial reports
    /// [`Outcome::Unresolved`]. The same cap also bounds regulation, which
    /// in theory can stall on repeated double misses.
    pub sd_round_cap: u32,
}

/// Fixed safety cap on regulation rounds; `sd_round_cap` stays a pure
/// sudden-death knob so small caps cannot truncate regulation play.
const REGULATION_ROUND_CAP: u32 = 1_000_000;

impl SimConfig {
    pub const DEFAULT_SD_ROUND_CAP: u32 = 10_000;

    pub fn new(
        params: RuleParams,
        model: Model,
        trials: u64,
        seed: u64,
        sd_round_cap: u32,
    ) -> Result<Self, Error> {
        if trials == 0 {
            return Err(Error::ZeroTrials);
        }
        if sd_round_cap == 0 {
            return Err(Error::ZeroRoundCap);
        }
        Ok(Self {
            params,
            model,
            trials,
            seed,
            sd_round_cap,
        })
    }
}

/// Batch summary. Frequencies and means cover resolved trials only;
/// cap-truncated trials are counted in `unresolved_count`, never imputed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BatchEstimate {
    pub a_win_freq: f64,
    pub mean_rounds: f64,
    pub ci95_halfwidth_winfreq: f64,
    pub unresolved_count: u64,
}

/// Kick-by-kick record of one sequential-variant shootout. Kicks alternate
/// starting with A; the game stops mid-round when a target is reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequentialTranscript {
    pub kicks: Vec<bool>,
    pub result: Outcome,
    pub final_score: (u32, u32),
}

/// The per-trial generator: key from `seed`, stream from `trial_index`.
pub fn trial_rng(seed: u64, trial_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial_index);
    rng
}

/// Runs one round-based shootout and records it kick by kick.
pub fn simulate_one(config: &SimConfig, trial_index: u64) -> Transcript {
    let params = &config.params;
    let (p, q) = (params.p(), params.q());
    let mut rng = trial_rng(config.seed, trial_index);

    let mut rounds = Vec::new();
    let mut a = 0u32;
    let mut b = 0u32;
    let verdict = loop {
        let ka = rng.random::<f64>() < p;
        let kb = rng.random::<f64>() < q;
        a += ka as u32;
        b += kb as u32;
        rounds.push((ka, kb));
        let verdict = adjudicate_round(
            params,
            &ScoreState {
                a_goals: a,
                b_goals: b,
                round: rounds.len() as u32,
                phase: Phase::Regulation,
            },
        )
        .expect("simulated state is valid by construction");
        if verdict != RoundVerdict::Continue {
            break verdict;
        }
        if rounds.len() as u32 >= REGULATION_ROUND_CAP {
            return Transcript {
                rounds,
                sd_rounds: Vec::new(),
                result: Outcome::Unresolved,
                final_score: (a, b),
            };
        }
    };

    let (result, sd_rounds) = match verdict {
        RoundVerdict::AWins => (Outcome::AWins, Vec::new()),
        RoundVerdict::BWins => (Outcome::BWins, Vec::new()),
        RoundVerdict::GoToSuddenDeath => {
            let mut sd_rounds = Vec::new();
            let mut result = Outcome::Unresolved;
            for _ in 0..config.sd_round_cap {
                let ka = rng.random::<f64>() < p;
                let kb = rng.random::<f64>() < q;
                a += ka as u32;
                b += kb as u32;
                sd_rounds.push((ka, kb));
                match adjudicate_sudden_death(ka, kb) {
                    RoundVerdict::AWins => {
                        result = Outcome::AWins;
                        break;
                    }
                    RoundVerdict::BWins => {
                        result = Outcome::BWins;
                        break;
                    }
                    _ => {}
                }
            }
            (result, sd_rounds)
        }
        RoundVerdict::Continue => unreachable!(),
    };

    Transcript {
        rounds,
        sd_rounds,
        result,
        final_score: (a, b),
    }
}

/// Runs one sequential-variant shootout (alternating kicks, first team at
/// its target wins).
pub fn simulate_one_sequential(config: &SimConfig, trial_index: u64) -> SequentialTranscript {
    let params = &config.params;
    let (m, n) = (params.m(), params.n());
    let (p, q) = (params.p(), params.q());
    let mut rng = trial_rng(config.seed, trial_index);

    let kick_cap = 2 * config.sd_round_cap as u64;
    let mut kicks = Vec::new();
    let mut a = 0u32;
    let mut b = 0u32;
    let mut result = Outcome::Unresolved;
    while (kicks.len() as u64) < kick_cap {
        let a_turn = kicks.len().is_multiple_of(2);
        let prob = if a_turn { p } else { q };
        let scored = rng.random::<f64>() < prob;
        kicks.push(scored);
        if scored {
            if a_turn {
                a += 1;
                if a == m {
                    result = Outcome::AWins;
                    break;
                }
            } else {
                b += 1;
                if b == n {
                    result = Outcome::BWins;
                    break;
                }
            }
        }
    }

    SequentialTranscript {
        kicks,
        result,
        final_score: (a, b),
    }
}

// Allocation-free twin of `simulate_one`; identical draw order. Returns the
// outcome and the total rounds played (regulation plus sudden death).
fn run_round_trial(params: &RuleParams, sd_round_cap: u32, rng: &mut ChaCha8Rng) -> (Outcome, u64) {
    let (m, n) = (params.m(), params.n());
    let (p, q) = (params.p(), params.q());
    let mut a = 0u32;
    let mut b = 0u32;
    let mut rounds = 0u64;
    loop {
        let ka = rng.random::<f64>() < p;
        let kb = rng.random::<f64>() < q;
        a += ka as u32;
        b += kb as u32;
        rounds += 1;
        match (a == m, b == n) {
            (true, false) => return (Outcome::AWins, rounds),
            (false, true) => return (Outcome::BWins, rounds),
            (true, true) => break,
            (false, false) => {
                if rounds >= REGULATION_ROUND_CAP as u64 {
                    return (Outcome::Unresolved, rounds);
                }
            }
        }
    }
    for _ in 0..sd_round_cap {
        let ka = rng.random::<f64>() < p;
        let kb = rng.random::<f64>() < q;
        rounds += 1;
        if ka != kb {
            let winner = if ka { Outcome::AWins } else { Outcome::BWins };
            return (winner, rounds);
        }
    }
    (Outcome::Unresolved, rounds)
}

// Allocation-free twin of `simulate_one_sequential`; returns kicks taken.
fn run_sequential_trial(
    params: &RuleParams,
    sd_round_cap: u32,
    rng: &mut ChaCha8Rng,
) -> (Outcome, u64) {
    let (m, n) = (params.m(), params.n());
    let (p, q) = (params.p(), params.q());
    let kick_cap = 2 * sd_round_cap as u64;
    let mut a = 0u32;
    let mut b = 0u32;
    let mut kicks = 0u64;
    while kicks < kick_cap {
        let a_turn = kicks.is_multiple_of(2);
        let prob = if a_turn { p } else { q };
        let scored = rng.random::<f64>() < prob;
        kicks += 1;
        if scored {
            if a_turn {
                a += 1;
                if a == m {
                    return (Outcome::AWins, kicks);
                }
            } else {
                b += 1;
                if b == n {
                    return (Outcome::BWins, kicks);
                }
            }
        }
    }
    (Outcome::Unresolved, kicks)
}

/// Runs the whole batch and aggregates it. Trials are independent streams,
/// so the reduction is a plain integer sum and the result does not depend on
/// scheduling.
pub fn estimate(config: &SimConfig) -> BatchEstimate {
    let (wins_a, resolved, half_rounds) = (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(config.seed, trial);
            let (outcome, half_rounds) = match config.model {
                Model::RoundBased => {
                    let (outcome, rounds) =
                        run_round_trial(&config.params, config.sd_round_cap, &mut rng);
                    (outcome, 2 * rounds)
                }
                Model::Sequential => {
                    run_sequential_trial(&config.params, config.sd_round_cap, &mut rng)
                }
            };
            match outcome {
                Outcome::AWins => (1u64, 1u64, half_rounds),
                Outcome::BWins => (0, 1, half_rounds),
                Outcome::Unresolved => (0, 0, 0),
            }
        })
        .reduce(
            || (0u64, 0u64, 0u64),
            |x, y| (x.0 + y.0, x.1 + y.1, x.2 + y.2),
        );

    let a_win_freq = wins_a as f64 / resolved as f64;
    BatchEstimate {
        a_win_freq,
        mean_rounds: half_rounds as f64 / 2.0 / resolved as f64,
        ci95_halfwidth_winfreq: 1.96 * (a_win_freq * (1.0 - a_win_freq) / resolved as f64).sqrt(),
        unresolved_count: config.trials - resolved,
    }
}

fn mark(scored: bool) -> &'static str {
    if scored { "\u{2713}" } else { "x" }
}

fn result_line(
    result: Outcome,
    final_score: (u32, u32),
    regulation_score: Option<(u32, u32)>,
    extra_rounds: usize,
) -> String {
    let (a, b) = final_score;
    let decided = match result {
        Outcome::AWins => format!("A wins {a}-{b}"),
        Outcome::BWins => format!("B wins {a}-{b}"),
        Outcome::Unresolved => format!("unresolved {a}-{b}"),
    };
    match regulation_score {
        None => decided,
        Some((ra, rb)) => {
            let tail = match result {
                Outcome::Unresolved => format!("unresolved after {extra_rounds} extra rounds"),
                _ => decided,
            };
            format!("Sudden Death {ra}-{rb}, {tail}")
        }
    }
}

fn render_rows(labels: &[String], row_a: &[&str], row_b: &[&str], result: &str) -> String {
    let head = "        ".to_string();
    let mut header = head.clone();
    let mut line_a = String::from("Team A  ");
    let mut line_b = String::from("Team B  ");
    for (i, label) in labels.iter().enumerate() {
        let w = label.chars().count().max(2);
        header.push_str(&format!(" {label:>w$}"));
        line_a.push_str(&format!(" {:>w$}", row_a[i]));
        line_b.push_str(&format!(" {:>w$}", row_b[i]));
    }
    header.push_str(" | Result");
    line_a.push_str(&format!(" | {result}"));
    line_b.push_str(" |");
    format!("{header}\n{line_a}\n{line_b}\n")
}

/// Renders a round-based transcript as a two-row table: one column per
/// round, a check for a goal and an x for a miss, sudden-death columns
/// appended when played.
pub fn render_transcript(t: &Transcript) -> String {
    let mut labels = Vec::new();
    let mut row_a = Vec::new();
    let mut row_b = Vec::new();
    for (i, &(ka, kb)) in t.rounds.iter().enumerate() {
        labels.push(format!("R{}", i + 1));
        row_a.push(mark(ka));
        row_b.push(mark(kb));
    }
    for (i, &(ka, kb)) in t.sd_rounds.iter().enumerate() {
        labels.push(format!("SD{}", i + 1));
        row_a.push(mark(ka));
        row_b.push(mark(kb));
    }
    let regulation_score = if t.sd_rounds.is_empty() {
        None
    } else {
        let ra = t.rounds.iter().filter(|&&(ka, _)| ka).count() as u32;
        let rb = t.rounds.iter().filter(|&&(_, kb)| kb).count() as u32;
        Some((ra, rb))
    };
    let result = result_line(t.result, t.final_score, regulation_score, t.sd_rounds.len());
    render_rows(&labels, &row_a, &row_b, &result)
}

/// Renders a sequential-variant transcript in the same two-row shape; a cell
/// is blank when the game ended before that kick was taken.
pub fn render_sequential_transcript(t: &SequentialTranscript) -> String {
    let round_count = t.kicks.len().div_ceil(2);
    let mut labels = Vec::new();
    let mut row_a = Vec::new();
    let mut row_b = Vec::new();
    for r in 0..round_count {
        labels.push(format!("R{}", r + 1));
        row_a.push(t.kicks.get(2 * r).map_or("", |&k| mark(k)));
        row_b.push(t.kicks.get(2 * r + 1).map_or("", |&k| mark(k)));
    }
    let result = result_line(t.result, t.final_score, None, 0);
    render_rows(&labels, &row_a, &row_b, &result)
}

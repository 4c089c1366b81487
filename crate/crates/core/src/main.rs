//! Command-line front end: win probabilities, expected length, balancing,
//! figure-backing sweeps, seeded simulation and the strategyproofness audit.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Value, json};

use shootout::{
    Error, Model, Outcome, RuleParams, SimConfig, SweepRow, Team, balancing_probability,
    default_q_grid, er_series, estimate, expected_rounds_21, pa_series, pb_series,
    render_sequential_transcript, render_transcript, simulate_one, simulate_one_sequential,
    solve_round_model, strategyproofness_audit, sweep_q, win_prob_21,
};

const EXIT_AUDIT_DEVIATIONS: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_SOLVER_FAILURE: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(
    name = "shootout",
    version,
    about = "Win probabilities, expected length, balancing and simulation for handicapped penalty shootouts",
    after_help = "Exit codes: 0 ok, 1 audit found deviations, 2 bad input, 3 solver failure, 4 I/O."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Print numbers at full round-trip precision instead of 6 significant digits.
    #[arg(long, global = true)]
    full_precision: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Dp,
    Series,
    Mc,
    All,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Dp => "dp",
            Method::Series => "series",
            Method::Mc => "mc",
            Method::All => "all",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Round,
    Sequential,
}

impl ModelArg {
    fn name(self) -> &'static str {
        match self {
            ModelArg::Round => "round",
            ModelArg::Sequential => "sequential",
        }
    }
}

#[derive(Args)]
struct InstanceArgs {
    /// Goals the first kicker needs.
    #[arg(short)]
    m: u32,
    /// Goals the second kicker needs (must be below m).
    #[arg(short)]
    n: u32,
    /// First kicker's per-kick success probability.
    #[arg(short)]
    p: f64,
    /// Second kicker's per-kick success probability.
    #[arg(short)]
    q: f64,
    /// Evaluation method(s).
    #[arg(long, value_enum, default_value_t = Method::All)]
    method: Method,
    /// Tail tolerance for the series method.
    #[arg(long, default_value_t = 1e-12)]
    epsilon: f64,
    /// Trial count for the Monte Carlo method.
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
    /// Seed for the Monte Carlo method.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Win probabilities of both teams for one instance.
    Winprob(InstanceArgs),
    /// Expected number of rounds for one instance.
    Rounds(InstanceArgs),
    /// Second kicker's balancing probability q* for fixed (m, n, p).
    Balance {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        n: u32,
        #[arg(short)]
        p: f64,
        /// Residual tolerance on P_A - P_B.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Sweep q and write a CSV backing the win-probability and
    /// expected-rounds figures.
    Sweep {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        n: u32,
        #[arg(short)]
        p: f64,
        /// Number of evenly spaced q values in [0.005, 0.995].
        #[arg(long, default_value_t = 101)]
        grid_size: usize,
        /// Output path; "-" writes to stdout.
        #[arg(long)]
        out: String,
    },
    /// Seeded Monte Carlo batch for either game variant.
    Simulate {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        n: u32,
        #[arg(short)]
        p: f64,
        #[arg(short)]
        q: f64,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ModelArg::Round)]
        model: ModelArg,
        /// Render the first k trials as kick tables.
        #[arg(long, default_value_t = 0)]
        show_transcripts: u64,
        /// Sudden-death round cap; capped trials count as unresolved.
        #[arg(long, default_value_t = SimConfig::DEFAULT_SD_ROUND_CAP)]
        sd_round_cap: u32,
    },
    /// Recompute the balancing column q*(p) and the expected-rounds column
    /// ER(m, n, p, 0.6) for the pairs (5,4), (4,3), (3,2), (2,1).
    Tables {
        #[arg(short)]
        p: f64,
    },
    /// Check that no deliberate miss raises the kicker's win probability.
    Audit {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        n: u32,
        #[arg(short)]
        p: f64,
        #[arg(short)]
        q: f64,
    },
}

struct Failure {
    message: String,
    code: u8,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::TailTolerance { .. }
            | Error::BracketFailure { .. }
            | Error::NoConvergence { .. } => EXIT_SOLVER_FAILURE,
            _ => EXIT_BAD_INPUT,
        };
        Failure {
            message: err.to_string(),
            code,
        }
    }
}

fn io_failure(path: &str, err: io::Error) -> Failure {
    Failure {
        message: format!("{path}: {err}"),
        code: EXIT_IO,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = OutputStyle {
        format: cli.format,
        full_precision: cli.full_precision,
    };
    match run(cli.command, output) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

#[derive(Clone, Copy)]
struct OutputStyle {
    format: Format,
    full_precision: bool,
}

impl OutputStyle {
    fn num(&self, x: f64) -> String {
        if self.full_precision || !x.is_finite() || x == 0.0 {
            return format!("{x}");
        }
        let magnitude = x.abs().log10().floor() as i32;
        let precision = (5 - magnitude).clamp(0, 17) as usize;
        format!("{x:.precision$}")
    }
}

fn run(command: Command, out: OutputStyle) -> Result<u8, Failure> {
    match command {
        Command::Winprob(args) => cmd_winprob(&args, out),
        Command::Rounds(args) => cmd_rounds(&args, out),
        Command::Balance { m, n, p, tol } => cmd_balance(m, n, p, tol, out),
        Command::Sweep {
            m,
            n,
            p,
            grid_size,
            out: path,
        } => cmd_sweep(m, n, p, grid_size, &path, out),
        Command::Simulate {
            m,
            n,
            p,
            q,
            trials,
            seed,
            model,
            show_transcripts,
            sd_round_cap,
        } => cmd_simulate(
            m,
            n,
            p,
            q,
            trials,
            seed,
            model,
            show_transcripts,
            sd_round_cap,
            out,
        ),
        Command::Tables { p } => cmd_tables(p, out),
        Command::Audit { m, n, p, q } => cmd_audit(m, n, p, q, out),
    }
}

// One evaluated method: the win probabilities or the expected rounds, plus
// method-specific metadata for the JSON payload and human-readable notes.
struct MethodRow {
    method: &'static str,
    values: Vec<(&'static str, f64)>,
    meta: Vec<(&'static str, Value)>,
    note: String,
}

fn evaluate_methods(args: &InstanceArgs, want_er: bool) -> Result<Vec<MethodRow>, Failure> {
    let params = RuleParams::new(args.m, args.n, args.p, args.q)?;
    let mut rows = Vec::new();
    let all = args.method == Method::All;

    if all || args.method == Method::Dp {
        let sol = solve_round_model(&params);
        let values = if want_er {
            vec![("er", sol.expected_rounds)]
        } else {
            vec![("p_a", sol.p_a_win), ("p_b", sol.p_b_win)]
        };
        rows.push(MethodRow {
            method: "dp",
            values,
            meta: Vec::new(),
            note: String::new(),
        });
    }

    if all || args.method == Method::Series {
        if want_er {
            let er = er_series(&params, args.epsilon)?;
            rows.push(MethodRow {
                method: "series",
                values: vec![("er", er.value)],
                meta: vec![
                    ("epsilon", json!(args.epsilon)),
                    ("tail_bound", json!(er.tail_bound)),
                    ("truncation_round", json!(er.truncation_round)),
                ],
                note: format!(
                    "tail bound {:.2e} at round {}",
                    er.tail_bound, er.truncation_round
                ),
            });
        } else {
            let pa = pa_series(&params, args.epsilon)?;
            let pb = pb_series(&params, args.epsilon)?;
            rows.push(MethodRow {
                method: "series",
                values: vec![("p_a", pa.value), ("p_b", pb.value)],
                meta: vec![
                    ("epsilon", json!(args.epsilon)),
                    ("p_a_tail_bound", json!(pa.tail_bound)),
                    ("p_a_truncation_round", json!(pa.truncation_round)),
                    ("p_b_tail_bound", json!(pb.tail_bound)),
                    ("p_b_truncation_round", json!(pb.truncation_round)),
                ],
                note: format!(
                    "tail bounds {:.2e} / {:.2e} at rounds {} / {}",
                    pa.tail_bound, pb.tail_bound, pa.truncation_round, pb.truncation_round
                ),
            });
        }
    }

    if all || args.method == Method::Mc {
        let config = SimConfig::new(
            params,
            Model::RoundBased,
            args.trials,
            args.seed,
            SimConfig::DEFAULT_SD_ROUND_CAP,
        )?;
        let batch = estimate(&config);
        let values = if want_er {
            vec![("er", batch.mean_rounds)]
        } else {
            vec![("p_a", batch.a_win_freq), ("p_b", 1.0 - batch.a_win_freq)]
        };
        rows.push(MethodRow {
            method: "mc",
            values,
            meta: vec![
                ("trials", json!(args.trials)),
                ("seed", json!(args.seed)),
                ("ci95_halfwidth", json!(batch.ci95_halfwidth_winfreq)),
                ("unresolved_count", json!(batch.unresolved_count)),
            ],
            note: format!(
                "trials={} seed={} ci95=\u{b1}{:.2e} unresolved={}",
                args.trials, args.seed, batch.ci95_halfwidth_winfreq, batch.unresolved_count
            ),
        });
    }

    if all && args.m == 2 && args.n == 1 {
        let values = if want_er {
            vec![("er", expected_rounds_21(args.p, args.q)?)]
        } else {
            let pa = win_prob_21(args.p, args.q)?;
            vec![("p_a", pa), ("p_b", 1.0 - pa)]
        };
        rows.push(MethodRow {
            method: "closed-form",
            values,
            meta: Vec::new(),
            note: String::new(),
        });
    }

    Ok(rows)
}

// Largest |method - dp| over the leading value of each non-dp row.
fn max_discrepancy(rows: &[MethodRow]) -> Option<(&'static str, f64)> {
    let dp = rows.iter().find(|r| r.method == "dp")?;
    let reference = dp.values.first()?.1;
    rows.iter()
        .filter(|r| r.method != "dp")
        .map(|r| (r.method, (r.values[0].1 - reference).abs()))
        .max_by(|a, b| a.1.partial_cmp(&b.1).expect("finite discrepancies"))
}

fn print_method_payload(
    command: &str,
    args: &InstanceArgs,
    rows: &[MethodRow],
    out: OutputStyle,
) -> Result<u8, Failure> {
    let discrepancy = if args.method == Method::All {
        max_discrepancy(rows)
    } else {
        None
    };
    match out.format {
        Format::Json => {
            let results: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("method".into(), json!(row.method));
                    for (name, value) in &row.values {
                        obj.insert((*name).into(), json!(value));
                    }
                    for (name, value) in &row.meta {
                        obj.insert((*name).into(), value.clone());
                    }
                    Value::Object(obj)
                })
                .collect();
            let mut payload = json!({
                "command": command,
                "inputs": {
                    "m": args.m, "n": args.n, "p": args.p, "q": args.q,
                    "method": args.method.name(),
                    "epsilon": args.epsilon,
                    "trials": args.trials,
                    "seed": args.seed,
                },
                "results": results,
            });
            if let Some((method, value)) = discrepancy {
                payload["max_discrepancy"] = json!({"method": method, "value": value});
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&payload).expect("serializable")
            );
        }
        Format::Csv => {
            let header: Vec<&str> = rows[0].values.iter().map(|(name, _)| *name).collect();
            println!("method,{}", header.join(","));
            for row in rows {
                let cells: Vec<String> = row.values.iter().map(|(_, v)| format!("{v}")).collect();
                println!("{},{}", row.method, cells.join(","));
            }
        }
        Format::Human => {
            println!(
                "(m, n) = ({}, {})   p = {}   q = {}",
                args.m, args.n, args.p, args.q
            );
            let labels: Vec<String> = rows[0]
                .values
                .iter()
                .map(|(name, _)| {
                    match *name {
                        "p_a" => "P_A",
                        "p_b" => "P_B",
                        "er" => "ER",
                        other => other,
                    }
                    .to_string()
                })
                .collect();
            let head: Vec<String> = labels.iter().map(|l| format!("{l:<12}")).collect();
            println!("{:<12} {}", "method", head.join(" "));
            for row in rows {
                let cells: Vec<String> = row
                    .values
                    .iter()
                    .map(|(_, v)| format!("{:<12}", out.num(*v)))
                    .collect();
                println!("{:<12} {}", row.method, cells.join(" "));
            }
            if let Some((method, value)) = discrepancy {
                println!("max |value - dp|: {value:.3e} ({method})");
            }
            for row in rows {
                if !row.note.is_empty() {
                    println!("{}: {}", row.method, row.note);
                }
            }
        }
    }
    Ok(0)
}

fn cmd_winprob(args: &InstanceArgs, out: OutputStyle) -> Result<u8, Failure> {
    let rows = evaluate_methods(args, false)?;
    print_method_payload("winprob", args, &rows, out)
}

fn cmd_rounds(args: &InstanceArgs, out: OutputStyle) -> Result<u8, Failure> {
    let rows = evaluate_methods(args, true)?;
    print_method_payload("rounds", args, &rows, out)
}

fn cmd_balance(m: u32, n: u32, p: f64, tol: f64, out: OutputStyle) -> Result<u8, Failure> {
    let result = balancing_probability(m, n, p, tol)?;
    match out.format {
        Format::Json => {
            let payload = json!({
                "command": "balance",
                "inputs": {"m": m, "n": n, "p": p, "tol": tol},
                "result": {
                    "method": "dp",
                    "q_star": result.q_star,
                    "residual": result.residual,
                    "iterations": result.iterations,
                },
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&payload).expect("serializable")
            );
        }
        Format::Csv => {
            println!("m,n,p,q_star,residual,iterations");
            println!(
                "{m},{n},{p},{},{},{}",
                result.q_star, result.residual, result.iterations
            );
        }
        Format::Human => {
            println!("(m, n) = ({m}, {n})   p = {p}");
            println!(
                "q* = {}   residual = {:.2e}   iterations = {}   (method dp)",
                out.num(result.q_star),
                result.residual,
                result.iterations
            );
        }
    }
    Ok(0)
}

fn write_sweep_csv<W: Write>(mut w: W, rows: &[SweepRow]) -> io::Result<()> {
    writeln!(w, "q,p_a,p_b,er,q_a_seq,er_seq")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{},{}",
            r.q, r.p_a, r.p_b, r.er, r.q_a_seq, r.er_seq
        )?;
    }
    w.flush()
}

fn cmd_sweep(
    m: u32,
    n: u32,
    p: f64,
    grid_size: usize,
    path: &str,
    out: OutputStyle,
) -> Result<u8, Failure> {
    let grid = default_q_grid(grid_size)?;
    let rows = sweep_q(m, n, p, &grid)?;
    if path == "-" {
        write_sweep_csv(io::stdout().lock(), &rows).map_err(|e| io_failure("<stdout>", e))?;
        return Ok(0);
    }
    let file = File::create(path).map_err(|e| io_failure(path, e))?;
    write_sweep_csv(BufWriter::new(file), &rows).map_err(|e| io_failure(path, e))?;
    match out.format {
        Format::Json => {
            let payload = json!({
                "command": "sweep",
                "inputs": {"m": m, "n": n, "p": p, "grid_size": grid_size},
                "out": path,
                "rows_written": rows.len(),
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&payload).expect("serializable")
            );
        }
        _ => println!("wrote {} rows to {path}", rows.len()),
    }
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_simulate(
    m: u32,
    n: u32,
    p: f64,
    q: f64,
    trials: u64,
    seed: u64,
    model: ModelArg,
    show_transcripts: u64,
    sd_round_cap: u32,
    out: OutputStyle,
) -> Result<u8, Failure> {
    let params = RuleParams::new(m, n, p, q)?;
    let sim_model = match model {
        ModelArg::Round => Model::RoundBased,
        ModelArg::Sequential => Model::Sequential,
    };
    let config = SimConfig::new(params, sim_model, trials, seed, sd_round_cap)?;
    let batch = estimate(&config);
    let shown = show_transcripts.min(trials);

    match out.format {
        Format::Json => {
            let transcripts: Vec<Value> = (0..shown)
                .map(|trial| match sim_model {
                    Model::RoundBased => {
                        let t = simulate_one(&config, trial);
                        json!({
                            "trial": trial,
                            "rounds": t.rounds,
                            "sd_rounds": t.sd_rounds,
                            "result": outcome_name(t.result),
                            "final_score": [t.final_score.0, t.final_score.1],
                            "rendered": render_transcript(&t),
                        })
                    }
                    Model::Sequential => {
                        let t = simulate_one_sequential(&config, trial);
                        json!({
                            "trial": trial,
                            "kicks": t.kicks,
                            "result": outcome_name(t.result),
                            "final_score": [t.final_score.0, t.final_score.1],
                            "rendered": render_sequential_transcript(&t),
                        })
                    }
                })
                .collect();
            let payload = json!({
                "command": "simulate",
                "inputs": {
                    "m": m, "n": n, "p": p, "q": q,
                    "model": model.name(),
                    "trials": trials,
                    "seed": seed,
                    "sd_round_cap": sd_round_cap,
                },
                "estimate": {
                    "method": "mc",
                    "a_win_freq": batch.a_win_freq,
                    "mean_rounds": batch.mean_rounds,
                    "ci95_halfwidth_winfreq": batch.ci95_halfwidth_winfreq,
                    "unresolved_count": batch.unresolved_count,
                    "resolved_trials": trials - batch.unresolved_count,
                },
                "transcripts": transcripts,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&payload).expect("serializable")
            );
        }
        Format::Csv => {
            println!("a_win_freq,mean_rounds,ci95_halfwidth_winfreq,unresolved_count");
            println!(
                "{},{},{},{}",
                batch.a_win_freq,
                batch.mean_rounds,
                batch.ci95_halfwidth_winfreq,
                batch.unresolved_count
            );
        }
        Format::Human => {
            println!(
                "(m, n) = ({m}, {n})   p = {p}   q = {q}   model = {}   trials = {trials}   seed = {seed}   (method mc)",
                model.name()
            );
            println!(
                "A win frequency = {}   (95% CI \u{b1}{})",
                out.num(batch.a_win_freq),
                out.num(batch.ci95_halfwidth_winfreq)
            );
            println!("mean rounds     = {}", out.num(batch.mean_rounds));
            println!("unresolved      = {}", batch.unresolved_count);
            for trial in 0..shown {
                println!("\ntrial {trial}:");
                match sim_model {
                    Model::RoundBased => {
                        print!("{}", render_transcript(&simulate_one(&config, trial)))
                    }
                    Model::Sequential => print!(
                        "{}",
                        render_sequential_transcript(&simulate_one_sequential(&config, trial))
                    ),
                }
            }
        }
    }
    Ok(0)
}

fn outcome_name(outcome: Outcome) -> &'static str {
    match outcome {
        Outcome::AWins => "a_wins",
        Outcome::BWins => "b_wins",
        Outcome::Unresolved => "unresolved",
    }
}

const TABLE_PAIRS: [(u32, u32); 4] = [(5, 4), (4, 3), (3, 2), (2, 1)];
const TABLE_ER_Q: f64 = 0.6;

fn cmd_tables(p: f64, out: OutputStyle) -> Result<u8, Failure> {
    let mut rows = Vec::new();
    for (m, n) in TABLE_PAIRS {
        let balance = balancing_probability(m, n, p, 1e-10)?;
        let er = solve_round_model(&RuleParams::new(m, n, p, TABLE_ER_Q)?).expected_rounds;
        rows.push((m, n, balance.q_star, er));
    }
    match out.format {
        Format::Json => {
            let json_rows: Vec<Value> = rows
                .iter()
                .map(|(m, n, q_star, er)| {
                    json!({
                        "m": m, "n": n,
                        "q_star": q_star,
                        "q_star_2dp": format!("{q_star:.2}").parse::<f64>().expect("numeric"),
                        "er": er,
                        "er_2dp": format!("{er:.2}").parse::<f64>().expect("numeric"),
                    })
                })
                .collect();
            let payload = json!({
                "command": "tables",
                "inputs": {"p": p, "er_q": TABLE_ER_Q},
                "method": "dp",
                "rows": json_rows,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&payload).expect("serializable")
            );
        }
        Format::Csv => {
            println!("m,n,q_star,q_star_2dp,er,er_2dp");
            for (m, n, q_star, er) in rows {
                println!("{m},{n},{q_star},{q_star:.2},{er},{er:.2}");
            }
        }
        Format::Human => {
            println!(
                "balancing q*(p) and expected rounds at q = {TABLE_ER_Q}, for p = {p}   (method dp)"
            );
            println!(
                "{:<8} {:<14} {:<7} {:<14} {:<7}",
                "(m, n)", "q*", "2dp", "ER", "2dp"
            );
            for (m, n, q_star, er) in rows {
                println!(
                    "{:<8} {:<14} {:<7.2} {:<14} {:<7.2}",
                    format!("({m}, {n})"),
                    out.num(q_star),
                    q_star,
                    out.num(er),
                    er
                );
            }
        }
    }
    Ok(0)
}

fn cmd_audit(m: u32, n: u32, p: f64, q: f64, out: OutputStyle) -> Result<u8, Failure> {
    let params = RuleParams::new(m, n, p, q)?;
    let report = strategyproofness_audit(&params)?;
    let phase_name = |phase: shootout::Phase| match phase {
        shootout::Phase::Regulation => "regulation",
        shootout::Phase::SuddenDeath => "sudden_death",
    };
    match out.format {
        Format::Json => {
            let deviations: Vec<Value> = report
                .profitable_deviations
                .iter()
                .map(|d| {
                    json!({
                        "phase": phase_name(d.state.phase),
                        "a_goals": d.state.a_goals,
                        "b_goals": d.state.b_goals,
                        "a_scored": d.state.a_scored,
                        "team": match d.team { Team::A => "A", Team::B => "B" },
                        "honest_value": d.honest_value,
                        "deviation_value": d.deviation_value,
                    })
                })
                .collect();
            let payload = json!({
                "command": "audit",
                "inputs": {"m": m, "n": n, "p": p, "q": q},
                "count": deviations.len(),
                "profitable_deviations": deviations,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&payload).expect("serializable")
            );
        }
        Format::Csv => {
            println!("phase,a_goals,b_goals,a_scored,team,honest_value,deviation_value");
            for d in &report.profitable_deviations {
                println!(
                    "{},{},{},{},{},{},{}",
                    phase_name(d.state.phase),
                    d.state.a_goals,
                    d.state.b_goals,
                    d.state.a_scored.map_or(String::new(), |s| s.to_string()),
                    d.team,
                    d.honest_value,
                    d.deviation_value
                );
            }
        }
        Format::Human => {
            println!("(m, n) = ({m}, {n})   p = {p}   q = {q}");
            if report.is_empty() {
                println!("no profitable deviations");
            } else {
                for d in &report.profitable_deviations {
                    println!(
                        "team {} at {}: honest {} < deviation {}",
                        d.team,
                        d.state,
                        out.num(d.honest_value),
                        out.num(d.deviation_value)
                    );
                }
            }
        }
    }
    if report.is_empty() {
        Ok(0)
    } else {
        Ok(EXIT_AUDIT_DEVIATIONS)
    }
}

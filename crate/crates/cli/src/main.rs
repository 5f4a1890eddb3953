use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use ssum_cli::bench::{run_bench, write_csv, Algorithm, BenchSpec};
use ssum_cli::gen::{generate, GenSpec, Profile, TargetRule};
use ssum_cli::io::{format_instance, read_instance};
use ssum_cli::report::{render, Format};
use ssum_cli::verify::{parse_range, run_verify, VerifySpec};
use ssum_core::{solve, SolverConfig};

/// Subset Sum: generate, solve, verify against the exact DP, benchmark.
///
/// Exit codes: 0 yes, 1 no, 2 error, 3 sparse-branch false positive found
/// by `verify`.
#[derive(Parser)]
#[command(name = "ssum", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Seed for every random choice; drawn from entropy and printed when omitted.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Error probability; defaults to min(0.01, 1/(n+t)).
    #[arg(long, global = true)]
    q: Option<f64>,
    /// Constant in the dense budgets; small values make the dense branch reachable.
    #[arg(long = "c-ap", global = true, default_value_t = 1.0)]
    c_ap: f64,
    /// Re-verify dense-branch yes answers with the exact DP.
    #[arg(long, global = true)]
    checked: bool,
    /// Multiplier on the phase-three capping radius.
    #[arg(long = "eta-mult", global = true, default_value_t = 1.0)]
    eta_mult: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Include wall-clock timings in solve reports.
    #[arg(long, global = true)]
    timings: bool,
    /// Run the pipeline even when t is below 100 w lg(w)^2.
    #[arg(long = "no-gate", global = true)]
    no_gate: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated instance.
    Gen {
        /// uniform, dense, sparse-window or divisor-structured[:d[:tail]].
        #[arg(long, default_value = "uniform")]
        profile: Profile,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        w: u64,
        /// half, random, yes (planted subset) or a number.
        #[arg(long = "t", default_value = "half")]
        t: TargetRule,
    },
    /// Decide an instance file.
    Solve { path: PathBuf },
    /// Compare the solver with the exact DP on random instances.
    Verify {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long = "n-range", default_value = "1..=14")]
        n_range: String,
        #[arg(long = "w-range", default_value = "1..=40")]
        w_range: String,
        #[arg(long, default_value = "uniform")]
        profile: Profile,
        /// random (uniform in [0, sigma]) or yes (planted subset).
        #[arg(long = "t", default_value = "random")]
        t: TargetRule,
        /// Largest n*t handed to the oracle.
        #[arg(long = "oracle-budget", default_value_t = 1 << 32)]
        oracle_budget: u64,
    },
    /// Time the solver against exact DPs and emit CSV rows.
    Bench {
        /// Item counts; defaults to the scaling sweep (n = 64, w = 1024, t = 2^14..2^20).
        #[arg(long = "n", value_delimiter = ',')]
        ns: Vec<usize>,
        #[arg(long = "w", value_delimiter = ',')]
        ws: Vec<u64>,
        #[arg(long = "t", value_delimiter = ',')]
        ts: Vec<u64>,
        #[arg(long, default_value = "uniform")]
        profile: Profile,
        #[arg(long, value_delimiter = ',', default_value = "paper,dp,bitset-dp")]
        algorithms: Vec<Algorithm>,
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn config(g: &GlobalOpts, seed: u64) -> SolverConfig {
    SolverConfig {
        c_ap: g.c_ap,
        error_q: g.q,
        seed,
        checked_mode: g.checked,
        eta_mult: g.eta_mult,
        small_t_gate: !g.no_gate,
        ..Default::default()
    }
}

fn emit(out: &Option<PathBuf>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(p) => File::create(p)
            .and_then(|mut f| f.write_all(bytes))
            .with_context(|| format!("writing {}", p.display())),
        None => io::stdout().write_all(bytes).context("writing to stdout"),
    }
}

fn run(cli: Cli) -> Result<u8> {
    let g = &cli.global;
    let seed = g.seed.unwrap_or_else(|| {
        let s = rand::random();
        eprintln!("seed: {s}");
        s
    });
    let cfg = config(g, seed);
    cfg.validate()?;
    match cli.command {
        Command::Gen { profile, n, w, t } => {
            let spec = GenSpec {
                profile,
                n,
                w,
                target: t,
                seed,
            };
            let inst = generate(&spec)?;
            emit(&g.out, format_instance(&inst, &[spec.comment()]).as_bytes())?;
            Ok(0)
        }
        Command::Solve { path } => {
            let inst = read_instance(&path)?;
            let outcome = solve(&inst, &cfg)?;
            emit(&g.out, render(&outcome, g.format, g.timings)?.as_bytes())?;
            if g.format == Format::Text && !g.timings {
                if let Some(t) = &outcome.timings {
                    eprintln!("total_ns: {}", t.total_ns);
                }
            }
            Ok(if outcome.decision.is_yes() { 0 } else { 1 })
        }
        Command::Verify {
            count,
            n_range,
            w_range,
            profile,
            t,
            oracle_budget,
        } => {
            let spec = VerifySpec {
                count,
                n_range: parse_range(&n_range).context("--n-range")?,
                w_range: parse_range(&w_range).context("--w-range")?,
                profile,
                target: t,
                oracle_budget,
            };
            let summary = run_verify(&spec, &cfg)?;
            let text = match g.format {
                Format::Json => serde_json::to_string_pretty(&summary)? + "\n",
                Format::Text => {
                    let mut s = String::new();
                    let v = serde_json::to_value(&summary)?;
                    for (k, v) in v.as_object().into_iter().flatten() {
                        s += &format!("{k}: {v}\n");
                    }
                    s
                }
            };
            emit(&g.out, text.as_bytes())?;
            Ok(if summary.false_positives_sparse > 0 {
                3
            } else {
                0
            })
        }
        Command::Bench {
            ns,
            ws,
            ts,
            profile,
            algorithms,
            reps,
        } => {
            let sweep = BenchSpec::scaling_sweep();
            let or = |v: Vec<u64>, d: Vec<u64>| if v.is_empty() { d } else { v };
            let spec = BenchSpec {
                ns: if ns.is_empty() { sweep.ns } else { ns },
                ws: or(ws, sweep.ws),
                ts: or(ts, sweep.ts),
                profile,
                algorithms,
                reps,
            };
            let rows = run_bench(&spec, &cfg)?;
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf)?;
            emit(&g.out, &buf)?;
            Ok(0)
        }
    }
}

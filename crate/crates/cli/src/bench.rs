//! Timing comparison of the randomized solver against exact DPs.

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{bail, ensure, Result};
use serde::Serialize;
use ssum_core::solver::{bitset_dp_raw, textbook_dp, DP_TARGET_LIMIT};
use ssum_core::{rng_stream, solve, Instance, SolverConfig};

use crate::gen::{draw_items, Profile};

pub const BENCH_HEADER: &str =
    "instance_id,n,w,t,algorithm,branch,decision,seed,wall_time_ns,candidate_set_size";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Algorithm {
    Paper,
    Dp,
    BitsetDp,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Paper, Algorithm::Dp, Algorithm::BitsetDp];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Paper => "paper",
            Algorithm::Dp => "dp",
            Algorithm::BitsetDp => "bitset-dp",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "paper" => Algorithm::Paper,
            "dp" => Algorithm::Dp,
            "bitset-dp" => Algorithm::BitsetDp,
            other => bail!("unknown algorithm {other:?}; expected paper, dp or bitset-dp"),
        })
    }
}

/// One CSV row. Exact algorithms report branch `exact` and no candidate set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub instance_id: usize,
    pub n: usize,
    pub w: u64,
    pub t: u64,
    pub algorithm: String,
    pub branch: String,
    pub decision: String,
    pub seed: u64,
    pub wall_time_ns: u64,
    pub candidate_set_size: Option<usize>,
}

/// Cartesian product of `ns x ws x ts`, each cell one generated instance.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchSpec {
    pub ns: Vec<usize>,
    pub ws: Vec<u64>,
    pub ts: Vec<u64>,
    pub profile: Profile,
    pub algorithms: Vec<Algorithm>,
    pub reps: usize,
}

impl BenchSpec {
    /// `n = 64`, `w = 2^10`, `t = 2^14 .. 2^20`: `t` grows with `w` fixed.
    pub fn scaling_sweep() -> Self {
        BenchSpec {
            ns: vec![64],
            ws: vec![1 << 10],
            ts: (14..=20).map(|e| 1u64 << e).collect(),
            profile: Profile::Uniform,
            algorithms: Algorithm::ALL.to_vec(),
            reps: 3,
        }
    }
}

/// Items for cell `id`; the same instance is shared by every algorithm and
/// repetition. For the uniform and dense profiles one item is pinned to `w`
/// so the row's `w` is exactly the requested bound.
pub fn bench_instance(
    profile: Profile,
    n: usize,
    w: u64,
    t: u64,
    seed: u64,
    id: usize,
) -> Result<Instance> {
    let mut rng = rng_stream(
        seed ^ (id as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15),
        b"bench",
    );
    let mut items = draw_items(profile, n, w, &mut rng)?;
    if matches!(profile, Profile::Uniform | Profile::Dense) {
        items[0] = w;
    }
    Ok(Instance::new(items, t)?)
}

fn time<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let clock = Instant::now();
    let v = f();
    (v, clock.elapsed().as_nanos() as u64)
}

pub fn run_one(
    inst: &Instance,
    algorithm: Algorithm,
    config: &SolverConfig,
) -> Result<(BenchRow, bool)> {
    let t = inst.target();
    let (branch, yes, ns, cand) = match algorithm {
        Algorithm::Paper => {
            let (out, ns) = time(|| solve(inst, config));
            let out = out?;
            (
                out.report.branch.as_str().to_string(),
                out.decision.is_yes(),
                ns,
                out.report.candidate_size,
            )
        }
        Algorithm::Dp | Algorithm::BitsetDp => {
            ensure!(
                t <= DP_TARGET_LIMIT,
                "target {t} exceeds the DP limit {DP_TARGET_LIMIT}"
            );
            let (yes, ns) = if algorithm == Algorithm::Dp {
                time(|| textbook_dp(inst.items(), t))
            } else {
                time(|| bitset_dp_raw(inst.items(), t))
            };
            ("exact".to_string(), yes, ns, None)
        }
    };
    let row = BenchRow {
        instance_id: 0,
        n: inst.n(),
        w: inst.w(),
        t,
        algorithm: algorithm.as_str().to_string(),
        branch,
        decision: if yes { "yes" } else { "no" }.to_string(),
        seed: config.seed,
        wall_time_ns: ns,
        candidate_set_size: cand,
    };
    Ok((row, yes))
}

/// Runs every cell, algorithm and repetition in that order.
pub fn run_bench(spec: &BenchSpec, config: &SolverConfig) -> Result<Vec<BenchRow>> {
    ensure!(spec.reps >= 1, "repetitions must be at least 1");
    let mut rows = Vec::new();
    let mut id = 0;
    for &n in &spec.ns {
        for &w in &spec.ws {
            for &t in &spec.ts {
                let inst = bench_instance(spec.profile, n, w, t, config.seed, id)?;
                for &alg in &spec.algorithms {
                    for _ in 0..spec.reps {
                        let (mut row, _) = run_one(&inst, alg, config)?;
                        row.instance_id = id;
                        rows.push(row);
                    }
                }
                id += 1;
            }
        }
    }
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut wtr = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    wtr.write_record(BENCH_HEADER.split(','))?;
    for r in rows {
        wtr.serialize(r)?;
    }
    wtr.flush()?;
    Ok(())
}

/// Least-squares fit of `ln y = slope * ln x + intercept`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogLogFit {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
    pub points: usize,
}

pub fn fit_loglog(points: &[(f64, f64)]) -> Option<LogLogFit> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    let m = pts.len();
    if m < 2 {
        return None;
    }
    let mf = m as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / mf;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / mf;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = pts.iter().map(|p| (p.1 - my).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let slope = sxy / sxx;
    let r2 = if syy == 0.0 {
        1.0
    } else {
        sxy * sxy / (sxx * syy)
    };
    Some(LogLogFit {
        slope,
        intercept: my - slope * mx,
        r2,
        points: m,
    })
}

/// Median wall time per `t` for one algorithm, ready for [`fit_loglog`].
pub fn median_times(rows: &[BenchRow], algorithm: Algorithm) -> Vec<(f64, f64)> {
    let mut by_t: std::collections::BTreeMap<u64, Vec<u64>> = Default::default();
    for r in rows.iter().filter(|r| r.algorithm == algorithm.as_str()) {
        by_t.entry(r.t).or_default().push(r.wall_time_ns);
    }
    by_t.into_iter()
        .map(|(t, mut v)| {
            v.sort_unstable();
            (t as f64, v[v.len() / 2] as f64)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_matches_schema() {
        let mut buf = Vec::new();
        write_csv(&[], &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), format!("{BENCH_HEADER}\n"));
    }

    #[test]
    fn reps_give_rows_per_cell() {
        let spec = BenchSpec {
            ns: vec![8],
            ws: vec![16],
            ts: vec![20, 40],
            profile: Profile::Uniform,
            algorithms: Algorithm::ALL.to_vec(),
            reps: 4,
        };
        let rows = run_bench(&spec, &SolverConfig::with_seed(2)).unwrap();
        assert_eq!(rows.len(), 2 * 3 * 4);
        for id in 0..2 {
            let cell: Vec<&BenchRow> = rows.iter().filter(|r| r.instance_id == id).collect();
            assert_eq!(cell.len(), 12);
            assert!(cell.iter().all(|r| r.decision == cell[0].decision));
        }
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 25);
        assert!(!text.contains('"'));
        assert!(text.lines().nth(5).unwrap().contains(",dp,exact,"));
    }

    #[test]
    fn loglog_recovers_power_law() {
        let pts: Vec<(f64, f64)> = (1..8)
            .map(|i| (i as f64, 3.0 * (i as f64).powf(0.5)))
            .collect();
        let f = fit_loglog(&pts).unwrap();
        assert!((f.slope - 0.5).abs() < 1e-9);
        assert!((f.r2 - 1.0).abs() < 1e-9);
        assert!((f.intercept - 3f64.ln()).abs() < 1e-9);
        assert!(fit_loglog(&[(1.0, 1.0)]).is_none());
    }
}

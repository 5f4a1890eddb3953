//! Deterministic instance generators.

use std::fmt;
use std::str::FromStr;

use anyhow::{bail, ensure, Result};
use ssum_core::math::lg;
use ssum_core::{rng_stream, Instance, RngStream};

/// Item distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    /// Items uniform in `[1, w]`.
    Uniform,
    /// Items uniform in `[ceil(w/2), w]`: many items of similar size, so
    /// the subset sums near the target fill up quickly.
    Dense,
    /// Items drawn from a pool of about `lg w + 1` values in `[w/2, w]`,
    /// which keeps the reachable sums near the target few and structured.
    SparseWindow,
    /// All but `tail` items are multiples of `d`; the tail is not.
    DivisorStructured { d: u64, tail: usize },
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Profile::Uniform => write!(f, "uniform"),
            Profile::Dense => write!(f, "dense"),
            Profile::SparseWindow => write!(f, "sparse-window"),
            Profile::DivisorStructured { d, tail } => {
                write!(f, "divisor-structured:{d}:{tail}")
            }
        }
    }
}

impl FromStr for Profile {
    type Err = anyhow::Error;

    /// `uniform`, `dense`, `sparse-window` or `divisor-structured[:d[:tail]]`
    /// (defaults `d = 6`, `tail = 2`).
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or_default();
        let rest: Vec<&str> = parts.collect();
        let profile = match name {
            "uniform" => Profile::Uniform,
            "dense" => Profile::Dense,
            "sparse-window" => Profile::SparseWindow,
            "divisor-structured" => {
                ensure!(rest.len() <= 2, "divisor-structured takes at most d and tail");
                let d = rest.first().map(|x| x.parse()).transpose()?.unwrap_or(6);
                let tail = rest.get(1).map(|x| x.parse()).transpose()?.unwrap_or(2);
                return Ok(Profile::DivisorStructured { d, tail });
            }
            other => bail!(
                "unknown profile {other:?}; expected uniform, dense, sparse-window or divisor-structured"
            ),
        };
        ensure!(rest.is_empty(), "profile {name} takes no parameters");
        Ok(profile)
    }
}

/// How the target is chosen once the items are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetRule {
    /// `floor(sigma / 2)`.
    Half,
    /// Uniform in `[0, sigma]`.
    Random,
    Fixed(u64),
    /// The sum of a planted subset containing each item with probability 1/2.
    Yes,
}

impl fmt::Display for TargetRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetRule::Half => write!(f, "half"),
            TargetRule::Random => write!(f, "random"),
            TargetRule::Fixed(t) => write!(f, "{t}"),
            TargetRule::Yes => write!(f, "yes"),
        }
    }
}

impl FromStr for TargetRule {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "half" => TargetRule::Half,
            "random" => TargetRule::Random,
            "yes" => TargetRule::Yes,
            other => match other.parse::<u64>() {
                Ok(t) => TargetRule::Fixed(t),
                Err(_) => {
                    bail!("unknown target rule {other:?}; expected half, random, yes or a number")
                }
            },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub profile: Profile,
    pub n: usize,
    pub w: u64,
    pub target: TargetRule,
    pub seed: u64,
}

impl GenSpec {
    /// Header comment recording how the instance was produced.
    pub fn comment(&self) -> String {
        format!(
            "profile={} n={} w={} t={} seed={}",
            self.profile, self.n, self.w, self.target, self.seed
        )
    }
}

pub fn generate(spec: &GenSpec) -> Result<Instance> {
    let mut rng = rng_stream(spec.seed, b"gen");
    let items = draw_items(spec.profile, spec.n, spec.w, &mut rng)?;
    let t = pick_target(spec.target, &items, &mut rng);
    Ok(Instance::new(items, t)?)
}

pub fn draw_items(profile: Profile, n: usize, w: u64, rng: &mut RngStream) -> Result<Vec<u64>> {
    ensure!(n >= 1, "n must be at least 1");
    ensure!(w >= 1, "w must be at least 1");
    let items = match profile {
        Profile::Uniform => (0..n).map(|_| rng.range_inclusive(1, w)).collect(),
        Profile::Dense => (0..n)
            .map(|_| rng.range_inclusive(w.div_ceil(2), w))
            .collect(),
        Profile::SparseWindow => {
            let lo = (w / 2).max(1);
            let pool: Vec<u64> = (0..=lg(w)).map(|_| rng.range_inclusive(lo, w)).collect();
            (0..n)
                .map(|_| pool[rng.below(pool.len() as u64) as usize])
                .collect()
        }
        Profile::DivisorStructured { d, tail } => {
            ensure!(d >= 2, "divisor must be at least 2, got {d}");
            ensure!(d <= w, "divisor {d} exceeds w = {w}");
            ensure!(tail <= n, "tail {tail} exceeds n = {n}");
            let mut items: Vec<u64> = (0..n - tail)
                .map(|_| d * rng.range_inclusive(1, w / d))
                .collect();
            for _ in 0..tail {
                let x = loop {
                    let x = rng.range_inclusive(1, w);
                    if !x.is_multiple_of(d) {
                        break x;
                    }
                };
                items.push(x);
            }
            rng.shuffle(&mut items);
            items
        }
    };
    Ok(items)
}

pub fn pick_target(rule: TargetRule, items: &[u64], rng: &mut RngStream) -> u64 {
    let sigma: u64 = items.iter().sum();
    match rule {
        TargetRule::Half => sigma / 2,
        TargetRule::Random => rng.range_inclusive(0, sigma),
        TargetRule::Fixed(t) => t,
        TargetRule::Yes => items.iter().filter(|_| rng.below(2) == 1).sum(),
    }
}

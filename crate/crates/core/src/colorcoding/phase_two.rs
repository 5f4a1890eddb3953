use serde::Serialize;

use crate::error::Result;
use crate::math::{ceil_u64, lg, sqrt_wt};
use crate::rng::RngStream;
use crate::set::SumSet;
use crate::sumset::sparse_sumset;

use super::phase_one::GroupFamily;

/// Derived thresholds for phase two.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhaseTwoParams {
    /// `log2(2n / q)`.
    pub log_term: f64,
    pub k: u64,
    /// `k^2` rounded up to a power of two.
    pub g: u64,
    pub u_prime: u64,
    pub rho: u64,
    pub reps: u64,
    /// `ceil(4 c_ap rho u' lg u')`, the additive part of every level budget.
    pub extra: u64,
}

/// `ceil(4 c_ap rho u' lg u')`.
pub fn extra_budget_for(c_ap: f64, rho: u64, u_prime: u64) -> u64 {
    ceil_u64(4.0 * c_ap * rho as f64 * u_prime as f64 * lg(u_prime) as f64)
}

impl PhaseTwoParams {
    pub fn new(n: usize, t: u64, w: u64, q: f64, c_ap: f64) -> Self {
        let n = n.max(1) as f64;
        let log_term = (2.0 * n / q).log2();
        let k = ceil_u64(6.0 * log_term).max(1);
        let g = (k * k).next_power_of_two();
        let l = lg(w);
        let u_prime = (g * w + 1).max(ceil_u64(5.0 * sqrt_wt(w, t) * l as f64));
        let rho = 10 * g * l;
        let reps = ceil_u64((4.0 * n / q).ln() / (4.0f64 / 3.0).ln()).max(1);
        PhaseTwoParams {
            log_term,
            k,
            g,
            u_prime,
            rho,
            reps,
            extra: extra_budget_for(c_ap, rho, u_prime),
        }
    }

    /// Budget for round `h` over `l` groups: `l g / 2^h + extra`.
    pub fn budget(&self, l: usize, h: u32) -> u64 {
        ((l as u64 * self.g) >> h).saturating_add(self.extra)
    }
}

/// Per-group sets `S_i ⊆ S(D_i)`, each containing 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupSumsets {
    pub sets: Vec<SumSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TripSource {
    PhaseTwo,
    PhaseThree,
}

/// Bookkeeping captured when a level's total size reaches its budget.
///
/// `f_values` and `sigma_values` cover every non-trivial set of the level;
/// `set_sizes` covers the prefix that was actually computed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TripRecord {
    pub source: TripSource,
    pub level: u32,
    pub observed_total: u64,
    pub threshold: u64,
    pub extra: u64,
    pub rho: u64,
    pub u_prime: u64,
    pub g: u64,
    pub num_sets: u64,
    /// Sets equal to `{0}` that were counted but not stored.
    pub trivial_sets: u64,
    /// Sets after the trip point, never computed (each has size >= 1).
    pub uncomputed_sets: u64,
    pub set_sizes: Vec<u64>,
    pub set_maxima: Vec<u64>,
    pub max_diameter: u64,
    pub f_values: Vec<u64>,
    pub sigma_values: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum PhaseTwoOutcome {
    Sparse(GroupSumsets),
    Dense(TripRecord),
}

/// Independent uniform colors in `[0, g)` for `len` items.
pub fn random_coloring(len: usize, g: u64, rng: &mut RngStream) -> Vec<u64> {
    (0..len).map(|_| rng.below(g)).collect()
}

// A non-trivial node of the merge tree; nodes equal to {0} are implicit.
struct Node {
    group: usize,
    idx: u64,
    set: SumSet,
    f: u64,
    sigma: u64,
}

impl Node {
    fn parent(&self) -> (usize, u64) {
        (self.group, self.idx >> 1)
    }
}

/// Repeated color coding of every group with budgeted tree merging.
///
/// All groups advance level by level together; a level's budget counts the
/// `{0}` nodes of empty parts without materializing them.
pub fn phase_two(
    groups: &GroupFamily,
    params: &PhaseTwoParams,
    rng: &mut RngStream,
) -> Result<PhaseTwoOutcome> {
    let l = groups.len();
    let g = params.g;
    let rounds = g.trailing_zeros();
    let mut acc: Vec<SumSet> = vec![SumSet::zero(); l];
    for _ in 0..params.reps {
        let mut level: Vec<Node> = Vec::new();
        for (gi, items) in groups.groups.iter().enumerate() {
            leaves(gi, items, g, rng, &mut level);
        }
        // A node that is alone in its group only passes through the remaining
        // levels unchanged, so it is parked and counted arithmetically.
        let mut parked: Vec<Node> = Vec::new();
        let mut parked_size = 0u64;
        park_lone(&mut level, &mut parked, &mut parked_size);
        for h in 1..=rounds {
            let budget = params.budget(l, h);
            let num_sets = (l as u64 * g) >> h;
            let trivial = num_sets - (count_parents(&level) + parked.len()) as u64;
            let mut running = trivial + parked_size;
            let mut next: Vec<Node> = Vec::with_capacity(level.len());
            let mut nodes = level.into_iter().peekable();
            while running < budget {
                let Some(a) = nodes.next() else { break };
                let node = match nodes.next_if(|b| b.parent() == a.parent()) {
                    Some(b) => Node {
                        group: a.group,
                        idx: a.idx >> 1,
                        set: sparse_sumset(&a.set, &b.set)?,
                        f: a.f + b.f,
                        sigma: a.sigma + b.sigma,
                    },
                    None => Node {
                        idx: a.idx >> 1,
                        ..a
                    },
                };
                running += node.set.len() as u64;
                next.push(node);
            }
            if running >= budget {
                let rest: Vec<Node> = nodes.collect();
                parked.extend(next);
                return Ok(PhaseTwoOutcome::Dense(trip_record(
                    &parked, &rest, h, running, budget, trivial, num_sets, params,
                )));
            }
            level = next;
            park_lone(&mut level, &mut parked, &mut parked_size);
        }
        for root in parked.iter().chain(&level) {
            acc[root.group] = acc[root.group].union(&root.set);
        }
    }
    Ok(PhaseTwoOutcome::Sparse(GroupSumsets { sets: acc }))
}

fn park_lone(level: &mut Vec<Node>, parked: &mut Vec<Node>, parked_size: &mut u64) {
    let groups: Vec<usize> = level.iter().map(|n| n.group).collect();
    let lone = |i: usize| {
        (i == 0 || groups[i - 1] != groups[i])
            && (i + 1 == groups.len() || groups[i + 1] != groups[i])
    };
    let mut keep = Vec::with_capacity(level.len());
    for (i, n) in std::mem::take(level).into_iter().enumerate() {
        if lone(i) {
            *parked_size += n.set.len() as u64;
            parked.push(n);
        } else {
            keep.push(n);
        }
    }
    *level = keep;
}

fn leaves(group: usize, items: &[u64], g: u64, rng: &mut RngStream, out: &mut Vec<Node>) {
    let colors = random_coloring(items.len(), g, rng);
    let mut pairs: Vec<(u64, u64)> = colors.into_iter().zip(items.iter().copied()).collect();
    pairs.sort_unstable();
    let mut vals: Vec<u64> = Vec::new();
    for (k, &(c, x)) in pairs.iter().enumerate() {
        vals.push(x);
        if k + 1 == pairs.len() || pairs[k + 1].0 != c {
            let f = vals.iter().copied().max().unwrap();
            let sigma = vals.iter().sum();
            vals.push(0);
            out.push(Node {
                group,
                idx: c,
                set: SumSet::new(std::mem::take(&mut vals)),
                f,
                sigma,
            });
        }
    }
}

fn count_parents(nodes: &[Node]) -> usize {
    let mut c = 0;
    let mut last = None;
    for n in nodes {
        if last != Some(n.parent()) {
            c += 1;
            last = Some(n.parent());
        }
    }
    c
}

#[allow(clippy::too_many_arguments)]
fn trip_record(
    computed: &[Node],
    pending: &[Node],
    h: u32,
    running: u64,
    budget: u64,
    trivial: u64,
    num_sets: u64,
    params: &PhaseTwoParams,
) -> TripRecord {
    let mut f_values: Vec<u64> = computed.iter().map(|n| n.f).collect();
    let mut sigma_values: Vec<u64> = computed.iter().map(|n| n.sigma).collect();
    // Parents not yet computed: f and sigma are sums over their children, so
    // they are known without the sumsets.
    let mut last = None;
    for n in pending {
        if last == Some(n.parent()) {
            *f_values.last_mut().unwrap() += n.f;
            *sigma_values.last_mut().unwrap() += n.sigma;
        } else {
            f_values.push(n.f);
            sigma_values.push(n.sigma);
            last = Some(n.parent());
        }
    }
    TripRecord {
        source: TripSource::PhaseTwo,
        level: h,
        observed_total: running,
        threshold: budget,
        extra: params.extra,
        rho: params.rho,
        u_prime: params.u_prime,
        g: params.g,
        num_sets,
        trivial_sets: trivial,
        uncomputed_sets: (f_values.len() - computed.len()) as u64,
        set_sizes: computed.iter().map(|n| n.set.len() as u64).collect(),
        set_maxima: computed.iter().map(|n| n.set.max_or_zero()).collect(),
        max_diameter: computed.iter().map(|n| n.set.diameter()).max().unwrap_or(1),
        f_values,
        sigma_values,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorcoding::phase_one;

    fn subset_sums(items: &[u64]) -> SumSet {
        let mut s = vec![0u64];
        for &x in items {
            let shifted: Vec<u64> = s.iter().map(|v| v + x).collect();
            s.extend(shifted);
        }
        SumSet::new(s)
    }

    #[test]
    fn params_follow_definitions() {
        let p = PhaseTwoParams::new(64, 1 << 16, 1024, 0.01, 1.0);
        assert!((p.log_term - (12800f64).log2()).abs() < 1e-12);
        assert_eq!(p.k, 82);
        assert_eq!(p.g, 8192);
        assert_eq!(p.u_prime, 8192 * 1024 + 1);
        assert_eq!(p.rho, 10 * 8192 * 10);
        assert_eq!(p.reps, ((25600f64).ln() / (4f64 / 3.0).ln()).ceil() as u64);
        assert_eq!(p.budget(4, 1), 4 * 8192 / 2 + p.extra);
    }

    #[test]
    fn singleton_groups_keep_their_element() {
        let mut rng = RngStream::new(4, b"p2");
        let d = vec![3, 5, 9, 17];
        let fam = phase_one(&d, 10, &mut rng).unwrap();
        let params = PhaseTwoParams::new(4, 10, 17, 0.1, 1.0);
        match phase_two(&fam, &params, &mut rng).unwrap() {
            PhaseTwoOutcome::Sparse(s) => {
                for (set, grp) in s.sets.iter().zip(&fam.groups) {
                    assert!(set.contains(0));
                    for &x in grp {
                        assert!(set.contains(x));
                    }
                }
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn sets_are_genuine_subset_sums() {
        let mut rng = RngStream::new(6, b"p2-sound");
        for _ in 0..30 {
            let n = 2 + rng.below(11) as usize;
            let d: Vec<u64> = (0..n).map(|_| 1 + rng.below(30)).collect();
            let sigma: u64 = d.iter().sum();
            let t = (2 * sigma / 3).max(1);
            let fam = phase_one(&d, t, &mut rng).unwrap();
            let params = PhaseTwoParams::new(n, t, 30, 0.05, 1.0);
            let PhaseTwoOutcome::Sparse(s) = phase_two(&fam, &params, &mut rng).unwrap() else {
                panic!("budget cannot trip at this size");
            };
            for (set, grp) in s.sets.iter().zip(&fam.groups) {
                assert!(set.contains(0));
                assert!(set.is_subset_of(&subset_sums(grp)));
                let m = grp.iter().copied().max().unwrap_or(0);
                assert!(set.max_or_zero() >= m);
            }
        }
    }

    #[test]
    fn small_budget_trips_with_consistent_bookkeeping() {
        let mut rng = RngStream::new(8, b"p2-trip");
        let d: Vec<u64> = (0..200).map(|i| 1 + i % 7).collect();
        let fam = phase_one(&d, 300, &mut rng).unwrap();
        let params = PhaseTwoParams::new(200, 300, 7, 0.1, 1e-12);
        let PhaseTwoOutcome::Dense(trip) = phase_two(&fam, &params, &mut rng).unwrap() else {
            panic!("expected a trip");
        };
        assert!(trip.observed_total >= trip.threshold);
        assert_eq!(
            trip.trivial_sets + trip.f_values.len() as u64,
            trip.num_sets,
        );
        assert_eq!(
            trip.set_sizes.len() as u64 + trip.uncomputed_sets,
            trip.f_values.len() as u64
        );
        let f_total: u64 = trip.f_values.iter().sum();
        let max_total: u64 = fam.groups.iter().flatten().sum::<u64>();
        assert!(f_total <= max_total);
        assert!(2 * f_total >= 3 * 300);
    }
}

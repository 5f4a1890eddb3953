use serde::Serialize;

use crate::colorcoding::{TripRecord, TripSource};
use crate::error::{Error, Result};
use crate::math::{ceil_u64, lg, sqrt_wt};

/// Certificate that `D` is dense with respect to `t`: a family of sets
/// whose total size, diameters and `f` values meet the density thresholds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DenseEvidence {
    pub source: TripSource,
    pub level: u32,
    pub rho: u64,
    pub u_prime: u64,
    pub num_sets: u64,
    /// Lower bound on the total size: computed sizes plus one per set that is
    /// trivial or was never computed.
    pub total_size_lower: u64,
    pub threshold: u64,
    pub max_diameter: u64,
    pub set_sizes: Vec<u64>,
    pub f_values: Vec<u64>,
    pub sum_f: u64,
}

/// Checks the three density conditions on a budget trip and packages them.
///
/// A violation means the bookkeeping is wrong, not that the input is bad.
pub fn assemble_dense_evidence(trip: &TripRecord, t: u64, w: u64) -> Result<DenseEvidence> {
    let computed: u64 = trip.set_sizes.iter().sum();
    let total_size_lower = computed + trip.trivial_sets + trip.uncomputed_sets;
    let need = trip.num_sets.saturating_add(trip.extra);
    if total_size_lower < need {
        return Err(invalid(
            "size",
            format!(
                "total size {total_size_lower} < {} sets + {}",
                trip.num_sets, trip.extra
            ),
        ));
    }
    if trip.u_prime < trip.max_diameter {
        return Err(invalid(
            "diameter",
            format!("u' = {} < max diameter {}", trip.u_prime, trip.max_diameter),
        ));
    }
    let window = ceil_u64(5.0 * sqrt_wt(w, t) * lg(w) as f64);
    if trip.u_prime < window {
        return Err(invalid(
            "diameter",
            format!("u' = {} < {window}", trip.u_prime),
        ));
    }
    for (i, (&m, &f)) in trip.set_maxima.iter().zip(&trip.f_values).enumerate() {
        if m > f {
            return Err(invalid("f", format!("set {i}: max {m} > f {f}")));
        }
    }
    for (i, (&f, &s)) in trip.f_values.iter().zip(&trip.sigma_values).enumerate() {
        if f > s {
            return Err(invalid("f", format!("set {i}: f {f} > sigma {s}")));
        }
    }
    let sum_f: u64 = trip.f_values.iter().sum();
    let (lo, hi) = (3 * t as u128, trip.rho as u128 * t as u128);
    if (2 * sum_f as u128) < lo || (2 * sum_f as u128) > hi {
        return Err(invalid(
            "mass",
            format!(
                "sum of f = {sum_f} outside [3t/2, rho t/2] with t = {t}, rho = {}",
                trip.rho
            ),
        ));
    }
    Ok(DenseEvidence {
        source: trip.source,
        level: trip.level,
        rho: trip.rho,
        u_prime: trip.u_prime,
        num_sets: trip.num_sets,
        total_size_lower,
        threshold: trip.threshold,
        max_diameter: trip.max_diameter,
        set_sizes: trip.set_sizes.clone(),
        f_values: trip.f_values.clone(),
        sum_f,
    })
}

fn invalid(condition: &'static str, detail: String) -> Error {
    Error::InvalidEvidence { condition, detail }
}

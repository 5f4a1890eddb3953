use serde::Serialize;

/// A finite set of non-negative integers, stored strictly increasing.
///
/// The empty set is representable: capping can leave a node with no
/// achievable sum in its window.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SumSet(Vec<u64>);

impl SumSet {
    /// Sorts and deduplicates `values`.
    pub fn new(mut values: Vec<u64>) -> Self {
        values.sort_unstable();
        values.dedup();
        SumSet(values)
    }

    pub(crate) fn from_sorted(values: Vec<u64>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] < w[1]));
        SumSet(values)
    }

    pub fn empty() -> Self {
        SumSet(Vec::new())
    }

    pub fn singleton(x: u64) -> Self {
        SumSet(vec![x])
    }

    /// `{0}`, the identity for sumsets.
    pub fn zero() -> Self {
        SumSet(vec![0])
    }

    /// All multiples of `step` in `[lo, hi]`.
    pub fn multiples_in(step: u64, lo: u64, hi: u64) -> Self {
        assert!(step > 0);
        if lo > hi {
            return SumSet::empty();
        }
        let first = lo.div_ceil(step) * step;
        SumSet((first..=hi).step_by(step as usize).collect())
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }

    pub fn min(&self) -> Option<u64> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<u64> {
        self.0.last().copied()
    }

    /// `max`, with `max(empty) = 0`.
    pub fn max_or_zero(&self) -> u64 {
        self.max().unwrap_or(0)
    }

    /// `max - min + 1`; the empty set has diameter 1.
    pub fn diameter(&self) -> u64 {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => hi - lo + 1,
            _ => 1,
        }
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_identity(&self) -> bool {
        self.0.len() == 1 && self.0[0] == 0
    }

    pub fn union(&self, other: &SumSet) -> SumSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        SumSet(out)
    }

    pub fn is_subset_of(&self, other: &SumSet) -> bool {
        self.iter().all(|x| other.contains(x))
    }
}

impl FromIterator<u64> for SumSet {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        SumSet::new(iter.into_iter().collect())
    }
}

impl From<Vec<u64>> for SumSet {
    fn from(v: Vec<u64>) -> Self {
        SumSet::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_input() {
        let s = SumSet::new(vec![5, 1, 5, 3]);
        assert_eq!(s.values(), &[1, 3, 5]);
        assert_eq!(s.diameter(), 5);
        assert_eq!(SumSet::empty().diameter(), 1);
        assert_eq!(SumSet::empty().max_or_zero(), 0);
    }

    #[test]
    fn union_and_multiples() {
        let a = SumSet::new(vec![1, 4, 9]);
        let b = SumSet::new(vec![0, 4, 10]);
        assert_eq!(a.union(&b).values(), &[0, 1, 4, 9, 10]);
        assert_eq!(SumSet::multiples_in(3, 10, 20).values(), &[12, 15, 18]);
        assert_eq!(SumSet::multiples_in(1, 95, 100).len(), 6);
        assert!(SumSet::multiples_in(7, 8, 13).is_empty());
    }
}

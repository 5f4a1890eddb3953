use serde::Serialize;

use crate::error::{Error, Result};

/// A Subset Sum instance `(X, t)` together with its derived bounds.
///
/// Items are positive. `w` is the maximum item (0 when there are none) and
/// `sigma` the sum of all items; `n * w < 2^63` is enforced so every subset
/// sum fits in a `u64` with room to spare.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    items: Vec<u64>,
    target: u64,
    w: u64,
    sigma: u64,
}

impl Instance {
    pub fn new(items: Vec<u64>, target: u64) -> Result<Self> {
        let w = items.iter().copied().max().unwrap_or(0);
        if let Some(&bad) = items.iter().find(|&&x| x == 0) {
            return Err(Error::ItemOutOfRange { value: bad, max: w });
        }
        let n = items.len() as u64;
        match n.checked_mul(w) {
            Some(p) if p < 1 << 63 => {}
            _ => return Err(Error::Overflow { n, w }),
        }
        let sigma = items.iter().sum();
        Ok(Instance {
            items,
            target,
            w,
            sigma,
        })
    }

    pub fn items(&self) -> &[u64] {
        &self.items
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    pub fn n(&self) -> usize {
        self.items.len()
    }

    pub fn w(&self) -> u64 {
        self.w
    }

    pub fn sigma(&self) -> u64 {
        self.sigma
    }

    pub fn with_target(&self, target: u64) -> Instance {
        Instance {
            target,
            ..self.clone()
        }
    }

    /// The instance asking for `sigma - t`; requires `t <= sigma`.
    pub fn complement(&self) -> Instance {
        assert!(self.target <= self.sigma);
        self.with_target(self.sigma - self.target)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Normalized {
    TriviallyYes,
    TriviallyNo,
    Reduced {
        instance: Instance,
        complemented: bool,
    },
}

/// Brings the target into `[1, sigma/2]`, complementing when `t > sigma/2`.
pub fn normalize(instance: &Instance) -> Normalized {
    let (t, sigma) = (instance.target, instance.sigma);
    if t > sigma {
        return Normalized::TriviallyNo;
    }
    if t == 0 || t == sigma {
        return Normalized::TriviallyYes;
    }
    if 2 * t > sigma {
        Normalized::Reduced {
            instance: instance.complement(),
            complemented: true,
        }
    } else {
        Normalized::Reduced {
            instance: instance.clone(),
            complemented: false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(items: &[u64], t: u64) -> Instance {
        Instance::new(items.to_vec(), t).unwrap()
    }

    #[test]
    fn derived_bounds() {
        let x = inst(&[3, 5, 8], 8);
        assert_eq!((x.n(), x.w(), x.sigma()), (3, 8, 16));
        let e = inst(&[], 0);
        assert_eq!((e.n(), e.w(), e.sigma()), (0, 0, 0));
    }

    #[test]
    fn rejects_zero_and_overflow() {
        assert!(matches!(
            Instance::new(vec![1, 0], 1),
            Err(Error::ItemOutOfRange { value: 0, .. })
        ));
        assert!(matches!(
            Instance::new(vec![1 << 62, 1 << 62], 1),
            Err(Error::Overflow { .. })
        ));
    }

    #[test]
    fn normalize_examples() {
        match normalize(&inst(&[3, 5], 7)) {
            Normalized::Reduced {
                instance,
                complemented,
            } => {
                assert_eq!(instance.target(), 1);
                assert!(complemented);
            }
            other => panic!("{other:?}"),
        }
        match normalize(&inst(&[3, 5], 4)) {
            Normalized::Reduced {
                instance,
                complemented,
            } => {
                assert_eq!(instance.target(), 4);
                assert!(!complemented);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(normalize(&inst(&[3, 5], 9)), Normalized::TriviallyNo);
        assert_eq!(normalize(&inst(&[3, 5], 0)), Normalized::TriviallyYes);
        assert_eq!(normalize(&inst(&[3, 5], 8)), Normalized::TriviallyYes);
    }

    #[test]
    fn complement_is_an_involution() {
        let x = inst(&[3, 5, 9, 2], 13);
        assert_eq!(x.complement().complement(), x);
        if let Normalized::Reduced { instance, .. } = normalize(&x) {
            assert_eq!(instance.complement().target(), 13);
            match normalize(&instance) {
                Normalized::Reduced { complemented, .. } => assert!(!complemented),
                other => panic!("{other:?}"),
            }
        } else {
            panic!("expected reduction");
        }
    }
}

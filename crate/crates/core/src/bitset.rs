//! Word-packed bitset with the shift-or step used by subset-sum DP.

#[derive(Debug, Clone)]
pub struct Bitset {
    words: Vec<u64>,
    len: usize,
}

impl Bitset {
    pub fn new(len: usize) -> Self {
        Bitset {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// `self |= self << shift`, truncated to `len` bits.
    pub fn or_shifted(&mut self, shift: usize) {
        if shift >= self.len {
            return;
        }
        let (ws, bs) = (shift / 64, shift % 64);
        let n = self.words.len();
        for i in (ws..n).rev() {
            let src = i - ws;
            let mut v = self.words[src] << bs;
            if bs != 0 && src > 0 {
                v |= self.words[src - 1] >> (64 - bs);
            }
            self.words[i] |= v;
        }
        let tail = self.len % 64;
        if tail != 0 {
            self.words[n - 1] &= (1u64 << tail) - 1;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_or_matches_naive() {
        for len in [1usize, 63, 64, 65, 130, 257] {
            for shift in [0usize, 1, 5, 63, 64, 65, 100, 300] {
                let mut b = Bitset::new(len);
                let mut naive = vec![false; len];
                for i in (0..len).step_by(3) {
                    b.set(i);
                    naive[i] = true;
                }
                b.or_shifted(shift);
                let prev = naive.clone();
                for i in 0..len {
                    if i >= shift && prev[i - shift] {
                        naive[i] = true;
                    }
                }
                let got: Vec<bool> = (0..len).map(|i| b.get(i)).collect();
                assert_eq!(got, naive, "len={len} shift={shift}");
                assert_eq!(b.ones().count(), b.count_ones());
            }
        }
    }
}

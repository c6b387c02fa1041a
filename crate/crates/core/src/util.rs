use alloc::vec::Vec;

/// Iterates over all `k`-element index subsets of `0..n` in lexicographic
/// order.
pub(crate) struct Combinations {
    n: usize,
    k: usize,
    state: Option<Vec<usize>>,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        let state = if k <= n {
            Some((0..k).collect())
        } else {
            None
        };
        Combinations { n, k, state }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.state.clone()?;
        // advance to the lexicographic successor
        let next = {
            let mut idx = current.clone();
            let mut i = self.k;
            loop {
                if i == 0 {
                    break None;
                }
                i -= 1;
                if idx[i] < self.n - (self.k - i) {
                    idx[i] += 1;
                    for j in i + 1..self.k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break Some(idx);
                }
            }
        };
        self.state = next;
        Some(current)
    }
}

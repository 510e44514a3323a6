//! Enumeration of k-element subsets of `[1, n]` in lexicographic order.

use crate::error::{Error, Result};

/// Default bound on `n` for brute-force enumeration. `n = 20` keeps the
/// total subset count near a million; above that the caller should use the
/// distributive fast path or raise the cap explicitly.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

/// Exact binomial coefficient for `0 <= k <= n <= 62`, computed by the
/// multiplicative formula with checked arithmetic.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n || n > 62 {
        return Err(Error::BinomialOutOfRange { n, k });
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 1..=k {
        // acc is C(n - k + i - 1, i - 1); multiply then divide keeps it exact
        acc = acc
            .checked_mul(n - k + i)
            .ok_or(Error::Overflow { op: "binomial", a: n, b: k })?
            / i;
    }
    Ok(acc)
}

/// Iteration state over all k-element subsets of `[1, n]`, yielded in
/// lexicographic order as strictly increasing 1-based index lists.
#[derive(Debug, Clone)]
pub struct KSubsetCursor {
    n: usize,
    k: usize,
    current: Vec<usize>,
    started: bool,
    exhausted: bool,
}

impl KSubsetCursor {
    /// Requires `1 <= k <= n`.
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::SubsetSizeOutOfRange { k, n });
        }
        Ok(KSubsetCursor {
            n,
            k,
            current: (1..=k).collect(),
            started: false,
            exhausted: false,
        })
    }

    /// Steps to the next subset and returns a view of it, or `None` once all
    /// `C(n, k)` subsets have been yielded. Borrowing avoids an allocation
    /// per subset on the brute-force hot path.
    pub fn advance(&mut self) -> Option<&[usize]> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        // rightmost position that can still be incremented
        let mut i = self.k;
        loop {
            if i == 0 {
                self.exhausted = true;
                return None;
            }
            i -= 1;
            if self.current[i] < self.n - (self.k - 1 - i) {
                break;
            }
        }
        self.current[i] += 1;
        for j in i + 1..self.k {
            self.current[j] = self.current[j - 1] + 1;
        }
        Some(&self.current)
    }
}

impl Iterator for KSubsetCursor {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.advance().map(<[usize]>::to_vec)
    }
}

/// Cursor over all k-subsets of `[1, n]` under the default enumeration cap.
pub fn k_subsets(n: usize, k: usize) -> Result<KSubsetCursor> {
    k_subsets_with_cap(n, k, DEFAULT_ENUMERATION_CAP)
}

/// Cursor over all k-subsets of `[1, n]`, refusing `n` beyond `cap`.
pub fn k_subsets_with_cap(n: usize, k: usize, cap: usize) -> Result<KSubsetCursor> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    KSubsetCursor::new(n, k)
}

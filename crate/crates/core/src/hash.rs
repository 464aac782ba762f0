//! Polynomial rolling hashes modulo the Mersenne prime 2^61 - 1.
//!
//! Two fixed bases give a pair of independent 61-bit fingerprints. Bases are
//! constants so every run hashes identically. Callers confirm any match by
//! direct symbol comparison; a collision can only cost time, never a wrong
//! answer.

pub(crate) const MOD: u64 = (1 << 61) - 1;
pub(crate) const BASES: [u64; 2] = [0x1234_5678_9abc_def1 % MOD, 0x0fed_cba9_8765_4321 % MOD];

#[inline(always)]
pub(crate) fn mul(a: u64, b: u64) -> u64 {
    let t = a as u128 * b as u128;
    let t = ((t >> 61) as u64) + ((t as u64) & MOD);
    if t >= MOD {
        t - MOD
    } else {
        t
    }
}

#[inline(always)]
pub(crate) fn add(a: u64, b: u64) -> u64 {
    let t = a + b;
    if t >= MOD {
        t - MOD
    } else {
        t
    }
}

#[inline(always)]
pub(crate) fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + MOD - b
    }
}

/// A pair of hash values, one per base.
pub(crate) type Fingerprint = [u64; 2];

/// Prefix hashes over a symbol sequence. Symbols are shifted by one before
/// hashing so that symbol 0 does not collide with the empty string.
#[derive(Debug, Clone)]
pub(crate) struct PrefixHash {
    prefix: Vec<Fingerprint>,
    pow: Vec<Fingerprint>,
}

impl PrefixHash {
    pub(crate) fn new<I>(symbols: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<u64>,
    {
        let mut prefix = vec![[0, 0]];
        let mut pow = vec![[1, 1]];
        for s in symbols {
            let v = s.into() + 1;
            let last = *prefix.last().unwrap();
            let lp = *pow.last().unwrap();
            prefix.push([
                add(mul(last[0], BASES[0]), v),
                add(mul(last[1], BASES[1]), v),
            ]);
            pow.push([mul(lp[0], BASES[0]), mul(lp[1], BASES[1])]);
        }
        PrefixHash { prefix, pow }
    }

    #[cfg(test)]
    pub(crate) fn len(&self) -> usize {
        self.prefix.len() - 1
    }

    /// Fingerprint of the half-open range `[lo, hi)`.
    #[inline]
    pub(crate) fn range(&self, lo: usize, hi: usize) -> Fingerprint {
        let n = hi - lo;
        [
            sub(self.prefix[hi][0], mul(self.prefix[lo][0], self.pow[n][0])),
            sub(self.prefix[hi][1], mul(self.prefix[lo][1], self.pow[n][1])),
        ]
    }
}

/// Incrementally maintained prefix hashes for a DFS stack. `push` appends a
/// symbol, `pop` removes the last one; range queries work as in
/// [`PrefixHash`].
#[derive(Debug, Clone)]
pub(crate) struct StackHash {
    prefix: Vec<Fingerprint>,
    pow: Vec<Fingerprint>,
}

impl StackHash {
    pub(crate) fn with_capacity(max_len: usize) -> Self {
        let mut pow = Vec::with_capacity(max_len + 1);
        pow.push([1, 1]);
        for i in 0..max_len {
            let p: Fingerprint = pow[i];
            pow.push([mul(p[0], BASES[0]), mul(p[1], BASES[1])]);
        }
        let mut prefix = Vec::with_capacity(max_len + 1);
        prefix.push([0, 0]);
        StackHash { prefix, pow }
    }

    #[inline(always)]
    pub(crate) fn push(&mut self, symbol: u32) {
        let v = symbol as u64 + 1;
        let last = *self.prefix.last().unwrap();
        self.prefix.push([
            add(mul(last[0], BASES[0]), v),
            add(mul(last[1], BASES[1]), v),
        ]);
    }

    #[inline(always)]
    pub(crate) fn pop(&mut self) {
        debug_assert!(self.prefix.len() > 1);
        self.prefix.pop();
    }

    #[inline(always)]
    pub(crate) fn range(&self, lo: usize, hi: usize) -> Fingerprint {
        let n = hi - lo;
        [
            sub(self.prefix[hi][0], mul(self.prefix[lo][0], self.pow[n][0])),
            sub(self.prefix[hi][1], mul(self.prefix[lo][1], self.pow[n][1])),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_ranges_hash_equal() {
        let h = PrefixHash::new([0u8, 1, 2, 0, 1, 2, 1]);
        assert_eq!(h.len(), 7);
        assert_eq!(h.range(0, 3), h.range(3, 6));
        assert_ne!(h.range(0, 3), h.range(4, 7));
        assert_ne!(h.range(0, 0), h.range(0, 1));
    }

    #[test]
    fn stack_hash_matches_prefix_hash() {
        let syms = [3u32, 1, 4, 1, 5, 9, 2, 6];
        let ph = PrefixHash::new(syms.iter().map(|&s| s as u64));
        let mut sh = StackHash::with_capacity(syms.len());
        for &s in &syms {
            sh.push(s);
        }
        for lo in 0..syms.len() {
            for hi in lo..=syms.len() {
                assert_eq!(ph.range(lo, hi), sh.range(lo, hi));
            }
        }
        sh.pop();
        sh.push(7);
        assert_ne!(ph.range(0, 8), sh.range(0, 8));
    }

    #[test]
    fn mul_reduces() {
        assert_eq!(mul(MOD - 1, MOD - 1), 1);
        assert_eq!(mul(0, 12345), 0);
        assert_eq!(add(MOD - 1, 1), 0);
        assert_eq!(sub(0, 1), MOD - 1);
    }
}

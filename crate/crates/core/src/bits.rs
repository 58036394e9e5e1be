use smallvec::SmallVec;

/// Fixed-width bit set over indices `0..len`.
///
/// Tree enumeration keeps two of these per node, so small lengths stay
/// inline (two words cover genus up to 63 without touching the heap).
/// Trailing bits past `len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: SmallVec<[u64; 2]>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        let words = smallvec::smallvec![0u64; len.div_ceil(64)];
        BitSet { words, len }
    }

    /// All bits in `0..len` set.
    pub fn filled(len: usize) -> Self {
        let mut s = BitSet {
            words: smallvec::smallvec![!0u64; len.div_ceil(64)],
            len,
        };
        s.mask_tail();
        s
    }

    fn mask_tail(&mut self) {
        let tail = self.len & 63;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn get(&self, idx: usize) -> bool {
        debug_assert!(idx < self.len);
        self.words[idx >> 6] & (1u64 << (idx & 63)) != 0
    }

    #[inline]
    pub fn set(&mut self, idx: usize) {
        debug_assert!(idx < self.len);
        self.words[idx >> 6] |= 1u64 << (idx & 63);
    }

    #[inline]
    pub fn clear(&mut self, idx: usize) {
        debug_assert!(idx < self.len);
        self.words[idx >> 6] &= !(1u64 << (idx & 63));
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of set bits in the inclusive range `lo..=hi`.
    pub fn count_ones_in(&self, lo: usize, hi: usize) -> usize {
        if lo > hi || lo >= self.len {
            return 0;
        }
        let hi = hi.min(self.len - 1);
        let (wl, wh) = (lo >> 6, hi >> 6);
        let lo_mask = !0u64 << (lo & 63);
        let hi_mask = if hi & 63 == 63 { !0u64 } else { (1u64 << ((hi & 63) + 1)) - 1 };
        if wl == wh {
            return (self.words[wl] & lo_mask & hi_mask).count_ones() as usize;
        }
        let mut n = (self.words[wl] & lo_mask).count_ones() as usize;
        for w in &self.words[wl + 1..wh] {
            n += w.count_ones() as usize;
        }
        n + (self.words[wh] & hi_mask).count_ones() as usize
    }

    /// Iterate set bits in the inclusive range `lo..=hi`, ascending.
    pub fn ones_in(&self, lo: usize, hi: usize) -> Ones<'_> {
        if lo > hi || lo >= self.len {
            return Ones { words: &self.words, cur: 0, word: self.words.len(), hi: 0 };
        }
        let hi = hi.min(self.len - 1);
        let word = lo >> 6;
        let cur = self.words[word] & (!0u64 << (lo & 63));
        Ones { words: &self.words, cur, word, hi }
    }

    pub fn ones(&self) -> Ones<'_> {
        if self.len == 0 {
            return Ones { words: &self.words, cur: 0, word: self.words.len(), hi: 0 };
        }
        self.ones_in(0, self.len - 1)
    }

    pub fn first_one_at_or_after(&self, idx: usize) -> Option<usize> {
        if self.len == 0 {
            return None;
        }
        self.ones_in(idx, self.len - 1).next()
    }

    pub fn last_one(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate().rev() {
            if w != 0 {
                return Some((i << 6) | (63 - w.leading_zeros() as usize));
            }
        }
        None
    }

    /// Raw words, low to high. Used by checkpoint serialization.
    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl std::fmt::Debug for BitSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.ones()).finish()
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    cur: u64,
    word: usize,
    hi: usize,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                let idx = (self.word << 6) | b;
                if idx > self.hi {
                    self.cur = 0;
                    self.word = self.words.len();
                    return None;
                }
                self.cur &= self.cur - 1;
                return Some(idx);
            }
            self.word += 1;
            if self.word >= self.words.len() || self.word > (self.hi >> 6) {
                return None;
            }
            self.cur = self.words[self.word];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_clear() {
        let mut b = BitSet::new(130);
        assert!(!b.get(129));
        b.set(0);
        b.set(63);
        b.set(64);
        b.set(129);
        assert!(b.get(0) && b.get(63) && b.get(64) && b.get(129));
        assert_eq!(b.count_ones(), 4);
        b.clear(64);
        assert!(!b.get(64));
        assert_eq!(b.ones().collect::<Vec<_>>(), vec![0, 63, 129]);
    }

    #[test]
    fn filled_masks_tail() {
        let b = BitSet::filled(70);
        assert_eq!(b.count_ones(), 70);
        assert_eq!(b.last_one(), Some(69));
    }

    #[test]
    fn range_queries() {
        let mut b = BitSet::new(200);
        for i in (0..200).step_by(3) {
            b.set(i);
        }
        assert_eq!(b.count_ones_in(0, 199), b.count_ones());
        assert_eq!(b.count_ones_in(10, 9), 0);
        for lo in [0usize, 1, 5, 63, 64, 65, 120] {
            for hi in [lo, lo + 1, lo + 50, 199] {
                let expect: Vec<usize> =
                    (lo..=hi.min(199)).filter(|&i| i % 3 == 0).collect();
                assert_eq!(b.ones_in(lo, hi).collect::<Vec<_>>(), expect, "{lo}..={hi}");
                assert_eq!(b.count_ones_in(lo, hi), expect.len());
            }
        }
        assert_eq!(b.first_one_at_or_after(1), Some(3));
        assert_eq!(b.first_one_at_or_after(198), Some(198));
        assert_eq!(b.first_one_at_or_after(199), None);
    }

    #[test]
    fn empty_set() {
        let b = BitSet::new(0);
        assert_eq!(b.ones().count(), 0);
        assert_eq!(b.last_one(), None);
        assert_eq!(b.first_one_at_or_after(0), None);
    }
}

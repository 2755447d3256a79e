//! Fixed-length bit window used for semigroup membership.

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct BitWindow {
    words: Vec<u64>,
    len: usize,
}

impl BitWindow {
    pub(crate) fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub(crate) fn from_bools(bits: &[bool]) -> Self {
        let mut out = Self::zeros(bits.len());
        for (i, _) in bits.iter().enumerate().filter(|(_, b)| **b) {
            out.set(i);
        }
        out
    }

    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub(crate) fn clear(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] &= !(1 << (i % WORD));
    }

    /// Number of set bits in `[0, end)`.
    pub(crate) fn count_ones_below(&self, end: usize) -> usize {
        let end = end.min(self.len);
        let full = end / WORD;
        let mut n: usize = self.words[..full]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum();
        let rem = end % WORD;
        if rem > 0 {
            n += (self.words[full] & ((1u64 << rem) - 1)).count_ones() as usize;
        }
        n
    }

    pub(crate) fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    /// `self |= src << shift`, truncated to `self.len()`.
    pub(crate) fn or_shifted(&mut self, src: &BitWindow, shift: usize) {
        let q = shift / WORD;
        let r = shift % WORD;
        let src_word = |j: usize| src.words.get(j).copied().unwrap_or(0);
        for i in q..self.words.len() {
            let j = i - q;
            let mut v = src_word(j) << r;
            if r > 0 && j > 0 {
                v |= src_word(j - 1) >> (WORD - r);
            }
            self.words[i] |= v;
        }
        self.mask_tail();
    }

    /// Changes the length, filling any new positions with set bits.
    pub(crate) fn resize_with_ones(&mut self, new_len: usize) {
        let old_len = self.len;
        self.words.resize(new_len.div_ceil(WORD), 0);
        self.len = new_len;
        for i in old_len..new_len {
            self.set(i);
        }
        self.mask_tail();
    }

    fn mask_tail(&mut self) {
        let rem = self.len % WORD;
        if rem > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

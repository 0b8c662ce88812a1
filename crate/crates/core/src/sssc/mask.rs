/// Fixed-width bitset over arc indices. One machine word covers digraphs
/// with up to 64 arcs; larger ones use more words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct ArcMask(Box<[u64]>);

impl ArcMask {
    pub fn empty(bits: usize) -> Self {
        ArcMask(vec![0; bits.div_ceil(64).max(1)].into_boxed_slice())
    }

    pub fn full(bits: usize) -> Self {
        let mut m = Self::empty(bits);
        for i in 0..bits {
            m.set(i);
        }
        m
    }

    pub fn from_indices(bits: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::empty(bits);
        for i in idx {
            m.set(i);
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    pub fn minus(&self, other: &ArcMask) -> ArcMask {
        ArcMask(self.0.iter().zip(other.0.iter()).map(|(a, b)| a & !b).collect())
    }

    pub fn intersection_count(&self, other: &ArcMask) -> usize {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &ArcMask) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    /// Lowest set index that is also set in `other`.
    pub fn first_common(&self, other: &ArcMask) -> Option<usize> {
        self.0.iter().zip(other.0.iter()).enumerate().find_map(|(w, (a, b))| {
            let both = a & b;
            (both != 0).then(|| w * 64 + both.trailing_zeros() as usize)
        })
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + bit)
            })
        })
    }
}

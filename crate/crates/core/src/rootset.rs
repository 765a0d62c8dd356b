//! Dense index sets over the roots of a system.
//!
//! A `RootSet` is a 256-bit set, wide enough for E8's 240 roots. The bit
//! pattern doubles as the canonical form of a subsystem: two subsystems are
//! equal exactly when their bit patterns are.

use std::fmt;

const WORDS: usize = 4;

/// An index set over the roots of a parent [`crate::root_system::RootSystem`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RootSet {
    words: [u64; WORDS],
}

impl RootSet {
    pub const EMPTY: RootSet = RootSet { words: [0; WORDS] };

    pub const CAPACITY: usize = WORDS * 64;

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut s = RootSet::EMPTY;
        for i in indices {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < Self::CAPACITY);
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn and(&self, other: &RootSet) -> RootSet {
        let mut words = [0; WORDS];
        for i in 0..WORDS {
            words[i] = self.words[i] & other.words[i];
        }
        RootSet { words }
    }

    #[inline]
    pub fn or(&self, other: &RootSet) -> RootSet {
        let mut words = [0; WORDS];
        for i in 0..WORDS {
            words[i] = self.words[i] | other.words[i];
        }
        RootSet { words }
    }

    /// Set difference `self \ other`.
    #[inline]
    pub fn minus(&self, other: &RootSet) -> RootSet {
        let mut words = [0; WORDS];
        for i in 0..WORDS {
            words[i] = self.words[i] & !other.words[i];
        }
        RootSet { words }
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        (0..WORDS).all(|i| self.words[i] & !other.words[i] == 0)
    }

    pub fn is_disjoint(&self, other: &RootSet) -> bool {
        (0..WORDS).all(|i| self.words[i] & other.words[i] == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            let mut bits = bits;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }

    /// Image of the set under a permutation of root indices.
    #[inline]
    pub fn mapped(&self, perm: &[u16]) -> RootSet {
        let mut out = RootSet::EMPTY;
        for i in self.iter() {
            out.insert(perm[i] as usize);
        }
        out
    }

    /// Stable little-endian byte encoding, used by the orbit cache.
    pub fn to_bytes(&self) -> [u8; 32] {
        let mut out = [0u8; 32];
        for (i, w) in self.words.iter().enumerate() {
            out[i * 8..(i + 1) * 8].copy_from_slice(&w.to_le_bytes());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8; 32]) -> Self {
        let mut words = [0u64; WORDS];
        for (i, w) in words.iter_mut().enumerate() {
            *w = u64::from_le_bytes(bytes[i * 8..(i + 1) * 8].try_into().unwrap());
        }
        RootSet { words }
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        RootSet::from_indices(iter)
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

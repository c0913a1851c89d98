//! Fixed-width bitsets over element ids.

use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut b = Bits::new(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(len: usize, ids: I) -> Self {
        let mut b = Bits::new(len);
        for i in ids {
            b.insert(i);
        }
        b
    }

    /// Universe size (not the number of set bits).
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    /// Returns true if the bit was newly set.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        debug_assert!(i < self.len);
        let w = &mut self.words[i >> 6];
        let mask = 1u64 << (i & 63);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Bits) -> Bits {
        Bits {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
            len: self.len,
        }
    }

    pub fn union(&self, other: &Bits) -> Bits {
        Bits {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
            len: self.len,
        }
    }

    pub fn intersection_count(&self, other: &Bits) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + tz)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn first_difference(&self, other: &Bits) -> Option<usize> {
        self.words
            .iter()
            .zip(&other.words)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(i, (a, b))| i * 64 + (a ^ b).trailing_zeros() as usize)
    }

    fn has_member_above(&self, i: usize) -> bool {
        self.iter().any(|x| x > i)
    }
}

/// Lexicographic order on the sorted member lists.
impl Ord for Bits {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.first_difference(other) {
            None => self.len.cmp(&other.len),
            Some(d) => {
                if self.contains(d) {
                    if other.has_member_above(d) {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    }
                } else if self.has_member_above(d) {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }
}

impl PartialOrd for Bits {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn insert_and_count() {
        let mut b = Bits::new(130);
        assert!(b.insert(0));
        assert!(b.insert(129));
        assert!(!b.insert(129));
        assert_eq!(b.count(), 2);
        assert_eq!(b.to_vec(), vec![0, 129]);
        assert!(Bits::full(130).count() == 130);
    }

    proptest! {
        #[test]
        fn order_matches_sorted_lists(a in proptest::collection::btree_set(0usize..150, 0..20),
                                      b in proptest::collection::btree_set(0usize..150, 0..20)) {
            let ba = Bits::from_ids(150, a.iter().copied());
            let bb = Bits::from_ids(150, b.iter().copied());
            let la: Vec<usize> = a.into_iter().collect();
            let lb: Vec<usize> = b.into_iter().collect();
            prop_assert_eq!(ba.cmp(&bb), la.cmp(&lb));
            prop_assert_eq!(ba.is_subset(&bb), la.iter().all(|x| lb.contains(x)));
        }
    }
}

use core::cmp::Ordering;
use core::fmt;

/// A subset of `{0, .., 63}` stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Set(pub u64);

impl Set {
    pub const EMPTY: Set = Set(0);

    pub fn full(m: usize) -> Set {
        if m >= 64 {
            Set(u64::MAX)
        } else {
            Set((1u64 << m) - 1)
        }
    }

    pub fn singleton(i: usize) -> Set {
        Set(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Set {
        it.into_iter().fold(Set::EMPTY, |s, i| s.with(i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Set {
        Set(self.0 | 1u64 << i)
    }

    pub fn without(self, i: usize) -> Set {
        Set(self.0 & !(1u64 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: Set) -> Set {
        Set(self.0 | o.0)
    }

    pub fn intersection(self, o: Set) -> Set {
        Set(self.0 & o.0)
    }

    pub fn difference(self, o: Set) -> Set {
        Set(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Set) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> SetIter {
        SetIter(self.0)
    }

    /// Lexicographic order of the sorted index lists. For sets of equal size
    /// this is the order used for every "lex-smallest basis" choice.
    pub fn lex_cmp(self, o: Set) -> Ordering {
        let diff = self.0 ^ o.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff.trailing_zeros();
        let tail = |s: u64| s >> low != 0;
        // Below `low` the lists agree; whoever holds `low` is smaller unless
        // the other list has already ended.
        if self.0 >> low & 1 == 1 {
            if tail(o.0) {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if tail(self.0) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl fmt::Debug for Set {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Set {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Set::from_indices(iter)
    }
}

pub struct SetIter(u64);

impl Iterator for SetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for SetIter {}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn lex_oracle(a: Set, b: Set) -> Ordering {
        a.iter().collect::<Vec<_>>().cmp(&b.iter().collect::<Vec<_>>())
    }

    #[test]
    fn lex_matches_sorted_lists() {
        for a in 0u64..64 {
            for b in 0u64..64 {
                assert_eq!(Set(a).lex_cmp(Set(b)), lex_oracle(Set(a), Set(b)), "{a} {b}");
            }
        }
    }

    #[test]
    fn iteration_is_ascending() {
        let s = Set::from_indices([5, 1, 9]);
        assert_eq!(s.iter().collect::<Vec<_>>(), [1, 5, 9]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(9) && !s.contains(2));
    }
}

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A subset of a ground set `{0, ..., 63}` stored as a bit mask.
///
/// `Ord` is the lexicographic order on the increasing element sequences, so
/// `{0, 2} < {0, 3} < {1}` and a proper prefix sorts first.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", from = "Vec<usize>")]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);
    pub const CAPACITY: usize = 64;

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, ..., size - 1}`.
    pub fn full(size: usize) -> Self {
        assert!(size <= Self::CAPACITY);
        if size == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << size) - 1)
        }
    }

    /// `{start, ..., end}`, empty when `start > end`.
    pub fn range_inclusive(start: usize, end: usize) -> Self {
        if start > end {
            return Subset::EMPTY;
        }
        Subset(Subset::full(end + 1).0 & !Subset::full(start).0)
    }

    pub fn singleton(e: usize) -> Self {
        assert!(e < Self::CAPACITY);
        Subset(1u64 << e)
    }

    pub fn contains(self, e: usize) -> bool {
        e < Self::CAPACITY && self.0 >> e & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= Subset::singleton(e).0;
    }

    pub fn remove(&mut self, e: usize) {
        if e < Self::CAPACITY {
            self.0 &= !(1u64 << e);
        }
    }

    pub fn with(self, e: usize) -> Self {
        Subset(self.0 | Subset::singleton(e).0)
    }

    pub fn without(self, e: usize) -> Self {
        let mut s = self;
        s.remove(e);
        s
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Image under `e ↦ map(e)`.
    pub fn map(self, mut f: impl FnMut(usize) -> usize) -> Subset {
        self.iter().fold(Subset::EMPTY, |acc, e| acc.with(f(e)))
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self`, in increasing bit-mask order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(Subset(cur))
        })
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let p = diff.trailing_zeros();
        // Both agree below `p` and exactly one contains `p`. The other one is
        // smaller only if it has nothing left at or above `p`.
        if self.0 >> p & 1 == 1 {
            if other.0 >> p == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 >> p == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Subset::EMPTY, |acc, e| acc.with(e))
    }
}

impl<'a> FromIterator<&'a usize> for Subset {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl From<Vec<usize>> for Subset {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl From<Subset> for Vec<usize> {
    fn from(s: Subset) -> Self {
        s.iter().collect()
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Debug)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl DoubleEndedIterator for Elements {
    fn next_back(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = 63 - self.0.leading_zeros() as usize;
        self.0 &= !(1u64 << e);
        Some(e)
    }
}

use std::fmt;

/// A subset of a group's element indices, stored as a bit mask.
///
/// Subgroups, cover members and the raw Ω/℧ sets are all `ElementSet`s.
/// Ordering is lexicographic on the underlying words, which is only used to
/// make collections of sets deterministic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    parent_order: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(parent_order: usize) -> Self {
        ElementSet {
            parent_order,
            words: vec![0; parent_order.div_ceil(64)],
        }
    }

    pub fn full(parent_order: usize) -> Self {
        let mut s = Self::empty(parent_order);
        for x in 0..parent_order {
            s.insert(x);
        }
        s
    }

    pub fn from_elements(parent_order: usize, elements: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(parent_order);
        for x in elements {
            s.insert(x);
        }
        s
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    /// Inserts `x`, returning `true` if it was not already present.
    ///
    /// Panics if `x` is outside the parent's index range.
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.parent_order, "element {x} out of range");
        let (w, b) = (x / 64, x % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, x: usize) {
        if x < self.parent_order {
            self.words[x / 64] &= !(1 << (x % 64));
        }
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.parent_order && self.words[x / 64] & (1 << (x % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &ElementSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    /// Size of `self \ other` without allocating.
    pub fn count_outside(&self, other: &ElementSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

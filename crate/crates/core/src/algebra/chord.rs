use std::cmp::Ordering;
use std::fmt;

use super::Graded;
use crate::error::{Error, Result};

/// A chord between two distinct strands, stored with `i < j` (1-based).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ChordPair {
    i: usize,
    j: usize,
}

impl ChordPair {
    /// Normalizes `(j, i)` to `(i, j)`. Rejects `i == j` and index 0.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 {
            return Err(Error::InvalidChord {
                i: a,
                j: b,
                n_strands: a.max(b),
            });
        }
        Ok(Self {
            i: a.min(b),
            j: a.max(b),
        })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn contains(&self, strand: usize) -> bool {
        self.i == strand || self.j == strand
    }

    pub fn is_disjoint(&self, other: &ChordPair) -> bool {
        !self.contains(other.i) && !self.contains(other.j)
    }

    /// Position of this pair in the lexicographic list of all pairs on `n` strands.
    pub fn index(&self, n: usize) -> usize {
        (self.i - 1) * (2 * n - self.i) / 2 + (self.j - self.i - 1)
    }

    /// Inverse of [`ChordPair::index`].
    pub fn from_index(n: usize, mut idx: usize) -> Self {
        let mut i = 1;
        loop {
            let row = n - i;
            if idx < row {
                return Self { i, j: i + 1 + idx };
            }
            idx -= row;
            i += 1;
        }
    }

    /// All pairs on `n` strands in lexicographic order.
    pub fn all(n: usize) -> Vec<ChordPair> {
        (1..=n)
            .flat_map(|i| ((i + 1)..=n).map(move |j| ChordPair { i, j }))
            .collect()
    }
}

impl fmt::Display for ChordPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Number of distinct chords on `n` strands.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// An ordered word of chords on an `N`-strand skeleton, listed bottom to top.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HorizontalWord {
    n_strands: usize,
    chords: Vec<ChordPair>,
}

impl HorizontalWord {
    pub fn new(n_strands: usize, chords: Vec<ChordPair>) -> Result<Self> {
        if let Some(bad) = chords.iter().find(|c| c.j > n_strands) {
            return Err(Error::InvalidChord {
                i: bad.i,
                j: bad.j,
                n_strands,
            });
        }
        Ok(Self { n_strands, chords })
    }

    /// Convenience constructor from `(i, j)` tuples.
    pub fn from_pairs(n_strands: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let chords = pairs
            .iter()
            .map(|&(a, b)| ChordPair::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n_strands, chords)
    }

    pub fn empty(n_strands: usize) -> Self {
        Self {
            n_strands,
            chords: Vec::new(),
        }
    }

    pub fn n_strands(&self) -> usize {
        self.n_strands
    }

    pub fn chords(&self) -> &[ChordPair] {
        &self.chords
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    /// Stacks `self` above `below`: the result lists `below`'s chords first.
    pub fn ess_product(&self, below: &HorizontalWord) -> Result<HorizontalWord> {
        if self.n_strands != below.n_strands {
            return Err(Error::StrandMismatch {
                left: self.n_strands,
                right: below.n_strands,
            });
        }
        let mut chords = Vec::with_capacity(self.chords.len() + below.chords.len());
        chords.extend_from_slice(&below.chords);
        chords.extend_from_slice(&self.chords);
        Ok(Self {
            n_strands: self.n_strands,
            chords,
        })
    }

    /// Index of this word among all words of its degree, in graded-lex order.
    pub fn dense_index(&self) -> usize {
        let p = pair_count(self.n_strands);
        self.chords
            .iter()
            .fold(0, |acc, c| acc * p + c.index(self.n_strands))
    }

    pub fn from_dense_index(n_strands: usize, degree: usize, mut idx: usize) -> Self {
        let p = pair_count(n_strands);
        let mut chords = vec![ChordPair { i: 1, j: 2 }; degree];
        for slot in chords.iter_mut().rev() {
            *slot = ChordPair::from_index(n_strands, idx % p);
            idx /= p;
        }
        Self { n_strands, chords }
    }

    /// Relabels strands through `map` (1-based image of each strand).
    pub(crate) fn relabel(&self, map: &[usize]) -> Self {
        let chords = self
            .chords
            .iter()
            .map(|c| ChordPair::new(map[c.i - 1], map[c.j - 1]).expect("bijective relabeling"))
            .collect();
        Self {
            n_strands: self.n_strands,
            chords,
        }
    }
}

impl Graded for HorizontalWord {
    fn degree(&self) -> usize {
        self.chords.len()
    }
}

impl Ord for HorizontalWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n_strands
            .cmp(&other.n_strands)
            .then(self.chords.len().cmp(&other.chords.len()))
            .then_with(|| self.chords.cmp(&other.chords))
    }
}

impl PartialOrd for HorizontalWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for HorizontalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.chords.is_empty() {
            return write!(f, "1");
        }
        for (k, c) in self.chords.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Every word of `degree` chords on `n_strands` strands, in graded-lex order.
pub fn enumerate_words(n_strands: usize, degree: usize) -> Vec<HorizontalWord> {
    let p = pair_count(n_strands);
    let total = p.pow(degree as u32);
    (0..total)
        .map(|idx| HorizontalWord::from_dense_index(n_strands, degree, idx))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, pairs: &[(usize, usize)]) -> HorizontalWord {
        HorizontalWord::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn chord_pair_normalizes() {
        assert_eq!(ChordPair::new(3, 1).unwrap(), ChordPair::new(1, 3).unwrap());
        assert!(ChordPair::new(2, 2).is_err());
        assert!(ChordPair::new(0, 2).is_err());
    }

    #[test]
    fn pair_index_roundtrip() {
        for n in 2..7 {
            let all = ChordPair::all(n);
            assert_eq!(all.len(), pair_count(n));
            for (k, c) in all.iter().enumerate() {
                assert_eq!(c.index(n), k);
                assert_eq!(ChordPair::from_index(n, k), *c);
            }
        }
    }

    #[test]
    fn word_rejects_out_of_range_strand() {
        assert!(HorizontalWord::from_pairs(2, &[(1, 3)]).is_err());
    }

    #[test]
    fn ess_product_stacks_left_on_top() {
        let e = HorizontalWord::empty(3);
        let a = w(3, &[(1, 2)]);
        let b = w(3, &[(2, 3)]);
        assert_eq!(e.ess_product(&a).unwrap(), a);
        assert_eq!(a.ess_product(&b).unwrap(), w(3, &[(2, 3), (1, 2)]));
        let c = w(3, &[(1, 3)]);
        assert_ne!(a.ess_product(&c).unwrap(), c.ess_product(&a).unwrap());
        assert!(a.ess_product(&HorizontalWord::empty(4)).is_err());
    }

    #[test]
    fn word_counts() {
        assert_eq!(enumerate_words(2, 3), vec![w(2, &[(1, 2), (1, 2), (1, 2)])]);
        assert_eq!(enumerate_words(3, 2).len(), 9);
        assert_eq!(enumerate_words(4, 1).len(), 6);
        for n in 2..=5 {
            for m in 0..=4 {
                assert_eq!(enumerate_words(n, m).len(), pair_count(n).pow(m as u32));
            }
        }
    }

    #[test]
    fn enumeration_is_sorted_and_indexed() {
        let words = enumerate_words(4, 2);
        assert!(words.windows(2).all(|p| p[0] < p[1]));
        for (k, word) in words.iter().enumerate() {
            assert_eq!(word.dense_index(), k);
        }
    }

    #[test]
    fn associativity_exhaustive() {
        for n in 2..=4 {
            let small: Vec<_> = (0..=2).flat_map(|m| enumerate_words(n, m)).collect();
            for a in &small {
                for b in &small {
                    let ab = a.ess_product(b).unwrap();
                    for c in &small {
                        let left = a.ess_product(&b.ess_product(c).unwrap()).unwrap();
                        let right = ab.ess_product(c).unwrap();
                        assert_eq!(left, right);
                    }
                }
                let e = HorizontalWord::empty(n);
                assert_eq!(&a.ess_product(&e).unwrap(), a);
                assert_eq!(&e.ess_product(a).unwrap(), a);
            }
        }
    }
}

use std::collections::BTreeMap;
use std::fmt;

use num::complex::Complex64;
use num::Zero;

use super::chord::{ChordPair, HorizontalWord};
use super::{Graded, DEFAULT_ZERO_THRESHOLD};
use crate::error::{Error, Result};

/// Degree-truncated linear combination of horizontal chord words.
#[derive(Clone, Debug, PartialEq)]
pub struct HorizontalSeries {
    n_strands: usize,
    max_degree: usize,
    zero_threshold: f64,
    terms: BTreeMap<HorizontalWord, Complex64>,
}

impl HorizontalSeries {
    pub fn zero(n_strands: usize, max_degree: usize) -> Self {
        Self {
            n_strands,
            max_degree,
            zero_threshold: DEFAULT_ZERO_THRESHOLD,
            terms: BTreeMap::new(),
        }
    }

    /// The algebra unit: coefficient 1 on the empty word.
    pub fn identity(n_strands: usize, max_degree: usize) -> Self {
        let mut s = Self::zero(n_strands, max_degree);
        s.terms
            .insert(HorizontalWord::empty(n_strands), Complex64::new(1.0, 0.0));
        s
    }

    pub fn with_threshold(mut self, zero_threshold: f64) -> Self {
        self.zero_threshold = zero_threshold;
        self.prune();
        self
    }

    /// Builds a series from `(word, coefficient)` pairs, summing repeats and
    /// dropping words above `max_degree`.
    pub fn from_terms<I>(n_strands: usize, max_degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (HorizontalWord, Complex64)>,
    {
        let mut s = Self::zero(n_strands, max_degree);
        for (word, c) in terms {
            if word.n_strands() != n_strands {
                return Err(Error::StrandMismatch {
                    left: n_strands,
                    right: word.n_strands(),
                });
            }
            if word.degree() <= max_degree {
                *s.terms.entry(word).or_insert_with(Complex64::zero) += c;
            }
        }
        s.prune();
        Ok(s)
    }

    /// Builds a series from dense per-degree blocks indexed by
    /// [`HorizontalWord::dense_index`].
    pub(crate) fn from_dense(
        n_strands: usize,
        blocks: &[Vec<Complex64>],
        zero_threshold: f64,
    ) -> Self {
        let mut terms = BTreeMap::new();
        for (m, block) in blocks.iter().enumerate() {
            for (idx, &c) in block.iter().enumerate() {
                if c.norm() >= zero_threshold {
                    terms.insert(HorizontalWord::from_dense_index(n_strands, m, idx), c);
                }
            }
        }
        Self {
            n_strands,
            max_degree: blocks.len().saturating_sub(1),
            zero_threshold,
            terms,
        }
    }

    pub fn n_strands(&self) -> usize {
        self.n_strands
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn zero_threshold(&self) -> f64 {
        self.zero_threshold
    }

    pub fn coefficient(&self, word: &HorizontalWord) -> Complex64 {
        self.terms.get(word).copied().unwrap_or_else(Complex64::zero)
    }

    /// Coefficient of the word given as `(i, j)` pairs; zero for malformed words.
    pub fn coeff(&self, pairs: &[(usize, usize)]) -> Complex64 {
        HorizontalWord::from_pairs(self.n_strands, pairs)
            .map(|w| self.coefficient(&w))
            .unwrap_or_else(|_| Complex64::zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HorizontalWord, &Complex64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn prune(&mut self) {
        let eps = self.zero_threshold;
        self.terms.retain(|_, c| c.norm() >= eps);
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n_strands != other.n_strands {
            return Err(Error::StrandMismatch {
                left: self.n_strands,
                right: other.n_strands,
            });
        }
        if self.max_degree != other.max_degree {
            return Err(Error::DegreeMismatch {
                left: self.max_degree,
                right: other.max_degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.axpy(Complex64::new(1.0, 0.0), other)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.axpy(Complex64::new(-1.0, 0.0), other)
    }

    /// `self + scale * other`.
    pub fn axpy(&self, scale: Complex64, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            *out.terms.entry(w.clone()).or_insert_with(Complex64::zero) += scale * c;
        }
        out.prune();
        Ok(out)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= factor;
        }
        out.prune();
        out
    }

    /// Maximum coefficient modulus over all words.
    pub fn sup_norm(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Maximum coefficient difference, over words of degree at most `degree`.
    pub fn max_abs_diff(&self, other: &Self, degree: usize) -> f64 {
        let mut worst: f64 = 0.0;
        for (w, c) in &self.terms {
            if w.degree() <= degree {
                worst = worst.max((c - other.coefficient(w)).norm());
            }
        }
        for (w, c) in &other.terms {
            if w.degree() <= degree && !self.terms.contains_key(w) {
                worst = worst.max(c.norm());
            }
        }
        worst
    }

    /// Drops everything above `degree`.
    pub fn truncate(&self, degree: usize) -> Self {
        let mut out = self.clone();
        out.max_degree = degree.min(self.max_degree);
        out.terms.retain(|w, _| w.degree() <= degree);
        out
    }

    /// Renames strand `k` to `map[k-1]` in every word.
    pub fn relabel(&self, map: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.n_strands];
        if map.len() != self.n_strands
            || !map
                .iter()
                .all(|&v| v >= 1 && v <= self.n_strands && !std::mem::replace(&mut seen[v - 1], true))
        {
            return Err(Error::InvalidArgument(format!(
                "relabeling {map:?} is not a permutation of 1..={}",
                self.n_strands
            )));
        }
        let terms = self
            .terms
            .iter()
            .map(|(w, &c)| (w.relabel(map), c))
            .collect();
        Ok(Self {
            terms,
            ..self.clone()
        })
    }

    /// Degree-1 element `sum_P v_P |P>` from a dense vector over lexicographic pairs.
    pub fn degree_one(n_strands: usize, max_degree: usize, v: &[Complex64]) -> Self {
        let terms = ChordPair::all(n_strands)
            .into_iter()
            .zip(v.iter().copied())
            .map(|(c, x)| (HorizontalWord::new(n_strands, vec![c]).expect("valid pair"), x));
        Self::from_terms(n_strands, max_degree, terms).expect("matching strands")
    }
}

impl fmt::Display for HorizontalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, c) in &self.terms {
            writeln!(f, "{:>24}  {:+.12} {:+.12}i", w.to_string(), c.re, c.im)?;
        }
        Ok(())
    }
}

/// Bilinear extension of the stacking product: `a` sits above `b`.
/// Words longer than the shared truncation degree are dropped.
pub fn series_product(a: &HorizontalSeries, b: &HorizontalSeries) -> Result<HorizontalSeries> {
    a.check_compatible(b)?;
    let mut out = HorizontalSeries {
        terms: BTreeMap::new(),
        ..a.clone()
    };
    for (wa, &ca) in &a.terms {
        for (wb, &cb) in &b.terms {
            if wa.degree() + wb.degree() > a.max_degree {
                continue;
            }
            let w = wa.ess_product(wb)?;
            *out.terms.entry(w).or_insert_with(Complex64::zero) += ca * cb;
        }
    }
    out.prune();
    Ok(out)
}

/// Power-series ultrametric: `2^-k` for the lowest degree `k` with a differing
/// coefficient, `0` if the series agree through the truncation degree.
pub fn series_distance(a: &HorizontalSeries, b: &HorizontalSeries) -> Result<f64> {
    if a.n_strands != b.n_strands {
        return Err(Error::StrandMismatch {
            left: a.n_strands,
            right: b.n_strands,
        });
    }
    let eps = a.zero_threshold.max(b.zero_threshold);
    let degree = a.max_degree.min(b.max_degree);
    let first = a
        .terms
        .keys()
        .chain(b.terms.keys())
        .filter(|w| w.degree() <= degree)
        .filter(|w| (a.coefficient(w) - b.coefficient(w)).norm() >= eps)
        .map(|w| w.degree())
        .min();
    Ok(first.map_or(0.0, |k| 2f64.powi(-(k as i32))))
}

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::complex::Complex64;
use num::Zero;

use super::{Graded, DEFAULT_ZERO_THRESHOLD};
use crate::error::{Error, Result};

/// `n_circles` disjoint oriented circles, numbered from 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CircleSkeleton {
    pub n_circles: usize,
}

impl CircleSkeleton {
    pub fn new(n_circles: usize) -> Self {
        Self { n_circles }
    }
}

/// A chord diagram on disjoint circles.
///
/// Each circle holds the cyclic sequence of chord labels met while walking
/// along its orientation. The stored form is canonical: chords are labelled
/// in order of first appearance and each circle is rotated so the whole
/// labelled sequence is lexicographically minimal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CircleDiagram {
    circles: Vec<Vec<u32>>,
}

impl CircleDiagram {
    /// Accepts arbitrary chord labels; each label must occur exactly twice.
    pub fn new(circles: Vec<Vec<u32>>) -> Result<Self> {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for &l in circles.iter().flatten() {
            *counts.entry(l).or_default() += 1;
        }
        if let Some((l, n)) = counts.iter().find(|(_, &n)| n != 2) {
            return Err(Error::InvalidArgument(format!(
                "chord label {l} has {n} endpoints, expected 2"
            )));
        }
        Ok(Self::canonical(&circles))
    }

    pub fn empty(n_circles: usize) -> Self {
        Self {
            circles: vec![Vec::new(); n_circles],
        }
    }

    fn canonical(circles: &[Vec<u32>]) -> Self {
        let lengths: Vec<usize> = circles.iter().map(Vec::len).collect();
        let mut shift = vec![0usize; circles.len()];
        let mut best: Option<Vec<Vec<u32>>> = None;
        loop {
            let candidate = relabel_first_appearance(circles, &shift);
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
            // odometer over rotations of every circle
            let mut k = 0;
            loop {
                if k == shift.len() {
                    return Self {
                        circles: best.expect("at least one rotation"),
                    };
                }
                shift[k] += 1;
                if shift[k] < lengths[k].max(1) {
                    break;
                }
                shift[k] = 0;
                k += 1;
            }
        }
    }

    pub fn n_circles(&self) -> usize {
        self.circles.len()
    }

    pub fn circles(&self) -> &[Vec<u32>] {
        &self.circles
    }

    /// True if some chord has both feet adjacent on one circle.
    pub fn has_isolated_chord(&self) -> bool {
        self.circles.iter().any(|c| {
            let n = c.len();
            (0..n).any(|p| n >= 2 && c[p] == c[(p + 1) % n])
        })
    }
}

fn relabel_first_appearance(circles: &[Vec<u32>], shift: &[usize]) -> Vec<Vec<u32>> {
    let mut names: BTreeMap<u32, u32> = BTreeMap::new();
    circles
        .iter()
        .zip(shift)
        .map(|(c, &s)| {
            let n = c.len();
            (0..n)
                .map(|p| {
                    let l = c[(p + s) % n];
                    let next = names.len() as u32;
                    *names.entry(l).or_insert(next)
                })
                .collect()
        })
        .collect()
}

impl Graded for CircleDiagram {
    fn degree(&self) -> usize {
        self.circles.iter().map(Vec::len).sum::<usize>() / 2
    }
}

impl Ord for CircleDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        self.circles
            .len()
            .cmp(&other.circles.len())
            .then(self.degree().cmp(&other.degree()))
            .then_with(|| self.circles.cmp(&other.circles))
    }
}

impl PartialOrd for CircleDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CircleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.circles.iter().enumerate() {
            if k > 0 {
                write!(f, "|")?;
            }
            write!(f, "[")?;
            for (p, l) in c.iter().enumerate() {
                if p > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{l}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// All canonical diagrams of `degree` chords on `n_circles` circles, sorted.
pub fn enumerate_circle_diagrams(n_circles: usize, degree: usize) -> Vec<CircleDiagram> {
    let mut out = BTreeSet::new();
    let slots = 2 * degree;
    let mut labels = vec![0u32; slots];
    let mut matchings = Vec::new();
    perfect_matchings(&mut labels, &mut vec![false; slots], 0, &mut matchings);
    for lengths in compositions(slots, n_circles) {
        for m in &matchings {
            let mut circles = Vec::with_capacity(n_circles);
            let mut start = 0;
            for &len in &lengths {
                circles.push(m[start..start + len].to_vec());
                start += len;
            }
            out.insert(CircleDiagram::canonical(&circles));
        }
    }
    out.into_iter().collect()
}

fn perfect_matchings(
    labels: &mut Vec<u32>,
    used: &mut Vec<bool>,
    next_label: u32,
    out: &mut Vec<Vec<u32>>,
) {
    let Some(first) = used.iter().position(|&u| !u) else {
        out.push(labels.clone());
        return;
    };
    used[first] = true;
    labels[first] = next_label;
    for partner in first + 1..used.len() {
        if !used[partner] {
            used[partner] = true;
            labels[partner] = next_label;
            perfect_matchings(labels, used, next_label + 1, out);
            used[partner] = false;
        }
    }
    used[first] = false;
}

/// Ordered ways of writing `total` as `parts` non-negative summands.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for head in 0..=total {
        for mut tail in compositions(total - head, parts - 1) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Degree-truncated linear combination of circle chord diagrams.
#[derive(Clone, Debug, PartialEq)]
pub struct CircleSeries {
    n_circles: usize,
    max_degree: usize,
    zero_threshold: f64,
    terms: BTreeMap<CircleDiagram, Complex64>,
}

impl CircleSeries {
    pub fn zero(n_circles: usize, max_degree: usize) -> Self {
        Self {
            n_circles,
            max_degree,
            zero_threshold: DEFAULT_ZERO_THRESHOLD,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(n_circles: usize, max_degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (CircleDiagram, Complex64)>,
    {
        let mut s = Self::zero(n_circles, max_degree);
        for (d, c) in terms {
            s.add_term(d, c)?;
        }
        s.prune();
        Ok(s)
    }

    pub fn with_threshold(mut self, zero_threshold: f64) -> Self {
        self.zero_threshold = zero_threshold;
        self.prune();
        self
    }

    pub(crate) fn add_term(&mut self, d: CircleDiagram, c: Complex64) -> Result<()> {
        if d.n_circles() != self.n_circles {
            return Err(Error::CircleMismatch {
                left: self.n_circles,
                right: d.n_circles(),
            });
        }
        if d.degree() <= self.max_degree {
            *self.terms.entry(d).or_insert_with(Complex64::zero) += c;
        }
        Ok(())
    }

    pub(crate) fn prune(&mut self) {
        let eps = self.zero_threshold;
        self.terms.retain(|_, c| c.norm() >= eps);
    }

    pub fn n_circles(&self) -> usize {
        self.n_circles
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn zero_threshold(&self) -> f64 {
        self.zero_threshold
    }

    pub fn coefficient(&self, d: &CircleDiagram) -> Complex64 {
        self.terms.get(d).copied().unwrap_or_else(Complex64::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CircleDiagram, &Complex64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn axpy(&self, scale: Complex64, other: &Self) -> Result<Self> {
        if self.n_circles != other.n_circles {
            return Err(Error::CircleMismatch {
                left: self.n_circles,
                right: other.n_circles,
            });
        }
        let mut out = self.clone();
        for (d, &c) in &other.terms {
            out.add_term(d.clone(), scale * c)?;
        }
        out.prune();
        Ok(out)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.terms
            .keys()
            .chain(other.terms.keys())
            .map(|d| (self.coefficient(d) - other.coefficient(d)).norm())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_and_relabeling_are_quotiented() {
        let a = CircleDiagram::new(vec![vec![7, 3, 7, 3]]).unwrap();
        let b = CircleDiagram::new(vec![vec![3, 7, 3, 7]]).unwrap();
        assert_eq!(a, b);
        let c = CircleDiagram::new(vec![vec![1, 1, 2, 2]]).unwrap();
        let d = CircleDiagram::new(vec![vec![2, 1, 1, 2]]).unwrap();
        assert_eq!(c, d);
        assert_ne!(a, c);
    }

    #[test]
    fn rotation_is_per_circle() {
        let a = CircleDiagram::new(vec![vec![0, 1], vec![0, 1]]).unwrap();
        let b = CircleDiagram::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(a, b);
        let c = CircleDiagram::new(vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        let d = CircleDiagram::new(vec![vec![0, 1, 2], vec![0, 1, 2]]).unwrap();
        assert_ne!(c, d);
    }

    #[test]
    fn rejects_bad_matchings() {
        assert!(CircleDiagram::new(vec![vec![0, 1, 0]]).is_err());
    }

    #[test]
    fn isolated_chords() {
        assert!(CircleDiagram::new(vec![vec![0, 0]]).unwrap().has_isolated_chord());
        assert!(CircleDiagram::new(vec![vec![0, 1, 1, 0]]).unwrap().has_isolated_chord());
        assert!(!CircleDiagram::new(vec![vec![0, 1, 0, 1]]).unwrap().has_isolated_chord());
        assert!(!CircleDiagram::new(vec![vec![0], vec![0]]).unwrap().has_isolated_chord());
    }

    #[test]
    fn one_circle_counts() {
        // up to rotation only; identifying reflections would give 17 at degree 4
        let counts: Vec<_> = (0..=4).map(|m| enumerate_circle_diagrams(1, m).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 18]);
    }

    #[test]
    fn two_circle_degree_one() {
        let ds = enumerate_circle_diagrams(2, 1);
        assert_eq!(ds.len(), 3);
        assert_eq!(ds.iter().filter(|d| !d.has_isolated_chord()).count(), 1);
    }
}

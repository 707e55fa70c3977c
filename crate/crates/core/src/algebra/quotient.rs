use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num::complex::Complex64;
use num::{BigRational, ToPrimitive, Zero};

use super::chord::HorizontalWord;
use super::circle::{CircleDiagram, CircleSeries, CircleSkeleton};
use super::relations::{circle_relations, horizontal_relations, RelationSet};
use super::series::HorizontalSeries;
use super::Graded;
use crate::error::{Error, Result};

type SparseRow = Vec<(usize, BigRational)>;

/// `row += factor * other`, both sorted by column.
fn sparse_axpy(row: &SparseRow, factor: &BigRational, other: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut a, mut b) = (row.iter().peekable(), other.iter().peekable());
    loop {
        match (a.peek(), b.peek()) {
            (Some((ca, va)), Some((cb, vb))) => {
                if ca < cb {
                    out.push((*ca, va.clone()));
                    a.next();
                } else if cb < ca {
                    out.push((*cb, factor * vb));
                    b.next();
                } else {
                    let v = va + factor * vb;
                    if !v.is_zero() {
                        out.push((*ca, v));
                    }
                    a.next();
                    b.next();
                }
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va.clone()));
                a.next();
            }
            (None, Some((cb, vb))) => {
                out.push((*cb, factor * vb));
                b.next();
            }
            (None, None) => break,
        }
    }
    out
}

/// Exact reduced row-echelon form of a relation set, with the elimination
/// map from pivot basis elements onto the free (quotient) basis.
#[derive(Debug)]
pub struct Quotient<K> {
    degree: usize,
    basis: Vec<K>,
    index: BTreeMap<K, usize>,
    /// pivot column -> fully reduced row (pivot entry 1 first)
    pivots: BTreeMap<usize, SparseRow>,
    free: Vec<usize>,
    free_position: Vec<Option<usize>>,
    /// pivot column -> coordinates over `free` of its image in the quotient
    elimination: BTreeMap<usize, Vec<(usize, f64)>>,
}

impl<K: Ord + Clone> Quotient<K> {
    pub fn new(relations: RelationSet<K>) -> Result<Self> {
        let RelationSet {
            degree,
            basis,
            rows,
        } = relations;
        let n = basis.len();
        let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for mut row in rows {
            row.sort_by_key(|e| e.0);
            if let Some((k, _)) = row.iter().find(|(k, _)| *k >= n) {
                return Err(Error::Inconsistent(format!(
                    "row references column {k} but the degree-{degree} basis has {n} elements"
                )));
            }
            row.retain(|(_, v)| !v.is_zero());
            while let Some((lead, coeff)) = row.first().cloned() {
                match pivots.get(&lead) {
                    Some(p) => row = sparse_axpy(&row, &-coeff, p),
                    None => {
                        let inv = coeff.recip();
                        let normalized = row.into_iter().map(|(k, v)| (k, v * &inv)).collect();
                        pivots.insert(lead, normalized);
                        break;
                    }
                }
            }
        }
        // back substitution, highest pivot first
        let keys: Vec<usize> = pivots.keys().rev().copied().collect();
        for p in keys {
            let mut row = pivots[&p].clone();
            loop {
                let hit = row
                    .iter()
                    .skip(1)
                    .find(|(c, _)| pivots.contains_key(c))
                    .cloned();
                match hit {
                    Some((c, v)) => row = sparse_axpy(&row, &-v, &pivots[&c]),
                    None => break,
                }
            }
            pivots.insert(p, row);
        }

        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains_key(c)).collect();
        let mut free_position = vec![None; n];
        for (k, &c) in free.iter().enumerate() {
            free_position[c] = Some(k);
        }
        let elimination = pivots
            .iter()
            .map(|(&p, row)| {
                let image = row
                    .iter()
                    .skip(1)
                    .map(|(c, v)| {
                        let pos = free_position[*c].expect("reduced rows touch only free columns");
                        (pos, -v.to_f64().expect("finite rational"))
                    })
                    .collect();
                (p, image)
            })
            .collect();
        let index = basis
            .iter()
            .enumerate()
            .map(|(k, b)| (b.clone(), k))
            .collect();
        Ok(Self {
            degree,
            basis,
            index,
            pivots,
            free,
            free_position,
            elimination,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Dimension of the quotient in this degree.
    pub fn dimension(&self) -> usize {
        self.free.len()
    }

    pub fn basis(&self) -> &[K] {
        &self.basis
    }

    /// Representatives spanning the quotient, in basis order.
    pub fn free_basis(&self) -> Vec<K> {
        self.free.iter().map(|&c| self.basis[c].clone()).collect()
    }

    pub fn index_of(&self, k: &K) -> Option<usize> {
        self.index.get(k).copied()
    }

    /// Exact image of a rational vector in quotient coordinates.
    pub fn reduce_exact(&self, vector: &[(usize, BigRational)]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.free.len()];
        for (c, v) in vector {
            match self.pivots.get(c) {
                Some(row) => {
                    for (fc, fv) in row.iter().skip(1) {
                        let pos = self.free_position[*fc].expect("free column");
                        out[pos] -= v * fv;
                    }
                }
                None => {
                    let pos = self.free_position[*c].expect("free column");
                    out[pos] += v;
                }
            }
        }
        out
    }

    /// Image of a complex coefficient vector in quotient coordinates.
    pub fn reduce_terms<'a, I>(&self, terms: I) -> Result<Vec<Complex64>>
    where
        I: IntoIterator<Item = (&'a K, Complex64)>,
        K: 'a,
    {
        let mut out = vec![Complex64::zero(); self.free.len()];
        for (k, c) in terms {
            let col = self.index_of(k).ok_or_else(|| {
                Error::Inconsistent(format!(
                    "element outside the degree-{} relation basis",
                    self.degree
                ))
            })?;
            match self.free_position[col] {
                Some(pos) => out[pos] += c,
                None => {
                    for &(pos, f) in &self.elimination[&col] {
                        out[pos] += c * f;
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Quotient coordinates of one degree.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalFormDegree<K> {
    pub degree: usize,
    pub basis: Vec<K>,
    pub coords: Vec<Complex64>,
}

/// Coordinates of a series in the quotient, degree by degree.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalFormSeries<K> {
    pub skeleton: SkeletonKey,
    pub max_degree: usize,
    pub degrees: Vec<NormalFormDegree<K>>,
}

impl<K: Clone> NormalFormSeries<K> {
    pub fn degree(&self, m: usize) -> Option<&NormalFormDegree<K>> {
        self.degrees.get(m)
    }

    /// Sup-norm distance; both sides must share the quotient basis.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        if self.skeleton != other.skeleton || self.degrees.len() != other.degrees.len() {
            return Err(Error::InvalidArgument(
                "normal forms over different quotients".into(),
            ));
        }
        Ok(self
            .degrees
            .iter()
            .zip(&other.degrees)
            .flat_map(|(a, b)| a.coords.iter().zip(&b.coords).map(|(x, y)| (x - y).norm()))
            .fold(0.0, f64::max))
    }

    pub fn sup_norm(&self) -> f64 {
        self.degrees
            .iter()
            .flat_map(|d| d.coords.iter().map(|c| c.norm()))
            .fold(0.0, f64::max)
    }

    /// Representatives with their coordinates, skipping exact zeros.
    pub fn terms(&self) -> impl Iterator<Item = (&K, Complex64)> {
        self.degrees
            .iter()
            .flat_map(|d| d.basis.iter().zip(d.coords.iter().copied()))
            .filter(|(_, c)| !c.is_zero())
    }
}

/// Skeleton identity used to key cached quotients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SkeletonKey {
    Strands(usize),
    Circles(usize),
}

type Shared<K> = RwLock<HashMap<(usize, usize), Arc<Quotient<K>>>>;

/// Row-reduced relation sets keyed by skeleton and degree.
///
/// Readers share built quotients; a missing entry is built outside the lock
/// and inserted once.
#[derive(Default)]
pub struct QuotientCache {
    horizontal: Shared<HorizontalWord>,
    circles: Shared<CircleDiagram>,
}

impl QuotientCache {
    pub fn global() -> &'static QuotientCache {
        static CACHE: OnceLock<QuotientCache> = OnceLock::new();
        CACHE.get_or_init(QuotientCache::default)
    }

    pub fn horizontal(&self, n_strands: usize, degree: usize) -> Result<Arc<Quotient<HorizontalWord>>> {
        fetch(&self.horizontal, (n_strands, degree), || {
            Quotient::new(horizontal_relations(n_strands, degree))
        })
    }

    pub fn circle(&self, n_circles: usize, degree: usize) -> Result<Arc<Quotient<CircleDiagram>>> {
        fetch(&self.circles, (n_circles, degree), || {
            Quotient::new(circle_relations(CircleSkeleton::new(n_circles), degree))
        })
    }
}

fn fetch<K>(
    map: &Shared<K>,
    key: (usize, usize),
    build: impl FnOnce() -> Result<Quotient<K>>,
) -> Result<Arc<Quotient<K>>> {
    if let Some(q) = map.read().expect("cache lock").get(&key) {
        return Ok(q.clone());
    }
    let built = Arc::new(build()?);
    let mut guard = map.write().expect("cache lock");
    Ok(guard.entry(key).or_insert(built).clone())
}

/// Reduces graded terms against per-degree quotients `quotients[m]`.
pub fn reduce<'a, K, I>(
    skeleton: SkeletonKey,
    terms: I,
    quotients: &[Arc<Quotient<K>>],
) -> Result<NormalFormSeries<K>>
where
    K: Ord + Clone + Graded + 'a,
    I: IntoIterator<Item = (&'a K, Complex64)>,
{
    let mut by_degree: Vec<Vec<(&K, Complex64)>> = vec![Vec::new(); quotients.len()];
    for (k, c) in terms {
        let m = k.degree();
        let slot = by_degree.get_mut(m).ok_or_else(|| {
            Error::Inconsistent(format!("term of degree {m} but relations only cover {}", quotients.len()))
        })?;
        slot.push((k, c));
    }
    let degrees = quotients
        .iter()
        .zip(by_degree)
        .map(|(q, terms)| {
            Ok(NormalFormDegree {
                degree: q.degree(),
                basis: q.free_basis(),
                coords: q.reduce_terms(terms)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NormalFormSeries {
        skeleton,
        max_degree: quotients.len().saturating_sub(1),
        degrees,
    })
}

/// Normal form of a horizontal series modulo 4T and disjoint commutation.
pub fn reduce_horizontal(series: &HorizontalSeries) -> Result<NormalFormSeries<HorizontalWord>> {
    let n = series.n_strands();
    let cache = QuotientCache::global();
    let quotients = (0..=series.max_degree())
        .map(|m| cache.horizontal(n, m))
        .collect::<Result<Vec<_>>>()?;
    reduce(
        SkeletonKey::Strands(n),
        series.terms().map(|(w, c)| (w, *c)),
        &quotients,
    )
}

/// Normal form of a circle series modulo 4T and framing independence.
pub fn reduce_circle(series: &CircleSeries) -> Result<NormalFormSeries<CircleDiagram>> {
    let q = series.n_circles();
    let cache = QuotientCache::global();
    let quotients = (0..=series.max_degree())
        .map(|m| cache.circle(q, m))
        .collect::<Result<Vec<_>>>()?;
    reduce(
        SkeletonKey::Circles(q),
        series.terms().map(|(d, c)| (d, *c)),
        &quotients,
    )
}

pub fn quotient_dimension_strands(n_strands: usize, degree: usize) -> Result<usize> {
    Ok(QuotientCache::global().horizontal(n_strands, degree)?.dimension())
}

pub fn quotient_dimension_circles(n_circles: usize, degree: usize) -> Result<usize> {
    Ok(QuotientCache::global().circle(n_circles, degree)?.dimension())
}

#[cfg(test)]
mod tests {
    use super::super::enumerate_words;
    use super::*;
    use num::BigInt;
    use proptest::prelude::*;

    fn ratio(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn one_circle_dimensions() {
        let dims: Vec<_> = (0..=3)
            .map(|m| quotient_dimension_circles(1, m).unwrap())
            .collect();
        assert_eq!(dims, vec![1, 0, 1, 1]);
    }

    #[test]
    fn three_strand_dimensions_follow_pure_braid_growth() {
        // U(t_3) has Hilbert series 1/((1-x)(1-2x))
        for m in 0..=4 {
            assert_eq!(quotient_dimension_strands(3, m).unwrap(), (1 << (m + 1)) - 1);
        }
    }

    #[test]
    fn four_strand_dimensions() {
        // 1/((1-x)(1-2x)(1-3x)) = 1 + 6x + 25x^2 + 90x^3 + ...
        let dims: Vec<_> = (0..=3)
            .map(|m| quotient_dimension_strands(4, m).unwrap())
            .collect();
        assert_eq!(dims, vec![1, 6, 25, 90]);
    }

    #[test]
    fn two_strands_are_free() {
        for m in 0..=3 {
            assert_eq!(quotient_dimension_strands(2, m).unwrap(), 1);
        }
    }

    #[test]
    fn every_row_reduces_to_zero() {
        for (n, m) in [(3, 2), (3, 3), (4, 2)] {
            let set = horizontal_relations(n, m);
            let q = Quotient::new(set.clone()).unwrap();
            for row in &set.rows {
                assert!(q.reduce_exact(row).iter().all(Zero::is_zero));
                let complex = row
                    .iter()
                    .map(|(k, v)| (&set.basis[*k], Complex64::new(v.to_f64().unwrap(), 0.0)));
                let coords = q.reduce_terms(complex).unwrap();
                assert!(coords.iter().all(|c| c.norm() < 1e-12));
            }
        }
        for (c, m) in [(1, 2), (1, 3), (2, 2), (2, 3)] {
            let set = circle_relations(CircleSkeleton::new(c), m);
            let q = Quotient::new(set.clone()).unwrap();
            for row in &set.rows {
                assert!(q.reduce_exact(row).iter().all(Zero::is_zero));
            }
        }
    }

    #[test]
    fn unknown_column_is_inconsistent() {
        let mut set = horizontal_relations(3, 2);
        set.rows.push(vec![(999, ratio(1))]);
        assert!(matches!(Quotient::new(set), Err(Error::Inconsistent(_))));
    }

    #[test]
    fn zero_series_reduces_to_zero() {
        let nf = reduce_horizontal(&HorizontalSeries::zero(3, 3)).unwrap();
        assert_eq!(nf.sup_norm(), 0.0);
        assert_eq!(nf.degrees.len(), 4);
    }

    proptest! {
        #[test]
        fn reduction_is_idempotent(entries in proptest::collection::vec((0usize..27, -3i32..=3), 1..10)) {
            let words = enumerate_words(3, 3);
            let series = HorizontalSeries::from_terms(
                3,
                3,
                entries.iter().map(|&(k, v)| (words[k].clone(), Complex64::new(v as f64, 0.5))),
            ).unwrap();
            let nf = reduce_horizontal(&series).unwrap();
            let again = HorizontalSeries::from_terms(
                3,
                3,
                nf.terms().map(|(w, c)| (w.clone(), c)),
            ).unwrap();
            let nf2 = reduce_horizontal(&again).unwrap();
            prop_assert!(nf.max_abs_diff(&nf2).unwrap() < 1e-12);
        }
    }
}

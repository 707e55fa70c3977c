use std::collections::BTreeMap;

use num::complex::Complex64;
use num::Zero;

use super::connection::omega_from;
use crate::algebra::{pair_count, ChordPair, Graded, HorizontalSeries, HorizontalWord};
use crate::error::Result;
use crate::geometry::ConfigLoop;

const SIMPSON_PANELS: usize = 1024;

/// `∫₀¹ ω dt` per chord pair (lexicographic order), composite Simpson per segment.
pub fn integrate_connection(lp: &ConfigLoop) -> Vec<Complex64> {
    let mut total = vec![Complex64::zero(); pair_count(lp.n_strands())];
    for seg in lp.segments() {
        let h = 1.0 / SIMPSON_PANELS as f64;
        for k in 0..=SIMPSON_PANELS {
            let weight = if k == 0 || k == SIMPSON_PANELS {
                1.0
            } else if k % 2 == 1 {
                4.0
            } else {
                2.0
            };
            let (z, v) = seg.sample_local(k as f64 * h);
            let w = omega_from(&z, &v);
            // ω is a rate in global time; the segment spans `duration` of it
            let scale = weight * h / 3.0 * seg.duration;
            for (acc, c) in total.iter_mut().zip(w.coefficients()) {
                *acc += c * scale;
            }
        }
    }
    total
}

/// Holonomy with chords treated as commuting: `exp(∫ω)`, written in words.
///
/// Every ordering of a chord multiset carries the same coefficient
/// `∏_k v_{P_k} / m!`, so the series is symmetric under reordering.
pub fn abelian_holonomy(lp: &ConfigLoop, max_degree: usize) -> Result<HorizontalSeries> {
    let v = integrate_connection(lp);
    let p = v.len();
    let mut blocks: Vec<Vec<Complex64>> = vec![vec![Complex64::new(1.0, 0.0)]];
    for m in 1..=max_degree {
        let prev = &blocks[m - 1];
        let mut next = vec![Complex64::zero(); prev.len() * p];
        for (idx, &c) in prev.iter().enumerate() {
            for (q, &x) in v.iter().enumerate() {
                next[idx * p + q] = c * x / m as f64;
            }
        }
        blocks.push(next);
    }
    Ok(HorizontalSeries::from_dense(
        lp.n_strands(),
        &blocks,
        crate::algebra::DEFAULT_ZERO_THRESHOLD,
    ))
}

/// Replaces each coefficient by the mean over all distinct orderings of the
/// word's chords.
pub fn symmetrize(series: &HorizontalSeries) -> HorizontalSeries {
    let mut groups: BTreeMap<Vec<ChordPair>, Complex64> = BTreeMap::new();
    for (w, &c) in series.terms() {
        let mut key = w.chords().to_vec();
        key.sort();
        *groups.entry(key).or_insert_with(Complex64::zero) += c;
    }
    let n = series.n_strands();
    let mut terms = Vec::new();
    for (key, sum) in groups {
        let orderings = distinct_permutations(&key);
        let mean = sum / orderings.len() as f64;
        for chords in orderings {
            let w = HorizontalWord::new(n, chords).expect("chords from a valid word");
            debug_assert_eq!(w.degree(), key.len());
            terms.push((w, mean));
        }
    }
    HorizontalSeries::from_terms(n, series.max_degree(), terms)
        .expect("same skeleton")
        .with_threshold(series.zero_threshold())
}

/// All distinct rearrangements of a sorted slice.
fn distinct_permutations(sorted: &[ChordPair]) -> Vec<Vec<ChordPair>> {
    let mut current = sorted.to_vec();
    let mut out = vec![current.clone()];
    // next lexicographic permutation until it wraps
    loop {
        let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..current.len()).rev().find(|&j| current[j] > current[i - 1]).expect("pivot");
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::geometry::realize;

    #[test]
    fn identity_loop() {
        let lp = realize(&BraidWord::identity(3).unwrap());
        assert_eq!(abelian_holonomy(&lp, 3).unwrap(), HorizontalSeries::identity(3, 3));
    }

    #[test]
    fn single_pair_closed_form() {
        let lp = realize(&BraidWord::parse("1", 2).unwrap());
        let s = abelian_holonomy(&lp, 4).unwrap();
        let mut expected = 1.0;
        let mut word = Vec::new();
        for m in 1..=4 {
            expected *= 0.5 / m as f64;
            word.push((1, 2));
            assert!((s.coeff(&word).re - expected).abs() < 1e-13);
        }
    }

    #[test]
    fn distinct_orderings() {
        let a = ChordPair::new(1, 2).unwrap();
        let b = ChordPair::new(1, 3).unwrap();
        assert_eq!(distinct_permutations(&[a, a, b]).len(), 3);
        assert_eq!(distinct_permutations(&[a, b]).len(), 2);
        assert_eq!(distinct_permutations(&[]).len(), 1);
    }

    #[test]
    fn symmetrize_spreads_mass() {
        let s = HorizontalSeries::from_terms(
            3,
            2,
            [(HorizontalWord::from_pairs(3, &[(1, 2), (1, 3)]).unwrap(), Complex64::new(2.0, 0.0))],
        )
        .unwrap();
        let sym = symmetrize(&s);
        assert_eq!(sym.coeff(&[(1, 2), (1, 3)]).re, 1.0);
        assert_eq!(sym.coeff(&[(1, 3), (1, 2)]).re, 1.0);
    }
}

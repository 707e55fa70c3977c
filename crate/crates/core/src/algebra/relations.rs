use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, BigRational};

use super::chord::{enumerate_words, pair_count, ChordPair, HorizontalWord};
use super::circle::{enumerate_circle_diagrams, CircleDiagram, CircleSkeleton};

/// Linear relations among the basis elements of one degree.
///
/// Each row is a sparse vector over `basis` that vanishes in the quotient.
#[derive(Clone, Debug)]
pub struct RelationSet<K> {
    pub degree: usize,
    pub basis: Vec<K>,
    pub rows: Vec<Vec<(usize, BigRational)>>,
}

impl<K> RelationSet<K> {
    fn from_integer_rows(degree: usize, basis: Vec<K>, rows: BTreeSet<Vec<(usize, i64)>>) -> Self {
        let rows = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|(k, v)| (k, BigRational::from_integer(BigInt::from(v))))
                    .collect()
            })
            .collect();
        Self {
            degree,
            basis,
            rows,
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

fn finish_row(acc: BTreeMap<usize, i64>) -> Option<Vec<(usize, i64)>> {
    let row: Vec<_> = acc.into_iter().filter(|&(_, v)| v != 0).collect();
    (!row.is_empty()).then_some(row)
}

/// 4T (`[t_ab, t_ac + t_bc] = 0` for every triple and every choice of the
/// distinguished pair) and disjoint commutation (`[t_ij, t_kl] = 0`) relations,
/// embedded at every adjacent height pair of degree-`degree` words.
pub fn horizontal_relations(n_strands: usize, degree: usize) -> RelationSet<HorizontalWord> {
    let basis = enumerate_words(n_strands, degree);
    let mut rows = BTreeSet::new();
    if degree < 2 {
        return RelationSet::from_integer_rows(degree, basis, rows);
    }
    let p = pair_count(n_strands);
    let pairs = ChordPair::all(n_strands);
    let id = |c: (usize, usize)| ChordPair::new(c.0, c.1).expect("distinct").index(n_strands);

    // local two-chord relations as (coefficient, lower, upper)
    let mut local: Vec<Vec<(i64, usize, usize)>> = Vec::new();
    for i in 1..=n_strands {
        for j in i + 1..=n_strands {
            for k in j + 1..=n_strands {
                let triple = [(i, j), (i, k), (j, k)];
                for a in 0..3 {
                    let fixed = id(triple[a]);
                    let mut rel = Vec::new();
                    for b in (0..3).filter(|&b| b != a) {
                        let other = id(triple[b]);
                        rel.push((1, fixed, other));
                        rel.push((-1, other, fixed));
                    }
                    local.push(rel);
                }
            }
        }
    }
    for (x, a) in pairs.iter().enumerate() {
        for (y, b) in pairs.iter().enumerate().skip(x + 1) {
            if a.is_disjoint(b) {
                local.push(vec![(1, x, y), (-1, y, x)]);
            }
        }
    }

    for below in 0..=degree - 2 {
        let above = degree - 2 - below;
        let n_below = p.pow(below as u32);
        let n_above = p.pow(above as u32);
        for u in 0..n_below {
            for v in 0..n_above {
                for rel in &local {
                    let mut acc = BTreeMap::new();
                    for &(c, lo, hi) in rel {
                        let idx = ((u * p + lo) * p + hi) * n_above + v;
                        *acc.entry(idx).or_insert(0) += c;
                    }
                    if let Some(row) = finish_row(acc) {
                        rows.insert(row);
                    }
                }
            }
        }
    }
    RelationSet::from_integer_rows(degree, basis, rows)
}

/// Framing rows (one per diagram with an isolated chord) and every 4T
/// instance among degree-`degree` diagrams on `skeleton`.
///
/// A 4T instance fixes a chord `c` with feet `a`, `b` and slides one foot of
/// another chord across them: `D(after a) - D(before a) + D(after b) - D(before b)`.
pub fn circle_relations(skeleton: CircleSkeleton, degree: usize) -> RelationSet<CircleDiagram> {
    let basis = enumerate_circle_diagrams(skeleton.n_circles, degree);
    let index: BTreeMap<&CircleDiagram, usize> =
        basis.iter().enumerate().map(|(k, d)| (d, k)).collect();
    let lookup = |circles: &[Vec<u32>]| -> usize {
        let d = CircleDiagram::new(circles.to_vec()).expect("valid matching");
        index[&d]
    };
    let mut rows = BTreeSet::new();

    for (k, d) in basis.iter().enumerate() {
        if d.has_isolated_chord() {
            rows.insert(vec![(k, 1)]);
        }
    }

    for d in &basis {
        let circles = d.circles();
        let feet: Vec<(usize, usize)> = circles
            .iter()
            .enumerate()
            .flat_map(|(ci, c)| (0..c.len()).map(move |pi| (ci, pi)))
            .collect();
        for &(fc, fp) in &feet {
            let moving = circles[fc][fp];
            let mut partial = circles.to_vec();
            partial[fc].remove(fp);
            for fixed in (0..degree as u32).filter(|&l| l != moving) {
                let mut acc = BTreeMap::new();
                for (cc, c) in partial.iter().enumerate() {
                    for (cp, &l) in c.iter().enumerate() {
                        if l != fixed {
                            continue;
                        }
                        for (offset, sign) in [(1usize, 1i64), (0, -1)] {
                            let mut term = partial.clone();
                            term[cc].insert(cp + offset, moving);
                            *acc.entry(lookup(&term)).or_insert(0) += sign;
                        }
                    }
                }
                if let Some(row) = finish_row(acc) {
                    rows.insert(row);
                }
            }
        }
    }
    RelationSet::from_integer_rows(degree, basis, rows)
}

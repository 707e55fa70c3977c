//! Brute-force dimension oracle for chord diagrams on one oriented circle,
//! written independently of the library's enumeration and elimination.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num::rational::Rational64;
use num::{One, Zero};

/// All perfect matchings of `0..2m` as partner arrays.
fn matchings(points: usize) -> Vec<Vec<usize>> {
    fn go(partner: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(first) = partner.iter().position(|&p| p == usize::MAX) else {
            out.push(partner.clone());
            return;
        };
        for second in first + 1..partner.len() {
            if partner[second] == usize::MAX {
                partner[first] = second;
                partner[second] = first;
                go(partner, out);
                partner[first] = usize::MAX;
                partner[second] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; points], &mut out);
    out
}

/// Rotation-invariant key: partner offsets, minimized over rotations.
fn key(partner: &[usize]) -> Vec<usize> {
    let n = partner.len();
    let offsets: Vec<usize> = (0..n).map(|p| (partner[p] + n - p) % n).collect();
    (0..n.max(1))
        .map(|r| (0..n).map(|p| offsets[(p + r) % n]).collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// Partner array after walking the circle in `order` (a list of endpoint ids).
fn relabel(order: &[usize], partner: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (k, &e) in order.iter().enumerate() {
        pos[e] = k;
    }
    order.iter().map(|&e| pos[partner[e]]).collect()
}

fn rank(mut rows: Vec<Vec<Rational64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational64::one() / rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c];
                for (x, &v) in row.iter_mut().zip(&pivot) {
                    *x -= f * v;
                }
            }
        }
        r += 1;
    }
    r
}

/// dim of chord diagrams of degree `m` on one circle modulo 4T and framing.
pub fn one_circle_dimension(m: usize) -> usize {
    let points = 2 * m;
    let all = matchings(points);
    let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for p in &all {
        let next = index.len();
        index.entry(key(p)).or_insert(next);
    }
    let n = index.len();
    let mut rows = Vec::new();
    for partner in &all {
        if (0..points).any(|p| partner[p] == (p + 1) % points) {
            let mut row = vec![Rational64::zero(); n];
            row[index[&key(partner)]] = Rational64::one();
            rows.push(row);
        }
        for moving in 0..points {
            for a in 0..points {
                let b = partner[a];
                if a > b || a == moving || b == moving || partner[moving] == a || partner[moving] == b {
                    continue;
                }
                let mut row = vec![Rational64::zero(); n];
                let base: Vec<usize> = (0..points).filter(|&e| e != moving).collect();
                for (foot, after, sign) in [(a, true, 1), (a, false, -1), (b, true, 1), (b, false, -1)] {
                    let mut order = base.clone();
                    let at = order.iter().position(|&e| e == foot).unwrap() + usize::from(after);
                    order.insert(at, moving);
                    row[index[&key(&relabel(&order, partner))]] += Rational64::from_integer(sign);
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    n - if rows.is_empty() { 0 } else { rank(rows) }
}

use num::complex::Complex64;
use num::Zero;

use super::connection::omega_from;
use crate::algebra::{pair_count, HorizontalSeries, DEFAULT_ZERO_THRESHOLD};
use crate::error::{Error, Result};
use crate::geometry::{ConfigLoop, Segment};

/// Default fixed step count per braid letter.
pub const DEFAULT_STEPS_PER_LETTER: usize = 512;

/// Holonomy of the KZ connection along a loop.
#[derive(Clone, Debug)]
pub struct TransportResult {
    pub series: HorizontalSeries,
    /// Total integration steps behind `series`.
    pub steps_used: usize,
    /// Step-doubling estimate of the sup-norm error of `series`.
    pub richardson_error_estimate: f64,
}

type Blocks = Vec<Vec<Complex64>>;

fn zeros_like(blocks: &Blocks) -> Blocks {
    blocks.iter().map(|b| vec![Complex64::zero(); b.len()]).collect()
}

/// `out = omega ⊛ (base + scale * incr)`: the new chord goes on top, which
/// appends it to the word.
fn left_multiply(omega: &[Complex64], base: &Blocks, incr: Option<(&Blocks, f64)>, out: &mut Blocks) {
    let p = omega.len();
    out[0][0] = Complex64::zero();
    for m in 1..out.len() {
        let (lower, upper) = (&base[m - 1], &mut out[m]);
        for (idx, &b) in lower.iter().enumerate() {
            let x = match incr {
                Some((k, s)) => b + k[m - 1][idx] * s,
                None => b,
            };
            let row = &mut upper[idx * p..(idx + 1) * p];
            for (slot, &w) in row.iter_mut().zip(omega) {
                *slot = w * x;
            }
        }
    }
}

fn rk4_segment(seg: &Segment, state: &mut Blocks, steps: usize) -> Result<()> {
    let h = seg.duration / steps as f64;
    let omega = |u: f64| {
        let (z, v) = seg.sample_local(u);
        omega_from(&z, &v).into_coefficients()
    };
    let mut k1 = zeros_like(state);
    let mut k2 = zeros_like(state);
    let mut k3 = zeros_like(state);
    let mut k4 = zeros_like(state);
    let mut w_next = omega(0.0);
    for step in 0..steps {
        let w0 = std::mem::take(&mut w_next);
        let wm = omega((step as f64 + 0.5) / steps as f64);
        w_next = omega((step + 1) as f64 / steps as f64);
        left_multiply(&w0, state, None, &mut k1);
        left_multiply(&wm, state, Some((&k1, 0.5 * h)), &mut k2);
        left_multiply(&wm, state, Some((&k2, 0.5 * h)), &mut k3);
        left_multiply(&w_next, state, Some((&k3, h)), &mut k4);
        for m in 1..state.len() {
            for (idx, s) in state[m].iter_mut().enumerate() {
                *s += (k1[m][idx] + 2.0 * (k2[m][idx] + k3[m][idx]) + k4[m][idx]) * (h / 6.0);
            }
        }
        if state.iter().flatten().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::NonFinite {
                t: seg.t_start + seg.duration * (step + 1) as f64 / steps as f64,
            });
        }
    }
    Ok(())
}

fn transport_blocks(lp: &ConfigLoop, max_degree: usize, steps: usize) -> Result<Blocks> {
    let p = pair_count(lp.n_strands());
    let mut state: Blocks = (0..=max_degree)
        .map(|m| vec![Complex64::zero(); p.pow(m as u32)])
        .collect();
    state[0][0] = Complex64::new(1.0, 0.0);
    for seg in lp.segments() {
        rk4_segment(seg, &mut state, steps)?;
    }
    Ok(state)
}

fn max_diff(a: &Blocks, b: &Blocks) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Solves `T' = ω(t) ⊛ T`, `T(0) = 1` with classical fourth-order stepping,
/// `steps` per loop segment, in the algebra truncated above `max_degree`.
/// The coefficient of a word is the iterated integral of its chords' KZ
/// coefficients over the ordered simplex, lowest chord first.
pub fn transport(lp: &ConfigLoop, max_degree: usize, steps: usize) -> Result<TransportResult> {
    if steps == 0 {
        return Err(Error::InvalidArgument("transport needs at least one step".into()));
    }
    let fine = transport_blocks(lp, max_degree, steps)?;
    // error of the `steps` solution from a companion run at half or double resolution
    let estimate = if steps.is_multiple_of(2) {
        max_diff(&fine, &transport_blocks(lp, max_degree, steps / 2)?) / 15.0
    } else {
        max_diff(&fine, &transport_blocks(lp, max_degree, 2 * steps)?) * 16.0 / 15.0
    };
    Ok(TransportResult {
        series: HorizontalSeries::from_dense(lp.n_strands(), &fine, DEFAULT_ZERO_THRESHOLD),
        steps_used: steps * lp.segments().len(),
        richardson_error_estimate: estimate,
    })
}

/// Transport without the companion error-estimate run.
pub fn transport_fixed(lp: &ConfigLoop, max_degree: usize, steps: usize) -> Result<HorizontalSeries> {
    if steps == 0 {
        return Err(Error::InvalidArgument("transport needs at least one step".into()));
    }
    let blocks = transport_blocks(lp, max_degree, steps)?;
    Ok(HorizontalSeries::from_dense(lp.n_strands(), &blocks, DEFAULT_ZERO_THRESHOLD))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::geometry::realize;

    fn z(word: &str, n: usize, m: usize) -> HorizontalSeries {
        transport(&realize(&BraidWord::parse(word, n).unwrap()), m, 128)
            .unwrap()
            .series
    }

    #[test]
    fn identity_braid() {
        let s = z("", 3, 4);
        assert_eq!(s, HorizontalSeries::identity(3, 4));
    }

    #[test]
    fn half_twist_is_ordered_exponential_of_constant() {
        let s = z("1", 2, 4);
        let mut expected = 1.0;
        let mut word = Vec::new();
        for m in 1..=4 {
            expected *= 0.5 / m as f64;
            word.push((1, 2));
            assert!((s.coeff(&word) - Complex64::new(expected, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn full_twist_winds_once() {
        let s = z("1 1", 2, 1);
        assert!((s.coeff(&[(1, 2)]) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn retraced_loop_is_trivial() {
        let s = z("1 -1", 2, 3);
        assert!(s.max_abs_diff(&HorizontalSeries::identity(2, 3), 3) < 1e-9);
        let s = z("2 -2", 3, 3);
        assert!(s.max_abs_diff(&HorizontalSeries::identity(3, 3), 3) < 1e-9);
    }

    #[test]
    fn zero_steps_rejected() {
        let lp = realize(&BraidWord::parse("1", 2).unwrap());
        assert!(transport(&lp, 2, 0).is_err());
    }

    #[test]
    fn empty_word_coefficient_is_exactly_one() {
        let s = z("1 2 -1", 3, 2);
        assert_eq!(s.coeff(&[]), Complex64::new(1.0, 0.0));
    }
}

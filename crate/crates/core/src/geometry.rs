//! Realization of braid words as loops of `N` points in the complex plane.
//!
//! Strands start on the real axis at `0, 1, ..., N-1`. A generator `σ_k`
//! swaps the points at positions `k-1` and `k` by a half turn on the circle
//! of radius 1/2 about their midpoint: counterclockwise for `σ_k`, clockwise
//! for `σ_k⁻¹`. All other points stay put.

use std::f64::consts::PI;

use num::complex::Complex64;

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};

/// Reparametrization applied to local time within every letter.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub enum TimeWarp {
    #[default]
    Linear,
    /// `s = 3u² - 2u³`: the swap starts and stops at rest.
    Smoothstep,
}

impl TimeWarp {
    fn eval(&self, u: f64) -> (f64, f64) {
        match self {
            TimeWarp::Linear => (u, 1.0),
            TimeWarp::Smoothstep => (u * u * (3.0 - 2.0 * u), 6.0 * u * (1.0 - u)),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct RealizeOptions {
    /// Relative duration of each letter; equal when `None`.
    pub durations: Option<Vec<f64>>,
    pub warp: TimeWarp,
}

/// One half-twist: the only non-stationary piece of a loop.
#[derive(Clone, Debug)]
pub struct Segment {
    pub letter: Letter,
    pub t_start: f64,
    pub duration: f64,
    /// strand -> real position at the start of the segment
    start: Vec<f64>,
    /// strands (0-based) at the left and right swap positions
    left: usize,
    right: usize,
    warp: TimeWarp,
}

impl Segment {
    /// Positions and `d/dt` velocities (global time) at local time `u ∈ [0,1]`.
    pub fn sample_local(&self, u: f64) -> (Vec<Complex64>, Vec<Complex64>) {
        let mut pos: Vec<Complex64> = self.start.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        let mut vel = vec![Complex64::new(0.0, 0.0); pos.len()];
        let (s, ds) = self.warp.eval(u);
        let p = self.start[self.left];
        let center = Complex64::new(p + 0.5, 0.0);
        let turn = if self.letter.positive { 1.0 } else { -1.0 };
        let phase = Complex64::from_polar(0.5, turn * PI * s);
        let dphase = phase * Complex64::new(0.0, turn * PI) * (ds / self.duration);
        pos[self.left] = center - phase;
        vel[self.left] = -dphase;
        pos[self.right] = center + phase;
        vel[self.right] = dphase;
        (pos, vel)
    }
}

/// A closed loop in the configuration space of `N` distinct points.
#[derive(Clone, Debug)]
pub struct ConfigLoop {
    n_strands: usize,
    segments: Vec<Segment>,
}

impl ConfigLoop {
    pub fn n_strands(&self) -> usize {
        self.n_strands
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Exact positions and velocities at global time `t ∈ [0,1]`.
    pub fn sample(&self, t: f64) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::TimeOutOfRange(t));
        }
        if self.segments.is_empty() {
            let pos = (0..self.n_strands)
                .map(|k| Complex64::new(k as f64, 0.0))
                .collect();
            return Ok((pos, vec![Complex64::new(0.0, 0.0); self.n_strands]));
        }
        let k = self
            .segments
            .iter()
            .rposition(|s| s.t_start <= t)
            .unwrap_or(0);
        let seg = &self.segments[k];
        let u = ((t - seg.t_start) / seg.duration).clamp(0.0, 1.0);
        Ok(seg.sample_local(u))
    }

    /// Smallest pairwise distance over `n_samples` evenly spaced times.
    pub fn min_separation(&self, n_samples: usize) -> f64 {
        let n_samples = n_samples.max(2);
        (0..n_samples)
            .map(|k| {
                let t = k as f64 / (n_samples - 1) as f64;
                let (z, _) = self.sample(t).expect("t in range");
                let mut best = f64::INFINITY;
                for a in 0..z.len() {
                    for b in a + 1..z.len() {
                        best = best.min((z[a] - z[b]).norm());
                    }
                }
                best
            })
            .fold(f64::INFINITY, f64::min)
    }

    /// Positions at `t = 1` by strand, read off analytically.
    pub fn final_positions(&self) -> Vec<f64> {
        let mut pos: Vec<f64> = (0..self.n_strands).map(|k| k as f64).collect();
        if let Some(last) = self.segments.last() {
            pos.clone_from(&last.start);
            pos.swap(last.left, last.right);
        }
        pos
    }
}

/// Realizes `word` with equal time per letter and linear local time.
pub fn realize(word: &BraidWord) -> ConfigLoop {
    realize_with(word, &RealizeOptions::default()).expect("default options are valid")
}

pub fn realize_with(word: &BraidWord, options: &RealizeOptions) -> Result<ConfigLoop> {
    let n = word.n_strands();
    let count = word.len();
    let weights = match &options.durations {
        Some(d) if d.len() != count => {
            return Err(Error::InvalidArgument(format!(
                "{} durations for {count} letters",
                d.len()
            )))
        }
        Some(d) if d.iter().any(|&x| !(x.is_finite() && x > 0.0)) => {
            return Err(Error::InvalidArgument("durations must be positive".into()))
        }
        Some(d) => d.clone(),
        None => vec![1.0; count],
    };
    let total: f64 = weights.iter().sum();

    let mut position: Vec<f64> = (0..n).map(|k| k as f64).collect();
    let mut occupant: Vec<usize> = (0..n).collect();
    let mut t = 0.0;
    let mut segments = Vec::with_capacity(count);
    for (letter, w) in word.letters().iter().zip(weights) {
        let duration = w / total;
        let (left, right) = (occupant[letter.generator - 1], occupant[letter.generator]);
        segments.push(Segment {
            letter: *letter,
            t_start: t,
            duration,
            start: position.clone(),
            left,
            right,
            warp: options.warp,
        });
        position.swap(left, right);
        occupant.swap(letter.generator - 1, letter.generator);
        t += duration;
    }
    Ok(ConfigLoop {
        n_strands: n,
        segments,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn identity_loop_is_constant() {
        let lp = realize(&BraidWord::identity(3).unwrap());
        for t in [0.0, 0.3, 1.0] {
            let (z, v) = lp.sample(t).unwrap();
            assert_eq!(z, vec![0.0.into(), 1.0.into(), 2.0.into()]);
            assert!(v.iter().all(|x| x.norm() == 0.0));
        }
        assert_eq!(lp.min_separation(100), 1.0);
    }

    #[test]
    fn sigma_one_half_turn() {
        let lp = realize(&BraidWord::parse("1", 2).unwrap());
        let (z, _) = lp.sample(0.5).unwrap();
        assert!(close(z[0], Complex64::new(0.5, -0.5)));
        assert!(close(z[1], Complex64::new(0.5, 0.5)));
        let (z, _) = lp.sample(1.0).unwrap();
        assert!(close(z[0], Complex64::new(1.0, 0.0)));
        assert!(close(z[1], Complex64::new(0.0, 0.0)));
        for t in [0.0, 0.1, 0.77, 1.0] {
            let (z, v) = lp.sample(t).unwrap();
            // d/dt log(z1 - z2) = iπ for a counterclockwise half turn
            let dlog = (v[0] - v[1]) / (z[0] - z[1]);
            assert!(close(dlog, Complex64::new(0.0, PI)));
        }
    }

    #[test]
    fn sample_rejects_out_of_range() {
        let lp = realize(&BraidWord::parse("1", 2).unwrap());
        assert!(matches!(lp.sample(1.5), Err(Error::TimeOutOfRange(_))));
        assert!(lp.sample(-0.1).is_err());
    }

    #[test]
    fn velocities_match_finite_differences() {
        let word = BraidWord::parse("1 -2 3", 4).unwrap();
        let opts = RealizeOptions {
            durations: Some(vec![2.0, 1.0, 1.5]),
            warp: TimeWarp::Smoothstep,
        };
        let lp = realize_with(&word, &opts).unwrap();
        let h = 1e-6;
        for t in [0.1, 0.3, 0.55, 0.9] {
            let (_, v) = lp.sample(t).unwrap();
            let (zp, _) = lp.sample(t + h).unwrap();
            let (zm, _) = lp.sample(t - h).unwrap();
            for k in 0..4 {
                let fd = (zp[k] - zm[k]) / (2.0 * h);
                assert!((fd - v[k]).norm() < 1e-5, "t={t} strand {k}");
            }
        }
    }

    #[test]
    fn separation_margins() {
        let lp = realize(&BraidWord::parse("1", 3).unwrap());
        assert!((lp.min_separation(10_001) - 1.0).abs() < 1e-9);
        let lp = realize(&BraidWord::parse("1", 2).unwrap());
        assert!((lp.min_separation(10_001) - 1.0).abs() < 1e-9);
        let lp = realize(&BraidWord::parse("1 2 -3 4 -1 3 2", 5).unwrap());
        assert!(lp.min_separation(10_000) > 0.4);
    }

    #[test]
    fn closure_and_permutation_agree() {
        let word = BraidWord::parse("1 2 -1 3 -2", 4).unwrap();
        let lp = realize(&word);
        let fin = lp.final_positions();
        let perm = word.permutation();
        for k in 1..=4 {
            assert_eq!(fin[k - 1], (perm.apply(k) - 1) as f64);
        }
        let (z, _) = lp.sample(1.0).unwrap();
        for k in 0..4 {
            assert!((z[k] - Complex64::new(fin[k], 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn durations_are_validated() {
        let word = BraidWord::parse("1 2", 3).unwrap();
        let bad = RealizeOptions {
            durations: Some(vec![1.0]),
            ..Default::default()
        };
        assert!(realize_with(&word, &bad).is_err());
        let bad = RealizeOptions {
            durations: Some(vec![1.0, 0.0]),
            ..Default::default()
        };
        assert!(realize_with(&word, &bad).is_err());
    }
}

use std::f64::consts::PI;

use num::complex::Complex64;

use crate::algebra::ChordPair;
use crate::error::Result;
use crate::geometry::ConfigLoop;

/// Value of the KZ form on the loop velocity at one time:
/// `(1/2πi) (z_i' - z_j') / (z_i - z_j)` for every pair `i < j`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConnectionSample {
    n_strands: usize,
    coefficients: Vec<Complex64>,
}

impl ConnectionSample {
    pub fn n_strands(&self) -> usize {
        self.n_strands
    }

    /// Coefficients in lexicographic pair order.
    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn get(&self, pair: ChordPair) -> Complex64 {
        self.coefficients[pair.index(self.n_strands)]
    }

    pub fn into_coefficients(self) -> Vec<Complex64> {
        self.coefficients
    }
}

/// KZ form from positions and velocities indexed by strand.
pub fn omega_from(pos: &[Complex64], vel: &[Complex64]) -> ConnectionSample {
    let n = pos.len();
    let norm = Complex64::new(0.0, 2.0 * PI).inv();
    let mut coefficients = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            coefficients.push(norm * (vel[i] - vel[j]) / (pos[i] - pos[j]));
        }
    }
    ConnectionSample {
        n_strands: n,
        coefficients,
    }
}

pub fn omega_at(lp: &ConfigLoop, t: f64) -> Result<ConnectionSample> {
    let (pos, vel) = lp.sample(t)?;
    Ok(omega_from(&pos, &vel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::geometry::realize;

    fn pair(i: usize, j: usize) -> ChordPair {
        ChordPair::new(i, j).unwrap()
    }

    #[test]
    fn identity_loop_has_zero_connection() {
        let lp = realize(&BraidWord::identity(4).unwrap());
        let w = omega_at(&lp, 0.4).unwrap();
        assert_eq!(w.coefficients().len(), 6);
        assert!(w.coefficients().iter().all(|c| c.norm() == 0.0));
    }

    #[test]
    fn half_twist_has_constant_half() {
        let lp = realize(&BraidWord::parse("1", 2).unwrap());
        let inv = realize(&BraidWord::parse("-1", 2).unwrap());
        for t in [0.0, 0.25, 0.5, 0.9, 1.0] {
            let w = omega_at(&lp, t).unwrap().get(pair(1, 2));
            assert!((w - Complex64::new(0.5, 0.0)).norm() < 1e-14);
            let w = omega_at(&inv, t).unwrap().get(pair(1, 2));
            assert!((w - Complex64::new(-0.5, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn stationary_pairs_vanish() {
        let lp = realize(&BraidWord::parse("1", 4).unwrap());
        let w = omega_at(&lp, 0.3).unwrap();
        assert_eq!(w.get(pair(3, 4)).norm(), 0.0);
        assert!(w.get(pair(1, 3)).norm() > 0.0);
    }
}

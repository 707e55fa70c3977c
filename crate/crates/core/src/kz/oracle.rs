use num::complex::Complex64;
use num::Zero;

use super::connection::omega_from;
use crate::algebra::{Graded, HorizontalWord};
use crate::error::{Error, Result};
use crate::geometry::ConfigLoop;

/// Direct iterated integral of a word over the ordered simplex
/// `0 ≤ t_1 < ... < t_m ≤ 1`, by composite midpoint quadrature on every axis.
///
/// Cells are visited with non-decreasing indices. A cell whose indices tie in
/// groups of sizes `g_1, g_2, ...` lies only partly inside the simplex and is
/// weighted by `1 / (g_1! g_2! ...)`, its exact volume fraction. The error is
/// `O(1/grid²)` per degree.
#[allow(clippy::needless_range_loop)]
pub fn simplex_oracle(lp: &ConfigLoop, word: &HorizontalWord, grid: usize) -> Result<Complex64> {
    let m = word.degree();
    if m > 3 {
        return Err(Error::DegreeTooLarge { degree: m, grid });
    }
    if grid < 16 {
        return Err(Error::InvalidArgument(format!("grid {grid} below 16 cells")));
    }
    if word.n_strands() != lp.n_strands() {
        return Err(Error::StrandMismatch {
            left: lp.n_strands(),
            right: word.n_strands(),
        });
    }
    let h = 1.0 / grid as f64;
    let n = lp.n_strands();
    // f[k][i]: coefficient of the k-th chord at the midpoint of cell i
    let mut f = vec![vec![Complex64::zero(); grid]; m];
    for i in 0..grid {
        let (z, v) = lp.sample((i as f64 + 0.5) * h)?;
        let w = omega_from(&z, &v);
        for (k, chord) in word.chords().iter().enumerate() {
            f[k][i] = w.coefficients()[chord.index(n)];
        }
    }
    let value = match m {
        0 => Complex64::new(1.0, 0.0),
        1 => f[0].iter().sum::<Complex64>() * h,
        2 => {
            let mut acc = Complex64::zero();
            for i1 in 0..grid {
                for i2 in i1..grid {
                    let weight = if i1 == i2 { 0.5 } else { 1.0 };
                    acc += f[0][i1] * f[1][i2] * weight;
                }
            }
            acc * h * h
        }
        _ => {
            let mut acc = Complex64::zero();
            for i1 in 0..grid {
                for i2 in i1..grid {
                    let a = f[0][i1] * f[1][i2];
                    for i3 in i2..grid {
                        let weight = match (i1 == i2, i2 == i3) {
                            (true, true) => 1.0 / 6.0,
                            (true, false) | (false, true) => 0.5,
                            (false, false) => 1.0,
                        };
                        acc += a * f[2][i3] * weight;
                    }
                }
            }
            acc * h * h * h
        }
    };
    Ok(value)
}

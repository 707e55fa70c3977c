//! Named numerical self-checks shared by the CLI and the test suites.

use std::fmt;

use crate::algebra::{enumerate_words, reduce_horizontal};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::geometry::{realize, realize_with, RealizeOptions, TimeWarp};
use crate::kz::{abelian_holonomy, compose_braids, kontsevich_of_braid, simplex_oracle, symmetrize, transport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    BraidRelation,
    FarCommutation,
    Oracle,
    Multiplicativity,
    Abelian,
    Reparam,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::BraidRelation,
        Check::FarCommutation,
        Check::Oracle,
        Check::Multiplicativity,
        Check::Abelian,
        Check::Reparam,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Check::BraidRelation => "braid-relation",
            Check::FarCommutation => "far-commutation",
            Check::Oracle => "oracle",
            Check::Multiplicativity => "multiplicativity",
            Check::Abelian => "abelian",
            Check::Reparam => "reparam",
        }
    }

    pub fn tolerance(&self) -> f64 {
        match self {
            Check::BraidRelation | Check::FarCommutation => 1e-6,
            Check::Oracle => 1e-5,
            Check::Multiplicativity => 1e-8,
            Check::Abelian | Check::Reparam => 1e-7,
        }
    }

    pub fn run(&self, max_degree: usize, steps: usize) -> Result<CheckReport> {
        let residual = match self {
            Check::BraidRelation => reduced_difference("1 2 1", "2 1 2", 3, max_degree, steps)?,
            Check::FarCommutation => reduced_difference("1 3", "3 1", 4, max_degree, steps)?,
            Check::Oracle => oracle_residual(max_degree.min(2), steps, 512)?,
            Check::Multiplicativity => multiplicativity_residual(max_degree, steps)?,
            Check::Abelian => abelian_residual(max_degree, steps)?,
            Check::Reparam => reparam_residual(max_degree, steps)?,
        };
        Ok(CheckReport {
            check: *self,
            residual,
            tolerance: self.tolerance(),
        })
    }
}

impl std::str::FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Check::ALL.iter().map(Check::name).collect();
                Error::InvalidArgument(format!("unknown check `{s}`; expected one of {}", names.join(", ")))
            })
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub check: Check,
    pub residual: f64,
    pub tolerance: f64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.residual < self.tolerance
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<17} residual {:.3e}  tolerance {:.0e}  {}",
            self.check.name(),
            self.residual,
            self.tolerance,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// Sup-norm distance between the reduced integrals of two words.
pub fn reduced_difference(a: &str, b: &str, n: usize, max_degree: usize, steps: usize) -> Result<f64> {
    let za = kontsevich_of_braid(&BraidWord::parse(a, n)?, max_degree, steps)?;
    let zb = kontsevich_of_braid(&BraidWord::parse(b, n)?, max_degree, steps)?;
    reduce_horizontal(&za)?.max_abs_diff(&reduce_horizontal(&zb)?)
}

/// Transport against simplex quadrature for every word up to `max_degree`
/// on σ₁ (2 strands), σ₁² (2 strands) and σ₁σ₂ (3 strands).
pub fn oracle_residual(max_degree: usize, steps: usize, grid: usize) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for (text, n) in [("1", 2), ("1 1", 2), ("1 2", 3)] {
        let lp = realize(&BraidWord::parse(text, n)?);
        let z = transport(&lp, max_degree, steps)?.series;
        for m in 0..=max_degree {
            for w in enumerate_words(n, m) {
                worst = worst.max((z.coefficient(&w) - simplex_oracle(&lp, &w, grid)?).norm());
            }
        }
    }
    Ok(worst)
}

/// `Z(w₁w₂)` against the composition of `Z(w₁)` and `Z(w₂)` for all ordered
/// pairs from {σ₁, σ₂, σ₁⁻¹} on 3 strands.
pub fn multiplicativity_residual(max_degree: usize, steps: usize) -> Result<f64> {
    let words: Vec<BraidWord> = ["1", "2", "-1"]
        .iter()
        .map(|t| BraidWord::parse(t, 3))
        .collect::<Result<_>>()?;
    let zs: Vec<_> = words
        .iter()
        .map(|w| kontsevich_of_braid(w, max_degree, steps))
        .collect::<Result<_>>()?;
    let mut worst: f64 = 0.0;
    for (w1, z1) in words.iter().zip(&zs) {
        for (w2, z2) in words.iter().zip(&zs) {
            let whole = kontsevich_of_braid(&w1.concat(w2)?, max_degree, steps)?;
            let composed = compose_braids(w1, z1, z2)?;
            worst = worst.max(whole.max_abs_diff(&composed, max_degree));
        }
    }
    Ok(worst)
}

/// Symmetrized transport against the commuting-chord exponential on σ₁σ₂
/// and σ₁²σ₂⁻¹.
pub fn abelian_residual(max_degree: usize, steps: usize) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for text in ["1 2", "1 1 -2"] {
        let lp = realize(&BraidWord::parse(text, 3)?);
        let sym = symmetrize(&transport(&lp, max_degree, steps)?.series);
        let ab = abelian_holonomy(&lp, max_degree)?;
        worst = worst.max(sym.max_abs_diff(&ab, max_degree));
    }
    Ok(worst)
}

/// Same braids realized with unequal letter durations and eased local time.
pub fn reparam_residual(max_degree: usize, steps: usize) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for (text, n) in [("1 2", 3), ("1 -2 1", 3), ("1 3 -2", 4)] {
        let word = BraidWord::parse(text, n)?;
        let base = transport(&realize(&word), max_degree, steps)?.series;
        let mut durations = vec![1.0; word.len()];
        durations[0] = 2.0;
        for warp in [TimeWarp::Linear, TimeWarp::Smoothstep] {
            let opts = RealizeOptions {
                durations: Some(durations.clone()),
                warp,
            };
            let other = transport(&realize_with(&word, &opts)?, max_degree, steps)?.series;
            worst = worst.max(base.max_abs_diff(&other, max_degree));
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("bogus".parse::<Check>().is_err());
    }
}

//! Artin braid words and their strand permutations.

use std::fmt;

use crate::error::{Error, Result};

/// One Artin generator `σ_k` (`positive`) or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    pub generator: usize,
    pub positive: bool,
}

impl Letter {
    pub fn sign(&self) -> i32 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            positive: !self.positive,
            ..*self
        }
    }
}

/// A braid word on `n_strands` strands; the empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    n_strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(n_strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if n_strands < 2 {
            return Err(Error::TooFewStrands(n_strands));
        }
        if let Some(l) = letters
            .iter()
            .find(|l| l.generator == 0 || l.generator >= n_strands)
        {
            return Err(Error::GeneratorOutOfRange {
                token: (l.generator as i64 * l.sign() as i64).to_string(),
                max: n_strands - 1,
            });
        }
        Ok(Self { n_strands, letters })
    }

    /// From signed generator indices: `k` is `σ_k`, `-k` is `σ_k⁻¹`.
    pub fn from_signed(n_strands: usize, letters: &[i64]) -> Result<Self> {
        let text = letters
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        Self::parse(&text, n_strands)
    }

    /// Parses whitespace-separated nonzero integers.
    pub fn parse(text: &str, n_strands: usize) -> Result<Self> {
        if n_strands < 2 {
            return Err(Error::TooFewStrands(n_strands));
        }
        let letters = text
            .split_whitespace()
            .map(|token| {
                let k: i64 = token.parse().map_err(|_| Error::Parse {
                    token: token.to_string(),
                    reason: "not an integer".into(),
                })?;
                if k == 0 {
                    return Err(Error::Parse {
                        token: token.to_string(),
                        reason: "generator index 0 does not exist".into(),
                    });
                }
                if k.unsigned_abs() as usize >= n_strands {
                    return Err(Error::GeneratorOutOfRange {
                        token: token.to_string(),
                        max: n_strands - 1,
                    });
                }
                Ok(Letter {
                    generator: k.unsigned_abs() as usize,
                    positive: k > 0,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n_strands, letters })
    }

    pub fn identity(n_strands: usize) -> Result<Self> {
        Self::new(n_strands, Vec::new())
    }

    pub fn n_strands(&self) -> usize {
        self.n_strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self` followed by `other` (other happens later, higher up).
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n_strands != other.n_strands {
            return Err(Error::StrandMismatch {
                left: self.n_strands,
                right: other.n_strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            n_strands: self.n_strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        Self {
            n_strands: self.n_strands,
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
        }
    }

    /// Sends strand `k` (starting at position `k-1`) to `final position + 1`.
    pub fn permutation(&self) -> Permutation {
        // occupant[p] = strand currently at position p
        let mut occupant: Vec<usize> = (1..=self.n_strands).collect();
        for l in &self.letters {
            occupant.swap(l.generator - 1, l.generator);
        }
        let mut image = vec![0; self.n_strands];
        for (p, &s) in occupant.iter().enumerate() {
            image[s - 1] = p + 1;
        }
        Permutation { image }
    }

    /// Signed half-twist count between each pair of strands, indexed by
    /// strand labels; `±1/2` per crossing.
    pub fn crossing_linking(&self) -> Vec<Vec<f64>> {
        let n = self.n_strands;
        let mut lk = vec![vec![0.0; n]; n];
        let mut occupant: Vec<usize> = (0..n).collect();
        for l in &self.letters {
            let (a, b) = (occupant[l.generator - 1], occupant[l.generator]);
            let s = 0.5 * l.sign() as f64;
            lk[a][b] += s;
            lk[b][a] += s;
            occupant.swap(l.generator - 1, l.generator);
        }
        lk
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self
            .letters
            .iter()
            .map(|l| (l.generator as i64 * l.sign() as i64).to_string())
            .collect();
        write!(f, "{}", tokens.join(" "))
    }
}

/// A bijection of `{1..N}` stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidArgument(format!(
                    "{image:?} is not a permutation"
                )));
            }
        }
        Ok(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            image: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    /// Image of `k` (1-based).
    pub fn apply(&self, k: usize) -> usize {
        self.image[k - 1]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.image.len()];
        for (k, &v) in self.image.iter().enumerate() {
            image[v - 1] = k + 1;
        }
        Self { image }
    }

    /// Cycles, each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k - 1] {
                seen[k - 1] = true;
                cycle.push(k);
                k = self.apply(k);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cycles() {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

//! Braid closure, the moduli map onto chord diagrams on circles, and the
//! reduced Kontsevich integral of the closed link.
//!
//! Only chords between braid strands are integrated. Chords among the
//! parallel back strands of the closure have vanishing `dlog`, and long
//! chords between braid and back strands integrate to zero. Contributions of
//! the top and bottom closure arcs are not included.

use crate::algebra::{
    reduce_circle, CircleDiagram, CircleSeries, HorizontalSeries, NormalFormSeries,
};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::kz::kontsevich_of_braid;

/// Components of a closed braid, each listed in traversal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkSkeleton {
    pub n_strands: usize,
    /// Each cycle starts at its lowest strand; strand `k` is followed by the
    /// strand starting where `k` ends.
    pub cycles: Vec<Vec<usize>>,
}

impl LinkSkeleton {
    pub fn n_components(&self) -> usize {
        self.cycles.len()
    }

    /// `(component, position within the traversal)` for every strand.
    pub fn locate(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(0, 0); self.n_strands];
        for (c, cycle) in self.cycles.iter().enumerate() {
            for (pos, &s) in cycle.iter().enumerate() {
                out[s - 1] = (c, pos);
            }
        }
        out
    }
}

pub fn closure_skeleton(word: &BraidWord) -> LinkSkeleton {
    LinkSkeleton {
        n_strands: word.n_strands(),
        cycles: word.permutation().cycles(),
    }
}

/// Sends each horizontal word to the circle diagram it becomes on the closure.
///
/// Feet on a circle are ordered by the strand's place in the component's
/// traversal, then by height along the strand.
pub fn tau_project(series: &HorizontalSeries, word: &BraidWord) -> Result<CircleSeries> {
    if series.n_strands() != word.n_strands() {
        return Err(Error::StrandMismatch {
            left: series.n_strands(),
            right: word.n_strands(),
        });
    }
    let skeleton = closure_skeleton(word);
    let mut out = CircleSeries::zero(skeleton.n_components(), series.max_degree())
        .with_threshold(series.zero_threshold());
    for (w, &c) in series.terms() {
        out.add_term(project_word(w.chords(), &skeleton), c)?;
    }
    out.prune();
    Ok(out)
}

fn project_word(chords: &[crate::algebra::ChordPair], skeleton: &LinkSkeleton) -> CircleDiagram {
    let circles = skeleton
        .cycles
        .iter()
        .map(|cycle| {
            cycle
                .iter()
                .flat_map(|&s| {
                    chords
                        .iter()
                        .enumerate()
                        .filter(move |(_, ch)| ch.contains(s))
                        .map(|(k, _)| k as u32)
                })
                .collect()
        })
        .collect();
    CircleDiagram::new(circles).expect("every chord has two feet")
}

/// Braid holonomy, its projection onto circles, and the reduced result.
#[derive(Clone, Debug)]
pub struct ClosureResult {
    pub skeleton: LinkSkeleton,
    pub braid: HorizontalSeries,
    pub series: CircleSeries,
    pub reduced: NormalFormSeries<CircleDiagram>,
}

impl ClosureResult {
    /// Reduced degree-1 coefficient on the chord joining components `a` and
    /// `b` (0-based, distinct).
    pub fn linking_coefficient(&self, a: usize, b: usize) -> Option<f64> {
        let n = self.skeleton.n_components();
        if a == b || a >= n || b >= n {
            return None;
        }
        let mut circles = vec![Vec::new(); n];
        circles[a].push(0);
        circles[b].push(0);
        let target = CircleDiagram::new(circles).ok()?;
        let deg = self.reduced.degree(1)?;
        deg.basis
            .iter()
            .position(|d| *d == target)
            .map(|k| deg.coords[k].re)
    }
}

pub fn kontsevich_link(word: &BraidWord, max_degree: usize, steps_per_letter: usize) -> Result<ClosureResult> {
    let braid = kontsevich_of_braid(word, max_degree, steps_per_letter)?;
    let series = tau_project(&braid, word)?;
    let reduced = reduce_circle(&series)?;
    Ok(ClosureResult {
        skeleton: closure_skeleton(word),
        braid,
        series,
        reduced,
    })
}

//! Chord diagrams on braid skeletons and on disjoint circles, their series,
//! and exact quotients by the 4T, commutation and framing relations.

mod chord;
mod circle;
mod quotient;
mod relations;
mod series;

pub use chord::{enumerate_words, pair_count, ChordPair, HorizontalWord};
pub use circle::{enumerate_circle_diagrams, CircleDiagram, CircleSeries, CircleSkeleton};
pub use quotient::{
    quotient_dimension_circles, quotient_dimension_strands, reduce, reduce_circle,
    reduce_horizontal, NormalFormDegree, NormalFormSeries, Quotient, QuotientCache, SkeletonKey,
};
pub use relations::{circle_relations, horizontal_relations, RelationSet};
pub use series::{series_distance, series_product, HorizontalSeries};

/// Coefficients with modulus below this are dropped from stored series.
pub const DEFAULT_ZERO_THRESHOLD: f64 = 1e-12;

/// Basis elements carry a grading by number of chords.
pub trait Graded {
    fn degree(&self) -> usize;
}

//! Parallel transport of the KZ connection along realized braids.

mod abelian;
mod connection;
mod oracle;
mod transport;

pub use abelian::{abelian_holonomy, integrate_connection, symmetrize};
pub use connection::{omega_at, omega_from, ConnectionSample};
pub use oracle::simplex_oracle;
pub use transport::{transport, transport_fixed, TransportResult, DEFAULT_STEPS_PER_LETTER};

use crate::algebra::{series_product, HorizontalSeries};
use crate::braid::BraidWord;
use crate::error::Result;
use crate::geometry::realize;

/// Kontsevich integral of a braid: transport along its realized loop, with
/// chords labelled by strand (strand `k` starts at position `k-1`).
pub fn kontsevich_of_braid(
    word: &BraidWord,
    max_degree: usize,
    steps_per_letter: usize,
) -> Result<HorizontalSeries> {
    Ok(transport(&realize(word), max_degree, steps_per_letter)?.series)
}

/// Kontsevich integral of `lower · upper` from the integrals of the factors.
///
/// The upper factor's strands are renamed to the strands of the composite
/// braid that occupy its starting positions, then stacked on top.
pub fn compose_braids(
    lower: &BraidWord,
    z_lower: &HorizontalSeries,
    z_upper: &HorizontalSeries,
) -> Result<HorizontalSeries> {
    let inverse = lower.permutation().inverse();
    let upper = z_upper.relabel(inverse.image())?;
    series_product(&upper, z_lower)
}

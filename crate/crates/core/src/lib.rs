//! Degree-truncated Kontsevich integral of braids and their closures.
//!
//! A braid word is realized as an explicit loop in the configuration space of
//! `N` points in the plane. Parallel transport of the Knizhnik–Zamolodchikov
//! connection along that loop, computed in the algebra of horizontal chord
//! diagrams truncated at a fixed degree, yields the Kontsevich integral of the
//! braid. Closing the braid maps horizontal chord words to chord diagrams on
//! disjoint circles, where the 4T and framing relations are applied exactly.
//!
//! ```
//! use kontsevich::{BraidWord, kontsevich_link};
//!
//! let hopf = BraidWord::parse("1 1", 2).unwrap();
//! let link = kontsevich_link(&hopf, 1, 256).unwrap();
//! let lk = link.reduced.degree(1).unwrap().coords[0];
//! assert!((lk.re - 1.0).abs() < 1e-6);
//! ```

pub mod algebra;
pub mod braid;
pub mod checks;
pub mod closure;
pub mod error;
pub mod geometry;
pub mod json;
pub mod kz;

pub use algebra::{
    enumerate_words, ChordPair, CircleDiagram, CircleSeries, CircleSkeleton, HorizontalSeries,
    HorizontalWord, NormalFormSeries, Quotient, RelationSet, DEFAULT_ZERO_THRESHOLD,
};
pub use braid::{BraidWord, Letter, Permutation};
pub use closure::{closure_skeleton, kontsevich_link, tau_project, ClosureResult, LinkSkeleton};
pub use error::{Error, Result};
pub use geometry::{realize, realize_with, ConfigLoop, RealizeOptions, TimeWarp};
pub use kz::{
    abelian_holonomy, compose_braids, kontsevich_of_braid, omega_at, simplex_oracle, transport,
    ConnectionSample, TransportResult,
};

pub use num::complex::Complex64;

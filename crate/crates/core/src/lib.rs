//! Simple minimal knots `K(N,p,q,phase)`: the knots cut out of a branched
//! minimal disk in R^4 by a small sphere around the branch point,
//!
//! ```text
//! t ↦ (cos 2πNt, sin 2πNt, cos 2π(pt + phase), sin 2πqt),   t ∈ [0,1)
//! ```
//!
//! The crate builds the canonical braid of such a knot from exact crossing
//! formulas, checks those formulas against a numeric sampling of the curve,
//! and computes invariants (writhe, Alexander, Jones) used to identify the
//! knot against a small bundled table.
//!
//! All phases are stored in turns: `phase = φ / 2π`, a [`Rational`] in `[0,1)`.

pub mod braidgen;
pub mod catalog;
pub mod invariants;
pub mod oracle;
pub mod params;

mod error;

pub use error::{Error, Result};
pub use params::{KnotParams, PhaseSet, Rational};
pub use braidgen::{BraidWord, Crossing, Letter, Sign};
pub use invariants::LaurentPoly;

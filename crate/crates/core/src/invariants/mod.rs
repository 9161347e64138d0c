//! Exact knot invariants of braid closures: Alexander polynomial from the
//! reduced Burau representation, Jones polynomial from a Temperley–Lieb
//! transfer matrix, and a few cheap diagnostics.

mod alexander;
mod burau;
mod diagnostics;
mod jones;
mod laurent;

pub use alexander::{
    alexander, alexander_equivalent, at_minus_one, normalize_alexander, rolfsen_coeffs, torus_alexander,
    RolfsenCoeffs,
};
pub(crate) use alexander::{det_of, is_trivial};
pub use burau::{burau_reduced, determinant, BurauMatrix};
pub use diagnostics::{arf_diagnostic, fibered_necessary, square_mod2};
pub use jones::{jones, kauffman_bracket, torus_jones, MAX_JONES_STRANDS};
pub use laurent::LaurentPoly;

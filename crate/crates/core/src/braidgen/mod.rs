//! Crossing schedule, crossing signs and the braid word of `K(N,p,q,phase)`.

mod schedule;
mod sign;
mod symmetry;
mod word;

pub use schedule::{crossing_schedule, y_levels, Crossing, Levels};
pub(crate) use schedule::lemma_crossings;
pub use sign::{crossing_sign_checked, crossing_sign_closed, crossing_sign_direct, sign_terms, Sign, SignTerms};
pub use symmetry::{symmetry_class, SymmetryClass};
pub use word::{
    braid_word, circular_shift_equal, circular_shift_equivalent, commutation_normal_form, closure_permutation, flip_word, mirror_word, reverse_word, signed_schedule,
    writhe, BraidWord, Closure, Letter,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::LaurentPoly;

/// 0 iff `Δ(-1) ≡ ±1 (mod 8)`.
pub fn arf_diagnostic(poly: &LaurentPoly) -> u8 {
    let r = poly.eval(-1).mod_floor(&BigInt::from(8));
    if r.is_one() || r == BigInt::from(7) { 0 } else { 1 }
}

/// Whether the mod-2 reduction is a square in `Z/2[t, t^-1]`, i.e. all
/// exponents with odd coefficient have the same parity.
pub fn square_mod2(poly: &LaurentPoly) -> bool {
    let mut parities = poly.terms().filter(|(_, c)| c.is_odd()).map(|(e, _)| e.rem_euclid(2));
    match parities.next() {
        None => true,
        Some(first) => parities.all(|p| p == first),
    }
}

/// Monic test: both extreme coefficients are `±1`. Necessary for fibered knots.
pub fn fibered_necessary(poly: &LaurentPoly) -> bool {
    match (poly.min_exp(), poly.max_exp()) {
        (Some(lo), Some(hi)) => poly.coeff(lo).abs().is_one() && poly.coeff(hi).abs().is_one(),
        _ => false,
    }
}

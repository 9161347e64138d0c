use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::burau::{burau_reduced, determinant, BurauMatrix};
use super::LaurentPoly;
use crate::braidgen::{closure_permutation, BraidWord};
use crate::{Error, Result};

/// Centres `p` so that it is symmetric under `t ↦ 1/t` and fixes the sign
/// so that `Δ(1) = +1`.
pub fn normalize_alexander(p: &LaurentPoly) -> Result<LaurentPoly> {
    let (Some(lo), Some(hi)) = (p.min_exp(), p.max_exp()) else {
        return Err(Error::Internal("Alexander polynomial of a knot cannot vanish".into()));
    };
    if (lo + hi) % 2 != 0 {
        return Err(Error::NotSymmetric);
    }
    let mut c = p.shift(-(lo + hi) / 2);
    if !c.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let at_one = c.eval(1);
    if at_one == -BigInt::one() {
        c = -c;
    } else if !at_one.is_one() {
        return Err(Error::Internal(format!("Δ(1) = {at_one}, expected ±1")));
    }
    Ok(c)
}

/// Alexander polynomial of the closure of `w`:
/// `det(I - ρ(w)) · (1 - t)/(1 - t^N)` in normalized form.
pub fn alexander(w: &BraidWord) -> Result<LaurentPoly> {
    let closure = closure_permutation(w);
    if !closure.is_knot() {
        return Err(Error::NotAKnot(closure.components));
    }
    let m = burau_reduced(w);
    let mut diff = BurauMatrix::identity(m.dim);
    for i in 0..m.dim {
        for j in 0..m.dim {
            diff.entries[i][j] = &diff.entries[i][j] - m.get(i, j);
        }
    }
    let det = determinant(&diff);
    let n = w.strands as i64;
    // (1 - t^N)/(1 - t) = 1 + t + ... + t^(N-1)
    let denom = LaurentPoly::from_coeffs(0, &vec![1; n as usize]);
    let q = det
        .div_exact(&denom)
        .ok_or_else(|| Error::Internal(format!("(1-t^{n})/(1-t) does not divide det(I - B) = {det}")))?;
    normalize_alexander(&q)
}

/// `(t^ab - 1)(t - 1) / ((t^a - 1)(t^b - 1))`, normalized.
pub fn torus_alexander(a: u32, b: u32) -> Result<LaurentPoly> {
    if a < 2 || b < 2 {
        return Err(Error::OutOfRange(format!("T({a},{b}) needs a, b >= 2")));
    }
    let g = a.gcd(&b);
    if g != 1 {
        return Err(Error::NonCoprime { which: 'b', n: a, value: b, gcd: g });
    }
    let minus_one = |k: u32| &LaurentPoly::monomial(1, k as i64) - &LaurentPoly::one();
    let num = &minus_one(a * b) * &minus_one(1);
    let den = &minus_one(a) * &minus_one(b);
    let q = num.div_exact(&den).ok_or_else(|| Error::Internal(format!("T({a},{b}) division")))?;
    normalize_alexander(&q)
}

/// `[a0, a1, ..., an]` encoding `a0 + Σ ai (t^i + t^-i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RolfsenCoeffs(pub Vec<i64>);

impl RolfsenCoeffs {
    pub fn to_poly(&self) -> LaurentPoly {
        let mut terms = Vec::new();
        for (i, &a) in self.0.iter().enumerate() {
            let i = i as i64;
            terms.push((i, a));
            if i > 0 {
                terms.push((-i, a));
            }
        }
        LaurentPoly::from_terms(terms)
    }

    /// `a0 + 2 Σ ai`, which is `±1` for a knot.
    pub fn value_at_one(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, &a)| if i == 0 { a } else { 2 * a }).sum()
    }

    /// The same polynomial with `Δ(1) = +1`.
    pub fn normalized(&self) -> Self {
        if self.value_at_one() < 0 {
            Self(self.0.iter().map(|a| -a).collect())
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for RolfsenCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 && *a >= 0 {
                f.write_str("+")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

pub fn rolfsen_coeffs(poly: &LaurentPoly) -> Result<RolfsenCoeffs> {
    if !poly.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let hi = poly.max_exp().unwrap_or(0);
    (0..=hi)
        .map(|i| {
            poly.coeff(i)
                .to_i64()
                .ok_or_else(|| Error::Internal(format!("coefficient of t^{i} overflows i64")))
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| RolfsenCoeffs(if v.is_empty() { vec![0] } else { v }))
}

/// Equality of Alexander values up to `±` and `t ↔ 1/t`.
pub fn alexander_equivalent(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    let (Ok(a), Ok(b)) = (normalize_alexander(a), normalize_alexander(b)) else {
        return a == b || *a == -b;
    };
    a == b || a == b.invert_var()
}

/// `Δ(-1)`, whose absolute value is the determinant of the knot.
pub fn at_minus_one(poly: &LaurentPoly) -> BigInt {
    poly.eval(-1)
}

pub(crate) fn det_of(poly: &LaurentPoly) -> u64 {
    at_minus_one(poly).abs().to_u64().unwrap_or(u64::MAX)
}

pub(crate) fn is_trivial(poly: &LaurentPoly) -> bool {
    poly.is_one() || (-poly).is_one()
}

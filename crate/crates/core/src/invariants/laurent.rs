use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

/// Laurent polynomial in one variable with integer coefficients. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// `Σ coeffs[i] t^(low + i)`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(low + i as i64, BigInt::from(c));
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_exp - min_exp`, or 0 for the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    /// `p(t) ↦ p(t^-1)`.
    pub fn invert_var(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// `p(t) ↦ p(t^k)`.
    pub fn scale_exponents(&self, k: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect() }
    }

    /// `p(t) ↦ p(t^(1/k))`, if every exponent is divisible by `k`.
    pub fn divide_exponents(&self, k: i64) -> Option<Self> {
        if self.terms.keys().any(|e| e.mod_floor(&k) != 0) {
            return None;
        }
        Some(Self { terms: self.terms.iter().map(|(e, c)| (e.div_floor(&k), c.clone())).collect() })
    }

    pub fn eval(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.terms
            .iter()
            .map(|(&e, c)| {
                if e >= 0 {
                    c * num_traits::pow(x.clone(), e as usize)
                } else {
                    // only used at ±1
                    assert!(x.abs().is_one(), "negative power of {x}");
                    c * num_traits::pow(x.clone(), (-e) as usize)
                }
            })
            .sum()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `p(t) = p(t^-1)`.
    pub fn is_symmetric(&self) -> bool {
        *self == self.invert_var()
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`
    /// over `Z[t, t^-1]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (d_lo, d_hi) = (d.min_exp()?, d.max_exp()?);
        let dn = d.shift(-d_lo);
        let span = d_hi - d_lo;
        let lead = dn.terms[&span].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let (Some(r_lo), Some(r_hi)) = (rem.min_exp(), rem.max_exp()) {
            if r_hi - r_lo < span {
                return None;
            }
            let (q, r) = rem.terms[&r_hi].div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let step = Self::monomial(q, r_hi - span);
            rem = &rem - &(&step * &dn);
            quot = &quot + &step;
        }
        Some(quot.shift(-d_lo))
    }

    /// Coefficients as `i64` when they all fit.
    pub fn to_i64_terms(&self) -> Option<Vec<(i64, i64)>> {
        self.terms.iter().map(|(&e, c)| c.to_i64().map(|c| (e, c))).collect()
    }

    /// Renders with variable name `var`, highest power first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_mag = !(mag.is_one() && e != 0);
            if show_mag {
                out.push_str(&mag.to_string());
            }
            match e {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{e}")),
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Serialized as `{"exp": coeff}`; coefficients that overflow `i64` are
/// written as decimal strings.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            match c.to_i64() {
                Some(v) => map.serialize_entry(&e.to_string(), &v)?,
                None => map.serialize_entry(&e.to_string(), &c.to_string())?,
            }
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Int(i64),
            Big(String),
        }
        let raw = BTreeMap::<String, Coeff>::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for (k, v) in raw {
            let e: i64 = k.trim().parse().map_err(|_| de::Error::custom(format!("bad exponent {k:?}")))?;
            let c = match v {
                Coeff::Int(c) => BigInt::from(c),
                Coeff::Big(s) => s.parse().map_err(|_| de::Error::custom(format!("bad coefficient {s:?}")))?,
            };
            p.add_term(e, c);
        }
        Ok(p)
    }
}

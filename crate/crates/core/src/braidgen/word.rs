use std::fmt;

use serde::{Deserialize, Serialize};

use super::{crossing_schedule, crossing_sign_checked, Crossing, Sign};
use crate::params::{epsilon_offset, KnotParams};
use crate::{Error, Result};

/// `σ_generator^exponent`, with generators numbered `1..N-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: u32,
    pub exponent: Sign,
}

impl Letter {
    pub fn new(generator: u32, exponent: Sign) -> Self {
        Self { generator, exponent }
    }

    /// `+g` for `σ_g`, `-g` for its inverse.
    pub fn to_signed(self) -> i32 {
        self.generator as i32 * self.exponent.to_i32()
    }

    pub fn from_signed(v: i32) -> Result<Self> {
        if v == 0 {
            return Err(Error::Invalid("braid letter 0".into()));
        }
        let exponent = if v > 0 { Sign::Positive } else { Sign::Negative };
        Ok(Self { generator: v.unsigned_abs(), exponent })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawWord", into = "RawWord")]
pub struct BraidWord {
    pub strands: u32,
    pub letters: Vec<Letter>,
}

#[derive(Serialize, Deserialize)]
struct RawWord {
    strands: u32,
    word: Vec<i32>,
}

impl From<BraidWord> for RawWord {
    fn from(w: BraidWord) -> Self {
        RawWord { strands: w.strands, word: w.to_signed() }
    }
}

impl TryFrom<RawWord> for BraidWord {
    type Error = Error;
    fn try_from(raw: RawWord) -> Result<Self> {
        BraidWord::from_signed(raw.strands, &raw.word)
    }
}

impl BraidWord {
    pub fn new(strands: u32, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Invalid("a braid needs at least one strand".into()));
        }
        if let Some(bad) = letters.iter().find(|l| l.generator == 0 || l.generator >= strands) {
            return Err(Error::Invalid(format!("generator {} out of range for {strands} strands", bad.generator)));
        }
        Ok(Self { strands, letters })
    }

    pub fn from_signed(strands: u32, word: &[i32]) -> Result<Self> {
        let letters = word.iter().map(|&v| Letter::from_signed(v)).collect::<Result<_>>()?;
        Self::new(strands, letters)
    }

    pub fn to_signed(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.to_signed()).collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Cyclic rotation: letter `i` of the result is letter `i + shift` of `self`.
    pub fn rotate(&self, shift: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            letters.rotate_left(shift % self.letters.len());
        }
        Self { strands: self.strands, letters }
    }

    /// Concatenation on a common number of strands.
    pub fn concat(&self, other: &BraidWord) -> Self {
        let strands = self.strands.max(other.strands);
        let letters = self.letters.iter().chain(&other.letters).copied().collect();
        Self { strands, letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match l.exponent {
                Sign::Positive => write!(f, "s{}", l.generator)?,
                Sign::Negative => write!(f, "s{}^-1", l.generator)?,
            }
        }
        Ok(())
    }
}

/// The schedule of `params` with every sign filled in. Signs come from the
/// direct evaluation and must agree with the closed formula.
pub fn signed_schedule(params: &KnotParams) -> Result<Vec<Crossing>> {
    let eps = epsilon_offset(params.strands, params.q);
    let mut sched = crossing_schedule(params.strands, params.q, eps)?;
    for c in &mut sched {
        c.sign = Some(crossing_sign_checked(params, c)?);
    }
    Ok(sched)
}

/// `Π σ_{level(i)}^{sign(i)}` over the signed schedule.
pub fn braid_word(params: &KnotParams) -> Result<BraidWord> {
    let letters = signed_schedule(params)?
        .iter()
        .map(|c| Letter::new(c.level as u32, c.sign.expect("signed")))
        .collect();
    BraidWord::new(params.strands, letters)
}

/// Where each strand of the closed braid ends up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Closure {
    /// `permutation[i]` is the bottom position of the strand entering at top position `i`.
    pub permutation: Vec<usize>,
    pub components: usize,
}

impl Closure {
    pub fn is_knot(&self) -> bool {
        self.components == 1
    }
}

/// Permutation of the braid's strands; the standard closure has one
/// component per cycle.
pub fn closure_permutation(w: &BraidWord) -> Closure {
    let n = w.strands as usize;
    // at[pos] = strand currently at position pos
    let mut at: Vec<usize> = (0..n).collect();
    for l in &w.letters {
        let i = l.generator as usize;
        at.swap(i - 1, i);
    }
    let mut permutation = vec![0; n];
    for (pos, &strand) in at.iter().enumerate() {
        permutation[strand] = pos;
    }
    let mut seen = vec![false; n];
    let mut components = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = permutation[i];
        }
    }
    Closure { permutation, components }
}

pub fn writhe(w: &BraidWord) -> i64 {
    w.letters.iter().map(|l| l.exponent.to_i32() as i64).sum()
}

/// Inverts every exponent.
pub fn mirror_word(w: &BraidWord) -> BraidWord {
    let letters = w.letters.iter().map(|l| Letter::new(l.generator, l.exponent.flip())).collect();
    BraidWord { strands: w.strands, letters }
}

/// `σ_i ↦ σ_{N-i}`.
pub fn flip_word(w: &BraidWord) -> BraidWord {
    let letters = w.letters.iter().map(|l| Letter::new(w.strands - l.generator, l.exponent)).collect();
    BraidWord { strands: w.strands, letters }
}

pub fn reverse_word(w: &BraidWord) -> BraidWord {
    let letters = w.letters.iter().rev().copied().collect();
    BraidWord { strands: w.strands, letters }
}

/// Smallest `s` with `w1.rotate(s) == w2`, if any.
pub fn circular_shift_equal(w1: &BraidWord, w2: &BraidWord) -> Option<usize> {
    if w1.strands != w2.strands || w1.len() != w2.len() {
        return None;
    }
    if w1.is_empty() {
        return Some(0);
    }
    (0..w1.len()).find(|&s| {
        (0..w1.len()).all(|i| w1.letters[(i + s) % w1.len()] == w2.letters[i])
    })
}

/// Foata normal form under the far commutation `σ_i σ_j = σ_j σ_i`,
/// `|i - j| >= 2`: two words are equal as braids by commutations alone
/// exactly when their normal forms coincide.
pub fn commutation_normal_form(w: &BraidWord) -> BraidWord {
    let commute = |a: &Letter, b: &Letter| a.generator.abs_diff(b.generator) >= 2;
    let mut rest = w.letters.clone();
    let mut letters = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let free: Vec<usize> = (0..rest.len())
            .filter(|&j| rest[..j].iter().all(|a| commute(a, &rest[j])))
            .collect();
        let mut step: Vec<Letter> = free.iter().map(|&j| rest[j]).collect();
        step.sort_by_key(|l| (l.generator, l.exponent.to_i32()));
        letters.extend(step);
        for &j in free.iter().rev() {
            rest.remove(j);
        }
    }
    BraidWord { strands: w.strands, letters }
}

/// Like [`circular_shift_equal`], but up to far commutations.
pub fn circular_shift_equivalent(w1: &BraidWord, w2: &BraidWord) -> Option<usize> {
    if w1.strands != w2.strands || w1.len() != w2.len() {
        return None;
    }
    let target = commutation_normal_form(w2);
    (0..w1.len().max(1)).find(|&s| commutation_normal_form(&w1.rotate(s)) == target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{validate, validate_canonical, Rational};

    fn word(n: u32, p: u32, q: u32) -> BraidWord {
        braid_word(&validate_canonical(n, p, q).unwrap()).unwrap()
    }

    #[test]
    fn torus_word() {
        let w = word(3, 4, 4);
        assert_eq!(w.to_signed(), [1, 2, 1, 2, 1, 2, 1, 2]);
        assert_eq!(writhe(&w), 8);
    }

    #[test]
    fn square_knot_writhe_zero() {
        let w = word(3, 5, 4);
        assert_eq!(writhe(&w), 0);
        assert!(closure_permutation(&w).is_knot());
    }

    #[test]
    fn closure_components() {
        let empty = BraidWord::new(3, vec![]).unwrap();
        assert_eq!(closure_permutation(&empty).components, 3);
        assert_eq!(writhe(&empty), 0);
        let two = BraidWord::from_signed(2, &[1, 1]).unwrap();
        assert_eq!(closure_permutation(&two).components, 2);
        let trefoil = BraidWord::from_signed(2, &[1, 1, 1]).unwrap();
        assert!(closure_permutation(&trefoil).is_knot());
    }

    #[test]
    fn flip_on_two_strands_is_identity() {
        let w = BraidWord::from_signed(2, &[1, -1, 1]).unwrap();
        assert_eq!(flip_word(&w), w);
    }

    #[test]
    fn shifts() {
        let w = word(4, 7, 5);
        assert_eq!(circular_shift_equal(&w, &w), Some(0));
        let s = circular_shift_equal(&w, &w.rotate(5)).unwrap();
        assert!(s <= 5);
        assert_eq!(w.rotate(s), w.rotate(5));
        let t = word(3, 4, 4);
        assert_eq!(circular_shift_equal(&t, &mirror_word(&t)), None);
        assert!(BraidWord::from_signed(3, &[1, 3]).is_err());
    }

    #[test]
    fn half_period_shift_is_mirror_flip_rotation() {
        for (n, p, q) in [(3, 5, 4), (3, 7, 5), (4, 7, 5), (5, 22, 6)] {
            let a = validate_canonical(n, p, q).unwrap();
            let shifted = validate(n, p, q, a.phase + Rational::new(p as i64, 2 * q as i64)).unwrap();
            let w0 = braid_word(&a).unwrap();
            let w1 = braid_word(&shifted).unwrap();
            let block = (n * (n - 1) / 2) as usize;
            let mf = mirror_word(&flip_word(&w0));
            assert_eq!(commutation_normal_form(&mf.rotate(block)), commutation_normal_form(&w1), "K({n},{p},{q})");
            assert!(circular_shift_equivalent(&mf, &w1).is_some());
        }
    }

    #[test]
    fn normal_form() {
        let a = BraidWord::from_signed(4, &[3, 1, 2, 1, 3]).unwrap();
        let b = BraidWord::from_signed(4, &[1, 3, 2, 3, 1]).unwrap();
        assert_eq!(commutation_normal_form(&a), commutation_normal_form(&b));
        let c = BraidWord::from_signed(4, &[1, 2, 3]).unwrap();
        assert_ne!(commutation_normal_form(&c), commutation_normal_form(&reverse_word(&c)));
    }

    #[test]
    fn serde_as_signed_ints() {
        let w = BraidWord::from_signed(3, &[1, -2, 1]).unwrap();
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"strands":3,"word":[1,-2,1]}"#);
        assert_eq!(serde_json::from_str::<BraidWord>(&s).unwrap(), w);
        assert!(serde_json::from_str::<BraidWord>(r#"{"strands":2,"word":[2]}"#).is_err());
    }
}

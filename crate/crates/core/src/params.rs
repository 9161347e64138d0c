//! Knot parameters, critical phases and the crossing-window offset.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::braidgen::lemma_crossings;
use crate::{Error, Result};

/// Exact rational in lowest terms with positive denominator.
pub type Rational = Ratio<i64>;

/// Reduces `r` into `[0,1)`.
pub fn frac(r: Rational) -> Rational {
    r - r.floor()
}

/// Parses an exact fraction `a/b` (or an integer). Decimal input is rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse = |x: &str| {
        x.trim()
            .parse::<i64>()
            .map_err(|_| Error::Invalid(format!("'{s}' is not an exact fraction a/b")))
    };
    match s.split_once('/') {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b)?);
            if b == 0 {
                return Err(Error::Invalid(format!("'{s}' has zero denominator")));
            }
            Ok(Rational::new(a, b))
        }
        None => Ok(Rational::from_integer(parse(s)?)),
    }
}

/// Serde adapter writing a [`Rational`] as `"a/b"`.
pub mod rational_str {
    use super::{parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for a list of `"a/b"` strings.
pub mod rational_vec_str {
    use super::Rational;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&format!("{}/{}", r.numer(), r.denom()))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| super::parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// The triple `(N,p,q)` and a phase in turns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KnotParams {
    pub strands: u32,
    pub p: u32,
    pub q: u32,
    #[serde(with = "rational_str")]
    pub phase: Rational,
}

impl KnotParams {
    /// Builds parameters without any check. Used by the oracle to probe
    /// critical phases on purpose.
    pub fn new_unchecked(strands: u32, p: u32, q: u32, phase: Rational) -> Self {
        Self { strands, p, q, phase: frac(phase) }
    }

    pub fn n(&self) -> i64 {
        self.strands as i64
    }

    pub fn phase_f64(&self) -> f64 {
        *self.phase.numer() as f64 / *self.phase.denom() as f64
    }

    pub fn is_torus(&self) -> bool {
        self.p == self.q
    }

    /// Both frequencies even. Admitted; only possible for odd `N`.
    pub fn both_even(&self) -> bool {
        self.p.is_multiple_of(2) && self.q.is_multiple_of(2)
    }
}

impl fmt::Display for KnotParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{},{}; {})", self.strands, self.p, self.q, self.phase)
    }
}

fn check_coprime(n: u32, p: u32, q: u32) -> Result<()> {
    for (which, value) in [('p', p), ('q', q)] {
        let g = n.gcd(&value);
        if g != 1 {
            return Err(Error::NonCoprime { which, n, value, gcd: g });
        }
    }
    Ok(())
}

fn check_range(n: u32, p: u32, q: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("N = {n} is below 2")));
    }
    if p <= n {
        return Err(Error::OutOfRange(format!("p = {p} is not greater than N = {n}")));
    }
    if q <= n {
        return Err(Error::OutOfRange(format!("q = {q} is not greater than N = {n}")));
    }
    Ok(())
}

/// Validates a parameter set; the phase is normalized into `[0,1)`.
pub fn validate(n: u32, p: u32, q: u32, phase: Rational) -> Result<KnotParams> {
    check_range(n, p, q)?;
    check_coprime(n, p, q)?;
    let phase = frac(phase);
    if critical_phases(n, p, q)?.contains(phase) {
        return Err(Error::CriticalPhase(phase));
    }
    Ok(KnotParams { strands: n, p, q, phase })
}

/// Validates `(N,p,q)` and attaches [`canonical_phase`].
pub fn validate_canonical(n: u32, p: u32, q: u32) -> Result<KnotParams> {
    check_range(n, p, q)?;
    validate(n, p, q, canonical_phase(n, p, q)?)
}

/// Every `(N,p,q)` with `2 <= N <= max_strands`, `N < p,q <= max_freq` and
/// both frequencies coprime to `N`, in lexicographic order.
pub fn valid_triples(max_strands: u32, max_freq: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for n in 2..=max_strands {
        for p in n + 1..=max_freq {
            for q in n + 1..=max_freq {
                if n.gcd(&p) == 1 && n.gcd(&q) == 1 {
                    out.push((n, p, q));
                }
            }
        }
    }
    out
}

/// Sorted, finite set of critical phases in `[0,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseSet {
    pub strands: u32,
    pub p: u32,
    pub q: u32,
    #[serde(with = "rational_vec_str")]
    pub phases: Vec<Rational>,
}

impl PhaseSet {
    pub fn contains(&self, phase: Rational) -> bool {
        self.phases.binary_search(&frac(phase)).is_ok()
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    /// Open gaps `(lo, hi)` between cyclically consecutive phases; the last
    /// gap wraps, so its `hi` exceeds 1.
    pub fn gaps(&self) -> Vec<(Rational, Rational)> {
        let k = self.phases.len();
        (0..k)
            .map(|i| {
                let lo = self.phases[i];
                let hi = if i + 1 < k { self.phases[i + 1] } else { self.phases[0] + Rational::one() };
                (lo, hi)
            })
            .collect()
    }
}

/// Every phase at which some crossing of the y-projection is also a
/// coincidence of the x-coordinates, i.e. the curve self-intersects.
///
/// At a crossing `t = N(2m+1)/4q - (k+l)/2` the real parts of strands `k`
/// and `l` agree iff `2·phase + p(2m+1)/2q` is an integer, so the critical
/// phases are `s/2 - p(2m+1)/4q (mod 1)`.
pub fn critical_phases(n: u32, p: u32, q: u32) -> Result<PhaseSet> {
    check_coprime(n, p, q)?;
    if n < 2 || q == 0 {
        return Err(Error::OutOfRange(format!("N = {n}, q = {q}")));
    }
    let eps = epsilon_offset(n, q);
    let half = Rational::new(1, 2);
    let mut set = BTreeSet::new();
    for c in lemma_crossings(n, q, eps) {
        let base = Rational::new(p as i64 * (2 * c.m + 1), 4 * q as i64);
        for s in 0..2 {
            set.insert(frac(half * s - base));
        }
    }
    Ok(PhaseSet { strands: n, p, q, phases: set.into_iter().collect() })
}

/// Midpoint of the widest gap between consecutive critical phases. Ties go
/// to the smallest midpoint in `[0,1)`.
pub fn canonical_phase(n: u32, p: u32, q: u32) -> Result<Rational> {
    let set = critical_phases(n, p, q)?;
    if set.is_empty() {
        return Ok(Rational::zero());
    }
    let two = Rational::from_integer(2);
    let best = set
        .gaps()
        .into_iter()
        .map(|(lo, hi)| (hi - lo, frac((lo + hi) / two)))
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
        .expect("nonempty");
    Ok(best.1)
}

/// A small positive offset so that the window `[ε, 1+ε)` starts away from
/// every crossing time: `1/(8qN)`, halved until it clears.
pub fn epsilon_offset(n: u32, q: u32) -> Rational {
    let (n64, q64) = (n as i64, q as i64);
    // Crossing times modulo 1 over a full period of the index.
    let mut times: Vec<Rational> = (0..2 * q64)
        .flat_map(|m| (0..n64).flat_map(move |k| (k + 1..n64).map(move |l| (m, k, l))))
        .map(|(m, k, l)| frac(Rational::new(n64 * (2 * m + 1), 4 * q64) - Rational::new(k + l, 2)))
        .collect();
    times.sort();
    times.dedup();
    let min_gap = times
        .windows(2)
        .map(|w| w[1] - w[0])
        .chain(times.first().zip(times.last()).map(|(a, b)| *a + Rational::one() - *b))
        .filter(|g| !g.is_zero())
        .min()
        .unwrap_or_else(Rational::one);

    let mut eps = Rational::new(1, 8 * q64 * n64);
    while eps * 2 >= min_gap || times.binary_search(&eps).is_ok() {
        eps /= 2;
    }
    eps
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn torus_quarter_phase_is_valid() {
        let k = validate(3, 4, 4, r(1, 8)).unwrap();
        assert_eq!(k.phase, r(1, 8));
    }

    #[test]
    fn rejects_common_factor() {
        let e = validate(4, 6, 5, r(0, 1)).unwrap_err();
        assert_eq!(e, Error::NonCoprime { which: 'p', n: 4, value: 6, gcd: 2 });
        assert!(e.to_string().contains("gcd(N,p) must be 1"));
    }

    #[test]
    fn rejects_small_frequencies() {
        assert!(matches!(validate(3, 2, 4, r(1, 8)), Err(Error::OutOfRange(_))));
        assert!(matches!(validate(5, 7, 4, r(1, 8)), Err(Error::OutOfRange(_))));
        assert!(matches!(validate(1, 3, 4, r(1, 8)), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn rejects_each_critical_phase() {
        let set = critical_phases(3, 5, 4).unwrap();
        assert!(!set.is_empty());
        for &phi in &set.phases {
            assert_eq!(validate(3, 5, 4, phi), Err(Error::CriticalPhase(phi)));
            // also after adding whole turns
            assert_eq!(validate(3, 5, 4, phi + 2), Err(Error::CriticalPhase(phi)));
        }
    }

    #[test]
    fn phase_is_normalized() {
        let k = validate(3, 5, 4, r(9, 8)).unwrap();
        assert_eq!(k.phase, r(1, 8));
        assert_eq!(validate(k.strands, k.p, k.q, k.phase).unwrap(), k);
    }

    #[test]
    fn torus_critical_phases_are_quarter_turns() {
        for (n, p) in [(2, 3), (3, 4), (3, 5), (4, 7), (5, 6)] {
            let set = critical_phases(n, p, p).unwrap();
            assert_eq!(set.phases, vec![r(1, 4), r(3, 4)], "N={n} p={p}");
            assert!(!set.contains(r(0, 1)));
        }
    }

    #[test]
    fn critical_phases_3_5_4() {
        // s/2 - 5(2m+1)/16 mod 1 for all residues of m mod 4: the odd sixteenths.
        let set = critical_phases(3, 5, 4).unwrap();
        let expect: Vec<_> = (0..8).map(|i| r(2 * i + 1, 16)).collect();
        assert_eq!(set.phases, expect);
    }

    #[test]
    fn canonical_phase_midpoints() {
        assert_eq!(canonical_phase(3, 4, 4).unwrap(), r(0, 1));
        assert_eq!(canonical_phase(3, 5, 4).unwrap(), r(0, 1));
        let a = canonical_phase(4, 7, 5).unwrap();
        assert_eq!(a, canonical_phase(4, 7, 5).unwrap());
        assert!(!critical_phases(4, 7, 5).unwrap().contains(a));
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon_offset(3, 4), r(1, 96));
        assert_eq!(epsilon_offset(2, 3), r(1, 48));
        // below half of the 1/(4q) grid on which crossing times live
        for n in 2..7u32 {
            for q in n + 1..14 {
                if n.gcd(&q) != 1 {
                    continue;
                }
                let e = epsilon_offset(n, q);
                assert!(e > Rational::zero() && e * 2 < r(1, 4 * q as i64));
            }
        }
    }

    #[test]
    fn parse_exact_fractions_only() {
        assert_eq!(parse_rational("3/16").unwrap(), r(3, 16));
        assert_eq!(parse_rational(" 2/4 ").unwrap(), r(1, 2));
        assert_eq!(parse_rational("0").unwrap(), r(0, 1));
        assert!(parse_rational("0.25").is_err());
        assert!(parse_rational("1/0").is_err());
    }
}

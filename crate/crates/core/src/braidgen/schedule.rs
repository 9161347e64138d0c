use std::f64::consts::PI;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::Sign;
use crate::params::{rational_str, Rational};
use crate::{Error, Result};

/// One crossing of the y-projection.
///
/// `m` is the integer index of the crossing time
/// `t = N(2m+1)/4q - (k+l)/2`; it is the same index that enters the sign
/// formula, so no reindexing happens between the two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub ordinal: usize,
    #[serde(with = "rational_str")]
    pub time: Rational,
    pub k: u32,
    pub l: u32,
    pub m: i64,
    pub level: usize,
    pub sign: Option<Sign>,
}

impl Crossing {
    /// `(-1)^m cos(πq(k-l)/N)`, the common height of the two strands.
    pub fn height(&self, strands: u32, q: u32) -> f64 {
        level_value(strands, q, self.k, self.l, self.m)
    }
}

pub(crate) fn level_value(n: u32, q: u32, k: u32, l: u32, m: i64) -> f64 {
    let s = if m.is_even() { 1.0 } else { -1.0 };
    s * (PI * q as f64 * (k as f64 - l as f64) / n as f64).cos()
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct LemmaCrossing {
    pub time: Rational,
    pub k: u32,
    pub l: u32,
    pub m: i64,
}

/// All `(t, k, l, m)` with `t ∈ [ε, 1+ε)`, sorted by `(t, k+l, k-l)`.
///
/// Sorting by time with that tie-break also makes the pair at ordinal
/// `i + N(N-1)/2` equal to the pair at `i`, since each pair recurs every
/// `N/2q` and every pair crosses exactly once per such window.
pub(crate) fn lemma_crossings(n: u32, q: u32, eps: Rational) -> Vec<LemmaCrossing> {
    let (n64, q64) = (n as i64, q as i64);
    let one = Rational::from_integer(1);
    let mut out = Vec::new();
    for k in 0..n {
        for l in k + 1..n {
            let s = (k + l) as i64;
            let lower = eps * (2 * q64) / n64 + Rational::new(q64 * s, n64) - Rational::new(1, 2);
            let mut m = lower.ceil().to_integer();
            loop {
                let t = Rational::new(n64 * (2 * m + 1), 4 * q64) - Rational::new(s, 2);
                if t >= one + eps {
                    break;
                }
                if t >= eps {
                    out.push(LemmaCrossing { time: t, k, l, m });
                }
                m += 1;
            }
        }
    }
    out.sort_by(|a, b| {
        let key = |c: &LemmaCrossing| (c.time, c.k + c.l, c.k as i64 - c.l as i64);
        key(a).cmp(&key(b))
    });
    out
}

/// The `N-1` distinct crossing heights, highest first.
#[derive(Clone, Debug, PartialEq)]
pub struct Levels {
    pub values: Vec<f64>,
}

/// Heights closer than this are the same level.
const SAME_LEVEL: f64 = 1e-12;
/// Distinct levels must be at least this far apart.
const LEVEL_SEPARATION: f64 = 1e-9;

impl Levels {
    fn from_heights(strands: u32, heights: impl IntoIterator<Item = f64>) -> Result<Self> {
        let mut hs: Vec<f64> = heights.into_iter().collect();
        hs.sort_by(|a, b| b.total_cmp(a));
        let mut values: Vec<f64> = Vec::new();
        for h in hs {
            match values.last() {
                Some(&v) if (v - h).abs() <= SAME_LEVEL => {}
                Some(&v) if (v - h).abs() < LEVEL_SEPARATION => {
                    return Err(Error::LevelCollision(format!("heights {v} and {h}")));
                }
                _ => values.push(h),
            }
        }
        if values.len() != strands as usize - 1 {
            return Err(Error::LevelCollision(format!(
                "expected {} levels, found {}",
                strands - 1,
                values.len()
            )));
        }
        Ok(Self { values })
    }

    /// 1-based rank of `height`; level 1 is the topmost.
    pub fn rank(&self, height: f64) -> Result<usize> {
        self.values
            .iter()
            .position(|v| (v - height).abs() <= SAME_LEVEL)
            .map(|i| i + 1)
            .ok_or_else(|| Error::LevelCollision(format!("height {height} matches no level")))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn check_coprime_q(n: u32, q: u32) -> Result<()> {
    let g = n.gcd(&q);
    if g != 1 {
        return Err(Error::NonCoprime { which: 'q', n, value: q, gcd: g });
    }
    if n < 2 {
        return Err(Error::OutOfRange(format!("N = {n} is below 2")));
    }
    Ok(())
}

/// The `q(N-1)` crossings of the braid diagram on `[ε, 1+ε)`, ordered by
/// time and then by level, with levels assigned and signs unset.
pub fn crossing_schedule(n: u32, q: u32, eps: Rational) -> Result<Vec<Crossing>> {
    check_coprime_q(n, q)?;
    let raw = lemma_crossings(n, q, eps);
    let expected = (q * (n - 1)) as usize;
    if raw.len() != expected {
        return Err(Error::Internal(format!(
            "schedule for N={n}, q={q} has {} crossings, expected {expected}",
            raw.len()
        )));
    }
    let levels = Levels::from_heights(n, raw.iter().map(|c| level_value(n, q, c.k, c.l, c.m)))?;
    let mut out = raw
        .into_iter()
        .map(|c| {
            Ok(Crossing {
                ordinal: 0,
                time: c.time,
                k: c.k,
                l: c.l,
                m: c.m,
                level: levels.rank(level_value(n, q, c.k, c.l, c.m))?,
                sign: None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    // Simultaneous crossings are at least two levels apart, so they commute;
    // listing them top level first gives the uniform generator patterns
    // (1,3,2), (2,4,1,3), ...
    out.sort_by_key(|a| (a.time, a.level));
    for (i, c) in out.iter_mut().enumerate() {
        c.ordinal = i + 1;
    }
    Ok(out)
}

/// Crossing heights of the `(N,q)` diagram.
pub fn y_levels(n: u32, q: u32) -> Result<Levels> {
    check_coprime_q(n, q)?;
    let eps = crate::params::epsilon_offset(n, q);
    let raw = lemma_crossings(n, q, eps);
    Levels::from_heights(n, raw.iter().map(|c| level_value(n, q, c.k, c.l, c.m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::epsilon_offset;

    fn sched(n: u32, q: u32) -> Vec<Crossing> {
        crossing_schedule(n, q, epsilon_offset(n, q)).unwrap()
    }

    #[test]
    fn two_strands() {
        let s = sched(2, 3);
        assert_eq!(s.len(), 3);
        assert!(s.iter().all(|c| (c.k, c.l) == (0, 1) && c.level == 1));
    }

    #[test]
    fn counts() {
        assert_eq!(sched(3, 4).len(), 8);
        assert_eq!(sched(5, 6).len(), 24);
        assert!(matches!(crossing_schedule(4, 6, Rational::new(1, 100)), Err(Error::NonCoprime { .. })));
    }

    #[test]
    fn times_in_window_and_ordered() {
        for (n, q) in [(3, 4), (4, 5), (5, 6), (6, 7), (5, 13)] {
            let eps = epsilon_offset(n, q);
            let s = crossing_schedule(n, q, eps).unwrap();
            for w in s.windows(2) {
                assert!(w[0].time <= w[1].time);
            }
            for c in &s {
                assert!(c.time >= eps && c.time < eps + 1);
                assert!(c.k < c.l && c.l < n);
                // Lemma formula
                let t = Rational::new(n as i64 * (2 * c.m + 1), 4 * q as i64)
                    - Rational::new((c.k + c.l) as i64, 2);
                assert_eq!(t, c.time);
            }
        }
    }

    #[test]
    fn pairs_repeat_every_block() {
        for (n, q) in [(3, 4), (4, 5), (5, 6), (6, 7), (4, 11), (5, 12)] {
            let s = sched(n, q);
            let block = (n * (n - 1) / 2) as usize;
            // The pair at ordinal i+B is the pair at i, up to the order
            // inside a group of simultaneous crossings.
            let group = |t: Rational| {
                let mut g: Vec<_> = s.iter().filter(|c| c.time == t).map(|c| (c.k, c.l, c.m)).collect();
                g.sort();
                g
            };
            for i in 0..s.len() - block {
                let later = group(s[i + block].time);
                let shifted: Vec<_> = group(s[i].time).into_iter().map(|(k, l, m)| (k, l, m + 1)).collect();
                assert_eq!(later, shifted);
                assert_eq!(s[i + block].time, s[i].time + Rational::new(n as i64, 2 * q as i64));
            }
        }
    }

    #[test]
    fn simultaneous_crossings_exist_for_four_strands() {
        let s = sched(5, 6);
        assert!(s.windows(2).any(|w| w[0].time == w[1].time));
        for w in s.windows(2).filter(|w| w[0].time == w[1].time) {
            assert!((w[0].level as i64 - w[1].level as i64).abs() >= 2);
        }
    }

    #[test]
    fn level_counts() {
        assert_eq!(y_levels(2, 5).unwrap().len(), 1);
        let l = y_levels(3, 4).unwrap();
        assert_eq!(l.len(), 2);
        assert!((l.values[0] + l.values[1]).abs() < 1e-12);
        assert_eq!(y_levels(4, 5).unwrap().len(), 3);
    }

    #[test]
    fn generator_patterns() {
        let gens = |n, q| sched(n, q).iter().map(|c| c.level).collect::<Vec<_>>();
        assert_eq!(gens(3, 4), [1, 2].repeat(4));
        assert_eq!(gens(4, 5), [1, 3, 2].repeat(5));
        assert_eq!(gens(5, 6), [2, 4, 1, 3].repeat(6));
    }
}

//! Numeric cross-check of the exact crossing data.
//!
//! The sampler evaluates the strands
//! `B_k(t) = cos(2π(p(t+k)/N + phase)) + i sin(2πq(t+k)/N)` on a grid,
//! brackets every sign change of `Im B_k - Im B_l`, refines it by bisection
//! and reads off the crossing sign from the curve. Nothing here uses the
//! closed crossing formulas.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::braidgen::{Crossing, Sign};
use crate::params::{epsilon_offset, KnotParams, Rational};
use crate::{Error, Result};

/// Bisection stops once `|h_k - h_l|` is below this.
pub const REFINE_TOLERANCE: f64 = 1e-12;
/// Largest time difference accepted when matching exact and numeric crossings.
pub const MATCH_TOLERANCE: f64 = 1e-9;
/// Real parts closer than this at a crossing mean the curve nearly self-intersects.
pub const UNRESOLVED_GAP: f64 = 1e-10;
/// Separation below this counts as an intersection in the phase scan.
pub const DIP_THRESHOLD: f64 = 1e-9;

const MAX_BISECTIONS: usize = 200;

fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

#[derive(Clone, Debug)]
pub struct CurveSampler {
    pub params: KnotParams,
    /// Grid points per unit of `t`.
    pub resolution: usize,
}

impl CurveSampler {
    /// Default resolution `4096·q`.
    pub fn new(params: KnotParams) -> Self {
        let resolution = 4096 * params.q as usize;
        Self { params, resolution }
    }

    pub fn with_resolution(params: KnotParams, resolution: usize) -> Self {
        Self { params, resolution: resolution.max(1) }
    }

    fn n(&self) -> f64 {
        self.params.strands as f64
    }

    pub fn re(&self, k: u32, t: f64) -> f64 {
        let p = self.params.p as f64;
        (TAU * (p * (t + k as f64) / self.n() + self.params.phase_f64())).cos()
    }

    /// `h_k(t) = Im B_k(t)`.
    pub fn im(&self, k: u32, t: f64) -> f64 {
        let q = self.params.q as f64;
        (TAU * q * (t + k as f64) / self.n()).sin()
    }

    /// `h_k'(t)` up to the positive factor `2πq/N`.
    fn slope(&self, k: u32, t: f64) -> f64 {
        let q = self.params.q as f64;
        (TAU * q * (t + k as f64) / self.n()).cos()
    }

    pub fn distance(&self, k: u32, l: u32, t: f64) -> f64 {
        (self.re(k, t) - self.re(l, t)).hypot(self.im(k, t) - self.im(l, t))
    }

    fn window(&self) -> (f64, f64) {
        let eps = to_f64(epsilon_offset(self.params.strands, self.params.q));
        (eps, 1.0 + eps)
    }

    /// Refined roots of `h_k - h_l` on the window, with the bracketing grid
    /// cell of each.
    fn roots(&self, k: u32, l: u32) -> Vec<(f64, f64, f64)> {
        let (a, b) = self.window();
        let f = |t: f64| self.im(k, t) - self.im(l, t);
        let cells = self.resolution;
        let h = (b - a) / cells as f64;
        let mut out = Vec::new();
        let mut t0 = a;
        let mut f0 = f(t0);
        for j in 1..=cells {
            let t1 = a + j as f64 * h;
            let f1 = f(t1);
            if (f0 >= 0.0) != (f1 >= 0.0) {
                let (mut lo, mut hi, lo_pos) = (t0, t1, f0 >= 0.0);
                let mut mid = 0.5 * (lo + hi);
                for _ in 0..MAX_BISECTIONS {
                    mid = 0.5 * (lo + hi);
                    let fm = f(mid);
                    if fm.abs() < REFINE_TOLERANCE {
                        break;
                    }
                    if (fm >= 0.0) == lo_pos {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                if mid < b {
                    out.push((mid, t0, t1));
                }
            }
            t0 = t1;
            f0 = f1;
        }
        out
    }
}

/// A crossing located on the sampled curve.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericCrossing {
    pub time: f64,
    pub k: u32,
    pub l: u32,
    /// The strand in front (larger real part).
    pub over: u32,
    pub sign: Sign,
}

/// Every crossing of the y-projection found on the grid, sorted by time.
pub fn numeric_crossings(sampler: &CurveSampler) -> Result<Vec<NumericCrossing>> {
    let n = sampler.params.strands;
    let mut out = Vec::new();
    for k in 0..n {
        for l in k + 1..n {
            for (t, _, _) in sampler.roots(k, l) {
                let front = sampler.re(k, t) - sampler.re(l, t);
                if front.abs() < UNRESOLVED_GAP {
                    return Err(Error::UnresolvedCrossing { time: t, k, l, gap: front.abs() });
                }
                let rising = sampler.slope(k, t) - sampler.slope(l, t);
                out.push(NumericCrossing {
                    time: t,
                    k,
                    l,
                    over: if front > 0.0 { k } else { l },
                    sign: Sign::of(front) * Sign::of(rising),
                });
            }
        }
    }
    out.sort_by(|a, b| a.time.total_cmp(&b.time));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MissingCrossing {
    pub ordinal: usize,
    pub time: f64,
    pub k: u32,
    pub l: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SignDisagreement {
    pub ordinal: usize,
    pub k: u32,
    pub l: u32,
    pub exact: Sign,
    pub numeric: Sign,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossingReport {
    pub matched: usize,
    pub missing: Vec<MissingCrossing>,
    pub extra: Vec<NumericCrossing>,
    pub max_time_error: f64,
    pub sign_disagreements: Vec<SignDisagreement>,
    pub match_tolerance: f64,
    pub refine_tolerance: f64,
}

impl CrossingReport {
    pub fn is_clean(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.sign_disagreements.is_empty()
    }
}

/// Matches each exact crossing to the nearest unused numeric crossing on the
/// same pair of strands, within [`MATCH_TOLERANCE`]. Exact crossings that
/// carry a sign are compared with the sign read off the sampled curve.
pub fn certify_schedule(analytic: &[Crossing], sampler: &CurveSampler) -> Result<CrossingReport> {
    let numeric = numeric_crossings(sampler)?;
    let mut used = vec![false; numeric.len()];
    let mut report = CrossingReport {
        matched: 0,
        missing: Vec::new(),
        extra: Vec::new(),
        max_time_error: 0.0,
        sign_disagreements: Vec::new(),
        match_tolerance: MATCH_TOLERANCE,
        refine_tolerance: REFINE_TOLERANCE,
    };
    for c in analytic {
        let t = to_f64(c.time);
        let best = numeric
            .iter()
            .enumerate()
            .filter(|(i, x)| !used[*i] && x.k == c.k && x.l == c.l)
            .map(|(i, x)| (i, (x.time - t).abs()))
            .filter(|&(_, d)| d <= MATCH_TOLERANCE)
            .min_by(|a, b| a.1.total_cmp(&b.1));
        match best {
            Some((i, d)) => {
                used[i] = true;
                report.matched += 1;
                report.max_time_error = report.max_time_error.max(d);
                if let Some(s) = c.sign {
                    if s != numeric[i].sign {
                        report.sign_disagreements.push(SignDisagreement {
                            ordinal: c.ordinal,
                            k: c.k,
                            l: c.l,
                            exact: s,
                            numeric: numeric[i].sign,
                        });
                    }
                }
            }
            None => report.missing.push(MissingCrossing { ordinal: c.ordinal, time: t, k: c.k, l: c.l }),
        }
    }
    report.extra = numeric.into_iter().zip(used).filter(|(_, u)| !u).map(|(x, _)| x).collect();
    Ok(report)
}

/// Smallest distance `|B_k - B_l|` seen near the crossings: at each refined
/// root and at every grid point within `1/(8qN)` of it. Grids whose
/// resolutions divide one another are nested, so refining can only lower the
/// grid part; the root part moves by at most the refinement tolerance.
pub fn min_separation(sampler: &CurveSampler) -> f64 {
    let n = sampler.params.strands;
    let (a, b) = sampler.window();
    let h = (b - a) / sampler.resolution as f64;
    let radius = 1.0 / (8.0 * sampler.params.q as f64 * n as f64);
    let mut best = f64::INFINITY;
    for k in 0..n {
        for l in k + 1..n {
            for (t, _, _) in sampler.roots(k, l) {
                best = best.min(sampler.distance(k, l, t));
                let lo = ((t - radius - a) / h).ceil().max(0.0) as usize;
                let hi = ((t + radius - a) / h).floor().min(sampler.resolution as f64) as usize;
                for j in lo..=hi {
                    best = best.min(sampler.distance(k, l, a + j as f64 * h));
                }
            }
        }
    }
    best
}

/// Phases on the grid `j/(64pq)` where the curve comes within
/// [`DIP_THRESHOLD`] of itself.
///
/// The crossing times do not depend on the phase, so the roots are found
/// once and only the real parts are re-evaluated per phase.
pub fn phase_scan(strands: u32, p: u32, q: u32) -> Vec<Rational> {
    let steps = 64 * p as i64 * q as i64;
    let base = KnotParams::new_unchecked(strands, p, q, Rational::from_integer(0));
    let sampler = CurveSampler::new(base);
    let roots: Vec<(u32, u32, f64)> = (0..strands)
        .flat_map(|k| (k + 1..strands).map(move |l| (k, l)))
        .flat_map(|(k, l)| sampler.roots(k, l).into_iter().map(move |(t, _, _)| (k, l, t)))
        .collect();
    let (n, pf) = (strands as f64, p as f64);
    (0..steps)
        .filter(|&j| {
            let phase = j as f64 / steps as f64;
            let re = |k: u32, t: f64| (TAU * (pf * (t + k as f64) / n + phase)).cos();
            roots.iter().any(|&(k, l, t)| (re(k, t) - re(l, t)).abs() < DIP_THRESHOLD)
        })
        .map(|j| Rational::new(j, steps))
        .collect()
}

use std::collections::HashMap;

use super::LaurentPoly;
use crate::braidgen::{closure_permutation, writhe, BraidWord, Sign};
use crate::{Error, Result};

/// Largest strand count accepted by [`jones`]; the state space has
/// Catalan(N) planar matchings.
pub const MAX_JONES_STRANDS: usize = 8;

/// Planar matching of `2N` boundary points: `0..N` along the bottom,
/// `N..2N` along the top; `partner[i]` is the point joined to `i`.
type Diagram = Vec<u8>;

fn identity(n: usize) -> Diagram {
    (0..2 * n).map(|i| if i < n { (i + n) as u8 } else { (i - n) as u8 }).collect()
}

/// The cup-cap generator `e_g` (1-based) joining positions `g-1` and `g`.
fn cup_cap(n: usize, g: usize) -> Diagram {
    let mut d = identity(n);
    let (a, b) = (g - 1, g);
    d[a] = b as u8;
    d[b] = a as u8;
    d[n + a] = (n + b) as u8;
    d[n + b] = (n + a) as u8;
    d
}

/// Stacks `upper` on top of `lower`, returning the diagram and the number
/// of closed loops formed in the middle.
fn compose(lower: &Diagram, upper: &Diagram, n: usize) -> (Diagram, usize) {
    let mut out = vec![0u8; 2 * n];
    let mut seen_mid = vec![false; n];
    // Walks from an outer point until it reaches another outer point.
    let walk = |start: usize, seen_mid: &mut Vec<bool>| -> usize {
        let (mut in_lower, mut idx) = if start < n { (true, start) } else { (false, start) };
        loop {
            if in_lower {
                let nxt = lower[idx] as usize;
                if nxt < n {
                    return nxt;
                }
                seen_mid[nxt - n] = true;
                in_lower = false;
                idx = nxt - n;
            } else {
                let nxt = upper[idx] as usize;
                if nxt >= n {
                    return nxt;
                }
                seen_mid[nxt] = true;
                in_lower = true;
                idx = n + nxt;
            }
        }
    };
    for start in 0..2 * n {
        let end = walk(start, &mut seen_mid);
        out[start] = end as u8;
    }
    let mut loops = 0;
    for m in 0..n {
        if seen_mid[m] {
            continue;
        }
        loops += 1;
        let mut cur = m;
        loop {
            seen_mid[cur] = true;
            // middle point cur: go down through lower, then back up through upper
            let via_lower = lower[n + cur] as usize - n;
            seen_mid[via_lower] = true;
            let via_upper = upper[via_lower] as usize;
            if seen_mid[via_upper] {
                break;
            }
            cur = via_upper;
        }
    }
    (out, loops)
}

/// Number of loops in the trace closure of `d` (bottom `i` joined to top `i`).
fn closure_loops(d: &Diagram, n: usize) -> usize {
    let mut seen = vec![false; 2 * n];
    let mut loops = 0;
    for start in 0..2 * n {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            let j = d[i] as usize;
            seen[j] = true;
            i = if j < n { j + n } else { j - n };
        }
    }
    loops
}

fn a_pow(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(1, e)
}

/// Kauffman bracket of the closure of `w` in the variable `A`, normalized
/// so that the unknot has bracket 1.
pub fn kauffman_bracket(w: &BraidWord) -> Result<LaurentPoly> {
    let n = w.strands as usize;
    if n > MAX_JONES_STRANDS {
        return Err(Error::StrandLimit { strands: n, limit: MAX_JONES_STRANDS });
    }
    let delta = &(-&a_pow(2)) - &a_pow(-2);
    let mut delta_pows = vec![LaurentPoly::one()];
    let delta_pow = |k: usize, cache: &mut Vec<LaurentPoly>| {
        while cache.len() <= k {
            let next = cache.last().expect("nonempty") * &delta;
            cache.push(next);
        }
        cache[k].clone()
    };

    let mut state: HashMap<Diagram, LaurentPoly> = HashMap::from([(identity(n), LaurentPoly::one())]);
    for l in &w.letters {
        let g = l.generator as usize;
        let e = cup_cap(n, g);
        // <σ> = A·1 + A^-1·e, <σ^-1> = A^-1·1 + A·e
        let (keep, smooth) = match l.exponent {
            Sign::Positive => (a_pow(1), a_pow(-1)),
            Sign::Negative => (a_pow(-1), a_pow(1)),
        };
        let mut next: HashMap<Diagram, LaurentPoly> = HashMap::with_capacity(state.len() * 2);
        for (d, c) in state {
            let kept = &c * &keep;
            let (de, loops) = compose(&d, &e, n);
            let smoothed = &(&c * &smooth) * &delta_pow(loops, &mut delta_pows);
            for (key, v) in [(d, kept), (de, smoothed)] {
                let slot = next.entry(key).or_default();
                *slot = &*slot + &v;
            }
        }
        next.retain(|_, v| !v.is_zero());
        state = next;
    }
    let mut total = LaurentPoly::zero();
    for (d, c) in &state {
        let loops = closure_loops(d, n);
        total = &total + &(c * &delta_pow(loops - 1, &mut delta_pows));
    }
    Ok(total)
}

/// Jones polynomial of the closure of `w`, via `V(t) = (-A^3)^-e <K>` at
/// `A = t^(-1/4)`.
pub fn jones(w: &BraidWord) -> Result<LaurentPoly> {
    let closure = closure_permutation(w);
    if !closure.is_knot() {
        return Err(Error::NotAKnot(closure.components));
    }
    let bracket = kauffman_bracket(w)?;
    let e = writhe(w);
    let sign = if e % 2 == 0 { 1 } else { -1 };
    let v_a = &bracket * &LaurentPoly::monomial(sign, -3 * e);
    v_a.divide_exponents(-4)
        .ok_or_else(|| Error::Internal(format!("bracket exponents not divisible by 4: {v_a}")))
}

/// Closed form for the torus knot built from `(σ_1 ⋯ σ_{a-1})^b`:
/// `t^((a-1)(b-1)/2) (1 - t^(a+1) - t^(b+1) + t^(a+b)) / (1 - t^2)`.
pub fn torus_jones(a: u32, b: u32) -> Result<LaurentPoly> {
    use num_integer::Integer;
    if a < 2 || b < 2 || a.gcd(&b) != 1 {
        return Err(Error::Invalid(format!("T({a},{b}) is not a torus knot")));
    }
    let (a, b) = (a as i64, b as i64);
    let num = LaurentPoly::from_terms([(0, 1), (a + 1, -1), (b + 1, -1), (a + b, 1)]);
    let den = LaurentPoly::from_terms([(0, 1), (2, -1)]);
    let q = num.div_exact(&den).ok_or_else(|| Error::Internal(format!("T({a},{b}) Jones division")))?;
    Ok(q.shift((a - 1) * (b - 1) / 2))
}

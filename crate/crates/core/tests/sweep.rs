//! Whole-box checks over `2 <= N <= 6`, `N < p,q <= 13`.

use minknot::braidgen::{braid_word, closure_permutation, mirror_word, signed_schedule};
use minknot::catalog::Catalog;
use minknot::invariants::{alexander, jones};
use minknot::oracle::{min_separation, phase_scan, CurveSampler};
use minknot::params::{critical_phases, frac, valid_triples, validate, validate_canonical, KnotParams};
use minknot::Rational;

fn sample_phases(n: u32, p: u32, q: u32) -> Vec<Rational> {
    let gaps = critical_phases(n, p, q).unwrap().gaps();
    (0..5).map(|i| gaps[i * gaps.len() / 5]).map(|(lo, hi)| frac((lo + hi) / Rational::from(2))).collect()
}

#[test]
fn closed_sign_formula_agrees_everywhere() {
    for (n, p, q) in valid_triples(6, 13) {
        for phi in sample_phases(n, p, q) {
            let params = validate(n, p, q, phi).unwrap();
            let sched = signed_schedule(&params).unwrap_or_else(|e| panic!("{params}: {e}"));
            assert_eq!(sched.len(), (q * (n - 1)) as usize);
        }
    }
}

#[test]
fn closures_are_single_cycles() {
    for (n, p, q) in valid_triples(6, 13) {
        for phi in sample_phases(n, p, q) {
            let w = braid_word(&validate(n, p, q, phi).unwrap()).unwrap();
            assert!(closure_permutation(&w).is_knot(), "K({n},{p},{q}) at {phi}");
        }
    }
}

#[test]
fn half_turn_of_phase_is_the_mirror() {
    for (n, p, q) in valid_triples(6, 13) {
        let params = validate_canonical(n, p, q).unwrap();
        let turned = validate(n, p, q, frac(params.phase + Rational::new(1, 2))).unwrap();
        assert_eq!(braid_word(&turned).unwrap(), mirror_word(&braid_word(&params).unwrap()), "{params}");
    }
}

#[test]
fn no_knot_identifies_only_to_obstructed_entries() {
    let cat = Catalog::bundled();
    for (n, p, q) in valid_triples(6, 13) {
        let w = braid_word(&validate_canonical(n, p, q).unwrap()).unwrap();
        let id = cat.identify(&alexander(&w).unwrap(), Some(&jones(&w).unwrap()), 0);
        assert!(id.obstruction_note.is_none(), "K({n},{p},{q}): {:?}", id.labels());
    }
}

#[test]
fn critical_phases_are_separation_dips() {
    for (n, p, q) in valid_triples(4, 9) {
        let set = critical_phases(n, p, q).unwrap();
        assert_eq!(phase_scan(n, p, q), set.phases, "K({n},{p},{q})");
        for &phi in &set.phases {
            let sampler = CurveSampler::new(KnotParams::new_unchecked(n, p, q, phi));
            assert!(min_separation(&sampler) < 1e-9, "K({n},{p},{q}) at {phi}");
        }
        let canonical = CurveSampler::new(validate_canonical(n, p, q).unwrap());
        assert!(min_separation(&canonical) > 1e-6, "K({n},{p},{q})");
    }
}

#[test]
fn refining_the_grid_never_raises_the_minimum() {
    for (n, p, q) in [(3, 4, 4), (3, 5, 4), (4, 7, 5), (5, 22, 6)] {
        let params = validate_canonical(n, p, q).unwrap();
        let mut last = f64::INFINITY;
        for k in 0..4 {
            let d = min_separation(&CurveSampler::with_resolution(params, (512 * q as usize) << k));
            assert!(d <= last + 1e-12, "{params}: {d} after {last}");
            last = d;
        }
    }
}

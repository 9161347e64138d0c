use minknot::braidgen::{
    closure_permutation, commutation_normal_form, flip_word, mirror_word, reverse_word, writhe, BraidWord,
};
use minknot::catalog::Catalog;
use minknot::invariants::{alexander, jones, rolfsen_coeffs, LaurentPoly, RolfsenCoeffs};
use minknot::params::{critical_phases, frac, parse_rational, rational_str};
use minknot::Rational;
use proptest::prelude::*;

fn braid(max_strands: u32, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        let letter = (1..n as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
        prop::collection::vec(letter, 0..=max_len).prop_map(move |v| BraidWord::from_signed(n, &v).unwrap())
    })
}

fn knot(max_strands: u32, max_len: usize) -> impl Strategy<Value = BraidWord> {
    braid(max_strands, max_len).prop_filter("closure is a knot", |w| closure_permutation(w).is_knot())
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    (-4i64..4, prop::collection::vec(-5i64..=5, 0..6)).prop_map(|(lo, c)| LaurentPoly::from_coeffs(lo, &c))
}

fn stabilize(w: &BraidWord, positive: bool) -> BraidWord {
    let n = w.strands as i32;
    let mut v = w.to_signed();
    v.push(if positive { n } else { -n });
    BraidWord::from_signed(w.strands + 1, &v).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn word_maps_are_involutions(w in braid(7, 20)) {
        prop_assert_eq!(mirror_word(&mirror_word(&w)), w.clone());
        prop_assert_eq!(flip_word(&flip_word(&w)), w.clone());
        prop_assert_eq!(reverse_word(&reverse_word(&w)), w.clone());
        prop_assert_eq!(mirror_word(&flip_word(&w)), flip_word(&mirror_word(&w)));
    }

    #[test]
    fn writhe_laws(w in braid(7, 20), k in 0usize..20) {
        prop_assert_eq!(writhe(&mirror_word(&w)), -writhe(&w));
        prop_assert_eq!(writhe(&flip_word(&w)), writhe(&w));
        prop_assert_eq!(writhe(&reverse_word(&w)), writhe(&w));
        prop_assert_eq!(writhe(&w.rotate(k)), writhe(&w));
    }

    #[test]
    fn closure_ignores_signs(w in braid(7, 20)) {
        let c = closure_permutation(&w);
        prop_assert_eq!(closure_permutation(&mirror_word(&w)), c.clone());
        prop_assert_eq!(closure_permutation(&commutation_normal_form(&w)), c);
    }

    #[test]
    fn normal_form_is_idempotent(w in braid(7, 20)) {
        let nf = commutation_normal_form(&w);
        prop_assert_eq!(commutation_normal_form(&nf), nf.clone());
        prop_assert_eq!(nf.len(), w.len());
        prop_assert_eq!(writhe(&nf), writhe(&w));
    }

    #[test]
    fn alexander_is_a_knot_invariant(w in knot(5, 12), k in 0usize..12, positive in any::<bool>()) {
        let a = alexander(&w).unwrap();
        prop_assert!(a.is_symmetric());
        prop_assert_eq!(a.eval(1), 1.into());
        prop_assert_eq!(alexander(&w.rotate(k)).unwrap(), a.clone());
        prop_assert_eq!(alexander(&stabilize(&w, positive)).unwrap(), a.clone());
        prop_assert_eq!(alexander(&mirror_word(&w)).unwrap(), a.clone());
        prop_assert_eq!(alexander(&reverse_word(&w)).unwrap(), a.clone());
        prop_assert_eq!(alexander(&flip_word(&w)).unwrap(), a.clone());
        prop_assert_eq!(alexander(&commutation_normal_form(&w)).unwrap(), a);
    }

    #[test]
    fn jones_mirror_and_markov(w in knot(4, 10), k in 0usize..10, positive in any::<bool>()) {
        let v = jones(&w).unwrap();
        prop_assert_eq!(v.eval(1), 1.into());
        prop_assert_eq!(jones(&mirror_word(&w)).unwrap(), v.invert_var());
        prop_assert_eq!(jones(&w.rotate(k)).unwrap(), v.clone());
        prop_assert_eq!(jones(&stabilize(&w, positive)).unwrap(), v.clone());
        prop_assert_eq!(jones(&reverse_word(&w)).unwrap(), v);
    }

    #[test]
    fn laurent_ring(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(a.invert_var().invert_var(), a.clone());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        }
        prop_assert_eq!((&a * &b).eval(-1), a.eval(-1) * b.eval(-1));
    }

    #[test]
    fn laurent_json_round_trip(a in laurent()) {
        let back: LaurentPoly = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn rolfsen_round_trip(c in prop::collection::vec(-9i64..=9, 1..6)) {
        prop_assume!(c.len() == 1 || *c.last().unwrap() != 0);
        let r = RolfsenCoeffs(c);
        prop_assert_eq!(rolfsen_coeffs(&r.to_poly()).unwrap(), r);
    }

    #[test]
    fn rational_text_round_trip(a in -500i64..500, b in 1i64..500) {
        let r = Rational::new(a, b);
        prop_assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
        #[derive(serde::Serialize, serde::Deserialize)]
        struct Wrap(#[serde(with = "rational_str")] Rational);
        let back: Wrap = serde_json::from_str(&serde_json::to_string(&Wrap(r)).unwrap()).unwrap();
        prop_assert_eq!(back.0, r);
    }

    #[test]
    fn critical_set_symmetries(n in 2u32..=6, p in 3u32..=13, q in 3u32..=13) {
        prop_assume!(p > n && q > n && num_integer::gcd(n, p) == 1 && num_integer::gcd(n, q) == 1);
        let set = critical_phases(n, p, q).unwrap();
        prop_assert!(!set.is_empty());
        for shift in [Rational::new(1, 2), Rational::new(p as i64, 2 * q as i64)] {
            for phi in &set.phases {
                prop_assert!(set.contains(frac(*phi + shift)));
            }
        }
    }

    #[test]
    fn identification_of_sums_is_order_free(i in 1usize..20, j in 1usize..20) {
        let cat = Catalog::bundled();
        let (a, b) = (&cat.entries[i % cat.entries.len()], &cat.entries[j % cat.entries.len()]);
        prop_assume!(a.name != "unknot" && b.name != "unknot");
        let ab = &a.alexander_poly() * &b.alexander_poly();
        let ba = &b.alexander_poly() * &a.alexander_poly();
        let (x, y) = (cat.identify(&ab, None, 0), cat.identify(&ba, None, 0));
        prop_assert_eq!(&x, &y);
        let mut want = vec![a.name.as_str(), b.name.as_str()];
        want.sort();
        let found = x.candidates.iter().any(|c| {
            let mut got: Vec<&str> = c.summands.iter().map(|s| s.name.as_str()).collect();
            got.sort();
            got == want
        });
        prop_assert!(found);
    }
}

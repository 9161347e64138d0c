use minknot::braidgen::{braid_word, writhe};
use minknot::invariants::{alexander, jones, rolfsen_coeffs, torus_alexander, LaurentPoly, RolfsenCoeffs};
use minknot::params::validate_canonical;

fn delta(n: u32, p: u32, q: u32) -> LaurentPoly {
    alexander(&braid_word(&validate_canonical(n, p, q).unwrap()).unwrap()).unwrap()
}

fn rolfsen(n: u32, p: u32, q: u32) -> Vec<i64> {
    rolfsen_coeffs(&delta(n, p, q)).unwrap().0
}

fn r(v: &[i64]) -> LaurentPoly {
    RolfsenCoeffs(v.to_vec()).normalized().to_poly()
}

#[test]
fn figure_eight_and_friends() {
    assert_eq!(delta(3, 10, 4), r(&[-3, 1]));
    assert_eq!(delta(3, 5, 4), r(&[-1, 1]).pow(2));
    assert!(delta(3, 7, 4).is_one());
    assert_eq!(delta(3, 8, 4), &r(&[-3, 1]) * &r(&[-1, 1]).pow(2));
}

#[test]
fn four_strands() {
    assert_eq!(delta(4, 13, 5), r(&[5, -2]));
    assert_eq!(delta(4, 7, 5), r(&[17, -12, 4]));
    assert_eq!(delta(4, 11, 5), r(&[37, -28, 12, -2]));
}

#[test]
fn seven() {
    assert_eq!(delta(3, 8, 7), r(&[1, -1, 1]).pow(2));
    assert_eq!(delta(3, 14, 7), r(&[7, -6, 4, -1]).pow(2));
    assert_eq!(delta(3, 19, 7), r(&[7, -5, 3, -1]));
    assert_eq!(delta(3, 7, 5), r(&[7, -5, 3, -1]));
    assert_eq!(rolfsen(3, 11, 7), [33, -29, 21, -12, 5, -1]);
    assert_eq!(delta(3, 10, 5), r(&[29, -24, 15, -6, 1]));
    assert_eq!(delta(5, 22, 6), r(&[9, -5, 1]));
}

#[test]
fn torus() {
    assert_eq!(delta(3, 4, 4), torus_alexander(3, 4).unwrap());
    assert_eq!(delta(3, 5, 5), torus_alexander(3, 5).unwrap());
    assert_eq!(delta(4, 5, 5), torus_alexander(4, 5).unwrap());
}

#[test]
fn writhes() {
    let e = |n, p, q| writhe(&braid_word(&validate_canonical(n, p, q).unwrap()).unwrap());
    assert_eq!(e(3, 7, 5), 2);
    assert_eq!(e(3, 19, 7), -2);
}

#[test]
fn jones_square_knot() {
    let v = jones(&braid_word(&validate_canonical(3, 5, 4).unwrap()).unwrap()).unwrap();
    let trefoil = LaurentPoly::from_terms([(1, 1), (3, 1), (4, -1)]);
    assert_eq!(v, &trefoil * &trefoil.invert_var());
}

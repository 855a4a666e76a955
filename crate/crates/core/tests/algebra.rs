use std::collections::BTreeMap;

use proptest::prelude::*;
use quasimap::algebra::scalar::{rat, rat_int};
use quasimap::algebra::{divide_exact, harmonic, substitute_h_zero, HLinearForm, Laurent, MPoly};
use quasimap::{Error, HPoly, Rational, ZLaurent};

fn h(i: usize) -> HPoly {
    MPoly::var(2, i)
}

fn c(v: Rational) -> HPoly {
    MPoly::constant(2, v)
}

fn form(v: &[i64]) -> HLinearForm {
    HLinearForm::new(v.to_vec()).unwrap()
}

#[test]
fn harmonic_values() {
    assert_eq!(harmonic(0), rat_int(0));
    assert_eq!(harmonic(1), rat_int(1));
    assert_eq!(harmonic(3), rat(11, 6));
    for l in 1..50u64 {
        assert_eq!(harmonic(l) - harmonic(l - 1), rat(1, l as i64));
    }
}

#[test]
fn divide_exact_examples() {
    let d = form(&[1, -1]);
    let diff = &h(0) - &h(1);
    let one = Laurent::monomial(2, 0, diff.clone());
    assert_eq!(divide_exact(&one, &d).unwrap(), Laurent::one(2));

    let sq = &(&h(0) * &h(0)) - &(&h(1) * &h(1));
    let q = divide_exact(&Laurent::monomial(2, 0, sq), &d).unwrap();
    assert_eq!(q, Laurent::monomial(2, 0, &h(0) + &h(1)));

    // z (H2 − H1) 3/2 divided by (H1 − H2)
    let num = Laurent::monomial(2, 1, (&h(1) - &h(0)).scale(&rat(3, 2)));
    let q = divide_exact(&num, &d).unwrap();
    assert_eq!(q, Laurent::monomial(2, 1, c(rat(-3, 2))));
}

#[test]
fn divide_exact_rejects_remainders() {
    let num = Laurent::monomial(2, 0, &h(0) + &c(rat_int(1)));
    assert!(matches!(divide_exact(&num, &form(&[1, -1])), Err(Error::NotDivisible { .. })));
}

#[test]
fn substitute_h_zero_examples() {
    let v = Laurent::from_coeffs(2, [(0, c(rat_int(1))), (-1, h(0))]);
    assert_eq!(substitute_h_zero(&v), BTreeMap::from([(0, rat_int(1))]));
    let v: ZLaurent = Laurent::monomial(2, -2, c(rat(3, 2)));
    assert_eq!(substitute_h_zero(&v), BTreeMap::from([(-2, rat(3, 2))]));
    // (H1 − H2 + z) z^{-1}
    let v = &Laurent::affine(&[1, -1], rat_int(1)) * &Laurent::monomial(2, -1, c(rat_int(1)));
    assert_eq!(substitute_h_zero(&v), BTreeMap::from([(0, rat_int(1))]));
}

#[test]
fn window_is_enforced() {
    let inv = Laurent::inverse_affine(&[1, 0], rat_int(2), 3, None);
    assert_eq!(inv.window(), (Some(-3), -1));
    assert!(inv.coeff(-3).is_ok());
    assert!(matches!(inv.coeff(-4), Err(Error::OutsideWindow { exponent: -4, lo: -3 })));
    // (c + 2z)·(c + 2z)^{-1} = 1 on the valid part of the window.
    let prod = &Laurent::affine(&[1, 0], rat_int(2)) * &inv;
    assert_eq!(prod.lo(), Some(-2));
    assert_eq!(prod.coeff(0).unwrap(), c(rat_int(1)));
    assert!(prod.coeff(-1).unwrap().is_zero());
    assert!(prod.coeff(-2).unwrap().is_zero());
    assert!(prod.coeff(-3).is_err());
}

#[test]
fn h_cap_makes_inverse_exact() {
    let inv = Laurent::inverse_affine(&[1, 0], rat_int(1), 10, Some(2));
    assert_eq!(inv.lo(), None);
    let prod = &Laurent::affine(&[1, 0], rat_int(1)).with_cap(2) * &inv;
    assert_eq!(prod, Laurent::one(2).with_cap(2));
    let once = Laurent::monomial(2, 0, h(1)).with_cap(2).divide_exact(&form(&[0, 1])).unwrap();
    assert_eq!(once, Laurent::one(2).with_cap(1));
    assert!(matches!(Laurent::<Rational>::one(2).with_cap(0).divide_exact(&form(&[1, 0])), Err(Error::HCapExhausted)));
}

#[test]
fn polynomial_display_is_stable() {
    let p = &(&h(0) * &h(0)) - &(&h(0) * &h(1)).scale(&rat(3, 2));
    let p = &p + &c(rat_int(1));
    assert_eq!(p.to_string(), "H1^2 - 3/2*H1*H2 + 1");
    assert_eq!(MPoly::<Rational>::zero(2).to_string(), "0");
}

fn small_rat() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn small_poly() -> impl Strategy<Value = HPoly> {
    prop::collection::vec(((0u32..3, 0u32..3), small_rat()), 0..5)
        .prop_map(|terms| MPoly::from_terms(2, terms.into_iter().map(|((a, b), c)| (vec![a, b], c))))
}

fn small_laurent() -> impl Strategy<Value = ZLaurent> {
    prop::collection::vec((-2i64..=2, small_poly()), 0..4).prop_map(|t| Laurent::from_coeffs(2, t))
}

fn nonzero_form() -> impl Strategy<Value = HLinearForm> {
    (-3i64..=3, -3i64..=3).prop_filter("nonzero", |(a, b)| *a != 0 || *b != 0).prop_map(|(a, b)| form(&[a, b]))
}

proptest! {
    #[test]
    fn poly_ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn laurent_ring_axioms(a in small_laurent(), b in small_laurent(), c in small_laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn divide_exact_inverts_multiplication(p in small_laurent(), d in nonzero_form()) {
        let prod = p.mul_poly(&d.to_poly());
        prop_assert_eq!(divide_exact(&prod, &d).unwrap(), p);
    }
}

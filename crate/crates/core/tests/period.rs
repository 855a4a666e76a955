use std::collections::BTreeMap;

use quasimap::algebra::scalar::{rat, rat_int};
use quasimap::fixtures;
use quasimap::iseries::i_series;
use quasimap::period::{
    a_beta, classical_period, del_pezzo_mirror, del_pezzo_truncation, harmonic_correction, quantum_period,
    quantum_period_from_series, regularize, ABeta, LaurentPoly2, PeriodSeries, XPoly,
};
use quasimap::Rational;

fn xp(c: &[i64]) -> XPoly {
    XPoly::from_coeffs(c.iter().map(|&x| rat_int(x)).collect())
}

fn expected() -> Vec<XPoly> {
    vec![
        xp(&[1]),
        XPoly::zero(),
        xp(&[70, 14]),
        xp(&[966, 210, 6]),
        xp(&[22470, 6888, 546]),
        xp(&[487340, 176700, 18900, 420]),
        xp(&[11243050, 4827900, 689850, 32900, 90]),
    ]
}

#[test]
fn a_beta_values() {
    assert_eq!(a_beta([0, 0, 0]), ABeta { coeff: rat_int(1), q1: 0, q2: 0, z: 0 });
    assert_eq!(a_beta([0, 0, 1]), ABeta { coeff: rat_int(1), q1: 0, q2: 1, z: -1 });
    assert_eq!(a_beta([1, 0, 0]), ABeta { coeff: rat_int(-4), q1: 1, q2: 0, z: -1 });
    assert_eq!(a_beta([0, 1, 0]).coeff, rat_int(-4));
}

#[test]
fn degree_one_summands_give_eight_q1() {
    let total: Rational = [[1, 0, 0], [0, 1, 0]].iter().map(|&b| a_beta(b).coeff * harmonic_correction(b)).sum();
    assert_eq!(total, rat_int(8));
    assert_eq!(harmonic_correction([0, 0, 3]), rat_int(1));
}

#[test]
fn regularize_multiplies_by_factorial() {
    let s = PeriodSeries { coeffs: BTreeMap::from([(0, xp(&[1])), (2, xp(&[0, 1]))]), order: 3 };
    let r = regularize(&s);
    assert_eq!(r.coeff(0), xp(&[1]));
    assert_eq!(r.coeff(2), xp(&[0, 2]));
    assert!(r.coeff(3).is_zero());
}

#[test]
fn central_binomials() {
    let mut f = LaurentPoly2::default();
    f.add_term((0, 1), xp(&[1]));
    f.add_term((0, -1), xp(&[1]));
    let s = classical_period(&f, 4);
    let got: Vec<XPoly> = (0..=4).map(|n| s.coeff(n)).collect();
    assert_eq!(got, vec![xp(&[1]), XPoly::zero(), xp(&[2]), XPoly::zero(), xp(&[6])]);
}

#[test]
fn classical_period_ignores_insertion_order() {
    let f = del_pezzo_mirror();
    let mut g = LaurentPoly2::default();
    for (e, c) in f.terms.iter().rev() {
        g.add_term(*e, c.clone());
    }
    assert_eq!(classical_period(&f, 5), classical_period(&g, 5));
}

#[test]
fn closed_form_through_t4() {
    let r = regularize(&quantum_period(4));
    for (n, want) in expected().iter().take(5).enumerate() {
        assert_eq!(&r.coeff(n as u64), want, "t^{n}");
    }
    assert!(quantum_period(4).coeff(1).is_zero());
}

#[test]
fn mirror_agrees_through_t6() {
    let r = regularize(&quantum_period(6));
    let c = classical_period(&del_pezzo_mirror(), 6);
    for (n, want) in expected().iter().enumerate() {
        assert_eq!(&r.coeff(n as u64), want, "t^{n}");
        assert_eq!(&c.coeff(n as u64), want, "t^{n}");
    }
}

#[test]
fn x_degree_grows_like_two_thirds_n() {
    let r = regularize(&quantum_period(6));
    for n in 0..=6u64 {
        if let Some(d) = r.coeff(n).degree() {
            assert!(d as u64 <= 2 * n / 3, "t^{n} has degree {d}");
        }
    }
    // t^3 already exceeds n/2.
    assert_eq!(r.coeff(3).degree(), Some(2));
}

#[test]
fn x_equals_three_slice() {
    let r = regularize(&quantum_period(4));
    let at = r.at(&rat_int(3));
    assert_eq!(at[&2], rat_int(112));
    assert_eq!(at[&4], rat_int(546 * 9 + 6888 * 3 + 22470));
    assert_eq!(xp(&[1, 2]).eval(&rat(1, 2)), rat_int(2));
}

#[test]
fn pipeline_reproduces_closed_form() {
    let p = fixtures::load("delpezzo").unwrap();
    let s = i_series(&p, &del_pezzo_truncation(4)).unwrap();
    let from_series = quantum_period_from_series(&s, 4).unwrap();
    assert_eq!(regularize(&from_series), regularize(&quantum_period(4)));
}

#[test]
fn display_format() {
    assert_eq!(xp(&[22470, 6888, 546]).to_string(), "546x^2 + 6888x + 22470");
    assert_eq!(XPoly::zero().to_string(), "0");
}

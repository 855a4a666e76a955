use std::collections::BTreeMap;

use quasimap::algebra::scalar::{rat, rat_int};
use quasimap::algebra::Laurent;
use quasimap::effective::{enumerate, SectorLabel, TruncationSpec};
use quasimap::fixtures;
use quasimap::iseries::{
    c_degree, c_factor, check_homogeneity, contribution, i_series, mirror_map, orbit_sum, trivial_extension_check,
    Affine, Contribution,
};
use quasimap::presentation::Presentation;
use quasimap::{Error, Rational};

fn v(xs: &[(i64, i64)]) -> Vec<Rational> {
    xs.iter().map(|&(n, d)| rat(n, d)).collect()
}

fn ks(fs: &[Affine]) -> Vec<Rational> {
    fs.iter().map(|a| a.k.clone()).collect()
}

fn h0(l: &Laurent<Rational>) -> BTreeMap<i64, Rational> {
    l.substitute_h_zero()
}

#[test]
fn c_factor_shapes() {
    assert!(c_factor(&[rat_int(0)], &[1], false).is_one());
    let f = c_factor(&[rat_int(2)], &[1], false);
    assert!(f.numer.is_empty());
    assert_eq!(ks(&f.denom), vec![rat_int(2), rat_int(1)]);
    let f = c_factor(&[rat(-3, 2)], &[1], false);
    assert_eq!(ks(&f.numer), vec![rat(-1, 2)]);
    assert!(f.denom.is_empty());
    let f = c_factor(&[rat_int(-2)], &[1], false);
    assert_eq!(ks(&f.numer), vec![rat_int(-1), rat_int(0)]);
    let f = c_factor(&[rat_int(-2)], &[1], true);
    assert_eq!(ks(&f.numer), vec![rat_int(-1)]);
    let f = c_factor(&[rat(5, 3)], &[1], true);
    assert_eq!(ks(&f.denom), vec![rat(5, 3), rat(2, 3)]);
}

#[test]
fn c_factor_degrees() {
    for (n, d) in [(0, 1), (2, 1), (-3, 2), (-2, 1), (5, 3), (-7, 4)] {
        let x = rat(n, d);
        let f = c_factor(std::slice::from_ref(&x), &[1], false);
        let got = f.numer.len() as i64 - f.denom.len() as i64;
        assert_eq!(c_degree(&x), rat_int(got), "{x}");
    }
}

#[test]
fn c_factor_expansion_at_h_zero() {
    // 1/((H+z)(H+2z)) at H = 0 is z^{-2}/2.
    let t = TruncationSpec::new(1, rat_int(0), 0).z_min(-4);
    let l = c_factor(&[rat_int(2)], &[1], false).to_laurent(1, &t, 2);
    assert_eq!(h0(&l), BTreeMap::from([(-2, rat(1, 2))]));
    // H^{2} term of 1/(H+z): z^{-3}.
    let inv = c_factor(&[rat_int(1)], &[1], false).to_laurent(1, &t, 2);
    assert_eq!(inv.coeff(-3).unwrap().coeff(&[2]), rat_int(1));
    assert_eq!(inv.coeff(-2).unwrap().coeff(&[1]), rat_int(-1));
}

#[test]
fn zero_class_contributes_one() {
    for name in fixtures::names() {
        let p = fixtures::load(name).unwrap();
        let t = TruncationSpec::new(p.rank, rat_int(0), 0).h_degree_max(2);
        let c = contribution(&p, &vec![rat_int(0); p.rank], &t).unwrap();
        assert!(c.i_nonnegative);
        assert!(c.f0.is_none());
        assert_eq!(h0(&c.value), BTreeMap::from([(0, rat_int(1))]), "{name}");
        assert_eq!(c.value.h_degree(), Some(0));
    }
}

#[test]
fn del_pezzo_non_nonnegative_class_is_flagged() {
    let p = fixtures::load("delpezzo").unwrap();
    let t = TruncationSpec::new(3, rat_int(3), 3);
    let c = contribution(&p, &v(&[(-1, 1), (-1, 1), (3, 1)]), &t).unwrap();
    assert!(!c.i_nonnegative);
    let f0 = c.f0.expect("marker");
    // Six X-weights and four E-weights pair to negative integers.
    assert_eq!(f0.codim, 2);
    assert_eq!(f0.lci_equations, 0);
}

fn orbit_contribs(p: &Presentation, b: &[Rational], t: &TruncationSpec) -> Vec<Contribution> {
    p.orbit(b).unwrap().iter().map(|m| contribution(p, m, t).unwrap()).collect()
}

#[test]
fn bs3_orbit_sums() {
    let p = fixtures::load("bs3").unwrap();
    let t = TruncationSpec::new(2, rat_int(2), 3).z_min(-2);
    let cases = [
        (v(&[(1, 2), (0, 1)]), "0,1/2", BTreeMap::from([(-1, rat_int(1))])),
        (v(&[(1, 3), (2, 3)]), "1/3,2/3", BTreeMap::from([(-2, rat(3, 2))])),
        (v(&[(1, 1), (0, 1)]), "0,0", BTreeMap::from([(-2, rat(3, 2))])),
    ];
    for (b, label, want) in cases {
        let cs = orbit_contribs(&p, &b, &t);
        assert_eq!(cs.len(), 2);
        let (sector, value) = orbit_sum(&cs, &p, &t).unwrap();
        assert_eq!(sector, SectorLabel::parse(label).unwrap());
        assert_eq!(h0(&value), want, "{label}");
    }
}

#[test]
fn orbit_sums_are_divisible_and_order_free() {
    let cases: &[(&str, i64, i64, i64, u32)] = &[
        ("bs3", 4, -3, 3, 2),
        ("wgr", 9, -1, 3, 2),
        ("wgr_ext", 3, -1, 2, 1),
        ("bundle", 6, -1, 3, 2),
        ("wflag", 6, -1, 2, 1),
        ("wflag_ext", 2, -1, 1, 1),
        ("delpezzo", 2, -2, 2, 1),
    ];
    for &(name, dmax, lo, hi, h) in cases {
        let p = fixtures::load(name).unwrap();
        let t = TruncationSpec::with_box(p.rank, rat_int(dmax), lo, hi).z_min(-3).h_degree_max(h);
        for b in enumerate(&p, &t).unwrap() {
            let cs = orbit_contribs(&p, &b, &t);
            let fwd = orbit_sum(&cs, &p, &t).unwrap_or_else(|e| panic!("{name} {b:?}: {e}"));
            let mut rev = cs.clone();
            rev.reverse();
            assert_eq!(fwd, orbit_sum(&rev, &p, &t).unwrap(), "{name}");
        }
    }
}

#[test]
fn homogeneity_holds_on_every_fixture() {
    let cases: &[(&str, i64, i64, i64)] = &[
        ("bs3", 4, -3, 3),
        ("p1", 4, -4, 4),
        ("wgr", 9, -1, 3),
        ("wgr_ext", 3, -1, 2),
        ("bundle", 6, -1, 3),
        ("bundle_ext", 3, -1, 2),
        ("wflag", 6, -1, 2),
        ("wflag_ext", 2, -1, 1),
        ("delpezzo", 3, -2, 2),
    ];
    for &(name, dmax, lo, hi) in cases {
        let p = fixtures::load(name).unwrap();
        let t = TruncationSpec::with_box(p.rank, rat_int(dmax), lo, hi).z_min(-3).h_degree_max(2);
        let s = i_series(&p, &t).unwrap();
        assert!(check_homogeneity(&s, &p), "{name}");
    }
}

#[test]
fn corrupted_degree_breaks_homogeneity() {
    let p = fixtures::load("bs3").unwrap();
    let t = TruncationSpec::new(2, rat_int(2), 3).z_min(-2);
    let mut s = i_series(&p, &t).unwrap();
    let key = s.terms.keys().last().unwrap().clone();
    let term = s.terms.get_mut(&key).unwrap();
    term.degree += rat(1, 2);
    assert!(!check_homogeneity(&s, &p));
}

#[test]
fn leading_term_is_one() {
    for name in ["bs3", "p1", "wgr", "bundle", "delpezzo"] {
        let p = fixtures::load(name).unwrap();
        let t = TruncationSpec::new(p.rank, rat_int(2), 2).h_degree_max(2);
        let s = i_series(&p, &t).unwrap();
        let rank = p.restriction.len();
        let one = s.get(&vec![rat_int(0); rank], &SectorLabel::untwisted(p.rank)).unwrap();
        assert_eq!(h0(&one.value), BTreeMap::from([(0, rat_int(1))]));
        assert_eq!(one.value.h_degree(), Some(0));
    }
}

#[test]
fn empty_enumeration_leaves_only_one() {
    let p = fixtures::load("p1").unwrap();
    let t = TruncationSpec::new(1, rat_int(-1), 2);
    let s = i_series(&p, &t).unwrap();
    assert_eq!(s.terms.len(), 1);
    assert!(mirror_map(&s).unwrap().is_zero());
}

#[test]
fn p1_coefficients() {
    // I = Σ q^d / ∏_{k≤d} (H+kz)^2; at H = 0 this is z^{-2d}/(d!)^2.
    let p = fixtures::load("p1").unwrap();
    let t = TruncationSpec::new(1, rat_int(6), 4).z_min(-6);
    let s = i_series(&p, &t).unwrap();
    for (d, c) in [(1, rat_int(1)), (2, rat(1, 4)), (3, rat(1, 36))] {
        let term = s.get(&[rat_int(d)], &SectorLabel::untwisted(1)).unwrap();
        assert_eq!(h0(&term.value), BTreeMap::from([(-2 * d, c)]));
    }
}

#[test]
fn mirror_map_needs_the_z_minus_one_coefficient() {
    let p = fixtures::load("bs3").unwrap();
    let t = TruncationSpec::new(2, rat_int(2), 3).z_min(0);
    let s = i_series(&p, &t).unwrap();
    assert!(matches!(mirror_map(&s), Err(Error::WindowTooNarrow { .. })));
}

#[test]
fn trivial_extensions_reproduce_the_base() {
    for name in ["bs3", "p1"] {
        let p = fixtures::load(name).unwrap();
        let t = TruncationSpec::new(p.rank, rat_int(2), 3).z_min(-2);
        assert!(trivial_extension_check(&p, &t, 3).unwrap(), "{name}");
    }
}

use quasimap::algebra::scalar::{rat, rat_int};
use quasimap::config::{parse_config, parse_unchecked, to_toml};
use quasimap::fixtures;
use quasimap::presentation::{
    extend_by_sector, extend_e_weights, extend_presentation, extended_anticones_check, GEffective, Presentation,
};
use quasimap::Error;

fn indices(p: &Presentation) -> Vec<Vec<usize>> {
    p.minimal_g_effective_anticones().unwrap().into_iter().map(|a| a.indices.iter().map(|i| i + 1).collect()).collect()
}

/// Compare everything but labels.
fn same_data(a: &Presentation, b: &Presentation) {
    assert_eq!(a.rank, b.rank);
    assert_eq!(a.weights, b.weights);
    assert_eq!(a.theta, b.theta);
    assert_eq!(a.roots, b.roots);
    assert_eq!(a.e_weights, b.e_weights);
    assert_eq!(a.weyl_generators, b.weyl_generators);
    assert_eq!(a.g_effective, b.g_effective);
    assert_eq!(a.restriction, b.restriction);
    assert_eq!(a.extended, b.extended);
}

#[test]
fn every_fixture_validates() {
    for name in fixtures::names() {
        let p = parse_unchecked(fixtures::text(name).unwrap()).unwrap();
        assert!(p.validate().is_empty(), "{name}: {:?}", p.validate());
    }
}

#[test]
fn bs3_anticones() {
    let p = fixtures::load("bs3").unwrap();
    assert_eq!(p.is_anticone(&[1, 2]), Some(vec![rat_int(1), rat_int(1)]));
    assert_eq!(p.is_anticone(&[0, 1]), None);
    assert!(p.is_anticone(&[0, 1, 2, 3]).is_some());
    assert_eq!(indices(&p), vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]);
}

#[test]
fn wgr_anticones_are_i_ne_j() {
    let p = fixtures::load("wgr").unwrap();
    let got = indices(&p);
    assert_eq!(got.len(), 20);
    for a in got {
        assert_ne!(a[0] + 5, a[1]);
    }
}

#[test]
fn p1_minimal_anticones() {
    let p = fixtures::load("p1").unwrap();
    assert_eq!(indices(&p), vec![vec![1], vec![2]]);
}

#[test]
fn validate_negative_cases() {
    let mut p = fixtures::load("bs3").unwrap();
    p.weyl_generators = vec![vec![vec![1, 0], vec![1, 1]]];
    assert!(p.validate().iter().any(|v| v.code == "weyl-action"));

    let mut p = fixtures::load("p1").unwrap();
    p.theta = vec![0];
    assert!(p.validate().iter().any(|v| v.code == "no-anticone"));

    let mut p = fixtures::load("bs3").unwrap();
    p.roots.pop();
    assert!(p.validate().iter().any(|v| v.code == "roots-symmetric"));

    let mut p = fixtures::load("bs3").unwrap();
    p.g_effective = GEffective::Explicit(vec![vec![0, 1]]);
    assert!(p.validate().iter().any(|v| v.code == "g-effective-not-anticone"));
    assert!(matches!(p.minimal_g_effective_anticones(), Err(Error::NotAnAnticone(_))));
}

#[test]
fn wgr_sector_extension_matches_fixture() {
    let p = fixtures::load("wgr").unwrap();
    let ext = extend_by_sector(&p, &[rat(-1, 3), rat(-1, 3)], Some(3)).unwrap();
    same_data(&ext, &fixtures::load("wgr_ext").unwrap());
    assert_eq!(ext.weights.iter().map(|w| w[2]).collect::<Vec<_>>(), vec![0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1]);
    assert!(extended_anticones_check(&ext, &p));
}

#[test]
fn default_n_is_floor_plus_one() {
    let p = fixtures::load("wgr").unwrap();
    let ext = extend_by_sector(&p, &[rat(-1, 3), rat(-1, 3)], None).unwrap();
    assert_eq!(ext.theta, vec![1, 1, 1]);
    let p = fixtures::load("wflag").unwrap();
    let ext = extend_by_sector(&p, &[rat_int(0), rat(-1, 3), rat(-1, 3)], None).unwrap();
    assert_eq!(ext.theta, vec![1, 2, 3, 2]);
}

#[test]
fn wflag_and_bundle_extensions_match_fixtures() {
    let p = fixtures::load("wflag").unwrap();
    let ext = extend_by_sector(&p, &[rat_int(0), rat(-1, 3), rat(-1, 3)], Some(6)).unwrap();
    same_data(&ext, &fixtures::load("wflag_ext").unwrap());
    assert!(extended_anticones_check(&ext, &p));

    let p = fixtures::load("bundle").unwrap();
    let ext = extend_by_sector(&p, &[rat(-1, 3), rat(-1, 3)], Some(3)).unwrap();
    same_data(&ext, &fixtures::load("bundle_ext").unwrap());
    assert!(extended_anticones_check(&ext, &p));
}

#[test]
fn trivial_extensions() {
    for base in ["bs3", "p1"] {
        let p = fixtures::load(base).unwrap();
        let zero = vec![rat_int(0); p.rank];
        let ext = extend_by_sector(&p, &zero, None).unwrap();
        same_data(&ext, &fixtures::load(&format!("{base}_trivial")).unwrap());
        let direct = extend_presentation(&p, &vec![0; p.n()], &vec![0; p.rank], 1, 1).unwrap();
        assert_eq!(direct, ext);
        assert!(extended_anticones_check(&ext, &p));
    }
}

#[test]
fn extension_preconditions() {
    let p = fixtures::load("p1").unwrap();
    assert!(matches!(extend_presentation(&p, &[0, 0], &[1], 1, 1), Err(Error::NTooSmall { .. })));
    assert!(extend_presentation(&p, &[0, 0], &[1], 1, 2).is_ok());
    assert!(matches!(extend_presentation(&p, &[1, 0], &[0], 1, 1), Err(Error::LimitFails { index: 1, .. })));
    let p = fixtures::load("bs3").unwrap();
    assert!(matches!(extend_by_sector(&p, &[rat(1, 2), rat_int(0)], None), Err(Error::NotWeylInvariant(_))));
}

#[test]
fn corrupted_extension_is_detected() {
    let p = fixtures::load("wgr").unwrap();
    let mut ext = extend_by_sector(&p, &[rat(-1, 3), rat(-1, 3)], Some(3)).unwrap();
    ext.theta[2] = -3;
    assert!(!extended_anticones_check(&ext, &p));
}

#[test]
fn e_weight_extension() {
    let wgr = fixtures::load("wgr").unwrap();
    let mut base = wgr.clone();
    base.e_weights = vec![vec![2, 2]; 4];
    let ext = extend_by_sector(&base, &[rat(-1, 3), rat(-1, 3)], Some(3)).unwrap();
    assert_eq!(ext.e_weights, vec![vec![2, 2, 0]; 4]);
    let dp = extend_e_weights(&ext, &[1, 1, 1, 1]).unwrap();
    assert_eq!(dp.e_weights, vec![vec![2, 2, 1]; 4]);
    assert_eq!(dp.e_weights, fixtures::load("delpezzo").unwrap().e_weights);
    assert!(matches!(extend_e_weights(&base, &[1, 1, 1, 1]), Err(Error::NotExtended)));

    // Weighted projective space P(1,1,1,3) with E of weights (1,1,3).
    let mut p = Presentation::torus(vec![vec![1], vec![1], vec![1], vec![3]], vec![1]);
    p.e_weights = vec![vec![1], vec![1], vec![3]];
    let ext = extend_by_sector(&p, &[rat(-1, 3)], Some(2)).unwrap();
    assert_eq!(ext.weights, vec![vec![1, 0], vec![1, 0], vec![1, 0], vec![3, 1], vec![0, 1]]);
    let mu = extend_e_weights(&ext, &[0, 0, 1]).unwrap();
    assert_eq!(mu.e_weights, vec![vec![1, 0], vec![1, 0], vec![3, 1]]);
}

#[test]
fn extended_class_lands_in_half_open_interval() {
    let cases: Vec<(&str, Vec<_>)> = vec![
        ("wgr", vec![rat(-1, 3), rat(-1, 3)]),
        ("wflag", vec![rat_int(0), rat(-1, 3), rat(-1, 3)]),
        ("bs3", vec![rat_int(0), rat_int(0)]),
    ];
    for (name, beta) in cases {
        let p = fixtures::load(name).unwrap();
        let ext = extend_by_sector(&p, &beta, None).unwrap();
        let mut lifted = beta.clone();
        lifted.push(rat_int(1));
        let vals = ext.pairings(&lifted);
        for v in &vals[..p.n()] {
            assert!(*v > rat_int(-1) && *v <= rat_int(0), "{name}: {v}");
        }
        assert_eq!(vals[p.n()], rat_int(1));
        assert!(ext.validate().is_empty());
    }
}

#[test]
fn config_errors_name_the_problem() {
    let text = fixtures::text("bs3").unwrap().replace("theta = [1, 1]\n", "");
    match parse_config(&text) {
        Err(Error::Parse(msg)) => assert!(msg.contains("theta"), "{msg}"),
        other => panic!("{other:?}"),
    }
    let text = fixtures::text("bs3").unwrap().replace("[2, 1, 0, -1]", "[2, 1, 0]");
    match parse_config(&text) {
        Err(Error::Parse(msg)) => assert!(msg.contains('3') && msg.contains('4'), "{msg}"),
        other => panic!("{other:?}"),
    }
    let text = fixtures::text("bs3").unwrap().replace("[[[0, 1], [1, 0]]]", "[[[1, 0], [1, 1]]]");
    assert!(matches!(parse_config(&text), Err(Error::Validation(_))));
}

#[test]
fn fixtures_round_trip() {
    for name in fixtures::names() {
        let p = fixtures::load(name).unwrap();
        let again = parse_config(&to_toml(&p)).unwrap();
        assert_eq!(p, again, "{name}");
    }
}

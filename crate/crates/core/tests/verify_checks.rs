mod common;

use common::{load, rat, random_alpha_instance, FIXTURE_NAMES};
use horrocks_core::exact::{parse_form, FieldSpec, HomogeneousForm};
use horrocks_core::shapes::{shape_of_label, MonadShape};
use horrocks_core::spectrum::Spectrum;
use horrocks_core::verify::*;

fn form(s: &str) -> HomogeneousForm {
    parse_form(s, FieldSpec::Rational).unwrap()
}

fn forms(v: &[&str]) -> Vec<HomogeneousForm> {
    v.iter().map(|s| form(s)).collect()
}

#[test]
fn validate_accepts_p3() {
    assert_eq!(validate(&load("p3")).status, Status::Pass);
}

#[test]
fn validate_rejects_scalar_entry() {
    let mut m = load("p3");
    // row for a = 1, column for c = 1: grid degree 0
    m.alpha[1][0] = form("1");
    let r = validate(&m);
    assert_eq!(r.status, Status::Fail);
    let w = r.witness.unwrap();
    assert_eq!(w["reason"], "minimality");
    assert_eq!((w["row"].as_u64(), w["col"].as_u64()), (Some(1), Some(0)));
}

#[test]
fn validate_rejects_wrong_degree() {
    let mut m = load("p3");
    m.alpha[0][0] = form("y^2");
    let r = validate(&m);
    assert_eq!(r.status, Status::Fail);
    let w = r.witness.unwrap();
    assert_eq!(w["reason"], "degree_grid");
    assert_eq!(w["expected_degree"], 1);
}

#[test]
fn complex_on_p4_and_its_mutant() {
    assert_eq!(check_complex(&load("p4")).status, Status::Pass);
    let mut m = load("p4");
    m.beta[0][0] = m.beta[0][0].neg();
    m.beta[0][1] = m.beta[0][1].neg();
    let r = check_complex(&m);
    assert_eq!(r.status, Status::Fail);
    let w = r.witness.unwrap();
    assert!(w["entry"].as_str().is_some_and(|s| s != "0"));

    let broken = load("p4_broken");
    assert_eq!(check_complex(&broken).status, Status::Fail);
}

#[test]
fn complex_with_zero_beta() {
    let shape = shape_of_label("P4").unwrap();
    let m = random_alpha_instance(&shape, 7);
    assert_eq!(check_complex(&m).status, Status::Pass);
}

#[test]
fn saturation_small_ideals() {
    let r = saturation_certificate(&forms(&["x", "y", "z", "w"]), 24).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.witness.unwrap()["degree"], 1);

    let r = saturation_certificate(&forms(&["x^2", "y^2", "z^2"]), 12).unwrap();
    assert_eq!(r.status, Status::Inconclusive);
    assert_eq!(r.witness.unwrap()["d_max"], 12);

    assert!(matches!(
        saturation_certificate(&[], 5),
        Err(VerifyError::EmptyGenerators)
    ));
}

#[test]
fn saturation_on_p4_minors() {
    let minors = alpha_minors(&load("p4")).unwrap();
    let r = saturation_certificate(&minors, 24).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert!(r.witness.unwrap()["degree"].as_u64().unwrap() <= 24);
}

#[test]
fn p8_is_a_bundle_map_both_ways() {
    let m = load("p8");
    assert_eq!(check_subbundle(&m, 24).unwrap().status, Status::Pass);
    assert_eq!(check_surjective(&m, 24).unwrap().status, Status::Pass);
}

#[test]
fn thin_row_fails_surjectivity() {
    let p15 = shape_of_label("P15").unwrap();
    for seed in 0..3 {
        let m = random_alpha_instance(&p15, seed);
        let r = check_surjective(&m, 24).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witness.unwrap()["a"], 1);
    }
}

#[test]
fn common_zero_is_inconclusive() {
    // β = (x^2, y^2, x, y): all four vanish on the line x = y = 0
    let shape = MonadShape::new(vec![1], vec![0, 0]).unwrap();
    let beta: Vec<Vec<HomogeneousForm>> = forms(&["x^2", "y^2", "x", "y"])
        .into_iter()
        .map(|f| vec![f])
        .collect();
    let alpha = vec![forms(&["0", "0", "0", "0"])];
    let m = MonadInstance::new(FieldSpec::Rational, vec![1], shape.middle_twists(), alpha, beta).unwrap();
    let point = [rat(0), rat(0), rat(1), rat(0)];
    assert!(m.beta.iter().all(|r| r[0].eval(&point) == rat(0)));
    let r = check_subbundle(&m, 10).unwrap();
    assert_eq!(r.status, Status::Inconclusive);
}

#[test]
fn p3_is_stable() {
    let m = load("p3");
    assert_eq!(syzygy_dim(&m, 0).unwrap(), 0);
    assert_eq!(is_stable(&m).unwrap().status, Status::Pass);
}

#[test]
fn forced_zero_column_is_a_syzygy() {
    let p5 = shape_of_label("P5").unwrap();
    for seed in 0..3 {
        let m = random_alpha_instance(&p5, seed);
        assert!(syzygy_dim(&m, 2).unwrap() >= 1);
    }
}

#[test]
fn duplicated_column_gives_syzygy() {
    let mut m = load("p3");
    // columns 1 and 2 both have twist 0
    for row in m.alpha.iter_mut() {
        row[2] = row[1].clone();
    }
    assert!(syzygy_dim(&m, 0).unwrap() >= 1);
    let r = is_stable(&m).unwrap();
    assert_eq!(r.status, Status::Fail);
    assert!(r.witness.unwrap()["syzygy"].is_array());
}

#[test]
fn negative_shapes_have_no_syzygy_test() {
    let shape = MonadShape::new(vec![-1, 2, 2, 2], vec![1, 1, 1, 1, 1]).unwrap();
    let m = random_alpha_instance(&shape, 1);
    assert!(matches!(syzygy_dim(&m, 0), Err(VerifyError::NegativeShape(_))));
}

#[test]
fn p4_low_twists() {
    let m = load("p4");
    assert_eq!(h1(&m, -3).unwrap(), 0);
    assert_eq!(h1(&m, -2).unwrap(), 2);
    let c = certify(&m, 24).unwrap();
    let t = cohomology_table(&c, -3, 1).unwrap();
    assert_eq!(t.get(0, 0), Some(0));
    assert_eq!(t.get(1, -2), Some(2));
}

#[test]
fn hartshorne_low_twists() {
    let m = hartshorne_instance().unwrap();
    let c = certify(&m, 24).unwrap();
    let t = cohomology_table(&c, -2, 0).unwrap();
    // spectrum {-1, 0}: h1(E(-1)) = 0 + 1
    assert_eq!(t.get(1, -1), Some(1));
    assert_eq!(t.get(1, -2), Some(0));
    assert_eq!(t.get(0, 0), Some(0));
    assert_eq!(spectrum_of(&c).unwrap(), Spectrum::new(vec![-1, 0]).unwrap());
}

#[test]
fn stable_fixtures_have_no_sections() {
    for name in FIXTURE_NAMES {
        assert_eq!(h0(&load(name), 0).unwrap(), 0, "{name}");
    }
}

#[test]
fn uncertified_instances_are_rejected() {
    let m = load("p4_broken");
    assert!(matches!(certify(&m, 24), Err(VerifyError::Uncertified(_))));
}

#[test]
fn extracted_spectra() {
    for (name, r) in [("p3", "r0^2r1"), ("p17", "r0r1^2r2")] {
        let c = certify(&load(name), 24).unwrap();
        assert_eq!(spectrum_of(&c).unwrap(), Spectrum::parse_r(r).unwrap(), "{name}");
    }
}

#[test]
fn omega_on_a_single_pair() {
    let middle = [0, -1];
    let p = Pairing::natural(&middle).unwrap();
    assert_eq!(p.omega(&middle), vec![vec![0, 1], vec![-1, 0]]);
    let beta = vec![vec![form("x^2")], vec![form("y")]];
    let alpha = build_alpha_from_beta(&beta, &middle, &p);
    assert_eq!(alpha, vec![vec![form("-y"), form("x^2")]]);
}

#[test]
fn unpairable_middle_term() {
    assert!(matches!(Pairing::natural(&[1, 0, -1, -1]), Err(VerifyError::Unpairable(_))));
    assert!(Pairing::new(&[0, -1], vec![0, 1]).is_err());
}

#[test]
fn p4_is_self_dual_under_the_natural_pairing() {
    let m = load("p4");
    let p = Pairing::natural(m.middle_twists()).unwrap();
    assert_eq!(residual_report(&m, &p).unwrap().status, Status::Pass);
    let r = compare_alpha(&m, &p).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.witness.unwrap()["det"], "1");
}

#[test]
fn p3_needs_a_different_pairing() {
    let m = load("p3");
    let p = Pairing::natural(m.middle_twists()).unwrap();
    assert_eq!(residual_report(&m, &p).unwrap().status, Status::Fail);
    assert_eq!(compare_alpha(&m, &p).unwrap().status, Status::Fail);
}

#[test]
fn report_exit_codes() {
    let r = verify_instance(&load("p4"), DEFAULT_DMAX).unwrap();
    assert_eq!(r.exit_code(), 0);
    assert_eq!(r.spectrum.as_deref(), Some("r0r1^2"));
    let r = verify_instance(&load("p4_broken"), DEFAULT_DMAX).unwrap();
    assert_eq!(r.exit_code(), 1);
    assert_eq!(r.report("complex").unwrap().status, Status::Fail);
    let r = verify_instance(&load("p3"), 2).unwrap();
    assert_eq!(r.exit_code(), 2);
    assert_eq!(r.report("subbundle").unwrap().status, Status::Inconclusive);
}

#[test]
fn instance_file_round_trip() {
    let m = load("p17");
    let back = MonadInstance::from_file_data(m.to_file_data()).unwrap();
    assert_eq!(back, m);
}

#[test]
fn malformed_files() {
    let bad_vars = r#"{"variables":["a","b","c","d"],"a":[1],"middle_twists":[0,0,-1,-1],
        "alpha":[["x","y","z^2","w^2"]],"beta":[["z^2"],["w^2"],["x"],["y"]]}"#;
    assert!(matches!(MonadInstance::from_json(bad_vars), Err(VerifyError::Malformed(_))));
    let bad_len = r#"{"variables":["x","y","z","w"],"a":[1],"middle_twists":[0,-1],
        "alpha":[["x","y"]],"beta":[["z^2"],["w^2"]]}"#;
    assert!(MonadInstance::from_json(bad_len).is_err());
    let bad_poly = r#"{"variables":["x","y","z","w"],"a":[1],"middle_twists":[0,0,-1,-1],
        "alpha":[["x","y","z^2","w^"]],"beta":[["z^2"],["w^2"],["x"],["y"]]}"#;
    assert!(matches!(MonadInstance::from_json(bad_poly), Err(VerifyError::Exact(_))));
    assert!(matches!(fixture("p99"), Err(VerifyError::UnknownFixture(_))));
}

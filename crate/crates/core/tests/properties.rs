mod common;

use common::{brute_hdim, load, rat, random_form, Stream, FIXTURE_NAMES};
use horrocks_core::exact::*;
use horrocks_core::shapes::{enumerate_all_candidates, transform_shape, ClassFilter, Mode, MonadShape};
use horrocks_core::spectrum::{enumerate_spectra, h1_profile, is_admissible, spectrum_from_profile};
use horrocks_core::twist::{hdim, hom_dim, p1_cohomology};
use horrocks_core::verify::*;
use num_traits::Zero;
use proptest::prelude::*;

#[test]
fn monomial_counts_up_to_thirty() {
    for d in 0..=30 {
        assert_eq!(hdim(d), brute_hdim(d), "d = {d}");
        assert_eq!(monomial_basis(d as u32).len() as u64, brute_hdim(d));
    }
    for d in -3..=30 {
        assert!(hdim(d) >= hdim(d - 1));
    }
    for d in 1..=30 {
        assert_eq!(hdim(d) - hdim(d - 1), ((d + 2) * (d + 1) / 2) as u64);
    }
}

#[test]
fn spectra_round_trip_through_profiles() {
    for n in [2usize, 4, 6, 8] {
        for x in enumerate_spectra(n).unwrap() {
            assert!(is_admissible(x.values()));
            assert_eq!(spectrum_from_profile(&h1_profile(&x)).unwrap(), x);
            assert_eq!(x.values().iter().sum::<i64>(), -(n as i64) / 2);
            let top: u64 = x.values().iter().filter(|&&k| k >= 0).map(|&k| (k + 1) as u64).sum();
            assert_eq!(x.h1(-1), top);
        }
    }
}

#[test]
fn enumerated_shapes_have_the_requested_c2() {
    for c2 in [2, 4, 6, 8] {
        for class in [ClassFilter::Positive, ClassFilter::NonNegative] {
            for c in enumerate_all_candidates(c2, class, Mode::Permissive).unwrap() {
                assert_eq!(c.shape.c2(), c2);
                assert_eq!(c.spectrum.len() as i64, c2);
            }
        }
    }
}

#[test]
fn certified_fixtures_are_consistent() {
    for name in FIXTURE_NAMES {
        let m = load(name);
        let c = certify(&m, DEFAULT_DMAX).unwrap();
        let x = spectrum_of(&c).unwrap();
        assert!(is_admissible(x.values()), "{name}");
        assert_eq!(x.len() as i64, m.shape().c2(), "{name}");
        for l in -2..=3 {
            assert_eq!(h2(&m, l).unwrap(), x.h2(l).unwrap(), "{name} h2 at {l}");
        }
        for p in 0..=5 {
            assert_eq!(syzygy_dim(&m, p).unwrap(), 0, "{name} syzygies in degree {p}");
        }
    }
}

#[test]
fn saturation_stays_full() {
    for name in ["p3", "p8", "p14"] {
        let m = load(name);
        let minors = alpha_minors(&m).unwrap();
        let r = saturation_certificate(&minors, DEFAULT_DMAX).unwrap();
        let d = r.witness.unwrap()["degree"].as_u64().unwrap() as u32;
        for e in d..d + 3 {
            let (rank, dim) = GradedSpan::direct_rank(&minors, e, SCREEN_PRIME);
            assert_eq!(rank, dim, "{name} at degree {e}");
        }
        if d > 0 {
            let (rank, dim) = GradedSpan::direct_rank(&minors, d - 1, SCREEN_PRIME);
            assert!(rank < dim);
        }
    }
}

fn random_matrix(rows: usize, cols: usize, seed: u64) -> ExactMatrix {
    let mut rng = Stream::new(seed);
    let v: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| if rng.next() % 3 == 0 { 0 } else { rng.small() }).collect())
        .collect();
    ExactMatrix::from_i64_rows(&v, FieldSpec::Rational).unwrap()
}

/// Invertible 2x2 integer matrix and its inverse.
fn unimodular(rng: &mut Stream) -> ([[i64; 2]; 2], [[i64; 2]; 2]) {
    let k = rng.small();
    let j = rng.small();
    // [[1, k], [0, 1]] * [[1, 0], [j, 1]]
    let p = [[1 + k * j, k], [j, 1]];
    let q = [[1, -k], [-j, 1 + k * j]];
    (p, q)
}

fn combine(f: &HomogeneousForm, g: &HomogeneousForm, s: i64, t: i64) -> HomogeneousForm {
    f.scale(&rat(s)).try_add(&g.scale(&rat(t))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_nullity(rows in 1usize..7, cols in 1usize..9, seed in any::<u64>()) {
        let m = random_matrix(rows, cols, seed);
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
        for p in [3u64, 7, 32003] {
            prop_assert!(m.rank() >= m.rank_mod(p));
        }
    }

    #[test]
    fn form_products(seed in any::<u64>(), d1 in 0u32..3, d2 in 0u32..3, d3 in 0u32..3) {
        let mut rng = Stream::new(seed);
        let f = random_form(d1, &mut rng);
        let g = random_form(d2, &mut rng);
        let h = random_form(d3, &mut rng);
        prop_assert_eq!(form_mul(&f, &g).unwrap(), form_mul(&g, &f).unwrap());
        let left = form_mul(&form_mul(&f, &g).unwrap(), &h).unwrap();
        let right = form_mul(&f, &form_mul(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn forms_print_and_parse_back(seed in any::<u64>(), d in 0u32..4) {
        let f = random_form(d, &mut Stream::new(seed));
        prop_assert_eq!(parse_form(&f.to_string(), FieldSpec::Rational).unwrap(), f);
    }

    #[test]
    fn transform_adds_uv(
        a in proptest::collection::vec(1i64..4, 1..4),
        extra in 0i64..3,
        r in 1i64..5,
        u_frac in 0i64..100,
    ) {
        let b: Vec<i64> = (0..=a.len() as i64).map(|i| (i + extra) % 2).collect();
        let s = MonadShape::new(a, b).unwrap();
        let u = u_frac % (2 * r);
        let v = 2 * r - 1 - u;
        let t = transform_shape(&s, r, u, v).unwrap();
        prop_assert_eq!(t.c2(), s.c2() + u * v);
    }

    #[test]
    fn hom_and_p1_identities(a in -10i64..10, b in -10i64..10, d in -20i64..20) {
        prop_assert_eq!(hom_dim(a, b) > 0, b >= a);
        let chi = p1_cohomology(0, d).unwrap() as i64 - p1_cohomology(1, d).unwrap() as i64;
        prop_assert_eq!(chi, d + 1);
    }

    #[test]
    fn complex_survives_base_change(seed in any::<u64>(), which in 0usize..2) {
        let mut m = load(["p4", "p10"][which]);
        let mut rng = Stream::new(seed);
        let (p, q) = unimodular(&mut rng);
        // α' = P α, β' = β P⁻¹ on the two equal-twist summands
        let a0 = m.alpha[0].clone();
        let a1 = m.alpha[1].clone();
        for j in 0..a0.len() {
            m.alpha[0][j] = combine(&a0[j], &a1[j], p[0][0], p[0][1]);
            m.alpha[1][j] = combine(&a0[j], &a1[j], p[1][0], p[1][1]);
        }
        for row in m.beta.iter_mut() {
            let (b0, b1) = (row[0].clone(), row[1].clone());
            row[0] = combine(&b0, &b1, q[0][0], q[1][0]);
            row[1] = combine(&b0, &b1, q[0][1], q[1][1]);
        }
        prop_assert_eq!(check_complex(&m).status, Status::Pass);
    }

    #[test]
    fn residual_is_skew(seed in any::<u64>()) {
        let m = load("p10");
        let mut rng = Stream::new(seed);
        let beta: Vec<Vec<HomogeneousForm>> = (0..m.middle.len())
            .map(|j| (0..m.s()).map(|i| {
                let d = m.beta_degree(j, i);
                if d > 0 { random_form(d as u32, &mut rng) } else { HomogeneousForm::zero(0, m.field) }
            }).collect())
            .collect();
        let p = Pairing::natural(m.middle_twists()).unwrap();
        let r = residual(&beta, m.middle_twists(), &p).unwrap();
        for i in 0..r.len() {
            for k in 0..r.len() {
                prop_assert!(r[i][k].try_add(&r[k][i]).unwrap().is_zero());
            }
        }
    }
}

#![allow(dead_code)]

use horrocks_core::exact::{monomial_basis, FieldSpec, HomogeneousForm};
use horrocks_core::shapes::MonadShape;
use horrocks_core::verify::{fixture, MonadInstance};
use num_bigint::BigInt;
use num_rational::BigRational;

pub const FIXTURE_NAMES: [&str; 6] = ["p3", "p4", "p8", "p10", "p14", "p17"];

pub fn load(name: &str) -> MonadInstance {
    fixture(name).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

/// Counts exponent vectors `(i, j, k, l)` with `i + j + k + l = d`.
pub fn brute_hdim(d: i64) -> u64 {
    if d < 0 {
        return 0;
    }
    let mut n = 0;
    for i in 0..=d {
        for j in 0..=d - i {
            for k in 0..=d - i - j {
                let _l = d - i - j - k;
                n += 1;
            }
        }
    }
    n
}

/// `h⁰(P¹, ⊕O(k_i + l + 1))` by counting binary monomials.
pub fn brute_h1(spectrum: &[i64], l: i64) -> u64 {
    spectrum
        .iter()
        .map(|&k| {
            let d = k + l + 1;
            (0..=d).map(|i| (i, d - i)).count() as u64
        })
        .sum()
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Deterministic xorshift stream.
pub struct Stream(u64);

impl Stream {
    pub fn new(seed: u64) -> Self {
        Stream(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) | 1)
    }

    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn small(&mut self) -> i64 {
        (self.next() % 7) as i64 - 3
    }
}

/// A form of degree `d` with small random coefficients, never zero.
pub fn random_form(d: u32, rng: &mut Stream) -> HomogeneousForm {
    let basis = monomial_basis(d);
    loop {
        let terms: Vec<_> = basis.iter().map(|m| (*m, rat(rng.small()))).collect();
        let f = HomogeneousForm::from_terms(d, FieldSpec::Rational, terms).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

/// Random α on the degree grid of `shape` (zero off the positive-degree
/// cells) and zero β.
pub fn random_alpha_instance(shape: &MonadShape, seed: u64) -> MonadInstance {
    let mut rng = Stream::new(seed);
    let middle = shape.middle_twists();
    let field = FieldSpec::Rational;
    let alpha = shape
        .a()
        .iter()
        .map(|&a| {
            middle
                .iter()
                .map(|&c| {
                    let d = a - c;
                    if d > 0 {
                        random_form(d as u32, &mut rng)
                    } else {
                        HomogeneousForm::zero(0, field)
                    }
                })
                .collect()
        })
        .collect();
    let beta = middle
        .iter()
        .map(|_| shape.a().iter().map(|_| HomogeneousForm::zero(0, field)).collect())
        .collect();
    MonadInstance::new(field, shape.a().to_vec(), middle, alpha, beta).unwrap()
}

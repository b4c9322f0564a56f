use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::ExactError;

/// Prime used when a rational computation is run in "speed mode".
pub const SPEED_PRIME: u64 = 32003;

/// Prime used internally to screen large rational rank computations.
/// Full rank modulo a prime implies full rank over the rationals.
pub const SCREEN_PRIME: u64 = 2_147_483_647;

/// The coefficient field of every form and matrix.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    #[default]
    Rational,
    Prime { p: u64 },
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "QQ"),
            FieldSpec::Prime { p } => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, ExactError> {
        let f = FieldSpec::Prime { p };
        f.validate()?;
        Ok(f)
    }

    /// Characteristic must be an odd prime below 2^31 so that products of two
    /// residues fit in a `u64`.
    pub fn validate(&self) -> Result<(), ExactError> {
        match *self {
            FieldSpec::Rational => Ok(()),
            FieldSpec::Prime { p } => {
                if p <= 2 || p >= (1 << 31) || !is_prime(p) {
                    Err(ExactError::InvalidPrime(p))
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, FieldSpec::Rational)
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime { p } => p,
        }
    }

    /// Brings a rational number into canonical form for this field. Over a
    /// prime field the result is an integer in `[0, p)`.
    pub fn normalize(&self, x: BigRational) -> BigRational {
        match *self {
            FieldSpec::Rational => x,
            FieldSpec::Prime { p } => BigRational::from_integer(BigInt::from(reduce_mod(&x, p))),
        }
    }

    pub fn from_i64(&self, v: i64) -> BigRational {
        self.normalize(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.normalize(a + b)
    }

    pub fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.normalize(a - b)
    }

    pub fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.normalize(a * b)
    }

    pub fn neg(&self, a: &BigRational) -> BigRational {
        self.normalize(-a)
    }

    pub fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            return None;
        }
        match *self {
            FieldSpec::Rational => Some(a.recip()),
            FieldSpec::Prime { p } => {
                let r = reduce_mod(a, p);
                Some(BigRational::from_integer(BigInt::from(inv_mod(r, p))))
            }
        }
    }
}

/// Reduces `x = n/d` modulo `p`; `d` must be invertible modulo `p`.
pub fn reduce_mod(x: &BigRational, p: u64) -> u64 {
    let pb = BigInt::from(p);
    let n = x.numer().mod_floor(&pb).to_u64().unwrap_or(0);
    if x.denom().is_one() {
        return n;
    }
    let d = x.denom().mod_floor(&pb).to_u64().unwrap_or(0);
    mul_mod(n, inv_mod(d, p), p)
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a * b) % p
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse by Fermat's little theorem. Panics on zero, which callers rule out.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "zero has no inverse modulo {p}");
    pow_mod(a, p - 2, p)
}

/// Least common multiple of the denominators, so that scaling by it makes
/// every entry integral.
pub fn denominator_lcm<'a>(xs: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

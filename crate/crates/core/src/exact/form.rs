use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::FieldSpec;
use super::monomial::Monomial;
use super::ExactError;

/// A homogeneous polynomial in `x, y, z, w`.
///
/// The zero form keeps its declared degree so that it can sit in a graded
/// matrix slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousForm {
    degree: u32,
    terms: BTreeMap<Monomial, BigRational>,
    field: FieldSpec,
}

impl HomogeneousForm {
    pub fn zero(degree: u32, field: FieldSpec) -> Self {
        HomogeneousForm {
            degree,
            terms: BTreeMap::new(),
            field,
        }
    }

    pub fn constant(c: BigRational, field: FieldSpec) -> Self {
        Self::monomial(Monomial::ONE, c, field)
    }

    pub fn monomial(m: Monomial, c: BigRational, field: FieldSpec) -> Self {
        let c = field.normalize(c);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        HomogeneousForm {
            degree: m.degree(),
            terms,
            field,
        }
    }

    /// Builds a form from `(monomial, coefficient)` pairs, summing repeats.
    /// Every monomial must have degree `degree`.
    pub fn from_terms<I>(degree: u32, field: FieldSpec, terms: I) -> Result<Self, ExactError>
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut map: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(ExactError::DegreeMismatch {
                    expected: degree,
                    found: m.degree(),
                });
            }
            let entry = map.entry(m).or_insert_with(BigRational::zero);
            *entry = field.add(entry, &c);
        }
        map.retain(|_, c| !c.is_zero());
        Ok(HomogeneousForm {
            degree,
            terms: map,
            field,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Same form with a different declared degree; only meaningful for zero.
    pub fn with_degree(mut self, degree: u32) -> Result<Self, ExactError> {
        if !self.is_zero() && self.degree != degree {
            return Err(ExactError::DegreeMismatch {
                expected: degree,
                found: self.degree,
            });
        }
        self.degree = degree;
        Ok(self)
    }

    fn check_field(&self, other: &Self) -> Result<(), ExactError> {
        if self.field != other.field {
            return Err(ExactError::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    /// Sum of two forms. A zero summand adopts the degree of the other one.
    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_field(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.degree != other.degree {
            return Err(ExactError::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            let entry = out.terms.entry(*m).or_insert_with(BigRational::zero);
            *entry = out.field.add(entry, c);
            if entry.is_zero() {
                out.terms.remove(m);
            }
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = HomogeneousForm::zero(self.degree, self.field);
        for (m, a) in &self.terms {
            let v = self.field.mul(a, c);
            if !v.is_zero() {
                out.terms.insert(*m, v);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        HomogeneousForm {
            degree: self.degree + m.degree(),
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
            field: self.field,
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        form_mul(self, other)
    }

    /// Value at a point with rational coordinates.
    pub fn eval(&self, point: &[BigRational; 4]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.0.iter()) {
                for _ in 0..e {
                    v *= x;
                }
            }
            acc += v;
        }
        self.field.normalize(acc)
    }

    /// Coefficient vector with respect to a monomial index of this degree.
    pub fn coefficients_in(&self, index: &HashMap<Monomial, usize>) -> Vec<(usize, BigRational)> {
        self.terms
            .iter()
            .map(|(m, c)| (index[m], c.clone()))
            .collect()
    }

    /// Reinterprets the coefficients in another field (reduction modulo p).
    pub fn to_field(&self, field: FieldSpec) -> Self {
        let mut out = HomogeneousForm::zero(self.degree, field);
        for (m, c) in &self.terms {
            let v = field.normalize(c.clone());
            if !v.is_zero() {
                out.terms.insert(*m, v);
            }
        }
        out
    }
}

/// Exact product of two forms over the same field.
pub fn form_mul(f: &HomogeneousForm, g: &HomogeneousForm) -> Result<HomogeneousForm, ExactError> {
    f.check_field(g)?;
    let field = f.field;
    let mut terms: BTreeMap<Monomial, BigRational> = BTreeMap::new();
    for (m1, c1) in &f.terms {
        for (m2, c2) in &g.terms {
            let m = m1.mul(m2);
            let e = terms.entry(m).or_insert_with(BigRational::zero);
            *e = field.add(e, &field.mul(c1, c2));
        }
    }
    terms.retain(|_, c| !c.is_zero());
    Ok(HomogeneousForm {
        degree: f.degree + g.degree,
        terms,
        field,
    })
}

impl fmt::Display for HomogeneousForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let is_const = m.degree() == 0;
            if abs.is_one() {
                if is_const {
                    write!(f, "1")?;
                } else {
                    write!(f, "{m}")?;
                }
            } else {
                if abs.is_integer() {
                    write!(f, "{}", abs.numer())?;
                } else {
                    write!(f, "{}/{}", abs.numer(), abs.denom())?;
                }
                if !is_const {
                    write!(f, "*{m}")?;
                }
            }
        }
        Ok(())
    }
}

//! Dimensions of spaces of sections for line bundles on P³ and P¹.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::binom3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TwistError {
    #[error("cohomological degree {i} out of range for P{n}")]
    DegreeOutOfRange { i: u32, n: u32 },
}

/// Twists `d` of the summands `O(d)` of a split bundle, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TwistList(pub Vec<i64>);

impl TwistList {
    pub fn new(twists: Vec<i64>) -> Self {
        TwistList(twists)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().copied()
    }

    /// `h⁰` of the sum twisted by `l`.
    pub fn h0(&self, l: i64) -> u64 {
        self.iter().map(|d| hdim(d + l)).sum()
    }

    pub fn sorted(&self) -> Vec<i64> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }
}

impl From<Vec<i64>> for TwistList {
    fn from(v: Vec<i64>) -> Self {
        TwistList(v)
    }
}

/// `h⁰(P³, O(d))`.
pub fn hdim(d: i64) -> u64 {
    binom3(d)
}

/// `dim Hom(O(a), O(b))`.
pub fn hom_dim(a: i64, b: i64) -> u64 {
    hdim(b - a)
}

/// `dim Hom(⊕O(a_i), ⊕O(b_j))`.
pub fn hom_dim_sums(from: &TwistList, to: &TwistList) -> u64 {
    from.iter()
        .map(|a| to.iter().map(|b| hom_dim(a, b)).sum::<u64>())
        .sum()
}

/// `h^i(P³, O(d))`.
pub fn p3_cohomology(i: u32, d: i64) -> Result<u64, TwistError> {
    match i {
        0 => Ok(hdim(d)),
        1 | 2 => Ok(0),
        3 => Ok(hdim(-d - 4)),
        _ => Err(TwistError::DegreeOutOfRange { i, n: 3 }),
    }
}

/// `h^i(P¹, O(d))`.
pub fn p1_cohomology(i: u32, d: i64) -> Result<u64, TwistError> {
    match i {
        0 => Ok((d + 1).max(0) as u64),
        1 => Ok((-d - 1).max(0) as u64),
        _ => Err(TwistError::DegreeOutOfRange { i, n: 1 }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(hdim(0), 1);
        assert_eq!(hdim(-1), 0);
        assert_eq!(hom_dim(0, 0), 1);
        assert_eq!(hom_dim(1, 0), 0);
        assert_eq!(p3_cohomology(1, 5), Ok(0));
        assert!(p3_cohomology(4, 0).is_err());
        assert_eq!(p1_cohomology(0, 0), Ok(1));
        assert_eq!(p1_cohomology(0, -1), Ok(0));
        assert!(p1_cohomology(2, 0).is_err());
    }

    #[test]
    fn sum_of_twists() {
        let t = TwistList::new(vec![1, 0, 0, -1, -1, -2]);
        assert_eq!(t.h0(0), 4 + 1 + 1);
        assert_eq!(hom_dim_sums(&TwistList::new(vec![-2]), &TwistList::new(vec![1, 0])), 20 + 10);
    }
}

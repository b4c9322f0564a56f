//! Shapes of minimal Horrocks monads
//! `⊕O(-a_i-1) -> ⊕(O(b_j) ⊕ O(-b_j-1)) -> ⊕O(a_i)`.

mod catalog;
mod enumerate;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use catalog::{
    annotation, annotations, label_of, labels_of_shape, shape_of_label, Annotation, Verdict,
};
pub use enumerate::{
    enumerate_all_candidates, enumerate_b, enumerate_candidates, rho_bounds, Candidate, ClassFilter,
    Mode,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("b must have exactly |a|+1 = {expected} entries, got {found}")]
    Length { expected: usize, found: usize },
    #[error("b entries must be non-negative, got {0}")]
    NegativeB(i64),
    #[error("Ein shapes need a > b1 + b2, got a = {a}, b1 + b2 = {sum}")]
    EinConstraint { a: i64, sum: i64 },
    #[error("transform needs r > 0, u, v >= 0 and u + v = 2r - 1 (r = {r}, u = {u}, v = {v})")]
    Transform { r: i64, u: i64, v: i64 },
    #[error("Hartshorne shapes need s >= 1")]
    HartshorneSize,
    #[error("unknown shape label {0:?}")]
    UnknownLabel(String),
}

/// The pair `(a, b)`, both kept non-descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonadShape {
    a: Vec<i64>,
    b: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Positivity {
    Positive,
    NonNegative,
    Negative,
}

impl fmt::Display for Positivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Positivity::Positive => "positive",
            Positivity::NonNegative => "non_negative",
            Positivity::Negative => "negative",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeClass {
    pub positivity: Positivity,
    pub homotopy_free: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    /// Every α entry in this middle column has degree `<= 0`.
    ForcedZeroColumn { column: usize, twist: i64 },
    /// This α row has at most three entries of positive degree.
    ThinRow { row: usize, a: i64, count: usize },
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::ForcedZeroColumn { twist, .. } => write!(f, "ForcedZeroColumn({twist})"),
            Obstruction::ThinRow { a, count, .. } => write!(f, "ThinRow(O({a}), {count})"),
        }
    }
}

impl MonadShape {
    pub fn new(mut a: Vec<i64>, mut b: Vec<i64>) -> Result<Self, ShapeError> {
        if b.len() != a.len() + 1 {
            return Err(ShapeError::Length {
                expected: a.len() + 1,
                found: b.len(),
            });
        }
        if let Some(&neg) = b.iter().find(|&&x| x < 0) {
            return Err(ShapeError::NegativeB(neg));
        }
        a.sort_unstable();
        b.sort_unstable();
        Ok(MonadShape { a, b })
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    pub fn s(&self) -> usize {
        self.a.len()
    }

    /// All `2s+2` middle twists `b_j` and `-b_j-1`, in descending order.
    pub fn middle_twists(&self) -> Vec<i64> {
        let mut t: Vec<i64> = self.b.iter().flat_map(|&b| [b, -b - 1]).collect();
        t.sort_unstable_by(|x, y| y.cmp(x));
        t
    }

    /// Twists of the left term `⊕O(-a_i-1)`.
    pub fn left_twists(&self) -> Vec<i64> {
        self.a.iter().map(|&a| -a - 1).collect()
    }

    pub fn c2(&self) -> i64 {
        c2_of(&self.a, &self.b)
    }

    pub fn positivity(&self) -> Positivity {
        if self.a.iter().all(|&x| x > 0) {
            Positivity::Positive
        } else if self.a.iter().all(|&x| x >= 0) {
            Positivity::NonNegative
        } else {
            Positivity::Negative
        }
    }

    /// `Hom(B, C) = Hom(A, B) = 0`, i.e. `max b < min a`.
    pub fn homotopy_free(&self) -> bool {
        match self.a.first() {
            Some(lo) => self.b.last().is_some_and(|hi| hi < lo),
            None => true,
        }
    }

    pub fn classify(&self) -> ShapeClass {
        ShapeClass {
            positivity: self.positivity(),
            homotopy_free: self.homotopy_free(),
        }
    }

    /// Degree of α entry `(i, j)` against a given column order.
    pub fn alpha_degree(&self, i: usize, c_j: i64) -> i64 {
        self.a[i] - c_j
    }

    /// Compact power notation, e.g. `0^2,1`.
    pub fn power_notation(v: &[i64]) -> String {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < v.len() {
            let mut j = i;
            while j < v.len() && v[j] == v[i] {
                j += 1;
            }
            parts.push(if j - i == 1 {
                v[i].to_string()
            } else {
                format!("{}^{}", v[i], j - i)
            });
            i = j;
        }
        parts.join(",")
    }
}

impl fmt::Display for MonadShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a=({}) b=({})",
            Self::power_notation(&self.a),
            Self::power_notation(&self.b)
        )
    }
}

fn c2_of(a: &[i64], b: &[i64]) -> i64 {
    a.iter().map(|x| x * (x + 1)).sum::<i64>() - b.iter().map(|x| x * (x + 1)).sum::<i64>()
}

pub fn c2_of_shape(s: &MonadShape) -> i64 {
    s.c2()
}

/// For every `l`, if `r = #{a_i <= l} > 0` then at least `r + 3` middle
/// twists are `>= -l`. Only `l` among the `a_i` can be tight.
pub fn rank_condition_ok(s: &MonadShape) -> bool {
    let middle = s.middle_twists();
    s.a.iter().all(|&l| {
        let r = s.a.iter().filter(|&&x| x <= l).count();
        let have = middle.iter().filter(|&&c| c >= -l).count();
        have >= r + 3
    })
}

/// Zero patterns of α forced by degrees: entry `(i, j)` has degree
/// `a_i - c_j` and vanishes when that is `<= 0` (negative degree, or a
/// scalar ruled out by minimality).
pub fn structural_obstructions(s: &MonadShape) -> Vec<Obstruction> {
    let middle = s.middle_twists();
    let mut out = Vec::new();
    for (j, &c) in middle.iter().enumerate() {
        if s.a.iter().all(|&a| a - c <= 0) {
            out.push(Obstruction::ForcedZeroColumn { column: j, twist: c });
        }
    }
    for (i, &a) in s.a.iter().enumerate() {
        let count = middle.iter().filter(|&&c| a - c > 0).count();
        if count <= 3 {
            out.push(Obstruction::ThinRow { row: i, a, count });
        }
    }
    out
}

/// `a = 1^s`, `b = 0^{s+1}`.
pub fn hartshorne_shape(s: usize) -> Result<MonadShape, ShapeError> {
    if s == 0 {
        return Err(ShapeError::HartshorneSize);
    }
    MonadShape::new(vec![1; s], vec![0; s + 1])
}

/// `a = (a)`, `b = (b1, b2)` with `a > b1 + b2`.
pub fn ein_shape(a: i64, b1: i64, b2: i64) -> Result<MonadShape, ShapeError> {
    if b1 < 0 || b2 < 0 {
        return Err(ShapeError::NegativeB(b1.min(b2)));
    }
    if a <= b1 + b2 {
        return Err(ShapeError::EinConstraint { a, sum: b1 + b2 });
    }
    MonadShape::new(vec![a], vec![b1, b2])
}

/// Adds `O(r-1)` to the right term and the pair `O(r-1-u) ⊕ O(r-1-v)` to the
/// middle. With `u + v = 2r - 1` the pair is `{t, -t-1}` for
/// `t = r - 1 - min(u, v)`.
pub fn transform_shape(s: &MonadShape, r: i64, u: i64, v: i64) -> Result<MonadShape, ShapeError> {
    if r <= 0 || u < 0 || v < 0 || u + v != 2 * r - 1 {
        return Err(ShapeError::Transform { r, u, v });
    }
    let t = r - 1 - u.min(v);
    let mut a = s.a.clone();
    a.push(r - 1);
    let mut b = s.b.clone();
    b.push(t);
    MonadShape::new(a, b)
}

/// `c₂ = deg Y + k - k²` for the curve of a Serre correspondence.
pub fn serre_c2(deg_y: i64, k: i64) -> i64 {
    deg_y + k - k * k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes() {
        let p1 = MonadShape::new(vec![1, 1, 1], vec![0, 0, 0, 0]).unwrap();
        assert_eq!(p1.classify().positivity, Positivity::Positive);
        assert!(p1.homotopy_free());
        let n1 = MonadShape::new(vec![0, 1, 2], vec![0, 0, 0, 1]).unwrap();
        assert_eq!(n1.positivity(), Positivity::NonNegative);
        assert!(!n1.homotopy_free());
        let neg = MonadShape::new(vec![-1, 2], vec![0, 0, 1]).unwrap();
        assert_eq!(neg.positivity(), Positivity::Negative);
    }

    #[test]
    fn constructors_reject_bad_input() {
        assert!(MonadShape::new(vec![1], vec![0, 0, 0]).is_err());
        assert!(MonadShape::new(vec![1], vec![0, -1]).is_err());
        assert!(ein_shape(1, 1, 1).is_err());
        assert!(hartshorne_shape(0).is_err());
        let p1 = hartshorne_shape(3).unwrap();
        assert!(transform_shape(&p1, 2, 1, 1).is_err());
    }

    #[test]
    fn obstruction_examples() {
        let p5 = MonadShape::new(vec![2, 2], vec![0, 0, 2]).unwrap();
        assert_eq!(
            structural_obstructions(&p5),
            vec![Obstruction::ForcedZeroColumn { column: 0, twist: 2 }]
        );
        let p15 = MonadShape::new(vec![1, 3], vec![1, 1, 1]).unwrap();
        assert_eq!(
            structural_obstructions(&p15),
            vec![Obstruction::ThinRow { row: 0, a: 1, count: 3 }]
        );
        assert!(structural_obstructions(&hartshorne_shape(3).unwrap()).is_empty());
    }

    #[test]
    fn rank_condition_examples() {
        assert!(rank_condition_ok(&MonadShape::new(vec![0, 1, 2], vec![0, 0, 0, 1]).unwrap()));
        assert!(!rank_condition_ok(&MonadShape::new(vec![0, 0, 1], vec![0, 0, 0, 0]).unwrap()));
        assert!(rank_condition_ok(&MonadShape::new(vec![3], vec![0, 2]).unwrap()));
    }

    #[test]
    fn power_notation() {
        assert_eq!(MonadShape::power_notation(&[0, 0, 1]), "0^2,1");
        assert_eq!(MonadShape::power_notation(&[2]), "2");
    }
}

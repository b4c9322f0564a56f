use serde::{Deserialize, Serialize};

use super::{MonadShape, ShapeError};
use crate::spectrum::Spectrum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    ExistsStable,
    NoStableCohomology,
    MonadNonexistent,
    Unknown,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::ExistsStable => "exists_stable",
            Verdict::NoStableCohomology => "no_stable_cohomology",
            Verdict::MonadNonexistent => "monad_nonexistent",
            Verdict::Unknown => "unknown",
        })
    }
}

/// A labeled row of the classification tables with its known verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annotation {
    pub label: String,
    pub spectrum: Spectrum,
    pub shape: MonadShape,
    pub verdict: Verdict,
    pub citation: String,
}

const HARTSHORNE: &str = "Hartshorne monad; stable cohomology from disjoint conics via the Serre correspondence";
const EIN: &str = "Ein monad (a > b1 + b2); stable cohomology from a curve on a complete intersection";
const EXPLICIT: &str = "explicit monad: alpha surjective, beta injective, alpha*beta = 0, no degree-0 syzygy";
const FROM_P3: &str = "explicit (P3) monad extended by O(1) and a pair of middle summands (r=2, u=2, v=1)";
const FROM_P4: &str = "explicit (P4) monad extended by O(1) and a pair of middle summands (r=2, u=2, v=1)";
const ZERO_COLUMN: &str = "minimality forces a zero column in alpha; its inclusion is a syzygy of degree >= 0";
const THIN_ROW: &str = "the O(1) row of alpha has three nonzero cubics, which share a common zero";
const QUOTIENT_RANK: &str = "a section of E or E(1) is forced by the rank of the image of the O(1) block of beta";
const OPEN: &str = "survives the generator and summand-count filters; existence not settled";

#[rustfmt::skip]
const ROWS: &[(&str, &[usize], &[i64], &[i64], Verdict, &str)] = &[
    ("P1", &[3], &[1, 1, 1], &[0, 0, 0, 0], Verdict::ExistsStable, HARTSHORNE),
    ("P2", &[2, 1], &[2], &[0, 0], Verdict::ExistsStable, EIN),
    ("P3", &[2, 1], &[1, 2], &[0, 0, 1], Verdict::ExistsStable, EXPLICIT),
    ("P4", &[1, 2], &[2, 2], &[1, 1, 1], Verdict::ExistsStable, EXPLICIT),
    ("P5", &[1, 2], &[2, 2], &[0, 0, 2], Verdict::NoStableCohomology, ZERO_COLUMN),
    ("P6", &[1, 1, 1], &[3], &[0, 2], Verdict::ExistsStable, EIN),
    ("P7", &[4], &[1, 1, 1, 1], &[0, 0, 0, 0, 0], Verdict::ExistsStable, HARTSHORNE),
    ("P8", &[3, 1], &[1, 2], &[0, 0, 0], Verdict::ExistsStable, EXPLICIT),
    ("P9", &[3, 1], &[1, 1, 2], &[0, 0, 0, 1], Verdict::ExistsStable, FROM_P3),
    ("P10", &[2, 2], &[2, 2], &[0, 1, 1], Verdict::ExistsStable, EXPLICIT),
    ("P11", &[2, 2], &[1, 2, 2], &[0, 0, 0, 2], Verdict::NoStableCohomology, ZERO_COLUMN),
    ("P12", &[2, 2], &[1, 2, 2], &[0, 1, 1, 1], Verdict::ExistsStable, FROM_P4),
    ("P13", &[2, 1, 1], &[3], &[1, 1], Verdict::ExistsStable, EIN),
    ("P14", &[2, 1, 1], &[1, 3], &[0, 0, 2], Verdict::ExistsStable, EXPLICIT),
    ("P15", &[2, 1, 1], &[1, 3], &[1, 1, 1], Verdict::MonadNonexistent, THIN_ROW),
    ("P16", &[1, 2, 1], &[3], &[1, 1], Verdict::ExistsStable, EIN),
    ("P17", &[1, 2, 1], &[2, 3], &[1, 1, 2], Verdict::ExistsStable, EXPLICIT),
    ("P18", &[1, 3], &[2, 2, 2], &[0, 1, 1, 2], Verdict::NoStableCohomology, ZERO_COLUMN),
    ("P19", &[1, 1, 1, 1], &[4], &[0, 3], Verdict::ExistsStable, EIN),
    ("N1", &[2, 1], &[0, 1, 2], &[0, 0, 0, 1], Verdict::Unknown, OPEN),
    ("N2", &[1, 2], &[0, 2, 2], &[0, 1, 1, 1], Verdict::Unknown, OPEN),
    ("N3", &[1, 2], &[0, 2, 2], &[0, 0, 0, 2], Verdict::NoStableCohomology, ZERO_COLUMN),
    ("N4", &[3, 1], &[0, 1, 2], &[0, 0, 0, 0], Verdict::Unknown, OPEN),
    ("N5", &[3, 1], &[0, 1, 1, 2], &[0, 0, 0, 0, 1], Verdict::Unknown, OPEN),
    ("N6", &[2, 2], &[0, 2, 2], &[0, 0, 1, 1], Verdict::Unknown, OPEN),
    ("N7", &[2, 2], &[0, 1, 2, 2], &[0, 0, 0, 0, 2], Verdict::NoStableCohomology, ZERO_COLUMN),
    ("N8", &[2, 2], &[0, 1, 2, 2], &[0, 0, 1, 1, 1], Verdict::Unknown, OPEN),
    ("N9", &[2, 1, 1], &[0, 1, 3], &[0, 0, 0, 2], Verdict::Unknown, OPEN),
    ("N10", &[2, 1, 1], &[0, 1, 3], &[0, 1, 1, 1], Verdict::Unknown, OPEN),
    ("N11", &[1, 2, 1], &[0, 2, 3], &[0, 1, 1, 2], Verdict::Unknown, OPEN),
    ("N12", &[1, 3], &[0, 2, 2, 2], &[0, 0, 1, 1, 2], Verdict::NoStableCohomology, ZERO_COLUMN),
    ("N13", &[1, 3], &[0, 2, 2, 2], &[1, 1, 1, 1, 1], Verdict::NoStableCohomology, QUOTIENT_RANK),
];

/// Every labeled row, positive rows first, in label order.
pub fn annotations() -> Vec<Annotation> {
    ROWS.iter()
        .map(|(label, s, a, b, verdict, citation)| Annotation {
            label: label.to_string(),
            spectrum: Spectrum::from_multiplicities(s).expect("catalog spectrum"),
            shape: MonadShape::new(a.to_vec(), b.to_vec()).expect("catalog shape"),
            verdict: *verdict,
            citation: citation.to_string(),
        })
        .collect()
}

pub fn annotation(label: &str) -> Option<Annotation> {
    annotations().into_iter().find(|x| x.label.eq_ignore_ascii_case(label))
}

/// Label of `shape` listed under spectrum `x`, if any.
pub fn label_of(x: &Spectrum, shape: &MonadShape) -> Option<String> {
    annotations()
        .into_iter()
        .find(|r| &r.spectrum == x && &r.shape == shape)
        .map(|r| r.label)
}

/// Shape of a labeled row.
pub fn shape_of_label(label: &str) -> Result<MonadShape, ShapeError> {
    annotation(label)
        .map(|r| r.shape)
        .ok_or_else(|| ShapeError::UnknownLabel(label.to_string()))
}

/// Labels of every row with this shape, under any spectrum.
pub fn labels_of_shape(shape: &MonadShape) -> Vec<String> {
    annotations()
        .into_iter()
        .filter(|r| &r.shape == shape)
        .map(|r| r.label)
        .collect()
}

/// Position of a label in the listing order (`P1` = 0, ..., `N13` = 31).
pub(crate) fn label_rank(label: &str) -> usize {
    ROWS.iter().position(|r| r.0 == label).unwrap_or(usize::MAX)
}

//! Dimensions of the families of bundles given by a fixed homotopy-free shape.

use serde::{Deserialize, Serialize};

use crate::shapes::MonadShape;
use crate::spectrum::Spectrum;
use crate::twist::hdim;

/// `dim = h - w - g - s` together with its ingredients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionRecord {
    pub shape: MonadShape,
    pub spectrum: Option<Spectrum>,
    pub h: u64,
    pub w: u64,
    pub g: u64,
    pub s: u64,
    pub dim: i64,
    /// `8 c₂ - 5`.
    pub expected_dim: i64,
    /// The free-action argument behind the formula needs a homotopy-free shape.
    pub reliable: bool,
}

impl DimensionRecord {
    pub fn is_expected(&self) -> bool {
        self.dim == self.expected_dim
    }
}

/// Morphisms `⊕O(-a_i-1) -> B`.
pub fn dim_h(shape: &MonadShape) -> u64 {
    let middle = shape.middle_twists();
    shape
        .a()
        .iter()
        .map(|&a| middle.iter().map(|&c| hdim(c + a + 1)).sum::<u64>())
        .sum()
}

/// Skew forms on `⊕O(-a_i-1)` with values in `O(-1)`: off-diagonal pairs only.
pub fn dim_w(shape: &MonadShape) -> u64 {
    let a = shape.a();
    let mut total = 0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            total += hdim(a[i] + a[j] + 1);
        }
    }
    total
}

/// Endomorphisms of `⊕O(a_i)`.
pub fn dim_g(shape: &MonadShape) -> u64 {
    let a = shape.a();
    a.iter().map(|&x| a.iter().map(|&y| hdim(x - y)).sum::<u64>()).sum()
}

/// Symmetric forms on the middle term, diagonal included.
pub fn dim_s(shape: &MonadShape) -> u64 {
    let c = shape.middle_twists();
    let mut total = 0;
    for i in 0..c.len() {
        for j in i..c.len() {
            total += hdim(-c[i] - c[j] - 1);
        }
    }
    total
}

pub fn family_dimension(shape: &MonadShape) -> DimensionRecord {
    let (h, w, g, s) = (dim_h(shape), dim_w(shape), dim_g(shape), dim_s(shape));
    DimensionRecord {
        shape: shape.clone(),
        spectrum: None,
        h,
        w,
        g,
        s,
        dim: h as i64 - w as i64 - g as i64 - s as i64,
        expected_dim: 8 * shape.c2() - 5,
        reliable: shape.homotopy_free(),
    }
}

#[rustfmt::skip]
const TABLE: &[(&[usize], &[i64], &[i64])] = &[
    (&[3], &[1, 1, 1], &[0, 0, 0, 0]),
    (&[2, 1], &[2], &[0, 0]),
    (&[1, 2], &[2, 2], &[1, 1, 1]),
    (&[1, 1, 1], &[3], &[0, 2]),
    (&[4], &[1, 1, 1, 1], &[0, 0, 0, 0, 0]),
    (&[3, 1], &[1, 2], &[0, 0, 0]),
    (&[2, 2], &[2, 2], &[0, 1, 1]),
    (&[1, 2, 1], &[3], &[1, 1]),
    (&[1, 1, 1, 1], &[4], &[0, 3]),
];

/// The nine homotopy-free families with `c₂ ∈ {6, 8}` whose dimensions are
/// tabulated, in listing order.
pub fn tabulated_dimensions() -> Vec<DimensionRecord> {
    TABLE
        .iter()
        .map(|(s, a, b)| {
            let shape = MonadShape::new(a.to_vec(), b.to_vec()).expect("table shape");
            let mut r = family_dimension(&shape);
            r.spectrum = Some(Spectrum::from_multiplicities(s).expect("table spectrum"));
            r
        })
        .collect()
}

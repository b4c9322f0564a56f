use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::catalog::{annotations, label_rank, Annotation};
use super::{rank_condition_ok, structural_obstructions, MonadShape, Obstruction, Positivity};
use crate::spectrum::{enumerate_spectra, Spectrum, SpectrumError};

/// Which right-hand terms to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassFilter {
    Positive,
    NonNegative,
    Negative,
}

impl ClassFilter {
    fn matches(self, p: Positivity) -> bool {
        matches!(
            (self, p),
            (ClassFilter::Positive, Positivity::Positive)
                | (ClassFilter::NonNegative, Positivity::NonNegative)
                | (ClassFilter::Negative, Positivity::Negative)
        )
    }
}

/// `Strict` adds at most one zero to a positive `a` (only when the top
/// of the spectrum is at least 1), or a single negative entry and no zero;
/// `Permissive` allows as many zeros as `h¹(E)` and up to two negative
/// entries alongside them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    #[default]
    Strict,
    Permissive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub spectrum: Spectrum,
    pub shape: MonadShape,
    pub label: Option<String>,
    pub positivity: Positivity,
    pub homotopy_free: bool,
    pub obstructions: Vec<Obstruction>,
    /// Whether the summand-count condition holds; it filters the
    /// non-positive classes and is only reported for positive ones.
    pub rank_condition: bool,
    pub annotation: Option<Annotation>,
    /// Not among the labeled table rows.
    pub unlisted: bool,
}

/// Bounds on `ρ(l)`, the number of minimal generators of `H¹_*(E)` in degree
/// `l`, for `l = -1, ..., -k-1`. The top degree is fixed to `s(k)`.
pub fn rho_bounds(x: &Spectrum) -> BTreeMap<i64, (usize, usize)> {
    let s = x.multiplicities();
    let k = s.len() - 1;
    let mut out = BTreeMap::new();
    out.insert(-(k as i64) - 1, (s[k], s[k]));
    for i in 0..k {
        let tail: usize = s[i + 1..].iter().sum();
        let lower = s[i].saturating_sub(2 * tail);
        let upper = s[i].saturating_sub(1);
        out.insert(-(i as i64) - 1, (lower, upper));
    }
    out
}

/// Non-descending `b` of length `|a|+1`, entries `>= 0`, with
/// `Σ b(b+1) = Σ a(a+1) - c2`.
pub fn enumerate_b(a: &[i64], c2: i64) -> Vec<Vec<i64>> {
    let target = a.iter().map(|x| x * (x + 1)).sum::<i64>() - c2;
    let len = a.len() + 1;
    let mut out = Vec::new();
    if target < 0 {
        return out;
    }
    fn go(rem: i64, slots: usize, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if slots == 0 {
            if rem == 0 {
                let mut v = cur.clone();
                v.reverse();
                out.push(v);
            }
            return;
        }
        let mut b = max;
        loop {
            let w = b * (b + 1);
            if w <= rem && w * slots as i64 >= rem {
                cur.push(b);
                go(rem - w, slots - 1, b, cur, out);
                cur.pop();
            }
            if b == 0 || w * (slots as i64) < rem {
                break;
            }
            b -= 1;
        }
    }
    let mut max = 0;
    while (max + 1) * (max + 2) <= target {
        max += 1;
    }
    go(target, len, max, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Positive right-hand terms allowed by the generator bounds.
fn positive_a_tuples(x: &Spectrum) -> Vec<Vec<i64>> {
    let bounds: Vec<(i64, (usize, usize))> = rho_bounds(x).into_iter().collect();
    let mut out = vec![Vec::new()];
    for (l, (lo, hi)) in bounds {
        let v = -l;
        let mut next = Vec::new();
        for a in &out {
            for m in lo..=hi {
                let mut t: Vec<i64> = a.clone();
                t.extend(std::iter::repeat_n(v, m));
                next.push(t);
            }
        }
        out = next;
    }
    for a in &mut out {
        a.sort_unstable();
    }
    out.retain(|a| !a.is_empty());
    out
}

/// `h¹(E) = 3n/2 - 1 + h²(E)`, an upper bound for the number of degree-0
/// generators.
fn zero_bound(x: &Spectrum) -> usize {
    let n = x.len() as i64;
    let h2: i64 = x.values().iter().map(|&k| (-k - 2).max(0)).sum();
    (3 * n / 2 - 1 + h2).max(0) as usize
}

fn shapes_for(a: &[i64], c2: i64) -> Vec<MonadShape> {
    enumerate_b(a, c2)
        .into_iter()
        .filter_map(|b| MonadShape::new(a.to_vec(), b).ok())
        .collect()
}

fn ein_ok(s: &MonadShape) -> bool {
    s.s() > 1 || s.a()[0] > s.b()[0] + s.b()[1]
}

fn fatal_for_negative(s: &MonadShape) -> bool {
    structural_obstructions(s).iter().any(|o| match o {
        Obstruction::ThinRow { .. } => true,
        Obstruction::ForcedZeroColumn { twist, .. } => *twist >= 0,
    })
}

fn with_prefix(prefix: &[i64], a: &[i64]) -> Vec<i64> {
    let mut v = prefix.to_vec();
    v.extend_from_slice(a);
    v.sort_unstable();
    v
}

/// Candidate shapes for spectrum `x` with `c₂ = c2`.
pub fn enumerate_candidates(
    c2: i64,
    x: &Spectrum,
    class: ClassFilter,
    mode: Mode,
) -> Result<Vec<Candidate>, SpectrumError> {
    if x.len() as i64 != c2 {
        return Err(SpectrumError::BadLength(x.len()));
    }
    let top = x.top();
    let zmax = zero_bound(x);
    let tmin = -(c2 + 2);
    let mut shapes: Vec<MonadShape> = Vec::new();
    for a in positive_a_tuples(x) {
        match class {
            ClassFilter::Positive => shapes.extend(shapes_for(&a, c2).into_iter().filter(ein_ok)),
            ClassFilter::NonNegative => {
                let zeros: Vec<usize> = match mode {
                    Mode::Strict if top >= 1 => vec![1],
                    Mode::Strict => vec![],
                    Mode::Permissive => (1..=zmax).collect(),
                };
                for z in zeros {
                    shapes.extend(shapes_for(&with_prefix(&vec![0; z], &a), c2));
                }
            }
            ClassFilter::Negative => {
                let (zeros, negs): (Vec<usize>, usize) = match mode {
                    Mode::Strict => (vec![0], 1),
                    Mode::Permissive => ((0..=zmax).collect(), 2),
                };
                let mut prefixes: Vec<Vec<i64>> = (tmin..=-1).map(|t| vec![t]).collect();
                if negs == 2 {
                    for t1 in tmin..=-1 {
                        for t2 in t1..=-1 {
                            prefixes.push(vec![t1, t2]);
                        }
                    }
                }
                for p in &prefixes {
                    for &z in &zeros {
                        let mut pre = p.clone();
                        pre.extend(std::iter::repeat_n(0, z));
                        shapes.extend(
                            shapes_for(&with_prefix(&pre, &a), c2)
                                .into_iter()
                                .filter(|s| !fatal_for_negative(s)),
                        );
                    }
                }
            }
        }
    }
    shapes.retain(|s| {
        class.matches(s.positivity()) && (class == ClassFilter::Positive || rank_condition_ok(s))
    });
    shapes.sort();
    shapes.dedup();
    let table = annotations();
    let mut out: Vec<Candidate> = shapes
        .into_iter()
        .map(|shape| {
            let annotation = table
                .iter()
                .find(|r| &r.spectrum == x && r.shape == shape)
                .cloned();
            Candidate {
                spectrum: x.clone(),
                label: annotation.as_ref().map(|r| r.label.clone()),
                positivity: shape.positivity(),
                homotopy_free: shape.homotopy_free(),
                obstructions: structural_obstructions(&shape),
                rank_condition: rank_condition_ok(&shape),
                unlisted: annotation.is_none(),
                annotation,
                shape,
            }
        })
        .collect();
    out.sort_by(candidate_order);
    Ok(out)
}

fn candidate_order(p: &Candidate, q: &Candidate) -> Ordering {
    let rank = |c: &Candidate| c.label.as_deref().map_or(usize::MAX, label_rank);
    rank(p).cmp(&rank(q)).then_with(|| {
        (p.shape.s(), p.shape.a(), p.shape.b()).cmp(&(q.shape.s(), q.shape.a(), q.shape.b()))
    })
}

/// Candidates over every admissible spectrum of length `c2`, spectra in
/// listing order.
pub fn enumerate_all_candidates(
    c2: i64,
    class: ClassFilter,
    mode: Mode,
) -> Result<Vec<Candidate>, SpectrumError> {
    if c2 < 2 {
        return Err(SpectrumError::BadLength(c2.max(0) as usize));
    }
    let mut out = Vec::new();
    for x in enumerate_spectra(c2 as usize)? {
        out.extend(enumerate_candidates(c2, &x, class, mode)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(r: &str) -> Spectrum {
        Spectrum::parse_r(r).unwrap()
    }

    #[test]
    fn rho_examples() {
        let b = rho_bounds(&x("r0^2r1"));
        assert_eq!(b[&-2], (1, 1));
        assert_eq!(b[&-1], (0, 1));
        let b = rho_bounds(&x("r0r1^2"));
        assert_eq!((b[&-2], b[&-1]), ((2, 2), (0, 0)));
        let b = rho_bounds(&x("r0^2r1r2"));
        assert_eq!((b[&-3], b[&-2], b[&-1]), ((1, 1), (0, 0), (0, 1)));
    }

    #[test]
    fn b_examples() {
        assert_eq!(enumerate_b(&[2, 2], 6), vec![vec![0, 0, 2], vec![1, 1, 1]]);
        assert_eq!(enumerate_b(&[2], 6), vec![vec![0, 0]]);
        assert!(enumerate_b(&[1, 1, 1], 8).is_empty());
    }

    #[test]
    fn p4_and_p5_for_r0r1sq() {
        let c = enumerate_candidates(6, &x("r0r1^2"), ClassFilter::Positive, Mode::Strict).unwrap();
        let labels: Vec<_> = c.iter().map(|c| c.label.clone().unwrap()).collect();
        assert_eq!(labels, ["P4", "P5"]);
        assert!(c[0].obstructions.is_empty());
        assert!(!c[1].obstructions.is_empty());
    }
}

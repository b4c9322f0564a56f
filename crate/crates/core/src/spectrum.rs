//! Spectra of stable rank-2 bundles with odd determinant and their
//! cohomology profiles.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectrumError {
    #[error("spectrum length must be even and at least 2, got {0}")]
    BadLength(usize),
    #[error("not an admissible spectrum: {}", list_violations(.0))]
    NotAdmissible(Vec<Violation>),
    #[error("spectra of different lengths ({0} and {1}) are not comparable")]
    LengthMismatch(usize, usize),
    #[error("h2 values are only defined for l >= -2, got {0}")]
    TwistOutOfRange(i64),
    #[error("inconsistent profile: {0}")]
    InconsistentProfile(String),
    #[error("cannot parse spectrum {0:?}")]
    Parse(String),
}

/// Which admissibility property a multiset fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "property")]
pub enum Violation {
    Empty,
    /// `{k_i}` is not closed under `k -> -k-1`.
    Symmetry,
    /// A value strictly between two members is missing.
    Interval { missing: i64 },
    /// `u` occurs once but some value in `[-k, u]` occurs more than once.
    SingleOccurrence { u: i64, repeated: i64 },
}

impl Violation {
    pub fn tag(&self) -> &'static str {
        match self {
            Violation::Empty => "empty",
            Violation::Symmetry => "S.1",
            Violation::Interval { .. } => "S.2",
            Violation::SingleOccurrence { .. } => "S.4",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "empty multiset"),
            Violation::Symmetry => write!(f, "S.1 (not closed under k -> -k-1)"),
            Violation::Interval { missing } => write!(f, "S.2 ({missing} is missing)"),
            Violation::SingleOccurrence { u, repeated } => {
                write!(f, "S.4 ({u} occurs once but {repeated} repeats)")
            }
        }
    }
}

fn list_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn counts(values: &[i64]) -> BTreeMap<i64, usize> {
    let mut c = BTreeMap::new();
    for &v in values {
        *c.entry(v).or_insert(0) += 1;
    }
    c
}

/// Checks symmetry, the interval property and single-occurrence propagation.
/// Returns every violated property; empty means admissible.
pub fn admissibility_violations(values: &[i64]) -> Vec<Violation> {
    if values.is_empty() {
        return vec![Violation::Empty];
    }
    let c = counts(values);
    let mut out = Vec::new();
    if c.iter().any(|(&v, &n)| c.get(&(-v - 1)).copied().unwrap_or(0) != n) {
        out.push(Violation::Symmetry);
    }
    let (lo, hi) = (*c.keys().next().unwrap(), *c.keys().last().unwrap());
    if let Some(missing) = (lo..=hi).find(|v| !c.contains_key(v)) {
        out.push(Violation::Interval { missing });
    }
    let k = -lo;
    let occ = |v: i64| c.get(&v).copied().unwrap_or(0);
    'outer: for u in -k..=-2 {
        if occ(u) != 1 {
            continue;
        }
        for v in -k..=u {
            if occ(v) > 1 {
                out.push(Violation::SingleOccurrence { u, repeated: v });
                break 'outer;
            }
        }
    }
    out
}

pub fn is_admissible(values: &[i64]) -> bool {
    admissibility_violations(values).is_empty()
}

/// An admissible spectrum, stored as a non-descending list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Spectrum {
    values: Vec<i64>,
}

impl TryFrom<Vec<i64>> for Spectrum {
    type Error = SpectrumError;
    fn try_from(v: Vec<i64>) -> Result<Self, Self::Error> {
        Spectrum::new(v)
    }
}

impl From<Spectrum> for Vec<i64> {
    fn from(s: Spectrum) -> Self {
        s.values
    }
}

impl Spectrum {
    pub fn new(mut values: Vec<i64>) -> Result<Self, SpectrumError> {
        values.sort_unstable();
        let v = admissibility_violations(&values);
        if !v.is_empty() {
            return Err(SpectrumError::NotAdmissible(v));
        }
        Ok(Spectrum { values })
    }

    /// Builds `{r_0^{s_0} r_1^{s_1} ...}` from the multiplicities `s_j` of
    /// `r_j = {-j-1, j}`.
    pub fn from_multiplicities(s: &[usize]) -> Result<Self, SpectrumError> {
        Self::new(multiset_of(s))
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest value `k`.
    pub fn top(&self) -> i64 {
        *self.values.last().unwrap()
    }

    /// `s(j)` for `j = 0..=top`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut s = vec![0; self.top().max(0) as usize + 1];
        for &v in &self.values {
            if v >= 0 {
                s[v as usize] += 1;
            }
        }
        s
    }

    /// `h¹(E(l)) = Σ max(0, k_i + l + 2)` for `l <= -1`.
    pub fn h1(&self, l: i64) -> u64 {
        self.values.iter().map(|&k| (k + l + 2).max(0) as u64).sum()
    }

    /// `h²(E(l)) = Σ max(0, -k_i - l - 2)` for `l >= -2`.
    pub fn h2(&self, l: i64) -> Result<u64, SpectrumError> {
        if l < -2 {
            return Err(SpectrumError::TwistOutOfRange(l));
        }
        Ok(self.values.iter().map(|&k| (-k - l - 2).max(0) as u64).sum())
    }

    /// Label in the standard listing for lengths up to 8, e.g. `X^8_5`.
    pub fn catalog_label(&self) -> Option<String> {
        catalog_index(self).map(|i| format!("X^{}_{}", self.len(), i + 1))
    }

    /// ASCII r-notation such as `r0^2r1`.
    pub fn r_ascii(&self) -> String {
        self.multiplicities()
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(j, &m)| if m == 1 { format!("r{j}") } else { format!("r{j}^{m}") })
            .collect()
    }

    /// Parses `r0^2r1`, `{r0^2 r1}` or `r₀²r₁`.
    pub fn parse_r(src: &str) -> Result<Self, SpectrumError> {
        let err = || SpectrumError::Parse(src.to_string());
        let plain: String = src
            .chars()
            .filter(|c| !matches!(c, '{' | '}' | ' '))
            .map(|c| match c {
                '₀'..='₉' => char::from_digit(c as u32 - '₀' as u32, 10).unwrap(),
                _ => c,
            })
            .flat_map(|c| {
                let sup = "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|s| s == c);
                match sup {
                    Some(d) => vec!['^', char::from_digit(d as u32, 10).unwrap()],
                    None => vec![c],
                }
            })
            .collect();
        let mut s: Vec<usize> = Vec::new();
        for part in plain.split('r').skip(1) {
            let (j, m) = match part.split_once('^') {
                Some((j, m)) => (j, m.parse::<usize>().map_err(|_| err())?),
                None => (part, 1),
            };
            let j: usize = j.parse().map_err(|_| err())?;
            if s.len() <= j {
                s.resize(j + 1, 0);
            }
            s[j] += m;
        }
        if !plain.starts_with('r') || s.is_empty() {
            return Err(err());
        }
        Self::from_multiplicities(&s)
    }

    pub fn h1_profile(&self) -> H1Profile {
        h1_profile(self)
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SUB: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
        const SUP: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
        let digits = |n: usize, table: &[char; 10]| -> String {
            n.to_string()
                .chars()
                .map(|c| table[c.to_digit(10).unwrap() as usize])
                .collect()
        };
        write!(f, "{{")?;
        for (j, &m) in self.multiplicities().iter().enumerate() {
            if m == 0 {
                continue;
            }
            write!(f, "r{}", digits(j, &SUB))?;
            if m > 1 {
                write!(f, "{}", digits(m, &SUP))?;
            }
        }
        write!(f, "}}")
    }
}

fn multiset_of(s: &[usize]) -> Vec<i64> {
    let mut v = Vec::new();
    for (j, &m) in s.iter().enumerate() {
        for _ in 0..m {
            v.push(j as i64);
            v.push(-(j as i64) - 1);
        }
    }
    v.sort_unstable();
    v
}

/// The standard listing for `n <= 8`, as multiplicity vectors.
const CATALOG: &[&[&[usize]]] = &[
    &[&[1]],
    &[&[2], &[1, 1]],
    &[&[3], &[2, 1], &[1, 2], &[1, 1, 1]],
    &[
        &[4],
        &[3, 1],
        &[2, 2],
        &[2, 1, 1],
        &[1, 2, 1],
        &[1, 3],
        &[1, 1, 1, 1],
    ],
];

fn catalog_index(x: &Spectrum) -> Option<usize> {
    let n = x.len();
    if n == 0 || n > 8 || n % 2 == 1 {
        return None;
    }
    let m = x.multiplicities();
    CATALOG[n / 2 - 1].iter().position(|s| *s == m.as_slice())
}

/// Compares two spectra of equal length by their non-descending lists,
/// left-most difference first.
pub fn compare(x: &Spectrum, y: &Spectrum) -> Result<Ordering, SpectrumError> {
    if x.len() != y.len() {
        return Err(SpectrumError::LengthMismatch(x.len(), y.len()));
    }
    Ok(x.values.cmp(&y.values))
}

fn compositions(total: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(rem: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if rem == 0 {
            f(cur);
            return;
        }
        for m in 1..=rem {
            cur.push(m);
            go(rem - m, cur, f);
            cur.pop();
        }
    }
    go(total, &mut Vec::new(), f);
}

/// All admissible spectra of length `n`. Spectra from the standard listing
/// come first in its order; the rest follow in decreasing order.
pub fn enumerate_spectra(n: usize) -> Result<Vec<Spectrum>, SpectrumError> {
    if n < 2 || n % 2 == 1 {
        return Err(SpectrumError::BadLength(n));
    }
    let mut out = Vec::new();
    compositions(n / 2, &mut |s| {
        if let Ok(x) = Spectrum::from_multiplicities(s) {
            out.push(x);
        }
    });
    out.sort_by(|a, b| match (catalog_index(a), catalog_index(b)) {
        (Some(i), Some(j)) => i.cmp(&j),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => b.values.cmp(&a.values),
    });
    Ok(out)
}

/// `m_l = h¹(E(l))` on the window `-(k+3) <= l <= -1`; zero below it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct H1Profile {
    pub values: BTreeMap<i64, u64>,
}

impl H1Profile {
    pub fn get(&self, l: i64) -> u64 {
        self.values.get(&l).copied().unwrap_or(0)
    }

    pub fn lowest(&self) -> i64 {
        self.values.keys().next().copied().unwrap_or(-1)
    }

    /// `d_l = m_l - m_{l-1}` for `l` in the window, from the bottom up.
    pub fn first_differences(&self) -> Vec<(i64, i64)> {
        (self.lowest()..=-1)
            .map(|l| (l, self.get(l) as i64 - self.get(l - 1) as i64))
            .collect()
    }
}

pub fn h1_profile(x: &Spectrum) -> H1Profile {
    let lo = -(x.top() + 3);
    H1Profile {
        values: (lo..=-1).map(|l| (l, x.h1(l))).collect(),
    }
}

pub fn h2_value(x: &Spectrum, l: i64) -> Result<u64, SpectrumError> {
    x.h2(l)
}

/// Inverts [`h1_profile`]: `d_l = #{k_i >= -l-1}`, so second differences give
/// the multiplicities of the non-negative half.
pub fn spectrum_from_profile(profile: &H1Profile) -> Result<Spectrum, SpectrumError> {
    if profile.values.keys().any(|&l| l > -1) {
        return Err(SpectrumError::InconsistentProfile(
            "profile entries must have l <= -1".into(),
        ));
    }
    let lo = profile.lowest();
    let d = |l: i64| profile.get(l) as i64 - profile.get(l - 1) as i64;
    let lowest = lo - 1;
    for l in lowest..=-1 {
        if d(l) < 0 {
            return Err(SpectrumError::InconsistentProfile(format!(
                "negative first difference at l = {l}"
            )));
        }
        if l > lowest && d(l) < d(l - 1) {
            return Err(SpectrumError::InconsistentProfile(format!(
                "first differences decrease between l = {} and l = {l}",
                l - 1
            )));
        }
    }
    let mut s = Vec::new();
    let mut j = 0i64;
    while -j > lowest {
        s.push((d(-j - 1) - d(-j - 2)) as usize);
        j += 1;
    }
    while s.last() == Some(&0) {
        s.pop();
    }
    if s.is_empty() {
        return Err(SpectrumError::InconsistentProfile("profile is identically zero".into()));
    }
    Spectrum::from_multiplicities(&s)
}

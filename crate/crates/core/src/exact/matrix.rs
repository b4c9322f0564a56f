use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::field::{denominator_lcm, inv_mod, mul_mod, reduce_mod, FieldSpec};
use super::ExactError;

/// Dense matrix with exact entries over a [`FieldSpec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
    field: FieldSpec,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize, field: FieldSpec) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
            field,
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, field.from_i64(1));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>, field: FieldSpec) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::Dimension("ragged rows".into()));
        }
        let entries = rows.into_iter().flatten().map(|x| field.normalize(x)).collect();
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            entries,
            field,
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], field: FieldSpec) -> Result<Self, ExactError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigRational::from_integer(v.into())).collect())
                .collect(),
            field,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.cols + j] = self.field.normalize(v);
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.field != other.field {
            return Err(ExactError::FieldMismatch(self.field, other.field));
        }
        if self.cols != other.rows {
            return Err(ExactError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.entries[idx] = &out.entries[idx] + a * b;
                    }
                }
            }
        }
        for e in &mut out.entries {
            *e = self.field.normalize(std::mem::take(e));
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Result<Vec<BigRational>, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let s = self
                    .row(i)
                    .iter()
                    .zip(v)
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b);
                self.field.normalize(s)
            })
            .collect())
    }

    /// Exact rank. Over the rationals the rows are cleared of denominators and
    /// reduced with fraction-free Bareiss elimination.
    pub fn rank(&self) -> usize {
        match self.field {
            FieldSpec::Rational => bareiss_rank(self.integer_rows()),
            FieldSpec::Prime { p } => {
                let mut rows = self.mod_rows(p);
                rank_mod_p(&mut rows, self.cols, p)
            }
        }
    }

    /// Rank of the reduction modulo `p`. Entries must have denominators prime
    /// to `p`.
    pub fn rank_mod(&self, p: u64) -> usize {
        let mut rows = self.mod_rows(p);
        rank_mod_p(&mut rows, self.cols, p)
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = denominator_lcm(row.iter());
                row.iter()
                    .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
                    .collect()
            })
            .collect()
    }

    fn mod_rows(&self, p: u64) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| reduce_mod(x, p)).collect())
            .collect()
    }

    /// Reduced row echelon form together with its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        match self.field {
            FieldSpec::Rational => {
                let mut m = self.clone();
                let pivots = rref_rational(&mut m);
                (m, pivots)
            }
            FieldSpec::Prime { p } => {
                let mut rows = self.mod_rows(p);
                let pivots = rref_mod_p(&mut rows, self.cols, p);
                let m = ExactMatrix {
                    rows: self.rows,
                    cols: self.cols,
                    entries: rows
                        .into_iter()
                        .flatten()
                        .map(|v| BigRational::from_integer(v.into()))
                        .collect(),
                    field: self.field,
                };
                (m, pivots)
            }
        }
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = self.field.from_i64(1);
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = self.field.neg(r.get(k, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[BigRational]) -> Result<Option<Vec<BigRational>>, ExactError> {
        if b.len() != self.rows {
            return Err(ExactError::Dimension(format!(
                "right-hand side of length {} against {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.entries[i * (self.cols + 1) + j] = self.get(i, j).clone();
            }
            aug.entries[i * (self.cols + 1) + self.cols] = self.field.normalize(b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![BigRational::zero(); self.cols];
        for (k, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(k, self.cols).clone();
        }
        Ok(Some(x))
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pr = &top[rank];
        for row in rest.iter_mut() {
            let f = row[c].clone();
            for j in c..cols {
                let v = (&pr[c] * &row[j] - &f * &pr[j]) / &prev;
                row[j] = v;
            }
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

fn rref_rational(m: &mut ExactMatrix) -> Vec<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        if piv != r {
            for j in 0..cols {
                m.entries.swap(r * cols + j, piv * cols + j);
            }
        }
        let inv = m.get(r, c).recip();
        for j in c..cols {
            let idx = r * cols + j;
            m.entries[idx] = &m.entries[idx] * &inv;
        }
        for i in 0..rows {
            if i == r || m.get(i, c).is_zero() {
                continue;
            }
            let f = m.get(i, c).clone();
            for j in c..cols {
                let sub = &f * &m.entries[r * cols + j];
                let idx = i * cols + j;
                m.entries[idx] = &m.entries[idx] - sub;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank_mod_p(rows: &mut [Vec<u64>], cols: usize, p: u64) -> usize {
    let n = rows.len();
    let mut rank = 0;
    for c in 0..cols {
        if rank == n {
            break;
        }
        let Some(piv) = (rank..n).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][c], p);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let pr = &top[rank];
        for row in rest.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = mul_mod(row[c], inv, p);
            for j in c..cols {
                if pr[j] != 0 {
                    row[j] = (row[j] + p - mul_mod(f, pr[j], p)) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rref_mod_p(rows: &mut [Vec<u64>], cols: usize, p: u64) -> Vec<usize> {
    let n = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(piv) = (r..n).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = inv_mod(rows[r][c], p);
        for v in rows[r].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        let pr = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for j in c..cols {
                if pr[j] != 0 {
                    row[j] = (row[j] + p - mul_mod(f, pr[j], p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

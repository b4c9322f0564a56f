use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde_json::json;

use super::certificate::CertificateReport;
use super::instance::MonadInstance;
use super::VerifyError;
use crate::exact::{
    form_mul, monomial_basis, monomial_index, ExactMatrix, FieldSpec, GradedSpan, HomogeneousForm,
    Monomial, SpanOutcome, SCREEN_PRIME,
};
use crate::twist::hdim;

/// Degree grid and minimality: every nonzero entry has its grid degree, and
/// no entry is a nonzero constant.
pub fn validate(m: &MonadInstance) -> CertificateReport {
    let check = |name: &str, i: usize, j: usize, f: &HomogeneousForm, d: i64| {
        if f.is_zero() {
            return None;
        }
        if d < 0 || f.degree() as i64 != d {
            return Some(CertificateReport::fail(
                "validate",
                json!({"matrix": name, "row": i, "col": j, "entry": f.to_string(),
                       "expected_degree": d, "found_degree": f.degree(), "reason": "degree_grid"}),
            ));
        }
        if d == 0 {
            return Some(CertificateReport::fail(
                "validate",
                json!({"matrix": name, "row": i, "col": j, "entry": f.to_string(),
                       "expected_degree": 0, "reason": "minimality"}),
            ));
        }
        None
    };
    for (i, row) in m.alpha.iter().enumerate() {
        for (j, f) in row.iter().enumerate() {
            if let Some(r) = check("alpha", i, j, f, m.alpha_degree(i, j)) {
                return r;
            }
        }
    }
    for (j, row) in m.beta.iter().enumerate() {
        for (i, f) in row.iter().enumerate() {
            if let Some(r) = check("beta", j, i, f, m.beta_degree(j, i)) {
                return r;
            }
        }
    }
    CertificateReport::pass(
        "validate",
        json!({"alpha": [m.s(), m.middle.len()], "beta": [m.middle.len(), m.s()]}),
    )
}

/// Entrywise `α·β`.
pub fn alpha_beta(m: &MonadInstance) -> Result<Vec<Vec<HomogeneousForm>>, VerifyError> {
    let s = m.s();
    let mut out = Vec::with_capacity(s);
    for i in 0..s {
        let mut row = Vec::with_capacity(s);
        for k in 0..s {
            let deg = (m.a[i] + m.a[k] + 1).max(0) as u32;
            let mut acc = HomogeneousForm::zero(deg, m.field);
            for j in 0..m.middle.len() {
                let p = form_mul(&m.alpha[i][j], &m.beta[j][k])?;
                if !p.is_zero() {
                    acc = acc.try_add(&p)?;
                }
            }
            row.push(acc);
        }
        out.push(row);
    }
    Ok(out)
}

pub fn check_complex(m: &MonadInstance) -> CertificateReport {
    match alpha_beta(m) {
        Err(e) => CertificateReport::fail("complex", json!({"error": e.to_string()})),
        Ok(prod) => {
            for (i, row) in prod.iter().enumerate() {
                for (k, f) in row.iter().enumerate() {
                    if !f.is_zero() {
                        return CertificateReport::fail(
                            "complex",
                            json!({"row": i, "col": k, "entry": f.to_string()}),
                        );
                    }
                }
            }
            CertificateReport::pass("complex", json!({"entries_checked": m.s() * m.s()}))
        }
    }
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant(rows: &[Vec<HomogeneousForm>]) -> Result<HomogeneousForm, VerifyError> {
    let n = rows.len();
    let field = rows[0][0].field();
    if n == 1 {
        return Ok(rows[0][0].clone());
    }
    let mut acc: Option<HomogeneousForm> = None;
    for c in 0..n {
        if rows[0][c].is_zero() {
            continue;
        }
        let sub: Vec<Vec<HomogeneousForm>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, f)| f.clone()).collect())
            .collect();
        let minor = determinant(&sub)?;
        if minor.is_zero() {
            continue;
        }
        let mut term = form_mul(&rows[0][c], &minor)?;
        if c % 2 == 1 {
            term = term.neg();
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.try_add(&term)?,
        });
    }
    Ok(acc.unwrap_or_else(|| HomogeneousForm::zero(0, field)))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Nonzero `s x s` minors of α, taking `s` of its columns.
pub fn alpha_minors(m: &MonadInstance) -> Result<Vec<HomogeneousForm>, VerifyError> {
    let mut out = Vec::new();
    for cols in combinations(m.middle.len(), m.s()) {
        let sub: Vec<Vec<HomogeneousForm>> = m
            .alpha
            .iter()
            .map(|r| cols.iter().map(|&j| r[j].clone()).collect())
            .collect();
        let d = determinant(&sub)?;
        if !d.is_zero() {
            out.push(d);
        }
    }
    Ok(out)
}

/// Nonzero `s x s` minors of β, taking `s` of its rows.
pub fn beta_minors(m: &MonadInstance) -> Result<Vec<HomogeneousForm>, VerifyError> {
    let mut out = Vec::new();
    for rows in combinations(m.middle.len(), m.s()) {
        let sub: Vec<Vec<HomogeneousForm>> = rows.iter().map(|&j| m.beta[j].clone()).collect();
        let d = determinant(&sub)?;
        if !d.is_zero() {
            out.push(d);
        }
    }
    Ok(out)
}

/// Least `d <= d_max` at which the products `monomial * g` span every form
/// of degree `d`, so the generators have no common zero in P³.
///
/// Over the rationals the rank is taken modulo a large prime: full rank
/// there forces full rank over the rationals.
pub fn saturation_certificate(
    gens: &[HomogeneousForm],
    d_max: u32,
) -> Result<CertificateReport, VerifyError> {
    let Some(first) = gens.first() else {
        return Err(VerifyError::EmptyGenerators);
    };
    let field = first.field();
    if gens.iter().any(|g| g.field() != field) {
        return Err(VerifyError::Malformed("generators over different fields".into()));
    }
    let p = match field {
        FieldSpec::Rational => SCREEN_PRIME,
        FieldSpec::Prime { p } => p,
    };
    let report = match GradedSpan::first_full_degree(gens, d_max, p) {
        SpanOutcome::Full { degree, dimension } => {
            let r = CertificateReport::pass(
                "saturation",
                json!({"degree": degree, "dimension": dimension, "generators": gens.len(), "prime": p}),
            );
            if field.is_rational() {
                r.with_note(format!(
                    "spans all {dimension} forms of degree {degree} modulo {p}, hence over QQ"
                ))
            } else {
                r
            }
        }
        SpanOutcome::Exhausted {
            d_max,
            rank,
            dimension,
        } => CertificateReport::inconclusive(
            "saturation",
            json!({"d_max": d_max, "rank": rank, "dimension": dimension, "generators": gens.len()}),
        )
        .with_note(format!("no full degree up to {d_max}")),
    };
    Ok(report)
}

fn thin_line<'a>(entries: impl Iterator<Item = &'a HomogeneousForm>) -> Option<Vec<String>> {
    let nonzero: Vec<&HomogeneousForm> = entries.filter(|f| !f.is_zero()).collect();
    if nonzero.len() <= 3 && nonzero.iter().all(|f| f.degree() > 0) {
        Some(nonzero.iter().map(|f| f.to_string()).collect())
    } else {
        None
    }
}

const THIN_NOTE: &str = "at most three forms of positive degree always share a zero in P^3";

/// α is surjective at every point. A row of α with at most three nonzero
/// entries of positive degree fails outright.
pub fn check_surjective(m: &MonadInstance, d_max: u32) -> Result<CertificateReport, VerifyError> {
    for (i, row) in m.alpha.iter().enumerate() {
        if let Some(entries) = thin_line(row.iter()) {
            return Ok(CertificateReport::fail(
                "surjective",
                json!({"thin_row": i, "a": m.a[i], "entries": entries}),
            )
            .with_note(THIN_NOTE));
        }
    }
    let minors = alpha_minors(m)?;
    if minors.is_empty() {
        return Ok(CertificateReport::fail("surjective", json!({"nonzero_minors": 0})));
    }
    Ok(saturation_certificate(&minors, d_max)?.renamed("surjective"))
}

/// β is injective at every point, i.e. its image is a subbundle.
pub fn check_subbundle(m: &MonadInstance, d_max: u32) -> Result<CertificateReport, VerifyError> {
    for i in 0..m.s() {
        if let Some(entries) = thin_line(m.beta.iter().map(|r| &r[i])) {
            return Ok(CertificateReport::fail(
                "subbundle",
                json!({"thin_column": i, "a": m.a[i], "entries": entries}),
            )
            .with_note(THIN_NOTE));
        }
    }
    let minors = beta_minors(m)?;
    if minors.is_empty() {
        return Ok(CertificateReport::fail("subbundle", json!({"nonzero_minors": 0})));
    }
    Ok(saturation_certificate(&minors, d_max)?.renamed("subbundle"))
}

/// Matrix of `⊕_j H⁰(O(c_j - p)) -> ⊕_i H⁰(O(a_i - p))` induced by α, with
/// the monomial bases of each block.
pub struct GradedMap {
    pub matrix: ExactMatrix,
    pub col_blocks: Vec<(usize, Vec<Monomial>)>,
}

pub fn phi_matrix(m: &MonadInstance, p: i64) -> Result<GradedMap, VerifyError> {
    let mut row_offset = Vec::new();
    let mut row_index: Vec<HashMap<Monomial, usize>> = Vec::new();
    let mut rows = 0usize;
    for &a in &m.a {
        row_offset.push(rows);
        let d = a - p;
        if d >= 0 {
            row_index.push(monomial_index(d as u32));
            rows += hdim(d) as usize;
        } else {
            row_index.push(HashMap::new());
        }
    }
    let mut col_blocks = Vec::new();
    let mut cols = 0usize;
    for (j, &c) in m.middle.0.iter().enumerate() {
        let d = c - p;
        if d >= 0 {
            let basis = monomial_basis(d as u32);
            cols += basis.len();
            col_blocks.push((j, basis));
        }
    }
    let mut mat = ExactMatrix::zeros(rows, cols, m.field);
    let mut col = 0;
    for (j, basis) in &col_blocks {
        for mu in basis {
            for (i, row) in m.alpha.iter().enumerate() {
                let f = &row[*j];
                if f.is_zero() {
                    continue;
                }
                for (t, c) in f.terms() {
                    let prod = t.mul(mu);
                    let r = row_index[i].get(&prod).ok_or_else(|| {
                        VerifyError::Malformed(format!("alpha[{i}][{j}] does not match its grid degree"))
                    })?;
                    mat.set(row_offset[i] + r, col, c.clone());
                }
            }
            col += 1;
        }
    }
    Ok(GradedMap {
        matrix: mat,
        col_blocks,
    })
}

fn require_non_negative(m: &MonadInstance) -> Result<(), VerifyError> {
    if m.a.iter().any(|&a| a < 0) {
        return Err(VerifyError::NegativeShape(m.a.clone()));
    }
    Ok(())
}

/// Dimension of the degree-`p` syzygies of α: maps `O(p) -> B` killed by α.
pub fn syzygy_dim(m: &MonadInstance, p: i64) -> Result<usize, VerifyError> {
    require_non_negative(m)?;
    let g = phi_matrix(m, p)?;
    Ok(g.matrix.cols() - g.matrix.rank())
}

/// Stable iff there is no syzygy of degree 0.
pub fn is_stable(m: &MonadInstance) -> Result<CertificateReport, VerifyError> {
    require_non_negative(m)?;
    let g = phi_matrix(m, 0)?;
    let kernel = g.matrix.kernel_basis();
    if kernel.is_empty() {
        return Ok(CertificateReport::pass(
            "stable",
            json!({"degree": 0, "syzygy_dim": 0, "map_size": [g.matrix.rows(), g.matrix.cols()]}),
        ));
    }
    let v = &kernel[0];
    let mut col = 0;
    let mut entries = vec!["0".to_string(); m.middle.len()];
    for (j, basis) in &g.col_blocks {
        let terms: Vec<(Monomial, BigRational)> = basis
            .iter()
            .zip(&v[col..col + basis.len()])
            .filter(|(_, c)| !c.is_zero())
            .map(|(mu, c)| (*mu, c.clone()))
            .collect();
        let deg = basis.first().map_or(0, Monomial::degree);
        entries[*j] = HomogeneousForm::from_terms(deg, m.field, terms)?.to_string();
        col += basis.len();
    }
    Ok(CertificateReport::fail(
        "stable",
        json!({"degree": 0, "syzygy_dim": kernel.len(), "syzygy": entries}),
    ))
}

use num_rational::BigRational;
use num_traits::Zero;
use serde_json::json;

use super::certificate::CertificateReport;
use super::checks::determinant;
use super::instance::MonadInstance;
use super::VerifyError;
use crate::exact::{form_mul, monomial_basis, monomial_index, ExactMatrix, HomogeneousForm, Monomial};

/// Involution on the middle summands matching each twist `c` with `-c-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    partner: Vec<usize>,
}

impl Pairing {
    pub fn new(middle: &[i64], partner: Vec<usize>) -> Result<Self, VerifyError> {
        let ok = partner.len() == middle.len()
            && partner.iter().enumerate().all(|(l, &p)| {
                p < middle.len() && partner[p] == l && middle[p] == -middle[l] - 1
            });
        if !ok {
            return Err(VerifyError::Unpairable(middle.to_vec()));
        }
        Ok(Pairing { partner })
    }

    /// Each non-negative twist, in order, takes the first free summand of
    /// the opposite twist.
    pub fn natural(middle: &[i64]) -> Result<Self, VerifyError> {
        let mut partner = vec![usize::MAX; middle.len()];
        for l in 0..middle.len() {
            if middle[l] < 0 {
                continue;
            }
            let p = (0..middle.len())
                .find(|&q| partner[q] == usize::MAX && middle[q] == -middle[l] - 1)
                .ok_or_else(|| VerifyError::Unpairable(middle.to_vec()))?;
            partner[l] = p;
            partner[p] = l;
        }
        Self::new(middle, partner)
    }

    pub fn partner(&self, l: usize) -> usize {
        self.partner[l]
    }

    /// Entry `Ω[l][partner(l)]`: `+1` on the non-negative side.
    pub fn sign(&self, middle: &[i64], l: usize) -> i64 {
        if middle[l] >= 0 {
            1
        } else {
            -1
        }
    }

    /// The symplectic matrix `Ω` on the middle term.
    pub fn omega(&self, middle: &[i64]) -> Vec<Vec<i64>> {
        let n = middle.len();
        let mut w = vec![vec![0; n]; n];
        for l in 0..n {
            w[l][self.partner[l]] = self.sign(middle, l);
        }
        w
    }
}

/// `α = β*(-1)∘Ω`.
pub fn build_alpha_from_beta(
    beta: &[Vec<HomogeneousForm>],
    middle: &[i64],
    pairing: &Pairing,
) -> Vec<Vec<HomogeneousForm>> {
    let s = beta.first().map_or(0, Vec::len);
    (0..s)
        .map(|i| {
            (0..middle.len())
                .map(|l| {
                    let p = pairing.partner(l);
                    let f = &beta[p][i];
                    if pairing.sign(middle, p) > 0 {
                        f.clone()
                    } else {
                        f.neg()
                    }
                })
                .collect()
        })
        .collect()
}

/// `β*(-1)∘Ω∘β`, an `s x s` matrix that is skew by construction.
pub fn residual(
    beta: &[Vec<HomogeneousForm>],
    middle: &[i64],
    pairing: &Pairing,
) -> Result<Vec<Vec<HomogeneousForm>>, VerifyError> {
    let alpha = build_alpha_from_beta(beta, middle, pairing);
    let s = alpha.len();
    let mut out = Vec::with_capacity(s);
    for row in &alpha {
        let mut r = Vec::with_capacity(s);
        for k in 0..s {
            let mut acc: Option<HomogeneousForm> = None;
            for (l, f) in row.iter().enumerate() {
                let p = form_mul(f, &beta[l][k])?;
                acc = Some(match acc {
                    None => p,
                    Some(a) => a.try_add(&p)?,
                });
            }
            r.push(acc.expect("middle term is never empty"));
        }
        out.push(r);
    }
    Ok(out)
}

pub fn residual_report(m: &MonadInstance, pairing: &Pairing) -> Result<CertificateReport, VerifyError> {
    let r = residual(&m.beta, m.middle_twists(), pairing)?;
    let s = r.len();
    for i in 0..s {
        for k in 0..s {
            if !r[i][k].try_add(&r[k][i])?.is_zero() {
                return Ok(CertificateReport::fail(
                    "selfdual_residual",
                    json!({"row": i, "col": k, "reason": "residual is not skew"}),
                ));
            }
        }
    }
    for (i, row) in r.iter().enumerate() {
        for (k, f) in row.iter().enumerate() {
            if !f.is_zero() {
                return Ok(CertificateReport::fail(
                    "selfdual_residual",
                    json!({"row": i, "col": k, "entry": f.to_string()}),
                ));
            }
        }
    }
    Ok(CertificateReport::pass("selfdual_residual", json!({"size": s, "skew": true})))
}

/// Looks for a graded automorphism `u` of `⊕O(a_i)` with `α = u·α'`, where
/// `α'` is built from β. Passes with `u` as witness.
pub fn compare_alpha(m: &MonadInstance, pairing: &Pairing) -> Result<CertificateReport, VerifyError> {
    let built = build_alpha_from_beta(&m.beta, m.middle_twists(), pairing);
    let s = m.s();
    let middle = m.middle_twists();
    let mut u: Vec<Vec<HomogeneousForm>> = Vec::with_capacity(s);
    for i in 0..s {
        // unknowns: coefficients of u[i][k] in degree a_i - a_k
        let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
        for k in 0..s {
            let d = m.a[i] - m.a[k];
            if d >= 0 {
                unknowns.extend(monomial_basis(d as u32).into_iter().map(|mu| (k, mu)));
            }
        }
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        let mut rhs: Vec<BigRational> = Vec::new();
        for (l, &c) in middle.iter().enumerate() {
            let d = m.a[i] - c;
            if d < 0 {
                continue;
            }
            let index = monomial_index(d as u32);
            let base = rows.len();
            rows.extend((0..index.len()).map(|_| vec![BigRational::zero(); unknowns.len()]));
            rhs.extend((0..index.len()).map(|_| BigRational::zero()));
            for (t, coeff) in m.alpha[i][l].terms() {
                rhs[base + index[t]] = coeff.clone();
            }
            for (col, (k, mu)) in unknowns.iter().enumerate() {
                for (t, coeff) in built[*k][l].terms() {
                    let r = index.get(&t.mul(mu)).ok_or_else(|| {
                        VerifyError::Malformed(format!("alpha[{i}][{l}] does not match its grid degree"))
                    })?;
                    rows[base + r][col] = coeff.clone();
                }
            }
        }
        let mat = ExactMatrix::from_rows(rows, m.field)?;
        let Some(sol) = mat.solve(&rhs)? else {
            return Ok(CertificateReport::fail(
                "selfdual_compare",
                json!({"row": i, "reason": "row of alpha is not a graded combination of the built rows"}),
            ));
        };
        let mut row = Vec::with_capacity(s);
        for k in 0..s {
            let d = (m.a[i] - m.a[k]).max(0) as u32;
            let terms = unknowns
                .iter()
                .zip(&sol)
                .filter(|((kk, _), c)| *kk == k && !c.is_zero())
                .map(|((_, mu), c)| (*mu, c.clone()));
            row.push(HomogeneousForm::from_terms(d, m.field, terms)?);
        }
        u.push(row);
    }
    let det = determinant(&u)?;
    let shown: Vec<Vec<String>> = u.iter().map(|r| r.iter().map(|f| f.to_string()).collect()).collect();
    if det.is_zero() || det.degree() != 0 {
        return Ok(CertificateReport::fail(
            "selfdual_compare",
            json!({"u": shown, "det": det.to_string(), "reason": "u is not invertible"}),
        ));
    }
    Ok(CertificateReport::pass("selfdual_compare", json!({"u": shown, "det": det.to_string()})))
}

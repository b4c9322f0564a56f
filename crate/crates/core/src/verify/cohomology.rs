use std::collections::BTreeMap;

use serde::Serialize;

use super::certificate::{CertificateReport, Status};
use super::checks::{check_complex, check_subbundle, check_surjective, is_stable, phi_matrix, validate};
use super::instance::MonadInstance;
use super::VerifyError;
use crate::spectrum::{spectrum_from_profile, H1Profile, Spectrum};
use crate::twist::hdim;

/// An instance whose validate, complex, subbundle and surjective checks all
/// passed, so its cohomology is a rank-2 bundle.
#[derive(Debug, Clone)]
pub struct CertifiedMonad {
    instance: MonadInstance,
    reports: Vec<CertificateReport>,
}

impl CertifiedMonad {
    pub fn instance(&self) -> &MonadInstance {
        &self.instance
    }

    pub fn reports(&self) -> &[CertificateReport] {
        &self.reports
    }

    pub(crate) fn from_reports(
        instance: &MonadInstance,
        reports: &[CertificateReport],
    ) -> Result<Self, VerifyError> {
        for name in ["validate", "complex", "subbundle", "surjective"] {
            match reports.iter().find(|r| r.check == name) {
                Some(r) if r.status == Status::Pass => {}
                Some(r) => return Err(VerifyError::Uncertified(format!("{name} is {}", r.status))),
                None => return Err(VerifyError::Uncertified(format!("{name} was not run"))),
            }
        }
        Ok(CertifiedMonad {
            instance: instance.clone(),
            reports: reports.to_vec(),
        })
    }
}

pub fn certify(m: &MonadInstance, d_max: u32) -> Result<CertifiedMonad, VerifyError> {
    let mut reports = vec![validate(m)];
    if reports[0].passed() {
        reports.push(check_complex(m));
        reports.push(check_subbundle(m, d_max)?);
        reports.push(check_surjective(m, d_max)?);
    }
    CertifiedMonad::from_reports(m, &reports)
}

/// `h¹(E(l))`: the cokernel of `H⁰(B(l)) -> H⁰(A(l))`.
pub fn h1(m: &MonadInstance, l: i64) -> Result<u64, VerifyError> {
    let g = phi_matrix(m, -l)?;
    Ok((g.matrix.rows() - g.matrix.rank()) as u64)
}

/// `h⁰(E(l))`: sections of `B(l)` killed by α, modulo the image of `C(l)`.
pub fn h0(m: &MonadInstance, l: i64) -> Result<u64, VerifyError> {
    let g = phi_matrix(m, -l)?;
    let kernel = g.matrix.cols() - g.matrix.rank();
    let from_c: u64 = m.a.iter().map(|&a| hdim(-a - 1 + l)).sum();
    Ok(kernel as u64 - from_c)
}

pub fn h2(m: &MonadInstance, l: i64) -> Result<u64, VerifyError> {
    h1(m, -l - 3)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub l_min: i64,
    pub l_max: i64,
    pub values: BTreeMap<(u8, i64), u64>,
}

impl CohomologyTable {
    pub fn get(&self, i: u8, l: i64) -> Option<u64> {
        self.values.get(&(i, l)).copied()
    }
}

impl std::fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:>4}", "l")?;
        for l in self.l_min..=self.l_max {
            write!(f, "{l:>6}")?;
        }
        for i in 0..3u8 {
            write!(f, "\nh^{i} ")?;
            for l in self.l_min..=self.l_max {
                write!(f, "{:>6}", self.values[&(i, l)])?;
            }
        }
        Ok(())
    }
}

pub fn cohomology_table(
    c: &CertifiedMonad,
    l_min: i64,
    l_max: i64,
) -> Result<CohomologyTable, VerifyError> {
    let m = &c.instance;
    let mut values = BTreeMap::new();
    for l in l_min..=l_max {
        values.insert((0, l), h0(m, l)?);
        values.insert((1, l), h1(m, l)?);
        values.insert((2, l), h2(m, l)?);
    }
    Ok(CohomologyTable { l_min, l_max, values })
}

/// Reads the spectrum off `h¹(E(l))` for `l <= -1`, walking down until the
/// profile vanishes.
pub fn spectrum_of(c: &CertifiedMonad) -> Result<Spectrum, VerifyError> {
    let m = &c.instance;
    let stable = is_stable(m)?;
    if !stable.passed() {
        return Err(VerifyError::Uncertified("instance is not stable".into()));
    }
    let floor = -(m.shape().c2() + 4);
    let mut values = BTreeMap::new();
    let mut l = -1;
    loop {
        let v = h1(m, l)?;
        if v == 0 {
            break;
        }
        values.insert(l, v);
        l -= 1;
        if l < floor {
            return Err(VerifyError::ProfileInversion(format!(
                "h1(E(l)) still nonzero at l = {floor}"
            )));
        }
    }
    let spectrum = spectrum_from_profile(&H1Profile { values })
        .map_err(|e| VerifyError::ProfileInversion(e.to_string()))?;
    if spectrum.len() as i64 != m.shape().c2() {
        return Err(VerifyError::ProfileInversion(format!(
            "spectrum {} has length {} but c2 = {}",
            spectrum,
            spectrum.len(),
            m.shape().c2()
        )));
    }
    Ok(spectrum)
}

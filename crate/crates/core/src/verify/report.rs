use serde::Serialize;
use serde_json::json;

use super::certificate::{overall, CertificateReport, Status};
use super::checks::{check_complex, check_subbundle, check_surjective, is_stable, validate};
use super::cohomology::{spectrum_of, CertifiedMonad};
use super::instance::MonadInstance;
use super::VerifyError;
use crate::exact::FieldSpec;
use crate::shapes::MonadShape;
use crate::spectrum::Spectrum;

pub const DEFAULT_DMAX: u32 = 24;

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub instance: String,
    pub shape: String,
    #[serde(skip)]
    pub monad_shape: MonadShape,
    pub c2: i64,
    pub field: FieldSpec,
    pub d_max: u32,
    pub reports: Vec<CertificateReport>,
    pub spectrum: Option<String>,
    pub status: Status,
}

impl VerificationReport {
    /// 0 all pass, 1 any fail, 2 otherwise inconclusive.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        }
    }

    pub fn report(&self, check: &str) -> Option<&CertificateReport> {
        self.reports.iter().find(|r| r.check == check)
    }
}

fn skipped(check: &str, why: &str) -> CertificateReport {
    CertificateReport::inconclusive(check, json!({"skipped": why}))
}

/// Runs validate, complex, subbundle, surjective, stable, spectrum and c2 in
/// that order. Later checks that need an earlier one are reported
/// inconclusive when it did not pass.
pub fn verify_instance(m: &MonadInstance, d_max: u32) -> Result<VerificationReport, VerifyError> {
    let mut reports = vec![validate(m)];
    let valid = reports[0].passed();
    if valid {
        reports.push(check_complex(m));
        reports.push(check_subbundle(m, d_max)?);
        reports.push(check_surjective(m, d_max)?);
    } else {
        for c in ["complex", "subbundle", "surjective"] {
            reports.push(skipped(c, "validate did not pass"));
        }
    }
    let negative = m.a.iter().any(|&a| a < 0);
    let stable = if !valid {
        skipped("stable", "validate did not pass")
    } else if negative {
        skipped("stable", "negative shape").with_note("no syzygy test for negative shapes")
    } else {
        is_stable(m)?
    };
    let stable_ok = stable.passed();
    reports.push(stable);

    let mut spectrum: Option<Spectrum> = None;
    let spec_report = match CertifiedMonad::from_reports(m, &reports) {
        Ok(c) if stable_ok => match spectrum_of(&c) {
            Ok(x) => {
                let witness = json!({"spectrum": x.r_ascii(), "h1": x.h1_profile().values});
                let r = match &m.expected_spectrum {
                    Some(e) if e != &x => CertificateReport::fail(
                        "spectrum",
                        json!({"computed": x.r_ascii(), "expected": e.r_ascii()}),
                    ),
                    Some(_) => CertificateReport::pass("spectrum", witness),
                    None => CertificateReport::pass("spectrum", witness)
                        .with_note("no expected spectrum given"),
                };
                spectrum = Some(x);
                r
            }
            Err(e) => CertificateReport::fail("spectrum", json!({"error": e.to_string()})),
        },
        _ => skipped("spectrum", "instance is not a certified stable bundle"),
    };
    reports.push(spec_report);

    let c2 = m.shape().c2();
    let c2_report = match &spectrum {
        Some(x) if x.len() as i64 == c2 => {
            CertificateReport::pass("c2", json!({"c2": c2, "spectrum_length": x.len()}))
        }
        Some(x) => CertificateReport::fail("c2", json!({"c2": c2, "spectrum_length": x.len()})),
        None => CertificateReport::pass("c2", json!({"c2": c2}))
            .with_note("from the shape only; no spectrum to compare"),
    };
    reports.push(c2_report);

    let status = overall(&reports);
    Ok(VerificationReport {
        instance: m.display_name(),
        shape: m.shape().to_string(),
        monad_shape: m.shape().clone(),
        c2,
        field: m.field,
        d_max,
        reports,
        spectrum: spectrum.map(|x| x.r_ascii()),
        status,
    })
}

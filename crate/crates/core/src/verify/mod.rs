//! Verification of explicit monads over the polynomial ring in `x, y, z, w`.

mod certificate;
mod checks;
mod cohomology;
mod fixtures;
mod instance;
mod report;
mod selfdual;

use thiserror::Error;

use crate::exact::ExactError;
use crate::shapes::ShapeError;
use crate::spectrum::SpectrumError;

pub use certificate::{overall, CertificateReport, Status};
pub use checks::{
    alpha_beta, alpha_minors, beta_minors, check_complex, check_subbundle, check_surjective,
    determinant, is_stable, phi_matrix, saturation_certificate, syzygy_dim, validate, GradedMap,
};
pub use cohomology::{certify, cohomology_table, h0, h1, h2, spectrum_of, CertifiedMonad, CohomologyTable};
pub use fixtures::{fixture, fixture_names, hartshorne_instance, FIXTURES};
pub use instance::{InstanceFile, MonadInstance};
pub use report::{verify_instance, VerificationReport, DEFAULT_DMAX};
pub use selfdual::{build_alpha_from_beta, compare_alpha, residual, residual_report, Pairing};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("middle twists {0:?} do not split into pairs c, -c-1")]
    Unpairable(Vec<i64>),
    #[error("malformed instance: {0}")]
    Malformed(String),
    #[error("{0}")]
    Io(String),
    #[error("saturation needs at least one generator")]
    EmptyGenerators,
    #[error("negative shape a = {0:?} has no syzygy test")]
    NegativeShape(Vec<i64>),
    #[error("instance is not certified: {0}")]
    Uncertified(String),
    #[error("h1 profile does not invert to a spectrum: {0}")]
    ProfileInversion(String),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

//! Stable rank-2 bundles with odd determinant on P³: admissible spectra,
//! candidate minimal Horrocks monads, explicit monad verification and
//! family dimensions.

pub mod exact;
pub mod moduli;
pub mod shapes;
pub mod spectrum;
pub mod twist;
pub mod verify;

pub use exact::{ExactError, ExactMatrix, FieldSpec, HomogeneousForm, Monomial};
pub use moduli::{family_dimension, DimensionRecord};
pub use shapes::{
    enumerate_candidates, Candidate, ClassFilter, Mode, MonadShape, Obstruction, ShapeError,
};
pub use spectrum::{enumerate_spectra, Spectrum, SpectrumError};
pub use twist::{hdim, TwistList};
pub use verify::{verify_instance, CertificateReport, MonadInstance, Status, VerifyError};

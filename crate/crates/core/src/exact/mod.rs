//! Exact scalars, homogeneous forms in four variables and dense linear algebra.

mod field;
mod form;
mod matrix;
mod modp;
mod monomial;
mod parse;

use thiserror::Error;

pub use field::{
    denominator_lcm, inv_mod, mul_mod, pow_mod, reduce_mod, FieldSpec, SCREEN_PRIME, SPEED_PRIME,
};
pub use form::{form_mul, HomogeneousForm};
pub use matrix::ExactMatrix;
pub use modp::{GradedSpan, SpanOutcome};
pub use monomial::{binom3, monomial_basis, monomial_index, Monomial, VARIABLES};
pub use parse::parse_form;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("{0} is not an odd prime below 2^31")]
    InvalidPrime(u64),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("cannot parse {input:?} at byte {pos}: {msg}")]
    Parse {
        input: String,
        pos: usize,
        msg: String,
    },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

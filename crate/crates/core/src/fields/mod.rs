//! Quadratic and biquadratic number fields: fundamental units, class groups of
//! binary forms, split primes, p-units and the biquadratic configuration.

mod biquad;
mod forms;
mod quadratic;

pub use biquad::{build_biquad, BiquadConfig, BiquadElement, BiquadField, GaloisElement};
pub use forms::{class_number_forms, reduced_forms, BinaryForm, ClassGroup};
pub use quadratic::{
    class_number, fundamental_unit, is_fundamental, is_unit, kronecker, p_unit, split_prime, QuadElement, QuadField,
    SplitPrime,
};

use crate::padic::PadicError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("{0} is neither a fundamental discriminant nor a squarefree integer")]
    NotFundamental(i64),
    #[error("expected an imaginary quadratic field, got discriminant {0}")]
    NotImaginary(i64),
    #[error("expected a real quadratic field, got discriminant {0}")]
    NotReal(i64),
    #[error("{p} does not split in the field of discriminant {disc}")]
    PrimeNotSplit { p: u64, disc: i64 },
    #[error("{0} does not split completely in the biquadratic field")]
    PrimeNotSplitCompletely(u64),
    #[error("norm equation search exhausted its window")]
    SearchExhausted,
    #[error(transparent)]
    Padic(#[from] PadicError),
}

#[cfg(test)]
mod tests;

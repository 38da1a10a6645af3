//! Class-group characters of imaginary quadratic fields, their weight-one theta series,
//! p-stabilization and the action of `U_p` and `T_l` on exact q-expansions.

mod characters;
mod check;
mod cyclo;
mod qexp;

#[cfg(test)]
mod tests;

pub use characters::{class_characters, ClassCharacter};
pub use check::{prime_values, up_identity_check, UpCheck};
pub use cyclo::{cyclotomic_poly, Cyclo};
pub use qexp::{hecke_tl, p_stabilize, theta_qexp, up_action, QExpansion};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ThetaError {
    #[error("field of discriminant {0} is not imaginary quadratic")]
    NotImaginary(i64),
    #[error("the trivial character gives an Eisenstein series")]
    CharacterDescends,
    #[error("psi(p) differs from psi(pbar) at p = {0}: the stabilization is not unique")]
    RegularCase(u64),
    #[error("{0} does not split")]
    PrimeNotSplit(u64),
    #[error("{0} divides the level")]
    BadPrime(u64),
    #[error("the expansion is too short for this operator")]
    LengthExhausted,
    #[error("U_p identity fails at coefficient {0}")]
    IdentityFails(usize),
    #[error(transparent)]
    Field(#[from] crate::fields::FieldError),
}

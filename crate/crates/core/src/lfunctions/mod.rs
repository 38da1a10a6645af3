//! Dirichlet characters, generalized Bernoulli numbers and Kubota-Leopoldt p-adic
//! L-functions, with Leopoldt's formula at `s = 1` as an independent route.

mod bernoulli;
mod character;
mod leopoldt;
mod series;

#[cfg(test)]
mod tests;

pub use bernoulli::{
    bernoulli_numbers, bernoulli_poly, classical_l_at_nonpos, gen_bernoulli, gen_bernoulli_padic, interpolation_value,
};
pub use character::{parse_character, DirichletCharacter};
pub use leopoldt::leopoldt_at_one;
pub use series::{kl_derivative, kubota_leopoldt, symmetric_derivative, Derivative, PadicLSeries};

use crate::padic::PadicError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LError {
    #[error("the p-adic zeta function has a pole at s = 1")]
    PoleAtOne,
    #[error("odd character {0}: twist by an odd power of omega first")]
    OddCharacter(String),
    #[error("precision exhausted: {got} digits available, {wanted} requested")]
    PrecisionExhausted { got: i64, wanted: i64 },
    #[error("invalid character: {0}")]
    InvalidCharacter(String),
    #[error("no primitive root of unity of order {0} could be constructed")]
    RootOfUnityConstructionFailed(u64),
    #[error(transparent)]
    Padic(#[from] PadicError),
}

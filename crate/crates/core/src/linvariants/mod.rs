//! Regulators and L-invariants of a biquadratic configuration, the general regulator
//! over an externally supplied unit table, and the cyclotomic factorization checks.

mod factorization;
mod regulators;
mod table;


pub use factorization::{cyclotomic_ell, fg_check, gross_cyclotomic, simple_zero_check, CheckResult, SimpleZeroReport};
pub use regulators::{ell_frak_p, ell_from_generator, ell_minus, report, slope, EllMinus, LInvariantReport};
pub use table::{general_regulator, quadratic_table, TableValue, UnitTable};

use crate::fields::FieldError;
use crate::lfunctions::LError;
use crate::padic::PadicError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinvError {
    #[error("the slope denominator vanishes to the working precision")]
    DenominatorVanishesToPrecision,
    #[error("the two routes for L_- agree on only {agreement} digits, {required} required")]
    RoutesDisagree { agreement: i64, required: i64 },
    #[error("incomplete unit table: {0}")]
    IncompleteTable(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    L(#[from] LError),
    #[error(transparent)]
    Padic(#[from] PadicError),
}

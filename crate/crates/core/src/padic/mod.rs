//! p-adic scalars under a capped relative precision model, the Iwasawa logarithm,
//! Teichmüller lifts, Hensel lifting and unramified extensions.

mod analytic;
mod ext;
mod scalar;

pub use analytic::{
    hensel_root, iwasawa_log, padic_exp, smaller_sqrt_residue, sqrt_from_smaller_seed, teichmuller,
    teichmuller_of_residue,
};
pub use ext::{cyclotomic_ext, ext_log, order_mod, ExtElement, UnramifiedExt};
pub use scalar::{check_prime, mod_inverse, ppow, val_int, Padic};
pub(crate) use analytic::ilog;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PadicError {
    #[error("division by a value that is zero to the working precision")]
    DivisionByImpreciseZero,
    #[error("argument is not a p-adic unit")]
    NotAUnit,
    #[error("unsupported prime {0}: an odd prime is required")]
    UnsupportedPrime(u64),
    #[error("argument lies outside the convergence domain")]
    OutsideConvergenceDomain,
    #[error("seed is a multiple root modulo p")]
    NotSimpleRoot,
    #[error("seed is not a root modulo p")]
    RootSeedInvalid,
    #[error("argument is not a unit of the extension")]
    NotAUnitInExtension,
    #[error("value is not integral")]
    NotIntegral,
    #[error("extension element does not lie in the base field")]
    NotInBaseField,
    #[error("malformed p-adic JSON: {0}")]
    Json(String),
}

#[derive(Serialize, Deserialize)]
struct PadicJson {
    p: u64,
    val: Value,
    digits: Vec<u64>,
    prec: i64,
}

/// JSON form `{"p", "val", "digits", "prec"}`; digits are little-endian base `p` digits
/// of the unit part and `prec` its relative precision. A zero-to-precision value has
/// `"val": "inf"`, no digits, and its absolute precision in `prec`.
impl Serialize for Padic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let j = match self.valuation() {
            None => PadicJson { p: self.p(), val: Value::from("inf"), digits: vec![], prec: self.abs_prec() },
            Some(v) => PadicJson { p: self.p(), val: Value::from(v), digits: self.digits(), prec: self.rel_prec() as i64 },
        };
        j.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Padic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PadicJson::deserialize(d)?;
        padic_from_json(j).map_err(serde::de::Error::custom)
    }
}

fn padic_from_json(j: PadicJson) -> Result<Padic, PadicError> {
    check_prime(j.p)?;
    if j.val.as_str() == Some("inf") {
        return Ok(Padic::zero(j.p, j.prec));
    }
    let val = j.val.as_i64().ok_or_else(|| PadicError::Json("val must be an integer or \"inf\"".into()))?;
    if j.prec < 0 || j.digits.len() as i64 > j.prec {
        return Err(PadicError::Json("digit count exceeds precision".into()));
    }
    if j.digits.iter().any(|&d| d >= j.p) {
        return Err(PadicError::Json("digit out of range".into()));
    }
    let mut x = BigUint::from(0u32);
    for d in j.digits.iter().rev() {
        x = x * j.p + *d;
    }
    Ok(Padic::from_parts(j.p, val, x, j.prec as u32))
}

#[cfg(test)]
mod tests;

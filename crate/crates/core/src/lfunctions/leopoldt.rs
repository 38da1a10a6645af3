use num_bigint::BigInt;

use super::{DirichletCharacter, LError};
use crate::padic::{check_prime, cyclotomic_ext, ext_log, ExtElement, Padic};

/// `L_p(chi, 1) = -(1 - chi(p)/p) (tau(chi)/f) sum_a chi(a) log_p(1 - zeta^a)` for an even
/// nontrivial quadratic character of conductor `f` prime to `p`, with `zeta` a primitive
/// `f`-th root of unity in an unramified extension.
pub fn leopoldt_at_one(chi: &DirichletCharacter, p: u64, prec: u32) -> Result<Padic, LError> {
    check_prime(p)?;
    if chi.is_trivial() {
        return Err(LError::PoleAtOne);
    }
    if !chi.is_rational() {
        return Err(LError::InvalidCharacter(format!("{chi}: quadratic characters only")));
    }
    if !chi.is_even() {
        return Err(LError::OddCharacter(chi.to_string()));
    }
    let f = chi.conductor();
    if f % p == 0 {
        return Err(LError::InvalidCharacter(format!("{chi}: p divides the conductor")));
    }
    let work = prec + 4;
    let (ext, zeta) = cyclotomic_ext(p, f, work);
    let one = ExtElement::from_int(&ext, &BigInt::from(1), work);
    let mut gauss = ExtElement::from_int(&ext, &BigInt::from(0), work);
    let mut log_sum = gauss.clone();
    let mut zeta_a = one.clone();
    for a in 1..f {
        zeta_a = zeta_a.mul(&zeta);
        let c = chi.quadratic_value(a as i64);
        if c == 0 {
            continue;
        }
        let c = ExtElement::from_int(&ext, &BigInt::from(c), work);
        gauss = gauss.add(&c.mul(&zeta_a));
        log_sum = log_sum.add(&c.mul(&ext_log(&one.sub(&zeta_a))?));
    }
    if zeta_a.mul(&zeta) != one {
        return Err(LError::RootOfUnityConstructionFailed(f));
    }
    let product = gauss.mul(&log_sum).to_base()?;
    let chi_p = chi.quadratic_value(p as i64) as i64;
    let euler = Padic::from_i64(p, p as i64 - chi_p, work).div(&Padic::from_i64(p, p as i64, work))?;
    let value = euler.mul(&product).div(&Padic::from_i64(p, f as i64, work))?.neg();
    Ok(value.with_abs_prec(prec as i64))
}

use serde::Serialize;

use super::regulators::ell_frak_p;
use super::LinvError;
use crate::fields::{BiquadConfig, QuadField};
use crate::lfunctions::{
    classical_l_at_nonpos, kl_derivative, leopoldt_at_one, symmetric_derivative, DirichletCharacter, LError, PadicLSeries,
};
use crate::padic::Padic;

/// Two independently computed sides of an identity and the digits on which they agree.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckResult {
    pub lhs: Padic,
    pub rhs: Padic,
    pub agreement_digits: i64,
}

/// Cyclotomic L-invariant `log_p(iota(u / conj u)) / ord(u) = -2 L_p` of an imaginary
/// quadratic field, with `u` generating a power of the prime under `iota`.
pub fn cyclotomic_ell(field: &QuadField, p: u64, prec: u32) -> Result<Padic, LinvError> {
    let ell = ell_frak_p(field, p, prec)?;
    Ok(ell.mul(&Padic::from_i64(p, -2, prec + 8)).with_abs_prec(prec as i64))
}

/// Derivative of `L_p(eps_K' omega, s)` at its trivial zero against `-L(eps_K') L(eps_K', 0)`
/// with the cyclotomic L-invariant on the right.
pub fn fg_check(d_kprime: i64, p: u64, prec: u32) -> Result<CheckResult, LinvError> {
    let field = QuadField::new(d_kprime)?;
    let eps = DirichletCharacter::quadratic(field.disc())?;
    let series = PadicLSeries::new(eps.twist(p, 1), p, prec)?;
    let zero = Padic::zero(p, 4 * prec as i64 + 20);
    let lhs = kl_derivative(&series, &zero, prec)?.value;

    let ell = cyclotomic_ell(&field, p, prec)?;
    let l_zero = classical_l_at_nonpos(&eps, 1)?;
    let rhs = ell.mul(&Padic::from_rational(p, &l_zero, prec + 8)).neg().with_abs_prec(prec as i64);
    let agreement_digits = lhs.agreement(&rhs).min(prec as i64);
    Ok(CheckResult { lhs, rhs, agreement_digits })
}

/// The two Kubota-Leopoldt factors of the cyclotomic restriction.
struct GrossFactors {
    twisted: PadicLSeries,
    real: PadicLSeries,
    p: u64,
}

impl GrossFactors {
    fn new(config: &BiquadConfig, prec: u32) -> Result<Self, LinvError> {
        let p = config.p;
        let eps_kprime = DirichletCharacter::quadratic(config.d_kprime)?;
        let eps_f = DirichletCharacter::quadratic(config.d_f)?;
        Ok(GrossFactors {
            twisted: PadicLSeries::new(eps_kprime.twist(p, 1), p, prec)?,
            real: PadicLSeries::new(eps_f, p, prec)?,
            p,
        })
    }

    fn eval(&self, s: &Padic) -> Result<Padic, LError> {
        let one_minus_s = Padic::one(self.p, s.abs_prec().max(1) as u32).sub(s);
        Ok(self.twisted.eval(s)?.mul(&self.real.eval(&one_minus_s)?))
    }
}

/// `L_p(eps_K' omega, s) L_p(eps_F, 1 - s)`.
pub fn gross_cyclotomic(config: &BiquadConfig, s: &Padic) -> Result<Padic, LinvError> {
    Ok(GrossFactors::new(config, config.prec)?.eval(s)?)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SimpleZeroReport {
    pub value_at_zero: Padic,
    pub derivative: Padic,
    pub derivative_agreement: i64,
    /// `L_p'(eps_K' omega, 0) L_p(eps_F, 1)`, the derivative by the product rule.
    pub product_rule: Padic,
    /// `L_p(eps_F, 1)` from Leopoldt's formula.
    pub leopoldt_factor: Padic,
    pub order: u32,
}

impl SimpleZeroReport {
    pub fn is_simple(&self) -> bool {
        self.order == 1
    }
}

pub fn simple_zero_check(config: &BiquadConfig) -> Result<SimpleZeroReport, LinvError> {
    let p = config.p;
    let prec = config.prec;
    let zero = Padic::zero(p, 4 * prec as i64 + 20);
    let value_at_zero = gross_cyclotomic(config, &zero)?;

    let step = prec / 2 + 3;
    let fine = GrossFactors::new(config, prec + step + 6)?;
    let derivative = symmetric_derivative(|s| fine.eval(s), p, &zero, prec)?;

    let eps_f = DirichletCharacter::quadratic(config.d_f)?;
    let leopoldt_factor = leopoldt_at_one(&eps_f, p, prec)?;
    let twisted_derivative = kl_derivative(&fine.twisted, &zero, prec)?.value;
    let product_rule = twisted_derivative.mul(&leopoldt_factor).with_abs_prec(prec as i64);

    let order = match (value_at_zero.is_zero(), derivative.value.is_zero()) {
        (false, _) => 0,
        (true, false) => 1,
        (true, true) => 2,
    };
    Ok(SimpleZeroReport {
        value_at_zero,
        derivative: derivative.value,
        derivative_agreement: derivative.agreement,
        product_rule,
        leopoldt_factor,
        order,
    })
}

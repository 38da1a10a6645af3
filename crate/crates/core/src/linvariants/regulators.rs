use num_rational::BigRational;
use serde::Serialize;

use super::table::{general_regulator, quadratic_table};
use super::LinvError;
use crate::fields::{p_unit, split_prime, BiquadConfig, BiquadElement, GaloisElement, QuadElement, QuadField};
use crate::padic::{iwasawa_log, Padic};

use GaloisElement::{GTau, Identity, Tau, G};

/// `log_p` of the image of `sigma(x)` under the fixed embedding of `H`.
pub(crate) fn log_conjugate(config: &BiquadConfig, sigma: GaloisElement, x: &BiquadElement) -> Result<Padic, LinvError> {
    let image = config.embed(&config.field.act(sigma, x));
    Ok(iwasawa_log(&image)?)
}

/// `log_p(sigma(Y))` for the v0-unit `Y`, a rational combination of field elements.
pub(crate) fn log_v0_unit(config: &BiquadConfig, sigma: GaloisElement) -> Result<Padic, LinvError> {
    let mut acc = Padic::zero(config.p, config.prec as i64 + 6);
    for (x, e) in config.v0_unit() {
        let l = log_conjugate(config, sigma, &x)?;
        acc = acc.add(&l.mul(&Padic::from_rational(config.p, &e, config.prec + 8)));
    }
    Ok(acc)
}

fn order_padic(config: &BiquadConfig, ord: &BigRational) -> Padic {
    Padic::from_rational(config.p, ord, config.prec + 8)
}

/// Slope `-log(u)/log(tau u)` of `u = eps_F - g(eps_F)` taken in the logarithmic sense.
pub fn slope(config: &BiquadConfig) -> Result<Padic, LinvError> {
    let eps = config.field.from_f(&config.eps_f);
    let num = log_conjugate(config, Identity, &eps)?.sub(&log_conjugate(config, G, &eps)?);
    let den = log_conjugate(config, Tau, &eps)?.sub(&log_conjugate(config, GTau, &eps)?);
    if den.is_zero() {
        return Err(LinvError::DenominatorVanishesToPrecision);
    }
    Ok(num.div(&den)?.neg().with_abs_prec(config.prec as i64))
}

/// `-log_p(iota(u)) / ord(u)` for a generator `u` of a power of the prime under `iota`.
pub fn ell_from_generator(u: &QuadElement, ord: u32, sqrt_disc: &Padic) -> Result<Padic, LinvError> {
    let image = u.embed(&u.field.sqrt_core_from_disc(sqrt_disc));
    let l = iwasawa_log(&image)?;
    let prec = sqrt_disc.rel_prec();
    Ok(l.div(&Padic::from_i64(sqrt_disc.p(), ord as i64, prec))?.neg())
}

/// `L_p` of an imaginary quadratic field at the place fixed by the smaller residue root.
pub fn ell_frak_p(k: &QuadField, p: u64, prec: u32) -> Result<Padic, LinvError> {
    let guard = prec + 6;
    let split = split_prime(k, p, guard)?;
    let h = crate::fields::class_number(k)? as u32;
    let (u, ord) = p_unit(k, &split.sqrt_disc, h.max(1) * 6)?;
    Ok(ell_from_generator(&u, ord, &split.sqrt_disc)?.with_abs_prec(prec as i64))
}

/// `L_-` by the closed formula and by the general regulator, with their agreement.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EllMinus {
    pub route_a: Padic,
    pub route_b: Padic,
    pub agreement: i64,
}

pub fn ell_minus(config: &BiquadConfig) -> Result<EllMinus, LinvError> {
    let ord = order_padic(config, &config.v0_unit_order());
    let two = Padic::from_i64(config.p, 2, config.prec + 8);
    // 2 log(gY / g tau Y) / ord(Y)
    let route_a = log_v0_unit(config, G)?.sub(&log_v0_unit(config, GTau)?).mul(&two).div(&ord)?;

    let table = quadratic_table(config)?;
    let ell_k = ell_from_generator(&config.u_p, config.ord_u_p, &config.embed_k)?;
    let route_b = general_regulator(&table)?.sub(&ell_k.mul(&two));

    let agreement = route_a.agreement(&route_b);
    let required = config.prec as i64 - 4;
    if agreement < required {
        return Err(LinvError::RoutesDisagree { agreement, required });
    }
    let cap = config.prec as i64;
    Ok(EllMinus { route_a: route_a.with_abs_prec(cap), route_b: route_b.with_abs_prec(cap), agreement: agreement.min(cap) })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LInvariantReport {
    pub config: BiquadConfig,
    pub slope: Padic,
    pub ell_p: Padic,
    pub ell_minus: Padic,
    pub ell_psi: Padic,
    pub eta_pbar_at_frob_p: Padic,
    pub eta_minus_eta_p_at_frob_p: Padic,
    pub route_agreement_digits: i64,
}

pub fn report(config: &BiquadConfig) -> Result<LInvariantReport, LinvError> {
    let cap = config.prec as i64;
    let slope_value = slope(config)?;
    let ell_p = ell_from_generator(&config.u_p, config.ord_u_p, &config.embed_k)?;
    let minus = ell_minus(config)?;
    let two = Padic::from_i64(config.p, 2, config.prec + 8);
    let ell_psi = minus.route_a.add(&ell_p.mul(&two));

    // eta_pbar(Frob_p) = -log(iota(conj u)) / ord, read off the conjugate prime
    let conj = config.u_p.conj();
    let image = conj.embed(&config.field.k.sqrt_core_from_disc(&config.embed_k));
    let ord_u = Padic::from_i64(config.p, config.ord_u_p as i64, config.prec + 8);
    let eta_pbar = iwasawa_log(&image)?.div(&ord_u)?.neg();

    // (eta - eta_p)(Frob_p) = [2 log gY - S (log tau Y - log tau g Y)] / ord(Y)
    let ord = order_padic(config, &config.v0_unit_order());
    let tau_part = log_v0_unit(config, Tau)?.sub(&log_v0_unit(config, GTau)?);
    let eta_diff = log_v0_unit(config, G)?.mul(&two).sub(&slope_value.mul(&tau_part)).div(&ord)?;

    Ok(LInvariantReport {
        config: config.clone(),
        slope: slope_value,
        ell_p: ell_p.with_abs_prec(cap),
        ell_minus: minus.route_a,
        ell_psi: ell_psi.with_abs_prec(cap),
        eta_pbar_at_frob_p: eta_pbar.with_abs_prec(cap),
        eta_minus_eta_p_at_frob_p: eta_diff.with_abs_prec(cap),
        route_agreement_digits: minus.agreement,
    })
}

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::{bernoulli_numbers, DirichletCharacter, LError};
use crate::padic::{check_prime, ilog, iwasawa_log, ppow, Padic};

/// Guard digits on top of the requested precision.
const GUARD: u32 = 6;

/// Per-residue data for `a` in `[1, F]` prime to `p`.
#[derive(Clone, Debug)]
struct ResidueTerm {
    chi: Padic,
    log: Padic,
    /// `F / a`.
    ratio: Padic,
}

/// Kubota-Leopoldt `L_p(chi, s)` for an even character, evaluated by the expansion of
/// `<a>^(1-s)` over `a` in `[1, F]` prime to `p` with `F = lcm(f, p)`.
#[derive(Clone, Debug)]
pub struct PadicLSeries {
    chi: DirichletCharacter,
    p: u64,
    modulus: u64,
    prec: u32,
    work: u32,
    truncation: usize,
    bernoulli: Vec<Option<Padic>>,
    inv_factorials: Vec<Padic>,
    terms: Vec<ResidueTerm>,
    /// Number of residues, needed for the pole of the trivial character.
    count: u64,
}

/// Smallest `M` such that every Bernoulli term past `M` has valuation at least `work`.
fn truncation_for(p: u64, work: u32) -> usize {
    let mut m = work;
    while (m + 1) as i64 - 2 - ilog(p, m + 1) as i64 <= work as i64 {
        m += 1;
    }
    m as usize
}

impl PadicLSeries {
    pub fn new(chi: DirichletCharacter, p: u64, prec: u32) -> Result<Self, LError> {
        Self::with_truncation(chi, p, prec, None)
    }

    /// As `new`, overriding the number of Bernoulli terms.
    pub fn with_truncation(chi: DirichletCharacter, p: u64, prec: u32, truncation: Option<usize>) -> Result<Self, LError> {
        check_prime(p)?;
        if !chi.is_even() {
            return Err(LError::OddCharacter(chi.to_string()));
        }
        if !chi.is_rational() && chi.disc() % p as i64 == 0 {
            return Err(LError::InvalidCharacter(format!("{chi}: p divides the quadratic conductor")));
        }
        let f = chi.quadratic_conductor();
        let modulus = f.lcm(&p);
        let work = prec + GUARD;
        let truncation = truncation.unwrap_or_else(|| truncation_for(p, work));

        let bernoulli = bernoulli_numbers(truncation)
            .iter()
            .map(|b| if b.is_zero() { None } else { Some(Padic::from_rational(p, b, work + 2)) })
            .collect();

        // y^k / (k+1)! has valuation at least k (p-2)/(p-1) for v(y) >= 1
        let exp_terms = ((work as u64 + 2) * (p - 1)).div_ceil(p - 2) as usize + 2;
        let mut inv_factorials = Vec::with_capacity(exp_terms + 1);
        let mut fact = BigInt::from(1);
        for k in 0..=exp_terms {
            fact *= k + 1;
            let q = BigRational::new(1.into(), fact.clone());
            inv_factorials.push(Padic::from_rational(p, &q, work + 2));
        }

        let modulus_padic = Padic::from_int(p, &BigInt::from(modulus), work + 2);
        let mut terms = Vec::new();
        let mut count = 0;
        for a in 1..=modulus {
            if a % p == 0 {
                continue;
            }
            count += 1;
            let value = chi.value_padic(p, a as i64, work + 2);
            if value.is_zero() {
                continue;
            }
            let a_padic = Padic::from_i64(p, a as i64, work + 2);
            terms.push(ResidueTerm {
                chi: value,
                log: iwasawa_log(&a_padic)?,
                ratio: modulus_padic.div(&a_padic)?,
            });
        }
        Ok(PadicLSeries { chi, p, modulus, prec, work, truncation, bernoulli, inv_factorials, terms, count })
    }

    pub fn character(&self) -> &DirichletCharacter {
        &self.chi
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Expansion modulus `F`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// `L_p(chi, s)` for `s` in `Z_p`.
    pub fn eval(&self, s: &Padic) -> Result<Padic, LError> {
        let p = self.p;
        let work = self.work as i64;
        if s.val_or_abs() < 0 {
            return Err(LError::Padic(crate::padic::PadicError::OutsideConvergenceDomain));
        }
        let one = Padic::one(p, self.work + 2);
        let t = one.sub(s).with_abs_prec(work);
        if self.chi.is_trivial() && t.is_zero() {
            return Err(LError::PoleAtOne);
        }

        // c_j = binom(t-1, j-1) B_j / j
        let t_minus_one = t.sub(&one);
        let mut coeffs: Vec<Option<Padic>> = vec![None; self.truncation + 1];
        let mut binom = one.clone();
        for j in 1..=self.truncation {
            if j >= 2 {
                let i = (j - 2) as i64;
                binom = binom.mul(&t_minus_one.sub(&Padic::from_i64(p, i, self.work + 2)));
                binom = binom.div(&Padic::from_i64(p, (j - 1) as i64, self.work + 2))?;
            }
            if let Some(b) = &self.bernoulli[j] {
                coeffs[j] = Some(binom.mul(b).div(&Padic::from_i64(p, j as i64, self.work + 2))?);
            }
        }

        let mut total = Padic::zero(p, work + 2);
        for term in &self.terms {
            // E(t, lambda) = lambda sum_k (t lambda)^k / (k+1)!, so <a>^t = 1 + t E and <a>^t / t = E + 1/t
            let y = t.mul(&term.log);
            let mut e = Padic::zero(p, work + 2);
            for c in self.inv_factorials.iter().rev() {
                e = e.mul(&y).add(c);
            }
            let e = e.mul(&term.log);
            let power = one.add(&t.mul(&e));

            let mut inner = Padic::zero(p, work + 2);
            for c in coeffs.iter().skip(1).rev() {
                inner = inner.mul(&term.ratio);
                if let Some(c) = c {
                    inner = inner.add(c);
                }
            }
            let inner = inner.mul(&term.ratio);
            total = total.add(&term.chi.mul(&e.add(&power.mul(&inner))));
        }
        if self.chi.is_trivial() {
            // the characters sum to zero otherwise
            let count = Padic::from_i64(p, self.count as i64, self.work + 2);
            total = total.add(&count.div(&t)?);
        }
        let f = Padic::from_i64(p, self.modulus as i64, self.work + 2);
        let value = total.div(&f)?.neg();

        let wanted = self.prec as i64;
        if value.abs_prec() >= wanted {
            Ok(value.with_abs_prec(wanted))
        } else if s.abs_prec() < work {
            Ok(value)
        } else {
            Err(LError::PrecisionExhausted { got: value.abs_prec(), wanted })
        }
    }
}

pub fn kubota_leopoldt(series: &PadicLSeries, s: &Padic) -> Result<Padic, LError> {
    series.eval(s)
}

/// A derivative with the number of digits on which two step sizes agree.
#[derive(Clone, Debug)]
pub struct Derivative {
    pub value: Padic,
    pub agreement: i64,
}

/// Step exponent used for a derivative to `prec` digits.
fn step_exponent(prec: u32) -> u32 {
    prec / 2 + 3
}

/// Symmetric difference quotients at steps `p^k` and `p^(k+1)`; the result carries the
/// precision on which the two agree. `f` should be accurate to about `prec + k + 4` digits.
pub fn symmetric_derivative<F>(f: F, p: u64, s0: &Padic, prec: u32) -> Result<Derivative, LError>
where
    F: Fn(&Padic) -> Result<Padic, LError>,
{
    let k = step_exponent(prec);
    let quotient = |e: u32| -> Result<Padic, LError> {
        let h = Padic::from_int(p, &BigInt::from(ppow(p, e)), prec + 2 * k + 8);
        let up = f(&s0.add(&h))?;
        let down = f(&s0.sub(&h))?;
        Ok(up.sub(&down).div(&h.scale_int(2))?)
    };
    let coarse = quotient(k)?;
    let fine = quotient(k + 1)?;
    let agreement = coarse.agreement(&fine);
    let window = agreement.min(fine.abs_prec());
    if window <= 0 {
        return Err(LError::PrecisionExhausted { got: window, wanted: prec as i64 });
    }
    Ok(Derivative { value: fine.with_abs_prec(window.min(prec as i64)), agreement })
}

/// `L_p'(chi, s0)` to about `prec` digits; `s0` should carry at least `2 prec` digits.
pub fn kl_derivative(series: &PadicLSeries, s0: &Padic, prec: u32) -> Result<Derivative, LError> {
    let k = step_exponent(prec);
    let fine = PadicLSeries::new(series.chi, series.p, prec + k + 6)?;
    symmetric_derivative(|s| fine.eval(s), series.p, s0, prec)
}

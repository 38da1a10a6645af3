use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::scalar::{mod_inverse, ppow, val_int, Padic};
use super::PadicError;

/// Teichmüller representative of the residue of a unit, to `prec` digits.
pub fn teichmuller(x: &Padic, prec: u32) -> Result<Padic, PadicError> {
    if !x.is_unit() {
        return Err(PadicError::NotAUnit);
    }
    let p = x.p();
    let a = x.residue(1).unwrap();
    Ok(teichmuller_of_residue(p, &a, prec))
}

/// Teichmüller lift of an integer prime to `p`: the limit of `a, a^p, a^(p^2), ...`.
pub fn teichmuller_of_residue(p: u64, a: &BigInt, prec: u32) -> Padic {
    let m = ppow(p, prec);
    let base = BigInt::from(m.clone());
    let a = a.mod_floor(&base).to_biguint().unwrap();
    let e = ppow(p, prec.saturating_sub(1));
    let t = a.modpow(&e, &m);
    Padic::from_parts(p, 0, t, prec)
}

/// `sum_{j>=1} (-1)^(j+1) z^j / j` modulo `p^m`, for `z` divisible by `p^(k+1)`.
pub(crate) fn log_series_mod(p: u64, z: &BigInt, k: u32, m: u32) -> BigInt {
    let mut j_max = 1u32;
    while (j_max + 1) as i64 * (k as i64 + 1) - ilog(p, j_max + 1) as i64 <= m as i64 {
        j_max += 1;
    }
    let extra = ilog(p, j_max.max(1));
    let big_mod = BigInt::from(ppow(p, m + extra));
    let small_mod = BigInt::from(ppow(p, m));
    let mut acc = BigInt::zero();
    let mut zj = BigInt::one();
    for j in 1..=j_max {
        zj = (&zj * z).mod_floor(&big_mod);
        let jb = BigInt::from(j);
        let e = val_int(p, &jb);
        let cofactor = &jb / BigInt::from(ppow(p, e));
        let term = (&zj / BigInt::from(ppow(p, e))) * mod_inverse(&cofactor, &small_mod).unwrap();
        if j % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc.mod_floor(&small_mod)
}

pub(crate) fn ilog(p: u64, n: u32) -> u32 {
    let mut k = 0;
    let mut q = p;
    while q <= n as u64 {
        q = q.saturating_mul(p);
        k += 1;
    }
    k
}

fn isqrt(n: u32) -> u32 {
    (n as f64).sqrt() as u32
}

/// Iwasawa branch of the p-adic logarithm: `log_p(p) = 0` and roots of unity map to zero.
///
/// The result has absolute precision equal to the relative precision of `x`.
pub fn iwasawa_log(x: &Padic) -> Result<Padic, PadicError> {
    if x.is_zero() {
        return Err(PadicError::OutsideConvergenceDomain);
    }
    let p = x.p();
    let r = x.rel_prec();
    let unit = BigInt::from(x.unit_part().unwrap().clone());
    let k = isqrt(r).max(1);
    let m = r + k;
    let modulus = ppow(p, m);
    let e = BigUint::from(p - 1) * ppow(p, k);
    let w = unit.to_biguint().unwrap().modpow(&e, &modulus);
    let z = BigInt::from(w) - 1;
    let lw = log_series_mod(p, &z, k, m);
    let shifted = lw / BigInt::from(ppow(p, k));
    let out_mod = BigInt::from(ppow(p, r));
    let inv = mod_inverse(&BigInt::from(p - 1), &out_mod).unwrap();
    let val = (shifted * inv).mod_floor(&out_mod);
    Ok(Padic::from_parts(p, 0, val.to_biguint().unwrap(), r))
}

/// Exponential series; converges for `v(x) >= 1` when `p` is odd.
pub fn padic_exp(x: &Padic) -> Result<Padic, PadicError> {
    let p = x.p();
    let abs = x.abs_prec();
    if abs <= 0 {
        return Err(PadicError::OutsideConvergenceDomain);
    }
    let abs = abs as u32;
    let v = match x.valuation() {
        None => return Ok(Padic::one(p, abs)),
        Some(v) if v < 1 => return Err(PadicError::OutsideConvergenceDomain),
        Some(v) => v as u32,
    };
    let modulus = BigInt::from(ppow(p, abs));
    let unit = BigInt::from(x.unit_part().unwrap().clone());
    let mut acc = BigInt::one();
    let mut upow = BigInt::one();
    let mut fact_cofactor = BigInt::one();
    let mut fact_val = 0u32;
    let mut n = 1u32;
    loop {
        let nb = BigInt::from(n);
        let e = val_int(p, &nb);
        fact_val += e;
        fact_cofactor = (&fact_cofactor * (&nb / BigInt::from(ppow(p, e)))).mod_floor(&modulus);
        upow = (&upow * &unit).mod_floor(&modulus);
        let shift = n as i64 * v as i64 - fact_val as i64;
        if shift >= abs as i64 {
            // every later term has at least this valuation
            if (n as i64) * (v as i64) - (n as i64 - 1) / (p as i64 - 1) >= abs as i64 {
                break;
            }
        } else {
            let term = BigInt::from(ppow(p, shift as u32)) * &upow * mod_inverse(&fact_cofactor, &modulus).unwrap();
            acc = (acc + term).mod_floor(&modulus);
        }
        n += 1;
    }
    Ok(Padic::from_parts(p, 0, acc.to_biguint().unwrap(), abs))
}

fn eval_int_poly(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn derivative(coeffs: &[BigInt]) -> Vec<BigInt> {
    coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect()
}

/// Newton lift of a simple root of an integer polynomial (coefficients low degree first)
/// from the residue `seed` to absolute precision `prec`.
pub fn hensel_root(p: u64, coeffs: &[BigInt], seed: &BigInt, prec: u32) -> Result<Padic, PadicError> {
    let pb = BigInt::from(p);
    if !eval_int_poly(coeffs, seed).mod_floor(&pb).is_zero() {
        return Err(PadicError::RootSeedInvalid);
    }
    let dcoeffs = derivative(coeffs);
    if eval_int_poly(&dcoeffs, seed).mod_floor(&pb).is_zero() {
        return Err(PadicError::NotSimpleRoot);
    }
    let mut a = seed.mod_floor(&pb);
    let mut k = 1u32;
    while k < prec {
        k = (2 * k).min(prec);
        let m = BigInt::from(ppow(p, k));
        let fa = eval_int_poly(coeffs, &a).mod_floor(&m);
        let da = eval_int_poly(&dcoeffs, &a).mod_floor(&m);
        let inv = mod_inverse(&da, &m).unwrap();
        a = (&a - fa * inv).mod_floor(&m);
    }
    Ok(Padic::from_int_abs(p, &a, prec))
}

/// Square root of `d` in `Z_p` lifted from the smaller nonnegative residue root.
pub fn sqrt_from_smaller_seed(p: u64, d: i64, prec: u32) -> Option<Padic> {
    let seed = smaller_sqrt_residue(p, d)?;
    let coeffs = [BigInt::from(-d), BigInt::zero(), BigInt::one()];
    hensel_root(p, &coeffs, &BigInt::from(seed), prec).ok()
}

/// Smaller of the two square roots of `d` modulo `p` when `d` is a nonzero square.
pub fn smaller_sqrt_residue(p: u64, d: i64) -> Option<u64> {
    let r = d.rem_euclid(p as i64) as u64;
    if r == 0 {
        return None;
    }
    (1..=p / 2).find(|x| (x * x) % p == r)
}

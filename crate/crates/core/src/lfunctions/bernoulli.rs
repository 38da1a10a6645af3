use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{DirichletCharacter, LError};
use crate::padic::Padic;

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// `B_0, ..., B_n` with the convention `B_1 = -1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    for m in 1..=n {
        // sum_{k=0}^{m} binom(m+1, k) B_k = 0
        let s: BigRational = (0..m).map(|k| BigRational::from_integer(binomial(m + 1, k)) * &b[k]).sum();
        b.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// Bernoulli polynomial `B_n(x)`.
pub fn bernoulli_poly(n: usize, x: &BigRational) -> BigRational {
    let b = bernoulli_numbers(n);
    let mut acc = BigRational::zero();
    let mut xp = BigRational::one();
    for k in (0..=n).rev() {
        acc += BigRational::from_integer(binomial(n, k)) * &b[k] * &xp;
        xp *= x;
    }
    acc
}

/// `f^(n-1) B_n(a/f)` as an exact rational.
fn scaled_poly_value(n: usize, a: u64, f: u64) -> BigRational {
    let x = BigRational::new(a.into(), f.into());
    let fp = BigRational::from_integer(BigInt::from(f).pow(n as u32)) / BigRational::from_integer(f.into());
    bernoulli_poly(n, &x) * fp
}

/// Generalized Bernoulli number `B_{n,chi}` of a rational character.
pub fn gen_bernoulli(chi: &DirichletCharacter, n: usize) -> Result<BigRational, LError> {
    if !chi.is_rational() {
        return Err(LError::InvalidCharacter(format!("{chi} takes p-adic values; use gen_bernoulli_padic")));
    }
    let f = chi.conductor();
    let mut acc = BigRational::zero();
    for a in 1..=f {
        let c = chi.quadratic_value(a as i64);
        if c != 0 {
            acc += scaled_poly_value(n, a, f) * BigRational::from_integer(c.into());
        }
    }
    Ok(acc)
}

/// `B_{n,chi}` for a Teichmüller-twisted character, as a p-adic number.
pub fn gen_bernoulli_padic(chi: &DirichletCharacter, p: u64, n: usize, prec: u32) -> Padic {
    if chi.is_rational() {
        return Padic::from_rational(p, &gen_bernoulli(chi, n).unwrap(), prec);
    }
    let f = chi.conductor();
    let work = prec + 2;
    let mut acc = Padic::zero(p, work as i64 + 4);
    for a in 1..=f {
        let c = chi.value_padic(p, a as i64, work + 4);
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&c.mul(&Padic::from_rational(p, &scaled_poly_value(n, a, f), work + 4)));
    }
    acc
}

/// `L(chi, 1 - n) = -B_{n,chi}/n`, exactly zero when the parity of `chi` differs from that of `n`
/// (the Riemann zeta function at `0` is the one exception).
pub fn classical_l_at_nonpos(chi: &DirichletCharacter, n: usize) -> Result<BigRational, LError> {
    assert!(n >= 1);
    let parity = if n % 2 == 0 { 1 } else { -1 };
    if chi.sign() != parity && !chi.is_trivial() {
        return Ok(BigRational::zero());
    }
    Ok(-gen_bernoulli(chi, n)? / BigRational::from_integer(BigInt::from(n)))
}

/// Right side of the interpolation property at `s = 1 - n`:
/// `-(1 - chi omega^(-n)(p) p^(n-1)) B_{n, chi omega^(-n)} / n`.
pub fn interpolation_value(chi: &DirichletCharacter, p: u64, n: usize, prec: u32) -> Result<Padic, LError> {
    if chi.disc() % p as i64 == 0 && chi.disc() != 1 {
        return Err(LError::InvalidCharacter(format!("{chi}: p divides the conductor")));
    }
    let psi = chi.twist(p, -(n as i64));
    let work = prec + 4;
    let bern = gen_bernoulli_padic(&psi, p, n, work);
    let euler = if psi.is_rational() {
        let pn = BigInt::from(p).pow(n as u32 - 1);
        Padic::from_int(p, &(BigInt::one() - pn * psi.quadratic_value(p as i64)), work)
    } else {
        Padic::one(p, work)
    };
    let nn = Padic::from_i64(p, n as i64, work);
    Ok(euler.mul(&bern).div(&nn)?.neg())
}

use std::cmp::min;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::PadicError;

/// `p^k` as a big integer.
pub fn ppow(p: u64, k: u32) -> BigUint {
    BigUint::from(p).pow(k)
}

/// Largest `k` with `p^k | n`, for nonzero `n`.
pub fn val_int(p: u64, n: &BigInt) -> u32 {
    assert!(!n.is_zero());
    let pb = BigInt::from(p);
    let mut n = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(&pb);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

/// Inverse of `a` modulo `m`; `None` when they share a factor.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = a.mod_floor(m).extended_gcd(m);
    if !g.gcd.is_one() {
        return None;
    }
    Some(g.x.mod_floor(m))
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Rejects `p = 2` and composite moduli.
pub fn check_prime(p: u64) -> Result<(), PadicError> {
    if p == 2 || !is_prime_u64(p) {
        return Err(PadicError::UnsupportedPrime(p));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    /// Congruent to zero modulo `p^abs`.
    Zero { abs: i64 },
    /// `p^val * unit` with `unit` known modulo `p^rel`.
    Value { val: i64, unit: BigUint, rel: u32 },
}

/// Element of `Q_p` under the capped relative precision model.
///
/// Addition keeps the smaller absolute precision of its inputs, multiplication
/// the smaller relative precision. A value whose digits all cancel becomes a
/// zero carrying only an absolute precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Padic {
    p: u64,
    repr: Repr,
}

impl Padic {
    pub fn zero(p: u64, abs: i64) -> Self {
        Padic { p, repr: Repr::Zero { abs } }
    }

    pub fn one(p: u64, prec: u32) -> Self {
        Padic::from_i64(p, 1, prec)
    }

    /// `p^val * x` where `x` is known modulo `p^rel` (it may be divisible by `p`).
    pub fn from_parts(p: u64, val: i64, x: BigUint, rel: u32) -> Self {
        let abs = val + rel as i64;
        if rel == 0 {
            return Padic::zero(p, abs);
        }
        let modulus = ppow(p, rel);
        let x = x % &modulus;
        if x.is_zero() {
            return Padic::zero(p, abs);
        }
        let k = val_int(p, &BigInt::from(x.clone()));
        let rel = rel - k;
        let unit = (x / ppow(p, k)) % ppow(p, rel);
        Padic { p, repr: Repr::Value { val: val + k as i64, unit, rel } }
    }

    /// Integer with `prec` digits of relative precision.
    pub fn from_int(p: u64, n: &BigInt, prec: u32) -> Self {
        if n.is_zero() {
            return Padic::zero(p, prec as i64);
        }
        let v = val_int(p, n);
        let unit = n / BigInt::from(ppow(p, v));
        let m = BigInt::from(ppow(p, prec));
        let u = unit.mod_floor(&m).to_biguint().unwrap();
        Padic { p, repr: Repr::Value { val: v as i64, unit: u, rel: prec } }
    }

    pub fn from_i64(p: u64, n: i64, prec: u32) -> Self {
        Padic::from_int(p, &BigInt::from(n), prec)
    }

    pub fn from_rational(p: u64, q: &BigRational, prec: u32) -> Self {
        if q.is_zero() {
            return Padic::zero(p, prec as i64);
        }
        let num = Padic::from_int(p, q.numer(), prec);
        let den = Padic::from_int(p, q.denom(), prec);
        num.div(&den).expect("nonzero denominator")
    }

    /// Integer `x` known modulo `p^abs` (absolute precision `abs`).
    pub fn from_int_abs(p: u64, x: &BigInt, abs: u32) -> Self {
        let m = BigInt::from(ppow(p, abs));
        let r = x.mod_floor(&m).to_biguint().unwrap();
        Padic::from_parts(p, 0, r, abs)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `None` for a zero-to-precision value.
    pub fn valuation(&self) -> Option<i64> {
        match &self.repr {
            Repr::Zero { .. } => None,
            Repr::Value { val, .. } => Some(*val),
        }
    }

    /// Valuation, with zero reported at its absolute precision.
    pub fn val_or_abs(&self) -> i64 {
        match &self.repr {
            Repr::Zero { abs } => *abs,
            Repr::Value { val, .. } => *val,
        }
    }

    pub fn rel_prec(&self) -> u32 {
        match &self.repr {
            Repr::Zero { .. } => 0,
            Repr::Value { rel, .. } => *rel,
        }
    }

    pub fn abs_prec(&self) -> i64 {
        match &self.repr {
            Repr::Zero { abs } => *abs,
            Repr::Value { val, rel, .. } => val + *rel as i64,
        }
    }

    pub fn unit_part(&self) -> Option<&BigUint> {
        match &self.repr {
            Repr::Zero { .. } => None,
            Repr::Value { unit, .. } => Some(unit),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero { .. })
    }

    pub fn is_unit(&self) -> bool {
        self.valuation() == Some(0)
    }

    /// Base-`p` digits of the unit part, least significant first.
    pub fn digits(&self) -> Vec<u64> {
        match &self.repr {
            Repr::Zero { .. } => Vec::new(),
            Repr::Value { unit, rel, .. } => {
                let mut out = Vec::with_capacity(*rel as usize);
                let mut u = unit.clone();
                let pb = BigUint::from(self.p);
                for _ in 0..*rel {
                    let (q, r) = u.div_rem(&pb);
                    out.push(r.to_u64().unwrap());
                    u = q;
                }
                out
            }
        }
    }

    /// Integer representative in `[0, p^abs)`; requires nonnegative valuation.
    pub fn to_bigint(&self) -> Option<BigInt> {
        match &self.repr {
            Repr::Zero { .. } => Some(BigInt::zero()),
            Repr::Value { val, unit, .. } => {
                if *val < 0 {
                    return None;
                }
                Some(BigInt::from(unit * ppow(self.p, *val as u32)))
            }
        }
    }

    /// Residue modulo `p^k` of an integral element, padding unknown digits with zeros.
    pub fn residue(&self, k: u32) -> Option<BigInt> {
        let m = BigInt::from(ppow(self.p, k));
        self.to_bigint().map(|x| x.mod_floor(&m))
    }

    /// Drop digits so that at most `rel` relative digits remain.
    pub fn with_rel_prec(&self, rel: u32) -> Self {
        match &self.repr {
            Repr::Zero { .. } => self.clone(),
            Repr::Value { val, unit, rel: r } => {
                let n = min(*r, rel);
                Padic::from_parts(self.p, *val, unit.clone(), n)
            }
        }
    }

    /// Cap the absolute precision at `abs`.
    pub fn with_abs_prec(&self, abs: i64) -> Self {
        match &self.repr {
            Repr::Zero { abs: a } => Padic::zero(self.p, min(*a, abs)),
            Repr::Value { val, unit, rel } => {
                let target = abs - val;
                if target <= 0 {
                    return Padic::zero(self.p, abs);
                }
                Padic::from_parts(self.p, *val, unit.clone(), min(*rel as i64, target) as u32)
            }
        }
    }

    /// Reinterpret the known digits as exact and extend to `rel` relative digits.
    pub fn lift_rel(&self, rel: u32) -> Self {
        match &self.repr {
            Repr::Zero { .. } => self.clone(),
            Repr::Value { val, unit, .. } => Padic {
                p: self.p,
                repr: Repr::Value { val: *val, unit: unit.clone(), rel },
            },
        }
    }

    fn check_same(&self, other: &Padic) {
        assert_eq!(self.p, other.p, "mixing p-adic numbers for different primes");
    }

    pub fn neg(&self) -> Self {
        match &self.repr {
            Repr::Zero { .. } => self.clone(),
            Repr::Value { val, unit, rel } => {
                let m = ppow(self.p, *rel);
                Padic { p: self.p, repr: Repr::Value { val: *val, unit: (&m - unit) % &m, rel: *rel } }
            }
        }
    }

    pub fn add(&self, other: &Padic) -> Self {
        self.check_same(other);
        let abs = min(self.abs_prec(), other.abs_prec());
        let terms: Vec<(i64, &BigUint)> = [self, other]
            .iter()
            .filter_map(|x| match &x.repr {
                Repr::Value { val, unit, .. } => Some((*val, unit)),
                Repr::Zero { .. } => None,
            })
            .collect();
        if terms.is_empty() {
            return Padic::zero(self.p, abs);
        }
        let m = terms.iter().map(|t| t.0).min().unwrap();
        if m >= abs {
            return Padic::zero(self.p, abs);
        }
        let width = (abs - m) as u32;
        let modulus = ppow(self.p, width);
        let mut acc = BigUint::zero();
        for (v, u) in terms {
            let shift = (v - m) as u32;
            if shift < width {
                acc += u * ppow(self.p, shift);
            }
        }
        Padic::from_parts(self.p, m, acc % modulus, width)
    }

    pub fn sub(&self, other: &Padic) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Padic) -> Self {
        self.check_same(other);
        match (&self.repr, &other.repr) {
            (Repr::Zero { abs: a }, Repr::Zero { abs: b }) => Padic::zero(self.p, a + b),
            (Repr::Zero { abs }, Repr::Value { val, .. }) | (Repr::Value { val, .. }, Repr::Zero { abs }) => {
                Padic::zero(self.p, abs + val)
            }
            (Repr::Value { val: va, unit: ua, rel: ra }, Repr::Value { val: vb, unit: ub, rel: rb }) => {
                let rel = min(*ra, *rb);
                let unit = (ua * ub) % ppow(self.p, rel);
                Padic { p: self.p, repr: Repr::Value { val: va + vb, unit, rel } }
            }
        }
    }

    pub fn inv(&self) -> Result<Self, PadicError> {
        match &self.repr {
            Repr::Zero { .. } => Err(PadicError::DivisionByImpreciseZero),
            Repr::Value { val, unit, rel } => {
                let m = BigInt::from(ppow(self.p, *rel));
                let inv = mod_inverse(&BigInt::from(unit.clone()), &m).expect("unit is invertible");
                Ok(Padic { p: self.p, repr: Repr::Value { val: -val, unit: inv.to_biguint().unwrap(), rel: *rel } })
            }
        }
    }

    pub fn div(&self, other: &Padic) -> Result<Self, PadicError> {
        self.check_same(other);
        let inv = other.inv()?;
        Ok(match &self.repr {
            Repr::Zero { abs } => Padic::zero(self.p, abs - other.valuation().unwrap()),
            Repr::Value { .. } => self.mul(&inv),
        })
    }

    pub fn pow(&self, e: i64) -> Result<Self, PadicError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        Ok(self.pow_big(&BigUint::from(e as u64)))
    }

    pub fn pow_big(&self, e: &BigUint) -> Self {
        match &self.repr {
            Repr::Zero { abs } => {
                if e.is_zero() {
                    Padic::one(self.p, 1)
                } else {
                    let k = e.to_i64().unwrap_or(i64::MAX / 4);
                    Padic::zero(self.p, abs.saturating_mul(k))
                }
            }
            Repr::Value { val, unit, rel } => {
                let m = ppow(self.p, *rel);
                let u = unit.modpow(e, &m);
                let k = e.to_i64().expect("exponent fits i64 for valuation");
                Padic { p: self.p, repr: Repr::Value { val: val * k, unit: u, rel: *rel } }
            }
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        let prec = self.rel_prec().max(1) + 64;
        self.mul(&Padic::from_i64(self.p, n, prec))
    }

    /// Number of leading digits on which the two values agree, i.e. `v(self - other)`,
    /// capped by the precision of the difference.
    pub fn agreement(&self, other: &Padic) -> i64 {
        self.sub(other).val_or_abs()
    }

    /// Rational reconstruction of a value known modulo `p^abs`: finds `a/b` with
    /// `|a|, |b| <= bound` when one exists.
    pub fn to_rational(&self, bound: &BigInt) -> Option<BigRational> {
        let v = self.valuation()?;
        let rel = self.rel_prec();
        let m = BigInt::from(ppow(self.p, rel));
        let u = BigInt::from(self.unit_part()?.clone());
        let (mut r0, mut r1) = (m.clone(), u);
        let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
        while &r1 > bound {
            let q = &r0 / &r1;
            let r2 = &r0 - &q * &r1;
            let t2 = &t0 - &q * &t1;
            r0 = r1;
            r1 = r2;
            t0 = t1;
            t1 = t2;
        }
        if t1.is_zero() || t1.abs() > *bound {
            return None;
        }
        let mut q = BigRational::new(r1, t1);
        let pv = BigRational::from_integer(BigInt::from(self.p).pow(v.unsigned_abs() as u32));
        if v >= 0 {
            q *= pv;
        } else {
            q /= pv;
        }
        Some(q)
    }

    /// Compare two values as p-adic numbers to the common precision.
    pub fn eq_to_prec(&self, other: &Padic) -> bool {
        self.sub(other).is_zero()
    }
}

impl fmt::Display for Padic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Zero { abs } => write!(f, "O({}^{})", self.p, abs),
            Repr::Value { val, .. } => {
                let mut first = true;
                for (i, d) in self.digits().iter().enumerate() {
                    if *d == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    let e = val + i as i64;
                    match e {
                        0 => write!(f, "{d}")?,
                        1 => write!(f, "{d}*{}", self.p)?,
                        _ => write!(f, "{d}*{}^{e}", self.p)?,
                    }
                }
                write!(f, " + O({}^{})", self.p, self.abs_prec())
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Padic> for &Padic {
            type Output = Padic;
            fn $m(self, rhs: &Padic) -> Padic {
                Padic::$m(self, rhs)
            }
        }
        impl $tr<Padic> for Padic {
            type Output = Padic;
            fn $m(self, rhs: Padic) -> Padic {
                Padic::$m(&self, &rhs)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &Padic {
    type Output = Padic;
    fn neg(self) -> Padic {
        Padic::neg(self)
    }
}

impl Neg for Padic {
    type Output = Padic;
    fn neg(self) -> Padic {
        Padic::neg(&self)
    }
}

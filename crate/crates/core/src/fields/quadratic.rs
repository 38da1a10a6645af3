use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::forms::class_number_forms;
use super::FieldError;
use crate::padic::{check_prime, sqrt_from_smaller_seed, smaller_sqrt_residue, Padic};

fn squarefree(n: i64) -> bool {
    let m = n.unsigned_abs();
    let mut d = 2u64;
    while d * d <= m {
        if m % (d * d) == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// True for fundamental discriminants other than 1.
pub fn is_fundamental(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => squarefree(d),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && squarefree(m)
        }
        _ => false,
    }
}

/// Kronecker symbol `(d / n)`.
pub fn kronecker(d: i64, n: i64) -> i32 {
    if n == 0 {
        return if d.abs() == 1 { 1 } else { 0 };
    }
    let mut result = 1i32;
    let mut n = n;
    if n < 0 {
        n = -n;
        if d < 0 {
            result = -result;
        }
    }
    let twos = n.trailing_zeros();
    n >>= twos;
    if twos > 0 {
        if d % 2 == 0 {
            return 0;
        }
        if twos % 2 == 1 && matches!(d.rem_euclid(8), 3 | 5) {
            result = -result;
        }
    }
    // Jacobi symbol (d / n) for odd positive n
    let mut a = d.rem_euclid(n);
    let mut m = n;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(m % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut m);
        if a % 4 == 3 && m % 4 == 3 {
            result = -result;
        }
        a %= m;
    }
    if m == 1 {
        result
    } else {
        0
    }
}

/// Quadratic field given by its fundamental discriminant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct QuadField {
    disc: i64,
}

impl TryFrom<i64> for QuadField {
    type Error = FieldError;
    fn try_from(d: i64) -> Result<Self, FieldError> {
        QuadField::new(d)
    }
}

impl From<QuadField> for i64 {
    fn from(k: QuadField) -> i64 {
        k.disc
    }
}

impl QuadField {
    /// Accepts a fundamental discriminant or a squarefree integer `m` (meaning `Q(sqrt m)`).
    pub fn new(d: i64) -> Result<Self, FieldError> {
        if is_fundamental(d) {
            return Ok(QuadField { disc: d });
        }
        if d != 1 && d != 0 && squarefree(d) {
            let disc = if d.rem_euclid(4) == 1 { d } else { 4 * d };
            return Ok(QuadField { disc });
        }
        Err(FieldError::NotFundamental(d))
    }

    pub fn disc(&self) -> i64 {
        self.disc
    }

    /// Squarefree `m` with the field equal to `Q(sqrt m)`.
    pub fn core(&self) -> i64 {
        if self.disc.rem_euclid(4) == 0 {
            self.disc / 4
        } else {
            self.disc
        }
    }

    pub fn is_imaginary(&self) -> bool {
        self.disc < 0
    }

    /// Quadratic character attached to the field.
    pub fn character(&self, n: i64) -> i32 {
        kronecker(self.disc, n)
    }

    /// Number of roots of unity.
    pub fn roots_of_unity(&self) -> usize {
        match self.disc {
            -4 => 4,
            -3 => 6,
            _ => 2,
        }
    }

    pub fn element(&self, a: BigRational, b: BigRational) -> QuadElement {
        QuadElement { field: *self, a, b }
    }

    pub fn from_ints(&self, a: i64, b: i64) -> QuadElement {
        self.element(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    /// `(x + y sqrt(D))/2` written in the `a + b sqrt(m)` basis.
    pub fn from_half_disc(&self, x: &BigInt, y: &BigInt) -> QuadElement {
        let two = BigInt::from(2);
        let a = BigRational::new(x.clone(), two.clone());
        let b = if self.disc.rem_euclid(4) == 0 {
            BigRational::from_integer(y.clone())
        } else {
            BigRational::new(y.clone(), two)
        };
        self.element(a, b)
    }

    /// Image of `sqrt(m)` given the image of `sqrt(D)`.
    pub fn sqrt_core_from_disc(&self, sqrt_disc: &Padic) -> Padic {
        if self.disc.rem_euclid(4) == 0 {
            let half = Padic::from_rational(sqrt_disc.p(), &BigRational::new(1.into(), 2.into()), sqrt_disc.rel_prec() + 2);
            sqrt_disc.mul(&half)
        } else {
            sqrt_disc.clone()
        }
    }
}

impl fmt::Display for QuadField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt({}))", self.core())
    }
}

/// Element `a + b sqrt(m)` of a quadratic field, rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadElement {
    pub field: QuadField,
    pub a: BigRational,
    pub b: BigRational,
}

impl QuadElement {
    fn m(&self) -> BigRational {
        BigRational::from_integer(self.field.core().into())
    }

    pub fn add(&self, o: &QuadElement) -> QuadElement {
        self.field.element(&self.a + &o.a, &self.b + &o.b)
    }

    pub fn sub(&self, o: &QuadElement) -> QuadElement {
        self.field.element(&self.a - &o.a, &self.b - &o.b)
    }

    pub fn mul(&self, o: &QuadElement) -> QuadElement {
        let a = &self.a * &o.a + &self.b * &o.b * self.m();
        let b = &self.a * &o.b + &self.b * &o.a;
        self.field.element(a, b)
    }

    pub fn conj(&self) -> QuadElement {
        self.field.element(self.a.clone(), -self.b.clone())
    }

    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * self.m()
    }

    pub fn trace(&self) -> BigRational {
        &self.a + &self.a
    }

    pub fn inv(&self) -> QuadElement {
        let n = self.norm();
        let c = self.conj();
        self.field.element(&c.a / &n, &c.b / &n)
    }

    pub fn pow(&self, k: u32) -> QuadElement {
        (0..k).fold(self.field.from_ints(1, 0), |acc, _| acc.mul(self))
    }

    pub fn is_integral(&self) -> bool {
        self.trace().is_integer() && self.norm().is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Image under the embedding determined by the image of `sqrt(m)`.
    pub fn embed(&self, sqrt_core: &Padic) -> Padic {
        let p = sqrt_core.p();
        let prec = sqrt_core.rel_prec() + 8;
        Padic::from_rational(p, &self.a, prec).add(&Padic::from_rational(p, &self.b, prec).mul(sqrt_core))
    }

    /// Approximate real value for real fields.
    pub fn to_f64(&self) -> f64 {
        let m = self.field.core() as f64;
        self.a.to_f64().unwrap() + self.b.to_f64().unwrap() * m.abs().sqrt()
    }
}

impl fmt::Display for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.field.core();
        let root = if m == -1 { "i".to_string() } else { format!("sqrt({m})") };
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let b = if self.b.is_one() {
            root
        } else if self.b == -BigRational::one() {
            format!("-{root}")
        } else {
            format!("{}*{}", self.b, root)
        };
        if self.a.is_zero() {
            write!(f, "{b}")
        } else if let Some(rest) = b.strip_prefix('-') {
            write!(f, "{} - {}", self.a, rest)
        } else {
            write!(f, "{} + {}", self.a, b)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct QuadElementJson {
    field: i64,
    a: String,
    b: String,
}

impl Serialize for QuadElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        QuadElementJson { field: self.field.disc, a: self.a.to_string(), b: self.b.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = QuadElementJson::deserialize(d)?;
        let field = QuadField::new(j.field).map_err(serde::de::Error::custom)?;
        let a: BigRational = j.a.parse().map_err(serde::de::Error::custom)?;
        let b: BigRational = j.b.parse().map_err(serde::de::Error::custom)?;
        Ok(field.element(a, b))
    }
}

fn is_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Fundamental unit `> 1` of a real quadratic field.
///
/// Small discriminants are searched directly; otherwise the unit `(t + u sqrt D)/2`
/// appears among the convergents of `sqrt D`, either as `t/u` with norm `±4` or
/// as half of it with norm `±1`.
pub fn fundamental_unit(f: &QuadField) -> Result<QuadElement, FieldError> {
    if f.is_imaginary() {
        return Err(FieldError::NotReal(f.disc));
    }
    let d = BigInt::from(f.disc);
    let four = BigInt::from(4);
    if f.disc <= 16 {
        let mut u = BigInt::one();
        loop {
            for sign in [-1, 1] {
                let t2 = &d * &u * &u + BigInt::from(sign) * &four;
                if let Some(t) = is_square(&t2) {
                    if t.is_positive() {
                        return Ok(f.from_half_disc(&t, &u));
                    }
                }
            }
            u += 1;
        }
    }
    let a0 = d.sqrt();
    let (mut m, mut den, mut a) = (BigInt::zero(), BigInt::one(), a0.clone());
    let (mut h_prev, mut h) = (BigInt::one(), a0.clone());
    let (mut k_prev, mut k) = (BigInt::zero(), BigInt::one());
    for _ in 0..100_000 {
        let n = &h * &h - &d * &k * &k;
        if n.abs() == four {
            return Ok(f.from_half_disc(&h, &k));
        }
        if n.abs() == BigInt::one() {
            return Ok(f.from_half_disc(&(&h * 2), &(&k * 2)));
        }
        m = &den * &a - &m;
        den = (&d - &m * &m) / &den;
        a = (&a0 + &m) / &den;
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
    Err(FieldError::SearchExhausted)
}

/// Class number of an imaginary quadratic field.
pub fn class_number(k: &QuadField) -> Result<usize, FieldError> {
    if !k.is_imaginary() {
        return Err(FieldError::NotImaginary(k.disc));
    }
    Ok(class_number_forms(k.disc))
}

/// A prime split in a quadratic field, with the image of `sqrt(D)` fixing the place.
#[derive(Clone, Debug)]
pub struct SplitPrime {
    pub p: u64,
    /// Smaller nonnegative residue root of `D` modulo `p`.
    pub seed: u64,
    /// Hensel lift of `seed`: the image of `sqrt(D)`.
    pub sqrt_disc: Padic,
}

pub fn split_prime(k: &QuadField, p: u64, prec: u32) -> Result<SplitPrime, FieldError> {
    if p == 2 || check_prime(p).is_err() || k.character(p as i64) != 1 {
        return Err(FieldError::PrimeNotSplit { p, disc: k.disc });
    }
    let seed = smaller_sqrt_residue(p, k.disc).ok_or(FieldError::PrimeNotSplit { p, disc: k.disc })?;
    let sqrt_disc = sqrt_from_smaller_seed(p, k.disc, prec).unwrap();
    Ok(SplitPrime { p, seed, sqrt_disc })
}

/// Generator of the smallest power of the prime `{z : v_p(iota(z)) > 0}` that is principal.
///
/// `sqrt_disc` is the image of `sqrt(D)` fixing the embedding. The search runs over
/// `x^2 - D y^2 = ±4 p^m`; for real fields the search window is bounded by the
/// size of the fundamental unit.
pub fn p_unit(k: &QuadField, sqrt_disc: &Padic, max_power: u32) -> Result<(QuadElement, u32), FieldError> {
    let p = sqrt_disc.p();
    let d = k.disc;
    let sqrt_core = k.sqrt_core_from_disc(sqrt_disc);
    let eps_size = if d > 0 { fundamental_unit(k)?.to_f64() } else { 1.0 };
    for m in 1..=max_power {
        let pm = BigInt::from(p).pow(m);
        let target = &pm * 4;
        let pmf = (p as f64).powi(m as i32);
        let bound = if d < 0 {
            (2.0 * pmf.sqrt() / (d.abs() as f64).sqrt()) as i64 + 1
        } else {
            (2.0 * (pmf * eps_size).sqrt() / (d as f64).sqrt()) as i64 + 2
        };
        for y in 0..=bound {
            let yb = BigInt::from(y);
            let dy2 = BigInt::from(d) * &yb * &yb;
            let signs: &[i64] = if d < 0 { &[1] } else { &[1, -1] };
            for &sg in signs {
                let x2 = &dy2 + &target * sg;
                let Some(x) = is_square(&x2) else { continue };
                for (xs, ys) in [(&x, &yb), (&-&x, &yb), (&x, &-&yb), (&-&x, &-&yb)] {
                    let z = k.from_half_disc(xs, ys);
                    if z.is_zero() {
                        continue;
                    }
                    let v = z.embed(&sqrt_core).valuation();
                    if v == Some(m as i64) {
                        return Ok((z, m));
                    }
                }
            }
        }
    }
    Err(FieldError::SearchExhausted)
}

/// Check that an element is a unit (norm `±1`) of the ring of integers.
pub fn is_unit(z: &QuadElement) -> bool {
    z.is_integral() && z.norm().abs().is_one()
}

pub(crate) fn integer_sqrt_exact(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::analytic::log_series_mod;
use super::scalar::{mod_inverse, ppow, Padic};
use super::PadicError;

/// Unramified extension `Z_p[t]/(g)` for a monic integer polynomial `g`
/// that is irreducible modulo `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnramifiedExt {
    p: u64,
    /// Monic modulus, low degree first, length `degree + 1`.
    modulus: Vec<BigInt>,
}

impl UnramifiedExt {
    pub fn new(p: u64, modulus: Vec<BigInt>) -> Arc<Self> {
        assert!(modulus.last().map(|c| c.is_one()).unwrap_or(false), "modulus must be monic");
        Arc::new(UnramifiedExt { p, modulus })
    }

    /// Degree-`d` extension with the lexicographically first monic modulus irreducible mod `p`.
    pub fn of_degree(p: u64, d: usize) -> Arc<Self> {
        UnramifiedExt::new(p, first_irreducible(p, d))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// Size of the residue field.
    pub fn residue_size(&self) -> BigUint {
        BigUint::from(self.p).pow(self.degree() as u32)
    }
}

/// Multiplicative order of `p` modulo `f`.
pub fn order_mod(p: u64, f: u64) -> usize {
    let mut x = p % f;
    let mut k = 1;
    while x != 1 % f {
        x = (x * p) % f;
        k += 1;
    }
    k
}

fn poly_mod_p(a: &[i64], g: &[i64], p: i64) -> Vec<i64> {
    let mut r: Vec<i64> = a.iter().map(|c| c.rem_euclid(p)).collect();
    let dg = g.len() - 1;
    let lead_inv = mod_inverse(&BigInt::from(g[dg]), &BigInt::from(p)).unwrap();
    let lead_inv: i64 = i64::try_from(lead_inv).unwrap();
    while r.len() > dg {
        let c = (r[r.len() - 1] * lead_inv).rem_euclid(p);
        let shift = r.len() - 1 - dg;
        for (i, gi) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] - c * gi).rem_euclid(p);
        }
        r.pop();
    }
    r
}

fn monic_from_index(p: u64, d: usize, mut idx: u64) -> Vec<i64> {
    let mut c = Vec::with_capacity(d + 1);
    for _ in 0..d {
        c.push((idx % p) as i64);
        idx /= p;
    }
    c.push(1);
    c
}

fn is_irreducible_mod_p(g: &[i64], p: u64) -> bool {
    let d = g.len() - 1;
    for e in 1..=d / 2 {
        for idx in 0..p.pow(e as u32) {
            let h = monic_from_index(p, e, idx);
            if poly_mod_p(g, &h, p as i64).iter().all(|c| *c == 0) {
                return false;
            }
        }
    }
    true
}

fn first_irreducible(p: u64, d: usize) -> Vec<BigInt> {
    if d == 1 {
        return vec![BigInt::zero(), BigInt::one()];
    }
    let mut idx = 0u64;
    loop {
        let g = monic_from_index(p, d, idx);
        if g[0] != 0 && is_irreducible_mod_p(&g, p) {
            return g.into_iter().map(BigInt::from).collect();
        }
        idx += 1;
    }
}

/// Integral element of an unramified extension, coordinates in the power basis of `t`,
/// all known modulo `p^abs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtElement {
    ext: Arc<UnramifiedExt>,
    coeffs: Vec<BigInt>,
    abs: u32,
}

impl ExtElement {
    pub fn from_coeffs(ext: &Arc<UnramifiedExt>, coeffs: &[BigInt], abs: u32) -> Self {
        let d = ext.degree();
        let mut c = vec![BigInt::zero(); d];
        for (i, x) in coeffs.iter().enumerate() {
            c[i] = x.clone();
        }
        let mut e = ExtElement { ext: ext.clone(), coeffs: c, abs };
        e.normalize();
        e
    }

    pub fn from_int(ext: &Arc<UnramifiedExt>, n: &BigInt, abs: u32) -> Self {
        ExtElement::from_coeffs(ext, std::slice::from_ref(n), abs)
    }

    /// Embeds an integral base-field scalar.
    pub fn from_padic(ext: &Arc<UnramifiedExt>, x: &Padic) -> Result<Self, PadicError> {
        let abs = x.abs_prec();
        if x.val_or_abs() < 0 {
            return Err(PadicError::NotIntegral);
        }
        let abs = abs.max(0) as u32;
        Ok(ExtElement::from_int(ext, &x.residue(abs).unwrap(), abs))
    }

    pub fn ext(&self) -> &Arc<UnramifiedExt> {
        &self.ext
    }

    pub fn abs_prec(&self) -> u32 {
        self.abs
    }

    pub fn coeff(&self, i: usize) -> Padic {
        Padic::from_int_abs(self.ext.p, &self.coeffs[i], self.abs)
    }

    pub fn coeffs(&self) -> Vec<Padic> {
        (0..self.coeffs.len()).map(|i| self.coeff(i)).collect()
    }

    fn modulus_int(&self) -> BigInt {
        BigInt::from(ppow(self.ext.p, self.abs))
    }

    fn normalize(&mut self) {
        let m = self.modulus_int();
        for c in self.coeffs.iter_mut() {
            *c = c.mod_floor(&m);
        }
    }

    pub fn with_abs(&self, abs: u32) -> Self {
        let mut e = self.clone();
        e.abs = abs;
        e.normalize();
        e
    }

    fn same_ext(&self, other: &ExtElement) {
        assert!(Arc::ptr_eq(&self.ext, &other.ext) || self.ext == other.ext, "mixing extensions");
    }

    pub fn add(&self, other: &ExtElement) -> Self {
        self.same_ext(other);
        let abs = self.abs.min(other.abs);
        let coeffs: Vec<BigInt> = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        ExtElement::from_coeffs(&self.ext, &coeffs, abs)
    }

    pub fn neg(&self) -> Self {
        let coeffs: Vec<BigInt> = self.coeffs.iter().map(|a| -a).collect();
        ExtElement::from_coeffs(&self.ext, &coeffs, self.abs)
    }

    pub fn sub(&self, other: &ExtElement) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ExtElement) -> Self {
        self.same_ext(other);
        let abs = self.abs.min(other.abs);
        let d = self.ext.degree();
        let m = BigInt::from(ppow(self.ext.p, abs));
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        let g = &self.ext.modulus;
        for k in (d..prod.len()).rev() {
            let c = prod[k].mod_floor(&m);
            if !c.is_zero() {
                for (i, gi) in g.iter().enumerate().take(d) {
                    prod[k - d + i] -= &c * gi;
                }
            }
            prod[k] = BigInt::zero();
        }
        prod.truncate(d);
        ExtElement::from_coeffs(&self.ext, &prod, abs)
    }

    pub fn scale(&self, x: &Padic) -> Result<Self, PadicError> {
        let e = ExtElement::from_padic(&self.ext, x)?;
        Ok(self.mul(&e))
    }

    pub fn pow(&self, e: &BigUint) -> Self {
        let mut result = ExtElement::from_int(&self.ext, &BigInt::one(), self.abs);
        let mut base = self.clone();
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                result = result.mul(&base);
            }
            if i + 1 < bits {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Nonzero reduction modulo `p`; the residue ring is a field.
    pub fn is_unit(&self) -> bool {
        let pb = BigInt::from(self.ext.p);
        self.abs > 0 && self.coeffs.iter().any(|c| !c.mod_floor(&pb).is_zero())
    }

    /// The value as a base-field scalar when the non-constant coordinates vanish to precision.
    pub fn to_base(&self) -> Result<Padic, PadicError> {
        if self.coeffs.iter().skip(1).any(|c| !c.is_zero()) {
            return Err(PadicError::NotInBaseField);
        }
        Ok(self.coeff(0))
    }

    fn mul_matrix(&self) -> Vec<Vec<BigInt>> {
        let d = self.ext.degree();
        let mut cols = Vec::with_capacity(d);
        let mut basis = ExtElement::from_int(&self.ext, &BigInt::one(), self.abs);
        for i in 0..d {
            cols.push(self.mul(&basis).coeffs.clone());
            if i + 1 < d {
                let t = ExtElement::from_coeffs(&self.ext, &[BigInt::zero(), BigInt::one()], self.abs);
                basis = basis.mul(&t);
            }
        }
        cols
    }

    pub fn trace(&self) -> Padic {
        let cols = self.mul_matrix();
        let tr: BigInt = (0..cols.len()).map(|i| cols[i][i].clone()).sum();
        Padic::from_int_abs(self.ext.p, &tr, self.abs)
    }

    /// Determinant of multiplication by `self`.
    pub fn norm(&self) -> Padic {
        let det = det_int(&self.mul_matrix());
        Padic::from_int_abs(self.ext.p, &det, self.abs)
    }
}

fn det_int(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 1 {
        return a[0][0].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        let minor: Vec<Vec<BigInt>> = (1..n)
            .map(|i| (0..n).filter(|&k| k != j).map(|k| a[i][k].clone()).collect())
            .collect();
        let term = &a[0][j] * det_int(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Iwasawa logarithm on units of an unramified extension.
///
/// Raising to `(q - 1) p^k` lands in `1 + p^(k+1)`, where the series converges quickly;
/// dividing back by `(q - 1) p^k` gives the value of the branch with `log(p) = 0`.
pub fn ext_log(x: &ExtElement) -> Result<ExtElement, PadicError> {
    if !x.is_unit() {
        return Err(PadicError::NotAUnitInExtension);
    }
    let ext = x.ext.clone();
    let p = ext.p;
    let abs = x.abs;
    let k = ((abs as f64).sqrt() as u32).max(1);
    let m = abs + k;
    let lifted = x.with_abs(m);
    let e = (ext.residue_size() - BigUint::one()) * ppow(p, k);
    let w = lifted.pow(&e);
    let one = ExtElement::from_int(&ext, &BigInt::one(), m);
    let z = w.sub(&one);
    // log(1 + z) coordinate-wise needs powers of z in the ring, so run the series here
    let out = ext_log_series(&z, k, m);
    let pk = BigInt::from(ppow(p, k));
    let out_mod = BigInt::from(ppow(p, abs));
    let inv = mod_inverse(&(BigInt::from(ext.residue_size()) - 1), &out_mod).unwrap();
    let coeffs: Vec<BigInt> = out.coeffs.iter().map(|c| ((c / &pk) * &inv).mod_floor(&out_mod)).collect();
    Ok(ExtElement::from_coeffs(&ext, &coeffs, abs))
}

fn ext_log_series(z: &ExtElement, k: u32, m: u32) -> ExtElement {
    let ext = z.ext.clone();
    let p = ext.p;
    if ext.degree() == 1 {
        let v = log_series_mod(p, &z.coeffs[0], k, m);
        return ExtElement::from_int(&ext, &v, m);
    }
    let mut j_max = 1u32;
    while (j_max + 1) as i64 * (k as i64 + 1) - super::analytic::ilog(p, j_max + 1) as i64 <= m as i64 {
        j_max += 1;
    }
    let extra = super::analytic::ilog(p, j_max);
    let big = m + extra;
    let zb = z.with_abs(big);
    let small_mod = BigInt::from(ppow(p, m));
    let mut acc = vec![BigInt::zero(); ext.degree()];
    let mut zj = ExtElement::from_int(&ext, &BigInt::one(), big);
    for j in 1..=j_max {
        zj = zj.mul(&zb);
        let jb = BigInt::from(j);
        let e = super::scalar::val_int(p, &jb);
        let pe = BigInt::from(ppow(p, e));
        let cof_inv = mod_inverse(&(&jb / &pe), &small_mod).unwrap();
        for (a, c) in acc.iter_mut().zip(&zj.coeffs) {
            let term = (c / &pe) * &cof_inv;
            if j % 2 == 1 {
                *a += term;
            } else {
                *a -= term;
            }
        }
    }
    ExtElement::from_coeffs(&ext, &acc, m)
}

/// Extension generated by a primitive `f`-th root of unity, `p` not dividing `f`,
/// together with that root (the Teichmüller lift of a residue of order `f`).
pub fn cyclotomic_ext(p: u64, f: u64, abs: u32) -> (Arc<UnramifiedExt>, ExtElement) {
    let d = order_mod(p, f);
    let ext = UnramifiedExt::of_degree(p, d);
    let q = ext.residue_size();
    let qm1 = &q - BigUint::one();
    let cofactor = &qm1 / BigUint::from(f);
    let primes: Vec<u64> = (2..=f).filter(|&l| f % l == 0 && super::scalar::is_prime_u64(l)).collect();
    let one1 = ExtElement::from_int(&ext, &BigInt::one(), 1);
    let total = q.clone();
    let mut idx = BigUint::one();
    let zeta_res = loop {
        assert!(idx < total, "no element of order f in the residue field");
        let digits = idx.to_radix_le(p as u32);
        let coeffs: Vec<BigInt> = digits.iter().map(|&d| BigInt::from(d)).collect();
        let c = ExtElement::from_coeffs(&ext, &coeffs, 1);
        let z = c.pow(&cofactor);
        let primitive = primes.iter().all(|l| z.pow(&BigUint::from(f / l)) != one1);
        if primitive {
            break z;
        }
        idx += BigUint::one();
    };
    let lift = zeta_res.with_abs(abs).pow(&q.pow(abs.saturating_sub(1)));
    (ext, lift)
}

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::quadratic::{class_number, fundamental_unit, integer_sqrt_exact, p_unit, split_prime, QuadElement, QuadField};
use super::FieldError;
use crate::padic::Padic;

/// Element of `H = Q(sqrt mK, sqrt mF)` in the basis `1, sqrt mK, sqrt mF, sqrt(mK mF)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiquadElement {
    pub coords: [BigRational; 4],
}

/// The four automorphisms of `H`: identity, the generator of `Gal(H/K)`,
/// complex conjugation, and their product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GaloisElement {
    Identity,
    /// Fixes `K`, moves `F`.
    G,
    /// Complex conjugation: fixes `F`.
    Tau,
    /// Fixes `K'`.
    GTau,
}

impl GaloisElement {
    pub const ALL: [GaloisElement; 4] = [GaloisElement::Identity, GaloisElement::G, GaloisElement::Tau, GaloisElement::GTau];

    /// Signs on `(sqrt mK, sqrt mF)`.
    fn signs(self) -> (i32, i32) {
        match self {
            GaloisElement::Identity => (1, 1),
            GaloisElement::G => (1, -1),
            GaloisElement::Tau => (-1, 1),
            GaloisElement::GTau => (-1, -1),
        }
    }

    pub fn compose(self, other: GaloisElement) -> GaloisElement {
        let (a, b) = self.signs();
        let (c, d) = other.signs();
        match (a * c, b * d) {
            (1, 1) => GaloisElement::Identity,
            (1, -1) => GaloisElement::G,
            (-1, 1) => GaloisElement::Tau,
            _ => GaloisElement::GTau,
        }
    }
}

/// The biquadratic field `H = K F` with the Galois action and a `p`-adic embedding.
#[derive(Clone, Debug)]
pub struct BiquadField {
    pub k: QuadField,
    pub f: QuadField,
    pub kprime: QuadField,
    /// `sqrt(mK mF) = ratio * sqrt(mK')`.
    ratio: BigRational,
}

impl BiquadField {
    pub fn new(k: QuadField, f: QuadField) -> Result<Self, FieldError> {
        if !k.is_imaginary() {
            return Err(FieldError::NotImaginary(k.disc()));
        }
        if f.is_imaginary() {
            return Err(FieldError::NotReal(f.disc()));
        }
        let prod = k.core() * f.core();
        let mut core = prod;
        let mut c = 1i64;
        let mut q = 2i64;
        while q * q <= core.abs() {
            while core % (q * q) == 0 {
                core /= q * q;
                c *= q;
            }
            q += 1;
        }
        let kprime = QuadField::new(core)?;
        debug_assert_eq!(integer_sqrt_exact(prod / core), Some(c));
        Ok(BiquadField { k, f, kprime, ratio: BigRational::from_integer(c.into()) })
    }

    fn mk(&self) -> BigRational {
        BigRational::from_integer(self.k.core().into())
    }

    fn mf(&self) -> BigRational {
        BigRational::from_integer(self.f.core().into())
    }

    pub fn zero(&self) -> BiquadElement {
        BiquadElement { coords: std::array::from_fn(|_| BigRational::zero()) }
    }

    pub fn from_k(&self, z: &QuadElement) -> BiquadElement {
        assert_eq!(z.field, self.k);
        let mut e = self.zero();
        e.coords[0] = z.a.clone();
        e.coords[1] = z.b.clone();
        e
    }

    pub fn from_f(&self, z: &QuadElement) -> BiquadElement {
        assert_eq!(z.field, self.f);
        let mut e = self.zero();
        e.coords[0] = z.a.clone();
        e.coords[2] = z.b.clone();
        e
    }

    pub fn from_kprime(&self, z: &QuadElement) -> BiquadElement {
        assert_eq!(z.field, self.kprime);
        let mut e = self.zero();
        e.coords[0] = z.a.clone();
        e.coords[3] = &z.b / &self.ratio;
        e
    }

    pub fn mul(&self, x: &BiquadElement, y: &BiquadElement) -> BiquadElement {
        let [a0, a1, a2, a3] = &x.coords;
        let [b0, b1, b2, b3] = &y.coords;
        let (mk, mf) = (self.mk(), self.mf());
        let mkf = &mk * &mf;
        let c0 = a0 * b0 + a1 * b1 * &mk + a2 * b2 * &mf + a3 * b3 * &mkf;
        let c1 = a0 * b1 + a1 * b0 + (a2 * b3 + a3 * b2) * &mf;
        let c2 = a0 * b2 + a2 * b0 + (a1 * b3 + a3 * b1) * &mk;
        let c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
        BiquadElement { coords: [c0, c1, c2, c3] }
    }

    pub fn act(&self, g: GaloisElement, x: &BiquadElement) -> BiquadElement {
        let (sk, sf) = g.signs();
        let [a0, a1, a2, a3] = x.coords.clone();
        let s = |v: BigRational, sign: i32| if sign < 0 { -v } else { v };
        BiquadElement { coords: [a0, s(a1, sk), s(a2, sf), s(a3, sk * sf)] }
    }

    /// Embedding from the images of `sqrt mK` and `sqrt mF`.
    pub fn embed(&self, x: &BiquadElement, sqrt_mk: &Padic, sqrt_mf: &Padic) -> Padic {
        let p = sqrt_mk.p();
        let prec = sqrt_mk.rel_prec().min(sqrt_mf.rel_prec()) + 8;
        let c = |i: usize| Padic::from_rational(p, &x.coords[i], prec);
        c(0).add(&c(1).mul(sqrt_mk)).add(&c(2).mul(sqrt_mf)).add(&c(3).mul(&sqrt_mk.mul(sqrt_mf)))
    }

    pub fn ratio(&self) -> &BigRational {
        &self.ratio
    }
}

/// Biquadratic configuration `H = K F` with a prime `p` split completely in `H`.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BiquadConfig {
    #[serde(rename = "dK")]
    pub d_k: i64,
    #[serde(rename = "dF")]
    pub d_f: i64,
    #[serde(rename = "dKprime")]
    pub d_kprime: i64,
    pub p: u64,
    pub prec: u32,
    #[serde(skip)]
    pub field: BiquadField,
    /// Images of `sqrt(D)` for `K`, `F` and `K'`.
    pub embed_k: Padic,
    pub embed_f: Padic,
    pub embed_kprime: Padic,
    pub eps_f: QuadElement,
    /// Generator of `p_K^ordUP`, the prime of `K` below the fixed place.
    pub u_p: QuadElement,
    #[serde(rename = "ordUP")]
    pub ord_u_p: u32,
    /// Generator of `p_K'^ordY0`, the prime of `K'` below the fixed place.
    pub y0: QuadElement,
    pub ord_y0: u32,
    /// Generator of `q_F^ordW`, the prime of `F` below the fixed place.
    pub w_f: QuadElement,
    pub ord_w_f: u32,
    pub h_k: usize,
    pub h_kprime: usize,
}

impl BiquadConfig {
    /// Images of `sqrt mK` and `sqrt mF` under the fixed embedding.
    pub fn core_embeddings(&self) -> (Padic, Padic) {
        (self.field.k.sqrt_core_from_disc(&self.embed_k), self.field.f.sqrt_core_from_disc(&self.embed_f))
    }

    pub fn embed(&self, x: &BiquadElement) -> Padic {
        let (a, b) = self.core_embeddings();
        self.field.embed(x, &a, &b)
    }

    /// Generator of the place `v0` of `H` in the group of p-units tensored with `Q`:
    /// `u_p^(1/ordUP) y0^(1/ordY0) w^(1/ordW) p^(-1)` has valuation `(2, 0, 0, 0)` at
    /// `(v0, g v0, tau v0, g tau v0)`.
    pub fn v0_unit(&self) -> Vec<(BiquadElement, BigRational)> {
        let h = &self.field;
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let mut p_elt = h.zero();
        p_elt.coords[0] = BigRational::from_integer(BigInt::from(self.p));
        vec![
            (h.from_k(&self.u_p), r(1, self.ord_u_p as i64)),
            (h.from_kprime(&self.y0), r(1, self.ord_y0 as i64)),
            (h.from_f(&self.w_f), r(1, self.ord_w_f as i64)),
            (p_elt, r(-1, 1)),
        ]
    }

    /// `ord_{v0}` of `v0_unit`.
    pub fn v0_unit_order(&self) -> BigRational {
        BigRational::from_integer(2.into())
    }
}

/// Builds the configuration for `(dK, dF, p)`; `K'` is the third quadratic subfield.
pub fn build_biquad(d_k: i64, d_f: i64, p: u64, prec: u32) -> Result<BiquadConfig, FieldError> {
    let k = QuadField::new(d_k)?;
    let f = QuadField::new(d_f)?;
    let field = BiquadField::new(k, f)?;
    let kp = field.kprime;
    if [k, f, kp].iter().any(|x| x.character(p as i64) != 1) {
        return Err(FieldError::PrimeNotSplitCompletely(p));
    }
    let guard = prec + 6;
    let sk = split_prime(&k, p, guard)?;
    let sf = split_prime(&f, p, guard)?;
    // sqrt(dK) sqrt(dF) = s sqrt(dK') with s > 0
    let s2 = (k.disc() * f.disc()) / kp.disc();
    let s = integer_sqrt_exact(s2).expect("discriminant ratio is a square");
    let s_inv = Padic::from_rational(p, &BigRational::new(1.into(), s.into()), guard + 4);
    let embed_kprime = sk.sqrt_disc.mul(&sf.sqrt_disc).mul(&s_inv);
    let eps_f = fundamental_unit(&f)?;
    let h_k = class_number(&k)?;
    let h_kprime = class_number(&kp)?;
    let (u_p, ord_u_p) = p_unit(&k, &sk.sqrt_disc, h_k as u32)?;
    let (y0, ord_y0) = p_unit(&kp, &embed_kprime, h_kprime as u32)?;
    let (w_f, ord_w_f) = p_unit(&f, &sf.sqrt_disc, 6)?;
    Ok(BiquadConfig {
        d_k: k.disc(),
        d_f: f.disc(),
        d_kprime: kp.disc(),
        p,
        prec,
        field,
        embed_k: sk.sqrt_disc,
        embed_f: sf.sqrt_disc,
        embed_kprime,
        eps_f,
        u_p,
        ord_u_p,
        y0,
        ord_y0,
        w_f,
        ord_w_f,
        h_k,
        h_kprime,
    })
}

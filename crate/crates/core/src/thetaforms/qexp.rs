use serde::Serialize;

use super::{ClassCharacter, Cyclo, ThetaError};
use crate::fields::kronecker;

/// Weight-one q-expansion `sum_{n=0}^{L} a_n q^n` with exact cyclotomic coefficients.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct QExpansion {
    pub coeffs: Vec<Cyclo>,
    pub level: u64,
    pub weight: u32,
    /// Discriminant of the quadratic nebentypus.
    pub nebentypus: i64,
    pub cuspidal: bool,
}

impl QExpansion {
    /// Largest index `L` with a known coefficient.
    pub fn len(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, n: usize) -> &Cyclo {
        &self.coeffs[n]
    }

    fn order(&self) -> usize {
        self.coeffs[0].order()
    }

    fn with_coeffs(&self, coeffs: Vec<Cyclo>) -> QExpansion {
        QExpansion { coeffs, ..self.clone() }
    }

    pub fn truncate(&self, len: usize) -> QExpansion {
        self.with_coeffs(self.coeffs[..=len.min(self.len())].to_vec())
    }

    pub fn add(&self, o: &QExpansion) -> QExpansion {
        let n = self.len().min(o.len());
        self.with_coeffs((0..=n).map(|i| self.coeffs[i].add(&o.coeffs[i])).collect())
    }

    pub fn sub(&self, o: &QExpansion) -> QExpansion {
        self.add(&o.scale(&Cyclo::from_int(o.order(), -1)))
    }

    pub fn scale(&self, c: &Cyclo) -> QExpansion {
        self.with_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Cyclo::is_zero)
    }
}

/// Number of integer solutions of `a x^2 + b xy + c y^2 = n` for every `n <= len`.
fn representation_counts(a: i64, b: i64, c: i64, len: usize) -> Vec<i64> {
    let d = (4 * a * c - b * b) as f64;
    let l = len as f64;
    let y_max = (4.0 * a as f64 * l / d).sqrt().floor() as i64 + 1;
    let mut counts = vec![0i64; len + 1];
    for y in -y_max..=y_max {
        // a x^2 + b y x + c y^2 - n = 0 bounds x around -b y / 2a
        let centre = -(b * y) as f64 / (2.0 * a as f64);
        let radius = ((l - (d / (4.0 * a as f64)) * (y * y) as f64).max(0.0) / a as f64).sqrt() + 1.0;
        let lo = (centre - radius).floor() as i64;
        let hi = (centre + radius).ceil() as i64;
        for x in lo..=hi {
            let n = a * x * x + b * x * y + c * y * y;
            if n >= 0 && (n as usize) <= len {
                counts[n as usize] += 1;
            }
        }
    }
    counts
}

/// Theta series `sum_a psi(a) q^N(a)` of a class-group character, to `q^len`.
///
/// The trivial character gives an Eisenstein series and is rejected; real characters
/// (genus characters) are accepted and flagged as non-cuspidal.
pub fn theta_qexp(psi: &ClassCharacter, len: usize) -> Result<QExpansion, ThetaError> {
    if psi.is_trivial() {
        return Err(ThetaError::CharacterDescends);
    }
    let w = psi.field.roots_of_unity() as i64;
    let mut coeffs = vec![Cyclo::zero(psi.order); len + 1];
    for (class, form) in psi.group.forms.iter().enumerate() {
        let counts = representation_counts(form.a, form.b, form.c, len);
        let value = psi.value(class);
        for (n, &r) in counts.iter().enumerate().skip(1) {
            if r != 0 {
                debug_assert_eq!(r % w, 0);
                coeffs[n] = coeffs[n].add(&value.scale(r / w));
            }
        }
    }
    Ok(QExpansion {
        coeffs,
        level: psi.field.disc().unsigned_abs(),
        weight: 1,
        nebentypus: psi.field.disc(),
        cuspidal: !psi.is_real(),
    })
}

/// `f(z) = theta(z) - psi(pbar) theta(pz)`, the stabilization in the irregular case.
pub fn p_stabilize(theta: &QExpansion, p: u64, psi_p: &Cyclo, psi_pbar: &Cyclo) -> Result<QExpansion, ThetaError> {
    if psi_p != psi_pbar {
        return Err(ThetaError::RegularCase(p));
    }
    let p = p as usize;
    let coeffs = (0..=theta.len())
        .map(|n| if n % p == 0 { theta.coeffs[n].sub(&theta.coeffs[n / p].mul(psi_pbar)) } else { theta.coeffs[n].clone() })
        .collect();
    let mut f = theta.with_coeffs(coeffs);
    f.level = theta.level * p as u64;
    Ok(f)
}

/// `(U_p g)_n = g_{np}`, known to `q^(L/p)`.
pub fn up_action(g: &QExpansion, p: u64) -> Result<QExpansion, ThetaError> {
    let p = p as usize;
    let len = g.len() / p;
    if len == 0 {
        return Err(ThetaError::LengthExhausted);
    }
    Ok(g.with_coeffs((0..=len).map(|n| g.coeffs[n * p].clone()).collect()))
}

/// `(T_l g)_n = g_{nl} + eps(l) g_{n/l}` in weight one with quadratic nebentypus.
pub fn hecke_tl(g: &QExpansion, l: u64) -> Result<QExpansion, ThetaError> {
    if g.level % l == 0 {
        return Err(ThetaError::BadPrime(l));
    }
    let eps = kronecker(g.nebentypus, l as i64) as i64;
    let l = l as usize;
    let len = g.len() / l;
    if len == 0 {
        return Err(ThetaError::LengthExhausted);
    }
    let coeffs = (0..=len)
        .map(|n| {
            let mut c = g.coeffs[n * l].clone();
            if n % l == 0 {
                c = c.add(&g.coeffs[n / l].scale(eps));
            }
            c
        })
        .collect();
    Ok(g.with_coeffs(coeffs))
}

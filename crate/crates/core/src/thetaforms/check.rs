use serde::Serialize;

use super::{p_stabilize, theta_qexp, up_action, ClassCharacter, Cyclo, QExpansion, ThetaError};
use crate::fields::kronecker;

/// Outcome of the `U_p` computation on `span{theta, f}` in the irregular case.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct UpCheck {
    pub p: u64,
    /// `psi(p) = psi(pbar)`.
    pub psi_p: Cyclo,
    /// Coefficients checked in `(U_p - psi(p)) theta = psi(p) f` and `(U_p - psi(p)) f = 0`.
    pub checked_up_to: usize,
    /// Matrix of `U_p` in the basis `(theta, f)`, columns are images.
    pub matrix: [[Cyclo; 2]; 2],
    /// Smallest `k` with `(U_p - psi(p))^k = 0` on the span.
    pub nilpotency_index: u32,
    pub semisimple: bool,
}

/// `psi(p)` and `psi(pbar)` for the primes above a split `p`, `p` being the one at the smaller
/// residue square root of the discriminant.
pub fn prime_values(psi: &ClassCharacter, p: u64) -> Result<(Cyclo, Cyclo), ThetaError> {
    let d = psi.field.disc();
    if kronecker(d, p as i64) != 1 {
        return Err(ThetaError::PrimeNotSplit(p));
    }
    let root = (1..p).find(|r| (r * r) as i64 % p as i64 == d.rem_euclid(p as i64)).unwrap_or(1);
    let class = psi.group.prime_class(p as i64, root as i64);
    Ok((psi.value(class), psi.value(psi.group.inverse(class))))
}

fn minus_eigen(g: &QExpansion, p: u64, alpha: &Cyclo) -> Result<QExpansion, ThetaError> {
    let u = up_action(g, p)?;
    Ok(u.sub(&g.truncate(u.len()).scale(alpha)))
}

pub fn up_identity_check(psi: &ClassCharacter, p: u64, len: usize) -> Result<UpCheck, ThetaError> {
    let (alpha, alpha_bar) = prime_values(psi, p)?;
    let theta = theta_qexp(psi, len)?;
    let f = p_stabilize(&theta, p, &alpha, &alpha_bar)?;

    let lhs = minus_eigen(&theta, p, &alpha)?;
    let rhs = f.truncate(lhs.len()).scale(&alpha);
    if let Some(n) = (1..=lhs.len()).find(|&n| lhs.coeff(n) != rhs.coeff(n)) {
        return Err(ThetaError::IdentityFails(n));
    }
    let killed = minus_eigen(&f, p, &alpha)?;
    if let Some(n) = (1..=killed.len()).find(|&n| !killed.coeff(n).is_zero()) {
        return Err(ThetaError::IdentityFails(n));
    }
    let zero = Cyclo::zero(alpha.order());
    let matrix = [[alpha.clone(), zero.clone()], [alpha.clone(), alpha.clone()]];
    let nilpotency_index = nilpotency_index(&matrix, &alpha);
    let semisimple = nilpotency_index <= 1;
    Ok(UpCheck { p, psi_p: alpha, checked_up_to: lhs.len(), matrix, nilpotency_index, semisimple })
}

/// Smallest `k <= 2` with `(M - alpha)^k = 0` for a 2x2 matrix `M`, or 3 if there is none.
fn nilpotency_index(m: &[[Cyclo; 2]; 2], alpha: &Cyclo) -> u32 {
    let n = [[m[0][0].sub(alpha), m[0][1].clone()], [m[1][0].clone(), m[1][1].sub(alpha)]];
    if n.iter().flatten().all(Cyclo::is_zero) {
        return 1;
    }
    let sq = |i: usize, j: usize| n[i][0].mul(&n[0][j]).add(&n[i][1].mul(&n[1][j]));
    if (0..2).all(|i| (0..2).all(|j| sq(i, j).is_zero())) {
        2
    } else {
        3
    }
}

use std::sync::Arc;

use serde::Serialize;

use super::algebra::{unit, Elem, LocalAlgebra};
use super::linalg::{kernel_modulo, Echelon, SparseVec};
use super::morphism::AlgebraMorphism;
use super::AlgError;

/// Extra truncation degrees used to certify that a result has stabilized.
pub const STABILITY_STEP: u32 = 3;

pub fn tangent_dim(a: &LocalAlgebra) -> usize {
    a.hilbert_function().get(1).copied().unwrap_or(0)
}

/// `dim A / (I + m^2)`.
pub fn special_fiber_dim(a: &LocalAlgebra, ideal: &[Elem]) -> usize {
    let mut span = a.ideal_span(ideal);
    for x in a.max_ideal_power(2) {
        span.insert(&x);
    }
    a.dim() - span.rank()
}

/// Products `x y` for `x` in `I`, `y` in `J`, as ideal generators.
pub fn ideal_product(a: &LocalAlgebra, i: &[Elem], j: &[Elem]) -> Vec<Elem> {
    i.iter().flat_map(|x| j.iter().map(move |y| a.mul(x, y))).filter(|z| !z.is_empty()).collect()
}

pub fn ideal_contains(a: &LocalAlgebra, ideal: &[Elem], x: &Elem) -> bool {
    a.ideal_span(ideal).contains(x)
}

/// Whether two ideals have the same span at the algebra's truncation.
pub fn ideals_equal(a: &LocalAlgebra, i: &[Elem], j: &[Elem]) -> bool {
    let si = a.ideal_span(i);
    let sj = a.ideal_span(j);
    si.rank() == sj.rank() && a.span_elements(&si).iter().all(|x| sj.contains(x))
}

/// `Ann(I)` as a vector-space basis.
pub fn annihilator(a: &LocalAlgebra, ideal: &[Elem]) -> Vec<Elem> {
    a.annihilator_basis(ideal)
}

/// Dimension of `(I : m) / I`, the socle of `A / I`.
fn socle_dim_modulo(a: &LocalAlgebra, ideal: &Echelon) -> usize {
    let stride = a.monomials().len();
    let n = a.ngens();
    let mut modulo = Echelon::new();
    for slot in 0..n {
        for x in a.span_elements(ideal) {
            modulo.insert(&x.iter().map(|(k, c)| (slot * stride + k, c.clone())).collect());
        }
    }
    let images: Vec<(usize, SparseVec)> = a
        .basis_indices()
        .iter()
        .map(|&b| {
            let mut v = SparseVec::new();
            for slot in 0..n {
                for (k, c) in a.mul(&unit(b), &a.gen(slot)) {
                    v.insert(slot * stride + k, c);
                }
            }
            (b, v)
        })
        .collect();
    kernel_modulo(&images, &modulo).len() - ideal.rank()
}

/// Socle dimension of an Artinian algebra; needs `m^k = 0` for some `k <= D`.
pub fn socle_dim(a: &LocalAlgebra) -> Result<usize, AlgError> {
    a.nilpotency().ok_or(AlgError::TruncationInconclusive("no power of m vanishes below the truncation".into()))?;
    Ok(socle_dim_modulo(a, &Echelon::new()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GorensteinReport {
    pub is_gorenstein: bool,
    pub socle_dim: usize,
    /// Smallest `k` with `m^k` inside `aA`.
    pub quotient_nilpotency: u32,
}

/// Socle of `A / aA` for a regular element `a`.
pub fn gorenstein_check(alg: &LocalAlgebra, a: &Elem) -> Result<GorensteinReport, AlgError> {
    let ord = alg.order(a).ok_or(AlgError::ElementNotRegular)?;
    if ord == 0 {
        return Err(AlgError::ElementNotRegular);
    }
    // multiplication by a may only kill what the truncation kills
    let floor = (alg.degree() + 1).saturating_sub(ord);
    for k in alg.annihilator_basis(std::slice::from_ref(a)) {
        if alg.order(&k).is_some_and(|o| o < floor) {
            return Err(AlgError::ElementNotRegular);
        }
    }
    let ideal = alg.ideal_span(std::slice::from_ref(a));
    let mut nilpotency = None;
    for k in 1..=alg.degree() {
        let mut span = ideal.clone();
        for x in alg.max_ideal_power(k + 1) {
            span.insert(&x);
        }
        let layer_inside = alg
            .basis_indices()
            .iter()
            .filter(|i| alg.monomials().total_degree(**i) == k)
            .all(|i| span.contains(&unit(*i)));
        // m^k in aA + m^(k+1) gives m^k in aA by Nakayama, and k <= D makes the test exact
        if layer_inside {
            nilpotency = Some(k);
            break;
        }
    }
    let quotient_nilpotency =
        nilpotency.ok_or(AlgError::TruncationInconclusive("A / aA is not Artinian below the truncation".into()))?;
    let socle_dim = socle_dim_modulo(alg, &ideal);
    Ok(GorensteinReport { is_gorenstein: socle_dim == 1, socle_dim, quotient_nilpotency })
}

/// `C^0 = pi(Ann(ker pi)) = (X^k)` for a surjection onto a truncated power series ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CongruenceIdeal {
    pub exponent: u32,
    /// Truncations at which the exponent was computed and agreed.
    pub degrees: (u32, u32),
}

pub fn congruence_ideal(pi: &AlgebraMorphism) -> Result<CongruenceIdeal, AlgError> {
    let target = pi.target();
    if target.ngens() != 1 || !target.relations().is_empty() {
        return Err(AlgError::NotAMorphism("congruence ideals need a one-variable power series target".into()));
    }
    if !pi.is_surjective() {
        return Err(AlgError::NotSurjective);
    }
    let d = pi.source().degree();
    let first = congruence_exponent(pi, d)?;
    let second = congruence_exponent(pi, d + STABILITY_STEP)?;
    match (first, second) {
        (Some(a), Some(b)) if a == b => Ok(CongruenceIdeal { exponent: a, degrees: (d, d + STABILITY_STEP) }),
        _ => Err(AlgError::TruncationInconclusive(format!("congruence exponent {first:?} at D = {d}, {second:?} at D + {STABILITY_STEP}"))),
    }
}

fn congruence_exponent(pi: &AlgebraMorphism, degree: u32) -> Result<Option<u32>, AlgError> {
    let source = Arc::new(pi.source().with_degree(degree));
    // a target deep enough that no normal form of degree <= D loses terms
    let stretch = pi.images().iter().filter_map(|p| p.degree()).max().unwrap_or(1).max(1);
    let target = Arc::new(pi.target().with_degree(degree * stretch));
    let faithful = AlgebraMorphism::unchecked(source.clone(), target.clone(), pi.images().to_vec())?;
    let kernel = faithful.kernel();
    let ann = source.annihilator_basis(&kernel);
    Ok(ann.iter().filter_map(|t| target.order(&faithful.apply(t))).filter(|k| *k <= degree).min())
}

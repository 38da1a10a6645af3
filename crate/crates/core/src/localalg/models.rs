use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::algebra::{Elem, LocalAlgebra};
use super::fiber::{fiber_product, FiberProduct};
use super::invariants::{congruence_ideal, gorenstein_check, special_fiber_dim, tangent_dim, CongruenceIdeal, GorensteinReport, STABILITY_STEP};
use super::morphism::{iso_witness_check, AlgebraMorphism};
use super::poly::Poly;
use super::AlgError;

/// Which of the two Hecke ring shapes to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelCase {
    /// Four power series factors glued over the residue field.
    I,
    /// `Λ ×_Q (Λ[Z]/(Z^2 - X^r) ×_{Q[X]/(X^(r-1))} Λ)`.
    II,
}

impl fmt::Display for ModelCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelCase::I => "i",
            ModelCase::II => "ii",
        })
    }
}

impl FromStr for ModelCase {
    type Err = AlgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "i" | "I" | "1" => Ok(ModelCase::I),
            "ii" | "II" | "2" => Ok(ModelCase::II),
            _ => Err(AlgError::InvalidParameters(format!("unknown case {s}"))),
        }
    }
}

/// A truncated local Hecke ring with its three projections.
#[derive(Clone, Debug)]
pub struct HeckeModel {
    pub case: ModelCase,
    pub r: u32,
    pub e: u32,
    pub ring: Arc<LocalAlgebra>,
    /// Image of the weight variable `X`.
    pub lambda: Elem,
    /// Element whose quotient is tested for the Gorenstein property.
    pub regular: Elem,
    /// Onto the first `Λ` factor.
    pub pi_psi: AlgebraMorphism,
    /// Onto the middle factor.
    pub pi_perp: AlgebraMorphism,
    /// Onto the last `Λ` factor.
    pub pi_psi_tau: AlgebraMorphism,
    /// Every fiber product in the construction stabilized.
    pub stable: bool,
}

fn power_series(name: &str, degree: u32) -> Arc<LocalAlgebra> {
    Arc::new(LocalAlgebra::from_presentation(&[name], &[], degree).expect("no relations"))
}

fn residue_field(degree: u32) -> Arc<LocalAlgebra> {
    Arc::new(LocalAlgebra::from_presentation(&[], &[], degree).expect("no relations"))
}

/// The map sending every generator to zero.
fn augmentation(a: &Arc<LocalAlgebra>, field: &Arc<LocalAlgebra>) -> AlgebraMorphism {
    AlgebraMorphism::new(a.clone(), field.clone(), vec![Poly::zero(0); a.ngens()]).expect("augmentation is a morphism")
}

fn lift(fp: &FiberProduct, a: &Elem, b: &Elem) -> Result<Elem, AlgError> {
    fp.lift(a, b).ok_or_else(|| AlgError::NotAMorphism("components do not agree over the base".into()))
}

fn over_residue_field(a: &Arc<LocalAlgebra>, b: &Arc<LocalAlgebra>, degree: u32) -> Result<FiberProduct, AlgError> {
    let field = residue_field(degree);
    fiber_product(&augmentation(a, &field), &augmentation(b, &field))
}

pub fn build_model(case: ModelCase, r: u32, e: u32, degree: u32) -> Result<HeckeModel, AlgError> {
    if e == 0 {
        return Err(AlgError::InvalidParameters("e must be at least 1".into()));
    }
    match case {
        ModelCase::I if r != 2 => Err(AlgError::InvalidParameters(format!("case i has r = 2, got {r}"))),
        ModelCase::II if r < 3 => Err(AlgError::InvalidParameters(format!("case ii needs r >= 3, got {r}"))),
        ModelCase::II if e != 1 => Err(AlgError::InvalidParameters(format!("case ii has e = 1, got {e}"))),
        _ if degree < 2 * r + 2 => Err(AlgError::InvalidParameters(format!("truncation {degree} is below 2r + 2"))),
        ModelCase::I => build_case_one(e, degree),
        ModelCase::II => build_case_two(r, degree),
    }
}

fn build_case_one(e: u32, degree: u32) -> Result<HeckeModel, AlgError> {
    let lambda_ring = power_series("X", degree);
    let perp = power_series("Y", degree);
    let t_perp = over_residue_field(&perp, &perp, degree)?;
    let inner = over_residue_field(&t_perp.algebra, &lambda_ring, degree)?;
    let outer = over_residue_field(&lambda_ring, &inner.algebra, degree)?;

    let x = lambda_ring.gen(0);
    let y = perp.gen(0);
    let y_e = perp.pow(&y, e);
    let perp_lambda = lift(&t_perp, &y_e, &y_e)?;
    let perp_uniformizer = lift(&t_perp, &y, &y)?;
    let lambda = lift(&outer, &x, &lift(&inner, &perp_lambda, &x)?)?;
    let regular = lift(&outer, &x, &lift(&inner, &perp_uniformizer, &x)?)?;

    let ring = Arc::new(outer.algebra.renamed(&["x1", "y2", "y3", "x4"]));
    finish(ModelCase::I, 2, e, ring, lambda, regular, &outer, &inner, [&t_perp, &inner, &outer])
}

fn build_case_two(r: u32, degree: u32) -> Result<HeckeModel, AlgError> {
    let lambda_ring = power_series("X", degree);
    let perp = Arc::new(LocalAlgebra::parse(&["X", "Z"], &[&format!("Z^2 - X^{r}")], degree)?);
    let glue = Arc::new(LocalAlgebra::parse(&["X"], &[&format!("X^{}", r - 1)], degree)?);
    let f = AlgebraMorphism::parse(perp.clone(), glue.clone(), &["X", "0"])?;
    let g = AlgebraMorphism::parse(lambda_ring.clone(), glue, &["X"])?;
    let inner = fiber_product(&f, &g)?;
    let outer = over_residue_field(&lambda_ring, &inner.algebra, degree)?;

    let x = lambda_ring.gen(0);
    let lambda = lift(&outer, &x, &lift(&inner, &perp.gen(0), &x)?)?;
    let ring = Arc::new(outer.algebra.renamed(&["x", "u", "z", "w"]));
    finish(ModelCase::II, r, 1, ring, lambda.clone(), lambda, &outer, &inner, [&inner, &outer, &outer])
}

#[allow(clippy::too_many_arguments)]
fn finish(
    case: ModelCase,
    r: u32,
    e: u32,
    ring: Arc<LocalAlgebra>,
    lambda: Elem,
    regular: Elem,
    outer: &FiberProduct,
    inner: &FiberProduct,
    parts: [&FiberProduct; 3],
) -> Result<HeckeModel, AlgError> {
    let rename = |m: &AlgebraMorphism| AlgebraMorphism::new(ring.clone(), m.target().clone(), m.images().to_vec());
    Ok(HeckeModel {
        case,
        r,
        e,
        lambda,
        regular,
        pi_psi: rename(&outer.proj_a)?,
        pi_perp: rename(&outer.proj_b.then(&inner.proj_a))?,
        pi_psi_tau: rename(&outer.proj_b.then(&inner.proj_b))?,
        stable: parts.iter().all(|p| p.stable),
        ring,
    })
}

/// Dimension data, Gorenstein test and congruence ideals of a model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ModelReport {
    pub case: ModelCase,
    pub r: u32,
    pub e: u32,
    pub truncation: u32,
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    pub dim: usize,
    pub tangent_dim: usize,
    /// `dim T / (m_Λ T + m_T^2)`.
    pub special_fiber_dim: usize,
    pub gorenstein: GorensteinReport,
    pub congruence_psi: CongruenceIdeal,
    pub congruence_psi_tau: CongruenceIdeal,
    /// The dimension data agree with a rebuild at a larger truncation.
    pub stable: bool,
}

struct Invariants {
    tangent: usize,
    special: usize,
    gorenstein: GorensteinReport,
}

fn invariants(model: &HeckeModel) -> Result<Invariants, AlgError> {
    let t = &model.ring;
    Ok(Invariants {
        tangent: tangent_dim(t),
        special: special_fiber_dim(t, std::slice::from_ref(&model.lambda)),
        gorenstein: gorenstein_check(t, &model.regular)?,
    })
}

pub fn model_report(case: ModelCase, r: u32, e: u32, degree: u32) -> Result<ModelReport, AlgError> {
    let model = build_model(case, r, e, degree)?;
    let base = invariants(&model)?;
    let wider = build_model(case, r, e, degree + STABILITY_STEP)?;
    let check = invariants(&wider)?;
    let stable = model.stable
        && wider.stable
        && base.tangent == check.tangent
        && base.special == check.special
        && base.gorenstein == check.gorenstein;
    let t = &model.ring;
    Ok(ModelReport {
        case,
        r,
        e,
        truncation: degree,
        generators: t.names().to_vec(),
        relations: t.relations().iter().map(|p| p.display(t.names()).to_string()).collect(),
        dim: t.dim(),
        tangent_dim: base.tangent,
        special_fiber_dim: base.special,
        gorenstein: base.gorenstein,
        congruence_psi: congruence_ideal(&model.pi_psi)?,
        congruence_psi_tau: congruence_ideal(&model.pi_psi_tau)?,
        stable,
    })
}

/// The explicit map `Y -> (Y, Y)`, `Z -> (Y^(r/2), -Y^(r/2))` from `R[Z]/(Z^2 - Y^r)` onto
/// `R ×_{R/(Y^(r/2))} R` for even `r`, and the identity of `R[Z]/(Z^2 - Y^r)` for odd `r`.
pub fn iso_witness(r: u32, degree: u32) -> Result<AlgebraMorphism, AlgError> {
    if r < 2 {
        return Err(AlgError::InvalidParameters(format!("r must be at least 2, got {r}")));
    }
    let source = Arc::new(LocalAlgebra::parse(&["Y", "Z"], &[&format!("Z^2 - Y^{r}")], degree)?);
    if r % 2 == 1 {
        return Ok(AlgebraMorphism::identity(source));
    }
    let half = r / 2;
    let perp = power_series("Y", degree);
    let base = Arc::new(LocalAlgebra::parse(&["Y"], &[&format!("Y^{half}")], degree)?);
    let quotient = AlgebraMorphism::parse(perp.clone(), base, &["Y"])?;
    let fp = fiber_product(&quotient, &quotient)?;
    let y = perp.gen(0);
    let y_half = perp.pow(&y, half);
    let images = [lift(&fp, &y, &y)?, lift(&fp, &y_half, &perp.scale(&y_half, &(-num_rational::BigRational::from_integer(1.into()))))?];
    let images = images.iter().map(|x| fp.algebra.to_poly(x)).collect();
    AlgebraMorphism::new(source, fp.algebra.clone(), images)
}

/// Checks the witness for `r`.
pub fn check_iso_witness(r: u32, degree: u32) -> Result<bool, AlgError> {
    iso_witness_check(&iso_witness(r, degree)?)
}

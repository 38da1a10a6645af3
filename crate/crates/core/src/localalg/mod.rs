//! Truncated complete local algebras over the rationals: presentations, fiber products,
//! ideal arithmetic, congruence ideals, socles, and models of local Hecke rings.

mod algebra;
mod fiber;
mod invariants;
mod linalg;
mod models;
mod morphism;
mod poly;

#[cfg(test)]
mod tests;

pub use algebra::{Elem, LocalAlgebra};
pub use fiber::{fiber_product, FiberProduct};
pub use invariants::{
    annihilator, congruence_ideal, gorenstein_check, ideal_contains, ideal_product, ideals_equal, socle_dim,
    special_fiber_dim, tangent_dim, CongruenceIdeal, GorensteinReport, STABILITY_STEP,
};
pub use linalg::{Echelon, SparseVec};
pub use models::{build_model, check_iso_witness, iso_witness, model_report, HeckeModel, ModelCase, ModelReport};
pub use morphism::{iso_witness_check, AlgebraMorphism};
pub use poly::{Monomials, Poly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error("relation {0} has a constant term")]
    RelationNotLocal(String),
    #[error("not an algebra morphism: {0}")]
    NotAMorphism(String),
    #[error("the maps to the base are not surjective")]
    NotSurjective,
    #[error("inconclusive at this truncation: {0}")]
    TruncationInconclusive(String),
    #[error("element is not regular at this truncation")]
    ElementNotRegular,
    #[error("invalid model parameters: {0}")]
    InvalidParameters(String),
    #[error("expected {expected} variables, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("cannot parse polynomial {0}")]
    Parse(String),
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
}

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::algebra::{unit, Elem, LocalAlgebra};
use super::linalg::{kernel, Echelon, SparseVec};
use super::poly::{Monomials, Poly};
use super::AlgError;

/// Local algebra map given by the images of the source generators.
#[derive(Clone, Debug)]
pub struct AlgebraMorphism {
    source: Arc<LocalAlgebra>,
    target: Arc<LocalAlgebra>,
    images: Vec<Poly>,
}

impl AlgebraMorphism {
    /// Checks locality and that every relation, and every monomial of degree `D + 1` of the
    /// source, maps to zero at the target's truncation.
    pub fn new(source: Arc<LocalAlgebra>, target: Arc<LocalAlgebra>, images: Vec<Poly>) -> Result<Self, AlgError> {
        let f = AlgebraMorphism::unchecked(source, target, images)?;
        f.check()?;
        Ok(f)
    }

    pub(crate) fn unchecked(source: Arc<LocalAlgebra>, target: Arc<LocalAlgebra>, images: Vec<Poly>) -> Result<Self, AlgError> {
        if images.len() != source.ngens() {
            return Err(AlgError::Arity { expected: source.ngens(), got: images.len() });
        }
        for p in &images {
            if p.nvars() != target.ngens() {
                return Err(AlgError::Arity { expected: target.ngens(), got: p.nvars() });
            }
        }
        Ok(AlgebraMorphism { source, target, images })
    }

    /// Parses the generator images as polynomials in the target's generators.
    pub fn parse(source: Arc<LocalAlgebra>, target: Arc<LocalAlgebra>, images: &[&str]) -> Result<Self, AlgError> {
        let names: Vec<&str> = target.names().iter().map(|s| s.as_str()).collect();
        let images = images.iter().map(|s| Poly::parse(&names, s)).collect::<Result<Vec<_>, _>>()?;
        AlgebraMorphism::new(source, target, images)
    }

    pub fn identity(algebra: Arc<LocalAlgebra>) -> Self {
        let n = algebra.ngens();
        let images = (0..n).map(|i| Poly::var(n, i)).collect();
        AlgebraMorphism { source: algebra.clone(), target: algebra, images }
    }

    pub fn source(&self) -> &Arc<LocalAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<LocalAlgebra> {
        &self.target
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    fn check(&self) -> Result<(), AlgError> {
        let tgt = &self.target;
        for (i, p) in self.images.iter().enumerate() {
            if !p.constant_term().is_zero() {
                return Err(AlgError::NotAMorphism(format!("image of {} is not in the maximal ideal", self.source.names()[i])));
            }
        }
        for r in self.source.relations() {
            if !self.apply_poly(r).is_empty() {
                return Err(AlgError::NotAMorphism(format!("relation {} does not map to zero", r.display(self.source.names()))));
            }
        }
        // monomials of degree D + 1 vanish in the source and must vanish in the target
        let n = self.source.ngens();
        let next = self.source.degree() + 1;
        let low = self.images.iter().filter_map(|p| p.order()).min().unwrap_or(u32::MAX) as u64;
        if n > 0 && low * next as u64 <= tgt.degree() as u64 {
            let mons = Monomials::new(n, next);
            for i in (0..mons.len()).filter(|i| mons.total_degree(*i) == next) {
                let m = Poly::from_terms(n, [(mons.exps(i).clone(), BigRational::one())]);
                if !self.apply_poly(&m).is_empty() {
                    return Err(AlgError::NotAMorphism("m^(D+1) of the source does not map to zero".into()));
                }
            }
        }
        Ok(())
    }

    /// Image of a source polynomial, reduced in the target.
    pub fn apply_poly(&self, p: &Poly) -> Elem {
        let tgt = &self.target;
        let gens: Vec<Elem> = self.images.iter().map(|q| tgt.elem(q)).collect();
        let mut powers: Vec<Vec<Elem>> = gens.iter().map(|g| vec![tgt.one(), g.clone()]).collect();
        let mut out = Elem::new();
        for (e, c) in p.terms() {
            let mut term = tgt.scalar(c);
            for (i, k) in e.iter().enumerate() {
                let k = *k as usize;
                while powers[i].len() <= k {
                    let next = tgt.mul(powers[i].last().unwrap(), &gens[i]);
                    powers[i].push(next);
                }
                if k > 0 {
                    term = tgt.mul(&term, &powers[i][k]);
                }
                if term.is_empty() {
                    break;
                }
            }
            out = tgt.add(&out, &term);
        }
        out
    }

    pub fn apply(&self, x: &Elem) -> Elem {
        self.apply_poly(&self.source.to_poly(x))
    }

    /// Images of the source basis, keyed by source monomial index.
    pub fn basis_images(&self) -> Vec<(usize, SparseVec)> {
        self.source.basis_indices().iter().map(|&b| (b, self.apply(&unit(b)))).collect()
    }

    pub fn kernel(&self) -> Vec<Elem> {
        kernel(&self.basis_images())
    }

    pub fn rank(&self) -> usize {
        let mut span = Echelon::new();
        for (_, v) in self.basis_images() {
            span.insert(&v);
        }
        span.rank()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AlgebraMorphism) -> AlgebraMorphism {
        assert_eq!(self.target.names(), other.source.names());
        let images = self.images.iter().map(|p| other.target.to_poly(&other.apply_poly(p))).collect();
        AlgebraMorphism { source: self.source.clone(), target: other.target.clone(), images }
    }

    /// The same map between the algebras rebuilt at other truncations.
    pub fn at_degrees(&self, source: u32, target: u32) -> AlgebraMorphism {
        AlgebraMorphism {
            source: Arc::new(self.source.with_degree(source)),
            target: Arc::new(self.target.with_degree(target)),
            images: self.images.clone(),
        }
    }
}

/// Checks that `phi` is a well-defined local map and a linear bijection at its truncation.
pub fn iso_witness_check(phi: &AlgebraMorphism) -> Result<bool, AlgError> {
    phi.check()?;
    Ok(phi.source.dim() == phi.target.dim() && phi.rank() == phi.target.dim())
}

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::linalg::{axpy, kernel, scaled, Echelon, SparseVec};
use super::poly::{Monomials, Poly};
use super::AlgError;

/// Element of a [`LocalAlgebra`]: a normal form over its standard monomials.
pub type Elem = SparseVec;

/// `Q[[X_1..X_n]] / (relations)` truncated modulo `m^(D+1)`.
///
/// The relation ideal is echelonized with pivots at the lowest-degree monomial, so the
/// lowest degree occurring in a normal form is the m-adic order of the element.
#[derive(Clone, Debug)]
pub struct LocalAlgebra {
    names: Vec<String>,
    relations: Vec<Poly>,
    degree: u32,
    mons: Arc<Monomials>,
    ideal: Echelon,
    basis: Vec<usize>,
}

impl LocalAlgebra {
    pub fn from_presentation(names: &[&str], relations: &[Poly], degree: u32) -> Result<Self, AlgError> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        Self::build(names, relations.to_vec(), degree)
    }

    /// Presentation with relations written as strings over `names`.
    pub fn parse(names: &[&str], relations: &[&str], degree: u32) -> Result<Self, AlgError> {
        let rels = relations.iter().map(|r| Poly::parse(names, r)).collect::<Result<Vec<_>, _>>()?;
        Self::from_presentation(names, &rels, degree)
    }

    fn build(names: Vec<String>, relations: Vec<Poly>, degree: u32) -> Result<Self, AlgError> {
        let n = names.len();
        for r in &relations {
            if r.nvars() != n {
                return Err(AlgError::Arity { expected: n, got: r.nvars() });
            }
            if !r.constant_term().is_zero() {
                return Err(AlgError::RelationNotLocal(r.display(&names).to_string()));
            }
        }
        let mons = Arc::new(Monomials::new(n, degree));
        let mut ideal = Echelon::new();
        for r in &relations {
            let v = poly_to_vec(&mons, r);
            let Some(ord) = r.order() else { continue };
            for m in 0..mons.len() {
                if mons.total_degree(m) + ord > degree {
                    break;
                }
                ideal.insert(&shift(&mons, m, &v));
            }
        }
        let basis = (0..mons.len()).filter(|i| !ideal.is_pivot(*i)).collect();
        Ok(LocalAlgebra { names, relations, degree, mons, ideal, basis })
    }

    /// The same presentation at another truncation degree.
    pub fn with_degree(&self, degree: u32) -> Self {
        Self::build(self.names.clone(), self.relations.clone(), degree).expect("presentation already validated")
    }

    pub fn renamed(&self, names: &[&str]) -> Self {
        assert_eq!(names.len(), self.names.len());
        LocalAlgebra { names: names.iter().map(|s| s.to_string()).collect(), ..self.clone() }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Standard monomials spanning the algebra.
    pub fn basis(&self) -> impl Iterator<Item = Poly> + '_ {
        self.basis.iter().map(|&i| self.monomial_poly(i))
    }

    pub fn basis_indices(&self) -> &[usize] {
        &self.basis
    }

    pub fn monomials(&self) -> &Monomials {
        &self.mons
    }

    pub fn basis_element(&self, i: usize) -> Elem {
        unit(i)
    }

    fn monomial_poly(&self, i: usize) -> Poly {
        Poly::from_terms(self.ngens(), [(self.mons.exps(i).clone(), BigRational::one())])
    }

    pub fn zero(&self) -> Elem {
        Elem::new()
    }

    pub fn one(&self) -> Elem {
        unit(0)
    }

    pub fn gen(&self, i: usize) -> Elem {
        self.elem(&Poly::var(self.ngens(), i))
    }

    pub fn scalar(&self, c: &BigRational) -> Elem {
        scaled(&self.one(), c)
    }

    pub fn reduce(&self, v: &SparseVec) -> Elem {
        self.ideal.reduce(v)
    }

    pub fn elem(&self, p: &Poly) -> Elem {
        assert_eq!(p.nvars(), self.ngens());
        self.reduce(&poly_to_vec(&self.mons, p))
    }

    pub fn parse_elem(&self, s: &str) -> Result<Elem, AlgError> {
        let names: Vec<&str> = self.names.iter().map(|s| s.as_str()).collect();
        Ok(self.elem(&Poly::parse(&names, s)?))
    }

    pub fn to_poly(&self, x: &Elem) -> Poly {
        Poly::from_terms(self.ngens(), x.iter().map(|(i, c)| (self.mons.exps(*i).clone(), c.clone())))
    }

    pub fn display(&self, x: &Elem) -> String {
        self.to_poly(x).display(&self.names).to_string()
    }

    pub fn add(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = x.clone();
        axpy(&mut out, &BigRational::one(), y);
        out
    }

    pub fn sub(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = x.clone();
        axpy(&mut out, &-BigRational::one(), y);
        out
    }

    pub fn scale(&self, x: &Elem, c: &BigRational) -> Elem {
        scaled(x, c)
    }

    pub fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut out = SparseVec::new();
        for (i, a) in x {
            for (j, b) in y {
                if let Some(k) = self.mons.product(*i, *j) {
                    let e = out.entry(k).or_insert_with(BigRational::zero);
                    *e += a * b;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        self.reduce(&out)
    }

    pub fn pow(&self, x: &Elem, k: u32) -> Elem {
        let mut out = self.one();
        for _ in 0..k {
            out = self.mul(&out, x);
        }
        out
    }

    /// m-adic order; `None` for zero.
    pub fn order(&self, x: &Elem) -> Option<u32> {
        x.keys().map(|i| self.mons.total_degree(*i)).min()
    }

    pub fn is_unit(&self, x: &Elem) -> bool {
        x.contains_key(&0)
    }

    /// Constant term.
    pub fn residue(&self, x: &Elem) -> BigRational {
        x.get(&0).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Span of `m^k`: the standard monomials of degree at least `k`.
    pub fn max_ideal_power(&self, k: u32) -> Vec<Elem> {
        self.basis.iter().filter(|i| self.mons.total_degree(**i) >= k).map(|i| unit(*i)).collect()
    }

    /// Number of standard monomials of each degree, i.e. `dim m^k / m^(k+1)`.
    pub fn hilbert_function(&self) -> Vec<usize> {
        let mut out = vec![0; self.degree as usize + 1];
        for i in &self.basis {
            out[self.mons.total_degree(*i) as usize] += 1;
        }
        out
    }

    /// Smallest `k <= D` with `m^k = 0`, if the truncation proves one.
    pub fn nilpotency(&self) -> Option<u32> {
        let h = self.hilbert_function();
        // m^k / m^(k+1) = 0 forces m^k = 0 by Nakayama
        (0..=self.degree).find(|k| h[*k as usize] == 0)
    }

    /// Vector-space span of the ideal generated by `gens`.
    pub fn ideal_span(&self, gens: &[Elem]) -> Echelon {
        let mut span = Echelon::new();
        for g in gens {
            for &b in &self.basis {
                span.insert(&self.mul(g, &unit(b)));
            }
        }
        span
    }

    /// Basis of a span as elements.
    pub fn span_elements(&self, span: &Echelon) -> Vec<Elem> {
        let mut pivots: Vec<usize> = span.pivots().copied().collect();
        pivots.sort();
        pivots.into_iter().map(|k| span_row(span, k)).collect()
    }

    /// Linear kernel of `x -> (x g_1, .., x g_k)` over the basis.
    pub fn annihilator_basis(&self, gens: &[Elem]) -> Vec<Elem> {
        let stride = self.mons.len();
        let images: Vec<(usize, SparseVec)> = self
            .basis
            .iter()
            .map(|&b| {
                let mut v = SparseVec::new();
                for (slot, g) in gens.iter().enumerate() {
                    for (k, c) in self.mul(&unit(b), g) {
                        v.insert(slot * stride + k, c);
                    }
                }
                (b, v)
            })
            .collect();
        kernel(&images)
    }
}

pub(crate) fn unit(i: usize) -> SparseVec {
    let mut v = SparseVec::new();
    v.insert(i, BigRational::one());
    v
}

fn span_row(span: &Echelon, pivot: usize) -> SparseVec {
    let mut v = unit(pivot);
    // the reduced remainder of the unit vector is minus the tail of the row
    let r = span.reduce(&v);
    axpy(&mut v, &-BigRational::one(), &r);
    v
}

pub(crate) fn poly_to_vec(mons: &Monomials, p: &Poly) -> SparseVec {
    p.terms().iter().filter_map(|(e, c)| mons.index(e).map(|i| (i, c.clone()))).collect()
}

/// `x^m * v` truncated.
fn shift(mons: &Monomials, m: usize, v: &SparseVec) -> SparseVec {
    v.iter().filter_map(|(i, c)| mons.product(m, *i).map(|k| (k, c.clone()))).collect()
}

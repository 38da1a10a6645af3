use std::collections::BTreeSet;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;

use super::algebra::{Elem, LocalAlgebra};
use super::linalg::{kernel_modulo, solve, Echelon, SparseVec};
use super::morphism::AlgebraMorphism;
use super::poly::{Monomials, Poly};
use super::AlgError;

/// Largest multiple of the output degree tried for the factors.
const MAX_INFLATION: u32 = 6;

/// `A ×_C B` with its presentation and the two projections.
#[derive(Clone, Debug)]
pub struct FiberProduct {
    pub algebra: Arc<LocalAlgebra>,
    pub proj_a: AlgebraMorphism,
    pub proj_b: AlgebraMorphism,
    /// Truncation of the factors at which the presentation stopped changing.
    pub working_degree: u32,
    /// The presentation agreed at two successive factor truncations and its relations
    /// vanish exactly there.
    pub stable: bool,
}

impl FiberProduct {
    /// The element with components `a` and `b`, if they agree in `C`.
    pub fn lift(&self, a: &Elem, b: &Elem) -> Option<Elem> {
        let offset = self.proj_a.target().monomials().len();
        let images: Vec<(usize, SparseVec)> = self
            .algebra
            .basis_indices()
            .iter()
            .map(|&i| {
                let x = self.algebra.basis_element(i);
                (i, concat(&self.proj_a.apply(&x), &self.proj_b.apply(&x), offset))
            })
            .collect();
        solve(&images, &concat(a, b, offset))
    }
}

fn concat(a: &SparseVec, b: &SparseVec, offset: usize) -> SparseVec {
    let mut v = a.clone();
    v.extend(b.iter().map(|(k, c)| (k + offset, c.clone())));
    v
}

/// Generators and relation space found at one factor truncation.
struct Attempt {
    names: Vec<String>,
    components: Vec<(Poly, Poly)>,
    /// Minimal relations, read off the combinations of monomials lying in `m^(D+1)`.
    relations: Vec<Poly>,
    independent: BTreeSet<usize>,
    /// Each relation vanishes in the product, not just modulo `m^(D+1)`.
    exact: bool,
}

/// Fiber product of two surjections onto the same algebra, computed inside `A × B`.
///
/// Generators are lifts of the generators of `A` together with ideal generators of
/// `ker g`, pruned to a basis of `m / m^2`. The factors are evaluated at increasing
/// multiples of the output degree until the presentation stops changing.
pub fn fiber_product(f: &AlgebraMorphism, g: &AlgebraMorphism) -> Result<FiberProduct, AlgError> {
    let (a, b, c) = (f.source(), g.source(), f.target());
    if c.names() != g.target().names() || c.relations() != g.target().relations() {
        return Err(AlgError::NotAMorphism("the two maps have different targets".into()));
    }
    if !f.is_surjective() || !g.is_surjective() {
        return Err(AlgError::NotSurjective);
    }
    let degree = a.degree().min(b.degree());

    let mut previous: Option<Attempt> = None;
    let mut stable = false;
    let mut working = degree;
    for step in 1..=MAX_INFLATION {
        working = degree * step;
        let at = |m: &AlgebraMorphism| m.at_degrees(working, working);
        let attempt = attempt(&at(f), &at(g), degree)?;
        if let Some(prev) = &previous {
            if prev.names == attempt.names && prev.independent == attempt.independent && prev.relations == attempt.relations {
                stable = attempt.exact;
                previous = Some(attempt);
                break;
            }
        }
        previous = Some(attempt);
    }
    let attempt = previous.expect("at least one attempt");

    let relations = attempt.relations;
    let names: Vec<&str> = attempt.names.iter().map(|s| s.as_str()).collect();
    let algebra = Arc::new(LocalAlgebra::from_presentation(&names, &relations, degree)?);
    debug_assert_eq!(algebra.dim(), attempt.independent.len());
    let a_out = Arc::new(a.with_degree(degree));
    let b_out = Arc::new(b.with_degree(degree));
    let proj_a = AlgebraMorphism::new(algebra.clone(), a_out, attempt.components.iter().map(|c| c.0.clone()).collect())?;
    let proj_b = AlgebraMorphism::new(algebra.clone(), b_out, attempt.components.iter().map(|c| c.1.clone()).collect())?;
    Ok(FiberProduct { algebra, proj_a, proj_b, working_degree: working, stable })
}

fn attempt(f: &AlgebraMorphism, g: &AlgebraMorphism, degree: u32) -> Result<Attempt, AlgError> {
    let (a, b) = (f.source().clone(), g.source().clone());
    let offset = a.monomials().len();

    // lifts of the generators of A
    let g_images = g.basis_images();
    let mut names: Vec<String> = Vec::new();
    let mut gens: Vec<(Elem, Elem)> = Vec::new();
    for i in 0..a.ngens() {
        let target = f.apply(&a.gen(i));
        let lift = solve(&g_images, &target).ok_or(AlgError::NotSurjective)?;
        names.push(a.names()[i].clone());
        gens.push((a.gen(i), lift));
    }

    // ideal generators of ker g: a basis of ker g modulo m_B ker g
    let mut kernel = g.kernel();
    kernel.sort_by_key(|k| (b.order(k), k.keys().next().copied()));
    let mut span = Echelon::new();
    for k in &kernel {
        for j in 0..b.ngens() {
            span.insert(&b.mul(&b.gen(j), k));
        }
    }
    let mut count = 0;
    for k in &kernel {
        if span.insert(k) {
            count += 1;
            let single = (0..b.ngens()).find(|j| &b.gen(*j) == k).map(|j| b.names()[j].clone());
            let name = match single {
                Some(n) if !names.contains(&n) => n,
                _ => format!("k{count}"),
            };
            names.push(name);
            gens.push((a.zero(), k.clone()));
        }
    }

    let evaluate = |gens: &[(Elem, Elem)]| -> (Monomials, Vec<(Elem, Elem)>) {
        let mons = Monomials::new(gens.len(), degree + 1);
        let mut images: Vec<(Elem, Elem)> = Vec::with_capacity(mons.len());
        for m in 0..mons.len() {
            let e = mons.exps(m);
            if m == 0 {
                images.push((a.one(), b.one()));
                continue;
            }
            let var = e.iter().position(|k| *k > 0).unwrap();
            let mut parent = e.clone();
            parent[var] -= 1;
            let (pa, pb) = &images[mons.index(&parent).unwrap()];
            images.push((a.mul(pa, &gens[var].0), b.mul(pb, &gens[var].1)));
        }
        (mons, images)
    };

    // m^(D+1) of the product, grown from the degree D + 1 layer
    let high_powers = |mons: &Monomials, images: &[(Elem, Elem)], gens: &[(Elem, Elem)]| -> Echelon {
        let mut acc = Echelon::new();
        let mut layer: Vec<(Elem, Elem)> =
            (0..mons.len()).filter(|m| mons.total_degree(*m) == degree + 1).map(|m| images[m].clone()).collect();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for (x, y) in &layer {
                if acc.insert(&concat(x, y, offset)) {
                    for (ga, gb) in gens {
                        next.push((a.mul(x, ga), b.mul(y, gb)));
                    }
                }
            }
            layer = next;
        }
        acc
    };

    // prune to a basis of m / m^2
    let (mons, images) = evaluate(&gens);
    let mut square = high_powers(&mons, &images, &gens);
    for m in 0..mons.len() {
        let d = mons.total_degree(m);
        if (2..=degree).contains(&d) {
            square.insert(&concat(&images[m].0, &images[m].1, offset));
        }
    }
    let mut keep = Vec::new();
    for (i, (x, y)) in gens.iter().enumerate() {
        if square.insert(&concat(x, y, offset)) {
            keep.push(i);
        }
    }
    let names: Vec<String> = keep.iter().map(|i| names[*i].clone()).collect();
    let gens: Vec<(Elem, Elem)> = keep.iter().map(|i| gens[*i].clone()).collect();

    let (mons, images) = evaluate(&gens);
    let high = high_powers(&mons, &images, &gens);
    let low: Vec<(usize, SparseVec)> = (0..mons.len())
        .filter(|m| mons.total_degree(*m) <= degree)
        .map(|m| (m, concat(&images[m].0, &images[m].1, offset)))
        .collect();
    let space = kernel_modulo(&low, &high);
    let dependent: BTreeSet<usize> = space.iter().map(|r| *r.keys().next_back().unwrap()).collect();
    let independent = low.iter().map(|(m, _)| *m).filter(|m| !dependent.contains(m)).collect();
    let mons = Monomials::new(gens.len(), degree);
    let chosen = minimal_relations(&space, &mons, degree);
    let exact = chosen.iter().all(|r| {
        let mut x = a.zero();
        let mut y = b.zero();
        for (m, c) in r.iter() {
            x = a.add(&x, &a.scale(&images[*m].0, c));
            y = b.add(&y, &b.scale(&images[*m].1, c));
        }
        x.is_empty() && y.is_empty()
    });
    let n = gens.len();
    let relations = chosen
        .iter()
        .map(|r| Poly::from_terms(n, r.iter().map(|(m, c)| (mons.exps(*m).clone(), normalize(r, c)))))
        .collect();
    let components = gens.iter().map(|(x, y)| (a.to_poly(x), b.to_poly(y))).collect();
    Ok(Attempt { names, components, relations, independent, exact })
}

/// Greedy ideal generators of the relation space, lowest degree first.
fn minimal_relations<'a>(space: &'a [SparseVec], mons: &Monomials, degree: u32) -> Vec<&'a SparseVec> {
    let target = space.len();
    let mut span = Echelon::new();
    let mut chosen = Vec::new();
    let mut candidates: Vec<&SparseVec> = space.iter().collect();
    candidates.sort_by_key(|r| r.keys().map(|m| mons.total_degree(*m)).min());
    for r in candidates {
        if span.rank() == target {
            break;
        }
        if span.contains(r) {
            continue;
        }
        let ord = r.keys().map(|m| mons.total_degree(*m)).min().unwrap_or(0);
        for m in 0..mons.len() {
            if mons.total_degree(m) + ord > degree {
                break;
            }
            let shifted: SparseVec = r.iter().filter_map(|(i, c)| mons.product(m, *i).map(|k| (k, c.clone()))).collect();
            span.insert(&shifted);
        }
        chosen.push(r);
    }
    chosen
}

/// Scales a relation so that its first coefficient is one.
fn normalize(r: &SparseVec, c: &BigRational) -> BigRational {
    let lead = r.values().next().cloned().unwrap_or_else(BigRational::one);
    c / lead
}

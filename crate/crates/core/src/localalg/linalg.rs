use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Sparse vector over the rationals keyed by basis index.
pub type SparseVec = BTreeMap<usize, BigRational>;

pub(crate) fn axpy(y: &mut SparseVec, a: &BigRational, x: &SparseVec) {
    for (k, v) in x {
        let e = y.entry(*k).or_insert_with(BigRational::zero);
        *e += a * v;
        if e.is_zero() {
            y.remove(k);
        }
    }
}

pub(crate) fn scaled(x: &SparseVec, a: &BigRational) -> SparseVec {
    if a.is_zero() {
        return SparseVec::new();
    }
    x.iter().map(|(k, v)| (*k, v * a)).collect()
}

/// Echelon basis of a subspace with each row's pivot at its smallest key.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: HashMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, k: usize) -> bool {
        self.rows.contains_key(&k)
    }

    pub fn pivots(&self) -> impl Iterator<Item = &usize> {
        self.rows.keys()
    }

    /// Remainder after eliminating every pivot key; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut out = SparseVec::new();
        while let Some((k, c)) = v.pop_first() {
            match self.rows.get(&k) {
                Some(row) => {
                    for (j, a) in row.iter().skip(1) {
                        let e = v.entry(*j).or_insert_with(BigRational::zero);
                        *e -= &c * a;
                        if e.is_zero() {
                            v.remove(j);
                        }
                    }
                }
                None => {
                    out.insert(k, c);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        match r.first_key_value() {
            None => false,
            Some((&k, c)) => {
                let inv = BigRational::one() / c;
                self.rows.insert(k, scaled(&r, &inv));
                true
            }
        }
    }
}

/// Kernel of a linear map given by the images of the basis vectors `keys[i]`:
/// returns kernel vectors as combinations over those keys.
pub fn kernel(images: &[(usize, SparseVec)]) -> Vec<SparseVec> {
    kernel_modulo(images, &Echelon::new())
}

/// Kernel of the induced map into the quotient by the span `modulo`.
pub fn kernel_modulo(images: &[(usize, SparseVec)], modulo: &Echelon) -> Vec<SparseVec> {
    // rows: (image, combination) with pivot at the smallest image key
    let mut rows: HashMap<usize, (SparseVec, SparseVec)> =
        modulo.rows.iter().map(|(k, v)| (*k, (v.clone(), SparseVec::new()))).collect();
    let mut out = Vec::new();
    for (key, image) in images {
        let mut v = image.clone();
        let mut comb = SparseVec::new();
        comb.insert(*key, BigRational::one());
        loop {
            let Some((&k, c)) = v.first_key_value() else {
                out.push(comb);
                break;
            };
            match rows.get(&k) {
                Some((row, rc)) => {
                    let c = -c.clone();
                    axpy(&mut v, &c, row);
                    axpy(&mut comb, &c, rc);
                }
                None => {
                    let inv = BigRational::one() / c;
                    rows.insert(k, (scaled(&v, &inv), scaled(&comb, &inv)));
                    break;
                }
            }
        }
    }
    out
}

/// Solves `sum_i x_i images[i] = target`; the solution is keyed like `images`.
pub fn solve(images: &[(usize, SparseVec)], target: &SparseVec) -> Option<SparseVec> {
    let mut rows: HashMap<usize, (SparseVec, SparseVec)> = HashMap::new();
    for (key, image) in images {
        let mut v = image.clone();
        let mut comb = SparseVec::new();
        comb.insert(*key, BigRational::one());
        while let Some((&k, c)) = v.first_key_value() {
            match rows.get(&k) {
                Some((row, rc)) => {
                    let c = -c.clone();
                    axpy(&mut v, &c, row);
                    axpy(&mut comb, &c, rc);
                }
                None => {
                    let inv = BigRational::one() / c;
                    rows.insert(k, (scaled(&v, &inv), scaled(&comb, &inv)));
                    break;
                }
            }
        }
    }
    let mut v = target.clone();
    let mut x = SparseVec::new();
    while let Some((&k, c)) = v.first_key_value() {
        let (row, rc) = rows.get(&k)?;
        let c = c.clone();
        axpy(&mut v, &-c.clone(), row);
        axpy(&mut x, &c, rc);
    }
    Some(x)
}

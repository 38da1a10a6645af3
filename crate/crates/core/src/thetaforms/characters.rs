use num_integer::Integer;
use serde::Serialize;

use super::{Cyclo, ThetaError};
use crate::fields::{ClassGroup, QuadField};

/// Character of the class group of an imaginary quadratic field, `psi(C) = zeta_e^k(C)`.
#[derive(Clone, Debug, Serialize)]
pub struct ClassCharacter {
    pub field: QuadField,
    #[serde(skip)]
    pub group: ClassGroup,
    /// `e`: the values are `e`-th roots of unity.
    pub order: usize,
    /// Exponent `k(C)` for each reduced form of the group, in the group's order.
    pub exponents: Vec<usize>,
}

impl ClassCharacter {
    pub fn value(&self, class: usize) -> Cyclo {
        Cyclo::root(self.order, self.exponents[class])
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&k| k == 0)
    }

    /// Real-valued characters are the genus characters.
    pub fn is_real(&self) -> bool {
        self.exponents.iter().all(|&k| (2 * k) % self.order == 0)
    }

    /// Smallest `n` with `psi^n` trivial.
    pub fn character_order(&self) -> usize {
        self.exponents.iter().fold(1, |acc, &k| acc.lcm(&(self.order / self.order.gcd(&k))))
    }
}

/// All characters of the class group, the trivial one first.
pub fn class_characters(field: &QuadField) -> Result<Vec<ClassCharacter>, ThetaError> {
    if !field.is_imaginary() {
        return Err(ThetaError::NotImaginary(field.disc()));
    }
    let group = ClassGroup::new(field.disc());
    let h = group.order();
    let exponent = (0..h).fold(1, |acc, i| acc.lcm(&group.element_order(i)));
    let gens = group.generators();

    // words: each class as a product of generator powers
    let mut word: Vec<Option<Vec<usize>>> = vec![None; h];
    word[group.identity()] = Some(vec![0; gens.len()]);
    let mut frontier = vec![group.identity()];
    while let Some(x) = frontier.pop() {
        for (gi, &g) in gens.iter().enumerate() {
            let y = group.mul(x, g);
            if word[y].is_none() {
                let mut w = word[x].clone().unwrap();
                w[gi] += 1;
                word[y] = Some(w);
                frontier.push(y);
            }
        }
    }
    let word: Vec<Vec<usize>> = word.into_iter().map(|w| w.expect("generators span the group")).collect();

    let mut out = Vec::new();
    let mut assignment = vec![0usize; gens.len()];
    loop {
        let exponents: Vec<usize> =
            word.iter().map(|w| w.iter().zip(&assignment).map(|(a, b)| a * b).sum::<usize>() % exponent).collect();
        let hom = (0..h).all(|i| (0..h).all(|j| exponents[group.mul(i, j)] == (exponents[i] + exponents[j]) % exponent));
        if hom {
            out.push(ClassCharacter { field: *field, group: group.clone(), order: exponent, exponents });
        }
        // next assignment in lexicographic order
        let mut i = 0;
        while i < assignment.len() {
            assignment[i] += 1;
            if assignment[i] < exponent {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
        if i == assignment.len() {
            break;
        }
    }
    debug_assert_eq!(out.len(), h);
    Ok(out)
}

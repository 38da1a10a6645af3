use std::fmt;

use serde::{Serialize, Serializer};

/// Coefficients of the `e`-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_poly(e: usize) -> Vec<i64> {
    // x^e - 1 divided by Phi_d for every proper divisor d
    let mut num = vec![0i64; e + 1];
    num[0] = -1;
    num[e] = 1;
    for d in (1..e).filter(|d| e % d == 0) {
        num = divide_exact(&num, &cyclotomic_poly(d));
    }
    num
}

fn divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd] / den[dd];
        quot[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Element of `Z[zeta_e]` in the power basis `1, zeta, ..., zeta^(phi(e)-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclo {
    order: usize,
    coeffs: Vec<i64>,
}

impl Cyclo {
    pub fn zero(order: usize) -> Self {
        let n = cyclotomic_poly(order).len() - 1;
        Cyclo { order, coeffs: vec![0; n] }
    }

    pub fn from_int(order: usize, n: i64) -> Self {
        let mut z = Cyclo::zero(order);
        z.coeffs[0] = n;
        z
    }

    pub fn one(order: usize) -> Self {
        Cyclo::from_int(order, 1)
    }

    /// `zeta_e^k`.
    pub fn root(order: usize, k: usize) -> Self {
        let mut dense = vec![0i64; order];
        dense[k % order] = 1;
        Cyclo::reduce(order, dense)
    }

    fn reduce(order: usize, mut dense: Vec<i64>) -> Self {
        let phi = cyclotomic_poly(order);
        let n = phi.len() - 1;
        // Phi is monic: eliminate the top coefficients
        for i in (n..dense.len()).rev() {
            let c = dense[i];
            if c != 0 {
                for (j, &pj) in phi.iter().enumerate() {
                    dense[i - n + j] -= c * pj;
                }
            }
        }
        dense.resize(n, 0);
        Cyclo { order, coeffs: dense }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The value as an integer, if it is one.
    pub fn as_int(&self) -> Option<i64> {
        self.coeffs[1..].iter().all(|&c| c == 0).then_some(self.coeffs[0])
    }

    pub fn add(&self, o: &Cyclo) -> Cyclo {
        assert_eq!(self.order, o.order);
        Cyclo { order: self.order, coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn neg(&self) -> Cyclo {
        Cyclo { order: self.order, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn sub(&self, o: &Cyclo) -> Cyclo {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: i64) -> Cyclo {
        Cyclo { order: self.order, coeffs: self.coeffs.iter().map(|a| a * k).collect() }
    }

    pub fn mul(&self, o: &Cyclo) -> Cyclo {
        assert_eq!(self.order, o.order);
        let mut dense = vec![0i64; self.coeffs.len() + o.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                dense[i + j] += a * b;
            }
        }
        Cyclo::reduce(self.order, dense)
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_int() {
            return write!(f, "{n}");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0) {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let term = match (i, mag) {
                (0, m) => m.to_string(),
                (1, 1) => "z".to_string(),
                (1, m) => format!("{m}*z"),
                (k, 1) => format!("z^{k}"),
                (k, m) => format!("{m}*z^{k}"),
            };
            if first {
                write!(f, "{sign}{term}")?;
            } else {
                write!(f, " {sign} {term}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Integers serialize as numbers, other values as their power-basis coefficient list.
impl Serialize for Cyclo {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.as_int() {
            Some(n) => s.serialize_i64(n),
            None => self.coeffs.serialize(s),
        }
    }
}

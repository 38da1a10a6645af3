use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::LError;
use crate::fields::{is_fundamental, kronecker, QuadField};
use crate::padic::{teichmuller_of_residue, Padic};

/// Quadratic (or trivial) Dirichlet character times a power of the Teichmüller character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DirichletCharacter {
    /// Fundamental discriminant of the quadratic part, `1` for the trivial character.
    disc: i64,
    /// `(p, k)` for a twist by `omega^k`.
    twist: Option<(u64, i64)>,
}

impl DirichletCharacter {
    pub fn trivial() -> Self {
        DirichletCharacter { disc: 1, twist: None }
    }

    pub fn quadratic(disc: i64) -> Result<Self, LError> {
        if disc == 1 {
            return Ok(DirichletCharacter::trivial());
        }
        let d = QuadField::new(disc).map_err(|e| LError::InvalidCharacter(e.to_string()))?.disc();
        Ok(DirichletCharacter { disc: d, twist: None })
    }

    /// Multiply by `omega^k` for the prime `p`.
    pub fn twist(self, p: u64, k: i64) -> Self {
        let (base, k0) = match self.twist {
            Some((q, j)) => {
                assert_eq!(q, p, "twists for different primes");
                (self, j)
            }
            None => (self, 0),
        };
        let total = (k0 + k).rem_euclid(p as i64 - 1);
        DirichletCharacter { disc: base.disc, twist: if total == 0 { None } else { Some((p, total)) } }
    }

    pub fn disc(&self) -> i64 {
        self.disc
    }

    /// Teichmüller exponent modulo `p - 1` (zero when untwisted).
    pub fn omega_power(&self) -> i64 {
        self.twist.map(|t| t.1).unwrap_or(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.disc == 1 && self.twist.is_none()
    }

    pub fn is_rational(&self) -> bool {
        self.twist.is_none()
    }

    /// Conductor of the quadratic part.
    pub fn quadratic_conductor(&self) -> u64 {
        self.disc.unsigned_abs()
    }

    pub fn conductor(&self) -> u64 {
        match self.twist {
            Some((p, _)) if self.disc % p as i64 != 0 => self.quadratic_conductor() * p,
            _ => self.quadratic_conductor(),
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// `chi(-1)`.
    pub fn sign(&self) -> i32 {
        let quad = if self.disc == 1 { 1 } else { kronecker(self.disc, -1) };
        if self.omega_power() % 2 == 0 {
            quad
        } else {
            -quad
        }
    }

    /// Value of the quadratic part at `a`.
    pub fn quadratic_value(&self, a: i64) -> i32 {
        if self.disc == 1 {
            1
        } else {
            kronecker(self.disc, a)
        }
    }

    /// Value of a rational character.
    pub fn value(&self, a: i64) -> Option<i32> {
        if !self.is_rational() {
            return None;
        }
        Some(self.quadratic_value(a))
    }

    /// p-adic value `eps(a) omega(a)^k`, zero at multiples of the conductor's primes.
    pub fn value_padic(&self, p: u64, a: i64, prec: u32) -> Padic {
        let q = self.quadratic_value(a);
        match self.twist {
            Some((tp, k)) => {
                assert_eq!(tp, p);
                if q == 0 || a % p as i64 == 0 {
                    return Padic::zero(p, prec as i64);
                }
                let w = teichmuller_of_residue(p, &BigInt::from(a), prec);
                w.pow(k).unwrap().mul(&Padic::from_i64(p, q as i64, prec))
            }
            None => {
                if q == 0 {
                    Padic::zero(p, prec as i64)
                } else {
                    Padic::from_i64(p, q as i64, prec)
                }
            }
        }
    }
}

impl fmt::Display for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.disc == 1 {
            write!(f, "trivial")?;
        } else {
            write!(f, "quad:{}", self.disc)?;
        }
        if let Some((_, k)) = self.twist {
            write!(f, "*omega^{k}")?;
        }
        Ok(())
    }
}

/// Parses `quad:<disc>`, `quad:<disc>*omega^k` or `trivial`; twists need `p`.
pub fn parse_character(s: &str, p: Option<u64>) -> Result<DirichletCharacter, LError> {
    let bad = || LError::InvalidCharacter(s.to_string());
    let (base, twist) = match s.split_once('*') {
        Some((b, t)) => (b, Some(t)),
        None => (s, None),
    };
    let chi = if base == "trivial" {
        DirichletCharacter::trivial()
    } else {
        let d = base.strip_prefix("quad:").ok_or_else(bad)?;
        let d = i64::from_str(d).map_err(|_| bad())?;
        if d != 1 && !is_fundamental(d) {
            return Err(bad());
        }
        DirichletCharacter::quadratic(d)?
    };
    match twist {
        None => Ok(chi),
        Some(t) => {
            let k = match t {
                "omega" => 1,
                _ => t.strip_prefix("omega^").and_then(|k| i64::from_str(k).ok()).ok_or_else(bad)?,
            };
            let p = p.ok_or_else(bad)?;
            Ok(chi.twist(p, k))
        }
    }
}

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use super::*;
use crate::fields::{class_number, QuadField};
use crate::padic::{iwasawa_log, teichmuller_of_residue, Padic};

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn quad(d: i64) -> DirichletCharacter {
    DirichletCharacter::quadratic(d).unwrap()
}

fn at(p: u64, s: i64) -> Padic {
    Padic::from_i64(p, s, 200)
}

#[test]
fn generalized_bernoulli_small_cases() {
    assert_eq!(gen_bernoulli(&quad(-4), 1).unwrap(), r(-1, 2));
    assert_eq!(gen_bernoulli(&quad(-3), 1).unwrap(), r(-1, 3));
    assert_eq!(gen_bernoulli(&DirichletCharacter::trivial(), 2).unwrap(), r(1, 6));
    // B_{2, eps_5} = 4/5 by direct summation of 5 B_2(a/5)
    assert_eq!(gen_bernoulli(&quad(5), 2).unwrap(), r(4, 5));
}

#[test]
fn bernoulli_numbers_known_values() {
    let b = bernoulli_numbers(12);
    assert_eq!(b[1], r(-1, 2));
    assert_eq!(b[4], r(-1, 30));
    assert_eq!(b[12], r(-691, 2730));
    assert!(b[11].is_zero());
    assert_eq!(bernoulli_poly(2, &r(1, 3)), r(1, 9) - r(1, 3) + r(1, 6));
}

#[test]
fn classical_values_at_zero() {
    assert_eq!(classical_l_at_nonpos(&quad(-4), 1).unwrap(), r(1, 2));
    assert_eq!(classical_l_at_nonpos(&quad(-3), 1).unwrap(), r(1, 3));
    assert_eq!(classical_l_at_nonpos(&quad(5), 1).unwrap(), r(0, 1));
    assert_eq!(classical_l_at_nonpos(&DirichletCharacter::trivial(), 1).unwrap(), r(-1, 2));
}

#[test]
fn class_number_formula_at_zero() {
    // L(eps_D, 0) = 2h/w, with h counted from reduced forms
    for d in [-3i64, -4, -7, -8, -11, -15, -20, -23, -24, -40, -47, -84] {
        let k = QuadField::new(d).unwrap();
        let h = class_number(&k).unwrap() as i64;
        let w = k.roots_of_unity() as i64;
        assert_eq!(classical_l_at_nonpos(&quad(d), 1).unwrap(), r(2 * h, w), "D = {d}");
    }
}

#[test]
fn trivial_zero_and_value_at_zero() {
    let chi = quad(-4).twist(5, 1);
    let s5 = PadicLSeries::new(chi, 5, 20).unwrap();
    assert!(s5.eval(&at(5, 0)).unwrap().is_zero());

    let chi = quad(-4).twist(7, 1);
    let s7 = PadicLSeries::new(chi, 7, 20).unwrap();
    assert!(s7.eval(&at(7, 0)).unwrap().eq_to_prec(&Padic::from_i64(7, 1, 20)));
}

#[test]
fn interpolation_at_negative_integers() {
    let cases = [
        (quad(5), 7u64),
        (quad(8), 5),
        (quad(-4).twist(5, 1), 5),
        (quad(-3).twist(7, 1), 7),
        (quad(-4).twist(7, 3), 7),
        (quad(12), 5),
        (DirichletCharacter::trivial(), 5),
    ];
    for (chi, p) in cases {
        let series = PadicLSeries::new(chi, p, 20).unwrap();
        for n in 1..=4usize {
            let lhs = series.eval(&at(p, 1 - n as i64)).unwrap();
            let rhs = interpolation_value(&chi, p, n, 20).unwrap();
            assert!(lhs.agreement(&rhs) >= 20, "{chi} p={p} n={n}: {lhs} vs {rhs}");
        }
    }
}

#[test]
fn truncation_is_stable() {
    let chi = quad(8);
    let base = PadicLSeries::new(chi, 7, 15).unwrap();
    let longer = PadicLSeries::with_truncation(chi, 7, 15, Some(base.truncation() + 5)).unwrap();
    let s = Padic::from_rational(7, &r(1, 3), 60);
    let a = base.eval(&s).unwrap();
    let b = longer.eval(&s).unwrap();
    assert!(a.agreement(&b) >= 15);
}

#[test]
fn odd_character_is_rejected() {
    assert!(matches!(PadicLSeries::new(quad(-4), 5, 10), Err(LError::OddCharacter(_))));
    assert!(matches!(PadicLSeries::new(quad(5).twist(7, 1), 7, 10), Err(LError::OddCharacter(_))));
}

#[test]
fn pole_of_the_zeta_function() {
    let zeta = PadicLSeries::new(DirichletCharacter::trivial(), 5, 10).unwrap();
    assert_eq!(zeta.eval(&at(5, 1)).unwrap_err(), LError::PoleAtOne);
    assert_eq!(leopoldt_at_one(&DirichletCharacter::trivial(), 5, 10).unwrap_err(), LError::PoleAtOne);
}

#[test]
fn derivative_of_constant_is_zero() {
    let c = Padic::from_i64(7, 12345, 60);
    let d = symmetric_derivative(|_| Ok(c.clone()), 7, &at(7, 0), 20).unwrap();
    assert!(d.value.is_zero());
}

#[test]
fn derivative_of_power_function() {
    // d/ds <a>^(1-s) = -log<a> <a>^(1-s)
    let p = 7;
    let a = 10i64;
    let unit = Padic::from_i64(p, a, 80).div(&teichmuller_of_residue(p, &BigInt::from(a), 80)).unwrap();
    let lam = iwasawa_log(&unit).unwrap();
    let f = |s: &Padic| -> Result<Padic, LError> {
        let t = Padic::one(p, 80).sub(s);
        Ok(crate::padic::padic_exp(&t.mul(&lam))?)
    };
    let d = symmetric_derivative(f, p, &at(p, 0), 20).unwrap();
    let expected = lam.mul(&unit).neg();
    assert!(d.value.agreement(&expected) >= 20);
}

#[test]
fn derivative_at_trivial_zero_is_nonzero() {
    let series = PadicLSeries::new(quad(-4).twist(5, 1), 5, 12).unwrap();
    let d = kl_derivative(&series, &at(5, 0), 12).unwrap();
    assert!(!d.value.is_zero());
    assert!(d.agreement >= 12);
}

#[test]
fn leopoldt_formula_matches_series() {
    for (d, p) in [(5i64, 11u64), (8, 7)] {
        let chi = quad(d);
        let series = PadicLSeries::new(chi, p, 15).unwrap();
        let kl = series.eval(&at(p, 1)).unwrap();
        let leo = leopoldt_at_one(&chi, p, 15).unwrap();
        assert!(kl.agreement(&leo) >= 13, "eps_{d} p={p}: {kl} vs {leo}");
    }
}

#[test]
fn parse_and_display_characters() {
    let chi = parse_character("quad:-4*omega^1", Some(5)).unwrap();
    assert_eq!(chi, quad(-4).twist(5, 1));
    assert_eq!(chi.to_string(), "quad:-4*omega^1");
    assert!(parse_character("quad:12", None).is_ok());
    assert!(parse_character("quad:-4*omega", None).is_err());
    assert!(parse_character("quad:18", None).is_err());
}

proptest! {
    #[test]
    fn twisted_values_are_multiplicative(a in 1i64..500, b in 1i64..500, k in 0i64..6) {
        let chi = quad(-4).twist(7, k);
        let prec = 12;
        let lhs = chi.value_padic(7, a * b, prec);
        let rhs = chi.value_padic(7, a, prec).mul(&chi.value_padic(7, b, prec));
        prop_assert!(lhs.eq_to_prec(&rhs));
    }
}

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn int(p: u64, n: i64, prec: u32) -> Padic {
    Padic::from_i64(p, n, prec)
}

/// Plain log series of `1 + x` summed over exact rationals.
fn naive_log_one_plus(p: u64, x: i64, terms: usize, prec: u32) -> Padic {
    let mut acc = BigRational::zero();
    let mut pow = BigRational::one();
    let xr = q(x, 1);
    for j in 1..=terms {
        pow *= &xr;
        let term = &pow / q(j as i64, 1);
        if j % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Padic::from_rational(p, &acc, prec + 10).with_abs_prec(prec as i64)
}

#[test]
fn one_half_mod_625() {
    let x = int(5, 1, 4).div(&int(5, 2, 4)).unwrap();
    assert_eq!(x.residue(4).unwrap(), BigInt::from(313));
    assert_eq!(x.rel_prec(), 4);
}

#[test]
fn digits_and_display() {
    let x = int(5, 7, 3);
    assert_eq!(x.digits(), vec![2, 1, 0]);
    assert_eq!(format!("{x}"), "2 + 1*5 + O(5^3)");
    assert_eq!(format!("{}", Padic::zero(5, 4)), "O(5^4)");
}

#[test]
fn precision_rules() {
    let a = Padic::from_parts(7, 1, 3u32.into(), 5);
    let b = Padic::from_parts(7, 0, 2u32.into(), 3);
    assert_eq!(a.add(&b).abs_prec(), 3);
    assert_eq!(a.mul(&b).rel_prec(), 3);
    assert_eq!(a.mul(&b).valuation(), Some(1));
    let c = int(7, 10, 4).sub(&int(7, 10, 4));
    assert!(c.is_zero());
    assert_eq!(c.abs_prec(), 4);
    assert_eq!(Padic::zero(7, 3).div(&int(7, 7, 5)).unwrap().abs_prec(), 2);
    assert_eq!(int(7, 1, 4).div(&Padic::zero(7, 4)), Err(PadicError::DivisionByImpreciseZero));
}

#[test]
fn cancellation_lowers_precision() {
    let a = int(5, 26, 6);
    let b = int(5, 1, 6);
    let d = a.sub(&b);
    assert_eq!(d.valuation(), Some(2));
    assert_eq!(d.rel_prec(), 4);
}

#[test]
fn teichmuller_examples() {
    let t = teichmuller(&int(5, 2, 2), 2).unwrap();
    assert_eq!(t.residue(2).unwrap(), BigInt::from(7));
    for a in 1..5 {
        let t = teichmuller(&int(5, a, 20), 20).unwrap();
        assert!(t.pow(4).unwrap().eq_to_prec(&int(5, 1, 20)));
    }
    assert_eq!(teichmuller(&int(5, 10, 4), 4), Err(PadicError::NotAUnit));
}

#[test]
fn teichmuller_matches_iteration() {
    let p = 7u64;
    for a in 1..7 {
        let mut x = int(p, a, 15);
        for _ in 0..20 {
            x = x.pow(p as i64).unwrap();
        }
        assert!(x.eq_to_prec(&teichmuller(&int(p, a, 15), 15).unwrap()));
    }
}

#[test]
fn log_of_p_and_torsion_vanish() {
    assert!(iwasawa_log(&int(5, 5, 20)).unwrap().is_zero());
    let t = teichmuller(&int(7, 3, 20), 20).unwrap();
    assert!(iwasawa_log(&t).unwrap().is_zero());
    assert!(iwasawa_log(&int(5, -1, 20)).unwrap().is_zero());
}

#[test]
fn log_matches_naive_series() {
    // log(1 + 5) to 12 digits needs j with j - v(j) >= 12
    let ours = iwasawa_log(&int(5, 6, 12)).unwrap();
    let oracle = naive_log_one_plus(5, 5, 40, 12);
    assert!(ours.eq_to_prec(&oracle), "{ours} vs {oracle}");
    let ours = iwasawa_log(&int(11, 1 - 22, 10)).unwrap();
    let oracle = naive_log_one_plus(11, -22, 30, 10);
    assert!(ours.eq_to_prec(&oracle));
}

#[test]
fn log_of_non_principal_unit() {
    // log(2) = log(2^4)/4 at p = 5, and 2^4 = 1 + 15
    let lhs = iwasawa_log(&int(5, 2, 12)).unwrap();
    let rhs = naive_log_one_plus(5, 15, 40, 12).mul(&Padic::from_rational(5, &q(1, 4), 12));
    assert!(lhs.eq_to_prec(&rhs));
}

#[test]
fn exp_inverts_log() {
    let x = int(7, 14, 15);
    let e = padic_exp(&x).unwrap();
    assert!(iwasawa_log(&e).unwrap().eq_to_prec(&x));
    assert_eq!(padic_exp(&int(7, 3, 10)), Err(PadicError::OutsideConvergenceDomain));
}

#[test]
fn hensel_examples() {
    let f = [BigInt::one(), BigInt::zero(), BigInt::one()];
    let r = hensel_root(5, &f, &BigInt::from(2), 2).unwrap();
    assert_eq!(r.residue(2).unwrap(), BigInt::from(7));
    assert_eq!(hensel_root(5, &f, &BigInt::from(1), 2), Err(PadicError::RootSeedInvalid));
    let g = [BigInt::zero(), BigInt::zero(), BigInt::one()];
    assert_eq!(hensel_root(5, &g, &BigInt::from(0), 2), Err(PadicError::NotSimpleRoot));
}

#[test]
fn rejects_even_prime() {
    assert_eq!(check_prime(2), Err(PadicError::UnsupportedPrime(2)));
    assert!(check_prime(9).is_err());
    assert!(check_prime(29).is_ok());
}

#[test]
fn json_round_trip_and_zero() {
    let x = Padic::from_parts(5, -2, 13u32.into(), 6);
    let s = serde_json::to_string(&x).unwrap();
    assert_eq!(s, r#"{"p":5,"val":-2,"digits":[3,2,0,0,0,0],"prec":6}"#);
    let back: Padic = serde_json::from_str(&s).unwrap();
    assert_eq!(back, x);
    let z: Padic = serde_json::from_str(r#"{"p":5,"val":"inf","digits":[],"prec":9}"#).unwrap();
    assert!(z.is_zero());
    assert_eq!(z.abs_prec(), 9);
    assert!(serde_json::from_str::<Padic>(r#"{"p":2,"val":0,"digits":[1],"prec":3}"#).is_err());
}

#[test]
fn rational_reconstruction() {
    let x = Padic::from_rational(29, &q(-3, 7), 20);
    assert_eq!(x.to_rational(&BigInt::from(1000)).unwrap(), q(-3, 7));
}

#[test]
fn ext_log_trace_matches_log_of_norm() {
    // 7 is inert in Q(i): log_7(2) = Tr log(1 - i)
    let (ext, zeta) = cyclotomic_ext(7, 4, 20);
    assert_eq!(ext.degree(), 2);
    let one = ExtElement::from_int(&ext, &BigInt::one(), 20);
    let x = one.sub(&zeta);
    assert!(x.norm().eq_to_prec(&int(7, 2, 20)));
    let lhs = ext_log(&x).unwrap().trace();
    let rhs = iwasawa_log(&int(7, 2, 20)).unwrap();
    assert!(lhs.eq_to_prec(&rhs), "{lhs} vs {rhs}");
}

#[test]
fn cyclotomic_root_has_exact_order() {
    for (p, f) in [(29u64, 5u64), (17, 8), (7, 8), (11, 5), (7, 5)] {
        let (ext, z) = cyclotomic_ext(p, f, 12);
        let one = ExtElement::from_int(&ext, &BigInt::one(), 12);
        assert_eq!(z.pow(&f.into()), one);
        assert_ne!(z.pow(&(f / 2).into()), one);
    }
}

#[test]
fn ext_log_rejects_non_units() {
    let ext = UnramifiedExt::of_degree(5, 2);
    let x = ExtElement::from_int(&ext, &BigInt::from(5), 10);
    assert_eq!(ext_log(&x), Err(PadicError::NotAUnitInExtension));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn log_is_additive(p in prop::sample::select(vec![3u64, 5, 7, 11, 29]), a in 1i64..10_000, b in 1i64..10_000) {
        prop_assume!(a % p as i64 != 0 && b % p as i64 != 0);
        let n = 20;
        let la = iwasawa_log(&int(p, a, n)).unwrap();
        let lb = iwasawa_log(&int(p, b, n)).unwrap();
        let lab = iwasawa_log(&int(p, a * b, n)).unwrap();
        prop_assert!(lab.eq_to_prec(&la.add(&lb)));
    }

    #[test]
    fn teichmuller_is_torsion(p in prop::sample::select(vec![3u64, 5, 7, 13, 59]), a in 1i64..1000) {
        prop_assume!(a % p as i64 != 0);
        let t = teichmuller(&int(p, a, 25), 25).unwrap();
        prop_assert!(t.pow(p as i64 - 1).unwrap().eq_to_prec(&int(p, 1, 25)));
    }

    #[test]
    fn hensel_residual(p in prop::sample::select(vec![5u64, 13, 17, 29, 41]), d in 1i64..200) {
        let seed = smaller_sqrt_residue(p, d);
        prop_assume!(seed.is_some());
        let r = sqrt_from_smaller_seed(p, d, 30).unwrap();
        let res = r.mul(&r).sub(&int(p, d, 30));
        prop_assert!(res.val_or_abs() >= 30);
    }

    #[test]
    fn precision_doubling_agrees(p in prop::sample::select(vec![3u64, 7, 29]), a in 1i64..5000) {
        prop_assume!(a % p as i64 != 0);
        let lo = iwasawa_log(&int(p, a, 15)).unwrap();
        let hi = iwasawa_log(&int(p, a, 30)).unwrap();
        prop_assert!(lo.eq_to_prec(&hi));
    }
}

use num_integer::Integer;
use proptest::prelude::*;

use super::*;
use crate::fields::QuadField;

fn chars(d: i64) -> Vec<ClassCharacter> {
    class_characters(&QuadField::new(d).unwrap()).unwrap()
}

/// Coefficients of `q prod (1 - q^n)(1 - q^(23 n))` to `q^len`.
fn eta_product_23(len: usize) -> Vec<i64> {
    let mut series = vec![0i64; len + 1];
    series[1] = 1;
    for step in [1usize, 23] {
        let mut n = step;
        while n <= len {
            for i in (n..=len).rev() {
                series[i] -= series[i - n];
            }
            n += step;
        }
    }
    series
}

#[test]
fn cyclotomic_polynomials() {
    assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
    assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
    assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
    assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
    assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
}

#[test]
fn cyclotomic_arithmetic() {
    let z = Cyclo::root(3, 1);
    assert_eq!(z.mul(&z).mul(&z), Cyclo::one(3));
    assert!(Cyclo::one(3).add(&z).add(&Cyclo::root(3, 2)).is_zero());
    assert_eq!(Cyclo::root(4, 2), Cyclo::from_int(4, -1));
    assert_eq!(Cyclo::root(3, 2).to_string(), "-1 - z");
}

#[test]
fn character_counts() {
    assert_eq!(chars(-4).len(), 1);
    assert_eq!(chars(-23).len(), 3);
    assert_eq!(chars(-20).len(), 2);
    assert_eq!(chars(-84).len(), 4);
    let cubic = &chars(-23)[1];
    assert_eq!(cubic.character_order(), 3);
    assert!(!cubic.is_real());
    assert!(chars(-20)[1].is_real());
}

#[test]
fn characters_are_homomorphisms_inverting_on_conjugates() {
    for d in [-23i64, -20, -47, -56, -84, -71] {
        for psi in chars(d) {
            let g = &psi.group;
            for i in 0..g.order() {
                assert_eq!(psi.value(g.inverse(i)).mul(&psi.value(i)), Cyclo::one(psi.order));
                for j in 0..g.order() {
                    assert_eq!(psi.value(g.mul(i, j)), psi.value(i).mul(&psi.value(j)));
                }
            }
        }
    }
}

#[test]
fn theta_of_cubic_character_is_eta_product() {
    let psi = &chars(-23)[1];
    let theta = theta_qexp(psi, 200).unwrap();
    let eta = eta_product_23(200);
    for (n, &e) in eta.iter().enumerate().skip(1) {
        assert_eq!(theta.coeff(n).as_int(), Some(e), "n = {n}");
    }
    assert!(theta.cuspidal);
    assert_eq!(theta.level, 23);
}

#[test]
fn coefficients_at_primes() {
    let psi = &chars(-23)[1];
    let theta = theta_qexp(psi, 300).unwrap();
    for l in [5u64, 7, 11, 17, 19, 37] {
        // inert primes
        assert!(theta.coeff(l as usize).is_zero(), "l = {l}");
    }
    for l in [2u64, 3, 13, 29, 31, 41, 47, 59] {
        let (a, b) = prime_values(psi, l).unwrap();
        assert_eq!(theta.coeff(l as usize), &a.add(&b), "l = {l}");
    }
}

#[test]
fn trivial_character_is_rejected() {
    assert_eq!(theta_qexp(&chars(-23)[0], 10).unwrap_err(), ThetaError::CharacterDescends);
}

#[test]
fn genus_theta_is_flagged() {
    let theta = theta_qexp(&chars(-20)[1], 30).unwrap();
    assert!(!theta.cuspidal);
    assert_eq!(theta.coeff(1), &Cyclo::one(2));
}

#[test]
fn stabilization_coefficients_and_eigenvalue() {
    let psi = &chars(-23)[1];
    let theta = theta_qexp(psi, 600).unwrap();
    let (a, b) = prime_values(psi, 59).unwrap();
    let f = p_stabilize(&theta, 59, &a, &b).unwrap();
    assert_eq!(f.coeff(1), &Cyclo::one(3));
    assert_eq!(f.coeff(59), &a);
    let uf = up_action(&f, 59).unwrap();
    assert_eq!(uf.len(), 10);
    assert!(uf.sub(&f.truncate(10).scale(&a)).is_zero());
}

#[test]
fn regular_prime_is_rejected() {
    let psi = &chars(-23)[1];
    let (a, b) = prime_values(psi, 13).unwrap();
    assert_ne!(a, b);
    assert_eq!(up_identity_check(psi, 13, 200).unwrap_err(), ThetaError::RegularCase(13));
}

#[test]
fn hecke_eigenvalues() {
    let psi = &chars(-23)[1];
    let theta = theta_qexp(psi, 400).unwrap();
    for l in [3u64, 13] {
        let t = hecke_tl(&theta, l).unwrap();
        let eigen = theta.coeff(l as usize).clone();
        assert!(t.sub(&theta.truncate(t.len()).scale(&eigen)).is_zero(), "l = {l}");
    }
    let t5 = hecke_tl(&theta, 5).unwrap();
    assert!(t5.is_zero());
    assert_eq!(hecke_tl(&theta, 23).unwrap_err(), ThetaError::BadPrime(23));
    let zero = theta.scale(&Cyclo::zero(3));
    assert!(up_action(&zero, 7).unwrap().is_zero());
}

#[test]
fn up_jordan_block_cubic() {
    let psi = &chars(-23)[1];
    let check = up_identity_check(psi, 59, 600).unwrap();
    assert_eq!(check.checked_up_to, 10);
    assert_eq!(check.psi_p, Cyclo::one(3));
    assert_eq!(check.nilpotency_index, 2);
    assert!(!check.semisimple);
}

#[test]
fn up_jordan_block_genus() {
    let psi = &chars(-20)[1];
    let principal = up_identity_check(psi, 29, 600).unwrap();
    assert_eq!(principal.psi_p, Cyclo::one(2));
    let nonprincipal = up_identity_check(psi, 7, 600).unwrap();
    assert_eq!(nonprincipal.psi_p, Cyclo::from_int(2, -1));
    assert_eq!(nonprincipal.checked_up_to, 85);
}

#[test]
fn prime_power_coefficients() {
    // a_{p^(k+1)} = (k+2) psi(p)^(k+1) when psi(p) = psi(pbar)
    let psi = &chars(-20)[1];
    let theta = theta_qexp(psi, 400).unwrap();
    let (alpha, _) = prime_values(psi, 7).unwrap();
    let mut power = Cyclo::one(2);
    for k in 0..3u32 {
        power = power.mul(&alpha);
        let n = 7usize.pow(k + 1);
        assert_eq!(theta.coeff(n), &power.scale(k as i64 + 2), "n = {n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coefficients_are_multiplicative(m in 1usize..60, n in 1usize..60) {
        prop_assume!(m.gcd(&n) == 1);
        let psi = &chars(-47)[1];
        let theta = theta_qexp(psi, 3600).unwrap();
        prop_assert_eq!(theta.coeff(m * n), &theta.coeff(m).mul(theta.coeff(n)));
    }

    #[test]
    fn hecke_operators_commute(i in 0usize..5, j in 0usize..5) {
        let primes = [2u64, 3, 5, 7, 11];
        let psi = &chars(-23)[1];
        let theta = theta_qexp(psi, 800).unwrap();
        let mixed = theta.add(&theta_qexp(&chars(-23)[2], 800).unwrap().scale(&Cyclo::root(3, 1)));
        let (l, m) = (primes[i], primes[j]);
        let lm = hecke_tl(&hecke_tl(&mixed, m).unwrap(), l).unwrap();
        let ml = hecke_tl(&hecke_tl(&mixed, l).unwrap(), m).unwrap();
        let n = lm.len().min(ml.len());
        prop_assert!(lm.truncate(n).sub(&ml.truncate(n)).is_zero());
    }
}

use padic_linv::fields::{build_biquad, kronecker, QuadField};
use padic_linv::thetaforms::{class_characters, theta_qexp, up_identity_check, Cyclo};

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

#[test]
fn genus_theta_matches_the_biquadratic_configuration() {
    let config = build_biquad(-4, 5, 29, 12).unwrap();
    assert_eq!(config.d_kprime, -20);

    let psi = class_characters(&QuadField::new(config.d_kprime).unwrap()).unwrap()[1].clone();
    assert!(psi.is_real());
    let theta = theta_qexp(&psi, 400).unwrap();
    // the genus character splits the coefficients at unramified primes by the two other fields
    for l in (3..400u64).filter(|&l| is_prime(l) && l != 5) {
        let expected = kronecker(config.d_k, l as i64) + kronecker(config.d_f, l as i64);
        assert_eq!(theta.coeff(l as usize), &Cyclo::from_int(2, expected as i64), "l = {l}");
    }

    // p splits completely in the biquadratic field, which is what makes U_p irregular there
    let check = up_identity_check(&psi, config.p, 600).unwrap();
    assert_eq!(check.psi_p, Cyclo::one(2));
    assert!(!check.semisimple);
}

#[test]
fn inert_primes_of_the_genus_field_are_regular_or_vanish() {
    let psi = class_characters(&QuadField::new(-20).unwrap()).unwrap()[1].clone();
    let theta = theta_qexp(&psi, 200).unwrap();
    for l in [11u64, 13, 17, 19] {
        // split in exactly one of Q(i) and Q(sqrt 5), inert in Q(sqrt -5)
        assert!(theta.coeff(l as usize).is_zero(), "l = {l}");
        assert!(up_identity_check(&psi, l, 200).is_err());
    }
}

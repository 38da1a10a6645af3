use std::sync::Arc;

use num_rational::BigRational;
use proptest::prelude::*;

use super::*;

fn alg(names: &[&str], rels: &[&str], d: u32) -> Arc<LocalAlgebra> {
    Arc::new(LocalAlgebra::parse(names, rels, d).unwrap())
}

fn lambda(d: u32) -> Arc<LocalAlgebra> {
    alg(&["X"], &[], d)
}

fn field(d: u32) -> Arc<LocalAlgebra> {
    alg(&[], &[], d)
}

fn to_field(a: &Arc<LocalAlgebra>, d: u32) -> AlgebraMorphism {
    AlgebraMorphism::new(a.clone(), field(d), vec![Poly::zero(0); a.ngens()]).unwrap()
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `Λ ×_Q Λ` with its projections.
fn wedge(d: u32) -> FiberProduct {
    fiber_product(&to_field(&lambda(d), d), &to_field(&lambda(d), d)).unwrap()
}

#[test]
fn presentation_bases() {
    let l = lambda(6);
    assert_eq!(l.dim(), 7);
    let basis: Vec<String> = l.basis().map(|m| m.display(l.names()).to_string()).collect();
    assert_eq!(basis, ["1", "X", "X^2", "X^3", "X^4", "X^5", "X^6"]);

    assert_eq!(alg(&["X"], &["X^2"], 6).dim(), 2);

    let cusp = alg(&["X", "Z"], &["Z^2 - X^3"], 6);
    let basis: Vec<String> = cusp.basis().map(|m| m.display(cusp.names()).to_string()).collect();
    for m in ["1", "X", "X^6", "Z", "X*Z", "X^5*Z"] {
        assert!(basis.contains(&m.to_string()), "{m}");
    }
    assert!(!basis.contains(&"Z^2".to_string()));
}

#[test]
fn cusp_matches_numerical_semigroup() {
    // Q[[X, Z]]/(Z^2 - X^3) = Q[[t^2, t^3]] with m^k the elements of t-order >= 2k
    for d in [4u32, 7, 10] {
        let cusp = alg(&["X", "Z"], &["Z^2 - X^3"], d);
        let semigroup = (0..2 * (d + 1)).filter(|n| *n != 1).count();
        assert_eq!(cusp.dim(), semigroup, "D = {d}");
        let h = cusp.hilbert_function();
        assert_eq!(h[0], 1);
        assert!(h[1..].iter().all(|k| *k == 2), "{h:?}");
        // Z^4 = X^6 has t-order 12, so order 6
        let z4 = cusp.pow(&cusp.gen(1), 4);
        assert_eq!(cusp.order(&z4), if d >= 6 { Some(6) } else { None });
    }
}

#[test]
fn nonlocal_relation_is_rejected() {
    let err = LocalAlgebra::parse(&["X"], &["1 + X"], 4).unwrap_err();
    assert!(matches!(err, AlgError::RelationNotLocal(_)));
    assert!(matches!(Poly::parse(&["X"], "X + W"), Err(AlgError::UnknownGenerator(_))));
    assert!(matches!(Poly::parse(&["X"], "X +"), Err(AlgError::Parse(_))));
}

#[test]
fn parse_and_display() {
    let names = ["X", "Y"];
    let p = Poly::parse(&names, "(X - Y)^2 + 1/2*X*Y").unwrap();
    let owned: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    assert_eq!(p.display(&owned).to_string(), "X^2 - 3/2*X*Y + Y^2");
    assert_eq!(Poly::parse(&names, "-X + 2").unwrap().order(), Some(0));
}

#[test]
fn wedge_of_two_lines() {
    let d = 8;
    let fp = wedge(d);
    let t = &fp.algebra;
    assert!(fp.stable);
    assert_eq!(t.ngens(), 2);
    assert_eq!(t.relations().len(), 1);
    assert_eq!(t.relations()[0].display(t.names()).to_string(), format!("{}*{}", t.names()[0], t.names()[1]));
    assert_eq!(t.dim(), 2 * d as usize + 1);

    // against the presentation (X1, X2; X1 X2)
    let model = alg(&["X1", "X2"], &["X1*X2"], d);
    let names: Vec<&str> = t.names().iter().map(|s| s.as_str()).collect();
    let phi = AlgebraMorphism::parse(model, t.clone(), &names).unwrap();
    assert!(iso_witness_check(&phi).unwrap());

    // surjective projections with trivially intersecting kernels
    assert!(fp.proj_a.is_surjective() && fp.proj_b.is_surjective());
    let mut both = fp.proj_a.kernel();
    both.extend(fp.proj_b.kernel());
    let span = t.ideal_span(&fp.proj_a.kernel());
    assert!(fp.proj_b.kernel().iter().all(|k| !span.contains(k) || k.is_empty()));
    assert_eq!(
        fp.proj_a.kernel().len() + fp.proj_b.kernel().len(),
        {
            let mut e = Echelon::new();
            both.iter().filter(|v| e.insert(v)).count()
        }
    );
}

#[test]
fn fiber_over_the_target_itself() {
    let d = 7;
    let a = alg(&["X", "Z"], &["Z^2 - X^3"], d);
    let c = alg(&["X"], &["X^2"], d);
    let f = AlgebraMorphism::parse(a.clone(), c.clone(), &["X", "0"]).unwrap();
    let fp = fiber_product(&f, &AlgebraMorphism::identity(c)).unwrap();
    assert!(iso_witness_check(&fp.proj_a).unwrap());
    assert_eq!(fp.algebra.dim(), a.dim());
}

#[test]
fn non_surjective_maps_are_rejected() {
    let d = 6;
    let square = AlgebraMorphism::parse(lambda(d), lambda(d), &["X^2"]).unwrap();
    assert!(!square.is_surjective());
    let err = fiber_product(&square, &AlgebraMorphism::identity(lambda(d))).unwrap_err();
    assert_eq!(err, AlgError::NotSurjective);
}

#[test]
fn morphisms_must_respect_relations() {
    let cusp = alg(&["X", "Z"], &["Z^2 - X^3"], 6);
    let err = AlgebraMorphism::parse(cusp.clone(), lambda(6), &["X", "X"]).unwrap_err();
    assert!(matches!(err, AlgError::NotAMorphism(_)));
    // the parametrization by t^2, t^3 kills m^7 of the source
    assert!(AlgebraMorphism::parse(cusp, lambda(6), &["X^2", "X^3"]).is_ok());
    let finer = AlgebraMorphism::parse(lambda(6), lambda(8), &["X"]);
    assert!(matches!(finer, Err(AlgError::NotAMorphism(_))));
    let unit = AlgebraMorphism::parse(lambda(6), lambda(6), &["1 + X"]).unwrap_err();
    assert!(matches!(unit, AlgError::NotAMorphism(_)));
}

#[test]
fn witnesses_for_the_quadratic_extension() {
    for r in [2u32, 3, 4, 5, 6] {
        assert!(check_iso_witness(r, 2 * r + 4).unwrap(), "r = {r}");
    }
    let phi = iso_witness(4, 10).unwrap();
    assert_eq!(phi.source().dim(), phi.target().dim());
}

#[test]
fn ideal_operations() {
    let d = 8;
    let fp = wedge(d);
    let t = &fp.algebra;
    let (x1, x2) = (t.gen(0), t.gen(1));
    // the truncation adds m^D to every annihilator of an element of order one
    let mut tail = t.max_ideal_power(d);
    tail.push(x2.clone());
    let mut ann = annihilator(t, std::slice::from_ref(&x1));
    ann.extend(t.max_ideal_power(d));
    assert!(ideals_equal(t, &ann, &tail));
    assert!(ideals_equal(t, &fp.proj_a.kernel(), std::slice::from_ref(&x2)));
    assert!(ideal_contains(t, std::slice::from_ref(&x1), &t.mul(&x1, &x1)));
    assert!(!ideal_contains(t, std::slice::from_ref(&x1), &x2));

    let l = lambda(d);
    let x = l.gen(0);
    let square = ideal_product(&l, std::slice::from_ref(&x), std::slice::from_ref(&x));
    assert!(ideals_equal(&l, &square, &[l.pow(&x, 2)]));
}

#[test]
fn congruence_ideals_of_simple_maps() {
    let d = 8;
    assert_eq!(congruence_ideal(&AlgebraMorphism::identity(lambda(d))).unwrap().exponent, 0);
    let fp = wedge(d);
    assert_eq!(congruence_ideal(&fp.proj_a).unwrap().exponent, 1);

    // twisting the second factor by an automorphism leaves the ideal unchanged
    let t = fp.algebra.clone();
    let n = t.names();
    let images = [n[0].clone(), format!("2*{} + {}^2", n[1], n[1])];
    let images: Vec<&str> = images.iter().map(|s| s.as_str()).collect();
    let sigma = AlgebraMorphism::parse(t.clone(), t.clone(), &images).unwrap();
    assert!(iso_witness_check(&sigma).unwrap());
    let twisted = sigma.then(&fp.proj_a);
    assert_eq!(congruence_ideal(&twisted).unwrap().exponent, 1);

    // Λ ×_{Λ/X^2} Λ glues to second order
    let glue = alg(&["X"], &["X^2"], d);
    let to_glue = AlgebraMorphism::parse(lambda(d), glue, &["X"]).unwrap();
    let deep = fiber_product(&to_glue, &to_glue).unwrap();
    assert_eq!(congruence_ideal(&deep.proj_a).unwrap().exponent, 2);
}

#[test]
fn dimensions_and_socles() {
    let l = lambda(6);
    assert_eq!(tangent_dim(&l), 1);
    assert!(matches!(socle_dim(&l), Err(AlgError::TruncationInconclusive(_))));
    for n in 1..5 {
        assert_eq!(socle_dim(&alg(&["X"], &[&format!("X^{n}")], 6)).unwrap(), 1);
    }
    // the classical pair: a complete intersection and the square of the maximal ideal
    assert_eq!(socle_dim(&alg(&["X", "Y"], &["X^2", "Y^2"], 6)).unwrap(), 1);
    assert_eq!(socle_dim(&alg(&["X", "Y"], &["X^2", "X*Y", "Y^2"], 6)).unwrap(), 2);
    assert_eq!(special_fiber_dim(&l, &[l.gen(0)]), 1);
}

#[test]
fn gorenstein_tests() {
    let l = lambda(8);
    let r = gorenstein_check(&l, &l.gen(0)).unwrap();
    assert!(r.is_gorenstein);
    assert_eq!(r.quotient_nilpotency, 1);

    let fp = wedge(8);
    let t = &fp.algebra;
    assert_eq!(gorenstein_check(t, &t.gen(0)).unwrap_err(), AlgError::ElementNotRegular);
    let sum = t.add(&t.gen(0), &t.gen(1));
    let r = gorenstein_check(t, &sum).unwrap();
    // Λ ×_Q Λ is a plane node, a complete intersection
    assert!(r.is_gorenstein);

    let plane = alg(&["X", "Y"], &[], 8);
    let r = gorenstein_check(&plane, &plane.gen(0));
    assert!(matches!(r, Err(AlgError::TruncationInconclusive(_))));
}

#[test]
fn model_case_one() {
    for e in [1u32, 2] {
        let report = model_report(ModelCase::I, 2, e, 8).unwrap();
        assert_eq!(report.tangent_dim, 4);
        assert_eq!(report.special_fiber_dim, 4);
        assert_eq!(report.gorenstein.socle_dim, 3);
        assert!(!report.gorenstein.is_gorenstein);
        assert_eq!(report.congruence_psi.exponent, 1);
        assert_eq!(report.congruence_psi_tau.exponent, 1);
        assert!(report.stable);
    }
}

#[test]
fn model_case_two() {
    for r in [3u32, 4] {
        let report = model_report(ModelCase::II, r, 1, 2 * r + 4).unwrap();
        assert_eq!(report.special_fiber_dim, 4, "r = {r}");
        assert_eq!(report.gorenstein.socle_dim, 3, "r = {r}");
        assert_eq!(report.congruence_psi.exponent, 1, "r = {r}");
        assert_eq!(report.congruence_psi_tau.exponent, r - 1, "r = {r}");
        assert!(report.stable);
    }
}

#[test]
fn model_parameters_are_checked() {
    let bad = [(ModelCase::I, 3, 1, 12), (ModelCase::II, 2, 1, 12), (ModelCase::II, 3, 2, 12), (ModelCase::II, 3, 1, 6)];
    for (case, r, e, d) in bad {
        assert!(matches!(build_model(case, r, e, d), Err(AlgError::InvalidParameters(_))), "{case} {r} {e} {d}");
    }
    assert_eq!("ii".parse::<ModelCase>().unwrap(), ModelCase::II);
}

#[test]
fn model_projections() {
    let m = build_model(ModelCase::II, 3, 1, 10).unwrap();
    for pi in [&m.pi_psi, &m.pi_perp, &m.pi_psi_tau] {
        assert!(pi.is_surjective());
    }
    // each projection carries the weight variable to X
    let x = m.pi_psi.target().gen(0);
    assert_eq!(m.pi_psi.apply(&m.lambda), x);
    assert_eq!(m.pi_psi_tau.apply(&m.lambda), x);
}

fn small_poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(((0u32..4, 0u32..3), -3i64..4), 0..5)
        .prop_map(|terms| Poly::from_terms(2, terms.into_iter().map(|((a, b), c)| (vec![a, b], q(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_multiplicative(p in small_poly(), r in small_poly(), s in small_poly()) {
        let a = alg(&["X", "Z"], &["Z^2 - X^3"], 7);
        let (x, y, z) = (a.elem(&p), a.elem(&r), a.elem(&s));
        prop_assert_eq!(a.elem(&p.mul(&r)), a.mul(&x, &y));
        prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
        prop_assert_eq!(a.mul(&x, &a.add(&y, &z)), a.add(&a.mul(&x, &y), &a.mul(&x, &z)));
        let prod = a.mul(&x, &y);
        if let (Some(i), Some(j), Some(k)) = (a.order(&x), a.order(&y), a.order(&prod)) {
            prop_assert!(k >= i + j);
        }
    }
}


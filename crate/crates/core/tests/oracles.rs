//! Worked values checked against independent oracles: truncated linear
//! algebra for colengths, explicit certificates for memberships, direct
//! expansion for polynomial identities.

mod common;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use common::*;
use folinv::invariants::{
    check_conjecture1, ell_k, foliation_milnor_k, foliation_tjurina_k, is_invariant, milnor_bound_check, milnor_k,
    milnor_k_closed, polar_intersection_k, quasihomogeneous_identity_check, ratio_check, second_type_milnor_check,
    teissier_k_check, tjurina_k, Assertions, PolarSampling,
};
use folinv::ring::{local_cmp, Monomial};
use folinv::stdbasis::{colength, contains, mora_normal_form, standard_basis, Colength, Ideal};
use folinv::{QCurve, QIdeal, QPoly, Rational};

const CAP: u32 = 40;

fn jacobian(f: &QPoly) -> Vec<QPoly> {
    vec![f.partial_x(), f.partial_y()]
}

fn with(mut gens: Vec<QPoly>, f: &QPoly) -> Vec<QPoly> {
    gens.push(f.clone());
    gens
}

fn oracle(gens: &[QPoly]) -> u64 {
    oracle_colength(gens, CAP).expect("oracle stabilizes")
}

#[test]
fn oracle_matches_known_colengths() {
    assert_eq!(oracle(&[p("x"), p("y")]), 1);
    assert_eq!(oracle(&mk(4)), 10);
    assert_eq!(oracle(&[p("x^4-y^3"), p("y^5-x^7+x^4*y^4")]), 20);
    assert_eq!(oracle_colength(&[p("x^2"), p("x*y")], 12), None);
}

#[test]
fn degree_tie_breaks_towards_x() {
    // Same degree: the larger x exponent is bigger.
    let (a, b) = (Monomial::new(2, 0), Monomial::new(1, 1));
    let rule = a.x.cmp(&b.x);
    assert_eq!(rule, Ordering::Greater);
    assert_eq!(local_cmp(a, b), rule);
}

#[test]
fn product_leading_monomial_by_dense_multiplication() {
    let f = [((4u32, 0u32), 1i64), ((0, 3), -1)];
    let g = [((0, 5), 1i64), ((7, 0), -1), ((4, 4), 1)];
    let mut dense: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    for ((a1, b1), c1) in f {
        for ((a2, b2), c2) in g {
            *dense.entry((a1 + a2, b1 + b2)).or_default() += c1 * c2;
        }
    }
    dense.retain(|_, c| *c != 0);
    // Largest under the local order: minimal degree, then maximal x exponent.
    let lead = dense.keys().copied().min_by(|a, b| (a.0 + a.1).cmp(&(b.0 + b.1)).then(b.0.cmp(&a.0))).unwrap();
    assert_eq!(lead, (0, 8));
    let prod = &p("x^4-y^3") * &p("y^5-x^7+x^4*y^4");
    assert_eq!(prod.leading_monomial(), Some(Monomial::new(0, 8)));
    assert_eq!(prod.len(), dense.len());
    // x^4 y^5 is a term, but not the leading one.
    assert_eq!(dense.get(&(4, 5)), Some(&1));
}

#[test]
fn y_cubed_is_not_in_the_cusp_ideal() {
    let f = p("x^4-y^3");
    assert_eq!(mora_normal_form(&p("y^3"), std::slice::from_ref(&f)), p("x^4"));
    assert!(!oracle_member_mod(&[f], &p("y^3"), 6));
}

#[test]
fn milnor_ideal_of_ratio_example() {
    let f = p("x^5+y^5+x^3*y^3");
    let sb = standard_basis(&Ideal::new(jacobian(&f)));
    assert_eq!(sb.colength(), Colength::Finite(oracle(&jacobian(&f))));
    assert_eq!(sb.colength(), Colength::Finite(16));
    // 78 = 16 + 72 - 10 from the closed form with ν = 5, k = 8.
    assert_eq!(milnor_k_closed(16, 5, 8), 78);
}

#[test]
fn euler_certificate_for_membership() {
    // ω = 2x dy - 3y dx: f = (-y/3)(-3y) + (-x^2/2)(2x).
    let (pp, qq, f) = (p("-3*y"), p("2*x"), p("y^2-x^3"));
    let cert = &(&p("-1/3*y") * &pp) + &(&p("-1/2*x^2") * &qq);
    assert_eq!(cert, f);
    assert!(contains(&Ideal::new([pp, qq]), &f));
}

#[test]
fn jacobian_times_maximal_ideal() {
    let f = p("x^4-y^3");
    let gens = product(&jacobian(&f), &mk(1));
    assert_eq!(oracle(&gens), 8);
    assert_eq!(colength(&Ideal::new(gens)), Colength::Finite(8));
    // i(f_x, f_y) + dim O/(⟨f_x⟩ + m) + dim O/m.
    assert_eq!(oracle(&jacobian(&f)) + oracle(&with(mk(1), &f.partial_x())) + oracle(&mk(1)), 8);
}

#[test]
fn fnm_invariance_by_expansion() {
    for (n, m) in [(2u32, 2u32), (3, 2), (5, 3), (7, 4)] {
        let (fol, f) = fnm(n, m);
        let w = &(fol.p() * &f.partial_y()) - &(fol.q() * &f.partial_x());
        assert_eq!(w, f.scale(&q(-((m * n) as i64))));
        assert!(is_invariant(&fol, &QCurve::reduced(f).unwrap()));
    }
}

#[test]
fn radial_foliation_does_not_leave_parabola_invariant() {
    let (fol, f) = (fol("-y", "x"), p("x+y^2"));
    let w = &(fol.p() * &f.partial_y()) - &(fol.q() * &f.partial_x());
    assert_eq!(w, p("-x-2*y^2"));
    assert!(!oracle_member_mod(std::slice::from_ref(&f), &w, 4));
    assert!(!is_invariant(&fol, &QCurve::reduced(f).unwrap()));
}

#[test]
fn closed_milnor_k_against_colength() {
    let f = p("x^4-y^3");
    let direct = oracle(&product(&jacobian(&f), &mk(2)));
    assert_eq!(direct, 12);
    assert_eq!(milnor_k_closed(6, 3, 2), direct);
    assert_eq!(milnor_k(&f, 2), Colength::Finite(direct));
}

#[test]
fn ell_against_tjurina_of_quadric() {
    let f = p("x^2+y^2");
    let direct = oracle(&with(product(&jacobian(&f), &mk(8)), &f));
    assert_eq!(direct, 17);
    assert_eq!(ell_k(2, 2, 8).unwrap(), direct);
    assert_eq!(tjurina_k(&f, 8), Colength::Finite(direct));
}

#[test]
fn conjecture_for_rational_weights() {
    let f = p("x^3+x*y^3");
    let r = check_conjecture1(&f, 2).unwrap();
    assert_eq!(r.tau_k, oracle(&with(product(&jacobian(&f), &mk(2)), &f)));
    // a1 = 3, a2 = 9/2.
    let ell = folinv::invariants::ell_k_rational(&q(3), &Rational::new(9.into(), 2.into()), 2).unwrap();
    assert_eq!(r.ell_k, ell);
    assert!(r.holds);
}

#[test]
fn ratio_example_at_k0_is_below_four_thirds() {
    let f = p("x^5+y^5+x^3*y^3");
    let mu = oracle(&jacobian(&f));
    let tau = oracle(&with(jacobian(&f), &f));
    let r = ratio_check(&f, 0).unwrap();
    assert_eq!((r.mu_k, r.tau_k), (mu, tau));
    assert!(3 * mu < 4 * tau);
    assert!(!r.exceeds_4_3);
}

#[test]
fn deformed_curve_is_not_quasi_homogeneous() {
    let f = p("y^3-x^7+x^5*y");
    let mu = oracle(&jacobian(&f));
    let tau = oracle(&with(jacobian(&f), &f));
    assert_ne!(mu, tau);
    let ham = folinv::QFoliation::hamiltonian(&f).unwrap();
    assert!(!folinv::invariants::is_quasihomogeneous_foliation(&ham, &QCurve::reduced(f).unwrap()));
}

#[test]
fn bound_examples() {
    let asserted = Assertions { second_type: true, generalized_curve: false };
    let cusp = QCurve::reduced(p("y^2-x^3")).unwrap();
    let r = milnor_bound_check(&fol("-3*y", "2*x"), &cusp, 0, asserted).unwrap();
    let tau = oracle(&[p("-3*y"), p("2*x"), p("y^2-x^3")]);
    assert_eq!((r.tau_k, r.mu_k, r.upper), (tau, 1, 2 * tau));
    assert!(r.holds);

    let f = p("x^2+y^2");
    let ham = folinv::QFoliation::hamiltonian(&f).unwrap();
    let r = milnor_bound_check(&ham, &QCurve::reduced(f.clone()).unwrap(), 1, asserted).unwrap();
    let tau1 = oracle(&with(product(&jacobian(&f), &mk(1)), &f));
    let mu1 = oracle(&product(&jacobian(&f), &mk(1)));
    assert_eq!((tau1, mu1), (3, 3));
    assert_eq!((r.tau_k, r.mu_k, r.upper), (3, 3, 7));
}

#[test]
fn fnm_quasi_homogeneous_identity() {
    let (fol, f) = fnm(3, 2);
    let curve = QCurve::reduced(f.clone()).unwrap();
    let gens = vec![fol.p().clone(), fol.q().clone()];
    let mu2 = oracle(&product(&gens, &mk(2)));
    let tau2 = oracle(&with(product(&gens, &mk(2)), &f));
    assert_eq!(mu2 - tau2, 1);
    let asserted = Assertions { second_type: false, generalized_curve: true };
    let r = quasihomogeneous_identity_check(&fol, &curve, 2, asserted).unwrap();
    assert_eq!((r.mu_k, r.tau_k), (mu2, tau2));
    assert!(r.holds);
}

fn polar_oracle(pp: &QPoly, qq: &QPoly, f: &QPoly, dir: (i64, i64), k: u32) -> u64 {
    let polar = &pp.scale(&q(dir.0)) + &qq.scale(&q(dir.1));
    oracle(&product(&[polar, f.clone()], &mk(k)))
}

#[test]
fn teissier_examples() {
    let f = p("x^4-y^3");
    let r = teissier_k_check(&f, 0, PolarSampling::default()).unwrap();
    assert_eq!(r.polar.value, 8);
    assert_eq!(polar_oracle(&f.partial_x(), &f.partial_y(), &f, (3, 7), 0), 8);
    assert!(r.holds);

    let f = p("x^5+y^5+x^3*y^3");
    let r = teissier_k_check(&f, 8, PolarSampling::default()).unwrap();
    assert_eq!(r.polar.value, 82);
    assert_eq!(polar_oracle(&f.partial_x(), &f.partial_y(), &f, (3, 7), 8), 82);
}

#[test]
fn polar_difference_of_fnm_is_constant() {
    let (fol, f) = fnm(2, 3);
    let curve = QCurve::reduced(f.clone()).unwrap();
    let ham = folinv::QFoliation::hamiltonian(&f).unwrap();
    let s = PolarSampling::default();
    let diffs: Vec<i64> = (0..=3)
        .map(|k| {
            let a = polar_intersection_k(&fol, &curve, k, s).unwrap().value as i64;
            let b = polar_intersection_k(&ham, &curve, k, s).unwrap().value as i64;
            assert_eq!(a as u64, polar_oracle(fol.p(), fol.q(), &f, (3, 7), k));
            assert_eq!(b as u64, polar_oracle(&f.partial_x(), &f.partial_y(), &f, (3, 7), k));
            a - b
        })
        .collect();
    assert!(diffs.iter().all(|d| *d == diffs[0]), "{diffs:?}");
}

#[test]
fn polar_difference_of_first_gsv_example_drifts() {
    // The foliation is not of second type; the difference equals GSV = 2
    // only at k = 0.
    let fol = fol("4*x*y", "y-2*x^2");
    let f = p("y");
    let curve = QCurve::reduced(f.clone()).unwrap();
    let ham = folinv::QFoliation::hamiltonian(&f).unwrap();
    let s = PolarSampling::default();
    let diffs: Vec<i64> = (0..=3)
        .map(|k| {
            let a = polar_intersection_k(&fol, &curve, k, s).unwrap().value;
            let b = polar_intersection_k(&ham, &curve, k, s).unwrap().value;
            assert_eq!(a, polar_oracle(fol.p(), fol.q(), &f, (3, 7), k));
            a as i64 - b as i64
        })
        .collect();
    assert_eq!(diffs[0], 2);
    assert!(diffs[1..].iter().any(|d| *d != 2), "{diffs:?}");
}

#[test]
fn fnm_milnor_difference_is_constant() {
    let (fol, f) = fnm(3, 2);
    let curve = QCurve::reduced(f.clone()).unwrap();
    let gens = vec![fol.p().clone(), fol.q().clone()];
    assert_eq!(oracle(&gens), 1);
    assert_eq!(oracle(&jacobian(&f)), 2);
    let asserted = Assertions { second_type: true, generalized_curve: false };
    let r = second_type_milnor_check(&fol, &curve, 4, asserted).unwrap();
    for row in &r.rows {
        let direct = oracle(&product(&gens, &mk(row.k))) as i64 - oracle(&product(&jacobian(&f), &mk(row.k))) as i64;
        assert_eq!(row.left, direct);
        assert_eq!(row.right, -1);
    }
    assert!(r.holds);
}

#[test]
fn stated_form_of_the_product_lemma_fails() {
    // P = x, Q = y, g = y, f = x, J = m: the cokernel of multiplication by g
    // is O/(g, f), not O/(⟨g⟩J + ⟨f⟩).
    let (pp, qq, g, f) = (p("x"), p("y"), p("y"), p("x"));
    let lhs = oracle(&with(product(&[&g * &pp, &g * &qq], &mk(1)), &f));
    let first = oracle(&with(product(&[pp, qq], &mk(1)), &f));
    let stated = first + oracle(&with(product(std::slice::from_ref(&g), &mk(1)), &f));
    let corrected = first + oracle(&[f, g]);
    assert_eq!((lhs, stated, corrected), (3, 4, 3));
}

#[test]
fn product_formula_needs_a_power_of_the_maximal_ideal() {
    // J = ⟨x^2, y⟩, ψ = y, φ = x.
    let j = vec![p("x^2"), p("y")];
    let lhs = oracle(&product(&[p("y"), p("x")], &j));
    let rhs = oracle(&[p("y"), p("x")]) + oracle(&with(j.clone(), &p("y"))) + oracle(&j);
    assert_ne!(lhs, rhs);
    let mk2: QIdeal = Ideal::maximal_power(2);
    let lhs = colength(&Ideal::new([p("y"), p("x")]).product(&mk2)).finite().unwrap();
    assert_eq!(lhs, 1 + 2 + 3);
}

#[test]
fn foliation_invariants_against_oracle() {
    let fol = fol("4*x*y", "y-2*x^2");
    let curve = QCurve::reduced(p("y")).unwrap();
    let gens = vec![fol.p().clone(), fol.q().clone()];
    for k in 0..=4 {
        assert_eq!(foliation_milnor_k(&fol, k), Colength::Finite(oracle(&product(&gens, &mk(k)))));
        let tau = oracle(&with(product(&gens, &mk(k)), &p("y")));
        assert_eq!(foliation_tjurina_k(&fol, &curve, k).unwrap(), Colength::Finite(tau));
    }
}

#[test]
fn gsv_of_saddle_along_both_axes() {
    // f_x = y and f_y = x both divide f = xy; direction (1, 1) gives
    // g = x + y and h = x - 2y.
    let (fol, f) = (fol("-2*y", "x"), p("x*y"));
    let via_direction = oracle(&[f.clone(), p("x-2*y")]) as i64 - oracle(&[f.clone(), p("x+y")]) as i64;
    assert_eq!(via_direction, 0);
    assert_eq!(folinv::invariants::gsv_index(&fol, &QCurve::reduced(f).unwrap()).unwrap(), via_direction);
}

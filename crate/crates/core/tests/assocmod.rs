use proptest::prelude::*;
use qrpw_core::assocmod::{
    a_polynomial, chern_rec, e1_trace, element_latex, gamma_basis, projector, qpoly_latex,
    trace_check, ProjectorMatrix,
};
use qrpw_core::coeff::{rat, DensePoly};
use qrpw_core::grading::{self, express_in_coinvariants};
use qrpw_core::ncalg::{algebras, Element};
use qrpw_core::principal::{ConnectionForm, StrongConnection};
use qrpw_core::{APoly, QPoly, Rational, Sign};

fn at_q1(p: &APoly) -> DensePoly<Rational> {
    p.map(|c| c.eval_exact(&rat(1)))
}

#[test]
fn projectors_verify() {
    for l in 1..=3 {
        for n in -2..=2 {
            let e = projector(l, n).unwrap();
            let conn = StrongConnection::new(l);
            assert_eq!(e.size(), conn.omega(n).len());
            let r = e.verify();
            assert!(r.passed, "{}", r.render());
        }
    }
}

#[test]
fn trivial_bundle_is_one_by_one() {
    let e = projector(2, 0).unwrap();
    assert_eq!(e.size(), 1);
    assert!(e.entries[0][0].is_one());
    assert_eq!(chern_rec(2, 0), APoly::one());
}

#[test]
fn trace_equals_flipped_multiplication() {
    for (l, nmax) in [(1, 3), (2, 3), (3, 2)] {
        let conn = StrongConnection::new(l);
        for n in -nmax..=nmax {
            let e = projector(l, n).unwrap();
            assert_eq!(e.trace(), conn.omega(n).flipped_mu(), "l={l} n={n}");
        }
    }
}

#[test]
fn traces_follow_the_recursion() {
    for (l, nmax) in [(1, 3), (2, 3), (3, 2)] {
        for n in -nmax..=nmax {
            let r = trace_check(l, n).unwrap();
            assert!(r.passed, "{}", r.render());
        }
    }
}

#[test]
fn classical_limit_has_rank_one() {
    for l in 1..=4 {
        for n in -4..=4 {
            assert_eq!(at_q1(&chern_rec(l, n)), DensePoly::one(), "l={l} n={n}");
        }
    }
}

#[test]
fn first_trace_matches_hand_computation() {
    // l = 1: Tr E[1] = x x* + q^-2 y^2 z = 1 - a + q^-2 a
    let want = APoly::new(vec![QPoly::one(), &QPoly::q_pow(-2) - &QPoly::one()]);
    assert_eq!(chern_rec(1, 1), want);
    let e = projector(1, 1).unwrap();
    let tr = express_in_coinvariants(&e.trace(), &grading::phi()).unwrap();
    assert_eq!(a_polynomial(&tr).unwrap(), want);
}

#[test]
fn reference_e1_trace() {
    let tr = express_in_coinvariants(&projector(2, 1).unwrap().trace(), &grading::phi()).unwrap();
    assert_eq!(a_polynomial(&tr).unwrap(), e1_trace());
    assert_eq!(e1_trace(), chern_rec(2, 1));
    assert_eq!(projector(2, 1).unwrap().size(), 3);
}

#[test]
fn power_traces_are_constant() {
    let e = projector(2, 1).unwrap();
    let traces = e.power_traces(3);
    assert_eq!(traces.len(), 3);
    assert!(traces.iter().all(|t| *t == traces[0]));
}

#[test]
fn broken_pairs_fail_verification() {
    let e = projector(1, 1).unwrap();
    let mut left = e.left.clone();
    left[0] = left[0].scale(&QPoly::from(2i64));
    let bad = ProjectorMatrix::from_pairs(1, 1, left, e.right.clone());
    let r = bad.verify();
    assert!(!r.passed);
    assert_eq!(r.first_failure().unwrap().id, "idempotent");
}

#[test]
fn exports() {
    let e = projector(2, 1).unwrap();
    let j = e.to_json().unwrap();
    assert_eq!((j.l, j.n, j.size), (2, 1, 3));
    assert_eq!(j.entries.len(), 3);
    let tex = e.latex().unwrap();
    assert!(tex.starts_with("E[1] = \\begin{pmatrix}"));
    assert_eq!(tex.matches("\\\\").count(), 2);
    let rp = algebras::rp_minus(2);
    assert_eq!(element_latex(&Element::parse(&rp, "q^-2 c-* b*").unwrap()), "q^{-2} c_-^* b^*");
    assert_eq!(qpoly_latex(&(&QPoly::one() - &QPoly::q_pow(2))), "1 - q^{2}");
}

#[test]
fn gamma_modules() {
    for n in -2..=2 {
        let (basis, r) = gamma_basis(3, Sign::Pos, n, 3).unwrap();
        assert!(r.passed, "{}", r.render());
        assert!(!basis.is_empty());
        let (basis, r) = gamma_basis(2, Sign::Neg, n, 3).unwrap();
        assert!(r.passed, "{}", r.render());
        assert!(!basis.is_empty());
    }
    assert!(gamma_basis(2, Sign::Pos, 1, 3).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn rescaling_a_pair_keeps_the_class(l in 1u32..=2, n in -2i64..=2, lambda in -4i64..=4, pick in 0usize..8) {
        let e = projector(l, n).unwrap();
        let i = pick % e.size();
        let f = e.rescaled(i, lambda);
        let r = f.verify();
        prop_assert!(r.passed, "{}", r.render());
        prop_assert_eq!(f.trace(), e.trace());
    }

    #[test]
    fn recursion_keeps_constant_term_and_degree(l in 1u32..=4, n in -5i64..=5) {
        let c = chern_rec(l, n);
        prop_assert_eq!(c.coeff(0), QPoly::one());
        prop_assert!(c.degree().unwrap_or(0) <= (l as usize) * n.unsigned_abs() as usize);
    }
}

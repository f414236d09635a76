use num_traits::Zero;

use super::*;
use crate::diagrams::{enumerate_ordered, perturb, OrderedChordDiagram, PairPattern};
use crate::knots::{realize, v2_power_family, yasuhara_family};
use crate::linalg::rat;

fn knot(code: &str) -> SingularKnotDiagram {
    SingularKnotDiagram::parse(code).unwrap()
}

const TREFOIL: &str = "O1+ U2+ O3+ U1+ O2+ U3+";
const FIGURE_EIGHT: &str = "O1+ U2- O3- U1+ O4+ U3- O2- U4+";

#[test]
fn conway_of_small_knots() {
    assert_eq!(conway(&SingularKnotDiagram::unknot()).unwrap(), ConwayPolynomial::one());
    assert_eq!(conway(&knot("O1+ U1+")).unwrap(), ConwayPolynomial::one());
    assert_eq!(conway(&knot(TREFOIL)).unwrap(), ConwayPolynomial::from_ints(&[1, 0, 1]));
    assert_eq!(conway(&knot(TREFOIL).mirror()).unwrap(), ConwayPolynomial::from_ints(&[1, 0, 1]));
    assert_eq!(conway(&knot(FIGURE_EIGHT)).unwrap(), ConwayPolynomial::from_ints(&[1, 0, -1]));
    assert_eq!(conway(&knot(TREFOIL)).unwrap().to_string(), "1 + z^2");
    assert!(matches!(conway(&knot("X1a X1b")), Err(Error::SingularInput(1))));
}

#[test]
fn v2_engines_agree_on_small_knots() {
    assert_eq!(v2(&knot(TREFOIL)).unwrap(), 1.into());
    assert_eq!(v2(&knot(TREFOIL).mirror()).unwrap(), 1.into());
    assert_eq!(v2(&knot(FIGURE_EIGHT)).unwrap(), (-1).into());
    for r in 0..6 {
        assert_eq!(v2_arrow(&knot(TREFOIL).rotated(r)).unwrap(), 1);
    }
}

#[test]
fn spec_text_round_trip() {
    for s in ["c4", "v2", "v2^2", "const:3/2", "v2*c2"] {
        let spec: InvariantSpec = s.parse().unwrap();
        assert_eq!(spec.to_string(), s);
    }
    assert_eq!("v2*c2".parse::<InvariantSpec>().unwrap().order(), 4);
    assert_eq!("v2_power(3)".parse::<InvariantSpec>().unwrap(), InvariantSpec::V2Power(3));
    assert!("v3".parse::<InvariantSpec>().is_err());
}

#[test]
fn v2_weight_system_on_degree_two() {
    let crossed = OrderedChordDiagram::from_pairs(&[[0, 2], [1, 3]], &[1, 2]).unwrap();
    let parallel = OrderedChordDiagram::from_pairs(&[[0, 1], [2, 3]], &[1, 2]).unwrap();
    assert_eq!(weight_system(&InvariantSpec::V2, &crossed).unwrap(), rat(1));
    assert_eq!(weight_system(&InvariantSpec::V2, &parallel).unwrap(), rat(0));
    for d in enumerate_ordered(2, 6).unwrap() {
        let a = weight_system_with_rule(&InvariantSpec::V2, &d, OverRule::Descending).unwrap();
        let b = weight_system_with_rule(&InvariantSpec::V2, &d, OverRule::Ascending).unwrap();
        assert_eq!(a, b);
    }
    assert!(matches!(
        weight_system(&InvariantSpec::V2, &crossed.remove_chords(&[1])),
        Err(Error::OrderMismatch { .. })
    ));
}

#[test]
fn one_singular_trefoil_resolutions() {
    // a crossing of the trefoil made singular: + gives the trefoil back,
    // - gives the unknot
    let k = knot("X1a+ U2+ O3+ X1b+ O2+ U3+");
    let plus = conway(&k.resolve(1, 1).unwrap()).unwrap();
    let minus = conway(&k.resolve(1, -1).unwrap()).unwrap();
    let mut got = [plus, minus];
    got.sort();
    assert_eq!(got, [ConwayPolynomial::one(), ConwayPolynomial::from_ints(&[1, 0, 1])]);
    let x = vassiliev_eval(&InvariantSpec::V2, &k).unwrap();
    assert!(x == rat(1) || x == rat(-1));
}

#[test]
fn order_vanishing_and_cocycle_on_random_knots() {
    for seed in 0..10 {
        let k = crate::knots::random_singular_knot(seed, 3, 2);
        assert_eq!(k.singular_degree(), 3);
        assert!(vassiliev_eval(&InvariantSpec::V2, &k).unwrap().is_zero());
        assert!(cocycle_check(&InvariantSpec::V2, &k).unwrap().is_zero());
        let faces = face_values(&InvariantSpec::V2, &k).unwrap();
        assert!(faces.iter().all(|f| f.is_zero()));
    }
}

#[test]
fn mirror_sign_law() {
    let r = mirror_sign_check(&InvariantSpec::V2, &knot(TREFOIL)).unwrap();
    assert!(r.passed);
    assert_eq!(r.value, r.mirror_value);
    let one = knot("X1a+ U2+ O3+ X1b+ O2+ U3+");
    let r = mirror_sign_check(&InvariantSpec::V2, &one).unwrap();
    assert!(r.passed && r.chain_law);
    assert_eq!(r.expected_sign, -1);
    assert!(mirror_sign_check(&InvariantSpec::Constant(rat(1)), &one).is_err());
}

#[test]
fn cup_expansion_has_the_shuffle_signs() {
    let d = OrderedChordDiagram::from_pairs(&[[0, 4], [1, 5], [2, 6], [3, 7]], &[1, 2, 3, 4]).unwrap();
    let r = cup_eval(&InvariantSpec::V2, &InvariantSpec::V2, &realize(&d)).unwrap();
    let signs: Vec<i32> = r.terms.iter().map(|t| t.rho).collect();
    assert_eq!(signs, vec![1, -1, 1, 1, -1, 1]);
    let hs: Vec<Vec<usize>> = r.terms.iter().map(|t| t.h.clone()).collect();
    assert_eq!(hs, vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]);
    assert_eq!(r.terms[1].left, "x-x-");
    assert_eq!(r.terms[1].right, "+x+x");
}

#[test]
fn cup_with_constant_is_scaled_evaluation() {
    let k = realize(&OrderedChordDiagram::from_pairs(&[[0, 2], [1, 3]], &[1, 2]).unwrap());
    let c = InvariantSpec::Constant(rat(3));
    let r = cup_eval(&c, &InvariantSpec::V2, &k).unwrap();
    assert_eq!(r.terms.len(), 1);
    assert_eq!(r.value, "3");
    assert_eq!(dot_eval(&InvariantSpec::V2, &c, &k).unwrap().value, "3");
}

#[test]
fn wcup_in_low_degree() {
    let r = verify_wcup(&InvariantSpec::Conway(1), &InvariantSpec::Conway(1), 6).unwrap();
    assert!(r.passed, "{r:?}");
    let r = verify_wcup(&InvariantSpec::Constant(rat(2)), &InvariantSpec::V2, 6).unwrap();
    assert!(r.passed, "{r:?}");
}

#[test]
fn conway_weight_system_on_perturbations() {
    assert_eq!(conway_weight_system(&OrderedChordDiagram::empty()).unwrap(), rat(1));
    for n in 1..=2 {
        for d in enumerate_ordered(n, 6).unwrap() {
            let pattern = vec![PairPattern::Crossed; n];
            let dp = perturb(&d, &pattern).unwrap();
            assert_eq!(conway_weight_system(&dp).unwrap(), rat(1), "{d:?}");
            let k = yasuhara_family(&d, &pattern).unwrap();
            assert_eq!(k.chord_diagram_of(), dp);
            assert_eq!(vassiliev_eval(&InvariantSpec::Conway(2 * n), &k).unwrap(), rat(1));
        }
    }
}

#[test]
fn v2_power_certificates() {
    let caps = crate::config::Caps::default();
    for n in 1..=2 {
        let c = certify_nontrivial(&Family::V2Power { n }, &caps).unwrap();
        assert!(c.boundary_zero, "{c:#?}");
        assert!(c.certified, "{c:#?}");
    }
    assert!(matches!(certify_nontrivial(&Family::V2Power { n: 3 }, &caps), Err(Error::ResourceCap { .. })));
    let k = v2_power_family(1).unwrap();
    assert_eq!(vassiliev_eval(&InvariantSpec::V2, &k).unwrap(), rat(1));
}

#[test]
fn stratified_equality_refutes_trefoil_vs_unknot() {
    let e = stratified_equal(&knot(TREFOIL), &SingularKnotDiagram::unknot(), crate::knots::SearchLimits::default());
    assert!(matches!(e.unwrap(), Equality::Distinct { .. }));
    let e = stratified_equal(&knot("O1+ U1+"), &SingularKnotDiagram::unknot(), crate::knots::SearchLimits::default());
    assert_eq!(e.unwrap(), Equality::Equal { depth: 0 });
}

mod common;

use common::{closure_order, compose, Cayley};
use formgroups::catalog::full_corpus;
use formgroups::construct::{make_standard, StandardKind};
use formgroups::{Config, Error, Group, Permutation};
use proptest::prelude::*;

fn p(degree: usize, s: &str) -> Permutation {
    Permutation::parse_cycles(degree, s).unwrap()
}

fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

#[test]
fn group_orders_from_generators() {
    assert_eq!(Group::from_cycle_strings(3, &["(0 1 2)", "(0 1)"]).unwrap().order(), 6);
    assert_eq!(Group::from_cycle_strings(3, &[]).unwrap().order(), 1);
    let a4 = Group::from_cycle_strings(4, &["(0 1)(2 3)", "(0 2)(1 3)", "(1 2 3)"]).unwrap();
    assert_eq!(a4.order(), 12);
    let oracle = Cayley::generate(4, &[common::parse(4, "(0 1)(2 3)"), common::parse(4, "(0 2)(1 3)"), common::parse(4, "(1 2 3)")]);
    assert_eq!(oracle.order(), 12);
}

#[test]
fn membership() {
    let s3 = make_standard(StandardKind::Symmetric(3)).unwrap();
    assert!(s3.contains(&p(3, "(0 1 2)")).unwrap());
    let a4 = make_standard(StandardKind::Alternating(4)).unwrap();
    assert!(!a4.contains(&p(4, "(0 1)")).unwrap());
    // Cross-check against the exhaustive element list.
    let oracle = common::cayley_of(&a4);
    assert!(!oracle.index.contains_key(&vec![1, 0, 2, 3]));
    let trivial = Group::from_cycle_strings(2, &[]).unwrap();
    assert!(trivial.contains(&Permutation::identity(2)).unwrap());
    assert!(matches!(s3.contains(&Permutation::identity(4)), Err(Error::DegreeMismatch { .. })));
}

#[test]
fn cycle_notation_errors() {
    for bad in ["(0 1", "(0 0)", "(0 5)", "(a b)", "0 1)"] {
        assert!(matches!(Permutation::parse_cycles(4, bad), Err(Error::Parse { .. })), "{bad}");
    }
    assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    assert_eq!(p(4, " ( 0  1 ) ( 2 3 ) ").to_string(), "(0 1)(2 3)");
    assert_eq!(p(4, "").to_string(), "()");
}

#[test]
fn degree_cap_is_a_resource_error() {
    let config = Config { max_degree: 8, ..Config::default() };
    let err = Group::with_config(9, &[p(9, "(0 8)")], config).unwrap_err();
    assert!(err.is_resource());
}

#[test]
fn order_cap_is_a_resource_error() {
    let config = Config { max_order: 100, ..Config::default() };
    let err = Group::with_config(6, &[p(6, "(0 1 2 3 4 5)"), p(6, "(0 1)")], config).unwrap_err();
    assert!(err.is_resource());
}

/// Membership-structure orders against exhaustive closure for every corpus
/// group of order at most 5000.
#[test]
fn corpus_orders_match_closure() {
    for e in full_corpus().unwrap() {
        let gens: Vec<Vec<u32>> = e.group.generators().iter().map(|g| g.images().to_vec()).collect();
        assert_eq!(e.group.order(), closure_order(e.group.degree(), &gens) as u64, "{}", e.name);
    }
}

#[test]
fn standard_orders_match_closure() {
    let kinds = [
        StandardKind::Cyclic(12),
        StandardKind::ElementaryAbelian { p: 2, n: 4 },
        StandardKind::Dihedral(7),
        StandardKind::Symmetric(5),
        StandardKind::Symmetric(6),
        StandardKind::Alternating(6),
        StandardKind::Quaternion8,
    ];
    for k in kinds {
        let g = make_standard(k).unwrap();
        assert_eq!(g.order(), g.closure_order(), "{k:?}");
    }
}

proptest! {
    #[test]
    fn product_is_associative(a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn product_applies_left_first(a in arb_perm(6), b in arb_perm(6)) {
        prop_assert_eq!((&a * &b).images().to_vec(), compose(a.images(), b.images()));
    }

    #[test]
    fn inverse_and_order(a in arb_perm(8)) {
        prop_assert!((&a * &a.inverse()).is_identity());
        prop_assert!(a.pow(a.order()).is_identity());
        for k in 1..a.order() {
            prop_assert!(!a.pow(k).is_identity());
        }
    }

    #[test]
    fn cycle_string_round_trip(a in arb_perm(9)) {
        let text = a.to_string();
        prop_assert_eq!(Permutation::parse_cycles(9, &text).unwrap(), a);
    }

    #[test]
    fn conjugation_is_an_automorphism(a in arb_perm(6), b in arb_perm(6), g in arb_perm(6)) {
        let ab = (&a * &b).conjugate_by(&g);
        prop_assert_eq!(ab, &a.conjugate_by(&g) * &b.conjugate_by(&g));
        prop_assert_eq!(a.conjugate_by(&g), &(&g.inverse() * &a) * &g);
    }

    /// Random generating sets of S_7 subgroups: Schreier–Sims order equals
    /// the exhaustive closure, and every sampled product is a member.
    #[test]
    fn random_subgroup_orders(gens in prop::collection::vec(arb_perm(7), 1..3), seed in any::<u64>()) {
        let g = Group::with_config(7, &gens, Config::default().with_seed(seed)).unwrap();
        let raw: Vec<Vec<u32>> = gens.iter().map(|x| x.images().to_vec()).collect();
        prop_assert_eq!(g.order(), closure_order(7, &raw) as u64);
        let prod = gens.iter().fold(Permutation::identity(7), |acc, x| &acc * x);
        prop_assert!(g.contains(&prod).unwrap());
    }
}

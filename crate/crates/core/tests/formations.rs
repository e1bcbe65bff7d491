mod common;

use std::collections::BTreeSet;

use common::{cayley_of, set_of};
use formgroups::catalog::{full_corpus, small_groups, CatalogEntry};
use formgroups::construct::{cyclic, make_standard, StandardKind};
use formgroups::formations::*;
use formgroups::lattice::{normal_subgroups, subgroup_class_representatives};
use formgroups::{Error, Formation, FormationFlags, Group};
use proptest::prelude::*;

fn s3() -> Group {
    make_standard(StandardKind::Symmetric(3)).unwrap()
}

fn corpus_le(order: u64) -> Vec<CatalogEntry> {
    full_corpus().unwrap().into_iter().filter(|e| e.group.order() <= order).collect()
}

#[test]
fn membership_examples() {
    assert!(belongs(&Formation::nilpotent_by_abelian(), &s3()).unwrap());
    assert!(!belongs(&Formation::nilpotent(), &s3()).unwrap());
    assert!(!belongs(&Formation::supersoluble(), &make_standard(StandardKind::Alternating(4)).unwrap()).unwrap());
    assert!(belongs(&Formation::supersoluble(), &make_standard(StandardKind::Symmetric(3)).unwrap()).unwrap());
    assert!(!belongs(&Formation::soluble(), &make_standard(StandardKind::Alternating(5)).unwrap()).unwrap());
}

#[test]
fn residual_examples() {
    let g = s3();
    let r = residual(&Formation::nilpotent(), &g).unwrap();
    assert_eq!(r, g.subgroup_from_cycles(&["(0 1 2)"]).unwrap());
    assert!(residual(&Formation::nilpotent_by_abelian(), &g).unwrap().is_trivial());
    let a5 = make_standard(StandardKind::Alternating(5)).unwrap();
    assert_eq!(residual(&Formation::soluble(), &a5).unwrap().order(), 60);
}

#[test]
fn product_formation() {
    let na = Formation::by_name("N*A").unwrap();
    assert_eq!(na.name(), "N*A");
    assert!(belongs(&na, &s3()).unwrap());
    assert!(!na.flags().saturated);
    for e in small_groups().unwrap() {
        let a = residual(&na, &e.group).unwrap();
        let b = residual(&Formation::nilpotent_by_abelian(), &e.group).unwrap();
        assert_eq!(a, b, "{}", e.name);
    }
    // Any group in F lies in XF.
    let abelian_by_nilpotent = Formation::by_name("A*N").unwrap();
    assert!(belongs(&abelian_by_nilpotent, &cyclic(12).unwrap()).unwrap());
}

#[test]
fn product_needs_subgroup_closed_factors() {
    let flags = FormationFlags { subgroup_closed: false, saturated: false, superradical: false, contains_nilpotent: false };
    let odd = Formation::custom("odd-order", flags, |g| g.order() % 2 == 1);
    assert!(matches!(Formation::product(&odd, &Formation::nilpotent()), Err(Error::InvalidFormation(_))));
    assert!(matches!(Formation::by_name("Q"), Err(Error::InvalidFormation(_))));
}

#[test]
fn custom_formation_matches_builtin() {
    let flags = Formation::abelian().flags();
    let custom = Formation::custom("abelian-by-predicate", flags, |g| g.is_abelian());
    for e in small_groups().unwrap() {
        assert_eq!(belongs(&custom, &e.group).unwrap(), belongs(&Formation::abelian(), &e.group).unwrap());
        assert_eq!(
            residual(&custom, &e.group).unwrap(),
            residual(&Formation::abelian(), &e.group).unwrap(),
            "{}",
            e.name
        );
    }
}

#[test]
fn characteristic_primes() {
    let primes_20: BTreeSet<u64> = [2, 3, 5, 7, 11, 13, 17, 19].into();
    assert_eq!(formation_pi(&Formation::nilpotent(), 20), primes_20);
    assert_eq!(formation_pi(&Formation::abelian(), 10), [2, 3, 5, 7].into());
    for f in [Formation::supersoluble(), Formation::nilpotent_by_abelian(), Formation::soluble()] {
        assert!(f.flags().contains_nilpotent);
        assert_eq!(formation_pi(&f, 20), primes_20);
    }
    assert_eq!(pi_of_group(&s3()), [2, 3].into());
    assert!(pi_of_group(&cyclic(1).unwrap()).is_empty());
}

/// Residuals against commutator calculus (A, N, NA) and the prime-step
/// normal-series search (U), for every corpus group of order at most 100.
#[test]
fn residuals_match_oracle() {
    for e in corpus_le(100) {
        let oracle = cayley_of(&e.group);
        let all = oracle.all();
        let pool = oracle.all_subgroups();
        for (name, f) in [
            ("A", Formation::abelian()),
            ("N", Formation::nilpotent()),
            ("NA", Formation::nilpotent_by_abelian()),
            ("U", Formation::supersoluble()),
        ] {
            let expected = oracle.residual(name, &all, Some(&pool));
            let got = set_of(&oracle, &residual(&f, &e.group).unwrap());
            assert_eq!(got, expected, "{name} residual of {}", e.name);
            assert_eq!(belongs(&f, &e.group).unwrap(), expected.len() == 1, "{name} membership of {}", e.name);
        }
    }
}

#[test]
fn subgroup_residuals_match_oracle() {
    for e in small_groups().unwrap() {
        let oracle = cayley_of(&e.group);
        let pool = oracle.all_subgroups();
        for h in subgroup_class_representatives(&e.group.whole().unwrap()).unwrap() {
            let hs = set_of(&oracle, &h);
            for (name, f) in [("N", Formation::nilpotent()), ("U", Formation::supersoluble()), ("NA", Formation::nilpotent_by_abelian())] {
                let expected = oracle.residual(name, &hs, Some(&pool));
                assert_eq!(set_of(&oracle, &residual_of(&f, &h)), expected, "{name} of order {} in {}", h.order(), e.name);
                assert_eq!(belongs_subgroup(&f, &h), expected.len() == 1);
            }
        }
    }
}

#[test]
fn quotient_membership_matches_residual() {
    for e in small_groups().unwrap() {
        let w = e.group.whole().unwrap();
        for f in [Formation::nilpotent(), Formation::supersoluble(), Formation::abelian()] {
            let r = residual(&f, &e.group).unwrap();
            for n in normal_subgroups(&w).unwrap() {
                assert_eq!(quotient_belongs(&f, &w, &n).unwrap(), r.is_subgroup_of(&n), "{} / {}", e.name, n.order());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The residual is normal, its quotient lies in the formation, and it
    /// lies below every normal subgroup with quotient in the formation.
    #[test]
    fn residual_is_the_least_normal_subgroup(index in 0usize..74, which in 0usize..5) {
        let e = &small_groups().unwrap()[index];
        let f = [Formation::abelian(), Formation::nilpotent(), Formation::supersoluble(), Formation::nilpotent_by_abelian(), Formation::soluble()][which].clone();
        let w = e.group.whole().unwrap();
        let r = residual(&f, &e.group).unwrap();
        prop_assert!(w.is_normal_subgroup(&r));
        prop_assert!(quotient_belongs(&f, &w, &r).unwrap());
        for n in normal_subgroups(&w).unwrap() {
            if quotient_belongs(&f, &w, &n).unwrap() {
                prop_assert!(r.is_subgroup_of(&n));
            }
        }
    }
}

mod common;

use common::{cayley_of, set_of};
use formgroups::catalog::{full_corpus, CatalogEntry};
use formgroups::classify::*;
use formgroups::construct::{make_standard, StandardKind};
use formgroups::lattice::{subgroup_class_representatives, subgroups_of};
use formgroups::{Formation, Group, Subgroup};

fn corpus() -> Vec<CatalogEntry> {
    full_corpus().unwrap()
}

fn group(id: &str) -> Group {
    corpus().into_iter().find(|e| e.id == id).unwrap_or_else(|| panic!("no corpus group {id}")).group
}

fn formations() -> [(&'static str, Formation); 3] {
    [("N", Formation::nilpotent()), ("NA", Formation::nilpotent_by_abelian()), ("U", Formation::supersoluble())]
}

/// Every subgroup of groups up to order 24, class representatives up to 48.
fn subjects(e: &CatalogEntry) -> Vec<Subgroup> {
    let whole = e.group.whole().unwrap();
    if e.group.order() <= 24 {
        subgroups_of(&whole).unwrap()
    } else {
        subgroup_class_representatives(&whole).unwrap()
    }
}

#[test]
fn subnormal_examples() {
    let s3 = make_standard(StandardKind::Symmetric(3)).unwrap();
    let n = Formation::nilpotent();
    let a3 = s3.subgroup_from_cycles(&["(0 1 2)"]).unwrap();
    let (sn, witness) = is_f_subnormal(&n, &s3, &a3).unwrap();
    assert!(sn);
    let w = witness.unwrap();
    assert_eq!(w.orders(), vec![3, 6]);
    assert!(w.is_valid_for(&n).unwrap());

    let c2 = s3.subgroup_from_cycles(&["(0 1)"]).unwrap();
    assert!(!is_f_subnormal(&n, &s3, &c2).unwrap().0);
    assert!(is_f_abnormal(&n, &s3, &c2).unwrap());
    assert!(is_self_normalizing(&s3, &c2).unwrap());
    // Everything is NA-subnormal in a group of NA.
    assert!(is_f_subnormal(&Formation::nilpotent_by_abelian(), &s3, &c2).unwrap().0);
    // The whole group is F-subnormal with a one-link chain.
    let whole = s3.whole().unwrap();
    assert_eq!(is_f_subnormal(&n, &s3, &whole).unwrap().1.unwrap().orders(), vec![6]);
}

#[test]
fn carter_examples() {
    let s3 = make_standard(StandardKind::Symmetric(3)).unwrap();
    let c = carter_subgroups(&s3).unwrap();
    assert_eq!(c.len(), 1);
    assert_eq!(c[0].order(), 2);

    let c = carter_subgroups(&group("o024_sl_2_3")).unwrap();
    assert_eq!(c.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![6]);

    for id in ["o008_d8", "o016_c4xc4", "o027_heis3"] {
        let g = group(id);
        let c = carter_subgroups(&g).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c[0].is_whole());
    }
    assert_eq!(carter_subgroups(&group("o024_s4")).unwrap().iter().map(Subgroup::order).collect::<Vec<_>>(), vec![8]);
}

#[test]
fn projector_examples() {
    let s3 = make_standard(StandardKind::Symmetric(3)).unwrap();
    let c2 = s3.subgroup_from_cycles(&["(0 1)"]).unwrap();
    let a3 = s3.subgroup_from_cycles(&["(0 1 2)"]).unwrap();
    assert!(is_f_projector(&Formation::nilpotent(), &s3, &c2).unwrap());
    assert!(!is_f_projector(&Formation::nilpotent(), &s3, &a3).unwrap());
    assert!(is_f_projector(&Formation::supersoluble(), &s3, &s3.whole().unwrap()).unwrap());
    // A4 is not supersoluble; its U-projectors are the four subgroups of order 3.
    let a4 = make_standard(StandardKind::Alternating(4)).unwrap();
    let orders: Vec<u64> = subgroups_of(&a4.whole().unwrap())
        .unwrap()
        .into_iter()
        .filter(|h| is_f_projector(&Formation::supersoluble(), &a4, h).unwrap())
        .map(|h| h.order())
        .collect();
    assert_eq!(orders, vec![3; 4]);
}

#[test]
fn minimal_non_f_examples() {
    assert!(is_schmidt_group(&make_standard(StandardKind::Symmetric(3)).unwrap()).unwrap());
    assert!(is_schmidt_group(&make_standard(StandardKind::Alternating(4)).unwrap()).unwrap());
    assert!(!is_schmidt_group(&make_standard(StandardKind::Symmetric(4)).unwrap()).unwrap());
    assert!(is_schmidt_group(&group("o021_c7_c3")).unwrap());
    assert!(is_schmidt_group(&group("o024_sl_2_3")).unwrap());
    assert!(is_minimal_non_f(&Formation::abelian(), &make_standard(StandardKind::Quaternion8).unwrap()).unwrap());
    assert!(!is_minimal_non_f(&Formation::abelian(), &make_standard(StandardKind::Cyclic(8)).unwrap()).unwrap());
    assert!(is_minimal_non_f(&Formation::supersoluble(), &make_standard(StandardKind::Alternating(4)).unwrap()).unwrap());
}

/// Schmidt groups found by the library against a brute-force count:
/// non-nilpotent with every proper subgroup nilpotent.
#[test]
fn schmidt_groups_match_oracle() {
    for e in corpus().into_iter().filter(|e| e.group.order() <= 48) {
        let c = cayley_of(&e.group);
        let all = c.all();
        let pool = c.all_subgroups();
        let nilpotent = |h: &Vec<usize>| c.nilpotent_residual(h).len() == 1;
        let expected = !nilpotent(&all) && pool.iter().filter(|h| h.len() < all.len()).all(nilpotent);
        assert_eq!(is_schmidt_group(&e.group).unwrap(), expected, "{}", e.name);
    }
}

#[test]
fn subnormality_matches_chain_oracle() {
    for e in corpus().into_iter().filter(|e| e.group.order() <= 48) {
        let c = cayley_of(&e.group);
        let all = c.all();
        let pool = c.all_subgroups();
        let whole = e.group.whole().unwrap();
        for h in subjects(&e) {
            let hs = set_of(&c, &h);
            for (name, f) in formations() {
                let expected = c.f_subnormal(name, &all, &hs, Some(&pool));
                let (got, witness) = is_f_subnormal(&f, &e.group, &h).unwrap();
                assert_eq!(got, expected, "{name}-subnormality of order {} in {}", h.order(), e.name);
                if let Some(w) = witness {
                    assert!(w.is_valid_for(&f).unwrap());
                    assert_eq!(w.links.first(), Some(&h));
                    assert!(w.links.last().unwrap().is_whole());
                }
                assert_eq!(got, f_subnormal_by_chains(&f, &whole, &h, 1 << 20).unwrap());
            }
        }
    }
}

#[test]
fn abnormality_matches_oracle() {
    for e in corpus().into_iter().filter(|e| e.group.order() <= 48) {
        let c = cayley_of(&e.group);
        let all = c.all();
        let pool = c.all_subgroups();
        for h in subjects(&e) {
            let hs = set_of(&c, &h);
            let normalizer = c.normalizer(&all, &hs);
            assert_eq!(is_self_normalizing(&e.group, &h).unwrap(), normalizer == hs);
            for (name, f) in formations() {
                let expected = c.f_abnormal(name, &all, &hs, Some(&pool));
                let got = is_f_abnormal(&f, &e.group, &h).unwrap();
                assert_eq!(got, expected, "{name}-abnormality of order {} in {}", h.order(), e.name);
                // For formations containing every nilpotent group an
                // F-abnormal subgroup is self-normalizing.
                if got && !h.is_whole() {
                    assert_eq!(normalizer, hs, "{name}-abnormal but not self-normalizing in {}", e.name);
                }
            }
        }
    }
}

/// Conjugate subgroups get the same classification.
#[test]
fn classification_is_conjugation_invariant() {
    for e in corpus().into_iter().filter(|e| (12..=48).contains(&e.group.order())) {
        let whole = e.group.whole().unwrap();
        for h in subgroup_class_representatives(&whole).unwrap() {
            let conjugates = whole.conjugates(&h).unwrap();
            for (_, f) in formations() {
                let sn = is_f_subnormal(&f, &e.group, &h).unwrap().0;
                let ab = is_f_abnormal(&f, &e.group, &h).unwrap();
                for k in &conjugates {
                    assert_eq!(is_f_subnormal(&f, &e.group, k).unwrap().0, sn);
                    assert_eq!(is_f_abnormal(&f, &e.group, k).unwrap(), ab);
                }
            }
        }
    }
}

/// `_in` forms agree with building the ambient subgroup as its own group.
#[test]
fn relative_predicates_match_standalone_groups() {
    let g = group("o048_gl_2_3");
    let whole = g.whole().unwrap();
    for ambient in subgroup_class_representatives(&whole).unwrap().into_iter().filter(|a| a.order() >= 6) {
        let standalone = Group::from_generators(g.degree(), &ambient.generators()).unwrap();
        let inside = subgroups_of(&ambient).unwrap();
        for h in &inside {
            let h2 = standalone.subgroup(&h.generators()).unwrap();
            for (_, f) in formations() {
                assert_eq!(f_subnormal_in(&f, &ambient, h).unwrap(), is_f_subnormal(&f, &standalone, &h2).unwrap().0);
                assert_eq!(f_abnormal_in(&f, &ambient, h).unwrap(), is_f_abnormal(&f, &standalone, &h2).unwrap());
            }
            assert_eq!(self_normalizing_in(&ambient, h).unwrap(), is_self_normalizing(&standalone, &h2).unwrap());
        }
    }
}

#[test]
fn classify_report_rows() {
    let s3 = make_standard(StandardKind::Symmetric(3)).unwrap();
    let rows = classify_subgroups(&Formation::nilpotent(), &s3).unwrap();
    let orders: Vec<u64> = rows.iter().map(|r| r.subgroup.order()).collect();
    assert_eq!(orders, vec![1, 2, 3, 6]);
    let c2 = &rows[1];
    assert!(!c2.f_subnormal && c2.f_abnormal && c2.self_normalizing && c2.witness.is_none());
    let a3 = rows[2].row();
    assert_eq!(a3.chain_orders, Some(vec![3, 6]));
    assert!(!a3.f_abnormal);
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    fn pick(index: usize, sub: usize) -> (Group, Subgroup) {
        let groups: Vec<Group> = corpus().into_iter().filter(|e| e.group.order() <= 100).map(|e| e.group).collect();
        let g = groups[index % groups.len()].clone();
        let subs = subgroups_of(&g.whole().unwrap()).unwrap();
        let h = subs[sub % subs.len()].clone();
        (g, h)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        /// No proper subgroup is both F-subnormal and F-abnormal.
        #[test]
        fn subnormal_and_abnormal_are_alternative(index in 0usize..1000, sub in 0usize..10_000) {
            let (g, h) = pick(index, sub);
            prop_assume!(!h.is_whole());
            for (_, f) in formations() {
                let sn = is_f_subnormal(&f, &g, &h).unwrap().0;
                let ab = is_f_abnormal(&f, &g, &h).unwrap();
                prop_assert!(!(sn && ab));
            }
        }

        /// N is contained in NA: N-subnormal implies NA-subnormal and
        /// NA-abnormal implies N-abnormal. Same for N in U.
        #[test]
        fn monotone_in_the_formation(index in 0usize..1000, sub in 0usize..10_000) {
            let (g, h) = pick(index, sub);
            let n = Formation::nilpotent();
            for bigger in [Formation::nilpotent_by_abelian(), Formation::supersoluble()] {
                if is_f_subnormal(&n, &g, &h).unwrap().0 {
                    prop_assert!(is_f_subnormal(&bigger, &g, &h).unwrap().0);
                }
                if is_f_abnormal(&bigger, &g, &h).unwrap() {
                    prop_assert!(is_f_abnormal(&n, &g, &h).unwrap());
                }
            }
        }

        /// Classification is unchanged by conjugating with a random element.
        #[test]
        fn invariant_under_random_conjugation(index in 0usize..1000, sub in 0usize..10_000, el in 0usize..10_000) {
            let (g, h) = pick(index, sub);
            let elems = g.elements().unwrap();
            let x = &elems[el % elems.len()];
            let k = h.conjugate(x).unwrap();
            for (_, f) in formations() {
                prop_assert_eq!(is_f_subnormal(&f, &g, &h).unwrap().0, is_f_subnormal(&f, &g, &k).unwrap().0);
                prop_assert_eq!(is_f_abnormal(&f, &g, &h).unwrap(), is_f_abnormal(&f, &g, &k).unwrap());
            }
            prop_assert_eq!(is_self_normalizing(&g, &h).unwrap(), is_self_normalizing(&g, &k).unwrap());
        }
    }
}

mod common;

use std::path::PathBuf;
use std::process::Command;

use formgroups::catalog::{family_groups, full_corpus, small_groups};
use formgroups::classify::is_schmidt_group;
use formgroups::construct::*;
use formgroups::io::{corpus_files, parse_group_file, parse_spec, render_spec, GroupSpecFile};
use formgroups::iso::{are_isomorphic, find_isomorphism, invariants};
use formgroups::{Error, Group};

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_formgroups"))
}

fn c7_c3(exponent: u64) -> Result<Group, Error> {
    let n = cyclic(7)?;
    let h = cyclic(3)?;
    let a = n.generators()[0].clone();
    semidirect_product(&n, &h, &ActionSpec { images: vec![vec![a.pow(exponent)]] })
}

#[test]
fn semidirect_products() {
    let g = c7_c3(2).unwrap();
    assert_eq!(g.order(), 21);
    assert!(is_schmidt_group(&g).unwrap());
    assert_eq!(g.derived_subgroup().unwrap().order(), 7);
    // 3 has order 6 mod 7, so x -> x^3 does not give an action of C3.
    assert!(matches!(c7_c3(3), Err(Error::InvalidAction(_))));
    // Not an automorphism.
    assert!(matches!(c7_c3(7), Err(Error::InvalidAction(_))));
    let n = cyclic(7).unwrap();
    let h = cyclic(3).unwrap();
    assert!(matches!(semidirect_product(&n, &h, &ActionSpec { images: vec![] }), Err(Error::InvalidAction(_))));
}

#[test]
fn standard_constructions() {
    let s3 = make_standard(StandardKind::Symmetric(3)).unwrap();
    let a4 = make_standard(StandardKind::Alternating(4)).unwrap();
    let g = direct_product_all(&[s3.clone(), s3, a4]).unwrap();
    assert_eq!(g.order(), 432);
    assert_eq!(make_standard(StandardKind::ElementaryAbelian { p: 3, n: 3 }).unwrap().order(), 27);
    assert!(make_standard(StandardKind::ElementaryAbelian { p: 4, n: 2 }).is_err());
    assert_eq!(dihedral(5).unwrap().order(), 10);
    assert_eq!(dicyclic(3).unwrap().order(), 12);
    assert_eq!(abelian(&[2, 4, 3]).unwrap().order(), 24);

    let sl23 = full_corpus().unwrap().into_iter().find(|e| e.id == "o024_sl_2_3").unwrap().group;
    assert_eq!(sl23.element_order_census().unwrap(), vec![(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)]);
    let q8 = make_standard(StandardKind::Quaternion8).unwrap();
    assert_eq!(q8.element_order_census().unwrap(), vec![(1, 1), (2, 1), (4, 6)]);
}

/// Number of isomorphism types per order 1..=24.
#[test]
fn small_catalog_covers_every_type() {
    let expected = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15];
    let groups = small_groups().unwrap();
    for (i, &count) in expected.iter().enumerate() {
        let n = (i + 1) as u64;
        assert_eq!(groups.iter().filter(|e| e.group.order() == n).count(), count, "order {n}");
    }
    assert_eq!(groups.len(), expected.iter().sum::<usize>());
}

/// Same order and same invariants would be needed for a duplicate; any
/// collision is resolved by an explicit isomorphism search.
#[test]
fn corpus_groups_are_pairwise_non_isomorphic() {
    let groups = full_corpus().unwrap();
    let inv: Vec<_> = groups.iter().map(|e| invariants(&e.group).unwrap()).collect();
    for i in 0..groups.len() {
        for j in i + 1..groups.len() {
            if inv[i] == inv[j] {
                assert!(
                    !are_isomorphic(&groups[i].group, &groups[j].group).unwrap(),
                    "{} and {} are isomorphic",
                    groups[i].name,
                    groups[j].name
                );
            }
        }
    }
}

#[test]
fn isomorphism_search_finds_maps() {
    let a = make_standard(StandardKind::Symmetric(3)).unwrap();
    let b = dihedral(3).unwrap();
    let map = find_isomorphism(&a, &b).unwrap().unwrap();
    assert!(!map.is_empty());
    assert!(are_isomorphic(&dicyclic(2).unwrap(), &make_standard(StandardKind::Quaternion8).unwrap()).unwrap());
    assert!(!are_isomorphic(&dihedral(4).unwrap(), &dicyclic(2).unwrap()).unwrap());
}

#[test]
fn family_orders_and_solubility() {
    let fam = family_groups().unwrap();
    assert!(fam.iter().all(|e| (25..=200).contains(&e.group.order())));
    let insoluble: Vec<&str> = fam.iter().filter(|e| !e.soluble()).map(|e| e.id.as_str()).collect();
    assert_eq!(insoluble, vec!["o060_a5", "o120_s5", "o120_a5xc2"]);
}

#[test]
fn shipped_files_round_trip() {
    let mut count = 0;
    for sub in ["soluble_le_24", "family_le_200"] {
        for path in corpus_files(&corpus_dir().join(sub)).unwrap() {
            let text = std::fs::read_to_string(&path).unwrap();
            let (spec, g) = parse_group_file(&path).unwrap();
            assert_eq!(render_spec(&spec), text, "{}", path.display());
            assert_eq!(Some(g.order()), spec.expected_order);
            assert_eq!(common::closure_order(spec.degree, &g.generators().iter().map(|p| p.images().to_vec()).collect::<Vec<_>>()) as u64, g.order());
            count += 1;
        }
    }
    assert_eq!(count, full_corpus().unwrap().len());
}

#[test]
fn file_errors() {
    let bad = "{\n  \"name\": \"x\",\n  \"degree\": 3,\n  \"generators\": [\"(0 1)\", \"(0 1\"]\n}\n";
    match parse_spec(bad) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 4),
        other => panic!("expected a parse error, got {other:?}"),
    }
    assert!(matches!(parse_spec("{\"name\": \"x\", \"degree\": 3, \"generators\": [], \"extra\": 1}"), Err(Error::Parse { .. })));
    let spec = GroupSpecFile {
        name: "S3".into(),
        degree: 3,
        generators: vec!["(0 1 2)".into(), "(0 1)".into()],
        expected_order: Some(5),
        tags: vec![],
    };
    assert_eq!(spec.build().err(), Some(Error::OrderMismatch { expected: 5, actual: 6 }));
}

#[test]
fn cli_sweeps() {
    let out = bin()
        .args(["verify-theorem", "--formation", "N", "--corpus"])
        .arg(corpus_dir().join("soluble_le_24"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["entries"].as_array().unwrap().len(), 74);
    assert_eq!(report["totals"]["by_status"]["COUNTEREXAMPLE"], 0);

    let out = bin()
        .args(["verify-theorem", "--formation", "U", "--format", "table", "--jobs", "2", "--corpus"])
        .arg(corpus_dir().join("soluble_le_24"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains(" SKIPPED_FLAGS=74 ") && text.contains("COUNTEREXAMPLE=0 "), "{text}");

    // NA finds counterexamples in the built-in corpus and says so in the exit code.
    let out = bin().args(["verify-corollary", "--formation", "NA", "--order-max", "24"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cli_analyze_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = dir.path().join("s3.json");
    std::fs::write(&s3, "{\"name\": \"S3\", \"degree\": 3, \"generators\": [\"(0 1 2)\", \"(0 1)\"]}").unwrap();
    let report_path = dir.path().join("report.json");
    let out = bin().arg("analyze").arg(&s3).arg("--out").arg(&report_path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    let rows = report["subgroups"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[2]["order"], 3);
    assert_eq!(rows[2]["f_subnormal"], true);
    assert_eq!(rows[1]["f_abnormal"], true);

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"name\": \"x\", \"degree\": 3, \"generators\": [\"(0 1\"]}").unwrap();
    let out = bin().arg("analyze").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));

    let big = dir.path().join("big.json");
    std::fs::write(&big, "{\"name\": \"x\", \"degree\": 500, \"generators\": [\"(0 499)\"]}").unwrap();
    let out = bin().arg("analyze").arg(&big).output().unwrap();
    assert_eq!(out.status.code(), Some(3));

    let out = bin().args(["verify-theorem", "--formation", "Q"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cli_export_matches_shipped_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin().arg("export-corpus").arg(dir.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    for sub in ["soluble_le_24", "family_le_200"] {
        let exported = corpus_files(&dir.path().join(sub)).unwrap();
        let shipped = corpus_files(&corpus_dir().join(sub)).unwrap();
        assert_eq!(exported.len(), shipped.len());
        for (a, b) in exported.iter().zip(&shipped) {
            assert_eq!(a.file_name(), b.file_name());
            assert_eq!(std::fs::read_to_string(a).unwrap(), std::fs::read_to_string(b).unwrap());
        }
    }
}

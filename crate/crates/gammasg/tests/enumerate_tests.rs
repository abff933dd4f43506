//! Corpus construction: exhaustive censuses, seeded sampling, structured
//! families, canonicalization, and manifest materialization.

mod common;

use common::*;
use gammasg::enumerate::{
    build_corpus, canonical_form, default_conformance_manifest, enumerate_exhaustive,
    from_semigroup, iso_reduce, random_instance, structured_families, CorpusManifest, CorpusSpec,
    Strategy, CELL_CAP, MAX_TRIES_DEFAULT,
};
use gammasg::{Error, GammaSemigroup};

fn exhaustive_count(n: usize, m: usize) -> usize {
    enumerate_exhaustive(n, m).unwrap().len()
}

#[test]
fn exhaustive_censuses_are_frozen() {
    assert_eq!(exhaustive_count(1, 1), 1);
    assert_eq!(exhaustive_count(2, 1), 8);
    assert_eq!(exhaustive_count(2, 2), 14);
    assert_eq!(exhaustive_count(2, 3), 26);
    assert_eq!(exhaustive_count(3, 1), 113);
}

#[test]
fn iso_reduced_censuses_match_known_counts() {
    // Orders 2 and 3 semigroup counts up to isomorphism are 5 and 24.
    let two = iso_reduce(&enumerate_exhaustive(2, 1).unwrap()).unwrap();
    assert_eq!(two.len(), 5);
    let three = iso_reduce(&enumerate_exhaustive(3, 1).unwrap()).unwrap();
    assert_eq!(three.len(), 24);
    let two_two = iso_reduce(&enumerate_exhaustive(2, 2).unwrap()).unwrap();
    assert_eq!(two_two.len(), 7);
}

#[test]
fn exhaustive_output_is_sorted_unique_and_associative() {
    let all = enumerate_exhaustive(2, 2).unwrap();
    for pair in all.windows(2) {
        assert!(pair[0].table() < pair[1].table(), "lexicographic order");
    }
    for s in &all {
        for a in 0..s.n() {
            for g1 in 0..s.m() {
                for b in 0..s.n() {
                    for g2 in 0..s.m() {
                        for c in 0..s.n() {
                            assert_eq!(
                                s.triple_product(s.triple_product(a, g1, b), g2, c),
                                s.triple_product(a, g1, s.triple_product(b, g2, c))
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn exhaustive_shape_errors() {
    assert!(matches!(
        enumerate_exhaustive(4, 1),
        Err(Error::TooLarge { cells: 16, cap: 12 })
    ));
    assert!(matches!(
        enumerate_exhaustive(0, 1),
        Err(Error::BadShape { .. })
    ));
    assert_eq!(CELL_CAP, 12);
}

#[test]
fn random_sampling_is_deterministic_and_validated() {
    let a = random_instance(3, 1, 42, MAX_TRIES_DEFAULT).unwrap();
    let b = random_instance(3, 1, 42, MAX_TRIES_DEFAULT).unwrap();
    assert_eq!(a, b);
    assert_eq!((a.n(), a.m()), (3, 1));
    let c = random_instance(3, 1, 43, MAX_TRIES_DEFAULT).unwrap();
    assert_eq!((c.n(), c.m()), (3, 1));

    assert!(matches!(
        random_instance(2, 1, 42, 0),
        Err(Error::ExhaustedTries { tries: 0 })
    ));
    assert!(matches!(
        random_instance(0, 1, 42, 10),
        Err(Error::BadShape { .. })
    ));
}

#[test]
fn derivation_from_binary_tables() {
    // Addition mod 4 with gamma elements {1, 3}: [a gamma b] = a + gamma + b.
    let add4: Vec<usize> = (0..4).flat_map(|a| (0..4).map(move |b| (a + b) % 4)).collect();
    let s = from_semigroup(&add4, &[1, 3]).unwrap();
    assert_eq!((s.n(), s.m()), (4, 2));
    for a in 0..4 {
        for (gi, g) in [1usize, 3].into_iter().enumerate() {
            for b in 0..4 {
                assert_eq!(s.triple_product(a, gi, b), (a + g + b) % 4);
            }
        }
    }
    assert_eq!(s, units_full());
}

#[test]
fn derivation_errors() {
    assert!(matches!(
        from_semigroup(&[0, 0, 0], &[0]),
        Err(Error::BadShape { .. })
    ));
    assert!(matches!(
        from_semigroup(&[0, 0, 0, 0], &[]),
        Err(Error::BadShape { .. })
    ));
    assert!(matches!(
        from_semigroup(&[0], &[1]),
        Err(Error::BadShape { .. })
    ));
    assert!(matches!(
        from_semigroup(&[0, 2, 0, 0], &[0]),
        Err(Error::IndexOutOfRange { position: 1, line: None })
    ));
    // Subtraction mod 3 is not associative; first witness in scan order.
    let sub3 = [0, 2, 1, 1, 0, 2, 2, 1, 0];
    assert!(matches!(
        from_semigroup(&sub3, &[0]),
        Err(Error::NotAssociativeBinary { a: 0, b: 0, c: 1 })
    ));
}

#[test]
fn structured_families_are_stable() {
    let families = structured_families(12);
    assert_eq!(families.len(), 37);
    let labels: Vec<&str> = families.iter().map(|(l, _)| l.as_str()).collect();
    let unique: std::collections::HashSet<&str> = labels.iter().copied().collect();
    assert_eq!(unique.len(), 37, "labels must be distinct");

    let small: Vec<String> = structured_families(2).into_iter().map(|(l, _)| l).collect();
    assert_eq!(small, ["zero-mult-2", "left-zero-2", "right-zero-2"]);

    let lookup = |label: &str| -> GammaSemigroup {
        families
            .iter()
            .find(|(l, _)| l == label)
            .unwrap_or_else(|| panic!("missing family {label}"))
            .1
            .clone()
    };
    assert_eq!(lookup("matrix-units-b2"), matrix_units());
    assert_eq!(lookup("complex-units-i-zero"), units_i_zero());
    assert_eq!(lookup("zmod-6"), zmod6());
    assert_eq!(lookup("zmod-6-gamma23"), zmod6_gamma23());
    assert_eq!(lookup("nil-3"), nil3());
}

#[test]
fn canonical_form_is_idempotent_and_relabel_invariant() {
    for (label, s) in all_fixtures() {
        if s.n() > 6 {
            continue;
        }
        let canon = canonical_form(&s).unwrap();
        assert_eq!(canonical_form(&canon).unwrap(), canon, "{label}: idempotent");
        assert!(
            (canon.table(), canon.zero()) <= (s.table(), s.zero()),
            "{label}: canonical form is minimal"
        );

        // Relabel by reversing the carrier; the canonical form must agree.
        let n = s.n();
        let m = s.m();
        let sigma: Vec<usize> = (0..n).rev().collect();
        let mut table = vec![0usize; n * m * n];
        for a in 0..n {
            for g in 0..m {
                for b in 0..n {
                    table[(sigma[a] * m + g) * n + sigma[b]] =
                        sigma[s.triple_product(a, g, b)];
                }
            }
        }
        let relabeled =
            GammaSemigroup::new(n, m, table, s.zero().map(|z| sigma[z])).unwrap();
        assert_eq!(canonical_form(&relabeled).unwrap(), canon, "{label}: invariant");
    }
}

#[test]
fn canonicalization_budget_is_enforced() {
    let big = GammaSemigroup::new(9, 1, vec![0; 81], None).unwrap();
    assert!(matches!(
        canonical_form(&big),
        Err(Error::TooLargeForCanonicalization { budget: 50_000 })
    ));
}

#[test]
fn iso_reduce_deduplicates() {
    let five = five_with_identity();
    let reduced = iso_reduce(&[five.clone(), five.clone()]).unwrap();
    assert_eq!(reduced.len(), 1);
    assert_eq!(reduced[0], canonical_form(&five).unwrap());
}

#[test]
fn default_corpus_is_frozen() {
    let corpus = build_corpus(&default_conformance_manifest()).unwrap();
    assert_eq!(corpus.len(), 1210);

    let ids: std::collections::HashSet<&str> =
        corpus.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids.len(), 1210, "ids must be unique");

    let mut by_class: std::collections::BTreeMap<&str, usize> = Default::default();
    for c in &corpus {
        *by_class.entry(c.class.as_str()).or_default() += 1;
    }
    assert_eq!(by_class.len(), 57);
    assert_eq!(by_class["exh-1x1"], 1);
    assert_eq!(by_class["exh-1x12"], 1);
    assert_eq!(by_class["exh-2x1"], 8);
    assert_eq!(by_class["exh-2x2"], 14);
    assert_eq!(by_class["exh-2x3"], 26);
    assert_eq!(by_class["exh-3x1"], 113);
    assert_eq!(by_class["fam-nil-3"], 1);
    assert_eq!(by_class["rnd-2x1"], 250);
    assert_eq!(by_class["rnd-3x1"], 250);

    let by_id = |id: &str| corpus.iter().find(|c| c.id == id).unwrap();
    assert_eq!(by_id("exh-2x2-0013").provenance, "exhaustive n=2 m=2");
    assert_eq!(
        by_id("rnd-3x1-0249").provenance,
        "random n=3 m=1 base-seed=1729 count=250"
    );
    assert_eq!(by_id("fam-nil-3").provenance, "structured family nil-3");
    assert_eq!(by_id("fam-nil-3").instance, nil3());
}

#[test]
fn transforms_rename_and_rezero() {
    let base = CorpusSpec {
        n_range: (2, 2),
        m_range: (1, 1),
        strategy: Strategy::Exhaustive,
        adjoin_zero: false,
        iso_reduce: true,
        cell_cap: CELL_CAP,
    };
    let reduced = build_corpus(&CorpusManifest {
        parts: vec![base.clone()],
    })
    .unwrap();
    assert_eq!(reduced.len(), 5);
    let ids: Vec<&str> = reduced.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(
        ids,
        ["exh-2x1-c0000", "exh-2x1-c0001", "exh-2x1-c0002", "exh-2x1-c0003", "exh-2x1-c0004"]
    );
    assert!(reduced
        .iter()
        .all(|c| c.provenance == "exhaustive n=2 m=1 iso-reduced"));
    assert!(reduced.iter().all(|c| c.class == "exh-2x1"));

    let both = build_corpus(&CorpusManifest {
        parts: vec![CorpusSpec {
            adjoin_zero: true,
            ..base
        }],
    })
    .unwrap();
    assert_eq!(both[0].id, "exh-2x1-c0000+0");
    assert_eq!(both[0].class, "exh-2x1+0");
    assert_eq!(
        both[0].provenance,
        "exhaustive n=2 m=1 iso-reduced zero-adjoined"
    );
    assert_eq!(both[0].instance.n(), 3);
    assert_eq!(both[0].instance.zero(), Some(2));
}

#[test]
fn random_parts_share_prefixes_across_counts() {
    let part = |count: usize| CorpusSpec {
        n_range: (2, 2),
        m_range: (2, 2),
        strategy: Strategy::Random {
            seed: 1729,
            count,
            max_tries: MAX_TRIES_DEFAULT,
        },
        adjoin_zero: false,
        iso_reduce: false,
        cell_cap: CELL_CAP,
    };
    let three = build_corpus(&CorpusManifest { parts: vec![part(3)] }).unwrap();
    let five = build_corpus(&CorpusManifest { parts: vec![part(5)] }).unwrap();
    assert_eq!(five.len(), 5);
    for (a, b) in three.iter().zip(five.iter()) {
        assert_eq!(a.id, b.id);
        assert_eq!(a.instance, b.instance);
    }
}

#[test]
fn structured_parts_filter_by_label_and_gamma_range() {
    let base = CorpusSpec {
        n_range: (1, 12),
        m_range: (1, 3),
        strategy: Strategy::Structured {
            families: Some(vec!["nil-3".to_string()]),
        },
        adjoin_zero: false,
        iso_reduce: false,
        cell_cap: CELL_CAP,
    };
    let only_nil = build_corpus(&CorpusManifest {
        parts: vec![base.clone()],
    })
    .unwrap();
    assert_eq!(only_nil.len(), 1);
    assert_eq!(only_nil[0].id, "fam-nil-3");
    assert_eq!(only_nil[0].instance, nil3());

    let multi_gamma = build_corpus(&CorpusManifest {
        parts: vec![CorpusSpec {
            m_range: (2, 3),
            strategy: Strategy::Structured { families: None },
            ..base
        }],
    })
    .unwrap();
    let labels: Vec<&str> = multi_gamma.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(labels, ["fam-complex-units-full", "fam-zmod-6-gamma23"]);
}

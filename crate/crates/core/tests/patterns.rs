use chibound::generators::{enumerate_graphs, random_graph};
use chibound::oracle::brute_contains;
use chibound::patterns::{
    catalog, contains_induced, is_bounds_class_member, is_class_member, is_free_of, pattern, PATTERN_NAMES,
};
use chibound::{Error, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn catalog_matches_stable_names() {
    let names: Vec<&str> = catalog().iter().map(|p| p.name()).collect();
    assert_eq!(names, PATTERN_NAMES);
    assert!(matches!(pattern("k5"), Err(Error::UnknownPattern(_))));
}

#[test]
fn catalog_edge_counts() {
    let count = |name: &str| {
        let p = pattern(name).unwrap();
        (p.n(), p.graph().edge_count())
    };
    assert_eq!(count("codomino"), (6, 8));
    assert_eq!(count("x2"), (7, 11));
    assert_eq!(count("cop3up2"), (5, 7));
    assert_eq!(count("cotwinc5"), (6, 8));
}

#[test]
fn witnesses_are_valid_embeddings() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let g: Graph = random_graph(9, 0.5, &mut rng).unwrap();
        for p in catalog() {
            if let Some(e) = contains_induced(&g, p) {
                assert!(e.is_valid_in(&g, p), "{}", p.name());
                assert_eq!(e.pattern, p.name());
            }
        }
    }
}

#[test]
fn detection_agrees_with_brute_force_on_all_small_graphs() {
    for n in 0..=6 {
        for g in enumerate_graphs(n).unwrap().step_by(7) {
            for p in catalog() {
                assert_eq!(contains_induced(&g, p).is_some(), brute_contains(&g, p).unwrap(), "{} in {:?}", p.name(), g);
            }
        }
    }
}

#[test]
fn search_is_deterministic() {
    let g = Graph::<u64>::cycle(9).unwrap();
    let p = pattern("p5").unwrap();
    assert_eq!(contains_induced(&g, p), contains_induced(&g, p));
    // Inner path vertices are matched first, to hosts 0 1 2; the ends follow.
    assert_eq!(contains_induced(&g, p).unwrap().map, vec![8, 0, 1, 2, 3]);
}

#[test]
fn family_patterns_ignore_optional_pairs() {
    for name in ["yfam", "codomino1"] {
        let p = pattern(name).unwrap();
        assert!(contains_induced(p.graph(), p).is_some());
        assert!(contains_induced(&p.with_optional_edges(), p).is_some());
    }
}

#[test]
fn class_membership() {
    assert!(is_class_member(&Graph::<u64>::cycle(5).unwrap()).is_member());
    assert!(!is_class_member(&Graph::<u64>::complete(4).unwrap()).is_member());
    assert!(!is_class_member(pattern("p3up2").unwrap().graph()).is_member());
    for name in ["codomino", "coa", "chi37", "x1", "x2", "cotwinc5"] {
        assert!(is_class_member(pattern(name).unwrap().graph()).is_member(), "{name}");
    }
    assert!(is_free_of(&Graph::<u64>::cycle(6).unwrap(), pattern("k3").unwrap()));
}

#[test]
fn complement_bridge_on_small_graphs() {
    for n in 0..=6 {
        for g in enumerate_graphs(n).unwrap() {
            assert_eq!(is_bounds_class_member(&g).is_member(), is_class_member(&g.complement()).is_member());
        }
    }
}

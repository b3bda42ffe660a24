use chibound::decompose::{
    around_triangle, check_c8_claim, check_d1_nonadjacent_claim, d1d2, d1d2_with, five_set_split, in_d1,
    verify_bi_p3_free, ClaimTally, Neighborhood,
};
use chibound::generators::enumerate_graphs;
use chibound::oracle::{clique_number, max_clique_in};
use chibound::patterns::is_class_member;
use chibound::{Error, Graph, VertexSet};

fn members(n: usize) -> impl Iterator<Item = Graph> {
    enumerate_graphs(n).unwrap().filter(|g| is_class_member(g).is_member())
}

#[test]
fn triangle_partition_covers_every_vertex_once() {
    for g in members(6) {
        let tri = max_clique_in(&g, g.vertices()).to_vec();
        if tri.len() < 3 {
            continue;
        }
        let d = around_triangle(&g, (tri[0], tri[1], tri[2])).unwrap();
        let parts = [d.triangle_set(), d.a0, d.a1, d.a2, d.a3];
        let mut seen = VertexSet::<u64>::empty();
        for p in parts {
            assert!(p.is_disjoint(seen));
            seen = seen | p;
        }
        assert_eq!(seen, g.vertices());
        assert!(d.a3.is_empty(), "K4-free");
        assert_eq!(d.b[0] | d.b[1] | d.b[2], d.a0 | d.a1);
        assert_eq!(d.a2_splits[0] | d.a2_splits[1] | d.a2_splits[2], d.a2);
        for i in 0..3 {
            assert!(g.is_stable(d.a2_class(i)), "{g:?}");
        }
        assert!(verify_bi_p3_free(&g, &d).is_none(), "{g:?}");
    }
}

#[test]
fn d1_matches_its_definition() {
    for g in enumerate_graphs(5).unwrap() {
        let part = d1d2(&g);
        assert_eq!(part.d1 | part.d2, g.vertices());
        assert!(part.d1.is_disjoint(part.d2));
        for x in 0..g.n() {
            let rest = g.vertices() - g.row(x);
            let omega = clique_number(&g.induced(rest).unwrap()).value;
            assert_eq!(part.d1.contains(x), omega <= 2);
        }
        let closed = d1d2_with(&g, Neighborhood::Closed);
        assert!(part.d1.is_subset(closed.d1));
    }
}

#[test]
fn five_sets_partition_the_neighborhood() {
    for g in members(6) {
        let d1 = d1d2(&g).d1;
        for v1 in d1.iter() {
            for v2 in (g.row(v1) & d1).iter() {
                for v3 in (d1 - g.row(v1) - g.row(v2)).iter().filter(|&v| v != v1 && v != v2) {
                    let sets = five_set_split(&g, v1, v2, v3).unwrap();
                    let pair = VertexSet::singleton(v1).with(v2);
                    let mut seen = VertexSet::<u64>::empty();
                    for s in sets {
                        assert!(s.is_disjoint(seen));
                        seen = seen | s;
                    }
                    assert_eq!(seen, (g.row(v1) | g.row(v2)) - pair);
                }
            }
        }
    }
}

#[test]
fn five_set_split_rejects_bad_triples() {
    let c5 = Graph::<u64>::cycle(5).unwrap();
    assert!(matches!(five_set_split(&c5, 0, 2, 4), Err(Error::InvalidConfiguration(_))));
    assert!(matches!(five_set_split(&c5, 0, 1, 9), Err(Error::VertexOutOfRange { .. })));
    // An isolated vertex beside a triangle lies in D2.
    let k3p1 = Graph::<u64>::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    assert!(!in_d1(&k3p1, 3, Neighborhood::Open));
    assert!(matches!(five_set_split(&k3p1, 0, 1, 3), Err(Error::InvalidConfiguration(_))));
}

#[test]
fn claims_hold_on_six_vertex_members() {
    let mut d1 = ClaimTally::default();
    let mut c8 = ClaimTally::default();
    for g in members(6) {
        d1.absorb(check_d1_nonadjacent_claim(&g));
        c8.absorb(check_c8_claim(&g));
    }
    assert!(d1.violations.is_empty(), "{:?}", d1.violations.first());
    assert!(c8.violations.is_empty(), "{:?}", c8.violations.first());
    assert!(d1.hits >= 100 && c8.hits >= 100, "{} {}", d1.hits, c8.hits);
}

#[test]
fn triangle_errors() {
    let p3 = Graph::<u64>::path(3).unwrap();
    assert!(matches!(around_triangle(&p3, (0, 1, 2)), Err(Error::InvalidTriangle(0, 1, 2))));
    assert!(matches!(around_triangle(&p3, (0, 1, 7)), Err(Error::VertexOutOfRange { .. })));
}

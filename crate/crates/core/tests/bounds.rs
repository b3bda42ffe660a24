use chibound::bounds::{clique_cover, verify_chi_bound, verify_order_bound, PARTS_PER_FACTOR};
use chibound::generators::{derive_seed, enumerate_graphs, random_bounds_member, GenConfig};
use chibound::oracle::{clique_number, exact_chromatic};
use chibound::patterns::is_bounds_class_member;
use chibound::Graph;

#[test]
fn covers_and_bounds_on_six_vertex_members() {
    for n in 0..=6 {
        for g in enumerate_graphs(n).unwrap() {
            if !is_bounds_class_member(&g).is_member() {
                assert!(clique_cover(&g).is_err());
                continue;
            }
            let cover = clique_cover(&g).unwrap();
            assert!(cover.is_valid_for(&g));
            assert!(cover.factor_parts.iter().all(|&k| k <= PARTS_PER_FACTOR));
            // No clique cover is smaller than the chromatic number of the complement.
            assert!(cover.parts.len() >= exact_chromatic(&g.complement()).value);
            let order = verify_order_bound(&g).unwrap();
            let chi = verify_chi_bound(&g).unwrap();
            assert!(order.holds && chi.holds);
            assert_eq!(order.omega, clique_number(&g).value);
        }
    }
}

#[test]
fn fuzzed_members_up_to_sixteen_vertices() {
    for i in 0..200 {
        let n = 8 + (i as usize % 9);
        let g: Graph = random_bounds_member(&GenConfig::new(n, 0.4, derive_seed(5, i))).unwrap();
        assert!(is_bounds_class_member(&g).is_member());
        let cover = clique_cover(&g).unwrap();
        assert!(cover.is_valid_for(&g));
        assert!(verify_order_bound(&g).unwrap().holds);
        assert!(verify_chi_bound(&g).unwrap().holds);
    }
}

#[test]
fn report_serializes_without_anomaly_when_the_bound_holds() {
    let r = verify_chi_bound(&Graph::<u64>::cycle(5).unwrap()).unwrap();
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["bound"], "chromatic");
    assert!(json.get("anomaly").is_none());
}

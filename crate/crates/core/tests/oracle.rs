use chibound::generators::enumerate_graphs;
use chibound::oracle::{clique_number, exact_chromatic, greedy, k_colorable};
use chibound::{validate, Graph, VertexSet};

/// Smallest k admitting a proper coloring, by trying every assignment.
fn brute_chi(g: &Graph) -> usize {
    let n = g.n();
    (0..=n)
        .find(|&k| {
            let total = k.pow(n as u32);
            (0..total).any(|mut code| {
                let mut col = vec![0; n];
                for c in col.iter_mut() {
                    *c = code % k.max(1);
                    code /= k.max(1);
                }
                g.edges().iter().all(|&(u, v)| col[u] != col[v])
            })
        })
        .unwrap()
}

fn brute_omega(g: &Graph) -> usize {
    (0u64..1 << g.n())
        .map(VertexSet::from_bits)
        .filter(|&s| g.is_clique(s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// Mycielski graph of C5.
fn grotzsch() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        let j = (i + 1) % 5;
        edges.push((i, j));
        edges.push((i, j + 5));
        edges.push((j, i + 5));
        edges.push((i + 5, 10));
    }
    Graph::from_edges(11, &edges).unwrap()
}

#[test]
fn agrees_with_brute_force_up_to_six_vertices() {
    for n in 0..=6 {
        for g in enumerate_graphs(n).unwrap().step_by(3) {
            let chi = exact_chromatic(&g);
            assert_eq!(chi.value, brute_chi(&g), "{g:?}");
            let c = chi.coloring().unwrap();
            assert!(validate(&g, c).unwrap());
            assert_eq!(c.k(), chi.value);
            let om = clique_number(&g);
            assert_eq!(om.value, brute_omega(&g));
            let clique: VertexSet = om.clique().unwrap().iter().copied().collect();
            assert!(g.is_clique(clique) && clique.len() == om.value);
        }
    }
}

#[test]
fn classical_graphs() {
    let p = petersen();
    assert_eq!((exact_chromatic(&p).value, clique_number(&p).value), (3, 2));
    let g = grotzsch();
    assert_eq!((exact_chromatic(&g).value, clique_number(&g).value), (4, 2));
    let co_c7 = Graph::<u64>::cycle(7).unwrap().complement();
    assert_eq!((exact_chromatic(&co_c7).value, clique_number(&co_c7).value), (4, 3));
    assert_eq!(exact_chromatic(&Graph::<u64>::complete(9).unwrap()).value, 9);
    assert_eq!(exact_chromatic(&Graph::<u64>::empty(0).unwrap()).value, 0);
}

#[test]
fn k_colorability_threshold() {
    let g = grotzsch();
    assert!(k_colorable(&g, 3).is_none());
    let c = k_colorable(&g, 4).unwrap();
    assert!(validate(&g, &c).unwrap() && c.k() <= 4);
    let gr = greedy(&g);
    assert!(validate(&g, &gr).unwrap());
}

use pivotkit::cutrank::{cut_rank, find_low_rank_separation, is_valid_separation};
use pivotkit::graph::{blow_up, find_complete_bipartite, BiGraph, Graph};
use pivotkit::pivot::{are_isomorphic, canonical_form, find_isomorphism, pivot};
use pivotkit::verify::oracle;
use pivotkit::BitMatrix;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn bigraph(max_side: usize) -> impl Strategy<Value = BiGraph> {
    (0..=max_side, 0..=max_side, 0.0..1.0f64).prop_flat_map(|(a, b, p)| {
        proptest::collection::vec(proptest::bool::weighted(p.clamp(0.05, 0.95)), a * b)
            .prop_map(move |bits| BiGraph::new(BitMatrix::from_fn(a, b, |i, j| bits[i * b + j])))
    })
}

/// Every labelled graph on `n` vertices.
fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        Graph::from_edges(n, &edges)
    })
}

#[test]
fn pivot_algebra_on_every_labelled_graph_up_to_five_vertices() {
    for n in 2..=5 {
        for g in all_graphs(n) {
            for (x, y) in g.edges() {
                let p = pivot(&g, x, y).unwrap();
                assert_eq!(pivot(&p, x, y).unwrap(), g);
                assert_eq!(pivot(&g, y, x).unwrap(), p);
                assert_eq!(p.is_bipartite(), g.is_bipartite());
                assert!(p.has_edge(x, y));
            }
        }
    }
}

proptest! {
    #[test]
    fn biclique_search_matches_brute_force(g in bigraph(7), s in 1usize..4, t in 1usize..5) {
        let found = find_complete_bipartite(&g, s, t);
        prop_assert_eq!(found.is_some(), oracle::has_biclique(&g, s, t));
        if let Some(b) = found {
            prop_assert!(b.is_valid_in(&g));
        }
    }

    #[test]
    fn blow_up_counts(g in graph(7), k in 1usize..4) {
        let b = blow_up(&g, k);
        prop_assert_eq!(b.n(), g.n() * k);
        prop_assert_eq!(b.edge_count(), g.edge_count() * k * k);
        for v in 0..g.n() {
            prop_assert_eq!(b.degree(v * k), g.degree(v) * k);
        }
    }

    #[test]
    fn cut_rank_is_symmetric_and_matches_definition(g in graph(9), mask in any::<u16>()) {
        let n = g.n();
        let x: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let y: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
        let r = cut_rank(&g, &x);
        prop_assert_eq!(r, cut_rank(&g, &y));
        prop_assert_eq!(r, oracle::cut_rank_brute_force(&g, &x));
        prop_assert!(r <= x.len().min(y.len()));
    }

    #[test]
    fn cut_rank_is_submodular(g in graph(8), a in any::<u8>(), b in any::<u8>()) {
        let n = g.n();
        let set = |m: u8| -> Vec<usize> { (0..n).filter(|&v| m >> v & 1 == 1).collect() };
        let lhs = cut_rank(&g, &set(a)) + cut_rank(&g, &set(b));
        let rhs = cut_rank(&g, &set(a & b)) + cut_rank(&g, &set(a | b));
        prop_assert!(lhs >= rhs);
    }

    #[test]
    fn pivot_preserves_cut_rank(g in graph(8), mask in any::<u8>()) {
        let x: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        for (u, v) in g.edges() {
            let p = pivot(&g, u, v).unwrap();
            prop_assert_eq!(cut_rank(&p, &x), cut_rank(&g, &x));
        }
    }

    #[test]
    fn separations_are_valid_and_least(g in graph(8), k in 1usize..5) {
        match find_low_rank_separation(&g, k).unwrap() {
            Some(sep) => {
                prop_assert!(is_valid_separation(&g, &sep));
                prop_assert!(sep.order < k);
            }
            None => {
                // no split with both sides of size >= l has cut-rank < l
                let n = g.n();
                for mask in 0u32..1 << n {
                    let x: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                    let size = x.len().min(n - x.len());
                    let r = oracle::cut_rank_brute_force(&g, &x);
                    prop_assert!(!(r < size.min(k - 1) && r + 1 < k), "{:?} has cut-rank {}", x, r);
                }
            }
        }
    }

    #[test]
    fn canonical_form_is_a_complete_invariant(g in graph(8), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(are_isomorphic(&g, &h));
        let map = find_isomorphism(&g, &h).unwrap();
        for (u, v) in g.edges() {
            prop_assert!(h.has_edge(map[u], map[v]));
        }
        if n >= 2 && g.edge_count() > 0 {
            let (u, v) = g.edges()[0];
            let mut fewer = g.clone();
            fewer.remove_edge(u, v);
            prop_assert!(!are_isomorphic(&fewer, &h));
        }
    }

    #[test]
    fn text_round_trips(g in graph(10), b in bigraph(6)) {
        prop_assert_eq!(g.to_text().parse::<Graph>().unwrap(), g);
        let parsed: BiGraph = b.to_text().parse().unwrap();
        prop_assert_eq!(parsed.biadjacency(), b.biadjacency());
    }

    #[test]
    fn vertex_connectivity_matches_brute_force(g in graph(7)) {
        prop_assert_eq!(pivotkit::vertex_connectivity(&g), oracle::vertex_connectivity_brute_force(&g));
    }
}

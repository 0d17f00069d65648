use pivotkit::extremal::decode_prufer;
use pivotkit::graph::{BiGraph, Graph};
use pivotkit::structure::{
    apply_partition, check_tree_split, constant_block_partition, perturbation_partition, split_tree, BlockTag,
};
use pivotkit::BitMatrix;
use proptest::prelude::*;

fn tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n - 2).prop_map(move |seq| Graph::from_edges(n, &decode_prufer(n, &seq)))
    })
}

fn low_rank(n: usize, r: usize) -> impl Strategy<Value = BitMatrix> {
    (
        proptest::collection::vec(any::<bool>(), n * r),
        proptest::collection::vec(any::<bool>(), r * n),
    )
        .prop_map(move |(u, v)| {
            let u = BitMatrix::from_fn(n, r, |i, j| u[i * r + j]);
            let v = BitMatrix::from_fn(r, n, |i, j| v[i * n + j]);
            u.mul(&v).unwrap()
        })
}

proptest! {
    #[test]
    fn split_tree_is_accepted_by_the_checker(t in tree(40), s in 1usize..8) {
        let edges = t.edge_count();
        match split_tree(&t, s) {
            Ok(split) => {
                prop_assert!(5 * s <= edges);
                prop_assert_eq!(check_tree_split(&t, s, &split), Ok(()));
            }
            Err(_) => prop_assert!(5 * s > edges),
        }
    }

    #[test]
    fn block_partition_bounds(c in (0usize..=4).prop_flat_map(|r| low_rank(8, r))) {
        let p = constant_block_partition(&c);
        let bound = 1usize << c.rank();
        prop_assert!(p.row_classes.len() <= bound && p.col_classes.len() <= bound);
        for (i, rc) in p.row_classes.iter().enumerate() {
            for (j, cc) in p.col_classes.iter().enumerate() {
                let one = p.tag(i, j) == BlockTag::One;
                for &r in rc {
                    for &col in cc {
                        prop_assert_eq!(c.get(r, col), one);
                    }
                }
            }
        }
    }

    #[test]
    fn perturbation_reconstructs_the_first_graph(
        c in (0usize..=3).prop_flat_map(|r| low_rank(7, r)),
        bits in proptest::collection::vec(any::<bool>(), 49),
    ) {
        let g2 = BiGraph::new(BitMatrix::from_fn(7, 7, |i, j| bits[i * 7 + j]));
        let g1 = BiGraph::new(g2.biadjacency().xor(&c).unwrap());
        let p = perturbation_partition(&g1, &g2).unwrap();
        prop_assert_eq!(p.p, c.rank());
        let rebuilt = apply_partition(&g2, &p.partition);
        prop_assert_eq!(rebuilt.biadjacency(), g1.biadjacency());
    }
}

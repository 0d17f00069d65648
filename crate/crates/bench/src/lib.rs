//! Deterministic inputs for the kernel benchmarks.

use pivotkit::{BinaryMatroid, BitMatrix, Graph};

/// Pseudo-random bit from a splitmix-style hash of `(seed, i, j)`.
fn bit(seed: u64, i: usize, j: usize) -> bool {
    let mut z = seed ^ ((i as u64) << 32 | j as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    (z ^ (z >> 31)) & 1 == 1
}

pub fn dense_matrix(nrows: usize, ncols: usize, seed: u64) -> BitMatrix {
    BitMatrix::from_fn(nrows, ncols, |i, j| bit(seed, i, j))
}

pub fn dense_graph(n: usize, seed: u64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if bit(seed, u, v) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn dense_matroid(rank: usize, corank: usize, seed: u64) -> BinaryMatroid {
    BinaryMatroid::from_rep(dense_matrix(rank, corank, seed))
}

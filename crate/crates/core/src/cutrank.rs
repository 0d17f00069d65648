//! Cut-rank of vertex bipartitions and exhaustive rank-connectivity search.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{rank_of_words, BitIter, BitMatrix};
use crate::graph::Graph;

/// Largest vertex or element count for which subset enumeration is attempted.
pub const HARD_SUBSET_CAP: usize = 24;

/// Environment variable that may lower (never raise) [`HARD_SUBSET_CAP`].
pub const SUBSET_CAP_ENV: &str = "PIVOTKIT_MAX_SUBSET_N";

/// The effective subset-enumeration cap.
pub fn subset_cap() -> usize {
    std::env::var(SUBSET_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(HARD_SUBSET_CAP, |v| v.min(HARD_SUBSET_CAP))
}

/// A partition `(side, V - side)` whose cut-rank is below `order`, with
/// both parts of size at least `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub side: Vec<usize>,
    pub order: usize,
    pub cut_rank: usize,
}

impl fmt::Display for Separation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "separation order={} cutrank={} side={}",
            self.order,
            self.cut_rank,
            crate::text::join_csv(&self.side)
        )
    }
}

/// Rank over GF(2) of the `X x (V - X)` adjacency matrix.
pub fn cut_rank(g: &Graph, x: &[usize]) -> usize {
    let n = g.n();
    let mut inside = vec![false; n];
    for &v in x {
        inside[v] = true;
    }
    if n <= 64 {
        let mask = x.iter().fold(0u64, |m, &v| m | 1 << v);
        return cut_rank_mask(g, mask);
    }
    let rows: Vec<usize> = (0..n).filter(|&v| inside[v]).collect();
    let cols: Vec<usize> = (0..n).filter(|&v| !inside[v]).collect();
    g.adjacency().submatrix(&rows, &cols).rank()
}

/// Cut-rank for a vertex set given as a bit mask (graphs on at most 64 vertices).
///
/// Rows of the cut matrix are the neighbourhoods of `X` restricted to the
/// complement, so their span can be computed directly on masks.
#[inline]
pub fn cut_rank_mask(g: &Graph, mask: u64) -> usize {
    let outside = !mask;
    rank_of_words(BitIter(mask).map(|v| g.neighbor_mask(v) & outside))
}

/// Enumerate every `X` of size at most `n/2` (for `|X| = n/2` only those
/// containing vertex 0) in order of size, then numeric mask order, and
/// return the separation of least order under that enumeration, if any
/// separation of order `1..k` exists. `connectivity(mask)` evaluates the
/// connectivity function of the set.
pub(crate) fn least_separation(
    n: usize,
    k: usize,
    mut connectivity: impl FnMut(u64) -> usize,
) -> Option<(u64, usize, usize)> {
    if k <= 1 || n < 2 {
        return None;
    }
    let max_order = k - 1;
    let mut best: Option<(u64, usize, usize)> = None;
    for size in 1..=n / 2 {
        // a separation of order l needs |X| >= l; orders at least best are useless
        let cap = best.map_or(max_order, |(_, l, _)| l - 1).min(size);
        if cap == 0 {
            break;
        }
        for mask in masks_of_size(n, size) {
            if 2 * size == n && mask & 1 == 0 {
                continue;
            }
            let r = connectivity(mask);
            let order = r + 1;
            let limit = best.map_or(max_order, |(_, l, _)| l - 1).min(size);
            if order <= limit {
                best = Some((mask, order, r));
                if order == 1 {
                    return best;
                }
            }
        }
    }
    best
}

/// All `size`-subsets of `0..n` as masks in increasing numeric order.
pub(crate) fn masks_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let first = if size == 0 { 0 } else { (1u64 << size) - 1 };
    let mut next = Some(first).filter(|&m| m < limit || (size == 0));
    std::iter::from_fn(move || {
        let current = next?;
        next = if current == 0 {
            None
        } else {
            // Gosper's hack
            let c = current & current.wrapping_neg();
            let r = current + c;
            let candidate = (((r ^ current) >> 2) / c) | r;
            Some(candidate).filter(|&m| m < limit)
        };
        Some(current)
    })
}

pub(crate) fn mask_to_vec(mask: u64) -> Vec<usize> {
    BitIter(mask).collect()
}

/// Find a separation of some order `l` in `1..k`, or `None` if `g` is
/// `k`-rank-connected.
///
/// The witness has the least order; ties are broken by the smaller side
/// first, then by numeric order of the side's vertex mask. Every graph is
/// 1-rank-connected.
pub fn find_low_rank_separation(g: &Graph, k: usize) -> Result<Option<Separation>> {
    let n = g.n();
    let cap = subset_cap();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "vertex count",
            value: n,
            cap,
        });
    }
    Ok(least_separation(n, k, |mask| cut_rank_mask(g, mask)).map(|(mask, order, r)| Separation {
        side: mask_to_vec(mask),
        order,
        cut_rank: r,
    }))
}

pub fn is_k_rank_connected(g: &Graph, k: usize) -> Result<bool> {
    Ok(find_low_rank_separation(g, k)?.is_none())
}

/// Check that `sep` really is a separation of `g`.
pub fn is_valid_separation(g: &Graph, sep: &Separation) -> bool {
    let n = g.n();
    let size = sep.side.len();
    sep.side.iter().all(|&v| v < n)
        && size >= sep.order
        && n - size >= sep.order
        && cut_rank(g, &sep.side) == sep.cut_rank
        && sep.cut_rank < sep.order
}

/// The `X x (V - X)` matrix itself.
pub fn cut_matrix(g: &Graph, x: &[usize]) -> BitMatrix {
    let n = g.n();
    let mut inside = vec![false; n];
    for &v in x {
        inside[v] = true;
    }
    let rows: Vec<usize> = (0..n).filter(|&v| inside[v]).collect();
    let cols: Vec<usize> = (0..n).filter(|&v| !inside[v]).collect();
    g.adjacency().submatrix(&rows, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BiGraph;
    use crate::pivot::pivot;

    #[test]
    fn cut_rank_examples() {
        let k33 = BiGraph::complete(3, 3).to_graph();
        assert_eq!(cut_rank(&k33, &[0, 1, 2]), 1);
        assert_eq!(cut_rank(&Graph::cycle(4), &[0, 1]), 2);
        assert_eq!(cut_matrix(&Graph::cycle(4), &[0, 1]), BitMatrix::from_rows(&[[0u8, 1], [1, 0]]));
        assert_eq!(cut_rank(&Graph::cycle(4), &[]), 0);
        assert_eq!(cut_rank(&Graph::cycle(4), &[0, 1, 2, 3]), 0);
    }

    #[test]
    fn mask_enumeration() {
        let all: Vec<u64> = masks_of_size(4, 2).collect();
        assert_eq!(all, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(masks_of_size(3, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(masks_of_size(3, 3).collect::<Vec<_>>(), vec![0b111]);
        assert_eq!(masks_of_size(2, 3).count(), 0);
    }

    #[test]
    fn k33_is_not_4_rank_connected() {
        let k33 = BiGraph::complete(3, 3).to_graph();
        let sep = find_low_rank_separation(&k33, 4).unwrap().unwrap();
        assert!(is_valid_separation(&k33, &sep));
        // two vertices of one side already have identical rows
        assert_eq!(sep, Separation { side: vec![0, 1], order: 2, cut_rank: 1 });
        // and a balanced split of order 3 exists as well
        let balanced = Separation { side: vec![0, 1, 3], order: 3, cut_rank: 2 };
        assert!(is_valid_separation(&k33, &balanced));
        assert!(is_k_rank_connected(&k33, 2).unwrap());
    }

    #[test]
    fn small_and_connected_cases() {
        for n in 0..=1 {
            assert!(is_k_rank_connected(&Graph::new(n), 2).unwrap());
        }
        assert!(!is_k_rank_connected(&Graph::new(2), 2).unwrap());
        assert!(is_k_rank_connected(&Graph::complete(3), 3).unwrap());
        assert!(is_k_rank_connected(&Graph::cycle(5), 2).unwrap());
        assert!(!is_k_rank_connected(&Graph::new(4), 2).unwrap());
        assert!(is_k_rank_connected(&Graph::new(10), 1).unwrap());
        assert!(is_k_rank_connected(&Graph::new(10), 0).unwrap());
    }

    #[test]
    fn vertex_cap_is_enforced() {
        assert!(matches!(
            find_low_rank_separation(&Graph::new(HARD_SUBSET_CAP + 1), 2),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn pivot_preserves_cut_rank_on_bipartite_graphs() {
        let g = Graph::from_edges(6, &[(0, 3), (0, 4), (1, 4), (1, 5), (2, 3), (2, 5)]);
        for (x, y) in g.edges() {
            let p = pivot(&g, x, y).unwrap();
            for mask in 0u64..1 << 6 {
                assert_eq!(cut_rank_mask(&g, mask), cut_rank_mask(&p, mask));
            }
        }
    }
}

//! Brute-force oracles.
//!
//! Nothing here calls the packed GF(2) kernel or the search routines it
//! checks; each oracle recomputes its answer from definitions on plain
//! `Vec`s.

use std::collections::BTreeSet;

use crate::graph::{BiGraph, Graph};
use crate::matroid::{BinaryMatroid, MultiGraph, SpanningTree};

/// Gaussian elimination rank of 0/1 rows.
pub fn naive_rank(rows: &[Vec<u8>]) -> usize {
    let mut m: Vec<Vec<u8>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] == 1) else {
            continue;
        };
        m.swap(p, rank);
        for r in 0..m.len() {
            if r != rank && m[r][c] == 1 {
                for k in 0..ncols {
                    m[r][k] ^= m[rank][k];
                }
            }
        }
        rank += 1;
    }
    rank
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Whether `K_{s,t}` is a subgraph, by trying every pair of an `s`-subset
/// of one side and a `t`-subset of the other, in both orientations.
pub fn has_biclique(g: &BiGraph, s: usize, t: usize) -> bool {
    let edge = |i: usize, j: usize| g.has_edge(i, j);
    let complete = |rows: &[usize], cols: &[usize]| rows.iter().all(|&i| cols.iter().all(|&j| edge(i, j)));
    let (a, b) = (g.a(), g.b());
    for (ra, cb) in [(s, t), (t, s)] {
        for rows in subsets_of_size(a, ra) {
            for cols in subsets_of_size(b, cb) {
                if complete(&rows, &cols) {
                    return true;
                }
            }
        }
    }
    false
}

/// Smallest vertex set whose removal disconnects the graph; `n - 1` if no
/// such set exists.
pub fn vertex_connectivity_brute_force(g: &Graph) -> usize {
    let n = g.n();
    for size in 0..n.saturating_sub(1) {
        for removed in subsets_of_size(n, size) {
            let keep: Vec<usize> = (0..n).filter(|v| !removed.contains(v)).collect();
            if keep.len() >= 2 && !connected_on(g, &keep) {
                return size;
            }
        }
    }
    n.saturating_sub(1)
}

fn connected_on(g: &Graph, keep: &[usize]) -> bool {
    let Some(&start) = keep.first() else {
        return true;
    };
    let mut seen = vec![start];
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &v in keep {
            if g.has_edge(u, v) && !seen.contains(&v) {
                seen.push(v);
                stack.push(v);
            }
        }
    }
    seen.len() == keep.len()
}

/// Fundamental matrix obtained by solving, for each non-tree edge, the
/// linear system expressing its incidence vector as a sum of tree-edge
/// incidence vectors over GF(2). Rows and columns follow edge-list order.
pub fn fundamental_matrix_via_cycle_space(g: &MultiGraph, tree: &SpanningTree) -> Vec<Vec<u8>> {
    let n = g.n();
    let incidence = |u: usize, v: usize| -> Vec<u8> {
        let mut col = vec![0u8; n];
        col[u] ^= 1;
        col[v] ^= 1;
        col
    };
    let tree_edges: Vec<_> = g.edges().iter().filter(|e| tree.contains(e.label)).collect();
    let cotree_edges: Vec<_> = g.edges().iter().filter(|e| !tree.contains(e.label)).collect();
    let mut d = vec![vec![0u8; cotree_edges.len()]; tree_edges.len()];
    for (j, e) in cotree_edges.iter().enumerate() {
        // augmented system: rows are vertices, unknowns are tree edges
        let mut sys: Vec<Vec<u8>> = (0..n)
            .map(|v| {
                let mut row: Vec<u8> = tree_edges.iter().map(|t| incidence(t.u, t.v)[v]).collect();
                row.push(incidence(e.u, e.v)[v]);
                row
            })
            .collect();
        let unknowns = tree_edges.len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..unknowns {
            let Some(p) = (r..n).find(|&i| sys[i][c] == 1) else {
                continue;
            };
            sys.swap(p, r);
            for i in 0..n {
                if i != r && sys[i][c] == 1 {
                    for k in 0..=unknowns {
                        sys[i][k] ^= sys[r][k];
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        for (row, &c) in pivots.iter().enumerate() {
            d[c][j] = sys[row][unknowns];
        }
    }
    d
}

/// Edge sets of all cycles of a multigraph (loops and 2-cycles of parallel
/// edges included): non-empty edge sets that are connected and where every
/// touched vertex has degree exactly two.
pub fn cycles_brute_force(g: &MultiGraph) -> BTreeSet<Vec<u32>> {
    let edges = g.edges();
    assert!(edges.len() <= 20, "too many edges for brute force");
    let mut out = BTreeSet::new();
    for mask in 1u32..1 << edges.len() {
        let chosen: Vec<_> = (0..edges.len()).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
        let mut degree = vec![0usize; g.n()];
        for e in &chosen {
            degree[e.u] += 1;
            degree[e.v] += 1;
        }
        if degree.iter().any(|&d| d != 0 && d != 2) {
            continue;
        }
        let touched: Vec<usize> = (0..g.n()).filter(|&v| degree[v] > 0).collect();
        let mut seen = vec![touched[0]];
        let mut stack = vec![touched[0]];
        while let Some(u) = stack.pop() {
            for e in &chosen {
                let other = if e.u == u { e.v } else if e.v == u { e.u } else { continue };
                if !seen.contains(&other) {
                    seen.push(other);
                    stack.push(other);
                }
            }
        }
        if seen.len() == touched.len() {
            let mut labels: Vec<u32> = chosen.iter().map(|e| e.label).collect();
            labels.sort_unstable();
            out.insert(labels);
        }
    }
    out
}

/// Circuits straight from the definition: minimal subsets of columns of
/// `[I | D]` that are linearly dependent.
pub fn circuits_brute_force(m: &BinaryMatroid) -> BTreeSet<Vec<u32>> {
    let ground = m.ground();
    let r = m.rank();
    // columns of [I | D] as 0/1 vectors
    let column = |label: u32| -> Vec<u8> {
        if let Some(i) = m.basis().iter().position(|&l| l == label) {
            (0..r).map(|k| (k == i) as u8).collect()
        } else {
            let j = m.cobasis().iter().position(|&l| l == label).unwrap();
            (0..r).map(|k| m.rep().get(k, j) as u8).collect()
        }
    };
    let cols: Vec<Vec<u8>> = ground.iter().map(|&l| column(l)).collect();
    let dependent = |set: &[usize]| {
        let rows: Vec<Vec<u8>> = set.iter().map(|&c| cols[c].clone()).collect();
        naive_rank(&rows) < set.len()
    };
    let mut out = BTreeSet::new();
    for mask in 1u32..1 << ground.len() {
        let set: Vec<usize> = (0..ground.len()).filter(|&i| mask >> i & 1 == 1).collect();
        if !dependent(&set) {
            continue;
        }
        let minimal = (0..set.len()).all(|skip| {
            let sub: Vec<usize> = set.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &c)| c).collect();
            sub.is_empty() || !dependent(&sub)
        });
        if minimal {
            out.insert(set.iter().map(|&i| ground[i]).collect());
        }
    }
    out
}

/// `r(X) + r(E - X) - r(E)` with ranks of column sets of `[I | D]`
/// computed by plain elimination.
pub fn matroid_connectivity_brute_force(m: &BinaryMatroid, x: &[u32]) -> usize {
    let r = m.rank();
    let column = |label: u32| -> Vec<u8> {
        if let Some(i) = m.basis().iter().position(|&l| l == label) {
            (0..r).map(|k| (k == i) as u8).collect()
        } else {
            let j = m.cobasis().iter().position(|&l| l == label).unwrap();
            (0..r).map(|k| m.rep().get(k, j) as u8).collect()
        }
    };
    let rank_of = |labels: &[u32]| naive_rank(&labels.iter().map(|&l| column(l)).collect::<Vec<_>>());
    let ground = m.ground();
    let rest: Vec<u32> = ground.iter().copied().filter(|l| !x.contains(l)).collect();
    rank_of(x) + rank_of(&rest) - rank_of(&ground)
}

/// Cut-rank from the definition, via [`naive_rank`].
pub fn cut_rank_brute_force(g: &Graph, x: &[usize]) -> usize {
    let n = g.n();
    let outside: Vec<usize> = (0..n).filter(|v| !x.contains(v)).collect();
    let rows: Vec<Vec<u8>> = x
        .iter()
        .map(|&u| outside.iter().map(|&v| g.has_edge(u, v) as u8).collect())
        .collect();
    naive_rank(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_sanity() {
        assert_eq!(naive_rank(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]), 2);
        assert!(has_biclique(&BiGraph::complete(2, 3), 2, 3));
        assert!(has_biclique(&BiGraph::complete(3, 2), 2, 3));
        assert!(!has_biclique(&BiGraph::complete(4, 4), 2, 5));
        assert_eq!(vertex_connectivity_brute_force(&Graph::cycle(5)), 2);
        assert_eq!(vertex_connectivity_brute_force(&Graph::complete(4)), 3);
        assert_eq!(vertex_connectivity_brute_force(&Graph::new(2)), 0);
        assert_eq!(cut_rank_brute_force(&Graph::cycle(4), &[0, 1]), 2);
    }

    #[test]
    fn k4_has_seven_cycles() {
        let mut g = MultiGraph::new(4);
        for (l, (u, v)) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)].into_iter().enumerate() {
            g.add_edge(l as u32, u, v);
        }
        let cycles = cycles_brute_force(&g);
        assert_eq!(cycles.len(), 7);
    }
}

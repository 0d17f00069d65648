//! Enumeration of small graphs up to isomorphism.

use std::collections::BTreeMap;

use crate::graph::{is_c4_free, Graph};
use crate::pivot::{canonical_form, CanonicalForm};

/// Canonical string of `t` rooted at `root` (AHU encoding).
fn rooted_code(t: &Graph, root: usize, parent: usize) -> String {
    let mut children: Vec<String> = t
        .neighbors(root)
        .filter(|&c| c != parent)
        .map(|c| rooted_code(t, c, root))
        .collect();
    children.sort_unstable();
    format!("({})", children.concat())
}

/// Centres of a tree: the one or two vertices left after repeatedly
/// stripping all leaves.
fn centres(t: &Graph) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for u in t.neighbors(leaf) {
                if degree[u] > 1 {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Isomorphism-invariant code of a free tree.
pub fn tree_code(t: &Graph) -> String {
    centres(t)
        .into_iter()
        .map(|c| rooted_code(t, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

/// One representative of every isomorphism class of trees with `edges`
/// edges, in a fixed order.
pub fn free_trees(edges: usize) -> Vec<Graph> {
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    let single = Graph::new(1);
    level.insert(tree_code(&single), single);
    for size in 1..=edges {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for t in level.values() {
            for v in 0..t.n() {
                let mut grown = Graph::new(size + 1);
                for (a, b) in t.edges() {
                    grown.add_edge(a, b);
                }
                grown.add_edge(v, size);
                next.entry(tree_code(&grown)).or_insert(grown);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

/// One representative of every isomorphism class of `C4`-free graphs on
/// `n` vertices, for each `n` in `1..=max_n`, grouped by `n`.
///
/// Deleting a vertex keeps a graph `C4`-free, so every class on `n + 1`
/// vertices arises by adding a vertex to a class on `n` vertices.
pub fn c4_free_graphs(max_n: usize) -> Vec<Vec<Graph>> {
    let mut out: Vec<Vec<Graph>> = Vec::new();
    let mut level: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    if max_n == 0 {
        return out;
    }
    let single = Graph::new(1);
    level.insert(canonical_form(&single), single);
    out.push(level.values().cloned().collect());
    for n in 1..max_n {
        let mut next: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for g in level.values() {
            for mask in 0u64..1 << n {
                let mut grown = Graph::new(n + 1);
                for (a, b) in g.edges() {
                    grown.add_edge(a, b);
                }
                for v in 0..n {
                    if mask >> v & 1 == 1 {
                        grown.add_edge(v, n);
                    }
                }
                if is_c4_free(&grown) {
                    next.entry(canonical_form(&grown)).or_insert(grown);
                }
            }
        }
        level = next;
        out.push(level.values().cloned().collect());
    }
    out
}

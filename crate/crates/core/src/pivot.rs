//! Graph pivots, pivot orbits, isomorphism, and bounded pivot-minor search.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::BitIter;
use crate::graph::Graph;

/// Pivot the edge `xy`.
///
/// With `V1 = N(x) - N(y) - y`, `V2 = N(y) - N(x) - x` and `V3 = N(x) & N(y)`,
/// every pair between `V1`/`V2`, `V2`/`V3` and `V3`/`V1` is complemented and
/// then the labels `x` and `y` are exchanged.
pub fn pivot(g: &Graph, x: usize, y: usize) -> Result<Graph> {
    let n = g.n();
    if x >= n || y >= n || !g.has_edge(x, y) {
        return Err(Error::NotAnEdge { x, y });
    }
    let nx: Vec<bool> = (0..n).map(|v| g.has_edge(x, v)).collect();
    let ny: Vec<bool> = (0..n).map(|v| g.has_edge(y, v)).collect();
    let region = |v: usize| -> Option<u8> {
        match (nx[v], ny[v]) {
            (true, false) if v != y => Some(1),
            (false, true) if v != x => Some(2),
            (true, true) => Some(3),
            _ => None,
        }
    };
    let regions: Vec<Option<u8>> = (0..n).map(region).collect();
    let mut out = g.clone();
    for u in 0..n {
        let Some(ru) = regions[u] else { continue };
        for v in u + 1..n {
            match regions[v] {
                Some(rv) if rv != ru => out.toggle_edge(u, v),
                _ => {}
            }
        }
    }
    out.swap_labels(x, y);
    Ok(out)
}

/// All labelled graphs reachable from `g` by sequences of pivots, in
/// breadth-first discovery order (starting with `g` itself).
pub fn pivot_orbit(g: &Graph, max_size: usize) -> Result<Vec<Graph>> {
    let mut seen: HashSet<Graph> = HashSet::from([g.clone()]);
    let mut order = vec![g.clone()];
    let mut head = 0;
    while head < order.len() {
        let current = order[head].clone();
        head += 1;
        for (x, y) in current.edges() {
            let next = pivot(&current, x, y)?;
            if seen.insert(next.clone()) {
                if order.len() == max_size {
                    return Err(Error::OrbitBudgetExceeded { limit: max_size });
                }
                order.push(next);
            }
        }
    }
    Ok(order)
}

/// Vertex colouring by iterated neighbourhood refinement, starting from
/// degrees. Colour names depend only on the isomorphism class, so two
/// isomorphic graphs receive the same multiset of colours.
fn refine_colours(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut colours: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let mut classes = distinct(&colours);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).map(|u| colours[u]).collect();
                nb.sort_unstable();
                (colours[v], nb)
            })
            .collect();
        let mut names = sigs.clone();
        names.sort();
        names.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| names.binary_search(s).unwrap() as u32)
            .collect();
        let next_classes = names.len();
        colours = next;
        if next_classes == classes {
            return colours;
        }
        classes = next_classes;
    }
}

fn distinct(xs: &[u32]) -> usize {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Canonical form of a graph on at most 64 vertices: the refined colour
/// sequence together with the lexicographically least adjacency encoding
/// over all vertex orders that list colour classes in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    colours: Vec<u32>,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The canonical representative as a graph.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for (i, &row) in self.rows.iter().enumerate() {
            for j in BitIter(row) {
                g.add_edge(i, j);
            }
        }
        g
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    assert!(n <= 64, "canonical forms support at most 64 vertices");
    let colours = refine_colours(g);
    let mut slot_colour = colours.clone();
    slot_colour.sort_unstable();
    let masks: Vec<u64> = (0..n).map(|v| g.neighbor_mask(v)).collect();
    // swapping two twins is an automorphism, so only the least unused twin
    // of a class needs to be tried at each depth
    let earlier_twins: Vec<u64> = (0..n)
        .map(|v| {
            (0..v)
                .filter(|&u| colours[u] == colours[v] && masks[u] & !(1 << v) == masks[v] & !(1 << u))
                .fold(0u64, |m, u| m | 1 << u)
        })
        .collect();
    let mut search = CanonSearch {
        masks: &masks,
        earlier_twins: &earlier_twins,
        colours: &colours,
        slot_colour: &slot_colour,
        order: Vec::with_capacity(n),
        rows: Vec::with_capacity(n),
        best: None,
    };
    search.descend(0);
    let rows = search.best.unwrap_or_default();
    CanonicalForm {
        n,
        colours: slot_colour,
        rows,
    }
}

struct CanonSearch<'a> {
    masks: &'a [u64],
    earlier_twins: &'a [u64],
    colours: &'a [u32],
    slot_colour: &'a [u32],
    order: Vec<usize>,
    rows: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl CanonSearch<'_> {
    fn descend(&mut self, used: u64) {
        let depth = self.order.len();
        if depth == self.masks.len() {
            if self.best.as_ref().is_none_or(|b| self.rows < *b) {
                self.best = Some(self.rows.clone());
            }
            return;
        }
        for v in 0..self.masks.len() {
            if used >> v & 1 == 1
                || self.colours[v] != self.slot_colour[depth]
                || self.earlier_twins[v] & !used != 0
            {
                continue;
            }
            let row = self
                .order
                .iter()
                .enumerate()
                .filter(|&(_, &u)| self.masks[v] >> u & 1 == 1)
                .fold(0u64, |acc, (j, _)| acc | 1 << j);
            self.rows.push(row);
            let worse = self
                .best
                .as_ref()
                .is_some_and(|b| self.rows[..] > b[..=depth]);
            if !worse {
                self.order.push(v);
                self.descend(used | 1 << v);
                self.order.pop();
            }
            self.rows.pop();
        }
    }
}

/// Up to this many vertices isomorphism is decided by canonical forms;
/// larger graphs use a colour-guided backtracking matcher.
const CANONICAL_LIMIT: usize = 10;

/// Exact isomorphism test.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    find_isomorphism(g1, g2).is_some()
}

/// A bijection `map` with `g1.has_edge(u, v) == g2.has_edge(map[u], map[v])`.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    let n = g1.n();
    if n != g2.n() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let mut d1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return None;
    }
    assert!(n <= 64, "isomorphism testing supports at most 64 vertices");
    if n <= CANONICAL_LIMIT && canonical_form(g1) != canonical_form(g2) {
        return None;
    }
    let c1 = refine_colours(g1);
    let c2 = refine_colours(g2);
    let (mut s1, mut s2) = (c1.clone(), c2.clone());
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return None;
    }
    // map vertices of g1 in BFS order so each new vertex is constrained by mapped neighbours
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for s in 0..n {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for v in g1.neighbors(u) {
                if !placed[v] {
                    placed[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let m1: Vec<u64> = (0..n).map(|v| g1.neighbor_mask(v)).collect();
    let m2: Vec<u64> = (0..n).map(|v| g2.neighbor_mask(v)).collect();
    if match_from(0, &order, &m1, &m2, &c1, &c2, &mut map, 0) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn match_from(
    depth: usize,
    order: &[usize],
    m1: &[u64],
    m2: &[u64],
    c1: &[u32],
    c2: &[u32],
    map: &mut [usize],
    used: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for w in 0..m2.len() {
        if used >> w & 1 == 1 || c1[u] != c2[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&p| (m1[u] >> p & 1) == (m2[w] >> map[p] & 1));
        if !consistent {
            continue;
        }
        map[u] = w;
        if match_from(depth + 1, order, m1, m2, c1, c2, map, used | 1 << w) {
            return true;
        }
        map[u] = usize::MAX;
    }
    false
}

/// One step of a pivot-minor witness, naming vertices by their labels in
/// the original graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotMinorStep {
    Pivot(usize, usize),
    Delete(usize),
}

impl fmt::Display for PivotMinorStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PivotMinorStep::Pivot(x, y) => write!(f, "pivot {x} {y}"),
            PivotMinorStep::Delete(v) => write!(f, "delete {v}"),
        }
    }
}

/// Replay a witness sequence on `g`, returning the resulting graph on the
/// surviving labels in increasing order.
pub fn apply_steps(g: &Graph, steps: &[PivotMinorStep]) -> Result<Graph> {
    let mut graph = g.clone();
    let mut labels: Vec<usize> = (0..g.n()).collect();
    let position = |labels: &[usize], v: usize| {
        labels
            .iter()
            .position(|&l| l == v)
            .ok_or(Error::IndexOutOfRange {
                index: v,
                bound: g.n(),
            })
    };
    for step in steps {
        match *step {
            PivotMinorStep::Pivot(x, y) => {
                let (px, py) = (position(&labels, x)?, position(&labels, y)?);
                graph = pivot(&graph, px, py).map_err(|_| Error::NotAnEdge { x, y })?;
            }
            PivotMinorStep::Delete(v) => {
                let pv = position(&labels, v)?;
                graph = graph.delete_vertex(pv);
                labels.remove(pv);
            }
        }
    }
    Ok(graph)
}

struct SearchNode {
    graph: Graph,
    labels: Vec<usize>,
    parent: usize,
    step: Option<PivotMinorStep>,
}

/// Decide whether `h` is a pivot-minor of `g` by breadth-first search over
/// interleaved pivots and deletions, deduplicating states by canonical form.
///
/// Returns `Ok(Some(steps))` with a witness sequence when found and
/// `Ok(None)` when the reachable state space is exhausted. If more than
/// `budget` distinct states would be stored the answer is unknown and
/// [`Error::SearchBudgetExceeded`] is returned.
pub fn is_pivot_minor(h: &Graph, g: &Graph, budget: usize) -> Result<Option<Vec<PivotMinorStep>>> {
    if h.n() > g.n() {
        return Ok(None);
    }
    let target = canonical_form(h);
    let start = canonical_form(g);
    if start == target {
        return Ok(Some(Vec::new()));
    }
    let mut seen: HashSet<CanonicalForm> = HashSet::from([start]);
    let mut nodes = vec![SearchNode {
        graph: g.clone(),
        labels: (0..g.n()).collect(),
        parent: usize::MAX,
        step: None,
    }];
    let mut head = 0;
    while head < nodes.len() {
        let idx = head;
        head += 1;
        let (graph, labels) = (nodes[idx].graph.clone(), nodes[idx].labels.clone());
        let mut successors: Vec<(Graph, Vec<usize>, PivotMinorStep)> = Vec::new();
        if graph.n() > h.n() {
            for v in 0..graph.n() {
                let mut l = labels.clone();
                l.remove(v);
                successors.push((graph.delete_vertex(v), l, PivotMinorStep::Delete(labels[v])));
            }
        }
        for (x, y) in graph.edges() {
            successors.push((
                pivot(&graph, x, y)?,
                labels.clone(),
                PivotMinorStep::Pivot(labels[x], labels[y]),
            ));
        }
        for (next, next_labels, step) in successors {
            let form = canonical_form(&next);
            if seen.contains(&form) {
                continue;
            }
            if form == target {
                let mut steps = vec![step];
                let mut at = idx;
                while let Some(s) = nodes[at].step {
                    steps.push(s);
                    at = nodes[at].parent;
                }
                steps.reverse();
                return Ok(Some(steps));
            }
            if seen.len() >= budget {
                return Err(Error::SearchBudgetExceeded { budget });
            }
            seen.insert(form);
            nodes.push(SearchNode {
                graph: next,
                labels: next_labels,
                parent: idx,
                step: Some(step),
            });
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{blow_up, BiGraph};

    #[test]
    fn pivot_examples() {
        let e = Graph::from_edges(2, &[(0, 1)]);
        assert_eq!(pivot(&e, 0, 1).unwrap(), e);
        let p3 = Graph::path(3);
        assert_eq!(
            pivot(&p3, 0, 1).unwrap(),
            Graph::from_edges(3, &[(0, 1), (0, 2)])
        );
        let p4 = Graph::path(4);
        for (x, y) in p4.edges() {
            assert_eq!(pivot(&pivot(&p4, x, y).unwrap(), x, y).unwrap(), p4);
        }
        assert_eq!(pivot(&p3, 0, 2), Err(Error::NotAnEdge { x: 0, y: 2 }));
    }

    #[test]
    fn pivot_complements_all_three_region_pairs() {
        // x=0, y=1; V1={2}, V2={3}, V3={4}
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 3), (0, 4), (1, 4)]);
        let p = pivot(&g, 0, 1).unwrap();
        // before the label swap: 2-3, 3-4, 2-4 added; swap then exchanges 0 and 1
        let expected = Graph::from_edges(
            5,
            &[(1, 0), (1, 2), (0, 3), (1, 4), (0, 4), (2, 3), (3, 4), (2, 4)],
        );
        assert_eq!(p, expected);
    }

    #[test]
    fn orbit_examples() {
        let e = Graph::from_edges(2, &[(0, 1)]);
        assert_eq!(pivot_orbit(&e, 10).unwrap().len(), 1);
        let orbit = pivot_orbit(&Graph::path(3), 10).unwrap();
        assert_eq!(
            orbit,
            vec![
                Graph::path(3),
                Graph::from_edges(3, &[(0, 1), (0, 2)]),
                Graph::from_edges(3, &[(0, 2), (1, 2)]),
            ]
        );
        assert_eq!(
            pivot_orbit(&Graph::path(3), 2),
            Err(Error::OrbitBudgetExceeded { limit: 2 })
        );
        for g in pivot_orbit(&Graph::cycle(6), 10_000).unwrap() {
            assert!(g.is_bipartite());
        }
    }

    #[test]
    fn isomorphism_examples() {
        let p3 = Graph::path(3);
        let relabelled = Graph::from_edges(3, &[(0, 2), (2, 1)]);
        assert!(are_isomorphic(&p3, &relabelled));
        assert!(!are_isomorphic(&p3, &Graph::complete(3)));
        let k22 = blow_up(&Graph::from_edges(2, &[(0, 1)]), 2).permute(&[3, 0, 2, 1]);
        assert!(!are_isomorphic(&Graph::cycle(6), &k22));
        // same degree sequence, different graphs
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(!are_isomorphic(&Graph::cycle(6), &two_triangles));
    }

    #[test]
    fn large_isomorphism_uses_matcher() {
        let b = blow_up(&Graph::cycle(6), 3);
        let perm: Vec<usize> = (0..18).map(|v| (v * 5 + 7) % 18).collect();
        let shuffled = b.permute(&perm);
        let map = find_isomorphism(&b, &shuffled).unwrap();
        for (u, v) in b.edges() {
            assert!(shuffled.has_edge(map[u], map[v]));
        }
        assert!(!are_isomorphic(&b, &BiGraph::complete(9, 9).to_graph()));
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]);
        let form = canonical_form(&g);
        for k in 1..6 {
            let perm: Vec<usize> = (0..6).map(|v| (v + k) % 6).collect();
            assert_eq!(canonical_form(&g.permute(&perm)), form);
        }
        assert!(are_isomorphic(&form.to_graph(), &g));
    }

    #[test]
    fn pivot_minor_examples() {
        let p4 = Graph::path(4);
        assert_eq!(is_pivot_minor(&p4, &p4, 100).unwrap(), Some(vec![]));
        let steps = is_pivot_minor(&Graph::path(3), &p4, 100).unwrap().unwrap();
        assert!(are_isomorphic(&apply_steps(&p4, &steps).unwrap(), &Graph::path(3)));
        assert_eq!(is_pivot_minor(&Graph::complete(3), &Graph::cycle(6), 10_000).unwrap(), None);
        assert!(matches!(
            is_pivot_minor(&Graph::complete(3), &Graph::cycle(6), 1),
            Err(Error::SearchBudgetExceeded { .. })
        ));
    }

    #[test]
    fn pivot_minor_witness_replays() {
        // C5 contains P4 after a pivot and a deletion; check the witness end to end
        let g = Graph::cycle(5);
        let h = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        match is_pivot_minor(&h, &g, 10_000).unwrap() {
            Some(steps) => assert!(are_isomorphic(&apply_steps(&g, &steps).unwrap(), &h)),
            None => {
                // confirm by exhaustive orbit + deletion that no witness exists
                for q in pivot_orbit(&g, 10_000).unwrap() {
                    for v in 0..5 {
                        assert!(!are_isomorphic(&q.delete_vertex(v), &h));
                    }
                }
            }
        }
    }
}

//! Simple graphs, bipartite graphs, and the subgraph and degree predicates
//! used throughout the crate.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::gf2::{BitIter, BitMatrix};
use crate::text::{parse_err, parse_num, Lines};

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: BitMatrix,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self {
            adj: BitMatrix::zeros(n, n),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.nrows()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.count_ones() / 2
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    /// Add the edge `uv`. Self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n() && v < self.n(), "vertex out of range");
        if u != v {
            self.adj.set(u, v, true);
            self.adj.set(v, u, true);
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj.set(u, v, false);
        self.adj.set(v, u, false);
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj.toggle(u, v);
            self.adj.toggle(v, u);
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj.row_weight(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj.row_ones(v)
    }

    /// Neighbourhood of `v` as a bit mask; only for graphs on at most 64 vertices.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj.row_mask(v)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// Induced subgraph on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph {
            adj: self.adj.submatrix(vertices, vertices),
        }
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Relabel: vertex `v` of `self` becomes vertex `perm[v]` of the result.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Exchange the labels of `x` and `y`.
    pub fn swap_labels(&mut self, x: usize, y: usize) {
        if x == y {
            return;
        }
        let n = self.n();
        let mut next = BitMatrix::zeros(n, n);
        let map = |v: usize| if v == x { y } else if v == y { x } else { v };
        for (u, v) in self.edges() {
            next.set(map(u), map(v), true);
            next.set(map(v), map(u), true);
        }
        self.adj = next;
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// A proper 2-colouring if one exists (`false` for the colour of each
    /// component's least vertex).
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for v in self.neighbors(u) {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count() + 1 == self.n() && self.is_connected()
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub(crate) fn parse_from(lines: &mut Lines<'_>) -> Result<Self> {
        let n = lines.header("graph", 1)?[0];
        let mut g = Graph::new(n);
        while let Some((line, text)) = lines.peek_line() {
            let fields: Vec<&str> = text.split_whitespace().collect();
            if fields.len() != 2 || fields[0].parse::<usize>().is_err() {
                break;
            }
            lines.next_line();
            let u: usize = parse_num(line, fields[0])?;
            let v: usize = parse_num(line, fields[1])?;
            if u >= n || v >= n {
                return Err(parse_err(line, "vertex out of range"));
            }
            if u == v {
                return Err(parse_err(line, "self-loops are not allowed"));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n(), self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph {}", self.n())?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = Lines::new(s);
        let g = Self::parse_from(&mut lines)?;
        if let Some((line, _)) = lines.next_line() {
            return Err(parse_err(line, "malformed edge line"));
        }
        Ok(g)
    }
}

/// Which side of a bipartite graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

/// A bipartite graph with sides `A` (rows) and `B` (columns) of its
/// biadjacency matrix. Each side carries labels; by default side `A` is
/// labelled `0..a` and side `B` is labelled `a..a+b`, matching [`BiGraph::to_graph`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiGraph {
    a_labels: Vec<u32>,
    b_labels: Vec<u32>,
    biadj: BitMatrix,
}

impl BiGraph {
    pub fn new(biadj: BitMatrix) -> Self {
        let a = biadj.nrows() as u32;
        let b = biadj.ncols() as u32;
        Self {
            a_labels: (0..a).collect(),
            b_labels: (a..a + b).collect(),
            biadj,
        }
    }

    pub fn with_labels(biadj: BitMatrix, a_labels: Vec<u32>, b_labels: Vec<u32>) -> Self {
        assert_eq!(a_labels.len(), biadj.nrows());
        assert_eq!(b_labels.len(), biadj.ncols());
        Self {
            a_labels,
            b_labels,
            biadj,
        }
    }

    pub fn complete(a: usize, b: usize) -> Self {
        Self::new(BitMatrix::ones(a, b))
    }

    pub fn edgeless(a: usize, b: usize) -> Self {
        Self::new(BitMatrix::zeros(a, b))
    }

    pub fn a(&self) -> usize {
        self.biadj.nrows()
    }

    pub fn b(&self) -> usize {
        self.biadj.ncols()
    }

    pub fn a_labels(&self) -> &[u32] {
        &self.a_labels
    }

    pub fn b_labels(&self) -> &[u32] {
        &self.b_labels
    }

    pub fn biadjacency(&self) -> &BitMatrix {
        &self.biadj
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.biadj.get(i, j)
    }

    pub fn edge_count(&self) -> usize {
        self.biadj.count_ones()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.a())
            .flat_map(|i| self.biadj.row_ones(i).map(move |j| (i, j)))
            .collect()
    }

    /// Same sides, every cross pair flipped.
    pub fn bipartite_complement(&self) -> BiGraph {
        BiGraph {
            a_labels: self.a_labels.clone(),
            b_labels: self.b_labels.clone(),
            biadj: self.biadj.complement(),
        }
    }

    /// Sides exchanged.
    pub fn swap_sides(&self) -> BiGraph {
        BiGraph {
            a_labels: self.b_labels.clone(),
            b_labels: self.a_labels.clone(),
            biadj: self.biadj.transpose(),
        }
    }

    /// The same graph as a [`Graph`] with side `A` on `0..a` and side `B` on `a..a+b`.
    pub fn to_graph(&self) -> Graph {
        let a = self.a();
        let mut g = Graph::new(a + self.b());
        for (i, j) in self.edges() {
            g.add_edge(i, a + j);
        }
        g
    }

    pub fn degree_a(&self, i: usize) -> usize {
        self.biadj.row_weight(i)
    }

    pub fn degree_b(&self, j: usize) -> usize {
        (0..self.a()).filter(|&i| self.biadj.get(i, j)).count()
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub(crate) fn parse_from(lines: &mut Lines<'_>) -> Result<Self> {
        let h = lines.header("bigraph", 2)?;
        let (a, b) = (h[0], h[1]);
        let mut m = BitMatrix::zeros(a, b);
        while let Some((line, text)) = lines.peek_line() {
            let fields: Vec<&str> = text.split_whitespace().collect();
            if fields.len() != 2 || fields[0].parse::<usize>().is_err() {
                break;
            }
            lines.next_line();
            let i: usize = parse_num(line, fields[0])?;
            let j: usize = parse_num(line, fields[1])?;
            if i >= a || j >= b {
                return Err(parse_err(line, "vertex out of range"));
            }
            m.set(i, j, true);
        }
        Ok(BiGraph::new(m))
    }
}

impl fmt::Debug for BiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiGraph({}+{}, {:?})", self.a(), self.b(), self.edges())
    }
}

impl fmt::Display for BiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bigraph {} {}", self.a(), self.b())?;
        for (i, j) in self.edges() {
            writeln!(f, "{i} {j}")?;
        }
        Ok(())
    }
}

impl FromStr for BiGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = Lines::new(s);
        let g = Self::parse_from(&mut lines)?;
        if let Some((line, _)) = lines.next_line() {
            return Err(parse_err(line, "malformed edge line"));
        }
        Ok(g)
    }
}

pub fn bipartite_complement(g: &BiGraph) -> BiGraph {
    g.bipartite_complement()
}

/// A complete bipartite subgraph `K_{s,t}`: `s_set` lies on `s_side`, `t_set`
/// on the other side. Indices are positions within their side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biclique {
    pub s_side: Side,
    pub s_set: Vec<usize>,
    pub t_set: Vec<usize>,
}

impl Biclique {
    /// Whether every `s_set x t_set` pair is an edge of `g`.
    pub fn is_valid_in(&self, g: &BiGraph) -> bool {
        self.s_set.iter().all(|&u| {
            self.t_set.iter().all(|&w| match self.s_side {
                Side::A => g.has_edge(u, w),
                Side::B => g.has_edge(w, u),
            })
        })
    }
}

/// Search for `K_{s,t}` in either orientation.
///
/// For each orientation the `s`-subsets of the side that should carry `s`
/// are enumerated (skipping vertices of degree below `t`), and the common
/// neighbourhood is checked for at least `t` vertices. Side `A` carrying `s`
/// is tried first.
pub fn find_complete_bipartite(g: &BiGraph, s: usize, t: usize) -> Option<Biclique> {
    let (s, t) = if s <= t { (s, t) } else { (t, s) };
    let transposed = g.biadj.transpose();
    search_one_side(&g.biadj, g.b(), s, t)
        .map(|(s_set, t_set)| Biclique {
            s_side: Side::A,
            s_set,
            t_set,
        })
        .or_else(|| {
            search_one_side(&transposed, g.a(), s, t).map(|(s_set, t_set)| Biclique {
                s_side: Side::B,
                s_set,
                t_set,
            })
        })
}

fn search_one_side(m: &BitMatrix, other: usize, s: usize, t: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    if t > other || s > m.nrows() {
        return None;
    }
    let candidates: Vec<usize> = (0..m.nrows()).filter(|&i| m.row_weight(i) >= t).collect();
    if candidates.len() < s {
        return None;
    }
    let full = BitMatrix::ones(1, other).row_words(0).to_vec();
    let mut chosen = Vec::with_capacity(s);
    extend_biclique(m, &candidates, 0, s, t, &full, &mut chosen).map(|common| {
        let t_set: Vec<usize> = common_ones(&common).take(t).collect();
        (chosen, t_set)
    })
}

fn common_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words
        .iter()
        .enumerate()
        .flat_map(|(w, &word)| BitIter(word).map(move |b| w * 64 + b))
}

fn extend_biclique(
    m: &BitMatrix,
    candidates: &[usize],
    start: usize,
    s: usize,
    t: usize,
    common: &[u64],
    chosen: &mut Vec<usize>,
) -> Option<Vec<u64>> {
    if chosen.len() == s {
        return Some(common.to_vec());
    }
    let need = s - chosen.len();
    for idx in start..candidates.len() {
        if candidates.len() - idx < need {
            break;
        }
        let v = candidates[idx];
        let next: Vec<u64> = common
            .iter()
            .zip(m.row_words(v))
            .map(|(a, b)| a & b)
            .collect();
        let size: usize = next.iter().map(|w| w.count_ones() as usize).sum();
        if size < t {
            continue;
        }
        chosen.push(v);
        if let Some(found) = extend_biclique(m, candidates, idx + 1, s, t, &next, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// True iff no two distinct vertices share two or more neighbours.
pub fn is_c4_free(g: &Graph) -> bool {
    let n = g.n();
    for u in 0..n {
        let nu = g.adjacency().row_words(u);
        for v in u + 1..n {
            let nv = g.adjacency().row_words(v);
            let common: u32 = nu.iter().zip(nv).map(|(a, b)| (a & b).count_ones()).sum();
            if common >= 2 {
                return false;
            }
        }
    }
    true
}

/// Replace each vertex `v` by the independent set `v*k .. v*k + k`, joining
/// all copies of adjacent vertices.
pub fn blow_up(g: &Graph, k: usize) -> Graph {
    assert!(k >= 1, "blow-up factor must be positive");
    let mut out = Graph::new(g.n() * k);
    for (u, v) in g.edges() {
        for a in 0..k {
            for b in 0..k {
                out.add_edge(u * k + a, v * k + b);
            }
        }
    }
    out
}

/// Size of a minimum vertex cut; `n - 1` for complete graphs.
///
/// Computed as the minimum, over non-adjacent pairs, of the maximum number
/// of internally vertex-disjoint paths (unit-capacity flow on the
/// vertex-split digraph).
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    let mut best = n.saturating_sub(1);
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            best = best.min(local_vertex_connectivity(g, u, v, best));
            if best == 0 {
                return 0;
            }
        }
    }
    best
}

/// Maximum number of internally disjoint `s`-`t` paths, capped at `limit`.
fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    // node 2v = v_in, 2v + 1 = v_out; arc v_in -> v_out has capacity 1
    // except at the terminals; each edge uv gives u_out -> v_in and v_out -> u_in
    let n = g.n();
    let nodes = 2 * n;
    let mut cap = vec![vec![0u8; nodes]; nodes];
    for v in 0..n {
        cap[2 * v][2 * v + 1] = if v == s || v == t { u8::MAX } else { 1 };
    }
    for (u, v) in g.edges() {
        cap[2 * u + 1][2 * v] = 1;
        cap[2 * v + 1][2 * u] = 1;
    }
    let (src, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < limit {
        let mut prev = vec![usize::MAX; nodes];
        prev[src] = src;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..nodes {
                if cap[x][y] > 0 && prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != src {
            let x = prev[y];
            cap[x][y] -= 1;
            cap[y][x] = cap[y][x].saturating_add(1);
            y = x;
        }
        flow += 1;
    }
    flow
}

/// Minimum, maximum and exact average degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub max_degree: usize,
    pub average_degree: Ratio<u64>,
}

impl DegreeStats {
    fn from_degrees(degrees: impl IntoIterator<Item = usize>) -> Self {
        let (mut min, mut max, mut sum, mut count) = (usize::MAX, 0, 0u64, 0u64);
        for d in degrees {
            min = min.min(d);
            max = max.max(d);
            sum += d as u64;
            count += 1;
        }
        if count == 0 {
            return DegreeStats {
                min_degree: 0,
                max_degree: 0,
                average_degree: Ratio::from_integer(0),
            };
        }
        DegreeStats {
            min_degree: min,
            max_degree: max,
            average_degree: Ratio::new(sum, count),
        }
    }
}

impl fmt::Display for DegreeStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "min={} max={} average={}",
            self.min_degree, self.max_degree, self.average_degree
        )
    }
}

/// Anything with a degree sequence.
pub trait Degrees {
    fn degree_sequence(&self) -> Vec<usize>;

    fn degree_stats(&self) -> DegreeStats {
        DegreeStats::from_degrees(self.degree_sequence())
    }
}

impl Degrees for Graph {
    fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }
}

impl Degrees for BiGraph {
    fn degree_sequence(&self) -> Vec<usize> {
        (0..self.a())
            .map(|i| self.degree_a(i))
            .chain((0..self.b()).map(|j| self.degree_b(j)))
            .collect()
    }
}

pub fn degree_stats<G: Degrees + ?Sized>(g: &G) -> DegreeStats {
    g.degree_stats()
}

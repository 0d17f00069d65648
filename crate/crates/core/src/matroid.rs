//! Binary matroids given by a standard representation `[I | D]`.
//!
//! Rows of `D` are indexed by the basis, columns by the remaining elements.
//! Elements carry `u32` labels; positions in [`BinaryMatroid::ground`]
//! (labels in increasing order) are used whenever elements must be numbered
//! `0..|E|`, e.g. as vertices of the fundamental graph.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::cutrank::{least_separation, subset_cap};
use crate::error::{Error, Result};
use crate::gf2::{BitIter, BitMatrix};
use crate::graph::{BiGraph, Graph};
use crate::text::{parse_err, parse_num, Lines};

/// Largest ground set for which circuits are enumerated.
pub const CIRCUIT_CAP: usize = 16;

/// One edge of a [`MultiGraph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub label: u32,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// A labelled multigraph; loops and parallel edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    /// Add an edge; panics on a repeated label or an out-of-range endpoint.
    pub fn add_edge(&mut self, label: u32, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "endpoint out of range");
        assert!(self.edge(label).is_none(), "duplicate edge label {label}");
        self.edges.push(Edge { label, u, v });
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, label: u32) -> Option<&Edge> {
        self.edges.iter().find(|e| e.label == label)
    }

    pub fn is_connected(&self) -> bool {
        let mut dsu = Dsu::new(self.n);
        for e in &self.edges {
            dsu.union(e.u, e.v);
        }
        (0..self.n).all(|v| dsu.find(v) == dsu.find(0)) || self.n == 0
    }

    /// Delete the edge `label`.
    pub fn delete(&self, label: u32) -> MultiGraph {
        MultiGraph {
            n: self.n,
            edges: self.edges.iter().copied().filter(|e| e.label != label).collect(),
        }
    }

    /// Contract the edge `label`, merging its endpoints; a loop is deleted.
    pub fn contract(&self, label: u32) -> MultiGraph {
        let Some(e) = self.edge(label).copied() else {
            return self.clone();
        };
        if e.is_loop() {
            return self.delete(label);
        }
        // vertex e.v disappears; vertices above it shift down
        let (keep, gone) = (e.u.min(e.v), e.u.max(e.v));
        let map = |w: usize| {
            if w == gone {
                keep
            } else if w > gone {
                w - 1
            } else {
                w
            }
        };
        MultiGraph {
            n: self.n - 1,
            edges: self
                .edges
                .iter()
                .filter(|f| f.label != label)
                .map(|f| Edge {
                    label: f.label,
                    u: map(f.u),
                    v: map(f.v),
                })
                .collect(),
        }
    }

    /// Write in the multigraph text format, marking edges of `tree` as `tree`.
    pub fn to_text(&self, tree: &SpanningTree) -> String {
        let mut out = format!("multigraph {}\n", self.n);
        for e in &self.edges {
            let kind = if tree.contains(e.label) { "tree" } else { "cotree" };
            out.push_str(&format!("{} {} {} {}\n", e.u, e.v, kind, e.label));
        }
        out
    }

    /// Parse the multigraph text format.
    pub fn parse(text: &str) -> Result<(MultiGraph, SpanningTree)> {
        let mut lines = Lines::new(text);
        let parsed = Self::parse_from(&mut lines)?;
        if let Some((line, _)) = lines.next_line() {
            return Err(parse_err(line, "malformed edge line"));
        }
        Ok(parsed)
    }

    pub(crate) fn parse_from(lines: &mut Lines<'_>) -> Result<(MultiGraph, SpanningTree)> {
        let n = lines.header("multigraph", 1)?[0];
        let mut g = MultiGraph::new(n);
        let mut tree = BTreeSet::new();
        while let Some((line, text)) = lines.peek_line() {
            let f: Vec<&str> = text.split_whitespace().collect();
            if f.len() != 4 || f[0].parse::<usize>().is_err() {
                break;
            }
            lines.next_line();
            let u: usize = parse_num(line, f[0])?;
            let v: usize = parse_num(line, f[1])?;
            let label: u32 = parse_num(line, f[3])?;
            if u >= n || v >= n {
                return Err(parse_err(line, "endpoint out of range"));
            }
            if g.edge(label).is_some() {
                return Err(parse_err(line, format!("duplicate edge label {label}")));
            }
            match f[2] {
                "tree" => {
                    tree.insert(label);
                }
                "cotree" => {}
                other => return Err(parse_err(line, format!("expected tree|cotree, got {other:?}"))),
            }
            g.add_edge(label, u, v);
        }
        Ok((g, SpanningTree::new(tree)))
    }
}

/// A set of edge labels meant to form a spanning tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpanningTree {
    tree_edges: BTreeSet<u32>,
}

impl SpanningTree {
    pub fn new(tree_edges: impl IntoIterator<Item = u32>) -> Self {
        Self {
            tree_edges: tree_edges.into_iter().collect(),
        }
    }

    pub fn contains(&self, label: u32) -> bool {
        self.tree_edges.contains(&label)
    }

    pub fn edges(&self) -> &BTreeSet<u32> {
        &self.tree_edges
    }

    /// Check that this is a spanning tree of `g`.
    pub fn validate(&self, g: &MultiGraph) -> Result<()> {
        if !g.is_connected() {
            return Err(Error::NotConnected);
        }
        let mut dsu = Dsu::new(g.n());
        for &label in &self.tree_edges {
            let e = g
                .edge(label)
                .ok_or_else(|| Error::NotASpanningTree(format!("edge {label} not in graph")))?;
            if !dsu.union(e.u, e.v) {
                return Err(Error::NotASpanningTree(format!("edge {label} closes a cycle")));
            }
        }
        if self.tree_edges.len() + 1 != g.n().max(1) {
            return Err(Error::NotASpanningTree(format!(
                "{} tree edges for {} vertices",
                self.tree_edges.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, v: usize) -> usize {
        let mut r = v;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut w = v;
        while self.parent[w] != r {
            let next = self.parent[w];
            self.parent[w] = r;
            w = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Fundamental matrix of `g` with respect to `tree`: rows are tree edges and
/// columns non-tree edges, both in edge-list order; entry `(i, j)` is set iff
/// tree edge `i` lies on the cycle closed by non-tree edge `j`.
///
/// Each cycle is found by walking both endpoints of the non-tree edge up the
/// tree (rooted at vertex 0) to their lowest common ancestor.
pub fn fundamental_matrix(g: &MultiGraph, tree: &SpanningTree) -> Result<(Vec<u32>, Vec<u32>, BitMatrix)> {
    tree.validate(g)?;
    let n = g.n();
    let tree_labels: Vec<u32> = g.edges().iter().filter(|e| tree.contains(e.label)).map(|e| e.label).collect();
    let cotree_labels: Vec<u32> = g.edges().iter().filter(|e| !tree.contains(e.label)).map(|e| e.label).collect();
    let row_of = |label: u32| tree_labels.iter().position(|&l| l == label).unwrap();

    let mut incident: Vec<Vec<(usize, u32)>> = vec![Vec::new(); n];
    for e in g.edges().iter().filter(|e| tree.contains(e.label)) {
        incident[e.u].push((e.v, e.label));
        incident[e.v].push((e.u, e.label));
    }
    let mut parent = vec![usize::MAX; n];
    let mut parent_edge = vec![u32::MAX; n];
    let mut depth = vec![0usize; n];
    if n > 0 {
        parent[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for &(v, label) in &incident[u] {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    parent_edge[v] = label;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }

    let mut d = BitMatrix::zeros(tree_labels.len(), cotree_labels.len());
    for (j, &label) in cotree_labels.iter().enumerate() {
        let e = g.edge(label).unwrap();
        let (mut a, mut b) = (e.u, e.v);
        while a != b {
            if depth[a] < depth[b] {
                std::mem::swap(&mut a, &mut b);
            }
            d.set(row_of(parent_edge[a]), j, true);
            a = parent[a];
        }
    }
    Ok((tree_labels, cotree_labels, d))
}

/// A binary matroid with standard representation `[I | rep]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatroid {
    basis: Vec<u32>,
    cobasis: Vec<u32>,
    rep: BitMatrix,
}

impl BinaryMatroid {
    /// Build from row labels, column labels and `D`. Labels must be distinct.
    pub fn new(basis: Vec<u32>, cobasis: Vec<u32>, rep: BitMatrix) -> Result<Self> {
        if basis.len() != rep.nrows() || cobasis.len() != rep.ncols() {
            return Err(Error::DimensionMismatch {
                left_rows: basis.len(),
                left_cols: cobasis.len(),
                right_rows: rep.nrows(),
                right_cols: rep.ncols(),
            });
        }
        let mut all: Vec<u32> = basis.iter().chain(&cobasis).copied().collect();
        all.sort_unstable();
        if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!("duplicate element label {}", w[0])));
        }
        let m = Self { basis, cobasis, rep };
        debug_assert_eq!(m.full_matrix().rank(), m.basis.len());
        Ok(m)
    }

    /// Elements `0..r` as the basis, `r..r+c` as the rest.
    pub fn from_rep(rep: BitMatrix) -> Self {
        let r = rep.nrows() as u32;
        let c = rep.ncols() as u32;
        Self {
            basis: (0..r).collect(),
            cobasis: (r..r + c).collect(),
            rep,
        }
    }

    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    pub fn cobasis(&self) -> &[u32] {
        &self.cobasis
    }

    pub fn rep(&self) -> &BitMatrix {
        &self.rep
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn len(&self) -> usize {
        self.basis.len() + self.cobasis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Element labels in increasing order.
    pub fn ground(&self) -> Vec<u32> {
        let mut g: Vec<u32> = self.basis.iter().chain(&self.cobasis).copied().collect();
        g.sort_unstable();
        g
    }

    pub fn contains(&self, label: u32) -> bool {
        self.basis.contains(&label) || self.cobasis.contains(&label)
    }

    fn row_of(&self, label: u32) -> Option<usize> {
        self.basis.iter().position(|&l| l == label)
    }

    fn col_of(&self, label: u32) -> Option<usize> {
        self.cobasis.iter().position(|&l| l == label)
    }

    /// The full `r x |E|` matrix `[I | D]` with columns in ground order.
    pub fn full_matrix(&self) -> BitMatrix {
        let ground = self.ground();
        let mut a = BitMatrix::zeros(self.rank(), ground.len());
        for (c, &label) in ground.iter().enumerate() {
            if let Some(r) = self.row_of(label) {
                a.set(r, c, true);
            } else {
                let j = self.col_of(label).unwrap();
                for i in 0..self.rank() {
                    if self.rep.get(i, j) {
                        a.set(i, c, true);
                    }
                }
            }
        }
        a
    }

    /// The fundamental graph as a bipartite graph between basis and cobasis,
    /// sides labelled by element.
    pub fn fundamental_bigraph(&self) -> BiGraph {
        BiGraph::with_labels(self.rep.clone(), self.basis.clone(), self.cobasis.clone())
    }

    /// The fundamental graph on vertex set `0..|E|`, vertex `i` being the
    /// `i`-th element of [`ground`](Self::ground).
    pub fn fundamental_graph(&self) -> Graph {
        let ground = self.ground();
        let pos = |l: u32| ground.binary_search(&l).unwrap();
        let mut g = Graph::new(ground.len());
        for (i, &x) in self.basis.iter().enumerate() {
            for j in self.rep.row_ones(i) {
                g.add_edge(pos(x), pos(self.cobasis[j]));
            }
        }
        g
    }

    /// Exchange basis element `x` for non-basis element `y`.
    pub fn change_basis(&self, x: u32, y: u32) -> Result<BinaryMatroid> {
        let r = self.row_of(x).ok_or(Error::ElementNotFound(x))?;
        let c = self.col_of(y).ok_or(Error::ElementNotFound(y))?;
        let rep = self.rep.matrix_pivot(r, c)?;
        let mut basis = self.basis.clone();
        let mut cobasis = self.cobasis.clone();
        basis[r] = y;
        cobasis[c] = x;
        Ok(BinaryMatroid { basis, cobasis, rep })
    }

    /// All circuits as sorted label lists.
    ///
    /// Every non-zero vector of the cycle space (spanned by the fundamental
    /// circuits) is enumerated; its support is a circuit exactly when the
    /// columns it selects have rank one less than its size.
    pub fn circuits(&self) -> Result<BTreeSet<Vec<u32>>> {
        let m = self.len();
        if m > CIRCUIT_CAP {
            return Err(Error::GroundSetTooLarge { size: m, cap: CIRCUIT_CAP });
        }
        let ground = self.ground();
        let pos = |l: u32| ground.binary_search(&l).unwrap();
        let a = self.full_matrix();
        let columns: Vec<u64> = (0..m)
            .map(|c| (0..self.rank()).filter(|&i| a.get(i, c)).fold(0u64, |w, i| w | 1 << i))
            .collect();
        let fundamental: Vec<u64> = (0..self.cobasis.len())
            .map(|j| {
                let mut v = 1u64 << pos(self.cobasis[j]);
                for i in 0..self.rank() {
                    if self.rep.get(i, j) {
                        v |= 1 << pos(self.basis[i]);
                    }
                }
                v
            })
            .collect();
        let mut out = BTreeSet::new();
        for combo in 1u64..1 << fundamental.len() {
            let support = BitIter(combo).fold(0u64, |acc, j| acc ^ fundamental[j]);
            let size = support.count_ones() as usize;
            let r = crate::gf2::rank_of_words(BitIter(support).map(|c| columns[c]));
            if r + 1 == size {
                out.insert(BitIter(support).map(|c| ground[c]).collect());
            }
        }
        Ok(out)
    }

    /// Delete and contract the given elements.
    ///
    /// A non-basis element to be contracted is first pivoted into the basis
    /// using the least-labelled basis element with a one in its column; a
    /// basis element to be deleted is pivoted out using the least-labelled
    /// non-basis element with a one in its row. Contracting a loop deletes
    /// it and deleting a coloop contracts it.
    pub fn minor(&self, deletions: &[u32], contractions: &[u32]) -> Result<BinaryMatroid> {
        for &e in deletions.iter().chain(contractions) {
            if !self.contains(e) {
                return Err(Error::ElementNotFound(e));
            }
        }
        if let Some(&e) = deletions.iter().find(|e| contractions.contains(e)) {
            return Err(Error::MinorSetsOverlap(e));
        }
        let mut m = self.clone();
        for &e in contractions {
            m = m.contract_one(e);
        }
        for &e in deletions {
            m = m.delete_one(e);
        }
        Ok(m)
    }

    fn contract_one(&self, e: u32) -> BinaryMatroid {
        if let Some(c) = self.col_of(e) {
            let pivot_row = (0..self.rank())
                .filter(|&i| self.rep.get(i, c))
                .min_by_key(|&i| self.basis[i]);
            match pivot_row {
                None => return self.drop_col(c),
                Some(r) => {
                    let swapped = self.change_basis(self.basis[r], e).expect("unit entry");
                    return swapped.drop_row(r);
                }
            }
        }
        let r = self.row_of(e).expect("element present");
        self.drop_row(r)
    }

    fn delete_one(&self, e: u32) -> BinaryMatroid {
        if let Some(r) = self.row_of(e) {
            let pivot_col = self.rep.row_ones(r).min_by_key(|&j| self.cobasis[j]);
            match pivot_col {
                None => return self.drop_row(r),
                Some(c) => {
                    let swapped = self.change_basis(e, self.cobasis[c]).expect("unit entry");
                    return swapped.drop_col(c);
                }
            }
        }
        let c = self.col_of(e).expect("element present");
        self.drop_col(c)
    }

    fn drop_row(&self, r: usize) -> BinaryMatroid {
        let mut basis = self.basis.clone();
        basis.remove(r);
        BinaryMatroid {
            basis,
            cobasis: self.cobasis.clone(),
            rep: self.rep.without_row(r),
        }
    }

    fn drop_col(&self, c: usize) -> BinaryMatroid {
        let mut cobasis = self.cobasis.clone();
        cobasis.remove(c);
        BinaryMatroid {
            basis: self.basis.clone(),
            cobasis,
            rep: self.rep.without_col(c),
        }
    }

    /// `rk D[X_B, Y_C] + rk D[Y_B, X_C]`.
    pub fn lambda(&self, x: &[u32]) -> Result<usize> {
        for &e in x {
            if !self.contains(e) {
                return Err(Error::ElementNotFound(e));
            }
        }
        let inside = |l: &u32| x.contains(l);
        Ok(self.lambda_by(inside))
    }

    fn lambda_by(&self, inside: impl Fn(&u32) -> bool) -> usize {
        let split = |labels: &[u32]| -> (Vec<usize>, Vec<usize>) {
            (0..labels.len()).partition(|&i| inside(&labels[i]))
        };
        let (xb, yb) = split(&self.basis);
        let (xc, yc) = split(&self.cobasis);
        self.rep.submatrix(&xb, &yc).rank() + self.rep.submatrix(&yb, &xc).rank()
    }

    /// Search for `X` with `|X|, |E - X| >= l` and `lambda(X) < l` for some
    /// `l` in `1..k`. Returns `None` when the matroid has connectivity `k`.
    ///
    /// Sets are enumerated by position in [`ground`](Self::ground) exactly as
    /// [`find_low_rank_separation`](crate::cutrank::find_low_rank_separation)
    /// enumerates vertices, so the two searches report the same witness on a
    /// matroid and its fundamental graph.
    pub fn find_low_connectivity_set(&self, k: usize) -> Result<Option<ConnectivityWitness>> {
        let m = self.len();
        let cap = subset_cap();
        if m > cap {
            return Err(Error::GroundSetTooLarge { size: m, cap });
        }
        let ground = self.ground();
        let found = least_separation(m, k, |mask| {
            self.lambda_by(|l| mask >> ground.binary_search(l).unwrap() & 1 == 1)
        });
        Ok(found.map(|(mask, order, lambda)| ConnectivityWitness {
            set: BitIter(mask).map(|p| ground[p]).collect(),
            order,
            lambda,
        }))
    }

    pub fn is_k_connected(&self, k: usize) -> Result<bool> {
        Ok(self.find_low_connectivity_set(k)?.is_none())
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub(crate) fn parse_from(lines: &mut Lines<'_>) -> Result<Self> {
        let mut labels = |keyword: &str| -> Result<Vec<u32>> {
            let (line, text) = lines.expect_line(keyword)?;
            let mut f = text.split_whitespace();
            if f.next() != Some(keyword) {
                return Err(parse_err(line, format!("expected `{keyword}` line")));
            }
            f.map(|x| parse_num(line, x)).collect()
        };
        let basis = labels("basis")?;
        let cobasis = labels("nonbasis")?;
        let rep = BitMatrix::parse_from(lines)?;
        BinaryMatroid::new(basis, cobasis, rep)
    }
}

/// A set `X` with `lambda(X) < order <= min(|X|, |E - X|)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityWitness {
    pub set: Vec<u32>,
    pub order: usize,
    pub lambda: usize,
}

impl fmt::Display for ConnectivityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "separation order={} lambda={} set={}",
            self.order,
            self.lambda,
            crate::text::join_csv(&self.set)
        )
    }
}

impl fmt::Debug for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatroid(basis={:?}, nonbasis={:?}, {:?})", self.basis, self.cobasis, self.rep)
    }
}

impl fmt::Display for BinaryMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[u32]| xs.iter().map(|x| format!(" {x}")).collect::<String>();
        writeln!(f, "basis{}", join(&self.basis))?;
        writeln!(f, "nonbasis{}", join(&self.cobasis))?;
        write!(f, "{}", self.rep)
    }
}

impl FromStr for BinaryMatroid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = Lines::new(s);
        let m = Self::parse_from(&mut lines)?;
        if let Some((line, _)) = lines.next_line() {
            return Err(parse_err(line, "trailing input after matroid"));
        }
        Ok(m)
    }
}

/// The graphic matroid of `g`: basis `E(T)`, representation from the
/// fundamental cycles of `tree`.
pub fn graphic_matroid(g: &MultiGraph, tree: &SpanningTree) -> Result<BinaryMatroid> {
    let (rows, cols, d) = fundamental_matrix(g, tree)?;
    BinaryMatroid::new(rows, cols, d)
}

/// The cographic matroid of `g`: basis `E(G) - E(T)`, representation `D^T`.
pub fn cographic_matroid(g: &MultiGraph, tree: &SpanningTree) -> Result<BinaryMatroid> {
    let (rows, cols, d) = fundamental_matrix(g, tree)?;
    BinaryMatroid::new(cols, rows, d.transpose())
}

/// Fundamental graph of `g` with respect to `tree`, sides labelled by edge.
pub fn fundamental_graph(g: &MultiGraph, tree: &SpanningTree) -> Result<BiGraph> {
    Ok(graphic_matroid(g, tree)?.fundamental_bigraph())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Triangle 0-1-2 with tree edges 0 (0-1) and 1 (1-2) and closing edge 2.
    fn triangle() -> (MultiGraph, SpanningTree) {
        let mut g = MultiGraph::new(3);
        g.add_edge(0, 0, 1);
        g.add_edge(1, 1, 2);
        g.add_edge(2, 2, 0);
        (g, SpanningTree::new([0, 1]))
    }

    fn k4() -> (MultiGraph, SpanningTree) {
        let mut g = MultiGraph::new(4);
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        for (l, &(u, v)) in pairs.iter().enumerate() {
            g.add_edge(l as u32, u, v);
        }
        (g, SpanningTree::new([0, 1, 2]))
    }

    #[test]
    fn graphic_examples() {
        let (g, t) = triangle();
        let m = graphic_matroid(&g, &t).unwrap();
        assert_eq!(m.rep(), &BitMatrix::ones(2, 1));
        let fg = m.fundamental_bigraph();
        assert_eq!((fg.a(), fg.b(), fg.edge_count()), (2, 1, 2));

        let mut par = MultiGraph::new(2);
        for l in 0..5 {
            par.add_edge(l, 0, 1);
        }
        let m = graphic_matroid(&par, &SpanningTree::new([0])).unwrap();
        assert_eq!(m.rep(), &BitMatrix::ones(1, 4));

        let mut fig = MultiGraph::new(5);
        for i in 0..4 {
            fig.add_edge(i, i as usize, i as usize + 1);
        }
        for l in 4..8 {
            fig.add_edge(l, 0, 4);
        }
        let m = graphic_matroid(&fig, &SpanningTree::new(0..4)).unwrap();
        assert_eq!(m.rep(), &BitMatrix::ones(4, 4));
    }

    #[test]
    fn loops_give_zero_columns() {
        let mut g = MultiGraph::new(2);
        g.add_edge(0, 0, 1);
        g.add_edge(1, 1, 1);
        let m = graphic_matroid(&g, &SpanningTree::new([0])).unwrap();
        assert!(m.rep().is_zero());
        assert!(m.circuits().unwrap().contains(&vec![1]));
    }

    #[test]
    fn spanning_tree_errors() {
        let (g, _) = triangle();
        assert!(matches!(
            graphic_matroid(&g, &SpanningTree::new([0, 1, 2])),
            Err(Error::NotASpanningTree(_))
        ));
        assert!(matches!(
            graphic_matroid(&g, &SpanningTree::new([0])),
            Err(Error::NotASpanningTree(_))
        ));
        assert!(matches!(
            graphic_matroid(&g, &SpanningTree::new([0, 9])),
            Err(Error::NotASpanningTree(_))
        ));
        let mut split = MultiGraph::new(4);
        split.add_edge(0, 0, 1);
        split.add_edge(1, 2, 3);
        assert_eq!(
            graphic_matroid(&split, &SpanningTree::new([0, 1])),
            Err(Error::NotConnected)
        );
    }

    #[test]
    fn cographic_examples() {
        let (g, t) = triangle();
        let m = cographic_matroid(&g, &t).unwrap();
        assert_eq!(m.rep(), &BitMatrix::ones(1, 2));
        assert_eq!(m.basis(), &[2]);
        let path = {
            let mut p = MultiGraph::new(3);
            p.add_edge(0, 0, 1);
            p.add_edge(1, 1, 2);
            p
        };
        let m = cographic_matroid(&path, &SpanningTree::new([0, 1])).unwrap();
        assert_eq!((m.rep().nrows(), m.rep().ncols()), (0, 2));
        let graphic = graphic_matroid(&path, &SpanningTree::new([0, 1])).unwrap();
        assert!(graphic.circuits().unwrap().is_empty());
    }

    #[test]
    fn change_basis_examples() {
        let (g, t) = triangle();
        let m = graphic_matroid(&g, &t).unwrap();
        let swapped = m.change_basis(0, 2).unwrap();
        assert_eq!(swapped.basis(), &[2, 1]);
        assert_eq!(swapped.cobasis(), &[0]);
        assert_eq!(swapped.rep(), &BitMatrix::ones(2, 1));
        assert_eq!(swapped.change_basis(2, 0).unwrap(), m);
        assert_eq!(swapped.circuits().unwrap(), m.circuits().unwrap());

        let zero = BinaryMatroid::from_rep(BitMatrix::from_rows(&[[1u8], [0]]));
        assert_eq!(zero.change_basis(1, 2), Err(Error::PivotOnZero { row: 1, col: 0 }));
    }

    #[test]
    fn circuit_examples() {
        let (g, t) = triangle();
        let m = graphic_matroid(&g, &t).unwrap();
        assert_eq!(m.circuits().unwrap(), BTreeSet::from([vec![0, 1, 2]]));
        let (g, t) = k4();
        let c = graphic_matroid(&g, &t).unwrap().circuits().unwrap();
        assert_eq!(c.len(), 7);
        assert_eq!(c.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(c.iter().filter(|c| c.len() == 4).count(), 3);
        let big = BinaryMatroid::from_rep(BitMatrix::zeros(9, 8));
        assert!(matches!(big.circuits(), Err(Error::GroundSetTooLarge { .. })));
    }

    #[test]
    fn minor_examples() {
        let (g, t) = triangle();
        let m = graphic_matroid(&g, &t).unwrap();
        let del = m.minor(&[2], &[]).unwrap();
        assert_eq!((del.rank(), del.cobasis().len()), (2, 0));
        let con = m.minor(&[], &[0]).unwrap();
        assert_eq!(con.basis(), &[1]);
        assert_eq!(con.rep(), &BitMatrix::ones(1, 1));
        let parallel = m.minor(&[], &[2]).unwrap();
        assert_eq!(parallel.ground(), vec![0, 1]);
        assert_eq!(parallel.circuits().unwrap(), BTreeSet::from([vec![0, 1]]));
        assert_eq!(m.minor(&[7], &[]), Err(Error::ElementNotFound(7)));
        assert_eq!(m.minor(&[1], &[1]), Err(Error::MinorSetsOverlap(1)));
    }

    #[test]
    fn loops_and_coloops_in_minors() {
        // element 0 a coloop (zero row), element 2 a loop (zero column)
        let m = BinaryMatroid::from_rep(BitMatrix::from_rows(&[[0u8, 0], [0, 1]]));
        let no_coloop = m.minor(&[0], &[]).unwrap();
        assert_eq!(no_coloop.basis(), &[1]);
        let no_loop = m.minor(&[], &[2]).unwrap();
        assert_eq!(no_loop.cobasis(), &[3]);
        assert_eq!(no_loop.rank(), 2);
    }

    #[test]
    fn lambda_examples() {
        let (g, t) = k4();
        let m = graphic_matroid(&g, &t).unwrap();
        assert_eq!(m.lambda(&[]).unwrap(), 0);
        assert_eq!(m.lambda(&m.ground()).unwrap(), 0);
        assert_eq!(m.lambda(&[42]), Err(Error::ElementNotFound(42)));
        let ground = m.ground();
        for mask in 0u32..1 << 6 {
            let x: Vec<u32> = (0..6).filter(|i| mask >> i & 1 == 1).map(|i| ground[i]).collect();
            let y: Vec<u32> = (0..6).filter(|i| mask >> i & 1 == 0).map(|i| ground[i]).collect();
            assert_eq!(m.lambda(&x).unwrap(), m.lambda(&y).unwrap());
        }
    }

    #[test]
    fn triangle_connectivity_matches_fundamental_graph() {
        use crate::cutrank::find_low_rank_separation;
        let (g, t) = triangle();
        let m = graphic_matroid(&g, &t).unwrap();
        for k in 1..=3 {
            let a = m.find_low_connectivity_set(k).unwrap();
            let b = find_low_rank_separation(&m.fundamental_graph(), k).unwrap();
            assert_eq!(a.is_none(), b.is_none());
        }
    }

    #[test]
    fn text_formats() {
        let (g, t) = k4();
        let text = g.to_text(&t);
        assert!(text.starts_with("multigraph 4\n0 1 tree 0\n"));
        assert_eq!(MultiGraph::parse(&text).unwrap(), (g.clone(), t.clone()));
        let m = graphic_matroid(&g, &t).unwrap();
        assert_eq!(m.to_text().parse::<BinaryMatroid>().unwrap(), m);
        assert!(MultiGraph::parse("multigraph 2\n0 1 branch 0\n").is_err());
        assert!(MultiGraph::parse("multigraph 2\n0 1 tree 0\n0 1 tree 0\n").is_err());
    }

    #[test]
    fn multigraph_contraction() {
        let (g, _) = triangle();
        let c = g.contract(0);
        assert_eq!(c.n(), 2);
        assert_eq!(c.edges().len(), 2);
        assert!(c.edges().iter().all(|e| !e.is_loop()));
    }
}

//! Constructive decompositions: splitting a tree into large pieces, and
//! partitioning a low-rank perturbation into constant blocks.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::graph::{BiGraph, Degrees, Graph};
use crate::text::join_csv;

/// An undirected tree edge, stored with the smaller endpoint first.
pub type TreeEdge = (usize, usize);

fn norm(u: usize, v: usize) -> TreeEdge {
    (u.min(v), u.max(v))
}

/// A split of a tree into large edge-disjoint pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeSplit {
    /// Removing `edge` leaves two trees, `side_a` and `side_b`.
    Edge {
        edge: TreeEdge,
        side_a: Vec<TreeEdge>,
        side_b: Vec<TreeEdge>,
    },
    /// Three edge-disjoint subtrees meeting pairwise exactly in `vertex`.
    Vertex {
        vertex: usize,
        parts: [Vec<TreeEdge>; 3],
    },
}

impl fmt::Display for TreeSplit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges = |es: &[TreeEdge]| {
            if es.is_empty() {
                "-".to_string()
            } else {
                es.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
            }
        };
        match self {
            TreeSplit::Edge { edge, side_a, side_b } => {
                writeln!(f, "split edge {} {}", edge.0, edge.1)?;
                writeln!(f, "side size={} edges={}", side_a.len(), edges(side_a))?;
                writeln!(f, "side size={} edges={}", side_b.len(), edges(side_b))
            }
            TreeSplit::Vertex { vertex, parts } => {
                writeln!(f, "split vertex {vertex}")?;
                for p in parts {
                    writeln!(f, "part size={} edges={}", p.len(), edges(p))?;
                }
                Ok(())
            }
        }
    }
}

/// Split a tree with at least `5s` edges.
///
/// Root the tree at vertex 0 and take the deepest vertex `v` (least label
/// among the deepest) whose subtree has at least `s` edges. If that subtree
/// has at least `3s` edges, the branches at `v` (each a child edge plus the
/// child's subtree, hence at most `s` edges) are taken in increasing child
/// label and grouped greedily into `T1` and `T2` of `s..2s` edges; `T3` is
/// everything else. Otherwise the edge from `v` to its parent splits the tree.
pub fn split_tree(t: &Graph, s: usize) -> Result<TreeSplit> {
    if s == 0 {
        return Err(Error::InvalidArgument("s must be positive".into()));
    }
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let edges = t.edge_count();
    if edges < 5 * s {
        return Err(Error::TreeTooSmall { edges, needed: 5 * s });
    }
    let rooted = Rooted::new(t, 0);
    let v = (0..t.n())
        .filter(|&v| rooted.size[v] >= s)
        .max_by_key(|&v| (rooted.depth[v], std::cmp::Reverse(v)))
        .expect("the root qualifies");

    let split = if rooted.size[v] >= 3 * s {
        let mut groups: [Vec<TreeEdge>; 2] = [Vec::new(), Vec::new()];
        let mut current = 0;
        for &c in &rooted.children[v] {
            if current == 2 {
                break;
            }
            groups[current].extend(rooted.branch_edges(v, c));
            if groups[current].len() >= s {
                current += 1;
            }
        }
        let used: BTreeSet<TreeEdge> = groups.iter().flatten().copied().collect();
        let rest: Vec<TreeEdge> = t
            .edges()
            .into_iter()
            .filter(|e| !used.contains(e))
            .collect();
        let [mut t1, mut t2] = groups;
        t1.sort_unstable();
        t2.sort_unstable();
        TreeSplit::Vertex {
            vertex: v,
            parts: [t1, t2, rest],
        }
    } else {
        let p = rooted.parent[v];
        let mut below = rooted.subtree_edges(v);
        below.sort_unstable();
        let below_set: BTreeSet<TreeEdge> = below.iter().copied().collect();
        let edge = norm(p, v);
        let above: Vec<TreeEdge> = t
            .edges()
            .into_iter()
            .filter(|e| *e != edge && !below_set.contains(e))
            .collect();
        TreeSplit::Edge {
            edge,
            side_a: above,
            side_b: below,
        }
    };
    debug_assert!(check_tree_split(t, s, &split).is_ok());
    Ok(split)
}

struct Rooted {
    parent: Vec<usize>,
    depth: Vec<usize>,
    children: Vec<Vec<usize>>,
    /// edges in the subtree below each vertex
    size: Vec<usize>,
}

impl Rooted {
    fn new(t: &Graph, root: usize) -> Self {
        let n = t.n();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0; n];
        let mut children = vec![Vec::new(); n];
        let mut order = vec![root];
        parent[root] = root;
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for w in t.neighbors(u) {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    children[u].push(w);
                    order.push(w);
                }
            }
        }
        let mut size = vec![0; n];
        for &u in order.iter().rev() {
            if u != root {
                size[parent[u]] += size[u] + 1;
            }
        }
        Self {
            parent,
            depth,
            children,
            size,
        }
    }

    fn subtree_edges(&self, v: usize) -> Vec<TreeEdge> {
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for &c in &self.children[u] {
                out.push(norm(u, c));
                stack.push(c);
            }
        }
        out
    }

    fn branch_edges(&self, v: usize, c: usize) -> Vec<TreeEdge> {
        let mut out = vec![norm(v, c)];
        out.extend(self.subtree_edges(c));
        out
    }
}

fn vertices_of(edges: &[TreeEdge]) -> BTreeSet<usize> {
    edges.iter().flat_map(|&(u, v)| [u, v]).collect()
}

/// Whether a non-empty edge set is connected.
fn edges_connected(edges: &[TreeEdge]) -> bool {
    let verts: Vec<usize> = vertices_of(edges).into_iter().collect();
    let Some(&start) = verts.first() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            let other = if a == u {
                b
            } else if b == u {
                a
            } else {
                continue;
            };
            if seen.insert(other) {
                stack.push(other);
            }
        }
    }
    seen.len() == verts.len()
}

/// Independent validity check of a [`TreeSplit`] against the tree and `s`.
pub fn check_tree_split(t: &Graph, s: usize, split: &TreeSplit) -> Result<(), String> {
    let tree_edges: BTreeSet<TreeEdge> = t.edges().into_iter().collect();
    let in_tree = |es: &[TreeEdge]| es.iter().all(|e| tree_edges.contains(e));
    match split {
        TreeSplit::Edge { edge, side_a, side_b } => {
            if !tree_edges.contains(edge) {
                return Err(format!("{edge:?} is not a tree edge"));
            }
            if !in_tree(side_a) || !in_tree(side_b) {
                return Err("side uses a non-tree edge".into());
            }
            let mut all: Vec<TreeEdge> = side_a.iter().chain(side_b).copied().collect();
            all.push(*edge);
            let distinct: BTreeSet<TreeEdge> = all.iter().copied().collect();
            if distinct.len() != all.len() || distinct != tree_edges {
                return Err("sides and edge do not partition the tree".into());
            }
            for side in [side_a, side_b] {
                if side.len() < s {
                    return Err(format!("side has {} < {s} edges", side.len()));
                }
                if !edges_connected(side) {
                    return Err("side is not connected".into());
                }
            }
            if !vertices_of(side_a).is_disjoint(&vertices_of(side_b)) {
                return Err("sides share a vertex".into());
            }
            let (u, v) = *edge;
            let (va, vb) = (vertices_of(side_a), vertices_of(side_b));
            let ends_ok = (va.contains(&u) && vb.contains(&v)) || (va.contains(&v) && vb.contains(&u));
            if !ends_ok {
                return Err("edge does not join the two sides".into());
            }
            Ok(())
        }
        TreeSplit::Vertex { vertex, parts } => {
            for (i, p) in parts.iter().enumerate() {
                if !in_tree(p) {
                    return Err(format!("part {i} uses a non-tree edge"));
                }
                if p.len() < s {
                    return Err(format!("part {i} has {} < {s} edges", p.len()));
                }
                if !edges_connected(p) {
                    return Err(format!("part {i} is not connected"));
                }
            }
            for i in 0..3 {
                for j in i + 1..3 {
                    let (ei, ej): (BTreeSet<_>, BTreeSet<_>) =
                        (parts[i].iter().collect(), parts[j].iter().collect());
                    if !ei.is_disjoint(&ej) {
                        return Err(format!("parts {i} and {j} share an edge"));
                    }
                    let common: BTreeSet<usize> = vertices_of(&parts[i])
                        .intersection(&vertices_of(&parts[j]))
                        .copied()
                        .collect();
                    if common != BTreeSet::from([*vertex]) {
                        return Err(format!("parts {i} and {j} meet in {common:?}"));
                    }
                }
            }
            Ok(())
        }
    }
}

/// Tag of a constant block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockTag {
    Zero,
    One,
    /// The two graphs agree on the block.
    Equal,
    /// One graph is the bipartite complement of the other on the block.
    Complement,
}

impl fmt::Display for BlockTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BlockTag::Zero => "zero",
            BlockTag::One => "one",
            BlockTag::Equal => "equal",
            BlockTag::Complement => "complement",
        })
    }
}

/// Partitions of the row and column indices with one tag per class pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    pub row_classes: Vec<Vec<usize>>,
    pub col_classes: Vec<Vec<usize>>,
    /// `tags[i][j]` describes the block `row_classes[i] x col_classes[j]`.
    pub tags: Vec<Vec<BlockTag>>,
}

impl BlockPartition {
    pub fn tag(&self, i: usize, j: usize) -> BlockTag {
        self.tags[i][j]
    }
}

impl fmt::Display for BlockPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "partition rows={} cols={}",
            self.row_classes.len(),
            self.col_classes.len()
        )?;
        for (i, c) in self.row_classes.iter().enumerate() {
            writeln!(f, "row-class {i} {}", join_csv(c))?;
        }
        for (j, c) in self.col_classes.iter().enumerate() {
            writeln!(f, "col-class {j} {}", join_csv(c))?;
        }
        for (i, row) in self.tags.iter().enumerate() {
            for (j, tag) in row.iter().enumerate() {
                writeln!(f, "block {i} {j} {tag}")?;
            }
        }
        Ok(())
    }
}

/// Group indices by identical vector, classes in order of first occurrence.
fn group_identical<K: Eq + std::hash::Hash>(keys: impl IntoIterator<Item = K>) -> Vec<Vec<usize>> {
    let mut index: HashMap<K, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, k) in keys.into_iter().enumerate() {
        let next = classes.len();
        let c = *index.entry(k).or_insert(next);
        if c == next {
            classes.push(Vec::new());
        }
        classes[c].push(i);
    }
    classes
}

/// Rows grouped by identical row vector and columns by identical column
/// vector; every resulting block is constant.
pub fn constant_block_partition(c: &BitMatrix) -> BlockPartition {
    let row_classes = group_identical((0..c.nrows()).map(|i| c.row_words(i).to_vec()));
    let t = c.transpose();
    let col_classes = group_identical((0..t.nrows()).map(|j| t.row_words(j).to_vec()));
    let tags = row_classes
        .iter()
        .map(|rc| {
            col_classes
                .iter()
                .map(|cc| if c.get(rc[0], cc[0]) { BlockTag::One } else { BlockTag::Zero })
                .collect()
        })
        .collect();
    let partition = BlockPartition {
        row_classes,
        col_classes,
        tags,
    };
    debug_assert!({
        let bound = 1usize.checked_shl(c.rank() as u32).unwrap_or(usize::MAX);
        partition.row_classes.len() <= bound && partition.col_classes.len() <= bound
    });
    partition
}

/// Result of comparing two bipartite graphs on the same sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perturbation {
    /// Rank of the difference of the biadjacency matrices.
    pub p: usize,
    pub partition: BlockPartition,
}

/// Partition the sides so that on each block `g1` equals `g2` or its
/// bipartite complement.
pub fn perturbation_partition(g1: &BiGraph, g2: &BiGraph) -> Result<Perturbation> {
    let diff = g1.biadjacency().xor(g2.biadjacency())?;
    let mut partition = constant_block_partition(&diff);
    for row in &mut partition.tags {
        for tag in row.iter_mut() {
            *tag = match tag {
                BlockTag::Zero => BlockTag::Equal,
                _ => BlockTag::Complement,
            };
        }
    }
    Ok(Perturbation {
        p: diff.rank(),
        partition,
    })
}

/// Rebuild the first graph of a [`perturbation_partition`] from the second
/// by complementing every `Complement` (or `One`) block.
pub fn apply_partition(g2: &BiGraph, partition: &BlockPartition) -> BiGraph {
    let mut m = g2.biadjacency().clone();
    for (i, rc) in partition.row_classes.iter().enumerate() {
        for (j, cc) in partition.col_classes.iter().enumerate() {
            if matches!(partition.tags[i][j], BlockTag::Complement | BlockTag::One) {
                for &r in rc {
                    for &c in cc {
                        m.toggle(r, c);
                    }
                }
            }
        }
    }
    BiGraph::with_labels(m, g2.a_labels().to_vec(), g2.b_labels().to_vec())
}

fn check_classes(classes: &[Vec<usize>], size: usize, what: &str) -> Result<()> {
    let mut seen = vec![false; size];
    for c in classes {
        if c.is_empty() {
            return Err(Error::PartitionInvalid(format!("empty {what} class")));
        }
        for &i in c {
            if i >= size || seen[i] {
                return Err(Error::PartitionInvalid(format!("{what} index {i} repeated or out of range")));
            }
            seen[i] = true;
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::PartitionInvalid(format!("{what} classes do not cover the side")));
    }
    Ok(())
}

/// Whether `g` has average degree at most `10 n^2 s`, where `n` is the larger
/// number of classes on a side. Only the density conclusion is checked; the
/// caller is responsible for the block and `K_{s,s}`-freeness hypotheses.
pub fn check_struct_density(
    g: &BiGraph,
    row_classes: &[Vec<usize>],
    col_classes: &[Vec<usize>],
    s: usize,
) -> Result<bool> {
    check_classes(row_classes, g.a(), "row")?;
    check_classes(col_classes, g.b(), "column")?;
    Ok(g.degree_stats().average_degree <= struct_density_bound(row_classes.len(), col_classes.len(), s))
}

/// `10 n^2 s` with `n = max(rows, cols)`.
pub fn struct_density_bound(row_classes: usize, col_classes: usize, s: usize) -> Ratio<u64> {
    let n = row_classes.max(col_classes) as u64;
    Ratio::from_integer(10 * n * n * s as u64)
}

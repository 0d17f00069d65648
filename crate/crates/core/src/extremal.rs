//! Generators for the tight examples and for seeded random instances.
//!
//! Random instances are reproducible: the generator is ChaCha8 seeded with
//! `ChaCha8Rng::seed_from_u64(seed)`. A tree on `n` vertices is drawn as a
//! Prüfer sequence of `n - 2` symbols, each `gen_range(0..n)`, and decoded by
//! repeatedly joining the least-labelled leaf to the next symbol; the tree
//! edges get labels `0..n-1` in decoding order. Each extra edge then draws
//! `u = gen_range(0..n)` and `v = gen_range(0..n)`, redrawing both while
//! `u == v` unless loops are allowed, and gets the next label.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::BiGraph;
use crate::matroid::{fundamental_graph, MultiGraph, SpanningTree};

/// Where an instance came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub generator: String,
    pub params: Vec<(String, u64)>,
    pub seed: Option<u64>,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "# gen {}", self.generator)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        match self.seed {
            Some(s) => write!(f, " seed={s}"),
            None => write!(f, " seed=none"),
        }
    }
}

/// A multigraph with spanning tree and its fundamental graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub multigraph: MultiGraph,
    pub tree: SpanningTree,
    pub fundamental: BiGraph,
    pub provenance: Provenance,
}

impl Instance {
    pub fn new(multigraph: MultiGraph, tree: SpanningTree, provenance: Provenance) -> Result<Self> {
        let fundamental = fundamental_graph(&multigraph, &tree)?;
        Ok(Self {
            multigraph,
            tree,
            fundamental,
            provenance,
        })
    }

    /// Multigraph text format preceded by the provenance comment.
    pub fn to_text(&self) -> String {
        format!("{}\n{}", self.provenance, self.multigraph.to_text(&self.tree))
    }
}

/// A path of `t - 1` tree edges with `t - 1` parallel non-tree edges joining
/// its ends. Every cycle uses the whole path, so the fundamental graph is
/// `K_{t-1,t-1}`. The multigraph is planar.
pub fn gen_ktt_example(t: usize) -> Instance {
    assert!(t >= 2, "t must be at least 2");
    let k = t - 1;
    let mut g = MultiGraph::new(k + 1);
    for i in 0..k {
        g.add_edge(i as u32, i, i + 1);
    }
    for j in 0..k {
        g.add_edge((k + j) as u32, 0, k);
    }
    let provenance = Provenance {
        generator: "ktt".into(),
        params: vec![("t".into(), t as u64)],
        seed: None,
    };
    Instance::new(g, SpanningTree::new(0..k as u32), provenance).expect("valid construction")
}

/// A spider with three legs of `s - 1` tree edges from a centre, plus `s - 1`
/// parallel non-tree edges between each pair of leg tips. A tip-to-tip edge
/// closes a cycle through exactly its two legs, so the fundamental graph is
/// the `(s - 1)`-blow-up of `C6`. The multigraph is planar.
///
/// Vertex 0 is the centre and leg `i` is `0, 1 + i(s-1), ..., (i+1)(s-1)`.
/// Tree edges of leg `i` are labelled `i(s-1)..(i+1)(s-1)`; the non-tree
/// edges follow for tip pairs (0,1), (1,2), (0,2) in that order.
pub fn gen_c6_blowup_example(s: usize) -> Instance {
    assert!(s >= 2, "s must be at least 2");
    let k = s - 1;
    let mut g = MultiGraph::new(3 * k + 1);
    let mut label = 0u32;
    let mut tips = [0usize; 3];
    for (leg, tip) in tips.iter_mut().enumerate() {
        let mut prev = 0;
        for step in 0..k {
            let v = 1 + leg * k + step;
            g.add_edge(label, prev, v);
            label += 1;
            prev = v;
        }
        *tip = prev;
    }
    for (a, b) in [(0, 1), (1, 2), (0, 2)] {
        for _ in 0..k {
            g.add_edge(label, tips[a], tips[b]);
            label += 1;
        }
    }
    let provenance = Provenance {
        generator: "c6blowup".into(),
        params: vec![("s".into(), s as u64)],
        seed: None,
    };
    Instance::new(g, SpanningTree::new(0..(3 * k) as u32), provenance).expect("valid construction")
}

/// Random labelled tree on `n` vertices (uniform via Prüfer sequences) plus
/// `extra` random non-tree edges without loops.
pub fn gen_random_instance(n: usize, extra: usize, seed: u64) -> Instance {
    gen_random_instance_with(n, extra, seed, false)
}

pub fn gen_random_instance_with(n: usize, extra: usize, seed: u64, allow_loops: bool) -> Instance {
    assert!(n >= 2, "need at least two vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut g = MultiGraph::new(n);
    let mut label = 0u32;
    for (u, v) in decode_prufer(n, &prufer) {
        g.add_edge(label, u, v);
        label += 1;
    }
    for _ in 0..extra {
        let (u, v) = loop {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if allow_loops || u != v {
                break (u, v);
            }
        };
        g.add_edge(label, u, v);
        label += 1;
    }
    let mut params = vec![("n".into(), n as u64), ("extra".into(), extra as u64)];
    if allow_loops {
        params.push(("loops".into(), 1));
    }
    let provenance = Provenance {
        generator: "random".into(),
        params,
        seed: Some(seed),
    };
    Instance::new(g, SpanningTree::new(0..(n - 1) as u32), provenance).expect("valid construction")
}

/// Decode a Prüfer sequence into tree edges `(leaf, neighbour)`.
pub fn decode_prufer(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    debug_assert_eq!(seq.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

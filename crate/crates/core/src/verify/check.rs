//! Individual checks: one hypothesis/conclusion pair on one concrete input,
//! with a text form so that failing inputs can be stored and replayed.

use std::fmt;

use super::oracle;
use super::Campaign;
use crate::cutrank::{cut_rank_mask, find_low_rank_separation};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::graph::{find_complete_bipartite, is_c4_free, vertex_connectivity, BiGraph, Degrees, Graph};
use crate::matroid::{fundamental_matrix, BinaryMatroid, MultiGraph, SpanningTree};
use crate::pivot::pivot;
use crate::structure::{
    apply_partition, check_struct_density, check_tree_split, constant_block_partition, perturbation_partition,
    split_tree, BlockTag,
};
use crate::text::{join_csv, parse_csv, parse_err, parse_num, Lines};

/// Side length up to which biclique searches are cross-checked by brute force.
const BICLIQUE_ORACLE_SIDE: usize = 8;

/// Vertex count up to which connectivity is cross-checked by brute force.
const CONNECTIVITY_ORACLE_N: usize = 8;

/// Ground-set size up to which the matroid connectivity function is
/// recomputed from ranks of column sets.
const LAMBDA_ORACLE_SIZE: usize = 10;

/// Result of evaluating one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The hypothesis does not hold, so nothing was asserted.
    Vacuous,
    Violation(String),
}

/// A single checkable statement about a concrete input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    /// `K_{s,t}`-free fundamental graph has a vertex of degree at most
    /// `max(2s-2, t-1) + offset`.
    FunLemma {
        graph: MultiGraph,
        tree: SpanningTree,
        s: usize,
        t: usize,
        offset: i64,
    },
    /// `K_{s,s}`-free bipartite complement of a fundamental graph has a
    /// vertex of degree at most `5s-1 + offset`.
    CofunLemma {
        graph: MultiGraph,
        tree: SpanningTree,
        s: usize,
        offset: i64,
    },
    /// The tree splits into three edge-disjoint parts.
    TreeLemma { tree: Graph, s: usize },
    /// A `K_{s,s}`-free graph assembled from blocks has average degree at
    /// most `10 n^2 s`. Row and column classes are contiguous runs of the
    /// given sizes.
    StructDensity {
        graph: BiGraph,
        row_sizes: Vec<usize>,
        col_sizes: Vec<usize>,
        s: usize,
    },
    /// A `k`-connected `C4`-free graph is `(k+1)`-rank-connected.
    RankConn { graph: Graph },
    /// Block partitions of a low-rank difference `diff` between `base` and
    /// `base + diff`.
    PertPartition { diff: BitMatrix, base: BiGraph },
    /// Basis exchange keeps circuits and pivots the fundamental graph.
    PivotMatroid { matroid: BinaryMatroid },
    /// Matroid connectivity equals rank-connectivity of the fundamental graph.
    ConnEquiv { matroid: BinaryMatroid, k: usize },
    /// Average degree at least `4k` forces a `(k+1)`-connected induced
    /// subgraph on more than `2k` vertices; for `C4`-free graphs also a
    /// `(k+2)`-rank-connected one with average degree at least `k+1`.
    AvgExists { graph: Graph, k: usize },
}

impl Check {
    pub fn campaign(&self) -> Campaign {
        match self {
            Check::FunLemma { .. } => Campaign::FunLemma,
            Check::CofunLemma { .. } => Campaign::CofunLemma,
            Check::TreeLemma { .. } => Campaign::TreeLemma,
            Check::StructDensity { .. } => Campaign::StructDensity,
            Check::RankConn { .. } => Campaign::RankconnLemma,
            Check::PertPartition { .. } => Campaign::PertPartition,
            Check::PivotMatroid { .. } => Campaign::PivotMatroid,
            Check::ConnEquiv { .. } => Campaign::ConnEquiv,
            Check::AvgExists { .. } => Campaign::AvgExists,
        }
    }

    pub fn evaluate(&self) -> Outcome {
        let result = match self {
            Check::FunLemma {
                graph,
                tree,
                s,
                t,
                offset,
            } => eval_fun(graph, tree, *s, *t, *offset),
            Check::CofunLemma { graph, tree, s, offset } => eval_cofun(graph, tree, *s, *offset),
            Check::TreeLemma { tree, s } => eval_tree(tree, *s),
            Check::StructDensity {
                graph,
                row_sizes,
                col_sizes,
                s,
            } => eval_struct(graph, row_sizes, col_sizes, *s),
            Check::RankConn { graph } => eval_rankconn(graph),
            Check::PertPartition { diff, base } => eval_pert(diff, base),
            Check::PivotMatroid { matroid } => eval_pivot_matroid(matroid),
            Check::ConnEquiv { matroid, k } => eval_conn_equiv(matroid, *k),
            Check::AvgExists { graph, k } => eval_avg_exists(graph, *k),
        };
        result.unwrap_or_else(|e| Outcome::Violation(format!("unexpected error: {e}")))
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parse a `witness ... end` block.
    pub fn parse(text: &str) -> Result<Check> {
        let mut lines = Lines::new(text);
        let check = Self::parse_from(&mut lines)?;
        if let Some((line, _)) = lines.next_line() {
            return Err(parse_err(line, "trailing input after witness"));
        }
        Ok(check)
    }

    pub(crate) fn parse_from(lines: &mut Lines<'_>) -> Result<Check> {
        let (line, header) = lines.expect_line("witness")?;
        let mut fields = header.split_whitespace();
        if fields.next() != Some("witness") {
            return Err(parse_err(line, "expected `witness` line"));
        }
        let campaign: Campaign = fields
            .next()
            .ok_or_else(|| parse_err(line, "missing campaign name"))?
            .parse()?;
        let pairs: Vec<(&str, &str)> = fields
            .map(|f| f.split_once('=').ok_or_else(|| parse_err(line, format!("expected key=value, got {f:?}"))))
            .collect::<Result<_>>()?;
        let get = |key: &str| -> Result<&str> {
            pairs
                .iter()
                .find(|(k, _)| *k == key)
                .map(|&(_, v)| v)
                .ok_or_else(|| parse_err(line, format!("missing `{key}`")))
        };
        let num = |key: &str| -> Result<usize> { parse_num(line, get(key)?) };
        let check = match campaign {
            Campaign::FunLemma => {
                let (graph, tree) = MultiGraph::parse_from(lines)?;
                Check::FunLemma {
                    graph,
                    tree,
                    s: num("s")?,
                    t: num("t")?,
                    offset: parse_num(line, get("offset")?)?,
                }
            }
            Campaign::CofunLemma => {
                let (graph, tree) = MultiGraph::parse_from(lines)?;
                Check::CofunLemma {
                    graph,
                    tree,
                    s: num("s")?,
                    offset: parse_num(line, get("offset")?)?,
                }
            }
            Campaign::TreeLemma => Check::TreeLemma {
                tree: Graph::parse_from(lines)?,
                s: num("s")?,
            },
            Campaign::StructDensity => Check::StructDensity {
                graph: BiGraph::parse_from(lines)?,
                row_sizes: parse_csv(get("rows")?)?,
                col_sizes: parse_csv(get("cols")?)?,
                s: num("s")?,
            },
            Campaign::RankconnLemma => Check::RankConn {
                graph: Graph::parse_from(lines)?,
            },
            Campaign::PertPartition => Check::PertPartition {
                diff: BitMatrix::parse_from(lines)?,
                base: BiGraph::parse_from(lines)?,
            },
            Campaign::PivotMatroid => Check::PivotMatroid {
                matroid: BinaryMatroid::parse_from(lines)?,
            },
            Campaign::ConnEquiv => Check::ConnEquiv {
                matroid: BinaryMatroid::parse_from(lines)?,
                k: num("k")?,
            },
            Campaign::AvgExists => Check::AvgExists {
                graph: Graph::parse_from(lines)?,
                k: num("k")?,
            },
        };
        match lines.next_line() {
            Some((_, "end")) => Ok(check),
            Some((line, _)) => Err(parse_err(line, "expected `end` after witness")),
            None => Err(parse_err(0, "witness is missing its `end` line")),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "witness {}", self.campaign())?;
        match self {
            Check::FunLemma {
                graph,
                tree,
                s,
                t,
                offset,
            } => write!(f, " s={s} t={t} offset={offset}\n{}", graph.to_text(tree))?,
            Check::CofunLemma { graph, tree, s, offset } => {
                write!(f, " s={s} offset={offset}\n{}", graph.to_text(tree))?
            }
            Check::TreeLemma { tree, s } => write!(f, " s={s}\n{tree}")?,
            Check::StructDensity {
                graph,
                row_sizes,
                col_sizes,
                s,
            } => write!(
                f,
                " s={s} rows={} cols={}\n{graph}",
                join_csv(row_sizes),
                join_csv(col_sizes)
            )?,
            Check::RankConn { graph } => write!(f, "\n{graph}")?,
            Check::PertPartition { diff, base } => write!(f, "\n{diff}{base}")?,
            Check::PivotMatroid { matroid } => write!(f, "\n{matroid}")?,
            Check::ConnEquiv { matroid, k } => write!(f, " k={k}\n{matroid}")?,
            Check::AvgExists { graph, k } => write!(f, " k={k}\n{graph}")?,
        }
        writeln!(f, "end")
    }
}

/// Evaluate `K_{s,t}` containment, cross-checking small cases by brute force.
/// `Err` carries a violation message.
fn has_biclique(g: &BiGraph, s: usize, t: usize) -> std::result::Result<bool, String> {
    let found = find_complete_bipartite(g, s, t);
    if let Some(b) = &found {
        if !b.is_valid_in(g) {
            return Err(format!("reported K_{{{s},{t}}} is not a subgraph"));
        }
    }
    if g.a() <= BICLIQUE_ORACLE_SIDE
        && g.b() <= BICLIQUE_ORACLE_SIDE
        && oracle::has_biclique(g, s, t) != found.is_some()
    {
        return Err(format!("K_{{{s},{t}}} search disagrees with brute force"));
    }
    Ok(found.is_some())
}

fn checked_fundamental(graph: &MultiGraph, tree: &SpanningTree) -> Result<std::result::Result<BiGraph, String>> {
    let (_, _, d) = fundamental_matrix(graph, tree)?;
    let expected = oracle::fundamental_matrix_via_cycle_space(graph, tree);
    let agrees = (0..d.nrows()).all(|i| (0..d.ncols()).all(|j| d.get(i, j) == (expected[i][j] == 1)));
    if !agrees {
        return Ok(Err("fundamental matrix disagrees with the cycle-space solution".into()));
    }
    Ok(Ok(crate::matroid::fundamental_graph(graph, tree)?))
}

fn degree_bound_outcome(h: &BiGraph, free_of: String, bound: i64) -> Outcome {
    let min = h.degree_stats().min_degree;
    if min as i64 > bound {
        Outcome::Violation(format!("{free_of}-free graph has minimum degree {min} > {bound}"))
    } else {
        Outcome::Pass
    }
}

fn eval_fun(graph: &MultiGraph, tree: &SpanningTree, s: usize, t: usize, offset: i64) -> Result<Outcome> {
    let h = match checked_fundamental(graph, tree)? {
        Ok(h) => h,
        Err(msg) => return Ok(Outcome::Violation(msg)),
    };
    match has_biclique(&h, s, t) {
        Err(msg) => Ok(Outcome::Violation(msg)),
        Ok(true) => Ok(Outcome::Vacuous),
        Ok(false) => {
            let bound = (2 * s).saturating_sub(2).max(t.saturating_sub(1)) as i64 + offset;
            Ok(degree_bound_outcome(&h, format!("K_{{{s},{t}}}"), bound))
        }
    }
}

fn eval_cofun(graph: &MultiGraph, tree: &SpanningTree, s: usize, offset: i64) -> Result<Outcome> {
    let h = match checked_fundamental(graph, tree)? {
        Ok(h) => h.bipartite_complement(),
        Err(msg) => return Ok(Outcome::Violation(msg)),
    };
    match has_biclique(&h, s, s) {
        Err(msg) => Ok(Outcome::Violation(msg)),
        Ok(true) => Ok(Outcome::Vacuous),
        Ok(false) => {
            let bound = (5 * s).saturating_sub(1) as i64 + offset;
            Ok(degree_bound_outcome(&h, format!("K_{{{s},{s}}}"), bound))
        }
    }
}

fn eval_tree(tree: &Graph, s: usize) -> Result<Outcome> {
    let split = match split_tree(tree, s) {
        Ok(split) => split,
        Err(e) => return Ok(Outcome::Violation(format!("split_tree failed: {e}"))),
    };
    Ok(match check_tree_split(tree, s, &split) {
        Ok(()) => Outcome::Pass,
        Err(msg) => Outcome::Violation(format!("invalid split: {msg}")),
    })
}

fn runs(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut start = 0;
    sizes
        .iter()
        .map(|&len| {
            let run = (start..start + len).collect();
            start += len;
            run
        })
        .collect()
}

fn eval_struct(g: &BiGraph, row_sizes: &[usize], col_sizes: &[usize], s: usize) -> Result<Outcome> {
    if find_complete_bipartite(g, s, s).is_some() {
        return Ok(Outcome::Vacuous);
    }
    let rows = runs(row_sizes);
    let cols = runs(col_sizes);
    Ok(if check_struct_density(g, &rows, &cols, s)? {
        Outcome::Pass
    } else {
        let n = rows.len().max(cols.len());
        Outcome::Violation(format!(
            "K_{{{s},{s}}}-free graph has average degree {} > 10*{n}^2*{s}",
            g.degree_stats().average_degree
        ))
    })
}

fn eval_rankconn(g: &Graph) -> Result<Outcome> {
    if !is_c4_free(g) {
        return Ok(Outcome::Vacuous);
    }
    let k = vertex_connectivity(g);
    if g.n() <= CONNECTIVITY_ORACLE_N {
        let expected = oracle::vertex_connectivity_brute_force(g);
        if expected != k {
            return Ok(Outcome::Violation(format!(
                "vertex connectivity {k} disagrees with brute force {expected}"
            )));
        }
    }
    Ok(match find_low_rank_separation(g, k + 1)? {
        None => Outcome::Pass,
        Some(sep) => Outcome::Violation(format!("{k}-connected C4-free graph has {sep}")),
    })
}

fn eval_pert(diff: &BitMatrix, base: &BiGraph) -> Result<Outcome> {
    let violation = |msg: String| Ok(Outcome::Violation(msg));
    let rows: Vec<Vec<u8>> = (0..diff.nrows())
        .map(|i| (0..diff.ncols()).map(|j| diff.get(i, j) as u8).collect())
        .collect();
    let r = diff.rank();
    if oracle::naive_rank(&rows) != r {
        return violation(format!("rank {r} disagrees with plain elimination"));
    }
    let bound = 1usize << r.min(63);
    let cp = constant_block_partition(diff);
    if cp.row_classes.len() > bound || cp.col_classes.len() > bound {
        return violation(format!(
            "{}x{} classes exceed 2^{r}",
            cp.row_classes.len(),
            cp.col_classes.len()
        ));
    }
    for (i, rc) in cp.row_classes.iter().enumerate() {
        for (j, cc) in cp.col_classes.iter().enumerate() {
            let want = cp.tags[i][j] == BlockTag::One;
            if rc.iter().any(|&a| cc.iter().any(|&b| diff.get(a, b) != want)) {
                return violation(format!("block {i} {j} is not constant {}", cp.tags[i][j]));
            }
        }
    }
    let g1 = BiGraph::new(base.biadjacency().xor(diff)?);
    let pert = perturbation_partition(&g1, base)?;
    if pert.p != r {
        return violation(format!("perturbation rank {} differs from {r}", pert.p));
    }
    if apply_partition(base, &pert.partition).biadjacency() != g1.biadjacency() {
        return violation("applying the tags to the second graph does not give the first".into());
    }
    for (i, rc) in pert.partition.row_classes.iter().enumerate() {
        for (j, cc) in pert.partition.col_classes.iter().enumerate() {
            let flip = pert.partition.tags[i][j] == BlockTag::Complement;
            if rc
                .iter()
                .any(|&a| cc.iter().any(|&b| g1.has_edge(a, b) != (base.has_edge(a, b) ^ flip)))
            {
                return violation(format!("block {i} {j} is not {}", pert.partition.tags[i][j]));
            }
        }
    }
    Ok(Outcome::Pass)
}

fn eval_pivot_matroid(m: &BinaryMatroid) -> Result<Outcome> {
    let circuits = m.circuits()?;
    if circuits != oracle::circuits_brute_force(m) {
        return Ok(Outcome::Violation("circuits disagree with brute force".into()));
    }
    let ground = m.ground();
    let position = |l: u32| ground.binary_search(&l).expect("label in ground set");
    let fg = m.fundamental_graph();
    for (i, &x) in m.basis().iter().enumerate() {
        for (j, &y) in m.cobasis().iter().enumerate() {
            if !m.rep().get(i, j) {
                continue;
            }
            let exchanged = m.change_basis(x, y)?;
            if exchanged.circuits()? != circuits {
                return Ok(Outcome::Violation(format!("exchanging {x} for {y} changes the circuits")));
            }
            if exchanged.fundamental_graph() != pivot(&fg, position(x), position(y))? {
                return Ok(Outcome::Violation(format!(
                    "exchanging {x} for {y} does not pivot the fundamental graph"
                )));
            }
            if exchanged.change_basis(y, x)? != *m {
                return Ok(Outcome::Violation(format!("exchanging {x} for {y} is not undone by the reverse")));
            }
        }
    }
    Ok(Outcome::Pass)
}

fn eval_conn_equiv(m: &BinaryMatroid, k: usize) -> Result<Outcome> {
    let fg = m.fundamental_graph();
    let ground = m.ground();
    let size = ground.len();
    for mask in 0u64..1 << size {
        let set: Vec<u32> = (0..size).filter(|&p| mask >> p & 1 == 1).map(|p| ground[p]).collect();
        let lambda = m.lambda(&set)?;
        let cut = cut_rank_mask(&fg, mask);
        if lambda != cut {
            return Ok(Outcome::Violation(format!(
                "lambda({}) = {lambda} but cut-rank is {cut}",
                join_csv(&set)
            )));
        }
        if size <= LAMBDA_ORACLE_SIZE {
            let expected = oracle::matroid_connectivity_brute_force(m, &set);
            if lambda != expected {
                return Ok(Outcome::Violation(format!(
                    "lambda({}) = {lambda} but r(X) + r(E-X) - r(E) = {expected}",
                    join_csv(&set)
                )));
            }
        }
    }
    for j in 1..=k {
        let matroid_side = m.find_low_connectivity_set(j)?;
        let graph_side = find_low_rank_separation(&fg, j)?;
        let agree = match (&matroid_side, &graph_side) {
            (None, None) => true,
            (Some(w), Some(sep)) => {
                w.order == sep.order && w.set.iter().map(|&l| ground.binary_search(&l).unwrap()).eq(sep.side.iter().copied())
            }
            _ => false,
        };
        if !agree {
            return Ok(Outcome::Violation(format!(
                "for k={j}, matroid search gives {} but fundamental graph gives {}",
                matroid_side.map_or("none".into(), |w| w.to_string()),
                graph_side.map_or("none".into(), |s| s.to_string())
            )));
        }
    }
    Ok(Outcome::Pass)
}

fn eval_avg_exists(g: &Graph, k: usize) -> Result<Outcome> {
    let n = g.n();
    if n > 12 {
        return Err(Error::CapExceeded {
            what: "vertex count",
            value: n,
            cap: 12,
        });
    }
    let stats = g.degree_stats();
    let threshold = num_rational::Ratio::from_integer(4 * k as u64);
    if n == 0 || stats.average_degree < threshold {
        return Ok(Outcome::Vacuous);
    }
    let c4_free = is_c4_free(g);
    let mut connected_found = false;
    let mut rank_found = false;
    // larger sets first: the whole graph is the most likely candidate
    for mask in (1u64..1 << n).rev() {
        if mask.count_ones() as usize <= 2 * k {
            continue;
        }
        let vertices: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let h = g.induced(&vertices);
        if !connected_found && vertex_connectivity(&h) > k {
            connected_found = true;
        }
        if c4_free
            && !rank_found
            && h.degree_stats().average_degree >= num_rational::Ratio::from_integer(k as u64 + 1)
            && find_low_rank_separation(&h, k + 2)?.is_none()
        {
            rank_found = true;
        }
        if connected_found && (rank_found || !c4_free) {
            return Ok(Outcome::Pass);
        }
    }
    Ok(Outcome::Violation(if connected_found {
        format!("no ({})-rank-connected induced subgraph with average degree at least {}", k + 2, k + 1)
    } else {
        format!("no ({})-connected induced subgraph on more than {} vertices", k + 1, 2 * k)
    }))
}

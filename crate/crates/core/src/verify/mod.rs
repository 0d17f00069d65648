//! Seeded property campaigns with replayable counterexamples.
//!
//! A campaign turns a master seed into a sequence of trials. Each trial
//! draws its own seed from the master generator, builds one instance and
//! produces one or more [`Check`]s. Trials are evaluated in parallel and
//! aggregated in trial order, so a report depends only on the campaign,
//! its parameters and the seed.

mod check;
pub mod oracle;
pub mod enumerate;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use check::{Check, Outcome};

use crate::cutrank::subset_cap;
use crate::error::{Error, Result};
use crate::extremal::{gen_c6_blowup_example, gen_ktt_example, gen_random_instance, Instance};
use crate::gf2::BitMatrix;
use crate::graph::{is_c4_free, BiGraph, Graph};
use crate::matroid::{BinaryMatroid, CIRCUIT_CAP};
use crate::text::{parse_err, Lines};

/// Largest number of trials accepted by any campaign.
pub const MAX_TRIALS: usize = 1_000_000;

/// Vacuous fraction above which a report carries a warning.
pub const VACUOUS_WARNING_FRACTION: f64 = 0.9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Campaign {
    FunLemma,
    CofunLemma,
    TreeLemma,
    StructDensity,
    RankconnLemma,
    PertPartition,
    PivotMatroid,
    ConnEquiv,
    AvgExists,
}

impl Campaign {
    pub const ALL: [Campaign; 9] = [
        Campaign::FunLemma,
        Campaign::CofunLemma,
        Campaign::TreeLemma,
        Campaign::StructDensity,
        Campaign::RankconnLemma,
        Campaign::PertPartition,
        Campaign::PivotMatroid,
        Campaign::ConnEquiv,
        Campaign::AvgExists,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Campaign::FunLemma => "fun-lemma",
            Campaign::CofunLemma => "cofun-lemma",
            Campaign::TreeLemma => "tree-lemma",
            Campaign::StructDensity => "struct-density",
            Campaign::RankconnLemma => "rankconn-lemma",
            Campaign::PertPartition => "pert-partition",
            Campaign::PivotMatroid => "pivot-matroid",
            Campaign::ConnEquiv => "conn-equiv",
            Campaign::AvgExists => "avg-exists",
        }
    }
}

impl fmt::Display for Campaign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Campaign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Campaign::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCampaign(s.to_string()))
    }
}

/// Where the fundamental-graph campaigns take their instances from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Source {
    #[default]
    Random,
    /// The fixed instance `gen_ktt_example(t)`.
    Ktt(usize),
    /// The fixed instance `gen_c6_blowup_example(s)`.
    C6Blowup(usize),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Random => f.write_str("random"),
            Source::Ktt(t) => write!(f, "ktt:{t}"),
            Source::C6Blowup(s) => write!(f, "c6blowup:{s}"),
        }
    }
}

impl FromStr for Source {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("unknown source {s:?}; expected random, ktt:T or c6blowup:S"));
        if s == "random" {
            return Ok(Source::Random);
        }
        let (kind, value) = s.split_once(':').ok_or_else(bad)?;
        let value: usize = value.parse().map_err(|_| bad())?;
        if value < 2 {
            return Err(Error::InvalidArgument(format!("source parameter must be at least 2, got {value}")));
        }
        match kind {
            "ktt" => Ok(Source::Ktt(value)),
            "c6blowup" => Ok(Source::C6Blowup(value)),
            _ => Err(bad()),
        }
    }
}

/// Campaign parameters. `None` selects the campaign default; after
/// [`resolve`](CampaignParams::resolve) a remaining `None` for `s` or `t`
/// means "every value in the default range" and elsewhere "not used".
///
/// | campaign       | trials | max_n                 | other                          |
/// |----------------|--------|-----------------------|--------------------------------|
/// | fun-lemma      | 500    | 10 tree vertices      | max_extra 6, 1 <= s <= t <= 4  |
/// | cofun-lemma    | 500    | 10 tree vertices      | max_extra 6, s in 1..=3        |
/// | tree-lemma     | all    | 11 edges              | every s with 5s <= edges       |
/// | struct-density | 200    | 4 vertices per class  | blocks 2, s in 1..=3           |
/// | rankconn-lemma | 10000  | 8 vertices            | exhaustive: all C4-free graphs |
/// | pert-partition | 200    | 8 (square size)       | k 4 (maximum rank)             |
/// | pivot-matroid  | 200    | 10 elements           |                                |
/// | conn-equiv     | 100    | 10 elements           | k 4                            |
/// | avg-exists     | 200    | 12 vertices           | k 1 (the only value accepted)  |
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CampaignParams {
    pub s: Option<usize>,
    pub t: Option<usize>,
    pub k: Option<usize>,
    pub trials: Option<usize>,
    pub max_n: Option<usize>,
    pub max_extra: Option<usize>,
    pub blocks: Option<usize>,
    /// Added to the bound being checked; negative values make the check
    /// stricter than the statement and are meant for self-tests.
    pub offset: i64,
    pub source: Source,
    pub exhaustive: bool,
}

fn cap(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::CapExceeded { what, value, cap })
    } else {
        Ok(())
    }
}

fn at_least(what: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::InvalidArgument(format!("{what} must be at least {min}, got {value}")))
    } else {
        Ok(())
    }
}

impl CampaignParams {
    /// Fill in defaults for `campaign` and check the size caps.
    pub fn resolve(&self, campaign: Campaign) -> Result<CampaignParams> {
        let mut p = CampaignParams {
            offset: self.offset,
            ..Default::default()
        };
        let fixed_source = self.source != Source::Random;
        if fixed_source && !matches!(campaign, Campaign::FunLemma | Campaign::CofunLemma) {
            return Err(Error::InvalidArgument(format!("{campaign} only draws random instances")));
        }
        if self.exhaustive && campaign != Campaign::RankconnLemma {
            return Err(Error::InvalidArgument(format!("{campaign} has no exhaustive mode")));
        }
        if let Some(s) = self.s {
            at_least("s", s, 1)?;
        }
        if let Some(t) = self.t {
            at_least("t", t, 1)?;
        }
        match campaign {
            Campaign::FunLemma | Campaign::CofunLemma => {
                p.s = self.s;
                if campaign == Campaign::FunLemma {
                    p.t = self.t;
                    if let (Some(s), Some(t)) = (p.s, p.t) {
                        if s > t {
                            return Err(Error::InvalidArgument(format!("need s <= t, got s={s} t={t}")));
                        }
                    }
                }
                p.source = self.source;
                if fixed_source {
                    p.trials = Some(1);
                } else {
                    p.trials = Some(self.trials.unwrap_or(500));
                    p.max_n = Some(self.max_n.unwrap_or(10));
                    p.max_extra = Some(self.max_extra.unwrap_or(6));
                    at_least("max_n", p.max_n.unwrap(), 2)?;
                    cap("max_n", p.max_n.unwrap(), 32)?;
                    cap("max_extra", p.max_extra.unwrap(), 32)?;
                }
                cap("s", p.s.unwrap_or(1), 16)?;
                cap("t", p.t.unwrap_or(1), 16)?;
            }
            Campaign::TreeLemma => {
                p.s = self.s;
                p.max_n = Some(self.max_n.unwrap_or(11));
                cap("max_n", p.max_n.unwrap(), 13)?;
            }
            Campaign::StructDensity => {
                p.s = self.s;
                p.trials = Some(self.trials.unwrap_or(200));
                p.max_n = Some(self.max_n.unwrap_or(4));
                p.blocks = Some(self.blocks.unwrap_or(2));
                at_least("max_n", p.max_n.unwrap(), 1)?;
                at_least("blocks", p.blocks.unwrap(), 1)?;
                cap("max_n", p.max_n.unwrap(), 8)?;
                cap("blocks", p.blocks.unwrap(), 4)?;
                cap("s", p.s.unwrap_or(1), 8)?;
            }
            Campaign::RankconnLemma => {
                p.exhaustive = self.exhaustive;
                if self.exhaustive {
                    p.max_n = Some(self.max_n.unwrap_or(8));
                    cap("max_n", p.max_n.unwrap(), 9)?;
                } else {
                    p.trials = Some(self.trials.unwrap_or(10_000));
                    p.max_n = Some(self.max_n.unwrap_or(8));
                    at_least("max_n", p.max_n.unwrap(), 1)?;
                    cap("max_n", p.max_n.unwrap(), 12.min(subset_cap()))?;
                }
            }
            Campaign::PertPartition => {
                p.trials = Some(self.trials.unwrap_or(200));
                p.max_n = Some(self.max_n.unwrap_or(8));
                p.k = Some(self.k.unwrap_or(4));
                cap("max_n", p.max_n.unwrap(), 64)?;
                cap("k", p.k.unwrap(), p.max_n.unwrap())?;
            }
            Campaign::PivotMatroid => {
                p.trials = Some(self.trials.unwrap_or(200));
                p.max_n = Some(self.max_n.unwrap_or(10));
                cap("max_n", p.max_n.unwrap(), CIRCUIT_CAP)?;
            }
            Campaign::ConnEquiv => {
                p.trials = Some(self.trials.unwrap_or(100));
                p.max_n = Some(self.max_n.unwrap_or(10));
                p.k = Some(self.k.unwrap_or(4));
                cap("max_n", p.max_n.unwrap(), 12.min(subset_cap()))?;
                cap("k", p.k.unwrap(), p.max_n.unwrap())?;
            }
            Campaign::AvgExists => {
                p.trials = Some(self.trials.unwrap_or(200));
                p.max_n = Some(self.max_n.unwrap_or(12));
                p.k = Some(self.k.unwrap_or(1));
                at_least("k", p.k.unwrap(), 1)?;
                cap("k", p.k.unwrap(), 1)?;
                at_least("max_n", p.max_n.unwrap(), 5)?;
                cap("max_n", p.max_n.unwrap(), 12)?;
            }
        }
        if let Some(trials) = p.trials {
            cap("trials", trials, MAX_TRIALS)?;
        }
        Ok(p)
    }

    fn write_lines(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
        writeln!(f, "s={}", show(self.s))?;
        writeln!(f, "t={}", show(self.t))?;
        writeln!(f, "k={}", show(self.k))?;
        writeln!(f, "trials={}", show(self.trials))?;
        writeln!(f, "max_n={}", show(self.max_n))?;
        writeln!(f, "max_extra={}", show(self.max_extra))?;
        writeln!(f, "blocks={}", show(self.blocks))?;
        writeln!(f, "offset={}", self.offset)?;
        writeln!(f, "source={}", self.source)?;
        writeln!(f, "exhaustive={}", self.exhaustive)
    }
}

/// A check that failed, with the trial it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub trial: usize,
    pub reason: String,
    pub check: Check,
}

/// Outcome of a campaign run.
#[derive(Clone, Debug)]
pub struct CampaignReport {
    pub campaign: Campaign,
    /// Parameters after defaults were applied.
    pub params: CampaignParams,
    pub seed: u64,
    pub trials_run: usize,
    pub checks: usize,
    pub vacuous: usize,
    pub violations: Vec<Violation>,
    /// Wall-clock time; not part of the serialized report.
    pub elapsed: Duration,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn vacuous_warning(&self) -> Option<String> {
        if self.checks > 0 && self.vacuous as f64 > VACUOUS_WARNING_FRACTION * self.checks as f64 {
            Some(format!(
                "{} of {} checks had a false hypothesis",
                self.vacuous, self.checks
            ))
        } else {
            None
        }
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl PartialEq for CampaignReport {
    fn eq(&self, other: &Self) -> bool {
        self.to_string() == other.to_string()
    }
}

impl fmt::Display for CampaignReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })?;
        writeln!(f, "campaign={}", self.campaign)?;
        writeln!(f, "seed={}", self.seed)?;
        self.params.write_lines(f)?;
        writeln!(f, "trials_run={}", self.trials_run)?;
        writeln!(f, "checks={}", self.checks)?;
        writeln!(
            f,
            "passed={}",
            self.checks - self.vacuous - self.violations.len()
        )?;
        writeln!(f, "vacuous={}", self.vacuous)?;
        writeln!(f, "violations={}", self.violations.len())?;
        if let Some(w) = self.vacuous_warning() {
            writeln!(f, "warning={w}")?;
        }
        for v in &self.violations {
            writeln!(f, "violation trial={} reason={}", v.trial, v.reason)?;
            write!(f, "{}", v.check)?;
        }
        Ok(())
    }
}

/// Run a campaign.
pub fn run_campaign(campaign: Campaign, params: &CampaignParams, seed: u64) -> Result<CampaignReport> {
    let start = Instant::now();
    let params = params.resolve(campaign)?;
    let trials = plan_trials(campaign, &params, seed);
    let trials_run = trials.len();
    let evaluated: Vec<Vec<(Check, Outcome)>> = trials
        .into_par_iter()
        .map(|trial| {
            trial
                .build(campaign, &params)
                .into_iter()
                .map(|c| {
                    let outcome = c.evaluate();
                    (c, outcome)
                })
                .collect()
        })
        .collect();
    let mut report = CampaignReport {
        campaign,
        params,
        seed,
        trials_run,
        checks: 0,
        vacuous: 0,
        violations: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for (trial, checks) in evaluated.into_iter().enumerate() {
        for (check, outcome) in checks {
            report.checks += 1;
            match outcome {
                Outcome::Pass => {}
                Outcome::Vacuous => report.vacuous += 1,
                Outcome::Violation(reason) => report.violations.push(Violation { trial, reason, check }),
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// What a single trial is built from.
enum Trial {
    Seeded(u64),
    Tree(Graph, usize),
    Graph(Graph),
}

fn plan_trials(campaign: Campaign, params: &CampaignParams, seed: u64) -> Vec<Trial> {
    match campaign {
        Campaign::TreeLemma => {
            let mut out = Vec::new();
            for edges in 1..=params.max_n.unwrap() {
                for tree in enumerate::free_trees(edges) {
                    for root in 0..tree.n() {
                        let mut rooted = tree.clone();
                        rooted.swap_labels(0, root);
                        out.push(Trial::Tree(rooted, edges));
                    }
                }
            }
            out
        }
        Campaign::RankconnLemma if params.exhaustive => enumerate::c4_free_graphs(params.max_n.unwrap())
            .into_iter()
            .flatten()
            .map(Trial::Graph)
            .collect(),
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..params.trials.unwrap()).map(|_| Trial::Seeded(rng.gen())).collect()
        }
    }
}

impl Trial {
    fn build(self, campaign: Campaign, params: &CampaignParams) -> Vec<Check> {
        match self {
            Trial::Tree(tree, edges) => {
                let s_values: Vec<usize> = match params.s {
                    Some(s) if 5 * s <= edges => vec![s],
                    Some(_) => vec![],
                    None => (1..=edges / 5).collect(),
                };
                s_values
                    .into_iter()
                    .map(|s| Check::TreeLemma { tree: tree.clone(), s })
                    .collect()
            }
            Trial::Graph(graph) => vec![Check::RankConn { graph }],
            Trial::Seeded(seed) => build_seeded(campaign, params, &mut ChaCha8Rng::seed_from_u64(seed)),
        }
    }
}

fn fundamental_instance(params: &CampaignParams, rng: &mut ChaCha8Rng) -> Instance {
    match params.source {
        Source::Ktt(t) => gen_ktt_example(t),
        Source::C6Blowup(s) => gen_c6_blowup_example(s),
        Source::Random => {
            let n = rng.gen_range(2..=params.max_n.unwrap());
            let extra = rng.gen_range(0..=params.max_extra.unwrap());
            gen_random_instance(n, extra, rng.gen())
        }
    }
}

fn build_seeded(campaign: Campaign, params: &CampaignParams, rng: &mut ChaCha8Rng) -> Vec<Check> {
    match campaign {
        Campaign::FunLemma => {
            let i = fundamental_instance(params, rng);
            let pairs: Vec<(usize, usize)> = match (params.s, params.t) {
                (Some(s), Some(t)) => vec![(s, t)],
                (Some(s), None) => (s..=4.max(s)).map(|t| (s, t)).collect(),
                (None, Some(t)) => (1..=t.min(4)).map(|s| (s, t)).collect(),
                (None, None) => (1..=4).flat_map(|s| (s..=4).map(move |t| (s, t))).collect(),
            };
            pairs
                .into_iter()
                .map(|(s, t)| Check::FunLemma {
                    graph: i.multigraph.clone(),
                    tree: i.tree.clone(),
                    s,
                    t,
                    offset: params.offset,
                })
                .collect()
        }
        Campaign::CofunLemma => {
            let i = fundamental_instance(params, rng);
            let s_values: Vec<usize> = params.s.map_or((1..=3).collect(), |s| vec![s]);
            s_values
                .into_iter()
                .map(|s| Check::CofunLemma {
                    graph: i.multigraph.clone(),
                    tree: i.tree.clone(),
                    s,
                    offset: params.offset,
                })
                .collect()
        }
        Campaign::StructDensity => {
            let (graph, row_sizes, col_sizes) = block_grid(params.blocks.unwrap(), params.max_n.unwrap(), rng);
            let s_values: Vec<usize> = params.s.map_or((1..=3).collect(), |s| vec![s]);
            s_values
                .into_iter()
                .map(|s| Check::StructDensity {
                    graph: graph.clone(),
                    row_sizes: row_sizes.clone(),
                    col_sizes: col_sizes.clone(),
                    s,
                })
                .collect()
        }
        Campaign::RankconnLemma => {
            let n = rng.gen_range(1..=params.max_n.unwrap());
            let graph = if rng.gen_bool(0.5) {
                random_maximal_c4_free(n, rng)
            } else {
                random_sparse_c4_free(n, rng)
            };
            vec![Check::RankConn { graph }]
        }
        Campaign::PertPartition => {
            let n = params.max_n.unwrap();
            let r = rng.gen_range(0..=params.k.unwrap());
            let u = random_matrix(n, r, rng);
            let v = random_matrix(r, n, rng);
            let diff = u.mul(&v).expect("compatible shapes");
            let base = BiGraph::new(random_matrix(n, n, rng));
            vec![Check::PertPartition { diff, base }]
        }
        Campaign::PivotMatroid => vec![Check::PivotMatroid {
            matroid: random_matroid(params.max_n.unwrap(), rng),
        }],
        Campaign::ConnEquiv => vec![Check::ConnEquiv {
            matroid: random_matroid(params.max_n.unwrap(), rng),
            k: params.k.unwrap(),
        }],
        Campaign::AvgExists => {
            let k = params.k.unwrap();
            let n = rng.gen_range((4 * k + 1).max(5)..=params.max_n.unwrap());
            vec![Check::AvgExists {
                graph: random_graph_with_average(n, 4 * k, rng),
                k,
            }]
        }
        Campaign::TreeLemma => unreachable!("tree-lemma is exhaustive"),
    }
}

fn random_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> BitMatrix {
    BitMatrix::from_fn(rows, cols, |_, _| rng.gen_bool(0.5))
}

/// Binary matroid on `1..=max_size` elements with random rank,
/// representation and labelling.
pub fn random_matroid(max_size: usize, rng: &mut ChaCha8Rng) -> BinaryMatroid {
    let size = rng.gen_range(1..=max_size);
    let r = rng.gen_range(0..=size);
    let rep = random_matrix(r, size - r, rng);
    let mut labels: Vec<u32> = (0..size as u32).collect();
    labels.shuffle(rng);
    let cobasis = labels.split_off(r);
    BinaryMatroid::new(labels, cobasis, rep).expect("labels are distinct")
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Add edges in random order, skipping any that would close a 4-cycle.
fn random_maximal_c4_free(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut pairs = all_pairs(n);
    pairs.shuffle(rng);
    let mut g = Graph::new(n);
    for (u, v) in pairs {
        g.add_edge(u, v);
        if !is_c4_free(&g) {
            g.remove_edge(u, v);
        }
    }
    g
}

/// `G(n, p)` with a random sparse `p`, resampled until `C4`-free.
fn random_sparse_c4_free(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let pairs = all_pairs(n);
    let p = rng.gen_range(0.1..0.6);
    loop {
        let edges: Vec<_> = pairs.iter().copied().filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::from_edges(n, &edges);
        if is_c4_free(&g) {
            return g;
        }
    }
}

/// Uniform graph on `n` vertices with a random number of edges, at least
/// enough for average degree `average`.
fn random_graph_with_average(n: usize, average: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut pairs = all_pairs(n);
    let min_edges = (n * average).div_ceil(2).min(pairs.len());
    let m = rng.gen_range(min_edges..=pairs.len());
    pairs.shuffle(rng);
    Graph::from_edges(n, &pairs[..m])
}

/// A `blocks x blocks` grid whose blocks are fundamental graphs of random
/// instances or their bipartite complements. Returns the graph and the
/// class sizes on each side.
fn block_grid(blocks: usize, max_class: usize, rng: &mut ChaCha8Rng) -> (BiGraph, Vec<usize>, Vec<usize>) {
    let rows: Vec<usize> = (0..blocks).map(|_| rng.gen_range(1..=max_class)).collect();
    let cols: Vec<usize> = (0..blocks).map(|_| rng.gen_range(1..=max_class)).collect();
    let offsets = |sizes: &[usize]| -> Vec<usize> {
        sizes
            .iter()
            .scan(0, |acc, &x| {
                let start = *acc;
                *acc += x;
                Some(start)
            })
            .collect()
    };
    let (row_start, col_start) = (offsets(&rows), offsets(&cols));
    let mut m = BitMatrix::zeros(rows.iter().sum(), cols.iter().sum());
    for (i, &a) in rows.iter().enumerate() {
        for (j, &b) in cols.iter().enumerate() {
            // a tree on a + 1 vertices has a edges; b extra edges are the cotree
            let instance = gen_random_instance(a + 1, b, rng.gen());
            let mut block = instance.fundamental;
            if rng.gen_bool(0.5) {
                block = block.bipartite_complement();
            }
            for (x, y) in block.edges() {
                m.set(row_start[i] + x, col_start[j] + y, true);
            }
        }
    }
    (BiGraph::new(m), rows, cols)
}

/// Result of re-evaluating one recorded violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Replay {
    pub trial: usize,
    pub recorded_reason: String,
    pub outcome: Outcome,
}

impl Replay {
    pub fn reproduced(&self) -> bool {
        matches!(self.outcome, Outcome::Violation(_))
    }
}

/// Extract the violations recorded in a serialized report.
pub fn parse_violations(report: &str) -> Result<Vec<Violation>> {
    let mut lines = Lines::new(report);
    let mut out = Vec::new();
    while let Some((line, text)) = lines.peek_line() {
        let Some(rest) = text.strip_prefix("violation ") else {
            lines.next_line();
            continue;
        };
        lines.next_line();
        let (trial, reason) = rest
            .strip_prefix("trial=")
            .and_then(|r| r.split_once(" reason="))
            .ok_or_else(|| parse_err(line, "expected `violation trial=N reason=...`"))?;
        let trial = crate::text::parse_num(line, trial)?;
        let check = Check::parse_from(&mut lines)?;
        out.push(Violation {
            trial,
            reason: reason.to_string(),
            check,
        });
    }
    Ok(out)
}

/// Re-evaluate every witness recorded in a serialized report.
pub fn replay_report(report: &str) -> Result<Vec<Replay>> {
    Ok(parse_violations(report)?
        .into_iter()
        .map(|v| Replay {
            trial: v.trial,
            outcome: v.check.evaluate(),
            recorded_reason: v.reason,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> CampaignParams {
        CampaignParams::default()
    }

    #[test]
    fn names_round_trip() {
        for c in Campaign::ALL {
            assert_eq!(c.name().parse::<Campaign>().unwrap(), c);
        }
        assert!(matches!("lemma-9".parse::<Campaign>(), Err(Error::UnknownCampaign(_))));
        assert_eq!("ktt:5".parse::<Source>().unwrap(), Source::Ktt(5));
        assert_eq!("c6blowup:3".parse::<Source>().unwrap().to_string(), "c6blowup:3");
        assert!("ktt:1".parse::<Source>().is_err());
    }

    #[test]
    fn caps_are_enforced() {
        let big = CampaignParams {
            max_n: Some(40),
            ..params()
        };
        assert!(matches!(run_campaign(Campaign::FunLemma, &big, 1), Err(Error::CapExceeded { .. })));
        let k2 = CampaignParams { k: Some(2), ..params() };
        assert!(matches!(run_campaign(Campaign::AvgExists, &k2, 1), Err(Error::CapExceeded { .. })));
        let exhaustive = CampaignParams {
            exhaustive: true,
            max_n: Some(10),
            ..params()
        };
        assert!(matches!(
            run_campaign(Campaign::RankconnLemma, &exhaustive, 1),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn small_campaigns_pass_and_are_deterministic() {
        let p = CampaignParams {
            trials: Some(20),
            ..params()
        };
        for c in [
            Campaign::FunLemma,
            Campaign::CofunLemma,
            Campaign::StructDensity,
            Campaign::PertPartition,
            Campaign::PivotMatroid,
            Campaign::ConnEquiv,
            Campaign::RankconnLemma,
        ] {
            let a = run_campaign(c, &p, 7).unwrap();
            assert!(a.passed(), "{a}");
            assert_eq!(a.trials_run, 20);
            assert_eq!(a.to_text(), run_campaign(c, &p, 7).unwrap().to_text());
        }
    }

    #[test]
    fn self_test_finds_and_replays_violations() {
        let p = CampaignParams {
            s: Some(2),
            t: Some(5),
            offset: -1,
            source: Source::Ktt(5),
            ..params()
        };
        let report = run_campaign(Campaign::FunLemma, &p, 1).unwrap();
        assert!(!report.passed());
        let text = report.to_text();
        assert!(text.starts_with("FAIL\n"));
        let replays = replay_report(&text).unwrap();
        assert_eq!(replays.len(), 1);
        assert!(replays[0].reproduced());
        assert_eq!(parse_violations(&text).unwrap(), report.violations);
    }
}

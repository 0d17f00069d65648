//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::collections::BTreeSet;
use std::io::Write;
use std::panic;
use std::process::{Command, Output, Stdio};
use std::time::Instant;

use pivotkit::extremal::gen_random_instance_with;
use pivotkit::graph::{blow_up, find_complete_bipartite, BiGraph, Degrees, Graph};
use pivotkit::matroid::{graphic_matroid, MultiGraph};
use pivotkit::pivot::{are_isomorphic, pivot};
use pivotkit::verify::oracle::cycles_brute_force;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BIN: &str = env!("CARGO_BIN_EXE_pivotkit");

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn run_ok(args: &[&str], stdin: &str) -> String {
    let out = run(args, stdin);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

/// Fundamental graph of a generated instance through the CLI pipeline.
fn pipeline(gen: &[&str]) -> (MultiGraph, BiGraph) {
    let instance = run_ok(gen, "");
    let (g, _) = MultiGraph::parse(&instance).unwrap();
    let h: BiGraph = run_ok(&["fundgraph", "-"], &instance).parse().unwrap();
    (g, h)
}

/// Sufficient planarity test: strip vertices of degree at most one and
/// smooth vertices of degree two in the underlying simple graph; if at most
/// four vertices remain, the graph is a subdivision of a graph on four
/// vertices plus trees, hence planar.
fn reduces_to_small_graph(g: &MultiGraph) -> bool {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for e in g.edges().iter().filter(|e| !e.is_loop()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    let mut alive: BTreeSet<usize> = (0..n).collect();
    loop {
        let Some(&v) = alive.iter().find(|&&v| adj[v].len() <= 2) else {
            break;
        };
        let nbrs: Vec<usize> = adj[v].iter().copied().collect();
        for &u in &nbrs {
            adj[u].remove(&v);
        }
        if let [a, b] = nbrs[..] {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj[v].clear();
        alive.remove(&v);
    }
    alive.len() <= 4
}

fn regular_degree(h: &BiGraph) -> Option<usize> {
    let s = h.degree_stats();
    (s.min_degree == s.max_degree).then_some(s.min_degree)
}

fn criterion_1() {
    let (g, h) = pipeline(&["gen", "ktt", "5"]);
    assert!(reduces_to_small_graph(&g), "multigraph is planar");
    assert_eq!((h.a(), h.b(), h.edge_count()), (4, 4, 16));
    assert!(are_isomorphic(&h.to_graph(), &BiGraph::complete(4, 4).to_graph()));
    assert_eq!(h.degree_stats().min_degree, 4);
    assert!(find_complete_bipartite(&h, 2, 5).is_none());
    let bound = (2 * 2 - 2usize).max(5 - 1);
    assert_eq!(h.degree_stats().min_degree, bound);
}

fn criterion_2() {
    let (g, h) = pipeline(&["gen", "c6blowup", "4"]);
    assert!(reduces_to_small_graph(&g), "multigraph is planar");
    assert_eq!(h.a() + h.b(), 18);
    assert!(are_isomorphic(&h.to_graph(), &blow_up(&Graph::cycle(6), 3)));
    assert_eq!(regular_degree(&h), Some(6));
    assert!(find_complete_bipartite(&h, 4, 6).is_none());
    assert!(find_complete_bipartite(&h, 4, 4).is_none());
    assert_eq!(h.degree_stats().min_degree, 2 * 4 - 2);
}

/// Run a campaign through the CLI and require a clean pass.
fn campaign_passes(args: &[&str]) -> String {
    let mut full = vec!["check"];
    full.extend_from_slice(args);
    let report = run_ok(&full, "");
    assert!(report.starts_with("PASS\n"), "{report}");
    assert!(report.contains("\nviolations=0\n"), "{report}");
    report
}

fn field(report: &str, key: &str) -> usize {
    report
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no {key} in report"))
        .parse()
        .unwrap()
}

fn criterion_3() {
    let r = campaign_passes(&["fun-lemma", "--trials", "500", "--max-n", "10", "--max-extra", "6", "--seed", "1"]);
    assert_eq!(field(&r, "trials_run"), 500);
    // ten (s, t) pairs per instance
    assert_eq!(field(&r, "checks"), 5000);
    assert!(field(&r, "passed") > 0);
}

fn criterion_4() {
    let r = campaign_passes(&["cofun-lemma", "--trials", "500", "--seed", "1"]);
    assert_eq!(field(&r, "trials_run"), 500);
    assert_eq!(field(&r, "checks"), 1500);
    assert!(field(&r, "passed") > 0);
}

fn criterion_5() {
    let r = campaign_passes(&["tree-lemma", "--max-n", "11", "--seed", "1"]);
    assert_eq!(field(&r, "vacuous"), 0);
    assert!(field(&r, "checks") > 0);
}

fn criterion_6() {
    let r = campaign_passes(&["pert-partition", "--trials", "200", "--max-n", "8", "--k", "4", "--seed", "1"]);
    assert_eq!(field(&r, "passed"), 200);
}

fn criterion_7() {
    for n in 2..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<_> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
            let g = Graph::from_edges(n, &edges);
            for &(x, y) in &edges {
                let p = pivot(&g, x, y).unwrap();
                assert_eq!(pivot(&p, x, y).unwrap(), g);
                assert_eq!(pivot(&g, y, x).unwrap(), p);
                assert_eq!(p.is_bipartite(), g.is_bipartite());
            }
        }
    }
}

fn criterion_8() {
    let r = campaign_passes(&["pivot-matroid", "--trials", "200", "--max-n", "10", "--seed", "1"]);
    assert_eq!(field(&r, "passed"), 200);
}

fn criterion_9() {
    let r = campaign_passes(&["conn-equiv", "--trials", "100", "--max-n", "10", "--k", "4", "--seed", "1"]);
    assert_eq!(field(&r, "passed"), 100);
}

fn criterion_10() {
    let all = campaign_passes(&["rankconn-lemma", "--exhaustive", "--max-n", "8", "--seed", "1"]);
    assert_eq!(field(&all, "vacuous"), 0);
    let sampled = campaign_passes(&["rankconn-lemma", "--trials", "10000", "--max-n", "8", "--seed", "1"]);
    assert_eq!(field(&sampled, "passed"), 10_000);
}

fn criterion_11() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.gen_range(2..=7);
        let extra = rng.gen_range(0..=10 - n);
        let loops = rng.gen_bool(0.3);
        let i = gen_random_instance_with(n, extra, rng.gen(), loops);
        let g = &i.multigraph;
        assert!(g.edges().len() <= 9);
        let m = graphic_matroid(g, &i.tree).unwrap();
        assert_eq!(m.circuits().unwrap(), cycles_brute_force(g));
        for e in g.edges() {
            let deleted = m.minor(&[e.label], &[]).unwrap();
            assert_eq!(deleted.circuits().unwrap(), cycles_brute_force(&g.delete(e.label)));
            let contracted = m.minor(&[], &[e.label]).unwrap();
            assert_eq!(contracted.circuits().unwrap(), cycles_brute_force(&g.contract(e.label)));
        }
    }
}

/// The lowered bound must fail, exit 1, and replay to the same verdict.
fn self_test(args: &[&str]) {
    let mut full = vec!["check", "fun-lemma", "--offset", "-1", "--seed", "1"];
    full.extend_from_slice(args);
    let out = run(&full, "");
    assert_eq!(out.status.code(), Some(1));
    let report = stdout(&out);
    assert!(report.starts_with("FAIL\n"), "{report}");
    assert!(field(&report, "violations") > 0);
    let replay = run(&["replay", "-"], &report);
    assert_eq!(replay.status.code(), Some(1));
    let text = stdout(&replay);
    assert!(!text.contains("not-reproduced"), "{text}");
    assert_eq!(field(&text, "replayed"), field(&report, "violations"));
}

fn criterion_12() {
    self_test(&["--source", "ktt:5", "--s", "2", "--t", "5"]);
    self_test(&["--source", "c6blowup:3"]);
    // the unmodified bound holds on both tight examples
    campaign_passes(&["fun-lemma", "--source", "ktt:5", "--seed", "1"]);
    campaign_passes(&["fun-lemma", "--source", "c6blowup:3", "--seed", "1"]);
}

fn criterion_13() {
    let c4 = "graph 4\n0 1\n1 2\n2 3\n0 3\n";
    let instance = run_ok(&["gen", "random", "7", "5", "--seed", "3"], "");
    let matroid = run_ok(&["matroid", "graphic", "-"], &instance);
    let tree = "graph 12\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n9 10\n10 11\n";
    let matrix = "matrix 3 3\n110\n011\n101\n";
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["gen", "ktt", "5"], ""),
        (vec!["gen", "c6blowup", "3"], ""),
        (vec!["gen", "random", "7", "5", "--seed", "3"], ""),
        (vec!["gen", "random", "7", "5", "--seed", "3", "--loops"], ""),
        (vec!["fundgraph", "-"], &instance),
        (vec!["pivot", "-", "0", "1"], c4),
        (vec!["cutrank", "-", "--set", "0,1"], c4),
        (vec!["rankconn", "-", "3"], c4),
        (vec!["matroid", "graphic", "-"], &instance),
        (vec!["matroid", "cographic", "-"], &instance),
        (vec!["matroid", "circuits", "-"], &matroid),
        (vec!["matroid", "minor", "-", "--delete", "0", "--contract", "1"], &matroid),
        (vec!["matroid", "lambda", "-", "--set", "0,1,2"], &matroid),
        (vec!["matroid", "connectivity", "-", "3"], &matroid),
        (vec!["splittree", "-", "2"], tree),
        (vec!["partition", "-"], matrix),
        (vec!["check", "fun-lemma", "--trials", "50", "--seed", "9"], ""),
        (vec!["check", "struct-density", "--trials", "50", "--seed", "9"], ""),
        (vec!["check", "avg-exists", "--trials", "20", "--seed", "9"], ""),
    ];
    for (args, input) in &cases {
        let first = run(args, input);
        let second = run(args, input);
        assert_eq!(first.stdout, second.stdout, "{args:?} is not deterministic");
        assert_eq!(first.status.code(), second.status.code());
        assert!(matches!(first.status.code(), Some(0 | 1)), "{args:?}");
        assert!(!first.stdout.is_empty(), "{args:?} printed nothing");
    }
    let dir = std::env::temp_dir().join(format!("pivotkit-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (h_file, g_file) = (dir.join("h.graph"), dir.join("g.graph"));
    std::fs::write(&h_file, "graph 3\n0 1\n1 2\n").unwrap();
    std::fs::write(&g_file, c4).unwrap();
    let args = ["pivotminor", h_file.to_str().unwrap(), g_file.to_str().unwrap(), "--budget", "1000"];
    let first = run(&args, "");
    assert_eq!(first.status.code(), Some(0));
    assert!(stdout(&first).starts_with("yes\n"));
    assert_eq!(first.stdout, run(&args, "").stdout);
    std::fs::remove_dir_all(&dir).unwrap();

    // round trips of every serialization
    let (g, tree_marks) = MultiGraph::parse(&instance).unwrap();
    assert_eq!(format!("# gen random n=7 extra=5 seed=3\n{}", g.to_text(&tree_marks)), instance);
    let fundamental = run_ok(&["fundgraph", "-"], &instance);
    let h: BiGraph = fundamental.parse().unwrap();
    assert_eq!(h.to_text().parse::<BiGraph>().unwrap().biadjacency(), h.biadjacency());
    let m: pivotkit::BinaryMatroid = matroid.parse().unwrap();
    assert_eq!(m.to_text(), matroid);
    let pivoted = run_ok(&["pivot", "-", "0", "1"], c4);
    assert_eq!(pivoted.parse::<Graph>().unwrap().to_text(), pivoted);
    let bits: pivotkit::BitMatrix = matrix.parse().unwrap();
    assert_eq!(bits.to_text(), matrix);
}

fn main() {
    let criteria: [(&str, fn()); 13] = [
        ("ktt example has fundamental graph K_{4,4}", criterion_1),
        ("c6 blow-up example is 6-regular on 18 vertices", criterion_2),
        ("fun-lemma campaign, 500 instances", criterion_3),
        ("cofun-lemma campaign, 500 instances", criterion_4),
        ("tree splits for all trees up to 11 edges", criterion_5),
        ("pert-partition campaign, 200 matrices", criterion_6),
        ("pivot algebra on all graphs up to 5 vertices", criterion_7),
        ("pivot-matroid campaign, 200 matroids", criterion_8),
        ("conn-equiv campaign, 100 matroids", criterion_9),
        ("rankconn-lemma, all C4-free graphs up to 8 vertices", criterion_10),
        ("graphic matroid circuits and minors", criterion_11),
        ("lowered bound is caught and replayed", criterion_12),
        ("cli determinism and round trips", criterion_13),
    ];
    panic::set_hook(Box::new(|info| eprintln!("{info}")));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let ok = panic::catch_unwind(f).is_ok();
        let secs = start.elapsed().as_secs_f64();
        println!(
            "criterion {:>2} {} ({secs:.1}s) {name}",
            i + 1,
            if ok { "PASS" } else { "FAIL" }
        );
        if !ok {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}

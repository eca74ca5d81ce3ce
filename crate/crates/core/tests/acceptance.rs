//! Acceptance gate: one test per release criterion. Each test name is the
//! pass/fail line for its criterion.

use std::sync::OnceLock;
use trifree::atlas::{
    base_graph, blow_up, closed_form_stats, computed_stats, BaseGraphId, BlowUpSpec, ALL_BASE_IDS,
};
use trifree::enumerate::{
    enumerate_base_case, k4free_graphs_up_to_iso, random_k4free, BaseCaseRun, BaseCaseSpec,
    IterationStrategy, ALL_BASE_CASES,
};
use trifree::graph::Graph;
use trifree::packing::{max_edge_disjoint_triangles, max_packing_naive, MAX_NAIVE_TRIANGLES};
use trifree::partition::{
    appendix_a_identity_report, enumerate_greedy_partitions, eq3_identity_report,
    greedy_partition, key_lemma_report, lemma31_report, main_theorem_report, partition_stats,
    CliquePartition, PartitionStats, MAX_ENUMERATE_VERTICES,
};

// ---------------------------------------------------------------- fixtures

/// Expected triangle lists of the four base graphs under the atlas
/// labeling (one letter per vertex, a = vertex 0).
const F1_TRIANGLES: &str = "abc ace ach aef bci bgi chi def efg fgi ghi";
const F2_TRIANGLES: &str = "abc abf abh acd adf bgh cde cdi def deg dfi dgi egh ghi";
const F3_TRIANGLES: &str = "abc abf abh acd adf bgh cde def deg dfi dgi egh ghi";
const F4_TRIANGLES: &str = "abc acd acg ade bch bfh cgh def efh fgh";

fn expected_triangles(id: BaseGraphId) -> &'static str {
    match id {
        BaseGraphId::F1 => F1_TRIANGLES,
        BaseGraphId::F2 => F2_TRIANGLES,
        BaseGraphId::F3 => F3_TRIANGLES,
        BaseGraphId::F4 => F4_TRIANGLES,
    }
}

/// Blow-up specs of criterion 3: k components in 1..=4, n <= 36.
fn criterion3_specs() -> Vec<BlowUpSpec> {
    let mut specs = Vec::new();
    for id in ALL_BASE_IDS {
        for k1 in 1..=4 {
            for k2 in 1..=4 {
                for k3 in 1..=4 {
                    let spec = BlowUpSpec::new(id, [k1, k2, k3]);
                    if spec.vertex_count() <= 36 {
                        specs.push(spec);
                    }
                }
            }
        }
    }
    specs
}

/// Aggregated verification results over the criterion-5 corpus.
#[derive(Default)]
struct CorpusTally {
    instances: u64,
    main_theorem_failures: u64,
    eq3_failures: u64,
    appendix_a_failures: u64,
    lemma31_failures: u64,
    key_lemma_failures: u64,
    omega_over_r_choose_3: u64,
}

impl CorpusTally {
    fn add(&mut self, g: &Graph, p: &CliquePartition, s: &PartitionStats) {
        self.instances += 1;
        self.main_theorem_failures += u64::from(!main_theorem_report(g, p, s).holds);
        self.eq3_failures += u64::from(!eq3_identity_report(g, p, s).holds);
        self.appendix_a_failures += u64::from(!appendix_a_identity_report(g, p, s).holds);
        self.lemma31_failures += u64::from(!lemma31_report(g, p, s).holds);
        self.key_lemma_failures += u64::from(!key_lemma_report(g, p, s).holds);
        let r = s.r as i64;
        if s.omega > r * (r - 1) * (r - 2) / 6 {
            self.omega_over_r_choose_3 += 1;
        }
    }
}

fn corpus_tally() -> &'static CorpusTally {
    static TALLY: OnceLock<CorpusTally> = OnceLock::new();
    TALLY.get_or_init(|| {
        let mut tally = CorpusTally::default();
        // (i) all atlas blow-ups of criterion 3
        for spec in criterion3_specs() {
            let entry = blow_up(&spec).unwrap();
            let s = partition_stats(&entry.graph, &entry.partition).unwrap();
            tally.add(&entry.graph, &entry.partition, &s);
        }
        // (iii) >= 10^4 seeded random K4-free graphs, n in [5, 16],
        // deterministic greedy partitions, mixed densities
        let densities = [1.0, 0.7, 0.4];
        for n in 5..=16 {
            for i in 0..850u64 {
                let density = densities[(i % 3) as usize];
                let g = random_k4free(n, density, 1_000 * n as u64 + i).unwrap();
                let p = greedy_partition(&g).unwrap();
                let s = partition_stats(&g, &p).unwrap();
                tally.add(&g, &p, &s);
            }
        }
        // (iv) all greedy partitions of all K4-free graphs on n <= 7:
        // exhaustive over edge sets at n <= 6, isomorph-free at n = 7
        for n in 1..=6usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for code in 0u32..1 << pairs.len() {
                let mut g = Graph::new(n).unwrap();
                for (b, &(u, v)) in pairs.iter().enumerate() {
                    if code >> b & 1 == 1 {
                        g.add_edge(u, v).unwrap();
                    }
                }
                if !g.is_kk_free(4).unwrap() {
                    continue;
                }
                for p in enumerate_greedy_partitions(&g, usize::MAX).unwrap() {
                    let s = partition_stats(&g, &p).unwrap();
                    tally.add(&g, &p, &s);
                }
            }
        }
        for g in k4free_graphs_up_to_iso(7).unwrap() {
            for p in enumerate_greedy_partitions(&g, usize::MAX).unwrap() {
                let s = partition_stats(&g, &p).unwrap();
                tally.add(&g, &p, &s);
            }
        }
        tally
    })
}

/// Table-1 runs of all six cases (seeded classes, default iteration),
/// shared between criteria 2, 5(ii), and 9.
fn table1_runs() -> &'static Vec<BaseCaseRun> {
    static RUNS: OnceLock<Vec<BaseCaseRun>> = OnceLock::new();
    RUNS.get_or_init(|| {
        ALL_BASE_CASES
            .iter()
            .map(|spec| enumerate_base_case(spec, false, IterationStrategy::SeededClasses).unwrap())
            .collect()
    })
}

fn expected_violators(spec: &BaseCaseSpec) -> Vec<(BaseGraphId, i64, i64, i64)> {
    match (spec.a, spec.b, spec.c) {
        (3, 0, 0) => vec![
            (BaseGraphId::F1, 11, 8, 22),
            (BaseGraphId::F2, 14, 10, 23),
            (BaseGraphId::F3, 13, 10, 22),
        ],
        (2, 1, 0) => vec![(BaseGraphId::F4, 10, 8, 18)],
        _ => vec![],
    }
}

fn check_table1_run(run: &BaseCaseRun) {
    let mut found: Vec<(BaseGraphId, i64, i64, i64)> = run
        .records
        .iter()
        .map(|r| {
            (
                r.matched.unwrap_or_else(|| {
                    panic!("unmatched violator class {} in case {:?}", r.graph6, run.spec)
                }),
                r.t,
                r.m2,
                r.e,
            )
        })
        .collect();
    found.sort_by_key(|x| format!("{}", x.0));
    assert_eq!(found, expected_violators(&run.spec), "case {:?}", run.spec);
}

// -------------------------------------------------------------- criteria

#[test]
fn criterion_01_atlas_fidelity() {
    let expected = [
        (BaseGraphId::F1, 9, 22, 11),
        (BaseGraphId::F2, 9, 23, 14),
        (BaseGraphId::F3, 9, 22, 13),
        (BaseGraphId::F4, 8, 18, 10),
    ];
    for (id, v, e, t) in expected {
        let entry = base_graph(id).unwrap();
        assert_eq!(entry.graph.n(), v, "{id} vertex count");
        assert_eq!(entry.graph.edge_count(), e, "{id} edge count");
        assert_eq!(entry.graph.triangle_count(), t, "{id} triangle count");
        assert!(entry.graph.is_kk_free(4).unwrap(), "{id} must be K4-free");
        let listed: Vec<String> = expected_triangles(id)
            .split_whitespace()
            .map(str::to_string)
            .collect();
        let computed: Vec<String> = entry
            .graph
            .triangle_list()
            .triples
            .iter()
            .map(|tri| tri.iter().map(|&x| entry.labels[x].clone()).collect())
            .collect();
        assert_eq!(computed, listed, "{id} triangle list");
    }
    println!("criterion 1 (atlas fidelity): PASS");
}

#[test]
fn criterion_02_table1_reproduction() {
    for run in table1_runs() {
        check_table1_run(run);
    }
    // the same classes appear with empty free subsets included, and with
    // raw subset iteration over the seeded pair
    for spec in &ALL_BASE_CASES {
        let with_empty =
            enumerate_base_case(spec, true, IterationStrategy::SeededClasses).unwrap();
        check_table1_run(&with_empty);
        let naive = enumerate_base_case(spec, true, IterationStrategy::NaiveSubsets).unwrap();
        check_table1_run(&naive);
        let default_run = &table1_runs()[ALL_BASE_CASES
            .iter()
            .position(|s| s == spec)
            .unwrap()];
        let canon_of = |run: &BaseCaseRun| -> Vec<_> {
            run.records.iter().map(|r| r.canon.clone()).collect()
        };
        assert_eq!(canon_of(&with_empty), canon_of(default_run));
        assert_eq!(canon_of(&naive), canon_of(default_run));
    }
    println!("criterion 2 (Table 1 reproduction): PASS");
}

#[test]
fn criterion_03_blow_up_closed_forms() {
    let mut count = 0;
    for spec in criterion3_specs() {
        let entry = blow_up(&spec).unwrap();
        let computed = computed_stats(&entry);
        let closed = closed_form_stats(&spec);
        assert_eq!(computed, closed, "{} k={:?}", spec.base, spec.k);
        let [k1, k2, k3] = spec.k.map(i64::from);
        let expected_g = match spec.base {
            BaseGraphId::F1 | BaseGraphId::F2 => k1 * k2 * k3,
            BaseGraphId::F3 => k1 * k3 * (k2 - k1 - k3),
            BaseGraphId::F4 => k2 * (k1 * k3 - k1 * k2 - k2 * k3),
        };
        assert_eq!(computed.g, expected_g, "{} k={:?}", spec.base, spec.k);
        count += 1;
    }
    println!("criterion 3 (blow-up closed forms): PASS ({count} specs)");
}

#[test]
fn criterion_04_discrepancy_witnesses() {
    for (k, lambda) in [(1u32, 1i64), (2, 8), (3, 27), (4, 64)] {
        let entry = blow_up(&BlowUpSpec::new(BaseGraphId::F1, [k, k, k])).unwrap();
        let s = partition_stats(&entry.graph, &entry.partition).unwrap();
        let g_value = s.conjecture_bound() - s.t;
        assert!(g_value >= lambda, "k={k}: g={g_value} < {lambda}");
        // cubic growth: g = (n/9)^3 on balanced blow-ups
        let n = entry.graph.n() as i64;
        assert_eq!(g_value, (n / 9).pow(3));
    }
    println!("criterion 4 (discrepancy witnesses): PASS");
}

#[test]
fn criterion_05_lower_bound_with_omega() {
    let tally = corpus_tally();
    assert!(tally.instances > 10_000);
    assert_eq!(tally.main_theorem_failures, 0);
    // (ii) every graph visited by the Table-1 enumeration
    for run in table1_runs() {
        assert_eq!(run.theorem14_violations, 0, "case {:?}", run.spec);
        assert!(run.visited > 0);
    }
    println!(
        "criterion 5 (lower bound, {} corpus instances): PASS",
        tally.instances
    );
}

#[test]
fn criterion_06_exact_identities() {
    let tally = corpus_tally();
    assert_eq!(tally.eq3_failures, 0);
    assert_eq!(tally.appendix_a_failures, 0);
    println!("criterion 6 (exact identities): PASS");
}

#[test]
fn criterion_07_lemmas() {
    let tally = corpus_tally();
    assert_eq!(tally.lemma31_failures, 0);
    assert_eq!(tally.key_lemma_failures, 0);
    println!("criterion 7 (lemmas): PASS");
}

#[test]
fn criterion_08_complete_3partite_tightness() {
    for x in 1..=6usize {
        for y in 1..=x {
            for z in 1..=y {
                let g = Graph::complete_multipartite(&[x, y, z]).unwrap();
                let expected_sizes: Vec<usize> = std::iter::repeat_n(3, z)
                    .chain(std::iter::repeat_n(2, y - z))
                    .chain(std::iter::repeat_n(1, x - y))
                    .collect();
                let p = greedy_partition(&g).unwrap();
                let sizes: Vec<usize> = p.parts.iter().map(Vec::len).collect();
                assert_eq!(sizes, expected_sizes, "K({x},{y},{z}) shape");
                let s = partition_stats(&g, &p).unwrap();
                assert_eq!(s.omega, 0, "K({x},{y},{z}) omega");
                assert_eq!(s.t, s.conjecture_bound(), "K({x},{y},{z}) tightness");
                // uniqueness of the greedy shape: every greedy partition
                // has the same part sizes and the same statistics
                if g.n() <= MAX_ENUMERATE_VERTICES {
                    for q in enumerate_greedy_partitions(&g, usize::MAX).unwrap() {
                        let qs: Vec<usize> = q.parts.iter().map(Vec::len).collect();
                        assert_eq!(qs, expected_sizes);
                        let st = partition_stats(&g, &q).unwrap();
                        assert_eq!((st.t, st.omega, st.conjecture_bound()),
                                   (s.t, s.omega, s.conjecture_bound()));
                    }
                }
            }
        }
    }
    println!("criterion 8 (complete 3-partite tightness): PASS");
}

#[test]
fn criterion_09_omega_consistency() {
    // omega in {0, 1} on every r = 3 instance of the Table-1 runs, and
    // every violator class is one of the four base graphs
    for run in table1_runs() {
        assert_eq!(run.omega_out_of_range, 0, "case {:?}", run.spec);
        for rec in &run.records {
            assert!(rec.matched.is_some(), "{}", rec.graph6);
        }
    }
    // omega = k1 k2 k3 on F1/F2 blow-ups
    for id in [BaseGraphId::F1, BaseGraphId::F2] {
        for k1 in 1..=3u32 {
            for k2 in 1..=3u32 {
                for k3 in 1..=3u32 {
                    let entry = blow_up(&BlowUpSpec::new(id, [k1, k2, k3])).unwrap();
                    let s = partition_stats(&entry.graph, &entry.partition).unwrap();
                    assert_eq!(s.omega, i64::from(k1 * k2 * k3), "{id} k=({k1},{k2},{k3})");
                }
            }
        }
    }
    // omega <= C(r,3) everywhere in the corpus
    assert_eq!(corpus_tally().omega_over_r_choose_3, 0);
    println!("criterion 9 (omega consistency): PASS");
}

#[test]
fn criterion_10_packing() {
    // exhaustive n <= 6: t_e >= e - floor(n^2/4), t_e * r >= t for every
    // greedy partition, cross-validated against the naive oracle
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for code in 0u32..1 << pairs.len() {
            let mut g = Graph::new(n).unwrap();
            for (b, &(u, v)) in pairs.iter().enumerate() {
                if code >> b & 1 == 1 {
                    g.add_edge(u, v).unwrap();
                }
            }
            if !g.is_kk_free(4).unwrap() {
                continue;
            }
            let te = max_edge_disjoint_triangles(&g).unwrap().len() as i64;
            assert_eq!(te, max_packing_naive(&g).unwrap() as i64);
            let e = g.edge_count() as i64;
            assert!(te >= e - (n * n / 4) as i64, "n={n} code={code}");
            for p in enumerate_greedy_partitions(&g, usize::MAX).unwrap() {
                let s = partition_stats(&g, &p).unwrap();
                assert!(te * s.r as i64 >= s.t, "n={n} code={code}");
            }
        }
    }
    // isomorph-free n = 7 corpus, cross-validated where the oracle applies
    for g in k4free_graphs_up_to_iso(7).unwrap() {
        let te = max_edge_disjoint_triangles(&g).unwrap().len() as i64;
        if g.triangle_count() <= MAX_NAIVE_TRIANGLES {
            assert_eq!(te, max_packing_naive(&g).unwrap() as i64);
        }
        assert!(te >= g.edge_count() as i64 - 49 / 4);
    }
    // atlas entries: t_e >= e - r(n-r), and the packing-vs-bound
    // consistency t_e * r >= r(e - r(n-r)) - omega
    let mut atlas_entries: Vec<_> = ALL_BASE_IDS.iter().map(|&id| base_graph(id).unwrap()).collect();
    for id in ALL_BASE_IDS {
        for k1 in 1..=2u32 {
            for k2 in 1..=2u32 {
                for k3 in 1..=2u32 {
                    atlas_entries.push(blow_up(&BlowUpSpec::new(id, [k1, k2, k3])).unwrap());
                }
            }
        }
    }
    for entry in &atlas_entries {
        let s = partition_stats(&entry.graph, &entry.partition).unwrap();
        let te = max_edge_disjoint_triangles(&entry.graph).unwrap().len() as i64;
        let r = s.r as i64;
        assert!(te >= s.e - r * (s.n as i64 - r));
        assert!(te * r >= s.conjecture_bound() - s.omega);
    }
    println!("criterion 10 (packing): PASS");
}

//! Exhaustive r = 3 base-case search, random K4-free generators, and the
//! sweep driver that runs partition/packing checks over instance streams.

use crate::atlas::{blow_up, match_base_graph, BaseGraphId, BlowUpSpec};
use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::packing;
use crate::partition::{
    self, enumerate_greedy_partitions, greedy_partition, partition_stats, CliquePartition,
};
use crate::report::VerificationReport;
use crate::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::str::FromStr;

/// xorshift64* with the multiplier 0x2545F4914F6CDD1D, seeded through one
/// splitmix64 step so that every 64-bit seed (including 0) yields a
/// nonzero state. Fixed here for cross-platform reproducibility.
#[derive(Clone, Debug)]
pub struct Xorshift64Star {
    state: u64,
}

impl Xorshift64Star {
    pub fn new(seed: u64) -> Self {
        // splitmix64 finalizer
        let mut z = seed.wrapping_add(0x9E3779B97F4A7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^= z >> 31;
        Xorshift64Star {
            state: if z == 0 { 0x9E3779B97F4A7C15 } else { z },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn next_below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Seeded K4-free graph: candidate edges are shuffled, each is kept with
/// probability `density`, and any edge that would complete a K4 is
/// rejected. Density 1.0 yields maximal-ish K4-free graphs.
pub fn random_k4free(n: usize, density: f64, seed: u64) -> Result<Graph> {
    if !(1..=crate::graph::MAX_VERTICES).contains(&n) {
        return Err(Error::InvalidArgument(format!("n = {n} out of range 1..=64")));
    }
    let mut rng = Xorshift64Star::new(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    for i in (1..pairs.len()).rev() {
        let j = rng.next_below(i as u64 + 1) as usize;
        pairs.swap(i, j);
    }
    let mut g = Graph::new(n)?;
    for (u, v) in pairs {
        if rng.next_f64() >= density {
            continue;
        }
        if !completes_k4(&g, u, v) {
            g.add_edge(u, v)?;
        }
    }
    debug_assert!(g.is_kk_free(4).unwrap());
    Ok(g)
}

/// Would adding edge {u,v} create a K4?
fn completes_k4(g: &Graph, u: usize, v: usize) -> bool {
    let mut common = g.row(u) & g.row(v);
    while common != 0 {
        let w = common.trailing_zeros() as usize;
        common &= common - 1;
        if g.row(w) & common != 0 {
            return true;
        }
    }
    false
}

/// All K4-free graphs on exactly `n` vertices, one representative per
/// isomorphism class, generated by vertex extension with canonical-form
/// rejection.
pub fn k4free_graphs_up_to_iso(n: usize) -> Result<Vec<Graph>> {
    if n > crate::canon::MAX_CANON_VERTICES {
        return Err(Error::UnsupportedSize(format!(
            "isomorph-free generation needs canonical forms (n <= {})",
            crate::canon::MAX_CANON_VERTICES
        )));
    }
    let mut level = vec![Graph::new(0)?];
    for m in 0..n {
        let mut seen: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for g in &level {
            for nbrs in 0u64..1 << m {
                // a new K4 must contain the new vertex, i.e. a triangle
                // inside its neighborhood
                if g.induced_subgraph(nbrs)?.triangle_count() > 0 {
                    continue;
                }
                let mut h = Graph::new(m + 1)?;
                for (u, v) in g.edges() {
                    h.add_edge(u, v)?;
                }
                for u in 0..m {
                    if nbrs >> u & 1 == 1 {
                        h.add_edge(u, m)?;
                    }
                }
                seen.entry(canonical_form(&h)?).or_insert(h);
            }
        }
        level = seen.into_values().collect();
    }
    Ok(level)
}

/// One of the r = 3 part-size profiles with a >= 1 (sizes 3/2/1 counts).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BaseCaseSpec {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

pub const ALL_BASE_CASES: [BaseCaseSpec; 6] = [
    BaseCaseSpec { a: 3, b: 0, c: 0 },
    BaseCaseSpec { a: 2, b: 1, c: 0 },
    BaseCaseSpec { a: 2, b: 0, c: 1 },
    BaseCaseSpec { a: 1, b: 2, c: 0 },
    BaseCaseSpec { a: 1, b: 1, c: 1 },
    BaseCaseSpec { a: 1, b: 0, c: 2 },
];

impl BaseCaseSpec {
    pub fn new(a: usize, b: usize, c: usize) -> Result<Self> {
        if a + b + c != 3 || a < 1 {
            return Err(Error::InvalidArgument(format!(
                "base case needs a+b+c = 3 with a >= 1, got ({a},{b},{c})"
            )));
        }
        Ok(BaseCaseSpec { a, b, c })
    }

    pub fn n(&self) -> usize {
        3 * self.a + 2 * self.b + self.c
    }

    /// The per-case constant in t >= M2 + e - constant; equals 3(n-3).
    pub fn constant(&self) -> i64 {
        3 * (self.n() as i64 - 3)
    }

    fn part_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![3; self.a];
        sizes.extend(std::iter::repeat_n(2, self.b));
        sizes.extend(std::iter::repeat_n(1, self.c));
        sizes
    }
}

/// A violator of the r = 3 inequality t >= M2 + e - 3(n-3), deduplicated
/// up to isomorphism.
#[derive(Clone, Debug)]
pub struct CounterexampleRecord {
    pub graph6: String,
    pub canon: CanonicalForm,
    pub t: i64,
    pub m2: i64,
    pub e: i64,
    pub matched: Option<BaseGraphId>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IterationStrategy {
    /// seed the fixed pair with isomorphism-class representatives
    SeededClasses,
    /// iterate every admissible subset of the fixed pair's cross edges
    NaiveSubsets,
}

#[derive(Clone, Debug)]
pub struct BaseCaseRun {
    pub spec: BaseCaseSpec,
    pub records: Vec<CounterexampleRecord>,
    /// K4-free graphs scored
    pub visited: u64,
    /// graphs built before the K4 filter
    pub candidates: u64,
    /// violations of t >= 3(e - 3(n-3)) - omega among visited graphs
    pub theorem14_violations: u64,
    /// visited graphs whose single part-triple had omega outside {0,1}
    pub omega_out_of_range: u64,
}

fn all_cross_pairs(pa: &[usize], pb: &[usize]) -> Vec<(usize, usize)> {
    pa.iter()
        .flat_map(|&u| pb.iter().map(move |&v| (u.min(v), u.max(v))))
        .collect()
}

/// Isomorphism-class representatives of the cross-edge subsets between two
/// fixed cliques of sizes s1 >= s2 that keep their union
/// K_{max(s1,s2)+1}-free. Generated by canonical-form deduplication,
/// ordered by (edge count, edge list).
pub fn cross_edge_classes(s1: usize, s2: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    let pa: Vec<usize> = (0..s1).collect();
    let pb: Vec<usize> = (s1..s1 + s2).collect();
    let mut scaffold = Graph::new(s1 + s2)?;
    for part in [&pa, &pb] {
        for (x, &u) in part.iter().enumerate() {
            for &v in &part[x + 1..] {
                scaffold.add_edge(u, v)?;
            }
        }
    }
    let cross = all_cross_pairs(&pa, &pb);
    let forbidden = s1.max(s2) + 1;
    let mut classes: BTreeMap<CanonicalForm, Vec<(usize, usize)>> = BTreeMap::new();
    let mut subsets: Vec<Vec<(usize, usize)>> = (0u32..1 << cross.len())
        .map(|code| {
            cross
                .iter()
                .enumerate()
                .filter(|(b, _)| code >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect()
        })
        .collect();
    subsets.sort_by_key(|s| (s.len(), s.clone()));
    for subset in subsets {
        let mut g = scaffold.clone();
        for &(u, v) in &subset {
            g.add_edge(u, v)?;
        }
        if g.has_clique(forbidden) {
            continue;
        }
        classes.entry(canonical_form(&g)?).or_insert(subset);
    }
    let mut out: Vec<Vec<(usize, usize)>> = classes.into_values().collect();
    out.sort_by_key(|s| (s.len(), s.clone()));
    Ok(out)
}

struct CaseLayout {
    parts: Vec<Vec<usize>>,
    /// indices into `parts` of the pair that gets seeded
    seeded: (usize, usize),
    free_pairs: [(usize, usize); 2],
}

fn case_layout(spec: &BaseCaseSpec) -> CaseLayout {
    let sizes = spec.part_sizes();
    let mut parts = Vec::new();
    let mut v = 0;
    for s in &sizes {
        parts.push((v..v + s).collect::<Vec<usize>>());
        v += s;
    }
    // seed the pair whose both endpoints have the largest sizes when both
    // are triangles, otherwise the two small parts (mirroring the fixed
    // structures of the published search)
    let (seeded, free_pairs) = if sizes[1] == 3 {
        ((0, 1), [(0, 2), (1, 2)])
    } else {
        ((1, 2), [(0, 1), (0, 2)])
    };
    CaseLayout {
        parts,
        seeded,
        free_pairs,
    }
}

/// Subsets (bitmask-ordered) of `edges`, starting from the empty set when
/// `include_empty` is set.
fn subset_codes(len: usize, include_empty: bool) -> std::ops::Range<u32> {
    let start = if include_empty { 0 } else { 1 };
    start..1u32 << len
}

pub fn enumerate_base_case(
    spec: &BaseCaseSpec,
    include_empty: bool,
    strategy: IterationStrategy,
) -> Result<BaseCaseRun> {
    let layout = case_layout(spec);
    let n = spec.n();
    let constant = spec.constant();
    let mut scaffold = Graph::new(n)?;
    for part in &layout.parts {
        for (x, &u) in part.iter().enumerate() {
            for &v in &part[x + 1..] {
                scaffold.add_edge(u, v)?;
            }
        }
    }
    let mut part_of = vec![0usize; n];
    for (i, part) in layout.parts.iter().enumerate() {
        for &v in part {
            part_of[v] = i;
        }
    }

    let (si, sj) = layout.seeded;
    let (s1, s2) = (layout.parts[si].len(), layout.parts[sj].len());
    let seeds: Vec<Vec<(usize, usize)>> = match strategy {
        IterationStrategy::SeededClasses => cross_edge_classes(s1, s2)?
            .into_iter()
            .map(|subset| {
                subset
                    .into_iter()
                    .map(|(u, v)| {
                        // class vertices 0..s1 and s1..s1+s2 onto the parts
                        let map = |x: usize| {
                            if x < s1 {
                                layout.parts[si][x]
                            } else {
                                layout.parts[sj][x - s1]
                            }
                        };
                        (map(u), map(v))
                    })
                    .collect()
            })
            .collect(),
        IterationStrategy::NaiveSubsets => {
            let cross = all_cross_pairs(&layout.parts[si], &layout.parts[sj]);
            let forbidden = s1.max(s2) + 1;
            let union_mask: u64 = layout.parts[si]
                .iter()
                .chain(&layout.parts[sj])
                .fold(0, |m, &v| m | 1 << v);
            let mut out = Vec::new();
            for code in 0u32..1 << cross.len() {
                let subset: Vec<(usize, usize)> = cross
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| code >> b & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let mut g = scaffold.clone();
                for &(u, v) in &subset {
                    g.add_edge(u, v)?;
                }
                if !g.induced_subgraph(union_mask)?.has_clique(forbidden) {
                    out.push(subset);
                }
            }
            out
        }
    };

    let free1 = all_cross_pairs(
        &layout.parts[layout.free_pairs[0].0],
        &layout.parts[layout.free_pairs[0].1],
    );
    let free2 = all_cross_pairs(
        &layout.parts[layout.free_pairs[1].0],
        &layout.parts[layout.free_pairs[1].1],
    );

    // outer loop over (seed, first free subset) chunks in parallel; the
    // merged result is schedule-independent because records are keyed by
    // canonical form and counters are sums
    let mut tasks = Vec::new();
    for seed_ix in 0..seeds.len() {
        for code1 in subset_codes(free1.len(), include_empty) {
            tasks.push((seed_ix, code1));
        }
    }
    let merged = tasks
        .par_iter()
        .map(|&(seed_ix, code1)| {
            let mut g1 = scaffold.clone();
            for &(u, v) in &seeds[seed_ix] {
                g1.add_edge(u, v).unwrap();
            }
            for (b, &(u, v)) in free1.iter().enumerate() {
                if code1 >> b & 1 == 1 {
                    g1.add_edge(u, v).unwrap();
                }
            }
            let mut records: BTreeMap<CanonicalForm, CounterexampleRecord> = BTreeMap::new();
            let mut visited = 0u64;
            let mut candidates = 0u64;
            let mut theorem14_violations = 0u64;
            let mut omega_out_of_range = 0u64;
            for code2 in subset_codes(free2.len(), include_empty) {
                let mut g = g1.clone();
                for (b, &(u, v)) in free2.iter().enumerate() {
                    if code2 >> b & 1 == 1 {
                        g.add_edge(u, v).unwrap();
                    }
                }
                candidates += 1;
                if g.has_clique(4) {
                    continue;
                }
                visited += 1;
                let e = g.edge_count() as i64;
                let triangles = g.triangle_list();
                let t = triangles.len() as i64;
                let mut m2 = 0i64;
                for tri in &triangles.triples {
                    let mut ps = [part_of[tri[0]], part_of[tri[1]], part_of[tri[2]]];
                    ps.sort_unstable();
                    if ps[0] != ps[2] && (ps[0] == ps[1] || ps[1] == ps[2]) {
                        m2 += 1;
                    }
                }
                // omega-corrected lower bound at r = 3, omega computed lazily
                let bound = 3 * (e - (constant));
                if t < bound {
                    let omega = i64::from(match_base_graph(&g).unwrap().is_some());
                    if !(0..=1).contains(&omega) {
                        omega_out_of_range += 1;
                    }
                    if t < bound - omega {
                        theorem14_violations += 1;
                    }
                }
                if t < m2 + e - constant {
                    let canon = canonical_form(&g).unwrap();
                    let graph6 = encode_graph6(&g);
                    let matched = match_base_graph(&g).unwrap();
                    records
                        .entry(canon.clone())
                        .and_modify(|r| {
                            if graph6 < r.graph6 {
                                r.graph6 = graph6.clone();
                            }
                        })
                        .or_insert(CounterexampleRecord {
                            graph6,
                            canon,
                            t,
                            m2,
                            e,
                            matched,
                        });
                }
            }
            (
                records,
                visited,
                candidates,
                theorem14_violations,
                omega_out_of_range,
            )
        })
        .reduce(
            || (BTreeMap::new(), 0, 0, 0, 0),
            |mut acc, part| {
                for (k, v) in part.0 {
                    acc.0
                        .entry(k)
                        .and_modify(|r: &mut CounterexampleRecord| {
                            if v.graph6 < r.graph6 {
                                r.graph6 = v.graph6.clone();
                            }
                        })
                        .or_insert(v);
                }
                (acc.0, acc.1 + part.1, acc.2 + part.2, acc.3 + part.3, acc.4 + part.4)
            },
        );

    let (records, visited, candidates, theorem14_violations, omega_out_of_range) = merged;
    let mut records: Vec<CounterexampleRecord> = records.into_values().collect();
    records.sort_by(|x, y| x.canon.cmp(&y.canon));
    // re-score each record from its stored graph6 rather than trusting
    // the loop values
    for r in &records {
        let g = crate::graph6::parse_graph6(&r.graph6).unwrap();
        assert_eq!(g.edge_count() as i64, r.e);
        assert_eq!(g.triangle_count() as i64, r.t);
    }
    Ok(BaseCaseRun {
        spec: *spec,
        records,
        visited,
        candidates,
        theorem14_violations,
        omega_out_of_range,
    })
}

/// Exhaustive check of the analytic a = 0 branch: all r = 3 greedy
/// partitions with parts of size <= 2 are triangle-free and satisfy
/// e - 3n + 9 <= 0 with t = M2 = omega = 0.
pub fn check_a0_cases() -> Result<VerificationReport> {
    let profiles: [(usize, usize); 4] = [(3, 0), (2, 1), (1, 2), (0, 3)];
    let mut graphs_checked = 0i64;
    let mut max_slack = i64::MIN;
    let mut holds = true;
    let mut witness_graph6 = String::new();
    for (b, c) in profiles {
        let sizes: Vec<usize> = std::iter::repeat_n(2, b)
            .chain(std::iter::repeat_n(1, c))
            .collect();
        let n: usize = sizes.iter().sum();
        let mut parts = Vec::new();
        let mut v = 0;
        for s in &sizes {
            parts.push((v..v + s).collect::<Vec<usize>>());
            v += s;
        }
        let mut scaffold = Graph::new(n)?;
        for part in &parts {
            if part.len() == 2 {
                scaffold.add_edge(part[0], part[1])?;
            }
        }
        let mut cross = Vec::new();
        for i in 0..3 {
            for j in i + 1..3 {
                cross.extend(all_cross_pairs(&parts[i], &parts[j]));
            }
        }
        let singleton_pairs: Vec<(usize, usize)> = (0..3)
            .flat_map(|i| {
                let parts = &parts;
                (i + 1..3)
                    .filter(move |&j| parts[i].len() == 1 && parts[j].len() == 1)
                    .map(move |j| (parts[i][0], parts[j][0]))
            })
            .collect();
        for code in 0u32..1 << cross.len() {
            let mut g = scaffold.clone();
            for (bit, &(u, vv)) in cross.iter().enumerate() {
                if code >> bit & 1 == 1 {
                    g.add_edge(u, vv)?;
                }
            }
            // greedy validity: triangle-free overall, singleton parts
            // pairwise non-adjacent
            if g.triangle_count() > 0 {
                continue;
            }
            if singleton_pairs.iter().any(|&(u, vv)| g.has_edge(u, vv)) {
                continue;
            }
            graphs_checked += 1;
            let e = g.edge_count() as i64;
            let slack = e - 3 * n as i64 + 9;
            let p = CliquePartition::new(parts.clone());
            let s = partition_stats(&g, &p)?;
            let ok = slack <= 0 && s.t == 0 && s.m2 == 0 && s.omega == 0;
            if slack > max_slack {
                max_slack = slack;
                witness_graph6 = encode_graph6(&g);
            }
            if !ok {
                holds = false;
                witness_graph6 = encode_graph6(&g);
            }
        }
    }
    Ok(
        VerificationReport::new("a0-cases", witness_graph6, Vec::new(), max_slack, 0, holds)
            .with("graphs_checked", graphs_checked),
    )
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum CheckKind {
    MainTheorem,
    Conjecture12,
    Eq3Identity,
    Lemma31,
    KeyLemma,
    AppendixAIdentity,
    HuangShi,
    Theorem11,
    ConjectureTe,
}

pub const ALL_CHECKS: [CheckKind; 9] = [
    CheckKind::MainTheorem,
    CheckKind::Conjecture12,
    CheckKind::Eq3Identity,
    CheckKind::Lemma31,
    CheckKind::KeyLemma,
    CheckKind::AppendixAIdentity,
    CheckKind::HuangShi,
    CheckKind::Theorem11,
    CheckKind::ConjectureTe,
];

impl CheckKind {
    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::MainTheorem => "main-theorem",
            CheckKind::Conjecture12 => "conjecture12",
            CheckKind::Eq3Identity => "eq3-identity",
            CheckKind::Lemma31 => "lemma31",
            CheckKind::KeyLemma => "key-lemma",
            CheckKind::AppendixAIdentity => "appendixA-identity",
            CheckKind::HuangShi => "huang-shi",
            CheckKind::Theorem11 => "theorem11",
            CheckKind::ConjectureTe => "conjecture-te",
        }
    }

    pub fn needs_packing(&self) -> bool {
        matches!(
            self,
            CheckKind::HuangShi | CheckKind::Theorem11 | CheckKind::ConjectureTe
        )
    }
}

impl FromStr for CheckKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<CheckKind> {
        ALL_CHECKS
            .iter()
            .find(|c| c.name() == s)
            .copied()
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check {s}")))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PartitionMode {
    Deterministic,
    /// all greedy partitions; supported to n <= 10
    Exhaustive,
}

pub const MAX_EXHAUSTIVE_SWEEP_VERTICES: usize = 10;

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub n_lo: usize,
    pub n_hi: usize,
    pub seeds: u64,
    pub base_seed: u64,
    pub density: f64,
    pub checks: Vec<CheckKind>,
    pub partition_mode: PartitionMode,
    /// blow-up family sweep instead of random graphs: (base id, max k)
    pub family: Option<(BaseGraphId, u32)>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            n_lo: 5,
            n_hi: 10,
            seeds: 10,
            base_seed: 1,
            density: 1.0,
            checks: ALL_CHECKS.to_vec(),
            partition_mode: PartitionMode::Deterministic,
            family: None,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SweepOutcome {
    pub instances: u64,
    pub checks_run: u64,
    /// packing checks skipped because the triangle budget was exceeded
    pub skipped: u64,
    pub violations: Vec<VerificationReport>,
}

/// Seed for the (n, index)-th random instance of a sweep.
pub fn sweep_instance_seed(base_seed: u64, n: usize, index: u64) -> u64 {
    base_seed
        .wrapping_mul(0x100000001B3)
        .wrapping_add(n as u64 * 1_000_003)
        .wrapping_add(index)
}

fn run_checks_on(
    g: &Graph,
    p: &CliquePartition,
    checks: &[CheckKind],
    outcome: &mut SweepOutcome,
) -> Result<()> {
    let stats = partition_stats(g, p)?;
    for check in checks {
        let report = match check {
            CheckKind::MainTheorem => partition::main_theorem_report(g, p, &stats),
            CheckKind::Conjecture12 => partition::conjecture12_report(g, p, &stats),
            CheckKind::Eq3Identity => partition::eq3_identity_report(g, p, &stats),
            CheckKind::Lemma31 => partition::lemma31_report(g, p, &stats),
            CheckKind::KeyLemma => partition::key_lemma_report(g, p, &stats),
            CheckKind::AppendixAIdentity => partition::appendix_a_identity_report(g, p, &stats),
            CheckKind::HuangShi | CheckKind::Theorem11 | CheckKind::ConjectureTe => {
                match packing::max_edge_disjoint_triangles(g) {
                    Err(Error::UnsupportedSize(_)) => {
                        outcome.skipped += 1;
                        continue;
                    }
                    Err(e) => return Err(e),
                    Ok(packing) => match check {
                        CheckKind::HuangShi => packing::huang_shi_report(g, p, &stats, &packing),
                        CheckKind::Theorem11 => packing::theorem11_report(g, &packing),
                        CheckKind::ConjectureTe => {
                            packing::conjecture_te_report(g, p, &stats, &packing)
                        }
                        _ => unreachable!(),
                    },
                }
            }
        };
        outcome.checks_run += 1;
        if !report.holds {
            outcome.violations.push(report);
        }
    }
    Ok(())
}

/// Runs the configured checks over the instance stream and aggregates the
/// violations; a violation is data, not an error.
pub fn sweep(config: &SweepConfig) -> Result<SweepOutcome> {
    let mut instances: Vec<(Graph, Vec<CliquePartition>)> = Vec::new();
    if let Some((id, kmax)) = config.family {
        for k1 in 1..=kmax {
            for k2 in 1..=kmax {
                for k3 in 1..=kmax {
                    let spec = BlowUpSpec::new(id, [k1, k2, k3]);
                    if spec.vertex_count() as usize > crate::graph::MAX_VERTICES {
                        continue;
                    }
                    let entry = blow_up(&spec)?;
                    instances.push((entry.graph, vec![entry.partition]));
                }
            }
        }
    } else {
        for n in config.n_lo..=config.n_hi {
            for i in 0..config.seeds {
                let seed = sweep_instance_seed(config.base_seed, n, i);
                let g = random_k4free(n, config.density, seed)?;
                let partitions = match config.partition_mode {
                    PartitionMode::Deterministic => vec![greedy_partition(&g)?],
                    PartitionMode::Exhaustive => {
                        if n > MAX_EXHAUSTIVE_SWEEP_VERTICES {
                            return Err(Error::UnsupportedSize(format!(
                                "exhaustive partition mode supports n <= {MAX_EXHAUSTIVE_SWEEP_VERTICES}"
                            )));
                        }
                        enumerate_greedy_partitions(&g, usize::MAX)?
                    }
                };
                instances.push((g, partitions));
            }
        }
    }
    let partial: Result<Vec<SweepOutcome>> = instances
        .par_iter()
        .map(|(g, partitions)| {
            let mut outcome = SweepOutcome::default();
            for p in partitions {
                outcome.instances += 1;
                run_checks_on(g, p, &config.checks, &mut outcome)?;
            }
            Ok(outcome)
        })
        .collect();
    let mut total = SweepOutcome::default();
    for part in partial? {
        total.instances += part.instances;
        total.checks_run += part.checks_run;
        total.skipped += part.skipped;
        total.violations.extend(part.violations);
    }
    total
        .violations
        .sort_by(|x, y| (&x.graph6, &x.check).cmp(&(&y.graph6, &y.check)));
    Ok(total)
}

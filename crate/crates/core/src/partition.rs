//! Greedy clique partitions, their statistics, and the identity and
//! inequality checks attached to them.
//!
//! For a K4-free host every part has size 3, 2 or 1. Parts are ordered by
//! non-increasing size; for each l >= 1 the union of parts of size <= l
//! must induce a K_{l+1}-free subgraph.

use crate::atlas::bad_triple_targets;
use crate::canon::canonical_form;
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::report::VerificationReport;
use crate::{Error, Result};
use std::collections::BTreeSet;

pub const MAX_ENUMERATE_VERTICES: usize = 12;

/// Ordered list of vertex-disjoint cliques covering the host's vertex set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliquePartition {
    pub parts: Vec<Vec<usize>>,
}

impl CliquePartition {
    pub fn new(parts: Vec<Vec<usize>>) -> Self {
        CliquePartition { parts }
    }

    pub fn size(&self) -> usize {
        self.parts.len()
    }

    /// Parts with sorted vertices, ordered by size (descending) then
    /// lexicographically; identifies equal set-partitions.
    pub fn normalized(&self) -> CliquePartition {
        let mut parts: Vec<Vec<usize>> = self
            .parts
            .iter()
            .map(|p| {
                let mut p = p.clone();
                p.sort_unstable();
                p
            })
            .collect();
        parts.sort_by(|x, y| y.len().cmp(&x.len()).then(x.cmp(y)));
        CliquePartition { parts }
    }

    fn masks(&self) -> Vec<u64> {
        self.parts
            .iter()
            .map(|p| p.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect()
    }
}

/// All statistics of a (graph, greedy partition) pair.
#[derive(Clone, Debug)]
pub struct PartitionStats {
    pub n: usize,
    pub e: i64,
    pub t: i64,
    pub r: usize,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    /// e_ij / t_ij tables over part pairs i < j, row-major triangular.
    pub e_pair: Vec<i64>,
    pub t_pair: Vec<i64>,
    /// e_ijk / t_ijk tables over part triples i < j < k.
    pub e_triple: Vec<i64>,
    pub t_triple: Vec<i64>,
    pub m1: i64,
    pub m2: i64,
    pub m3: i64,
    /// pair deficiency; may be negative
    pub m0: i64,
    /// triple deficiency
    pub f0: i64,
    pub sum_t_triple: i64,
    pub omega: i64,
    /// discrepancy r(e - r(n-r)) - t
    pub g: i64,
}

pub fn pair_index(r: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < r);
    i * r - i * (i + 1) / 2 + (j - i - 1)
}

pub fn triple_index(r: usize, i: usize, j: usize, k: usize) -> usize {
    debug_assert!(i < j && j < k && k < r);
    // triples before those starting at i, plus pairs (j,k) within the tail
    let before_i: usize = (0..i).map(|x| {
        let m = r - x - 1;
        m * (m - 1) / 2
    }).sum();
    let tail = r - i - 1;
    let jj = j - i - 1;
    let kk = k - i - 1;
    before_i + jj * tail - jj * (jj + 1) / 2 + (kk - jj - 1)
}

impl PartitionStats {
    pub fn e_ij(&self, i: usize, j: usize) -> i64 {
        self.e_pair[pair_index(self.r, i, j)]
    }
    pub fn t_ij(&self, i: usize, j: usize) -> i64 {
        self.t_pair[pair_index(self.r, i, j)]
    }
    pub fn e_ijk(&self, i: usize, j: usize, k: usize) -> i64 {
        self.e_triple[triple_index(self.r, i, j, k)]
    }
    pub fn t_ijk(&self, i: usize, j: usize, k: usize) -> i64 {
        self.t_triple[triple_index(self.r, i, j, k)]
    }

    /// r(e - r(n - r))
    pub fn conjecture_bound(&self) -> i64 {
        let r = self.r as i64;
        let n = self.n as i64;
        r * (self.e - r * (n - r))
    }
}

/// True iff `p` is a greedy partition of `g`: parts are cliques, sizes are
/// non-increasing, and for every l the union of parts of size <= l induces
/// a K_{l+1}-free subgraph. Errors if `p` is not a partition of V(g).
pub fn verify_greedy(g: &Graph, p: &CliquePartition) -> Result<bool> {
    let mut seen = 0u64;
    for part in &p.parts {
        if part.is_empty() {
            return Err(Error::InvalidPartition("empty part".into()));
        }
        for &v in part {
            if v >= g.n() {
                return Err(Error::InvalidPartition(format!("vertex {v} >= n")));
            }
            if seen >> v & 1 == 1 {
                return Err(Error::InvalidPartition(format!("vertex {v} repeated")));
            }
            seen |= 1 << v;
        }
    }
    if seen != g.vertex_mask() {
        return Err(Error::InvalidPartition("parts do not cover V(G)".into()));
    }
    for part in &p.parts {
        for (x, &u) in part.iter().enumerate() {
            for &v in &part[x + 1..] {
                if !g.has_edge(u, v) {
                    return Ok(false);
                }
            }
        }
    }
    let sizes: Vec<usize> = p.parts.iter().map(|q| q.len()).collect();
    if sizes.windows(2).any(|w| w[0] < w[1]) {
        return Ok(false);
    }
    let mut distinct: Vec<usize> = sizes.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let masks = p.masks();
    for l in distinct {
        let union: u64 = masks
            .iter()
            .zip(&sizes)
            .filter(|(_, &s)| s <= l)
            .map(|(m, _)| m)
            .fold(0, |acc, m| acc | m);
        let sub = g.induced_subgraph(union)?;
        if sub.has_clique(l + 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn first_clique_of_size(g: &Graph, mask: u64, k: usize) -> Option<Vec<usize>> {
    fn descend(g: &Graph, cand: u64, need: usize, acc: &mut Vec<usize>) -> bool {
        if need == 0 {
            return true;
        }
        if (cand.count_ones() as usize) < need {
            return false;
        }
        let mut m = cand;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            acc.push(v);
            if descend(g, g.row(v) & m, need - 1, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut acc = Vec::with_capacity(k);
    descend(g, mask, k, &mut acc).then_some(acc)
}

/// Deterministic greedy partition: repeatedly removes the maximum clique
/// with the lexicographically smallest vertex tuple.
pub fn greedy_partition(g: &Graph) -> Result<CliquePartition> {
    if g.has_clique(4) {
        return Err(Error::NotK4Free);
    }
    let mut remaining = g.vertex_mask();
    let mut parts = Vec::new();
    while remaining != 0 {
        let m = g.max_clique_size_in(remaining);
        let part = first_clique_of_size(g, remaining, m).expect("clique of max size exists");
        for &v in &part {
            remaining &= !(1u64 << v);
        }
        parts.push(part);
    }
    Ok(CliquePartition::new(parts))
}

/// All greedy partitions of `g` (as distinct set-partitions), up to `limit`.
pub fn enumerate_greedy_partitions(g: &Graph, limit: usize) -> Result<Vec<CliquePartition>> {
    if g.n() > MAX_ENUMERATE_VERTICES {
        return Err(Error::UnsupportedSize(format!(
            "greedy partition enumeration supports n <= {MAX_ENUMERATE_VERTICES}, got {}",
            g.n()
        )));
    }
    let mut found: BTreeSet<Vec<Vec<usize>>> = BTreeSet::new();
    fn descend(
        g: &Graph,
        remaining: u64,
        acc: &mut Vec<Vec<usize>>,
        found: &mut BTreeSet<Vec<Vec<usize>>>,
        limit: usize,
    ) {
        if found.len() >= limit {
            return;
        }
        if remaining == 0 {
            found.insert(CliquePartition::new(acc.clone()).normalized().parts);
            return;
        }
        let m = g.max_clique_size_in(remaining);
        for clique in g.cliques_of_size_in(remaining, m) {
            let mut next = remaining;
            for &v in &clique {
                next &= !(1u64 << v);
            }
            acc.push(clique);
            descend(g, next, acc, found, limit);
            acc.pop();
        }
    }
    descend(g, g.vertex_mask(), &mut Vec::new(), &mut found, limit);
    Ok(found.into_iter().map(CliquePartition::new).collect())
}

/// Number of part triples whose union induces a subgraph isomorphic to one
/// of F1-F4, filtered by (n, e, t) and degree multiset before canonical
/// comparison.
pub fn bad_triple_count(g: &Graph, p: &CliquePartition) -> Result<i64> {
    let masks = p.masks();
    let r = masks.len();
    let targets = bad_triple_targets();
    let mut omega = 0;
    for i in 0..r {
        for j in i + 1..r {
            for k in j + 1..r {
                let union = masks[i] | masks[j] | masks[k];
                let nn = union.count_ones() as usize;
                if !targets.iter().any(|t| t.n == nn) {
                    continue;
                }
                let sub = g.induced_subgraph(union)?;
                let e = sub.edge_count();
                let t = sub.triangle_count();
                let mut candidates: Vec<_> = targets
                    .iter()
                    .filter(|tg| tg.n == nn && tg.e == e && tg.t == t)
                    .collect();
                if candidates.is_empty() {
                    continue;
                }
                let degs = sub.degree_multiset();
                candidates.retain(|tg| tg.degrees == degs);
                if candidates.is_empty() {
                    continue;
                }
                let form = canonical_form(&sub)?;
                if candidates.iter().any(|tg| tg.canon == form) {
                    omega += 1;
                }
            }
        }
    }
    Ok(omega)
}

/// Computes every partition statistic. Errors unless `p` is a greedy
/// partition of `g`.
pub fn partition_stats(g: &Graph, p: &CliquePartition) -> Result<PartitionStats> {
    if !verify_greedy(g, p)? {
        return Err(Error::InvalidPartition("not a greedy partition".into()));
    }
    let n = g.n();
    let r = p.size();
    let sizes: Vec<i64> = p.parts.iter().map(|q| q.len() as i64).collect();
    let a = sizes.iter().filter(|&&s| s == 3).count() as i64;
    let b = sizes.iter().filter(|&&s| s == 2).count() as i64;
    let c = sizes.iter().filter(|&&s| s == 1).count() as i64;
    let mut part_of = vec![0usize; n];
    for (i, part) in p.parts.iter().enumerate() {
        for &v in part {
            part_of[v] = i;
        }
    }
    let masks = p.masks();

    // cross edges per part pair
    let npairs = r * (r - 1) / 2;
    let mut cross_e = vec![0i64; npairs];
    for (u, v) in g.edges() {
        let (pu, pv) = (part_of[u], part_of[v]);
        if pu != pv {
            cross_e[pair_index(r, pu.min(pv), pu.max(pv))] += 1;
        }
    }

    // triangles classified by the set of parts they span
    let mut m1 = 0i64;
    let mut m2 = 0i64;
    let mut m3 = 0i64;
    let mut cross2 = vec![0i64; npairs]; // triangles spanning exactly a pair
    let ntriples = if r >= 3 { r * (r - 1) * (r - 2) / 6 } else { 0 };
    let mut cross3 = vec![0i64; ntriples]; // triangles spanning exactly a triple
    for tri in &g.triangle_list().triples {
        let mut ps = [part_of[tri[0]], part_of[tri[1]], part_of[tri[2]]];
        ps.sort_unstable();
        if ps[0] == ps[2] {
            m1 += 1;
        } else if ps[0] == ps[1] || ps[1] == ps[2] {
            m2 += 1;
            cross2[pair_index(r, ps[0], ps[2])] += 1;
        } else {
            m3 += 1;
            cross3[triple_index(r, ps[0], ps[1], ps[2])] += 1;
        }
    }
    debug_assert_eq!(m1, a);

    let internal_e = |i: usize| sizes[i] * (sizes[i] - 1) / 2;
    let internal_t = |i: usize| i64::from(sizes[i] == 3);

    let mut e_pair = vec![0i64; npairs];
    let mut t_pair = vec![0i64; npairs];
    for i in 0..r {
        for j in i + 1..r {
            let ix = pair_index(r, i, j);
            e_pair[ix] = cross_e[ix] + internal_e(i) + internal_e(j);
            t_pair[ix] = cross2[ix] + internal_t(i) + internal_t(j);
        }
    }
    let mut e_triple = vec![0i64; ntriples];
    let mut t_triple = vec![0i64; ntriples];
    for i in 0..r {
        for j in i + 1..r {
            for k in j + 1..r {
                let ix = triple_index(r, i, j, k);
                e_triple[ix] = cross_e[pair_index(r, i, j)]
                    + cross_e[pair_index(r, i, k)]
                    + cross_e[pair_index(r, j, k)]
                    + internal_e(i)
                    + internal_e(j)
                    + internal_e(k);
                t_triple[ix] = cross3[ix]
                    + cross2[pair_index(r, i, j)]
                    + cross2[pair_index(r, i, k)]
                    + cross2[pair_index(r, j, k)]
                    + internal_t(i)
                    + internal_t(j)
                    + internal_t(k);
            }
        }
    }
    debug_assert_eq!(
        e_triple.iter().copied().sum::<i64>(),
        (0..r)
            .flat_map(|i| {
                let masks = &masks;
                let g = &g;
                ((i + 1)..r).flat_map(move |j| ((j + 1)..r).map(move |k| {
                    g.induced_subgraph(masks[i] | masks[j] | masks[k])
                        .unwrap()
                        .edge_count() as i64
                }))
            })
            .sum::<i64>()
    );

    let ri = r as i64;
    let ni = n as i64;
    let e = g.edge_count() as i64;
    let t = g.triangle_count() as i64;

    let mut m0 = -a * (ri - 1);
    for i in 0..r {
        for j in i + 1..r {
            m0 += 2 * (e_pair[pair_index(r, i, j)] - 2 * (sizes[i] + sizes[j] - 2));
        }
    }
    debug_assert_eq!(m0, 2 * e - 2 * (ni - ri) * ri + a * (ri - 3));

    let mut f0 = 0i64;
    for i in 0..r {
        for j in i + 1..r {
            for k in j + 1..r {
                f0 += 3 * (e_triple[triple_index(r, i, j, k)]
                    - 3 * (sizes[i] + sizes[j] + sizes[k] - 3));
            }
        }
    }
    debug_assert_eq!(
        2 * f0,
        2 * (3 * e * (ri - 2) - 3 * (ni - ri) * ri * (ri - 2)) + 3 * a * (ri - 2) * (ri - 3)
    );

    let sum_t_triple: i64 = t_triple.iter().sum();
    let omega = bad_triple_count(g, p)?;
    let g_disc = ri * (e - ri * (ni - ri)) - t;

    Ok(PartitionStats {
        n,
        e,
        t,
        r,
        a,
        b,
        c,
        e_pair,
        t_pair,
        e_triple,
        t_triple,
        m1,
        m2,
        m3,
        m0,
        f0,
        sum_t_triple,
        omega,
        g: g_disc,
    })
}

fn base_report(
    check: &str,
    g: &Graph,
    p: &CliquePartition,
    s: &PartitionStats,
    lhs: i64,
    rhs: i64,
    holds: bool,
) -> VerificationReport {
    VerificationReport::new(check, encode_graph6(g), p.parts.clone(), lhs, rhs, holds)
        .with("n", s.n as i64)
        .with("e", s.e)
        .with("t", s.t)
        .with("r", s.r as i64)
        .with("a", s.a)
        .with("b", s.b)
        .with("c", s.c)
        .with("m0", s.m0)
        .with("m2", s.m2)
        .with("m3", s.m3)
        .with("f0", s.f0)
        .with("omega", s.omega)
        .with("g", s.g)
}

/// t(G) >= r(e - r(n-r)) - omega(P)
pub fn main_theorem_report(g: &Graph, p: &CliquePartition, s: &PartitionStats) -> VerificationReport {
    let rhs = s.conjecture_bound() - s.omega;
    base_report("main-theorem", g, p, s, s.t, rhs, s.t >= rhs)
}

/// the disproved bound t(G) >= r(e - r(n-r)), i.e. g(G,P) <= 0
pub fn conjecture12_report(g: &Graph, p: &CliquePartition, s: &PartitionStats) -> VerificationReport {
    let rhs = s.conjecture_bound();
    base_report("conjecture12", g, p, s, s.t, rhs, s.t >= rhs)
}

/// exact double-counting identity for t(G)
pub fn eq3_identity_report(g: &Graph, p: &CliquePartition, s: &PartitionStats) -> VerificationReport {
    let ri = s.r as i64;
    // (r-1)(r-2) is even, so the halved term is integral
    let rhs = s.sum_t_triple - (ri - 3) * s.m2 - s.a * (ri - 1) * (ri - 2) / 2 + s.a;
    base_report("eq3-identity", g, p, s, s.t, rhs, s.t == rhs)
}

/// M2 >= M0 together with the pairwise bound t_ij >= 2(e_ij - 2(|Ti|+|Tj|-2))
pub fn lemma31_report(g: &Graph, p: &CliquePartition, s: &PartitionStats) -> VerificationReport {
    let sizes: Vec<i64> = p.parts.iter().map(|q| q.len() as i64).collect();
    let mut min_slack = i64::MAX;
    for i in 0..s.r {
        for j in i + 1..s.r {
            let bound = 2 * (s.e_ij(i, j) - 2 * (sizes[i] + sizes[j] - 2));
            min_slack = min_slack.min(s.t_ij(i, j) - bound);
        }
    }
    if s.r < 2 {
        min_slack = 0;
    }
    let holds = s.m2 >= s.m0 && min_slack >= 0;
    base_report("lemma31", g, p, s, s.m2, s.m0, holds).with("min_pair_slack", min_slack)
}

/// sum t_ijk >= F0 + (r-2)(M2-M0) - omega(P)
pub fn key_lemma_report(g: &Graph, p: &CliquePartition, s: &PartitionStats) -> VerificationReport {
    let rhs = s.f0 + (s.r as i64 - 2) * (s.m2 - s.m0) - s.omega;
    base_report("key-lemma", g, p, s, s.sum_t_triple, rhs, s.sum_t_triple >= rhs)
}

/// F0 - (r-3)M0 - (a/2)(r-1)(r-2) + a = r(e - r(n-r)), exactly
pub fn appendix_a_identity_report(
    g: &Graph,
    p: &CliquePartition,
    s: &PartitionStats,
) -> VerificationReport {
    let ri = s.r as i64;
    let lhs = s.f0 - (ri - 3) * s.m0 - s.a * (ri - 1) * (ri - 2) / 2 + s.a;
    let rhs = s.conjecture_bound();
    base_report("appendixA-identity", g, p, s, lhs, rhs, lhs == rhs)
}

macro_rules! check_fn {
    ($name:ident, $report:ident) => {
        pub fn $name(g: &Graph, p: &CliquePartition) -> Result<VerificationReport> {
            let s = partition_stats(g, p)?;
            Ok($report(g, p, &s))
        }
    };
}

check_fn!(check_main_theorem, main_theorem_report);
check_fn!(check_conjecture12, conjecture12_report);
check_fn!(check_eq3_identity, eq3_identity_report);
check_fn!(check_lemma31, lemma31_report);
check_fn!(check_key_lemma, key_lemma_report);
check_fn!(check_appendix_a_identity, appendix_a_identity_report);

//! Maximum edge-disjoint triangle packing by branch and bound, plus the
//! packing-number checks built on it.

use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::partition::{CliquePartition, PartitionStats};
use crate::report::VerificationReport;
use crate::{Error, Result};
use std::collections::HashMap;

/// Search budget: graphs with more triangles are rejected up front.
pub const MAX_PACKING_TRIANGLES: usize = 200;

/// Naive oracle budget.
pub const MAX_NAIVE_TRIANGLES: usize = 20;

#[derive(Clone, Debug)]
pub struct TrianglePacking {
    pub triangles: Vec<[usize; 3]>,
}

impl TrianglePacking {
    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }
}

/// Every listed triple induces a triangle of `g` and no two share an edge.
pub fn is_valid_packing(g: &Graph, packing: &TrianglePacking) -> bool {
    let mut used: HashMap<(usize, usize), ()> = HashMap::new();
    for tri in &packing.triangles {
        let [x, y, z] = *tri;
        if !(x < y && y < z && g.has_edge(x, y) && g.has_edge(x, z) && g.has_edge(y, z)) {
            return false;
        }
        for (u, v) in [(x, y), (x, z), (y, z)] {
            if used.insert((u, v), ()).is_some() {
                return false;
            }
        }
    }
    true
}

fn popcount(mask: &[u64]) -> usize {
    mask.iter().map(|w| w.count_ones() as usize).sum()
}

fn iter_bits(mask: &[u64]) -> impl Iterator<Item = usize> + '_ {
    mask.iter().enumerate().flat_map(|(b, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let i = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b * 64 + i)
        })
    })
}

struct Bb {
    conflicts: Vec<Vec<u64>>,
    edge_masks: Vec<Vec<u64>>,
    /// triangles containing each edge id
    by_edge: Vec<Vec<u64>>,
    eblocks: usize,
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl Bb {
    fn search(&mut self, avail: &[u64]) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        let avail_cnt = popcount(avail);
        if avail_cnt == 0 {
            return;
        }
        // upper bound: each packed triangle consumes 3 of the edges still
        // reachable from available triangles
        let mut union = vec![0u64; self.eblocks];
        for i in iter_bits(avail) {
            for (b, w) in self.edge_masks[i].iter().enumerate() {
                union[b] |= w;
            }
        }
        if self.chosen.len() + avail_cnt.min(popcount(&union) / 3) <= self.best.len() {
            return;
        }
        // tighter bound: triangles sharing an edge are pairwise in
        // conflict, so a greedy cover by per-edge classes caps the packing
        let mut uncovered = avail.to_vec();
        let mut classes = 0usize;
        while popcount(&uncovered) > 0 {
            let e = iter_bits(&union)
                .max_by_key(|&e| {
                    self.by_edge[e]
                        .iter()
                        .zip(&uncovered)
                        .map(|(t, u)| (t & u).count_ones() as usize)
                        .sum::<usize>()
                })
                .unwrap();
            for (u, t) in uncovered.iter_mut().zip(&self.by_edge[e]) {
                *u &= !t;
            }
            classes += 1;
            if self.chosen.len() + classes > self.best.len() {
                break;
            }
        }
        if self.chosen.len() + classes <= self.best.len() {
            return;
        }
        // branch on the live edge with the fewest available triangles:
        // either one of them covers it, or none does
        let pivot_edge = iter_bits(&union)
            .min_by_key(|&e| {
                self.by_edge[e]
                    .iter()
                    .zip(avail)
                    .map(|(t, a)| (t & a).count_ones() as usize)
                    .sum::<usize>()
            })
            .unwrap();
        let candidates: Vec<usize> = iter_bits(avail)
            .filter(|&i| {
                self.by_edge[pivot_edge][i / 64] >> (i % 64) & 1 == 1
            })
            .collect();
        for i in candidates {
            let with: Vec<u64> = avail
                .iter()
                .zip(&self.conflicts[i])
                .map(|(a, c)| a & !c)
                .collect();
            self.chosen.push(i);
            self.search(&with);
            self.chosen.pop();
        }
        let without: Vec<u64> = avail
            .iter()
            .zip(&self.by_edge[pivot_edge])
            .map(|(a, t)| a & !t)
            .collect();
        self.search(&without);
    }
}

/// Maximum edge-disjoint triangle packing (exact), for graphs with at most
/// [`MAX_PACKING_TRIANGLES`] triangles. The result is independently
/// re-validated before being returned.
pub fn max_edge_disjoint_triangles(g: &Graph) -> Result<TrianglePacking> {
    let tris = g.triangle_list().triples;
    if tris.len() > MAX_PACKING_TRIANGLES {
        return Err(Error::UnsupportedSize(format!(
            "packing supports at most {MAX_PACKING_TRIANGLES} triangles, got {}",
            tris.len()
        )));
    }
    let mut edge_id: HashMap<(usize, usize), usize> = HashMap::new();
    let mut tri_edge_ids = Vec::with_capacity(tris.len());
    for tri in &tris {
        let [x, y, z] = *tri;
        let ids: [usize; 3] = [(x, y), (x, z), (y, z)].map(|e| {
            let next = edge_id.len();
            *edge_id.entry(e).or_insert(next)
        });
        tri_edge_ids.push(ids);
    }
    let eblocks = edge_id.len().div_ceil(64).max(1);
    let tblocks = tris.len().div_ceil(64).max(1);
    let edge_masks: Vec<Vec<u64>> = tri_edge_ids
        .iter()
        .map(|ids| {
            let mut m = vec![0u64; eblocks];
            for &e in ids {
                m[e / 64] |= 1 << (e % 64);
            }
            m
        })
        .collect();
    let conflicts: Vec<Vec<u64>> = (0..tris.len())
        .map(|i| {
            let mut m = vec![0u64; tblocks];
            for j in 0..tris.len() {
                let shares = edge_masks[i]
                    .iter()
                    .zip(&edge_masks[j])
                    .any(|(a, b)| a & b != 0);
                if shares {
                    m[j / 64] |= 1 << (j % 64);
                }
            }
            m
        })
        .collect();

    let mut by_edge = vec![vec![0u64; tblocks]; edge_id.len()];
    for (i, ids) in tri_edge_ids.iter().enumerate() {
        for &e in ids {
            by_edge[e][i / 64] |= 1 << (i % 64);
        }
    }

    // greedy warm start for the lower bound
    let mut greedy = Vec::new();
    let mut used = vec![0u64; eblocks];
    for (i, m) in edge_masks.iter().enumerate() {
        if m.iter().zip(&used).all(|(a, b)| a & b == 0) {
            greedy.push(i);
            for (b, w) in m.iter().enumerate() {
                used[b] |= w;
            }
        }
    }

    let mut bb = Bb {
        conflicts,
        edge_masks,
        by_edge,
        eblocks,
        best: greedy,
        chosen: Vec::new(),
    };
    let mut avail = vec![u64::MAX; tblocks];
    if !tris.len().is_multiple_of(64) {
        avail[tblocks - 1] = (1u64 << (tris.len() % 64)) - 1;
    }
    if tris.is_empty() {
        avail = vec![0; tblocks];
    }
    bb.search(&avail);
    let mut triangles: Vec<[usize; 3]> = bb.best.iter().map(|&i| tris[i]).collect();
    triangles.sort_unstable();
    let packing = TrianglePacking { triangles };
    assert!(is_valid_packing(g, &packing));
    Ok(packing)
}

/// Exhaustive subset-search oracle for cross-validation; only for graphs
/// with at most [`MAX_NAIVE_TRIANGLES`] triangles.
pub fn max_packing_naive(g: &Graph) -> Result<usize> {
    let tris = g.triangle_list().triples;
    if tris.len() > MAX_NAIVE_TRIANGLES {
        return Err(Error::UnsupportedSize(format!(
            "naive packing oracle supports at most {MAX_NAIVE_TRIANGLES} triangles"
        )));
    }
    let mut best = 0usize;
    'outer: for code in 0u32..1 << tris.len() {
        let count = code.count_ones() as usize;
        if count <= best {
            continue;
        }
        let mut used: Vec<(usize, usize)> = Vec::new();
        for (i, tri) in tris.iter().enumerate() {
            if code >> i & 1 == 0 {
                continue;
            }
            let [x, y, z] = *tri;
            for e in [(x, y), (x, z), (y, z)] {
                if used.contains(&e) {
                    continue 'outer;
                }
                used.push(e);
            }
        }
        best = count;
    }
    Ok(best)
}

/// t <= r * t_e: a maximum packing certifies the triangle count against
/// the partition size.
pub fn huang_shi_report(
    g: &Graph,
    p: &CliquePartition,
    s: &PartitionStats,
    packing: &TrianglePacking,
) -> VerificationReport {
    let te = packing.len() as i64;
    let lhs = te * s.r as i64;
    VerificationReport::new(
        "huang-shi",
        encode_graph6(g),
        p.parts.clone(),
        lhs,
        s.t,
        lhs >= s.t,
    )
    .with("t_e", te)
    .with("r", s.r as i64)
    .with("t", s.t)
}

/// t_e >= e - floor(n^2/4) whenever the right side is positive.
pub fn theorem11_report(g: &Graph, packing: &TrianglePacking) -> VerificationReport {
    let n = g.n() as i64;
    let e = g.edge_count() as i64;
    let te = packing.len() as i64;
    let m = e - n * n / 4;
    VerificationReport::new(
        "theorem11",
        encode_graph6(g),
        Vec::new(),
        te,
        m,
        m <= 0 || te >= m,
    )
    .with("t_e", te)
    .with("e", e)
    .with("n", n)
    .with("excess", m)
}

/// t_e >= e - r(n - r) for greedy partitions of K4-free graphs.
pub fn conjecture_te_report(
    g: &Graph,
    p: &CliquePartition,
    s: &PartitionStats,
    packing: &TrianglePacking,
) -> VerificationReport {
    let te = packing.len() as i64;
    let rhs = s.e - s.r as i64 * (s.n as i64 - s.r as i64);
    VerificationReport::new(
        "conjecture-te",
        encode_graph6(g),
        p.parts.clone(),
        te,
        rhs,
        te >= rhs,
    )
    .with("t_e", te)
    .with("e", s.e)
    .with("r", s.r as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::random_k4free;
    use crate::partition::{greedy_partition, partition_stats};

    #[test]
    fn empty_and_single_triangle() {
        let g = Graph::new(5).unwrap();
        assert_eq!(max_edge_disjoint_triangles(&g).unwrap().len(), 0);
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let p = max_edge_disjoint_triangles(&k3).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.triangles[0], [0, 1, 2]);
    }

    #[test]
    fn bowtie_packs_two() {
        // two triangles sharing vertex 2 but no edge
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(max_edge_disjoint_triangles(&g).unwrap().len(), 2);
    }

    #[test]
    fn book_packs_one() {
        // two triangles sharing edge (0,1)
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        assert_eq!(max_edge_disjoint_triangles(&g).unwrap().len(), 1);
    }

    #[test]
    fn k333_packing() {
        // K(3,3,3): 27 edges, 27 triangles, 9 edge-disjoint ones fit
        // (a Latin-square decomposition uses all 27 edges)
        let g = Graph::complete_multipartite(&[3, 3, 3]).unwrap();
        assert_eq!(max_edge_disjoint_triangles(&g).unwrap().len(), 9);
    }

    #[test]
    fn matches_naive_on_random_graphs() {
        for seed in 0..60 {
            let g = random_k4free(9, 0.8, seed).unwrap();
            if g.triangle_count() > MAX_NAIVE_TRIANGLES {
                continue;
            }
            let exact = max_edge_disjoint_triangles(&g).unwrap().len();
            assert_eq!(exact, max_packing_naive(&g).unwrap(), "seed {seed}");
        }
    }

    #[test]
    fn packing_checks_hold_on_random_corpus() {
        for seed in 0..40 {
            let g = random_k4free(10, 1.0, seed).unwrap();
            let p = greedy_partition(&g).unwrap();
            let s = partition_stats(&g, &p).unwrap();
            let packing = max_edge_disjoint_triangles(&g).unwrap();
            assert!(huang_shi_report(&g, &p, &s, &packing).holds, "seed {seed}");
            assert!(theorem11_report(&g, &packing).holds, "seed {seed}");
            assert!(conjecture_te_report(&g, &p, &s, &packing).holds, "seed {seed}");
        }
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::complete_multipartite(&[7, 7, 7]).unwrap(); // 343 triangles
        assert!(matches!(
            max_edge_disjoint_triangles(&g),
            Err(Error::UnsupportedSize(_))
        ));
        let g = Graph::complete_multipartite(&[3, 3, 3]).unwrap();
        assert!(matches!(max_packing_naive(&g), Err(Error::UnsupportedSize(_))));
    }
}

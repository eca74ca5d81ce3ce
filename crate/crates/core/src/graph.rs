//! Undirected simple graphs on at most 64 vertices with bitmask adjacency rows.

use crate::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Undirected simple graph. Row `v` of `adj` has bit `u` set iff `{u,v}` is
/// an edge. Values are treated as immutable once constructed; every
/// operation on them is a pure function.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Sorted, duplicate-free list of vertex triples, each inducing a triangle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriangleSet {
    pub triples: Vec<[usize; 3]>,
}

impl TriangleSet {
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }
}

fn bit(u: usize) -> u64 {
    1u64 << u
}

/// Clears bits at positions <= v.
fn above(m: u64, v: usize) -> u64 {
    if v + 1 >= 64 {
        0
    } else {
        m >> (v + 1) << (v + 1)
    }
}

impl Graph {
    pub fn new(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize(format!(
                "{} vertices (limit {})",
                n, MAX_VERTICES
            )));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Complete multipartite graph with the given part sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
        let n: usize = parts.iter().sum();
        let mut g = Graph::new(n)?;
        let mut start = 0;
        let mut boundaries = Vec::new();
        for &s in parts {
            boundaries.push((start, start + s));
            start += s;
        }
        for (i, &(a0, a1)) in boundaries.iter().enumerate() {
            for &(b0, b1) in &boundaries[i + 1..] {
                for u in a0..a1 {
                    for v in b0..b1 {
                        g.add_edge(u, v)?;
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::InvalidArgument(format!(
                "edge ({u},{v}) out of range for n={}",
                self.n
            )));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidArgument(format!(
                "edge ({u},{v}) out of range for n={}",
                self.n
            )));
        }
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Neighbor bitmask of `v`.
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut m = above(self.adj[u], u);
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                out.push((u, v));
                m &= m - 1;
            }
        }
        out
    }

    /// Bitmask with the low `n` bits set.
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn triangle_count(&self) -> usize {
        let mut count = 0;
        for u in 0..self.n {
            let mut m = above(self.adj[u], u);
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                count += above(self.adj[u] & self.adj[v], v).count_ones() as usize;
            }
        }
        count
    }

    /// Triangles in lexicographic order of their sorted vertex triples.
    pub fn triangle_list(&self) -> TriangleSet {
        let mut triples = Vec::new();
        for u in 0..self.n {
            let mut m = above(self.adj[u], u);
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                let mut common = above(self.adj[u] & self.adj[v], v);
                while common != 0 {
                    let w = common.trailing_zeros() as usize;
                    common &= common - 1;
                    triples.push([u, v, w]);
                }
            }
        }
        TriangleSet { triples }
    }

    fn clique_search(&self, cand: u64, need: usize) -> bool {
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
            // only extend with later vertices to avoid revisiting
            if self.clique_search(self.adj[v] & m, need - 1) {
                return true;
            }
        }
        false
    }

    pub fn has_clique(&self, k: usize) -> bool {
        self.clique_search(self.vertex_mask(), k)
    }

    pub fn is_kk_free(&self, k: usize) -> Result<bool> {
        if k < 2 {
            return Err(Error::InvalidArgument(format!("k = {k} must be >= 2")));
        }
        Ok(!self.has_clique(k))
    }

    /// Size of a maximum clique (0 for the empty graph) within `mask`.
    pub fn max_clique_size_in(&self, mask: u64) -> usize {
        let mut k = 0;
        while self.clique_search(mask, k + 1) {
            k += 1;
        }
        k
    }

    pub fn max_clique_size(&self) -> usize {
        self.max_clique_size_in(self.vertex_mask())
    }

    /// All cliques of size `k` inside `mask`, as sorted vertex lists in
    /// lexicographic order.
    pub fn cliques_of_size_in(&self, mask: u64, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.collect_cliques(mask, k, &mut current, &mut out);
        out
    }

    fn collect_cliques(
        &self,
        cand: u64,
        need: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if need == 0 {
            out.push(current.clone());
            return;
        }
        if (cand.count_ones() as usize) < need {
            return;
        }
        let mut m = cand;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            current.push(v);
            self.collect_cliques(self.adj[v] & m, need - 1, current, out);
            current.pop();
        }
    }

    /// Induced subgraph on the vertices of `mask`, relabeled 0..|mask|-1
    /// preserving the original vertex order.
    pub fn induced_subgraph(&self, mask: u64) -> Result<Graph> {
        if mask & !self.vertex_mask() != 0 {
            return Err(Error::InvalidArgument(
                "vertex set contains a vertex >= n".into(),
            ));
        }
        let verts: Vec<usize> = (0..self.n).filter(|&v| mask & bit(v) != 0).collect();
        let mut g = Graph::new(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    pub fn induced_subgraph_of(&self, vertices: &[usize]) -> Result<Graph> {
        let mut mask = 0u64;
        for &v in vertices {
            if v >= self.n {
                return Err(Error::InvalidArgument(format!(
                    "vertex {v} >= n = {}",
                    self.n
                )));
            }
            mask |= bit(v);
        }
        self.induced_subgraph(mask)
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument("permutation length != n".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            seen[p] = true;
        }
        let mut g = Graph::new(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    /// Sorted degree sequence, used as a cheap isomorphism invariant.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }
}

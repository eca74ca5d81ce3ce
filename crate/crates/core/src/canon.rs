//! Canonical labeling by minimum adjacency bit-string over all vertex
//! permutations, with degree-partition pruning. Supported to n <= 16.

use crate::graph::Graph;
use crate::{Error, Result};

pub const MAX_CANON_VERTICES: usize = 16;

/// Canonical adjacency encoding: two graphs have equal encodings iff they
/// are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    // class id per vertex; positions are filled class block by class block
    class_of: Vec<usize>,
    class_of_position: Vec<usize>,
    chosen: Vec<usize>,
    chosen_mask: u64,
    // per-position adjacency segment of the current assignment and the best
    current: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl Search<'_> {
    fn run(&mut self) {
        self.descend(0);
    }

    fn descend(&mut self, pos: usize) {
        if pos == self.n {
            if self.best.as_ref().is_none_or(|b| self.current < *b) {
                self.best = Some(self.current.clone());
            }
            return;
        }
        let class = self.class_of_position[pos];
        for v in 0..self.n {
            if self.chosen_mask >> v & 1 == 1 || self.class_of[v] != class {
                continue;
            }
            // bits of position `pos` against earlier positions, earliest
            // position most significant
            let mut seg = 0u32;
            for &u in self.chosen.iter() {
                seg = seg << 1 | u32::from(self.g.has_edge(u, v));
            }
            self.current[pos] = seg;
            // prune against the live best: a prefix already greater than
            // best's prefix cannot complete to anything smaller (best
            // only decreases during the search)
            if let Some(best) = &self.best {
                if self.current[..=pos] > best[..=pos] {
                    continue;
                }
            }
            self.chosen.push(v);
            self.chosen_mask |= 1 << v;
            self.descend(pos + 1);
            self.chosen.pop();
            self.chosen_mask &= !(1u64 << v);
        }
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(Error::UnsupportedSize(format!(
            "canonical form supports n <= {MAX_CANON_VERTICES}, got {n}"
        )));
    }
    // vertices grouped into classes by an isomorphism-invariant key:
    // (degree, sorted neighbor degrees); classes ordered by key
    let degrees = g.degrees();
    let mut keys: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = (0..n)
                .filter(|&u| g.has_edge(u, v))
                .map(|u| degrees[u])
                .collect();
            nd.sort_unstable();
            (degrees[v], nd)
        })
        .collect();
    let mut sorted_keys = keys.clone();
    sorted_keys.sort();
    sorted_keys.dedup();
    let class_of: Vec<usize> = keys
        .iter()
        .map(|k| sorted_keys.binary_search(k).unwrap())
        .collect();
    let mut class_of_position = Vec::with_capacity(n);
    for (c, key) in sorted_keys.iter().enumerate() {
        let size = keys.iter().filter(|k| *k == key).count();
        class_of_position.extend(std::iter::repeat_n(c, size));
    }
    keys.clear();

    let mut search = Search {
        g,
        n,
        class_of,
        class_of_position,
        chosen: Vec::with_capacity(n),
        chosen_mask: 0,
        current: vec![0; n],
        best: None,
    };
    search.run();
    let best = search.best.unwrap_or_default();

    // encoding: n, sorted degree sequence, then the minimal segments
    let mut bytes = Vec::with_capacity(1 + n + 2 * n);
    bytes.push(n as u8);
    bytes.extend(g.degree_multiset().iter().map(|&d| d as u8));
    for seg in best {
        bytes.extend_from_slice(&(seg as u16).to_be_bytes());
    }
    Ok(CanonicalForm { bytes })
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n()
        || g.edge_count() != h.edge_count()
        || g.degree_multiset() != h.degree_multiset()
        || g.triangle_count() != h.triangle_count()
    {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::{base_graph, BaseGraphId};
    use crate::enumerate::Xorshift64Star;
    use crate::graph::Graph;

    fn random_permutation(n: usize, rng: &mut Xorshift64Star) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            p.swap(i, j);
        }
        p
    }

    #[test]
    fn relabeling_invariance() {
        let mut rng = Xorshift64Star::new(99);
        for n in 1..=8 {
            for _ in 0..20 {
                let mut g = Graph::new(n).unwrap();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.next_u64().is_multiple_of(3) {
                            g.add_edge(u, v).unwrap();
                        }
                    }
                }
                let perm = random_permutation(n, &mut rng);
                let h = g.permute(&perm).unwrap();
                assert_eq!(
                    canonical_form(&g).unwrap(),
                    canonical_form(&h).unwrap()
                );
                assert_eq!(g.triangle_count(), h.triangle_count());
            }
        }
    }

    #[test]
    fn f2_and_f3_differ() {
        let f2 = base_graph(BaseGraphId::F2).unwrap();
        let f3 = base_graph(BaseGraphId::F3).unwrap();
        assert_ne!(
            canonical_form(&f2.graph).unwrap(),
            canonical_form(&f3.graph).unwrap()
        );
        assert!(!is_isomorphic(&f2.graph, &f3.graph).unwrap());
    }

    #[test]
    fn f3_equals_f2_minus_ci() {
        let f2 = base_graph(BaseGraphId::F2).unwrap();
        let f3 = base_graph(BaseGraphId::F3).unwrap();
        let mut g = f2.graph.clone();
        g.remove_edge(f2.label_index('c').unwrap(), f2.label_index('i').unwrap())
            .unwrap();
        assert!(is_isomorphic(&g, &f3.graph).unwrap());
        // independent confirmation by brute-force permutation search
        assert!(brute_force_isomorphic(&g, &f3.graph));
    }

    fn brute_force_isomorphic(g: &Graph, h: &Graph) -> bool {
        fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let v = map.len();
            if v == g.n() {
                return true;
            }
            for w in 0..h.n() {
                if used[w] {
                    continue;
                }
                if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
                    map.push(w);
                    used[w] = true;
                    if extend(g, h, map, used) {
                        return true;
                    }
                    map.pop();
                    used[w] = false;
                }
            }
            false
        }
        g.n() == h.n() && extend(g, h, &mut Vec::new(), &mut vec![false; h.n()])
    }

    #[test]
    fn f1_not_isomorphic_to_f3_or_k333() {
        let f1 = base_graph(BaseGraphId::F1).unwrap();
        let f3 = base_graph(BaseGraphId::F3).unwrap();
        assert!(!is_isomorphic(&f1.graph, &f3.graph).unwrap());
        assert!(!brute_force_isomorphic(&f1.graph, &f3.graph));
        let k333 = Graph::complete_multipartite(&[3, 3, 3]).unwrap();
        assert!(!is_isomorphic(&k333, &f1.graph).unwrap());
        let mut rng = Xorshift64Star::new(5);
        let perm = random_permutation(9, &mut rng);
        assert!(is_isomorphic(&f1.graph, &f1.graph.permute(&perm).unwrap()).unwrap());
    }

    #[test]
    fn size_limit() {
        let g = Graph::new(17).unwrap();
        assert!(matches!(canonical_form(&g), Err(crate::Error::UnsupportedSize(_))));
    }
}

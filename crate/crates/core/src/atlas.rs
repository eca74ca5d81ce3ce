//! The four extremal graphs F1-F4, their blow-ups, and the closed-form
//! vertex/edge/triangle/discrepancy polynomials.

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;
use crate::partition::{verify_greedy, CliquePartition};
use crate::{Error, Result};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BaseGraphId {
    F1,
    F2,
    F3,
    F4,
}

pub const ALL_BASE_IDS: [BaseGraphId; 4] = [
    BaseGraphId::F1,
    BaseGraphId::F2,
    BaseGraphId::F3,
    BaseGraphId::F4,
];

impl fmt::Display for BaseGraphId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BaseGraphId::F1 => "F1",
            BaseGraphId::F2 => "F2",
            BaseGraphId::F3 => "F3",
            BaseGraphId::F4 => "F4",
        };
        write!(f, "{s}")
    }
}

impl FromStr for BaseGraphId {
    type Err = Error;
    fn from_str(s: &str) -> Result<BaseGraphId> {
        match s.to_ascii_uppercase().as_str() {
            "F1" => Ok(BaseGraphId::F1),
            "F2" => Ok(BaseGraphId::F2),
            "F3" => Ok(BaseGraphId::F3),
            "F4" => Ok(BaseGraphId::F4),
            other => Err(Error::InvalidArgument(format!("unknown base graph {other}"))),
        }
    }
}

/// A base graph id together with the per-part copy counts.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BlowUpSpec {
    pub base: BaseGraphId,
    pub k: [u32; 3],
}

impl BlowUpSpec {
    pub fn new(base: BaseGraphId, k: [u32; 3]) -> Self {
        BlowUpSpec { base, k }
    }

    pub fn vertex_count(&self) -> u32 {
        let [k1, k2, k3] = self.k;
        match self.base {
            BaseGraphId::F4 => 3 * k1 + 2 * k2 + 3 * k3,
            _ => 3 * (k1 + k2 + k3),
        }
    }
}

/// A fixed atlas graph (or blow-up) with its greedy partition and vertex
/// labels.
#[derive(Clone, Debug)]
pub struct AtlasEntry {
    pub graph: Graph,
    pub partition: CliquePartition,
    pub labels: Vec<String>,
}

impl AtlasEntry {
    pub fn label_index(&self, label: char) -> Option<usize> {
        self.labels.iter().position(|l| l == &label.to_string())
    }
}

/// Closed-form values of the blow-up polynomials.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ClosedFormStats {
    pub v: i64,
    pub e: i64,
    pub r: i64,
    pub t: i64,
    /// discrepancy g(G,P) = r(e - r(n-r)) - t
    pub g: i64,
}

struct BaseDef {
    labels: &'static str,
    part_sizes: [usize; 3],
    cross: [&'static [(char, char)]; 3], // (T1,T2), (T2,T3), (T1,T3)
    triangles: &'static [&'static str],
    expected_vet: (usize, usize, usize),
    // partition order: indices of base parts sorted by non-increasing size
    part_order: [usize; 3],
}

const F1_DEF: BaseDef = BaseDef {
    labels: "abcdefghi",
    part_sizes: [3, 3, 3],
    cross: [
        &[('a', 'e'), ('a', 'f'), ('b', 'd'), ('c', 'e')],
        &[('d', 'h'), ('e', 'g'), ('f', 'g'), ('f', 'i')],
        &[('a', 'h'), ('b', 'g'), ('b', 'i'), ('c', 'h'), ('c', 'i')],
    ],
    triangles: &[
        "abc", "ace", "ach", "aef", "bci", "bgi", "chi", "def", "efg", "fgi", "ghi",
    ],
    expected_vet: (9, 22, 11),
    part_order: [0, 1, 2],
};

const F2_DEF: BaseDef = BaseDef {
    labels: "abcdefghi",
    part_sizes: [3, 3, 3],
    cross: [
        &[('a', 'd'), ('a', 'f'), ('b', 'f'), ('c', 'd'), ('c', 'e')],
        &[('d', 'g'), ('d', 'i'), ('e', 'g'), ('e', 'h'), ('f', 'i')],
        &[('a', 'h'), ('b', 'g'), ('b', 'h'), ('c', 'i')],
    ],
    triangles: &[
        "abc", "abf", "abh", "acd", "adf", "bgh", "cde", "cdi", "def", "deg", "dfi", "dgi",
        "egh", "ghi",
    ],
    expected_vet: (9, 23, 14),
    part_order: [0, 1, 2],
};

// F3 is F2 with edge {c,i} removed
const F3_DEF: BaseDef = BaseDef {
    labels: "abcdefghi",
    part_sizes: [3, 3, 3],
    cross: [
        &[('a', 'd'), ('a', 'f'), ('b', 'f'), ('c', 'd'), ('c', 'e')],
        &[('d', 'g'), ('d', 'i'), ('e', 'g'), ('e', 'h'), ('f', 'i')],
        &[('a', 'h'), ('b', 'g'), ('b', 'h')],
    ],
    triangles: &[
        "abc", "abf", "abh", "acd", "adf", "bgh", "cde", "def", "deg", "dfi", "dgi", "egh",
        "ghi",
    ],
    expected_vet: (9, 22, 13),
    part_order: [0, 1, 2],
};

const F4_DEF: BaseDef = BaseDef {
    labels: "abcdefgh",
    part_sizes: [3, 2, 3],
    cross: [
        &[('a', 'd'), ('a', 'e'), ('c', 'd')],
        &[('d', 'f'), ('e', 'f'), ('e', 'h')],
        &[('a', 'g'), ('b', 'f'), ('b', 'h'), ('c', 'g'), ('c', 'h')],
    ],
    triangles: &[
        "abc", "acd", "acg", "ade", "bch", "bfh", "cgh", "def", "efh", "fgh",
    ],
    expected_vet: (8, 18, 10),
    part_order: [0, 2, 1],
};

fn def_for(id: BaseGraphId) -> &'static BaseDef {
    match id {
        BaseGraphId::F1 => &F1_DEF,
        BaseGraphId::F2 => &F2_DEF,
        BaseGraphId::F3 => &F3_DEF,
        BaseGraphId::F4 => &F4_DEF,
    }
}

fn label_pos(def: &BaseDef, c: char) -> usize {
    def.labels.find(c).expect("label in range")
}

fn base_parts(def: &BaseDef) -> [Vec<usize>; 3] {
    let mut parts: [Vec<usize>; 3] = Default::default();
    let mut v = 0;
    for (j, &s) in def.part_sizes.iter().enumerate() {
        parts[j] = (v..v + s).collect();
        v += s;
    }
    parts
}

fn build_base(def: &BaseDef) -> Result<(Graph, CliquePartition)> {
    let n: usize = def.part_sizes.iter().sum();
    let mut g = Graph::new(n)?;
    let parts = base_parts(def);
    for part in &parts {
        for (x, &u) in part.iter().enumerate() {
            for &v in &part[x + 1..] {
                g.add_edge(u, v)?;
            }
        }
    }
    for pair in def.cross {
        for &(x, y) in pair {
            g.add_edge(label_pos(def, x), label_pos(def, y))?;
        }
    }
    let ordered: Vec<Vec<usize>> = def.part_order.iter().map(|&j| parts[j].clone()).collect();
    Ok((g, CliquePartition::new(ordered)))
}

/// Checks the pinned edge list against the published values: K4-free,
/// the stated per-pair cross-edge counts, the known triangle list, and
/// the stated (v, e, t).
fn validate_base(id: BaseGraphId, def: &BaseDef, g: &Graph, p: &CliquePartition) {
    assert!(g.is_kk_free(4).unwrap(), "{id}: not K4-free");
    let (v, e, t) = def.expected_vet;
    assert_eq!(g.n(), v, "{id}: vertex count");
    assert_eq!(g.edge_count(), e, "{id}: edge count");
    assert_eq!(g.triangle_count(), t, "{id}: triangle count");
    let mut expected: Vec<[usize; 3]> = def
        .triangles
        .iter()
        .map(|tri| {
            let mut t: Vec<usize> = tri.chars().map(|c| label_pos(def, c)).collect();
            t.sort_unstable();
            [t[0], t[1], t[2]]
        })
        .collect();
    expected.sort_unstable();
    assert_eq!(
        g.triangle_list().triples,
        expected,
        "{id}: triangle list does not match the published list"
    );
    assert!(verify_greedy(g, p).unwrap(), "{id}: partition not greedy");
}

/// The fixed graph for `id`, with its greedy partition and label map.
pub fn base_graph(id: BaseGraphId) -> Result<AtlasEntry> {
    let def = def_for(id);
    let (graph, partition) = build_base(def)?;
    validate_base(id, def, &graph, &partition);
    let labels = def.labels.chars().map(|c| c.to_string()).collect();
    Ok(AtlasEntry {
        graph,
        partition,
        labels,
    })
}

/// Blow-up of the base graph: every vertex of part j becomes an
/// independent set of k_j copies; copies are adjacent iff the originals
/// are. Vertices are numbered part-by-part, copy-index-major, so each copy
/// of a part is a contiguous block and the returned partition is
/// reproducible.
pub fn blow_up(spec: &BlowUpSpec) -> Result<AtlasEntry> {
    if spec.k.contains(&0) {
        return Err(Error::InvalidArgument("blow-up counts must be positive".into()));
    }
    let n = spec.vertex_count() as usize;
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::UnsupportedSize(format!(
            "blow-up has {n} vertices (limit {})",
            crate::graph::MAX_VERTICES
        )));
    }
    let def = def_for(spec.base);
    let base = base_graph(spec.base)?;
    let parts = base_parts(def);

    // (base vertex, part, copy) per blow-up vertex
    let mut origin = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    // copy blocks per part, in base-part order
    let mut copies: Vec<Vec<Vec<usize>>> = vec![Vec::new(); 3];
    for (j, part) in parts.iter().enumerate() {
        for copy in 0..spec.k[j] as usize {
            let mut block = Vec::with_capacity(part.len());
            for &bv in part {
                block.push(origin.len());
                labels.push(format!(
                    "{}{}",
                    def.labels.chars().nth(bv).unwrap(),
                    copy + 1
                ));
                origin.push(bv);
            }
            copies[j].push(block);
        }
    }
    let mut graph = Graph::new(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if origin[u] != origin[v] && base.graph.has_edge(origin[u], origin[v]) {
                graph.add_edge(u, v)?;
            }
        }
    }
    // copies ordered by part size (non-increasing), then base-part order
    let mut ordered_parts: Vec<Vec<usize>> = Vec::new();
    for &j in &def.part_order {
        ordered_parts.extend(copies[j].iter().cloned());
    }
    let partition = CliquePartition::new(ordered_parts);
    assert!(graph.is_kk_free(4)?, "blow-up must stay K4-free");
    assert!(
        verify_greedy(&graph, &partition)?,
        "blow-up partition must be greedy"
    );
    Ok(AtlasEntry {
        graph,
        partition,
        labels,
    })
}

/// Evaluates the blow-up polynomials for (v, e, r, t) and the discrepancy
/// g = r(e - r(n-r)) - t.
pub fn closed_form_stats(spec: &BlowUpSpec) -> ClosedFormStats {
    let k1 = spec.k[0] as i64;
    let k2 = spec.k[1] as i64;
    let k3 = spec.k[2] as i64;
    let sq = k1 * k1 + k2 * k2 + k3 * k3;
    match spec.base {
        BaseGraphId::F1 => ClosedFormStats {
            v: 3 * (k1 + k2 + k3),
            e: 3 * sq + 4 * k1 * k2 + 5 * k1 * k3 + 4 * k2 * k3,
            r: k1 + k2 + k3,
            t: k1.pow(3) + k2.pow(3) + k3.pow(3)
                + k1 * k1 * k2 + 2 * k1 * k1 * k3
                + k2 * k2 * k1 + k2 * k2 * k3
                + 2 * k3 * k3 * k1 + k3 * k3 * k2,
            g: k1 * k2 * k3,
        },
        BaseGraphId::F2 => ClosedFormStats {
            v: 3 * (k1 + k2 + k3),
            e: 3 * sq + 5 * k1 * k2 + 4 * k1 * k3 + 5 * k2 * k3,
            r: k1 + k2 + k3,
            t: k1.pow(3) + k2.pow(3) + k3.pow(3)
                + 2 * k1 * k1 * k2 + k1 * k1 * k3
                + 2 * k2 * k2 * k1 + 2 * k2 * k2 * k3
                + k3 * k3 * k1 + 2 * k3 * k3 * k2
                + k1 * k2 * k3,
            g: k1 * k2 * k3,
        },
        BaseGraphId::F3 => ClosedFormStats {
            v: 3 * (k1 + k2 + k3),
            e: 3 * sq + 5 * k1 * k2 + 3 * k1 * k3 + 5 * k2 * k3,
            r: k1 + k2 + k3,
            t: k1.pow(3) + k2.pow(3) + k3.pow(3)
                + 2 * k1 * k1 * k2 + k1 * k1 * k3
                + 2 * k2 * k2 * k1 + 2 * k2 * k2 * k3
                + k3 * k3 * k1 + 2 * k3 * k3 * k2,
            g: k1 * k3 * (k2 - k1 - k3),
        },
        BaseGraphId::F4 => ClosedFormStats {
            v: 3 * k1 + 2 * k2 + 3 * k3,
            e: 3 * k1 * k1 + k2 * k2 + 3 * k3 * k3 + 3 * k1 * k2 + 5 * k1 * k3 + 3 * k2 * k3,
            r: k1 + k2 + k3,
            t: k1.pow(3) + k3.pow(3)
                + k1 * k1 * k2 + 2 * k1 * k1 * k3
                + k2 * k2 * k1 + k2 * k2 * k3
                + 2 * k3 * k3 * k1 + k3 * k3 * k2,
            g: k2 * (k1 * k3 - k1 * k2 - k2 * k3),
        },
    }
}

/// Directly computed (v, e, r, t, g) of a built blow-up; r and g use the
/// blow-up partition.
pub fn computed_stats(entry: &AtlasEntry) -> ClosedFormStats {
    let v = entry.graph.n() as i64;
    let e = entry.graph.edge_count() as i64;
    let t = entry.graph.triangle_count() as i64;
    let r = entry.partition.size() as i64;
    ClosedFormStats {
        v,
        e,
        r,
        t,
        g: r * (e - r * (v - r)) - t,
    }
}

/// Blow-up specs of `id` with closed-form discrepancy >= `g_min`, ordered
/// by total vertex count then lexicographic k, each verified by direct
/// computation on the built graph. Only specs fitting the 64-vertex limit
/// are considered, so the list may be shorter than `limit`.
pub fn counterexample_stream(id: BaseGraphId, g_min: i64, limit: usize) -> Result<Vec<BlowUpSpec>> {
    if g_min < 1 {
        return Err(Error::InvalidArgument("g_min must be >= 1".into()));
    }
    let mut specs = Vec::new();
    for k1 in 1..=20u32 {
        for k2 in 1..=20u32 {
            for k3 in 1..=20u32 {
                let spec = BlowUpSpec::new(id, [k1, k2, k3]);
                if spec.vertex_count() as usize <= crate::graph::MAX_VERTICES {
                    specs.push(spec);
                }
            }
        }
    }
    specs.sort_by_key(|s| (s.vertex_count(), s.k));
    let mut out = Vec::new();
    for spec in specs {
        if out.len() >= limit {
            break;
        }
        let cf = closed_form_stats(&spec);
        if cf.g < g_min {
            continue;
        }
        let entry = blow_up(&spec)?;
        if computed_stats(&entry) != cf {
            return Err(Error::InvalidArgument(format!(
                "closed form disagrees with direct computation for {} k={:?}",
                spec.base, spec.k
            )));
        }
        out.push(spec);
    }
    Ok(out)
}

pub(crate) struct BadTripleTarget {
    pub id: BaseGraphId,
    pub n: usize,
    pub e: usize,
    pub t: usize,
    pub degrees: Vec<usize>,
    pub canon: CanonicalForm,
}

static TARGETS: OnceLock<Vec<BadTripleTarget>> = OnceLock::new();

/// Cached invariants and canonical forms of F1-F4 for bad-triple tests.
pub(crate) fn bad_triple_targets() -> &'static [BadTripleTarget] {
    TARGETS.get_or_init(|| {
        ALL_BASE_IDS
            .iter()
            .map(|&id| {
                let entry = base_graph(id).expect("atlas graphs are valid");
                let g = &entry.graph;
                BadTripleTarget {
                    id,
                    n: g.n(),
                    e: g.edge_count(),
                    t: g.triangle_count(),
                    degrees: g.degree_multiset(),
                    canon: canonical_form(g).expect("atlas graphs fit the canonical limit"),
                }
            })
            .collect()
    })
}

/// Which atlas graph (if any) a graph is isomorphic to.
pub fn match_base_graph(g: &Graph) -> Result<Option<BaseGraphId>> {
    let n = g.n();
    let targets = bad_triple_targets();
    if !targets.iter().any(|t| t.n == n) {
        return Ok(None);
    }
    let e = g.edge_count();
    let t = g.triangle_count();
    let degs = g.degree_multiset();
    let candidates: Vec<_> = targets
        .iter()
        .filter(|tg| tg.n == n && tg.e == e && tg.t == t && tg.degrees == degs)
        .collect();
    if candidates.is_empty() {
        return Ok(None);
    }
    let form = canonical_form(g)?;
    Ok(candidates.iter().find(|tg| tg.canon == form).map(|tg| tg.id))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::partition::{bad_triple_count, partition_stats};

    #[test]
    fn base_graphs_match_published_values() {
        let expect = [
            (BaseGraphId::F1, 9, 22, 11),
            (BaseGraphId::F2, 9, 23, 14),
            (BaseGraphId::F3, 9, 22, 13),
            (BaseGraphId::F4, 8, 18, 10),
        ];
        for (id, v, e, t) in expect {
            let entry = base_graph(id).unwrap();
            assert_eq!(entry.graph.n(), v);
            assert_eq!(entry.graph.edge_count(), e);
            assert_eq!(entry.graph.triangle_count(), t);
            assert!(entry.graph.is_kk_free(4).unwrap());
        }
    }

    #[test]
    fn f1_cross_pair_counts() {
        // 4 edges T1-T2, 4 edges T2-T3, 5 edges T1-T3 plus 9 internal
        let entry = base_graph(BaseGraphId::F1).unwrap();
        let s = partition_stats(&entry.graph, &entry.partition).unwrap();
        assert_eq!(s.e_ij(0, 1), 4 + 6);
        assert_eq!(s.e_ij(1, 2), 4 + 6);
        assert_eq!(s.e_ij(0, 2), 5 + 6);
    }

    #[test]
    fn identity_blow_up_is_base() {
        for id in ALL_BASE_IDS {
            let base = base_graph(id).unwrap();
            let one = blow_up(&BlowUpSpec::new(id, [1, 1, 1])).unwrap();
            assert!(is_isomorphic(&base.graph, &one.graph).unwrap());
        }
    }

    #[test]
    fn blow_up_closed_forms_small() {
        let spec = BlowUpSpec::new(BaseGraphId::F1, [2, 2, 2]);
        let cf = closed_form_stats(&spec);
        assert_eq!((cf.v, cf.e, cf.t, cf.r, cf.g), (18, 88, 88, 6, 8));
        let entry = blow_up(&spec).unwrap();
        assert_eq!(computed_stats(&entry), cf);

        let f4 = BlowUpSpec::new(BaseGraphId::F4, [1, 2, 1]);
        assert_eq!(closed_form_stats(&f4).v, 10);
        assert_eq!(blow_up(&f4).unwrap().graph.n(), 10);
    }

    #[test]
    fn discrepancy_regimes() {
        let f3 = closed_form_stats(&BlowUpSpec::new(BaseGraphId::F3, [1, 3, 1]));
        assert_eq!(f3.g, 1);
        let f4 = closed_form_stats(&BlowUpSpec::new(BaseGraphId::F4, [5, 1, 7]));
        assert_eq!(f4.g, 23);
        let f4_base = closed_form_stats(&BlowUpSpec::new(BaseGraphId::F4, [1, 1, 1]));
        assert_eq!(f4_base.g, -1);
    }

    #[test]
    fn counterexample_streams() {
        let f1 = counterexample_stream(BaseGraphId::F1, 1, 5).unwrap();
        assert_eq!(f1[0].k, [1, 1, 1]);
        let f1_big = counterexample_stream(BaseGraphId::F1, 8, 20).unwrap();
        assert!(f1_big.iter().any(|s| s.k == [2, 2, 2]));
        let f3 = counterexample_stream(BaseGraphId::F3, 1, 3).unwrap();
        assert_eq!(f3[0].k, [1, 3, 1]);
        for s in &f3 {
            assert!(s.k[1] > s.k[0] + s.k[2]);
        }
        assert!(counterexample_stream(BaseGraphId::F1, 0, 1).is_err());
    }

    #[test]
    fn blow_up_omega_matches_gap() {
        for (id, k) in [
            (BaseGraphId::F1, [2, 1, 1]),
            (BaseGraphId::F1, [2, 2, 1]),
            (BaseGraphId::F2, [2, 1, 2]),
        ] {
            let entry = blow_up(&BlowUpSpec::new(id, k)).unwrap();
            let omega = bad_triple_count(&entry.graph, &entry.partition).unwrap();
            assert_eq!(omega, (k[0] * k[1] * k[2]) as i64, "{id} {k:?}");
        }
    }

    #[test]
    fn match_base_graph_identifies_atlas() {
        for id in ALL_BASE_IDS {
            let entry = base_graph(id).unwrap();
            assert_eq!(match_base_graph(&entry.graph).unwrap(), Some(id));
        }
        let k333 = Graph::complete_multipartite(&[3, 3, 3]).unwrap();
        assert_eq!(match_base_graph(&k333).unwrap(), None);
    }

    #[test]
    fn oversized_blow_up_rejected() {
        let spec = BlowUpSpec::new(BaseGraphId::F1, [10, 10, 10]);
        assert!(matches!(blow_up(&spec), Err(Error::UnsupportedSize(_))));
    }
}

//! Python bindings for the trifree toolkit.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use std::str::FromStr;
use trifree::atlas::{self, BaseGraphId, BlowUpSpec};
use trifree::partition::{self, CliquePartition};

fn err(e: trifree::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An undirected simple graph on at most 64 vertices.
#[pyclass(name = "Graph", from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: trifree::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize) -> PyResult<Self> {
        Ok(PyGraph {
            inner: trifree::Graph::new(n).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: trifree::graph6::parse_graph6(text).map_err(err)?,
        })
    }

    #[staticmethod]
    fn complete_multipartite(parts: Vec<usize>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: trifree::Graph::complete_multipartite(&parts).map_err(err)?,
        })
    }

    fn to_graph6(&self) -> String {
        trifree::graph6::encode_graph6(&self.inner)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> PyResult<()> {
        self.inner.add_edge(u, v).map_err(err)
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn triangle_count(&self) -> usize {
        self.inner.triangle_count()
    }

    fn triangles(&self) -> Vec<[usize; 3]> {
        self.inner.triangle_list().triples
    }

    fn is_k4_free(&self) -> bool {
        self.inner.is_kk_free(4).unwrap()
    }

    fn is_isomorphic(&self, other: &PyGraph) -> PyResult<bool> {
        trifree::is_isomorphic(&self.inner, &other.inner).map_err(err)
    }

    fn greedy_partition(&self) -> PyResult<Vec<Vec<usize>>> {
        Ok(partition::greedy_partition(&self.inner).map_err(err)?.parts)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, e={}, graph6={:?})",
            self.inner.n(),
            self.inner.edge_count(),
            self.to_graph6()
        )
    }
}

fn stats_dict<'py>(
    py: Python<'py>,
    s: &partition::PartitionStats,
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("n", s.n)?;
    d.set_item("e", s.e)?;
    d.set_item("t", s.t)?;
    d.set_item("r", s.r)?;
    d.set_item("a", s.a)?;
    d.set_item("b", s.b)?;
    d.set_item("c", s.c)?;
    d.set_item("m0", s.m0)?;
    d.set_item("m1", s.m1)?;
    d.set_item("m2", s.m2)?;
    d.set_item("m3", s.m3)?;
    d.set_item("f0", s.f0)?;
    d.set_item("omega", s.omega)?;
    d.set_item("g", s.g)?;
    d.set_item("bound", s.conjecture_bound())?;
    Ok(d)
}

/// All partition statistics for (graph, partition); the partition must be
/// greedy.
#[pyfunction]
fn partition_stats<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    parts: Vec<Vec<usize>>,
) -> PyResult<Bound<'py, PyDict>> {
    let p = CliquePartition::new(parts);
    let s = partition::partition_stats(&graph.inner, &p).map_err(err)?;
    stats_dict(py, &s)
}

#[pyfunction]
fn verify_greedy(graph: &PyGraph, parts: Vec<Vec<usize>>) -> PyResult<bool> {
    partition::verify_greedy(&graph.inner, &CliquePartition::new(parts)).map_err(err)
}

/// Base graph or blow-up: returns (graph, partition, stats-dict).
#[pyfunction]
#[pyo3(signature = (id, k=None))]
fn atlas_entry<'py>(
    py: Python<'py>,
    id: &str,
    k: Option<[u32; 3]>,
) -> PyResult<(PyGraph, Vec<Vec<usize>>, Bound<'py, PyDict>)> {
    let id = BaseGraphId::from_str(id).map_err(err)?;
    let spec = BlowUpSpec::new(id, k.unwrap_or([1, 1, 1]));
    let entry = atlas::blow_up(&spec).map_err(err)?;
    let cf = atlas::closed_form_stats(&spec);
    let d = PyDict::new(py);
    d.set_item("v", cf.v)?;
    d.set_item("e", cf.e)?;
    d.set_item("r", cf.r)?;
    d.set_item("t", cf.t)?;
    d.set_item("g", cf.g)?;
    Ok((
        PyGraph { inner: entry.graph },
        entry.partition.parts,
        d,
    ))
}

/// Maximum number of pairwise edge-disjoint triangles.
#[pyfunction]
fn packing_number(graph: &PyGraph) -> PyResult<usize> {
    Ok(trifree::packing::max_edge_disjoint_triangles(&graph.inner)
        .map_err(err)?
        .len())
}

/// Seeded random K4-free graph.
#[pyfunction]
fn random_k4free(n: usize, density: f64, seed: u64) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: trifree::enumerate::random_k4free(n, density, seed).map_err(err)?,
    })
}

/// Violator classes of one r = 3 base case, as dicts with keys
/// graph6/t/m2/e/matched.
#[pyfunction]
fn table1_case<'py>(
    py: Python<'py>,
    a: usize,
    b: usize,
    c: usize,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let spec = trifree::enumerate::BaseCaseSpec::new(a, b, c).map_err(err)?;
    let run = trifree::enumerate::enumerate_base_case(
        &spec,
        false,
        trifree::enumerate::IterationStrategy::SeededClasses,
    )
    .map_err(err)?;
    run.records
        .iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("graph6", &r.graph6)?;
            d.set_item("t", r.t)?;
            d.set_item("m2", r.m2)?;
            d.set_item("e", r.e)?;
            d.set_item("matched", r.matched.map(|id| id.to_string()))?;
            Ok(d)
        })
        .collect()
}

#[pymodule]
fn pytrifree(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(partition_stats, m)?)?;
    m.add_function(wrap_pyfunction!(verify_greedy, m)?)?;
    m.add_function(wrap_pyfunction!(atlas_entry, m)?)?;
    m.add_function(wrap_pyfunction!(packing_number, m)?)?;
    m.add_function(wrap_pyfunction!(random_k4free, m)?)?;
    m.add_function(wrap_pyfunction!(table1_case, m)?)?;
    Ok(())
}

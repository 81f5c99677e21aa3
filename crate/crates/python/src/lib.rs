//! Python bindings: `import snarkforge`.

use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;
use snarkforge_core::connectivity::{connectivity_class, ConnectivityClass};
use snarkforge_core::generation::{GenConfig, GenSpec, Generator};
use snarkforge_core::oddness::{count_perfect_matchings, oddness_by_matchings, oddness_by_two_factors};
use snarkforge_core::pipeline::{count_snarks as count_row, InvariantRecord};
use snarkforge_core::{self as core, CubicGraph, GenerationError, OddnessMode};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn generation_error(e: GenerationError) -> PyErr {
    match e {
        GenerationError::OrderTooLarge { .. } => PyOverflowError::new_err(e.to_string()),
        GenerationError::InvalidSpec(_) => value_error(e),
    }
}

fn mode(name: &str) -> PyResult<OddnessMode> {
    match name {
        "fast" => Ok(OddnessMode::Fast),
        "cross-checked" | "cross_checked" => Ok(OddnessMode::CrossChecked),
        other => Err(PyValueError::new_err(format!("unknown oddness mode '{other}'"))),
    }
}

/// A simple cubic graph on at most 64 vertices.
#[pyclass(name = "Graph", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGraph {
    inner: CubicGraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(order: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = CubicGraph::from_edges(order, edges).map_err(value_error)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        let inner = core::parse_graph6(text.as_bytes()).map_err(value_error)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn petersen() -> Self {
        PyGraph {
            inner: core::graph::named::petersen(),
        }
    }

    fn to_graph6(&self) -> String {
        core::encode_graph6(&self.inner)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<[usize; 3]> {
        if v >= self.inner.order() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v))
    }

    fn girth(&self) -> usize {
        self.inner.girth()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// Bridges as `(u, v)` pairs.
    fn bridges(&self) -> Vec<(usize, usize)> {
        self.inner.bridges().into_iter().map(|e| self.inner.edge(e)).collect()
    }

    fn chromatic_index(&self) -> usize {
        core::chromatic_index(&self.inner)
    }

    /// Edge colours 0..2 in edge order, or None when not 3-edge-colourable.
    fn three_edge_coloring(&self) -> Option<Vec<u8>> {
        core::find_three_edge_coloring(&self.inner).map(|c| c.colors)
    }

    #[pyo3(signature = (min_girth = 3))]
    fn is_snark(&self, min_girth: usize) -> bool {
        core::is_snark(&self.inner, min_girth)
    }

    /// Oddness, by `method` "matchings", "two-factors", or both with a
    /// disagreement check when `method` is "cross-checked".
    #[pyo3(signature = (method = "cross-checked"))]
    fn oddness(&self, method: &str) -> PyResult<usize> {
        let result = match method {
            "matchings" => oddness_by_matchings(&self.inner),
            "two-factors" | "two_factors" => oddness_by_two_factors(&self.inner),
            other => core::oddness(&self.inner, mode(other)?),
        };
        result.map(|r| r.value).map_err(value_error)
    }

    /// Cycles of a 2-factor with the fewest odd cycles.
    fn oddness_witness(&self) -> PyResult<Vec<Vec<usize>>> {
        oddness_by_two_factors(&self.inner)
            .map(|r| r.witness.cycles)
            .map_err(value_error)
    }

    fn perfect_matching_count(&self) -> usize {
        count_perfect_matchings(&self.inner)
    }

    fn vertex_connectivity(&self) -> usize {
        core::vertex_connectivity(&self.inner)
    }

    fn edge_connectivity(&self) -> usize {
        core::edge_connectivity(&self.inner)
    }

    /// Cyclic edge connectivity, or None when no cut separates two cycles.
    fn cyclic_edge_connectivity(&self) -> PyResult<Option<usize>> {
        core::cyclic_edge_connectivity(&self.inner, None)
            .map(|c| c.value())
            .map_err(value_error)
    }

    /// "2", "3" or "4+".
    fn connectivity_class(&self) -> PyResult<&'static str> {
        let class = connectivity_class(&self.inner).map_err(value_error)?;
        Ok(match class {
            ConnectivityClass::Two => "2",
            ConnectivityClass::Three => "3",
            ConnectivityClass::FourPlus => "4+",
        })
    }

    fn canonical_key(&self) -> String {
        core::canonical_form(&self.inner).key_str().to_string()
    }

    fn automorphism_order(&self) -> u64 {
        core::canonical_form(&self.inner).automorphism_order
    }

    /// The invariants row as a dict keyed by the CSV column names.
    #[pyo3(signature = (oddness_mode = "cross-checked"))]
    fn invariants(&self, py: Python<'_>, oddness_mode: &str) -> PyResult<Py<PyAny>> {
        let r: InvariantRecord =
            core::pipeline::compute_invariants(&self.inner, mode(oddness_mode)?).map_err(value_error)?;
        let d = pyo3::types::PyDict::new(py);
        d.set_item("key", r.key)?;
        d.set_item("order", r.order)?;
        d.set_item("girth", r.girth)?;
        d.set_item("chi_prime", r.chi_prime)?;
        d.set_item("oddness", r.oddness)?;
        d.set_item("kappa", r.kappa)?;
        d.set_item("cyclic_lambda", r.cyclic_lambda)?;
        d.set_item("aut_order", r.aut_order)?;
        Ok(d.into_any().unbind())
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6('{}')", self.to_graph6())
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }
}

#[pyfunction]
fn are_isomorphic(a: &PyGraph, b: &PyGraph) -> bool {
    core::are_isomorphic(&a.inner, &b.inner)
}

/// Connected cubic graphs of one order, one per isomorphism class, sorted
/// by canonical key.
#[pyfunction]
#[pyo3(signature = (order, min_girth = 3, two_connected = false, snarks_only = false, workers = 0))]
fn generate(
    py: Python<'_>,
    order: usize,
    min_girth: usize,
    two_connected: bool,
    snarks_only: bool,
    workers: usize,
) -> PyResult<Vec<PyGraph>> {
    let spec = GenSpec {
        order,
        min_girth,
        two_connected,
        snarks_only,
    };
    let config = GenConfig::from_env().with_workers(workers);
    let graphs = py
        .detach(|| Generator::new(config).generate(&spec))
        .map_err(generation_error)?;
    Ok(graphs.into_iter().map(|inner| PyGraph { inner }).collect())
}

/// Snark tallies for one order as a dict with the table's column names.
#[pyfunction]
#[pyo3(signature = (order, min_girth, oddness_mode = "fast", workers = 0))]
fn count_snarks(
    py: Python<'_>,
    order: usize,
    min_girth: usize,
    oddness_mode: &str,
    workers: usize,
) -> PyResult<Py<PyAny>> {
    let m = mode(oddness_mode)?;
    let config = GenConfig::from_env().with_workers(workers);
    let row = py
        .detach(|| count_row(&mut Generator::new(config), order, min_girth, m))
        .map_err(|e| match e {
            core::PipelineError::Generation(g) => generation_error(g),
            other => value_error(other),
        })?;
    let d = pyo3::types::PyDict::new(py);
    d.set_item("order", row.order)?;
    d.set_item("all", row.all)?;
    d.set_item("oddness4_conn2", row.oddness4_conn2)?;
    d.set_item("oddness4_conn3", row.oddness4_conn3)?;
    d.set_item("oddness4_total", row.oddness4_total)?;
    Ok(d.into_any().unbind())
}

#[pymodule]
fn snarkforge(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(are_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(count_snarks, m)?)?;
    Ok(())
}

//! Python bindings: graphs, local complementation, orbits, invariants and the
//! class table.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use gsatlas::invariants::{
    is_two_colorable, min_vertex_cover, pauli_measure, pauli_persistency, rank_indexes, sr_max,
    PauliBasis,
};
use gsatlas::oracle::{verify as run_verify, VerifyOptions};
use gsatlas::{canonical_form, Atlas, ClassRecord, ClassifyOptions, TableRow};
use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: gsatlas::Error) -> PyErr {
    match e {
        gsatlas::Error::VertexOutOfRange { .. } => PyIndexError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

#[pyclass(name = "Graph", module = "gsatlas", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph(gsatlas::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        gsatlas::Graph::from_edges(n, &edges)
            .map(PyGraph)
            .map_err(err)
    }

    #[staticmethod]
    fn from_graph6(s: &str) -> PyResult<Self> {
        gsatlas::from_graph6(s)
            .map(PyGraph)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn to_graph6(&self) -> String {
        gsatlas::to_graph6(&self.0)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().collect()
    }

    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.0.n() && v < self.0.n() && self.0.has_edge(u, v)
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn local_complement(&self, v: usize) -> PyResult<Self> {
        gsatlas::local_complement(&self.0, v)
            .map(PyGraph)
            .map_err(err)
    }

    /// Graph after measuring vertex `v` in basis "X", "Y" or "Z".
    #[pyo3(signature = (v, basis, b0 = None))]
    fn measure(&self, v: usize, basis: &str, b0: Option<usize>) -> PyResult<Self> {
        let basis: PauliBasis = basis.parse().map_err(PyValueError::new_err)?;
        pauli_measure(&self.0, v, basis, b0)
            .map(PyGraph)
            .map_err(err)
    }

    /// graph6 of the canonical relabeling; equal for isomorphic graphs.
    fn canonical_form(&self) -> String {
        gsatlas::to_graph6(&canonical_form(&self.0).to_graph())
    }

    /// Canonical graph6 strings of every graph in the LC orbit.
    fn lc_orbit(&self) -> PyResult<Vec<String>> {
        let o = gsatlas::lc_orbit(&self.0).map_err(err)?;
        Ok(o.member_graphs().map(|g| gsatlas::to_graph6(&g)).collect())
    }

    /// `{p: RI_p}` for every p from 1 to floor(n/2).
    fn rank_indexes<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let ri = rank_indexes(&self.0);
        let d = PyDict::new(py);
        for p in (1..=ri.max_p()).rev() {
            d.set_item(p, ri.ri(p))?;
        }
        Ok(d)
    }

    fn sr_max(&self) -> u32 {
        sr_max(&self.0)
    }

    fn pauli_persistency(&self) -> u32 {
        pauli_persistency(&self.0)
    }

    fn min_vertex_cover(&self) -> u32 {
        min_vertex_cover(&self.0)
    }

    fn is_two_colorable(&self) -> bool {
        is_two_colorable(&self.0)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", gsatlas::to_graph6(&self.0))
    }
}

fn row_dict<'py>(py: Python<'py>, r: &ClassRecord) -> PyResult<Bound<'py, PyDict>> {
    let row = TableRow::from(r);
    let d = PyDict::new(py);
    d.set_item("no", row.no)?;
    d.set_item("lc", row.lc)?;
    d.set_item("edges", row.edges)?;
    d.set_item("es_lower", row.es_lower)?;
    d.set_item("es_upper", row.es_upper)?;
    for (p, ri) in &row.ris {
        d.set_item(format!("ri{p}"), ri)?;
    }
    d.set_item("two_colorable", row.two_colorable)?;
    d.set_item("representative", row.representative)?;
    Ok(d)
}

/// Classified LC orbits for every vertex count up to `max_n`.
#[pyclass(name = "Atlas", module = "gsatlas", frozen)]
struct PyAtlas(Atlas);

#[pymethods]
impl PyAtlas {
    #[new]
    #[pyo3(signature = (max_n = 8, propagate = true))]
    fn new(py: Python<'_>, max_n: usize, propagate: bool) -> PyResult<Self> {
        py.detach(|| Atlas::build(max_n, ClassifyOptions { propagate }))
            .map(PyAtlas)
            .map_err(err)
    }

    #[getter]
    fn max_n(&self) -> usize {
        self.0.max_n()
    }

    fn classes<'py>(&self, py: Python<'py>, n: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
        self.0
            .classes(n)
            .map_err(err)?
            .iter()
            .map(|r| row_dict(py, r))
            .collect()
    }

    fn lookup<'py>(&self, py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
        row_dict(py, self.0.lookup(&g.0).map_err(err)?)
    }
}

/// Table rows for `n` vertices.
#[pyfunction]
#[pyo3(signature = (n, propagate = true))]
fn classify<'py>(py: Python<'py>, n: usize, propagate: bool) -> PyResult<Vec<Bound<'py, PyDict>>> {
    PyAtlas::new(py, n, propagate)?.classes(py, n)
}

#[pyfunction]
fn enumerate_connected(n: usize) -> PyResult<Vec<PyGraph>> {
    gsatlas::enumerate_connected(n)
        .map(|gs| gs.into_iter().map(PyGraph).collect())
        .map_err(err)
}

/// Runs the statevector checks; returns `(passed, report)`.
#[pyfunction]
#[pyo3(signature = (n, samples = 100, seed = None))]
fn verify(py: Python<'_>, n: usize, samples: usize, seed: Option<u64>) -> PyResult<(bool, String)> {
    let mut opts = VerifyOptions {
        samples,
        ..VerifyOptions::default()
    };
    if let Some(s) = seed {
        opts.seed = s;
    }
    let report = py.detach(|| run_verify(n, &opts)).map_err(err)?;
    Ok((report.passed(), report.to_string()))
}

#[pymodule]
#[pyo3(name = "gsatlas")]
pub fn gsatlas_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyAtlas>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_connected, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}

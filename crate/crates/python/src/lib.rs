use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use arbor_core::construct::Regime;
use arbor_core::oracle::{self, DEFAULT_CAP};
use arbor_core::{io, Route, TreeColoring, VertexSet};

fn to_py(e: arbor_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn vertex_set(n: usize, vertices: Vec<usize>) -> PyResult<VertexSet> {
    VertexSet::from_vertices(n, vertices).map_err(to_py)
}

/// A simple undirected graph on vertices `0..n`.
#[pyclass(frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct Graph {
    inner: arbor_core::Graph,
}

#[pymethods]
impl Graph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = arbor_core::Graph::from_edge_list(n, edges).map_err(to_py)?;
        Ok(Graph { inner })
    }

    /// Parse the `p n m` / `e u v` edge-list format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(Graph {
            inner: io::read_graph(text).map_err(to_py)?,
        })
    }

    fn to_text(&self) -> String {
        io::write_graph(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.inner.has_edge(u, v)
    }

    /// `(min degree, max degree)`.
    fn degree_stats(&self) -> PyResult<(usize, usize)> {
        let s = arbor_core::degree_stats(&self.inner).map_err(to_py)?;
        Ok((s.delta_min, s.delta_max))
    }

    fn complement(&self) -> Graph {
        Graph {
            inner: arbor_core::complement(&self.inner),
        }
    }

    fn components(&self) -> Vec<Vec<usize>> {
        arbor_core::components(&self.inner)
            .iter()
            .map(VertexSet::to_vec)
            .collect()
    }

    fn induces_forest(&self, vertices: Vec<usize>) -> PyResult<bool> {
        let s = vertex_set(self.inner.n(), vertices)?;
        Ok(arbor_core::induces_forest(&self.inner, &s))
    }

    fn induces_linear_forest(&self, vertices: Vec<usize>) -> PyResult<bool> {
        let s = vertex_set(self.inner.n(), vertices)?;
        Ok(arbor_core::induces_linear_forest(&self.inner, &s))
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

#[pyfunction]
fn gamma(g: &Graph) -> PyResult<usize> {
    arbor_core::gamma(&g.inner).map_err(to_py)
}

fn regime_name(r: Regime) -> &'static str {
    match r {
        Regime::CompleteLike => "CompleteLike",
        Regime::T1 => "T1",
        Regime::T2_3k => "T2_3k",
        Regime::T2_3k1 => "T2_3k1",
        Regime::T2_3k2 => "T2_3k2",
        Regime::T3Connected => "T3Connected",
        Regime::T3Disconnected => "T3Disconnected",
        Regime::OutOfScope => "OutOfScope",
    }
}

#[pyfunction]
fn classify_regime<'py>(py: Python<'py>, g: &Graph) -> PyResult<Bound<'py, PyDict>> {
    let plan = arbor_core::classify_regime(&g.inner).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("regime", regime_name(plan.regime))?;
    d.set_item("gamma", plan.gamma)?;
    d.set_item("beta", plan.beta)?;
    d.set_item("mu", plan.mu)?;
    d.set_item("k", plan.k)?;
    d.set_item("class_sizes", plan.class_sizes())?;
    Ok(d)
}

/// Γ(g) classes, each a sorted vertex list. Raises ValueError when Δ < n/2.
#[pyfunction]
fn equitable_tree_coloring(g: &Graph) -> PyResult<Vec<Vec<usize>>> {
    let c = arbor_core::equitable_tree_coloring(&g.inner).map_err(to_py)?;
    Ok(c.class_lists())
}

#[pyfunction]
#[pyo3(signature = (g, classes, strict=false))]
fn verify<'py>(
    py: Python<'py>,
    g: &Graph,
    classes: Vec<Vec<usize>>,
    strict: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let c = TreeColoring::from_class_lists(&g.inner, classes, Route::External).map_err(to_py)?;
    let report = oracle::verify(&g.inner, &c, strict);
    let d = PyDict::new(py);
    d.set_item("ok", report.ok)?;
    d.set_item("class_count", report.class_count)?;
    d.set_item("size_histogram", report.size_histogram.clone())?;
    let fmt = |fs: &[oracle::Failure]| -> Vec<(Option<usize>, String)> {
        fs.iter()
            .map(|f| (f.class, format!("{:?}", f.kind)))
            .collect()
    };
    d.set_item("failures", fmt(&report.failures))?;
    d.set_item("advisories", fmt(&report.advisories))?;
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (g, cap=DEFAULT_CAP))]
fn exact_a_eq(g: &Graph, cap: usize) -> PyResult<usize> {
    oracle::exact_a_eq(&g.inner, cap).map_err(to_py)
}

/// A witness coloring with `k` classes, or None if none exists.
#[pyfunction]
#[pyo3(signature = (g, k, cap=DEFAULT_CAP))]
fn exists_equitable_k_tree_coloring(
    g: &Graph,
    k: usize,
    cap: usize,
) -> PyResult<Option<Vec<Vec<usize>>>> {
    let w = oracle::exists_equitable_k_tree_coloring(&g.inner, k, cap).map_err(to_py)?;
    Ok(w.map(|c| c.class_lists()))
}

#[pyfunction]
fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    arbor_core::maximum_matching(&g.inner).pairs
}

#[pyfunction]
fn inextensible_path(g: &Graph, start: usize) -> PyResult<Vec<usize>> {
    Ok(arbor_core::inextensible_path(&g.inner, start)
        .map_err(to_py)?
        .seq)
}

#[pyfunction]
fn long_cycle(g: &Graph, component: Vec<usize>) -> PyResult<Vec<usize>> {
    let s = vertex_set(g.inner.n(), component)?;
    Ok(arbor_core::long_cycle(&g.inner, &s).map_err(to_py)?.seq)
}

#[pyfunction]
fn long_path(g: &Graph, target: usize) -> PyResult<Vec<usize>> {
    Ok(arbor_core::long_path(&g.inner, target).map_err(to_py)?.seq)
}

#[pyfunction]
fn gen_random(n: usize, seed: u64) -> PyResult<Graph> {
    Ok(Graph {
        inner: oracle::gen_random(n, seed).map_err(to_py)?,
    })
}

#[pyfunction]
#[pyo3(signature = (n, regime_only=true, threads=1))]
fn sweep_conjecture<'py>(
    py: Python<'py>,
    n: usize,
    regime_only: bool,
    threads: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let report = py
        .detach(|| oracle::sweep_conjecture(n, regime_only, threads))
        .map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("n", report.n)?;
    d.set_item("graphs_tested", report.graphs_tested)?;
    d.set_item("in_regime", report.in_regime)?;
    d.set_item(
        "construction_failures",
        report.construction_failures.clone(),
    )?;
    d.set_item(
        "conjecture_violations",
        report.conjecture_violations.clone(),
    )?;
    d.set_item("summary", report.to_string())?;
    Ok(d)
}

#[pymodule]
fn arbor(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(gamma, m)?)?;
    m.add_function(wrap_pyfunction!(classify_regime, m)?)?;
    m.add_function(wrap_pyfunction!(equitable_tree_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(exact_a_eq, m)?)?;
    m.add_function(wrap_pyfunction!(exists_equitable_k_tree_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(maximum_matching, m)?)?;
    m.add_function(wrap_pyfunction!(inextensible_path, m)?)?;
    m.add_function(wrap_pyfunction!(long_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(long_path, m)?)?;
    m.add_function(wrap_pyfunction!(gen_random, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_conjecture, m)?)?;
    Ok(())
}

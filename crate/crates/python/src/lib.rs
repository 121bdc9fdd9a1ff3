//! Python bindings. Structured results cross the boundary as plain dicts and lists.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use toeplitz_core::oracle::{Chordality, OracleLimits};
use toeplitz_core::theorems::{
    classify_claw_free, classify_line_graph, cycle_decomposition, decompose_cocoonery,
    decompose_gcd, is_cocoonery,
};
use toeplitz_core::verify::{acceptance_suite, run_sweep, sweep_oracle_limits};
use toeplitz_core::{Error, Graph, Oracle, ToeplitzParams};

create_exception!(toeplitz, ToeplitzError, PyValueError);
create_exception!(toeplitz, BoundExceeded, PyRuntimeError);

fn err(e: Error) -> PyErr {
    if e.is_bound_exceeded() {
        BoundExceeded::new_err(e.to_string())
    } else {
        ToeplitzError::new_err(e.to_string())
    }
}

fn to_py<'py>(py: Python<'py>, value: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn oracle() -> Oracle {
    Oracle::new(OracleLimits::from_env())
}

/// A Toeplitz graph on vertices 1..=n.
#[pyclass(name = "ToeplitzGraph", frozen, module = "toeplitz")]
struct PyToeplitzGraph {
    params: ToeplitzParams,
    graph: Graph,
}

#[pymethods]
impl PyToeplitzGraph {
    #[new]
    fn new(n: usize, offsets: Vec<usize>) -> PyResult<Self> {
        let params = ToeplitzParams::new(n, offsets).map_err(err)?;
        let graph = Graph::toeplitz(&params);
        Ok(PyToeplitzGraph { params, graph })
    }

    #[getter]
    fn n(&self) -> usize {
        self.params.n()
    }

    #[getter]
    fn offsets(&self) -> Vec<usize> {
        self.params.offsets().to_vec()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges()
    }

    fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.graph.neighbors(v).map_err(err)
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.graph.adjacent(u, v)
    }

    #[pyo3(signature = (witness = false))]
    fn classify_claw_free<'py>(
        &self,
        py: Python<'py>,
        witness: bool,
    ) -> PyResult<Bound<'py, PyAny>> {
        let oracle = oracle();
        let mut v = classify_claw_free(&self.params, &oracle).map_err(err)?;
        if witness {
            v.attach_witness(&self.params, &oracle).map_err(err)?;
        }
        let out = to_py(py, &v)?;
        out.set_item("description", v.describe(&self.params))?;
        out.set_item("witness", v.witness.map(|w| (w.center, w.leaves)))?;
        Ok(out)
    }

    fn classify_line_graph<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let v = classify_line_graph(&self.params, &oracle()).map_err(err)?;
        let out = to_py(py, &v)?;
        out.set_item("description", v.describe(&self.params))?;
        Ok(out)
    }

    /// Component decomposition: the cocoonery one when it applies, else by gcd.
    fn components<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let report = if is_cocoonery(&self.params).is_some() {
            decompose_cocoonery(&self.params).map_err(err)?
        } else {
            decompose_gcd(&self.params)
        };
        to_py(py, &report)
    }

    /// Disjoint cycles covering the graph, or None when they do not exist.
    fn cycle_decomposition<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        match cycle_decomposition(&self.params) {
            Ok(c) => Ok(Some(to_py(py, &c)?)),
            Err(Error::PremiseNotMet(_)) => Ok(None),
            Err(e) => Err(err(e)),
        }
    }

    fn explain<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let e = toeplitz_core::verify::explain(&self.params, &oracle()).map_err(err)?;
        to_py(py, &e)
    }

    fn to_graph(&self) -> PyGraph {
        PyGraph(self.graph.clone())
    }

    fn __repr__(&self) -> String {
        format!(
            "ToeplitzGraph({}, {:?})",
            self.params.n(),
            self.params.offsets()
        )
    }

    fn __str__(&self) -> String {
        self.params.to_string()
    }
}

/// `(order, edges)` of a root graph.
type RootEdges = (usize, Vec<(usize, usize)>);

/// An arbitrary simple graph on vertices 1..=order, for the brute-force oracles.
#[pyclass(name = "Graph", frozen, module = "toeplitz")]
struct PyGraph(Graph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(order: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Graph::from_edges(order, edges).map(PyGraph).map_err(err)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn components(&self) -> Vec<Vec<usize>> {
        self.0.components()
    }

    fn is_claw_free(&self) -> PyResult<bool> {
        oracle().is_claw_free(&self.0).map_err(err)
    }

    /// A claw as `(center, (a, b, c))`, or None.
    fn find_claw(&self) -> PyResult<Option<(usize, [usize; 3])>> {
        Ok(oracle()
            .first_claw(&self.0)
            .map_err(err)?
            .map(|c| (c.center, c.leaves)))
    }

    /// None when chordal, otherwise an induced cycle of length at least four.
    fn find_hole(&self) -> PyResult<Option<Vec<usize>>> {
        Ok(match oracle().is_chordal(&self.0).map_err(err)? {
            Chordality::Chordal { .. } => None,
            Chordality::NotChordal { hole } => Some(hole.cycle),
        })
    }

    fn is_chordal(&self) -> PyResult<bool> {
        Ok(self.find_hole()?.is_none())
    }

    fn is_interval(&self) -> PyResult<bool> {
        oracle().is_interval(&self.0).map_err(err)
    }

    fn clique_number(&self) -> PyResult<usize> {
        oracle().clique_number(&self.0).map_err(err)
    }

    /// Root graph `(order, edges)` when this is a line graph, else None.
    fn line_graph_root(&self) -> PyResult<Option<RootEdges>> {
        Ok(oracle()
            .is_line_graph(&self.0)
            .map_err(err)?
            .map(|cert| (cert.root.order, cert.root.edges)))
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(order={}, edges={})",
            self.0.order(),
            self.0.edge_count()
        )
    }
}

/// Runs the built-in acceptance sweeps and returns one summary dict per sweep.
#[pyfunction]
fn run_acceptance_suite<'py>(py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let oracle = Oracle::new(sweep_oracle_limits());
    let reports = py.detach(|| {
        acceptance_suite()
            .iter()
            .map(|spec| run_sweep(spec, &oracle).map(|r| r.summary()))
            .collect::<Result<Vec<_>, _>>()
    });
    reports.map_err(err)?.iter().map(|s| to_py(py, s)).collect()
}

#[pymodule]
fn toeplitz(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyToeplitzGraph>()?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(run_acceptance_suite, m)?)?;
    m.add("ToeplitzError", m.py().get_type::<ToeplitzError>())?;
    m.add("BoundExceeded", m.py().get_type::<BoundExceeded>())?;
    Ok(())
}

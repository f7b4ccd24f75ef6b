use bergesat::assembler::{self, BuildOptions, SpectrumOutcome, Verdict};
use bergesat::checker;
use bergesat::format;
use bergesat::gadgets::GadgetId;
use bergesat::oracle::{self, ExhaustiveOptions};
use bergesat::{Error, Hypergraph3, Triple};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyModule;

fn err(e: Error) -> PyErr {
    match e {
        Error::SamplerExhausted { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Serializes through JSON and hands back plain Python objects.
fn to_py(py: Python<'_>, value: &impl serde::Serialize) -> PyResult<Py<PyAny>> {
    let s = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(PyModule::import(py, "json")?.call_method1("loads", (s,))?.unbind())
}

/// A 3-uniform hypergraph on vertices `0..n`.
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: Hypergraph3,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize, usize)>) -> PyResult<Self> {
        let triples = edges
            .into_iter()
            .map(|(a, b, c)| Triple::new(a, b, c))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        Ok(PyGraph {
            inner: Hypergraph3::from_edges(n, triples).map_err(err)?,
        })
    }

    #[staticmethod]
    fn from_h3(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: format::parse_h3(text).map_err(err)?,
        })
    }

    fn to_h3(&self) -> String {
        format::to_h3(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize, usize)> {
        self.inner
            .edges()
            .iter()
            .map(|e| {
                let [a, b, c] = e.vertices();
                (a, b, c)
            })
            .collect()
    }

    fn berge_degree(&self, v: usize) -> PyResult<usize> {
        bergesat::berge_degree(&self.inner, v).map_err(err)
    }

    fn is_saturated(&self, ell: usize) -> PyResult<bool> {
        check_ell(ell)?;
        Ok(checker::is_saturated(&self.inner, ell).is_saturated)
    }

    /// The full verification report as a dict.
    fn verify(&self, py: Python<'_>, ell: usize) -> PyResult<Py<PyAny>> {
        check_ell(ell)?;
        to_py(py, &checker::is_saturated(&self.inner, ell))
    }

    fn aggressive_sufficient(&self, ell: usize) -> PyResult<bool> {
        check_ell(ell)?;
        Ok(checker::aggressive_sufficient(&self.inner, ell))
    }

    fn __len__(&self) -> usize {
        self.inner.edge_count()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.vertex_count(), self.inner.edge_count())
    }
}

fn check_ell(ell: usize) -> PyResult<()> {
    if ell == 0 {
        return Err(PyValueError::new_err("ell must be positive"));
    }
    Ok(())
}

#[pyfunction]
#[pyo3(signature = (name, ell=None, n=None, seed=0))]
fn gadget(name: &str, ell: Option<usize>, n: Option<usize>, seed: u64) -> PyResult<PyGraph> {
    let id = GadgetId::from_name(name, ell, n).map_err(err)?;
    Ok(PyGraph {
        inner: id.build(seed).map_err(err)?,
    })
}

/// Saturated witness with `n` vertices and `m` edges. Raises `ValueError`
/// when `m` is provably impossible or outside the supported ranges.
#[pyfunction]
#[pyo3(signature = (n, ell, m, seed=0))]
fn build(n: usize, ell: usize, m: usize, seed: u64) -> PyResult<PyGraph> {
    match assembler::build_spectrum_witness(n, ell, m, seed, &BuildOptions::default()).map_err(err)? {
        SpectrumOutcome::Witness(w) => Ok(PyGraph { inner: w.graph }),
        SpectrumOutcome::Infeasible(v) => {
            let kind = match v {
                Verdict::InfeasibleByTheorem { .. } => "infeasible",
                Verdict::OutOfRange { .. } => "out of range",
            };
            Err(PyValueError::new_err(format!("{kind}: {}", v.reason())))
        }
    }
}

#[pyfunction]
fn sat_formula(n: usize, ell: usize) -> PyResult<usize> {
    if n == 0 {
        return Err(PyValueError::new_err("n must be positive"));
    }
    check_ell(ell)?;
    Ok(assembler::sat_formula(n, ell).value)
}

#[pyfunction]
fn ex_formula(n: usize, ell: usize) -> PyResult<usize> {
    check_ell(ell)?;
    Ok(assembler::ex_formula(n, ell).value)
}

#[pyfunction]
#[pyo3(signature = (n, ell, n0=None))]
fn theory_spectrum(py: Python<'_>, n: usize, ell: usize, n0: Option<usize>) -> PyResult<Py<PyAny>> {
    to_py(py, &assembler::theory_spectrum(n, ell, n0).map_err(err)?)
}

/// Realizable edge counts for `n ≤ 6`, by brute force.
#[pyfunction]
fn exhaustive_spectrum(n: usize, ell: usize) -> PyResult<Vec<usize>> {
    Ok(oracle::exhaustive_spectrum(n, ell, &ExhaustiveOptions::default())
        .map_err(err)?
        .realizable)
}

#[pymodule]
fn bergesat_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(gadget, m)?)?;
    m.add_function(wrap_pyfunction!(build, m)?)?;
    m.add_function(wrap_pyfunction!(sat_formula, m)?)?;
    m.add_function(wrap_pyfunction!(ex_formula, m)?)?;
    m.add_function(wrap_pyfunction!(theory_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(exhaustive_spectrum, m)?)?;
    Ok(())
}

//! Python bindings: posets, lattice polytopes, the `Γ`/`Ω` constructions,
//! Ehrhart data, reflexivity and normality checks, and Gröbner verification.
//!
//! Structured reports are returned as plain `dict`/`list` values.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyAny;
use serde::Serialize;

use poset_polytopes as core;
use poset_polytopes::groebner::{self, Family};
use poset_polytopes::reflexive::{self, NormalityOptions, ReportOptions};

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Converts any serializable report into Python objects through `json`.
fn to_python<'py>(py: Python<'py>, value: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn fraction(r: &num_bigint::BigInt, d: &num_bigint::BigInt) -> (BigInt, BigInt) {
    (r.clone(), d.clone())
}

#[pyclass(name = "Poset", module = "poset_polytopes_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPoset {
    inner: core::Poset,
}

#[pymethods]
impl PyPoset {
    /// `Poset(d, covers)` where each `(i, j)` in `covers` means `p_i < p_j`.
    #[new]
    fn new(d: usize, covers: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyPoset { inner: core::Poset::from_cover_relations(d, &covers).map_err(err)? })
    }

    #[staticmethod]
    fn chain(d: usize) -> Self {
        PyPoset { inner: core::Poset::chain(d) }
    }

    #[staticmethod]
    fn antichain(d: usize) -> Self {
        PyPoset { inner: core::Poset::antichain(d) }
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyPoset { inner: core::io::parse_poset(text).map_err(err)? })
    }

    fn to_json(&self) -> String {
        core::io::poset_to_json(&self.inner)
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn covers(&self) -> Vec<(usize, usize)> {
        self.inner.covers()
    }

    fn leq(&self, i: usize, j: usize) -> bool {
        self.inner.leq(i, j)
    }

    fn ideals(&self) -> Vec<Vec<usize>> {
        self.inner.ideals().into_iter().map(|s| s.labels()).collect()
    }

    fn antichains(&self) -> Vec<Vec<usize>> {
        self.inner.antichains().into_iter().map(|s| s.labels()).collect()
    }

    fn linear_extension_count(&self) -> num_bigint::BigUint {
        self.inner.linear_extension_count()
    }

    fn has_common_linear_extension(&self, other: &PyPoset) -> PyResult<bool> {
        core::poset::has_common_linear_extension(&self.inner, &other.inner).map_err(err)
    }

    /// `{p_{d+1}} ⊕ P`.
    fn adjoin_bottom(&self) -> PyResult<PyPoset> {
        Ok(PyPoset { inner: self.inner.adjoin_bottom().map_err(err)? })
    }

    fn __eq__(&self, other: &PyPoset) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Poset({}, {:?})", self.inner.size(), self.inner.covers())
    }
}

#[pyclass(name = "Polytope", module = "poset_polytopes_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPolytope {
    inner: core::LatticePolytope,
}

#[pymethods]
impl PyPolytope {
    /// Convex hull of integer points.
    #[new]
    fn new(points: Vec<Vec<i64>>) -> PyResult<Self> {
        Ok(PyPolytope { inner: core::LatticePolytope::hull(&points).map_err(err)? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyPolytope { inner: core::io::parse_polytope(text).map_err(err)? })
    }

    fn to_json(&self) -> String {
        core::io::polytope_to_json(&self.inner)
    }

    #[getter]
    fn vertices(&self) -> Vec<Vec<i64>> {
        self.inner.vertices().to_vec()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn ambient_dim(&self) -> usize {
        self.inner.ambient_dim()
    }

    /// Facets as `(normal, offset)` with `⟨normal, x⟩ ≤ offset`.
    fn facets(&self) -> Vec<(Vec<i64>, i64)> {
        self.inner.facets().iter().map(|f| (f.normal.clone(), f.offset)).collect()
    }

    #[pyo3(signature = (n = 1))]
    fn lattice_points(&self, n: u32) -> Vec<Vec<i64>> {
        self.inner.lattice_points(n)
    }

    #[pyo3(signature = (n = 1))]
    fn count_lattice_points(&self, n: u32) -> u64 {
        self.inner.count_lattice_points(n)
    }

    fn f_vector(&self) -> PyResult<Vec<u64>> {
        Ok(self.inner.f_vector().map_err(err)?.counts)
    }

    /// Ehrhart coefficients, constant term first, as `(num, den)` pairs.
    fn ehrhart(&self) -> PyResult<Vec<(BigInt, BigInt)>> {
        let e = core::ehrhart::ehrhart_polynomial(&self.inner).map_err(err)?;
        Ok(e.coeffs().iter().map(|c| fraction(c.numer(), c.denom())).collect())
    }

    fn is_reflexive(&self) -> PyResult<bool> {
        reflexive::is_reflexive(&self.inner).map_err(err)
    }

    /// Normality certificate as a dict (`verdict`, `checked_levels`,
    /// `level_bound`, `witness`).
    #[pyo3(signature = (max_level = None))]
    fn is_normal<'py>(&self, py: Python<'py>, max_level: Option<u32>) -> PyResult<Bound<'py, PyAny>> {
        let opts = NormalityOptions { max_level, ..Default::default() };
        let cert = reflexive::is_normal_with(&self.inner, &opts).map_err(err)?;
        to_python(py, &cert)
    }

    /// The full analysis report as a dict.
    fn analyze<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let report = reflexive::analysis_report(&self.inner, "python", &ReportOptions::default()).map_err(err)?;
        to_python(py, &report)
    }

    fn unimodular_equivalent(&self, other: &PyPolytope) -> PyResult<bool> {
        core::polytope::unimodular_equivalent(&self.inner, &other.inner).map_err(err)
    }

    fn __eq__(&self, other: &PyPolytope) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Polytope(dim={}, vertices={})", self.inner.dim(), self.inner.vertices().len())
    }
}

#[pyfunction]
fn order_polytope(p: &PyPoset) -> PyPolytope {
    PyPolytope { inner: core::order_polytope(&p.inner) }
}

#[pyfunction]
fn chain_polytope(p: &PyPoset) -> PyPolytope {
    PyPolytope { inner: core::chain_polytope(&p.inner) }
}

/// `conv(P ∪ −Q)`.
#[pyfunction]
fn gamma(p: &PyPolytope, q: &PyPolytope) -> PyResult<PyPolytope> {
    Ok(PyPolytope { inner: core::gamma(&p.inner, &q.inner).map_err(err)? })
}

/// `conv(P × {1} ∪ −Q × {−1})`.
#[pyfunction]
fn omega(p: &PyPolytope, q: &PyPolytope) -> PyResult<PyPolytope> {
    Ok(PyPolytope { inner: core::omega(&p.inner, &q.inner).map_err(err)? })
}

/// Volume of `Ω(O_P, C_Q)` from linear extensions, as `(num, den)`.
#[pyfunction]
fn volume_omega_formula(p: &PyPoset, q: &PyPoset) -> PyResult<(BigInt, BigInt)> {
    let v = core::ehrhart::volume_omega_formula(&p.inner, &q.inner, false).map_err(err)?;
    Ok(fraction(v.numer(), v.denom()))
}

/// Verification report for the explicit generators of `family`
/// (`"oo"`, `"oc"` or `"cc"`).
#[pyfunction]
#[pyo3(signature = (family, p, q, degree = groebner::DEFAULT_DEGREE))]
fn groebner_verify<'py>(
    py: Python<'py>,
    family: &str,
    p: &PyPoset,
    q: &PyPoset,
    degree: u32,
) -> PyResult<Bound<'py, PyAny>> {
    let family: Family = family.parse().map_err(err)?;
    let report = groebner::verify_family(family, &p.inner, &q.inner, degree).map_err(err)?;
    to_python(py, &report)
}

#[pyfunction]
fn classify_reflexive_2d(py: Python<'_>) -> PyResult<Bound<'_, PyAny>> {
    let census = reflexive::classify_reflexive_2d().map_err(err)?;
    to_python(py, &census)
}

#[pymodule]
fn poset_polytopes_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoset>()?;
    m.add_class::<PyPolytope>()?;
    m.add_function(wrap_pyfunction!(order_polytope, m)?)?;
    m.add_function(wrap_pyfunction!(chain_polytope, m)?)?;
    m.add_function(wrap_pyfunction!(gamma, m)?)?;
    m.add_function(wrap_pyfunction!(omega, m)?)?;
    m.add_function(wrap_pyfunction!(volume_omega_formula, m)?)?;
    m.add_function(wrap_pyfunction!(groebner_verify, m)?)?;
    m.add_function(wrap_pyfunction!(classify_reflexive_2d, m)?)?;
    Ok(())
}

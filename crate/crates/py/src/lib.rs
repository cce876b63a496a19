//! Python bindings: `import heckebounds`.

use hecke_core::assumption::{RepType, TypeAssumption};
use hecke_core::datasource::{self, Weierstrass};
use hecke_core::dirichlet::{self, Side, Theorem};
use hecke_core::{bounds, poles, repring, Error};
use num_complex::Complex64;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(heckebounds, HeckeError, PyValueError);

fn py_err(e: Error) -> PyErr {
    HeckeError::new_err(e.to_string())
}

fn assumption(rep_type: &str, self_dual: bool, omega_order: Option<u32>) -> PyResult<TypeAssumption> {
    let rt: RepType = rep_type.parse().map_err(py_err)?;
    let order = if self_dual { omega_order.or(Some(1)) } else { omega_order };
    TypeAssumption::new(rt, self_dual, order).map_err(py_err)
}

/// A formal ℤ-combination of symmetric-power atoms.
#[pyclass(name = "VirtualRep", frozen)]
pub struct PyVirtualRep(repring::VirtualRep);

#[pymethods]
impl PyVirtualRep {
    fn dim(&self) -> i64 {
        self.0.dim()
    }

    /// List of (atom, multiplicity) in canonical order.
    fn terms(&self) -> Vec<(String, i64)> {
        self.0.terms().map(|(a, m)| (a.to_string(), m)).collect()
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("VirtualRep({})", self.0)
    }
}

#[pyfunction]
fn cg_pair(a: u32, b: u32) -> PyVirtualRep {
    PyVirtualRep(repring::cg_pair(a, b))
}

#[pyfunction]
fn tensor_power(k: u32) -> PyResult<PyVirtualRep> {
    repring::tensor_power(k).map(PyVirtualRep).map_err(py_err)
}

/// Reduce an atom such as `"Sym4(pi)*w"` under a type assumption.
#[pyfunction]
#[pyo3(signature = (atom, rep_type="general", self_dual=true, omega_order=None))]
fn reduce(atom: &str, rep_type: &str, self_dual: bool, omega_order: Option<u32>) -> PyResult<PyVirtualRep> {
    let t = assumption(rep_type, self_dual, omega_order)?;
    let a = repring::AuxGroup::for_assumption(&t).parse_atom(atom).map_err(py_err)?;
    repring::reduce(&a, &t).map(PyVirtualRep).map_err(py_err)
}

/// α^k + β^k from a_p = α + β and ω(p) = αβ.
#[pyfunction]
#[pyo3(signature = (a_p, k, omega_p=Complex64::new(1.0, 0.0)))]
fn power_sum(a_p: Complex64, k: u32, omega_p: Complex64) -> Complex64 {
    repring::power_sum(a_p, omega_p, k)
}

#[pyclass(name = "PoleCertificate", frozen)]
pub struct PyPoleCertificate(poles::PoleCertificate);

#[pymethods]
impl PyPoleCertificate {
    #[getter]
    fn total_order(&self) -> i64 {
        self.0.total_order
    }

    #[getter]
    fn multiplicities(&self) -> Vec<i64> {
        self.0.multiplicities()
    }

    #[getter]
    fn note(&self) -> Option<String> {
        self.0.note.clone()
    }

    fn render(&self) -> String {
        poles::certificate_render(&self.0)
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __repr__(&self) -> String {
        format!("PoleCertificate(total_order={}, {})", self.0.total_order, self.render())
    }
}

#[pyfunction]
#[pyo3(signature = (k, rep_type="general", self_dual=true, omega_order=None))]
fn tensor_power_pole(k: u32, rep_type: &str, self_dual: bool, omega_order: Option<u32>) -> PyResult<PyPoleCertificate> {
    let t = assumption(rep_type, self_dual, omega_order)?;
    poles::tensor_power_pole(k, &t).map(PyPoleCertificate).map_err(py_err)
}

#[pyclass(name = "BoundResult", frozen, get_all)]
pub struct PyBoundResult {
    constant: f64,
    optimizer: Option<f64>,
    trace: Vec<String>,
}

#[pymethods]
impl PyBoundResult {
    fn __repr__(&self) -> String {
        format!("BoundResult(constant={}, optimizer={:?})", self.constant, self.optimizer)
    }
}

impl From<bounds::BoundResult> for PyBoundResult {
    fn from(r: bounds::BoundResult) -> Self {
        PyBoundResult { constant: r.constant, optimizer: r.optimizer, trace: r.trace }
    }
}

#[pyfunction]
#[pyo3(signature = (pole4=2, pole8=14))]
fn positive_side(pole4: u32, pole8: u32) -> PyResult<PyBoundResult> {
    bounds::positive_side(pole4, pole8).map(Into::into).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (pole6=5))]
fn negative_side(pole6: u32) -> PyResult<PyBoundResult> {
    bounds::negative_side(pole6).map(Into::into).map_err(py_err)
}

#[pyfunction]
fn positive_side_weak() -> PyBoundResult {
    bounds::positive_side_weak().into()
}

#[pyfunction]
#[pyo3(signature = (phi=0.0))]
fn non_self_dual(phi: f64) -> PyResult<PyBoundResult> {
    bounds::non_self_dual(phi).map(Into::into).map_err(py_err)
}

/// Normalized eigenvalues at primes p ≤ X with their header.
#[pyclass(name = "Dataset", frozen)]
pub struct PyDataset(datasource::Dataset);

#[pymethods]
impl PyDataset {
    #[staticmethod]
    fn read_csv(path: &str) -> PyResult<Self> {
        datasource::read_csv(path).map(PyDataset).map_err(py_err)
    }

    fn write_csv(&self, path: &str) -> PyResult<()> {
        datasource::write_csv(path, &self.0).map_err(py_err)
    }

    #[getter]
    fn source(&self) -> String {
        self.0.header.source.clone()
    }

    #[getter]
    fn self_dual(&self) -> bool {
        self.0.header.self_dual
    }

    #[getter]
    fn x(&self) -> u64 {
        self.0.header.x
    }

    #[getter]
    fn skipped(&self) -> Vec<u64> {
        self.0.header.skipped.clone()
    }

    fn primes(&self) -> Vec<u64> {
        self.0.records.iter().map(|r| r.p).collect()
    }

    fn eigenvalues(&self) -> Vec<Complex64> {
        self.0.records.iter().map(|r| r.a).collect()
    }

    /// Unnormalized integer eigenvalues where the source provides them.
    fn raw(&self) -> Vec<Option<i128>> {
        self.0.records.iter().map(|r| r.raw).collect()
    }

    fn rotated(&self, phi: f64) -> Self {
        PyDataset(self.0.rotated(phi))
    }

    fn __len__(&self) -> usize {
        self.0.records.len()
    }

    fn __repr__(&self) -> String {
        format!("Dataset(source={:?}, X={}, records={})", self.0.header.source, self.0.header.x, self.0.records.len())
    }
}

#[pyfunction]
fn ec_ap(a: i64, b: i64, x: u64) -> PyResult<PyDataset> {
    datasource::ec_ap(a, b, x).map(PyDataset).map_err(py_err)
}

/// Curve from general Weierstrass coefficients (a1, a2, a3, a4, a6).
#[pyfunction]
fn ec_ap_curve(ainvs: (i64, i64, i64, i64, i64), x: u64) -> PyResult<PyDataset> {
    let (a1, a2, a3, a4, a6) = ainvs;
    datasource::ec_ap_curve(&Weierstrass { a1, a2, a3, a4, a6 }, x).map(PyDataset).map_err(py_err)
}

#[pyfunction]
fn tau_ap(x: u64) -> PyResult<PyDataset> {
    datasource::tau_ap(x).map(PyDataset).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (n, seed=0))]
fn sato_tate_sample(n: usize, seed: u64) -> PyResult<PyDataset> {
    datasource::sato_tate_sample(n, seed).map(PyDataset).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (data, k, s, phi=0.0))]
fn truncated_sum(data: &PyDataset, k: u32, s: f64, phi: f64) -> PyResult<f64> {
    dirichlet::truncated_sum(&data.0.records, k, s, phi).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (data, k, s=None, phi=0.0))]
fn normalized_ratio(data: &PyDataset, k: u32, s: Option<f64>, phi: f64) -> PyResult<f64> {
    let s = s.unwrap_or_else(|| dirichlet::operating_point(data.0.header.x));
    dirichlet::normalized_ratio(&data.0.records, k, s, phi).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (data, k, s_grid=vec![1.5, 1.25, 1.1, 1.05]))]
fn pole_order_probe(data: &PyDataset, k: u32, s_grid: Vec<f64>) -> PyResult<f64> {
    dirichlet::pole_order_probe(&data.0.records, k, &s_grid).map_err(py_err)
}

fn parse_side(side: &str) -> PyResult<Side> {
    match side {
        "above" => Ok(Side::Above),
        "below" => Ok(Side::Below),
        other => Err(PyValueError::new_err(format!("side must be 'above' or 'below', got {other:?}"))),
    }
}

#[pyfunction]
#[pyo3(signature = (data, c, side="above", phi=0.0))]
fn density_profile<'py>(py: Python<'py>, data: &PyDataset, c: f64, side: &str, phi: f64) -> PyResult<Bound<'py, PyDict>> {
    let r = dirichlet::density_profile(&data.0, c, parse_side(side)?, phi).map_err(py_err)?;
    let d = PyDict::new(py);
    d.set_item("threshold", r.threshold)?;
    d.set_item("side", side)?;
    d.set_item("phi", r.phi)?;
    d.set_item("natural_proportion", r.natural_proportion)?;
    d.set_item("dirichlet_weighted", r.dirichlet_weighted)?;
    d.set_item("count", r.count)?;
    d.set_item("total", r.total)?;
    d.set_item("s_used", r.s_used)?;
    d.set_item("X", r.x)?;
    Ok(d)
}

/// Returns a dict with `passed`, `required`, `total` and per-side `counts` and `witnesses`.
#[pyfunction]
#[pyo3(signature = (data, theorem, phi=0.0, eps=dirichlet::DEFAULT_EPS))]
fn verify_theorem<'py>(py: Python<'py>, data: &PyDataset, theorem: &str, phi: f64, eps: f64) -> PyResult<Bound<'py, PyDict>> {
    let th: Theorem = theorem.parse().map_err(py_err)?;
    let r = dirichlet::verify_theorem(&data.0, th, phi, eps).map_err(py_err)?;
    let d = PyDict::new(py);
    d.set_item("passed", r.passed)?;
    d.set_item("required", r.required)?;
    d.set_item("total", r.total)?;
    d.set_item("thresholds", r.sides.iter().map(|s| s.threshold).collect::<Vec<_>>())?;
    d.set_item("counts", r.sides.iter().map(|s| s.count).collect::<Vec<_>>())?;
    d.set_item("witnesses", r.sides.iter().map(|s| s.witnesses.clone()).collect::<Vec<_>>())?;
    Ok(d)
}

#[pymodule]
fn heckebounds(m: &Bound<'_, PyModule>) -> PyResult<()> {
    init_module(m)
}

/// Registers every binding on `m`; also usable from an embedded interpreter.
pub fn init_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("HeckeError", m.py().get_type::<HeckeError>())?;
    m.add_class::<PyVirtualRep>()?;
    m.add_class::<PyPoleCertificate>()?;
    m.add_class::<PyBoundResult>()?;
    m.add_class::<PyDataset>()?;
    m.add_function(wrap_pyfunction!(cg_pair, m)?)?;
    m.add_function(wrap_pyfunction!(tensor_power, m)?)?;
    m.add_function(wrap_pyfunction!(reduce, m)?)?;
    m.add_function(wrap_pyfunction!(power_sum, m)?)?;
    m.add_function(wrap_pyfunction!(tensor_power_pole, m)?)?;
    m.add_function(wrap_pyfunction!(positive_side, m)?)?;
    m.add_function(wrap_pyfunction!(negative_side, m)?)?;
    m.add_function(wrap_pyfunction!(positive_side_weak, m)?)?;
    m.add_function(wrap_pyfunction!(non_self_dual, m)?)?;
    m.add_function(wrap_pyfunction!(ec_ap, m)?)?;
    m.add_function(wrap_pyfunction!(ec_ap_curve, m)?)?;
    m.add_function(wrap_pyfunction!(tau_ap, m)?)?;
    m.add_function(wrap_pyfunction!(sato_tate_sample, m)?)?;
    m.add_function(wrap_pyfunction!(truncated_sum, m)?)?;
    m.add_function(wrap_pyfunction!(normalized_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(pole_order_probe, m)?)?;
    m.add_function(wrap_pyfunction!(density_profile, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    Ok(())
}

//! Python bindings. Rationals cross the boundary as `"p/q"` strings; structured
//! results come back as plain dicts and lists.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

use vir25::scalar::{format_rational, parse_rational, Rational};
use vir25::verma::HWModuleDescriptor;

fn err(e: vir25::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn q(s: &str) -> PyResult<Rational> {
    parse_rational(s).map_err(err)
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or_default().into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(a) => {
            let list = PyList::empty(py);
            for x in a {
                list.append(to_py(py, x)?)?;
            }
            list.into_any()
        }
        Value::Object(o) => {
            let d = PyDict::new(py);
            for (k, x) in o {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any()
        }
    })
}

/// `h_{r,s}(t)` as a string.
#[pyfunction]
fn h_rs(t: &str, r: i64, s: i64) -> PyResult<String> {
    Ok(format_rational(
        &vir25::verma::h_rs(&q(t)?, r, s).map_err(err)?,
    ))
}

#[pyfunction]
fn central_charge(t: &str) -> PyResult<String> {
    Ok(format_rational(
        &vir25::verma::central_charge_from_t(&q(t)?).map_err(err)?,
    ))
}

#[pyfunction]
fn singular_vector<'py>(
    py: Python<'py>,
    c: &str,
    h: &str,
    level: u32,
) -> PyResult<Bound<'py, PyAny>> {
    let m = HWModuleDescriptor::verma(q(c)?, q(h)?);
    let vs = vir25::verma::singular_vector(&m, level).map_err(err)?;
    to_py(py, &Value::Array(vs.iter().map(|v| v.to_json()).collect()))
}

#[pyfunction]
fn fuse<'py>(py: Python<'py>, r: u32, rp: u32) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &vir25::fusion::fuse(r, rp).map_err(err)?.to_json())
}

#[pyfunction]
fn decompose<'py>(py: Python<'py>, algebra: &str, count: usize) -> PyResult<Bound<'py, PyAny>> {
    let s = vir25::fusion::decompose_algebra_named(algebra, count).map_err(err)?;
    to_py(py, &Value::Array(s.iter().map(|x| x.to_json()).collect()))
}

#[pyfunction]
fn rigidity<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &vir25::bpz::rigidity_scalar().map_err(err)?.to_json())
}

#[pyfunction]
fn bpz_ode<'py>(
    py: Python<'py>,
    c: &str,
    h_deg: &str,
    h_other: &str,
) -> PyResult<Bound<'py, PyAny>> {
    to_py(
        py,
        &vir25::bpz::derive_bpz(&q(c)?, &q(h_deg)?, &q(h_other)?)
            .map_err(err)?
            .to_json(),
    )
}

#[pyfunction]
fn braiding<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &vir25::category::braiding_report().map_err(err)?)
}

#[pyfunction]
fn twist<'py>(py: Python<'py>, c: u32, r: u32) -> PyResult<Bound<'py, PyAny>> {
    to_py(
        py,
        &vir25::category::twist_scalar(c, r).map_err(err)?.to_json(),
    )
}

#[pyfunction]
#[pyo3(signature = (r, r_range=15))]
fn parity_check(r: u32, r_range: u32) -> PyResult<bool> {
    vir25::category::monodromy_parity_check(r, r_range).map_err(err)
}

/// `[(name, passed)]` for every golden check.
#[pyfunction]
fn reproduction_suite() -> Vec<(String, bool)> {
    vir25::suite::reproduction_suite()
        .into_iter()
        .map(|c| (c.name.to_string(), c.passed))
        .collect()
}

/// A highest-weight module `V(c, h)`, optionally quotiented at `quotient_level`.
#[pyclass(frozen)]
struct Module {
    inner: Arc<HWModuleDescriptor>,
}

#[pymethods]
impl Module {
    #[new]
    #[pyo3(signature = (c, h, quotient_level=None))]
    fn new(c: &str, h: &str, quotient_level: Option<u32>) -> PyResult<Self> {
        let inner = match quotient_level {
            Some(l) => HWModuleDescriptor::quotient(q(c)?, q(h)?, l).map_err(err)?,
            None => HWModuleDescriptor::verma(q(c)?, q(h)?),
        };
        Ok(Self { inner })
    }

    #[getter]
    fn central_charge(&self) -> String {
        format_rational(&self.inner.central_charge)
    }

    #[getter]
    fn highest_weight(&self) -> String {
        format_rational(&self.inner.highest_weight)
    }

    fn gram<'py>(&self, py: Python<'py>, level: u32) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &vir25::verma::gram_matrix(&self.inner, level).to_json())
    }

    fn dual_basis<'py>(&self, py: Python<'py>, level: u32) -> PyResult<Bound<'py, PyAny>> {
        let d = vir25::verma::dual_basis(&self.inner, level).map_err(err)?;
        to_py(py, &Value::Array(d.iter().map(|v| v.to_json()).collect()))
    }

    #[pyo3(signature = (order=12))]
    fn character<'py>(&self, py: Python<'py>, order: usize) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &vir25::verma::character(&self.inner, order).to_json())
    }

    fn __repr__(&self) -> String {
        self.inner.to_string()
    }
}

#[pymodule]
pub fn pyvir25(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(h_rs, m)?)?;
    m.add_function(wrap_pyfunction!(central_charge, m)?)?;
    m.add_function(wrap_pyfunction!(singular_vector, m)?)?;
    m.add_function(wrap_pyfunction!(fuse, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(rigidity, m)?)?;
    m.add_function(wrap_pyfunction!(bpz_ode, m)?)?;
    m.add_function(wrap_pyfunction!(braiding, m)?)?;
    m.add_function(wrap_pyfunction!(twist, m)?)?;
    m.add_function(wrap_pyfunction!(parity_check, m)?)?;
    m.add_function(wrap_pyfunction!(reproduction_suite, m)?)?;
    m.add_class::<Module>()?;
    Ok(())
}

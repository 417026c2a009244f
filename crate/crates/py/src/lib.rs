//! Python module `twistbrack`: sessions, cochains and the command reports.

use std::sync::Arc;

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;
use twistbrack::bracket::{self, Cochain as CoreCochain};
use twistbrack::commands::{self, Options, Report as CoreReport};
use twistbrack::resolutions::ContractionOrder;
use twistbrack::session::{cochain_to_raw, SelfcheckBounds, Session as CoreSession};
use twistbrack::twisted::TwistedResolution;
use twistbrack::{demo, Error};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::UnknownName(n) => PyKeyError::new_err(n),
        e => PyValueError::new_err(e.to_string()),
    }
}

fn parse_order(order: &str) -> PyResult<ContractionOrder> {
    match order {
        "descending" => Ok(ContractionOrder::Descending),
        "ascending" => Ok(ContractionOrder::Ascending),
        o => Err(PyValueError::new_err(format!("unknown contraction order `{o}`"))),
    }
}

fn json_to_py<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

/// A loaded session together with the resolution used for computations.
#[pyclass(frozen, module = "twistbrack")]
struct Session {
    inner: Arc<CoreSession>,
    res: Arc<TwistedResolution>,
    order: ContractionOrder,
}

impl Session {
    fn wrap(s: CoreSession, order: ContractionOrder) -> Self {
        let res = Arc::new(TwistedResolution::new(s.ring_arc(), order));
        Session { inner: Arc::new(s), res, order }
    }

    fn opts(&self) -> Options {
        Options { order: self.order, timing: false }
    }

    fn cochain_obj(&self, value: CoreCochain) -> Cochain {
        Cochain { session: self.inner.clone(), res: self.res.clone(), value }
    }
}

#[pymethods]
impl Session {
    #[staticmethod]
    #[pyo3(signature = (path, order = "descending"))]
    fn load(path: &str, order: &str) -> PyResult<Self> {
        Ok(Session::wrap(CoreSession::load(path).map_err(py_err)?, parse_order(order)?))
    }

    #[staticmethod]
    #[pyo3(signature = (text, order = "descending"))]
    fn from_json(text: &str, order: &str) -> PyResult<Self> {
        Ok(Session::wrap(CoreSession::from_json(text).map_err(py_err)?, parse_order(order)?))
    }

    /// The order-p transvection example with cochains lambda, kappa and delta.
    #[staticmethod]
    #[pyo3(signature = (p, order = "descending"))]
    fn transvection(p: u64, order: &str) -> PyResult<Self> {
        Ok(Session::wrap(demo::transvection_session(p).map_err(py_err)?, parse_order(order)?))
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn p(&self) -> u64 {
        self.inner.ring().fp().p() as u64
    }

    #[getter]
    fn group_order(&self) -> usize {
        self.inner.ring().group().order()
    }

    #[getter]
    fn variables(&self) -> Vec<String> {
        self.inner.ring().names().to_vec()
    }

    fn cochain_names(&self) -> Vec<String> {
        self.inner.cochains().map(|(n, _)| n.clone()).collect()
    }

    fn cochain(&self, name: &str) -> PyResult<Cochain> {
        Ok(self.cochain_obj(self.inner.cochain(name).map_err(py_err)?.clone()))
    }

    fn zero(&self, degree: usize) -> Cochain {
        self.cochain_obj(CoreCochain::zero(degree))
    }

    fn check(&self, name: &str) -> PyResult<Report> {
        commands::check(&self.inner, name, self.opts()).map(Report::from).map_err(py_err)
    }

    #[pyo3(signature = (left, right, compare_with = None))]
    fn bracket(&self, left: &str, right: &str, compare_with: Option<&str>) -> PyResult<Report> {
        commands::bracket(&self.inner, left, right, compare_with, self.opts()).map(Report::from).map_err(py_err)
    }

    #[pyo3(signature = (hdeg = 3, ideg = 3, trials = 20, seed = 1))]
    fn selfcheck(&self, hdeg: usize, ideg: usize, trials: usize, seed: u64) -> PyResult<Report> {
        let bounds = SelfcheckBounds { hdeg, ideg, trials, seed };
        commands::selfcheck(&self.inner, bounds, self.opts()).map(Report::from).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("Session(p={}, cochains={:?})", self.p(), self.cochain_names())
    }
}

/// A Hochschild cochain, given by its values on free generators.
#[pyclass(frozen, module = "twistbrack")]
struct Cochain {
    session: Arc<CoreSession>,
    res: Arc<TwistedResolution>,
    value: CoreCochain,
}

impl Cochain {
    fn same(&self, value: CoreCochain) -> Cochain {
        Cochain { session: self.session.clone(), res: self.res.clone(), value }
    }

    fn check_session(&self, other: &Cochain) -> PyResult<()> {
        if Arc::ptr_eq(&self.res, &other.res) {
            Ok(())
        } else {
            Err(PyValueError::new_err("cochains belong to different sessions"))
        }
    }
}

#[pymethods]
impl Cochain {
    #[getter]
    fn degree(&self) -> usize {
        self.value.degree()
    }

    #[getter]
    fn internal_degrees(&self) -> Vec<i64> {
        self.value.internal_degrees().into_iter().collect()
    }

    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn __len__(&self) -> usize {
        self.value.len()
    }

    fn is_cocycle(&self) -> bool {
        bracket::is_cocycle(&self.res, &self.value)
    }

    fn coboundary(&self) -> Cochain {
        self.same(bracket::coboundary(&self.res, &self.value))
    }

    fn bracket(&self, other: &Cochain) -> PyResult<Cochain> {
        self.check_session(other)?;
        Ok(self.same(bracket::bracket(&self.res, &self.value, &other.value).map_err(py_err)?))
    }

    fn circle(&self, other: &Cochain) -> PyResult<Cochain> {
        self.check_session(other)?;
        Ok(self.same(bracket::circle(&self.res, &self.value, &other.value).map_err(py_err)?))
    }

    fn cup(&self, other: &Cochain) -> PyResult<Cochain> {
        self.check_session(other)?;
        Ok(self.same(bracket::cup(&self.res, &self.value, &other.value)))
    }

    /// `(equal, witness)` where `∂*witness = self − other` when equal.
    fn class_equals(&self, other: &Cochain) -> PyResult<(bool, Option<Cochain>)> {
        self.check_session(other)?;
        let c = bracket::class_equal(&self.res, &self.value, &other.value).map_err(py_err)?;
        Ok((c.equal, c.witness.map(|w| self.same(w))))
    }

    fn __neg__(&self) -> Cochain {
        let fp = self.session.ring().fp();
        self.same(self.value.scaled(fp.neg(1), fp))
    }

    fn __add__(&self, other: &Cochain) -> PyResult<Cochain> {
        self.check_session(other)?;
        let mut out = self.value.clone();
        out.add_scaled(&other.value, 1, self.session.ring().fp()).map_err(py_err)?;
        Ok(self.same(out))
    }

    fn __sub__(&self, other: &Cochain) -> PyResult<Cochain> {
        self.check_session(other)?;
        Ok(self.same(self.value.sub(&other.value, self.session.ring().fp()).map_err(py_err)?))
    }

    fn __eq__(&self, other: &Cochain) -> bool {
        Arc::ptr_eq(&self.res, &other.res) && self.value == other.value
    }

    /// The session-format entry table as Python data.
    fn table<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let raw = cochain_to_raw(self.session.ring(), &self.value, self.value.internal_degree());
        json_to_py(py, &serde_json::to_string(&raw).expect("cochain serializes"))
    }

    fn __str__(&self) -> String {
        commands::render_cochain(&self.session, &self.value)
    }

    fn __repr__(&self) -> String {
        format!("Cochain(degree={}, values={})", self.value.degree(), self.value.len())
    }
}

/// The outcome of a command: verdict, JSON document and human rendering.
#[pyclass(frozen, module = "twistbrack")]
struct Report {
    inner: CoreReport,
}

impl From<CoreReport> for Report {
    fn from(inner: CoreReport) -> Self {
        Report { inner }
    }
}

#[pymethods]
impl Report {
    #[getter]
    fn passed(&self) -> bool {
        self.inner.doc.verdict == commands::Verdict::Pass
    }

    #[getter]
    fn exit_code(&self) -> i32 {
        self.inner.doc.verdict.exit_code()
    }

    #[getter]
    fn pretty(&self) -> String {
        self.inner.pretty.clone()
    }

    fn to_json(&self) -> String {
        self.inner.doc.to_json()
    }

    fn document<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &self.inner.doc.to_json())
    }

    fn __repr__(&self) -> String {
        format!("Report({}, {})", self.inner.doc.command, if self.passed() { "pass" } else { "fail" })
    }
}

/// Runs the transvection demo for the prime `p`.
#[pyfunction]
fn demo_transvection(p: u64) -> PyResult<Report> {
    commands::demo_transvection(p, Options::default()).map(Report::from).map_err(py_err)
}

#[pymodule]
#[pyo3(name = "twistbrack")]
fn twistbrack_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Session>()?;
    m.add_class::<Cochain>()?;
    m.add_class::<Report>()?;
    m.add_function(wrap_pyfunction!(demo_transvection, m)?)?;
    Ok(())
}

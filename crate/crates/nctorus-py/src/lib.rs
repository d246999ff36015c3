//! Python bindings.
//!
//! Exposes exact rational functions, symbols, one-forms, the Dirac
//! parametrices, the residue integrals, the spectral functionals and the
//! verification harness. Reports are returned as plain Python dictionaries
//! with the same layout as the command-line JSON output.

use nctorus::algebra::{lift, parse_symbol, NcSymbol};
use nctorus::arith::{fmt_rat, parse_rat, RatFun};
use nctorus::functionals::{self as fx, FunctionalReport, Options};
use nctorus::psido::{self, DiracVariant};
use nctorus::residue::{self, IntegralKey, Normalization};
use nctorus::verify::{Verifier, VerifyConfig};
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use serde::Serialize;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn normalization(name: &str) -> PyResult<Normalization> {
    match name {
        "table" => Ok(Normalization::Table),
        "raw" => Ok(Normalization::Raw),
        other => Err(PyValueError::new_err(format!("unknown normalization {other:?}; expected \"table\" or \"raw\""))),
    }
}

/// Converts any serializable value into Python objects through JSON.
fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(err)?;
    py.import("json")?.call_method1("loads", (text,))
}

/// Rational function of the modular variable `s` with rational coefficients.
#[pyclass(name = "RatFun", module = "nctorus", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyRatFun(RatFun);

#[pymethods]
impl PyRatFun {
    /// Builds from ascending numerator and denominator coefficients given as
    /// strings or integers, e.g. `RatFun(["1"], ["0", "1"])` for `1/s`.
    #[new]
    #[pyo3(signature = (num, den = None))]
    fn new(num: Vec<String>, den: Option<Vec<String>>) -> PyResult<Self> {
        let den = den.unwrap_or_else(|| vec!["1".into()]);
        RatFun::from_dense(&num, &den).map(PyRatFun).map_err(err)
    }

    /// The variable `s`.
    #[staticmethod]
    fn s() -> Self {
        PyRatFun(RatFun::s())
    }

    /// `s^n` for any integer `n`.
    #[staticmethod]
    fn s_pow(n: i64) -> Self {
        PyRatFun(RatFun::s_pow(n))
    }

    /// A rational constant such as `"3/4"`.
    #[staticmethod]
    fn constant(value: &str) -> PyResult<Self> {
        parse_rat(value).map(|c| PyRatFun(RatFun::constant(c))).map_err(err)
    }

    /// Ascending numerator coefficients.
    #[getter]
    fn num(&self) -> Vec<String> {
        self.0.to_dense().0
    }

    /// Ascending denominator coefficients (monic).
    #[getter]
    fn den(&self) -> Vec<String> {
        self.0.to_dense().1
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `F(1/s)`.
    fn inverse_s(&self) -> Self {
        PyRatFun(self.0.inverse_s())
    }

    /// Exact evaluation at a rational point given as a string.
    fn eval_exact(&self, s: &str) -> PyResult<String> {
        let s = parse_rat(s).map_err(err)?;
        self.0.eval(&s).map(|v| fmt_rat(&v)).map_err(err)
    }

    /// Floating-point evaluation.
    fn eval(&self, s: f64) -> f64 {
        self.0.eval_f64(s)
    }

    fn __add__(&self, o: &Self) -> Self {
        PyRatFun(&self.0 + &o.0)
    }

    fn __sub__(&self, o: &Self) -> Self {
        PyRatFun(&self.0 - &o.0)
    }

    fn __mul__(&self, o: &Self) -> Self {
        PyRatFun(&self.0 * &o.0)
    }

    fn __truediv__(&self, o: &Self) -> PyResult<Self> {
        self.0.div(&o.0).map(PyRatFun).map_err(|e| PyZeroDivisionError::new_err(e.to_string()))
    }

    fn __neg__(&self) -> Self {
        PyRatFun(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_expr()
    }

    fn __repr__(&self) -> String {
        format!("RatFun({:?})", self.0.to_expr())
    }
}

/// Matrix-valued symbol over the noncommutative torus.
#[pyclass(name = "Symbol", module = "nctorus", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySymbol(NcSymbol);

#[pymethods]
impl PySymbol {
    /// Parses the linear LaTeX-like syntax, e.g. `"2 u_1 b_0^2 \\xi_1 \\sigma^1"`.
    #[new]
    fn new(src: &str) -> PyResult<Self> {
        parse_symbol(src).map(PySymbol).map_err(err)
    }

    #[staticmethod]
    fn zero() -> Self {
        PySymbol(NcSymbol::zero())
    }

    #[staticmethod]
    fn one() -> Self {
        PySymbol(NcSymbol::one())
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Homogeneity degrees present, in ascending order.
    fn degrees(&self) -> Vec<i64> {
        self.0.degrees()
    }

    /// Homogeneous part of degree `d`.
    fn part(&self, d: i64) -> Self {
        PySymbol(self.0.part(d))
    }

    /// The derivation `δⱼ` (j = 1, 2).
    fn delta(&self, j: u8) -> PyResult<Self> {
        self.0.delta(j).map(PySymbol).map_err(err)
    }

    /// The derivative `∂/∂ξⱼ` (j = 1, 2).
    fn dxi(&self, j: u8) -> Self {
        PySymbol(self.0.dxi(j))
    }

    /// Matrix trace (normalized, so the identity has trace 1).
    fn sigma_trace(&self) -> Self {
        PySymbol(self.0.sigma_trace())
    }

    /// Every word collapsed to commutative normal form.
    fn commutative(&self) -> Self {
        PySymbol(self.0.commutative())
    }

    /// Asymptotic composition `self ∘ other`, truncated below `cutoff`.
    fn compose(&self, other: &Self, cutoff: i64) -> PyResult<Self> {
        psido::compose(&self.0, &other.0, cutoff).map(PySymbol).map_err(err)
    }

    /// Equality modulo the relations of the algebra; with `cyclic` also
    /// modulo cyclic permutations under the trace.
    #[pyo3(signature = (other, cyclic = false))]
    fn lift_equal(&self, other: &Self, cyclic: bool) -> bool {
        lift::lift_equal(&self.0, &other.0, cyclic)
    }

    fn __add__(&self, o: &Self) -> Self {
        PySymbol(self.0.add(&o.0))
    }

    fn __sub__(&self, o: &Self) -> Self {
        PySymbol(self.0.sub(&o.0))
    }

    /// Pointwise product of symbols (not the operator composition).
    fn __mul__(&self, o: &Self) -> Self {
        PySymbol(self.0.mul(&o.0))
    }

    fn __eq__(&self, o: &Self) -> bool {
        self.0 == o.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Symbol({} terms)", self.0.len())
    }
}

/// One-form `c1·σ¹ + c2·kσ²`.
#[pyclass(name = "OneForm", module = "nctorus", frozen, from_py_object)]
#[derive(Clone)]
struct PyOneForm(psido::OneForm);

#[pymethods]
impl PyOneForm {
    /// Parses `sigma1`, `ksigma2`, `free:a:b` or a symbolic name such as `u`.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        nctorus::cli::parse_form(spec).map(PyOneForm).map_err(err)
    }

    #[staticmethod]
    fn symbolic(name: &str) -> Self {
        PyOneForm(psido::OneForm::symbolic(name))
    }

    #[staticmethod]
    fn free(a: &str, b: &str) -> Self {
        PyOneForm(psido::OneForm::free(a, b))
    }

    fn to_symbol(&self) -> PySymbol {
        PySymbol(self.0.to_symbol())
    }

    fn __str__(&self) -> String {
        self.0.describe()
    }

    fn __repr__(&self) -> String {
        format!("OneForm({:?})", self.0.describe())
    }
}

/// Symbol of `D_k`.
#[pyfunction]
fn dirac_symbol() -> PySymbol {
    PySymbol(psido::dirac_symbol())
}

/// Parametrix of `D_k` with `depth` terms `𝔟₋₁ … 𝔟₋depth`.
#[pyfunction]
fn inverse_dirac(depth: u32) -> PyResult<PySymbol> {
    psido::inverse_dirac(DiracVariant::Standard, depth).map(PySymbol).map_err(err)
}

/// Parametrix of `D_k²` with `depth` terms `𝔠₋₂ … 𝔠₋(depth+1)`.
#[pyfunction]
fn inverse_dirac_squared(depth: u32) -> PyResult<PySymbol> {
    psido::inverse_dirac_squared(DiracVariant::Standard, depth).map(PySymbol).map_err(err)
}

/// `(k_power, F/π)` of the rearrangement integral for `b₀^m k^a X b₀^n k^b Y ξ₂^{2β}`.
#[pyfunction]
#[pyo3(signature = (m, n, beta, a = 0, b = 0, normalization = "table"))]
fn integral(m: u32, n: u32, beta: u32, a: i64, b: i64, normalization: &str) -> PyResult<(i64, PyRatFun)> {
    let norm = self::normalization(normalization)?;
    residue::assemble_f(&IntegralKey::new(m, n, beta, a, b), norm).map(|(p, f)| (p, PyRatFun(f))).map_err(err)
}

/// The integral `J(β, m, n; s)` by numerical quadrature.
#[pyfunction]
fn quadrature(beta: u32, m: u32, n: u32, s: f64) -> PyResult<f64> {
    residue::quadrature_oracle(beta, m, n, s).map_err(err)
}

fn options(normalization: &str, dirac_depth: u32, laplace_depth: u32, commutative: bool) -> PyResult<Options> {
    Ok(Options { normalization: self::normalization(normalization)?, dirac_depth, laplace_depth, commutative, ..Options::default() })
}

fn report<'py>(py: Python<'py>, r: Result<FunctionalReport, fx::FunctionalError>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &r.map_err(err)?)
}

fn forms_or_default(forms: Option<Vec<PyOneForm>>, count: usize) -> Vec<psido::OneForm> {
    match forms {
        Some(f) => f.into_iter().map(|f| f.0).collect(),
        None => fx::symbolic_forms(count),
    }
}

fn exactly<const N: usize>(forms: Vec<psido::OneForm>) -> PyResult<[psido::OneForm; N]> {
    let got = forms.len();
    forms.try_into().map_err(|_| PyValueError::new_err(format!("expected {N} one-forms, got {got}")))
}

/// Metric functional `Wres(u v D_k⁻²)` as a report dictionary.
#[pyfunction]
#[pyo3(signature = (forms = None, normalization = "table", laplace_depth = 4, commutative = false))]
fn metric<'py>(py: Python<'py>, forms: Option<Vec<PyOneForm>>, normalization: &str, laplace_depth: u32, commutative: bool) -> PyResult<Bound<'py, PyAny>> {
    let opts = options(normalization, 3, laplace_depth, commutative)?;
    let [u, v] = exactly(forms_or_default(forms, 2))?;
    report(py, fx::metric_functional(&u, &v, &opts))
}

/// Torsion functional; without forms the generic `aσ¹ + b kσ²` is used.
#[pyfunction]
#[pyo3(signature = (forms = None, normalization = "table", dirac_depth = 3, commutative = false))]
fn torsion<'py>(py: Python<'py>, forms: Option<Vec<PyOneForm>>, normalization: &str, dirac_depth: u32, commutative: bool) -> PyResult<Bound<'py, PyAny>> {
    let opts = options(normalization, dirac_depth, 4, commutative)?;
    match forms {
        None => report(py, fx::torsion_generic(&opts)),
        Some(f) => {
            let [u, v, w] = exactly(forms_or_default(Some(f), 3))?;
            report(py, fx::torsion_functional(&u, &v, &w, &opts))
        }
    }
}

/// Spectral closedness for a product of one-forms (default: three symbolic forms).
#[pyfunction]
#[pyo3(signature = (forms = None, normalization = "table", dirac_depth = 3, commutative = false))]
fn closedness<'py>(py: Python<'py>, forms: Option<Vec<PyOneForm>>, normalization: &str, dirac_depth: u32, commutative: bool) -> PyResult<Bound<'py, PyAny>> {
    let opts = options(normalization, dirac_depth, 4, commutative)?;
    let forms = forms_or_default(forms, 3);
    if forms.is_empty() {
        return Err(PyValueError::new_err("closedness needs at least one one-form"));
    }
    report(py, fx::spectral_closedness(&forms, &opts))
}

/// Einstein functional for two symbolic one-forms, including the six tables.
#[pyfunction]
#[pyo3(signature = (normalization = "table", dirac_depth = 3, laplace_depth = 4, commutative = false))]
fn einstein<'py>(py: Python<'py>, normalization: &str, dirac_depth: u32, laplace_depth: u32, commutative: bool) -> PyResult<Bound<'py, PyAny>> {
    let opts = options(normalization, dirac_depth, laplace_depth, commutative)?;
    report(py, fx::einstein_functional(&psido::OneForm::symbolic("u"), &psido::OneForm::symbolic("v"), &opts))
}

/// Runs the acceptance criteria (all of them, or the listed ids).
#[pyfunction]
#[pyo3(signature = (criteria = None, property_cases = 1000, seed = 2024))]
fn verify<'py>(py: Python<'py>, criteria: Option<Vec<u8>>, property_cases: usize, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let verifier = Verifier::new(VerifyConfig { property_cases, seed, ..VerifyConfig::default() });
    match criteria {
        None => to_py(py, &verifier.run_all()),
        Some(ids) => {
            if let Some(bad) = ids.iter().find(|i| !(1..=10).contains(*i)) {
                return Err(PyValueError::new_err(format!("no criterion {bad}; ids run from 1 to 10")));
            }
            to_py(py, &ids.iter().map(|&i| verifier.run(i)).collect::<Vec<_>>())
        }
    }
}

#[pymodule]
#[pyo3(name = "nctorus")]
fn nctorus_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("SCHEMA_VERSION", fx::SCHEMA_VERSION)?;
    m.add_class::<PyRatFun>()?;
    m.add_class::<PySymbol>()?;
    m.add_class::<PyOneForm>()?;
    m.add_function(wrap_pyfunction!(dirac_symbol, m)?)?;
    m.add_function(wrap_pyfunction!(inverse_dirac, m)?)?;
    m.add_function(wrap_pyfunction!(inverse_dirac_squared, m)?)?;
    m.add_function(wrap_pyfunction!(integral, m)?)?;
    m.add_function(wrap_pyfunction!(quadrature, m)?)?;
    m.add_function(wrap_pyfunction!(metric, m)?)?;
    m.add_function(wrap_pyfunction!(torsion, m)?)?;
    m.add_function(wrap_pyfunction!(closedness, m)?)?;
    m.add_function(wrap_pyfunction!(einstein, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}

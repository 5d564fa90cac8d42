use num_bigint::{BigInt, BigUint};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use indel_bounds::asymptotics::{self, OptimizerConfig};
use indel_bounds::bounds::{self, BoundValue, CodeParams, CwMode, ListParams};
use indel_bounds::constant_weight::{CwAnswer, CwQuery, CwSolver};
use indel_bounds::constructions;
use indel_bounds::levenshtein::{self, Code, Word};
use indel_bounds::oracle;
use indel_bounds::{Error, Limits};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn word(symbols: Vec<u32>, q: u32) -> PyResult<Word> {
    Word::new(symbols, q).map_err(err)
}

fn params(q: u32, n: usize, d: usize) -> PyResult<CodeParams> {
    CodeParams::new(q, n, d).map_err(err)
}

fn mode(name: &str) -> PyResult<CwMode> {
    match name {
        "exact" => Ok(CwMode::Exact),
        "upper" => Ok(CwMode::Upper),
        other => Err(PyValueError::new_err(format!("mode must be 'exact' or 'upper', got {other:?}"))),
    }
}

/// An upper bound with its exact rational value.
#[pyclass(name = "BoundValue", frozen)]
struct PyBoundValue {
    #[pyo3(get)]
    source: String,
    #[pyo3(get)]
    applicable: bool,
    #[pyo3(get)]
    numerator: Option<BigInt>,
    #[pyo3(get)]
    denominator: Option<BigInt>,
    decimal: Option<f64>,
    #[pyo3(get)]
    exactness: String,
    #[pyo3(get)]
    s: Option<usize>,
    #[pyo3(get)]
    t: Option<usize>,
}

#[pymethods]
impl PyBoundValue {
    /// The value as a `fractions.Fraction`, or None when not applicable.
    #[getter]
    fn value<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        let (Some(num), Some(den)) = (&self.numerator, &self.denominator) else {
            return Ok(None);
        };
        let fraction = PyModule::import(py, "fractions")?.getattr("Fraction")?;
        fraction.call1((num.clone(), den.clone())).map(Some)
    }

    fn __float__(&self) -> f64 {
        self.decimal.unwrap_or(f64::NAN)
    }

    fn __repr__(&self) -> String {
        match (&self.numerator, &self.denominator) {
            (Some(n), Some(d)) => format!("BoundValue({}, {n}/{d}, {})", self.source, self.exactness),
            _ => format!("BoundValue({}, not applicable)", self.source),
        }
    }
}

impl From<&BoundValue> for PyBoundValue {
    fn from(b: &BoundValue) -> Self {
        PyBoundValue {
            source: b.source.name().to_string(),
            applicable: b.applicable,
            numerator: b.value.as_ref().map(|v| v.numer().clone()),
            denominator: b.value.as_ref().map(|v| v.denom().clone()),
            decimal: b.to_f64(),
            exactness: b.exactness.to_string(),
            s: b.list.map(|l| l.s),
            t: b.list.map(|l| l.t),
        }
    }
}

/// Answer for `A(n, d, w)`, with `d` normalized to an even value.
#[pyclass(name = "CwAnswer", frozen)]
struct PyCwAnswer {
    #[pyo3(get)]
    n: usize,
    #[pyo3(get)]
    d: usize,
    #[pyo3(get)]
    w: usize,
    #[pyo3(get)]
    value: BigUint,
    #[pyo3(get)]
    exactness: String,
    #[pyo3(get)]
    method: String,
    /// 1-based supports, or None.
    #[pyo3(get)]
    witness: Option<Vec<Vec<usize>>>,
}

#[pymethods]
impl PyCwAnswer {
    fn __repr__(&self) -> String {
        format!("CwAnswer(A({}, {}, {}) = {}, {}, {})", self.n, self.d, self.w, self.value, self.exactness, self.method)
    }
}

impl From<CwAnswer> for PyCwAnswer {
    fn from(a: CwAnswer) -> Self {
        PyCwAnswer {
            n: a.query.n,
            d: a.query.d,
            w: a.query.w,
            value: a.value,
            exactness: a.exactness.to_string(),
            method: a.method.to_string(),
            witness: a.witness.map(|f| f.supports().to_vec()),
        }
    }
}

#[pyclass(name = "RatePoint", frozen)]
struct PyRatePoint {
    #[pyo3(get)]
    delta: f64,
    #[pyo3(get)]
    q: u32,
    #[pyo3(get)]
    value: f64,
    #[pyo3(get)]
    sigma_opt: f64,
    #[pyo3(get)]
    omega_opt: f64,
}

#[pymethods]
impl PyRatePoint {
    fn __repr__(&self) -> String {
        format!(
            "RatePoint(q={}, delta={}, value={}, sigma={}, omega={})",
            self.q, self.delta, self.value, self.sigma_opt, self.omega_opt
        )
    }
}

#[pyfunction]
fn lcs(x: Vec<u32>, y: Vec<u32>, q: u32) -> PyResult<usize> {
    levenshtein::lcs(&word(x, q)?, &word(y, q)?).map_err(err)
}

#[pyfunction]
fn levenshtein_distance(x: Vec<u32>, y: Vec<u32>, q: u32) -> PyResult<usize> {
    levenshtein::levenshtein_distance(&word(x, q)?, &word(y, q)?).map_err(err)
}

#[pyfunction]
fn insertion_ball_size(q: u32, n: usize, t: usize) -> BigUint {
    levenshtein::insertion_ball_size(q, n, t)
}

/// Members of the ball of `s` insertions and `t` deletions around `z`.
#[pyfunction]
fn fixed_radius_ball(z: Vec<u32>, q: u32, s: usize, t: usize) -> PyResult<Vec<Vec<u32>>> {
    let ball = levenshtein::fixed_radius_ball_with_limits(&word(z, q)?, s, t, &Limits::from_env()).map_err(err)?;
    Ok(ball.into_iter().map(|w| w.symbols().to_vec()).collect())
}

#[pyfunction]
fn min_levenshtein_distance(words: Vec<Vec<u32>>, q: u32) -> PyResult<Option<usize>> {
    let n = words.first().map_or(0, Vec::len);
    let words = words.into_iter().map(|w| word(w, q)).collect::<PyResult<Vec<_>>>()?;
    Ok(levenshtein::min_levenshtein_distance(&Code::new(q, n, words).map_err(err)?))
}

#[pyfunction]
#[pyo3(signature = (n, d, w, mode = "exact"))]
fn constant_weight(n: usize, d: usize, w: usize, mode: &str) -> PyResult<PyCwAnswer> {
    let query = CwQuery::new(n, d, w).map_err(err)?;
    let mut solver = CwSolver::new(Limits::from_env());
    let answer = match mode {
        "exact" => solver.exact(query).map_err(err)?,
        "upper" => solver.upper(query),
        other => return Err(PyValueError::new_err(format!("mode must be 'exact' or 'upper', got {other:?}"))),
    };
    Ok(answer.into())
}

#[pyfunction]
fn johnson_type_list_bound(q: u32, n: usize, d: usize, s: usize, t: usize) -> PyResult<PyBoundValue> {
    let b = bounds::johnson_type_list_bound(params(q, n, d)?, ListParams::new(s, t)).map_err(err)?;
    Ok((&b).into())
}

#[pyfunction]
#[pyo3(signature = (q, n, d, s, t, mode = "exact"))]
fn constant_weight_list_bound(q: u32, n: usize, d: usize, s: usize, t: usize, mode: &str) -> PyResult<PyBoundValue> {
    let mut solver = CwSolver::new(Limits::from_env());
    let b = bounds::constant_weight_list_bound(params(q, n, d)?, ListParams::new(s, t), self::mode(mode)?, &mut solver)
        .map_err(err)?;
    Ok((&b).into())
}

#[pyfunction]
fn elias_type_bound(q: u32, n: usize, d: usize, t: usize) -> PyResult<PyBoundValue> {
    Ok((&bounds::elias_type_bound(params(q, n, d)?, t)).into())
}

#[pyfunction]
#[pyo3(signature = (q, n, d, s, t, mode = "exact"))]
fn constant_weight_elias_bound(q: u32, n: usize, d: usize, s: usize, t: usize, mode: &str) -> PyResult<PyBoundValue> {
    let mut solver = CwSolver::new(Limits::from_env());
    let b = bounds::constant_weight_elias_bound(params(q, n, d)?, ListParams::new(s, t), self::mode(mode)?, &mut solver)
        .map_err(err)?;
    Ok((&b).into())
}

#[pyfunction]
fn shortened_sphere_packing_bound(q: u32, n: usize, d: usize, s: usize, t: usize) -> PyResult<PyBoundValue> {
    Ok((&bounds::shortened_sphere_packing_bound(params(q, n, d)?, ListParams::new(s, t))).into())
}

/// Smallest code-size bound over `s <= s_max`, `t <= t_max` (defaults:
/// every valid `s`, `t <= n`).
#[pyfunction]
#[pyo3(signature = (q, n, d, s_max = None, t_max = None, mode = "exact"))]
fn best_bound(q: u32, n: usize, d: usize, s_max: Option<usize>, t_max: Option<usize>, mode: &str) -> PyResult<PyBoundValue> {
    let p = params(q, n, d)?;
    let mut solver = CwSolver::new(Limits::from_env());
    let best = bounds::best_bound(p, s_max.unwrap_or(p.max_insertions()), t_max.unwrap_or(n), self::mode(mode)?, &mut solver);
    Ok((&best.bound).into())
}

#[pyfunction]
fn q_ary_entropy(q: u32, x: f64) -> PyResult<f64> {
    asymptotics::q_ary_entropy(q, x).map_err(err)
}

#[pyfunction]
fn rlp(delta: f64, omega: f64) -> f64 {
    asymptotics::rlp(delta, omega)
}

#[pyfunction]
fn elias_rate_bound(q: u32, delta: f64) -> f64 {
    asymptotics::elias_rate_bound(q, delta)
}

#[pyfunction]
fn lp_objective(q: u32, delta: f64, sigma: f64, omega: f64) -> f64 {
    asymptotics::lp_objective(q, delta, sigma, omega)
}

#[pyfunction]
#[pyo3(signature = (q, delta, grid = 200))]
fn lp_rate_bound(q: u32, delta: f64, grid: usize) -> PyResult<PyRatePoint> {
    let cfg = OptimizerConfig { grid, ..OptimizerConfig::default() };
    let p = asymptotics::lp_rate_bound(q, delta, &cfg).map_err(err)?;
    Ok(PyRatePoint { delta: p.delta, q: p.q, value: p.value, sigma_opt: p.sigma_opt, omega_opt: p.omega_opt })
}

#[pyfunction]
fn entropy_slope_check(q: u32, delta: f64) -> PyResult<(f64, f64)> {
    asymptotics::entropy_slope_check(q, delta).map_err(err)
}

/// Builds the tight instance and re-checks it. Returns
/// `(center, codewords, [(check, passed, detail), ...])`.
#[pyfunction]
#[allow(clippy::type_complexity)]
fn build_tightness_instance(
    q: u32,
    n: usize,
    d: usize,
    s: usize,
    t: usize,
) -> PyResult<(Vec<u32>, Vec<Vec<u32>>, Vec<(String, bool, String)>)> {
    let mut solver = CwSolver::new(Limits::from_env());
    let inst = constructions::build_tightness_instance(params(q, n, d)?, ListParams::new(s, t), &mut solver).map_err(err)?;
    let report = constructions::verify_tightness_instance(&inst, &mut solver);
    Ok((
        inst.center.symbols().to_vec(),
        inst.code.words().iter().map(|w| w.symbols().to_vec()).collect(),
        report.checks.into_iter().map(|c| (c.name, c.passed, c.detail)).collect(),
    ))
}

/// Largest code with minimum distance `d` and a witness, by exhaustive
/// search. Returns `(value, exact, codewords)`.
#[pyfunction]
fn max_indel_code(q: u32, n: usize, d: usize) -> PyResult<(usize, bool, Vec<Vec<u32>>)> {
    let r = oracle::max_indel_code_exact(params(q, n, d)?, &Limits::from_env()).map_err(err)?;
    Ok((r.value, r.exact, r.witness.words().iter().map(|w| w.symbols().to_vec()).collect()))
}

#[pymodule]
#[pyo3(name = "indel_bounds")]
pub fn indel_bounds_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBoundValue>()?;
    m.add_class::<PyCwAnswer>()?;
    m.add_class::<PyRatePoint>()?;
    m.add_function(wrap_pyfunction!(lcs, m)?)?;
    m.add_function(wrap_pyfunction!(levenshtein_distance, m)?)?;
    m.add_function(wrap_pyfunction!(insertion_ball_size, m)?)?;
    m.add_function(wrap_pyfunction!(fixed_radius_ball, m)?)?;
    m.add_function(wrap_pyfunction!(min_levenshtein_distance, m)?)?;
    m.add_function(wrap_pyfunction!(constant_weight, m)?)?;
    m.add_function(wrap_pyfunction!(johnson_type_list_bound, m)?)?;
    m.add_function(wrap_pyfunction!(constant_weight_list_bound, m)?)?;
    m.add_function(wrap_pyfunction!(elias_type_bound, m)?)?;
    m.add_function(wrap_pyfunction!(constant_weight_elias_bound, m)?)?;
    m.add_function(wrap_pyfunction!(shortened_sphere_packing_bound, m)?)?;
    m.add_function(wrap_pyfunction!(best_bound, m)?)?;
    m.add_function(wrap_pyfunction!(q_ary_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(rlp, m)?)?;
    m.add_function(wrap_pyfunction!(elias_rate_bound, m)?)?;
    m.add_function(wrap_pyfunction!(lp_objective, m)?)?;
    m.add_function(wrap_pyfunction!(lp_rate_bound, m)?)?;
    m.add_function(wrap_pyfunction!(entropy_slope_check, m)?)?;
    m.add_function(wrap_pyfunction!(build_tightness_instance, m)?)?;
    m.add_function(wrap_pyfunction!(max_indel_code, m)?)?;
    Ok(())
}

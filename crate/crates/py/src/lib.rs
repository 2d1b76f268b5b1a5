//! Python bindings for the splinemerge curve-fitting library.
//!
//! Exposes point chains, fit configuration, and the fitting entry points
//! (full fits, dominant-point approximation, fraction sweeps). Build with
//! `cargo build -p splinemerge-py` and import the cdylib as
//! `splinemerge_py`; see python/smoke_test.py for a worked example.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use splinemerge as core;

fn to_py_err(err: core::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

/// An ordered chain of points in R^d. Order is significant; all points
/// share one dimension and must be finite.
#[pyclass(name = "PointChain", frozen)]
struct PyPointChain {
    inner: core::PointChain,
}

#[pymethods]
impl PyPointChain {
    #[new]
    fn new(points: Vec<Vec<f64>>) -> PyResult<Self> {
        Ok(PyPointChain {
            inner: core::PointChain::from_rows(points).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn points(&self) -> Vec<Vec<f64>> {
        self.inner
            .points()
            .iter()
            .map(|p| p.coords().to_vec())
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "PointChain({} points, dim {})",
            self.inner.len(),
            self.inner.dim()
        )
    }
}

/// Fit configuration; all fields optional with library defaults.
#[pyclass(name = "FitConfig", frozen)]
struct PyFitConfig {
    inner: core::FitConfig,
}

#[pymethods]
impl PyFitConfig {
    #[new]
    #[pyo3(signature = (tension=0.5, independent_axis=0, dominant_fraction=1.0, samples_per_segment=32, bezier_exact_knots=false))]
    fn new(
        tension: f64,
        independent_axis: usize,
        dominant_fraction: f64,
        samples_per_segment: usize,
        bezier_exact_knots: bool,
    ) -> PyResult<Self> {
        let inner = core::FitConfig {
            tension: core::Tension::new(tension).map_err(to_py_err)?,
            independent_axis,
            dominant_fraction,
            samples_per_segment,
            bezier_exact_knots,
        };
        inner.validate().map_err(to_py_err)?;
        Ok(PyFitConfig { inner })
    }

    #[getter]
    fn tension(&self) -> f64 {
        self.inner.tension.value()
    }

    #[getter]
    fn independent_axis(&self) -> usize {
        self.inner.independent_axis
    }

    #[getter]
    fn dominant_fraction(&self) -> f64 {
        self.inner.dominant_fraction
    }

    #[getter]
    fn samples_per_segment(&self) -> usize {
        self.inner.samples_per_segment
    }

    #[getter]
    fn bezier_exact_knots(&self) -> bool {
        self.inner.bezier_exact_knots
    }
}

fn config_or_default(config: Option<&PyFitConfig>) -> core::FitConfig {
    config.map(|c| c.inner).unwrap_or_default()
}

/// A finished fit: the piecewise Bezier, the B-spline built on its control
/// points, and (for approximations) the dominant selection and its error.
#[pyclass(name = "FitResult", frozen)]
struct PyFitResult {
    inner: core::FitResult,
    config: core::FitConfig,
}

#[pymethods]
impl PyFitResult {
    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Square error of the dominant approximation, if one ran.
    #[getter]
    fn error(&self) -> Option<f64> {
        self.inner.error
    }

    /// Chain indices kept as dominant points, if an approximation ran.
    #[getter]
    fn selection(&self) -> Option<Vec<usize>> {
        self.inner
            .selection
            .as_ref()
            .map(|s| s.indices().to_vec())
    }

    #[getter]
    fn gap_errors(&self) -> Option<Vec<f64>> {
        self.inner.gap_errors.clone()
    }

    #[getter]
    fn knots(&self) -> Vec<f64> {
        self.inner.curve.knots().as_slice().to_vec()
    }

    /// B-spline control points (piecewise controls with junctions deduplicated).
    fn bspline_controls(&self) -> Vec<Vec<f64>> {
        self.inner
            .curve
            .controls()
            .iter()
            .map(|p| p.coords().to_vec())
            .collect()
    }

    /// Control points per cubic Bezier piece.
    fn bezier_controls(&self) -> Vec<Vec<Vec<f64>>> {
        self.inner
            .piecewise
            .segments()
            .iter()
            .map(|seg| seg.controls().iter().map(|p| p.coords().to_vec()).collect())
            .collect()
    }

    /// Parameter domain of the B-spline curve.
    fn domain(&self) -> (f64, f64) {
        self.inner.curve.domain()
    }

    /// Evaluates the B-spline at a parameter inside its domain.
    fn eval(&self, u: f64) -> PyResult<Vec<f64>> {
        Ok(self
            .inner
            .curve
            .eval(u)
            .map_err(to_py_err)?
            .coords()
            .to_vec())
    }

    /// Evaluates the piecewise Bezier at a global parameter in [0, pieces].
    fn eval_piecewise(&self, t: f64) -> PyResult<Vec<f64>> {
        Ok(self
            .inner
            .piecewise
            .eval(t)
            .map_err(to_py_err)?
            .coords()
            .to_vec())
    }

    /// Uniform B-spline samples as (parameter, point) pairs.
    #[pyo3(signature = (per_segment=None))]
    fn samples(&self, per_segment: Option<usize>) -> PyResult<Vec<(f64, Vec<f64>)>> {
        let per = per_segment.unwrap_or(self.config.samples_per_segment);
        Ok(self
            .inner
            .curve
            .sample(per)
            .map_err(to_py_err)?
            .into_iter()
            .map(|(u, p)| (u, p.coords().to_vec()))
            .collect())
    }

    /// Uniform piecewise-Bezier samples; integer parameters land on the
    /// (dominant) data points.
    #[pyo3(signature = (per_segment=None))]
    fn piecewise_samples(&self, per_segment: Option<usize>) -> PyResult<Vec<(f64, Vec<f64>)>> {
        let per = per_segment.unwrap_or(self.config.samples_per_segment);
        Ok(self
            .inner
            .piecewise
            .sample(per)
            .map_err(to_py_err)?
            .into_iter()
            .map(|(u, p)| (u, p.coords().to_vec()))
            .collect())
    }

    /// Samples of the interpolating cardinal spline.
    fn cardinal_samples(&self) -> Vec<Vec<f64>> {
        self.inner
            .cardinal_samples
            .iter()
            .map(|p| p.coords().to_vec())
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "FitResult(dim {}, {} pieces, error {:?})",
            self.inner.dim(),
            self.inner.piecewise.segments().len(),
            self.inner.error
        )
    }
}

fn wrap(result: core::FitResult, config: core::FitConfig) -> PyFitResult {
    PyFitResult {
        inner: result,
        config,
    }
}

/// Fits the chain: planar pipeline for 2D, plane-merge pipeline otherwise.
#[pyfunction]
#[pyo3(signature = (chain, config=None))]
fn fit(chain: &PyPointChain, config: Option<&PyFitConfig>) -> PyResult<PyFitResult> {
    let cfg = config_or_default(config);
    Ok(wrap(core::fit(&chain.inner, &cfg).map_err(to_py_err)?, cfg))
}

/// Planar fit (chains of dimension 2).
#[pyfunction]
#[pyo3(signature = (chain, config=None))]
fn fc2(chain: &PyPointChain, config: Option<&PyFitConfig>) -> PyResult<PyFitResult> {
    let cfg = config_or_default(config);
    Ok(wrap(core::fc2(&chain.inner, &cfg).map_err(to_py_err)?, cfg))
}

/// Space fit (dimension >= 3) via per-plane fits and control-point merging.
#[pyfunction]
#[pyo3(signature = (chain, config=None))]
fn fcn(chain: &PyPointChain, config: Option<&PyFitConfig>) -> PyResult<PyFitResult> {
    let cfg = config_or_default(config);
    Ok(wrap(core::fcn(&chain.inner, &cfg).map_err(to_py_err)?, cfg))
}

/// Approximates with a dominant subset of round(fraction * len) points.
#[pyfunction]
#[pyo3(signature = (chain, fraction, config=None))]
fn approximate(
    chain: &PyPointChain,
    fraction: f64,
    config: Option<&PyFitConfig>,
) -> PyResult<PyFitResult> {
    let cfg = core::FitConfig {
        dominant_fraction: fraction,
        ..config_or_default(config)
    };
    Ok(wrap(
        core::approximate_with_fraction(&chain.inner, &cfg).map_err(to_py_err)?,
        cfg,
    ))
}

/// Runs the approximation per fraction; returns (fraction, result) pairs.
#[pyfunction]
#[pyo3(signature = (chain, fractions, config=None))]
fn sweep(
    chain: &PyPointChain,
    fractions: Vec<f64>,
    config: Option<&PyFitConfig>,
) -> PyResult<Vec<(f64, PyFitResult)>> {
    let cfg = config_or_default(config);
    Ok(core::sweep(&chain.inner, &fractions, &cfg)
        .map_err(to_py_err)?
        .into_iter()
        .map(|(f, r)| (f, wrap(r, cfg)))
        .collect())
}

/// Exterior angle at `cur` in [0, pi]; 0 for collinear, pi for a reversal.
#[pyfunction]
fn turn_angle(prev: Vec<f64>, cur: Vec<f64>, next: Vec<f64>) -> PyResult<f64> {
    core::turn_angle(
        &core::Point::new(prev),
        &core::Point::new(cur),
        &core::Point::new(next),
    )
    .map_err(to_py_err)
}

/// Loads a chain from a CSV or JSON point file.
#[pyfunction]
#[pyo3(signature = (path, format="csv"))]
fn load_points(path: &str, format: &str) -> PyResult<PyPointChain> {
    let fmt = match format {
        "csv" => core::PointFormat::Csv,
        "json" => core::PointFormat::Json,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown format {other:?}, expected \"csv\" or \"json\""
            )))
        }
    };
    Ok(PyPointChain {
        inner: core::load_points(std::path::Path::new(path), fmt).map_err(to_py_err)?,
    })
}

#[pymodule]
fn splinemerge_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPointChain>()?;
    m.add_class::<PyFitConfig>()?;
    m.add_class::<PyFitResult>()?;
    m.add_function(wrap_pyfunction!(fit, m)?)?;
    m.add_function(wrap_pyfunction!(fc2, m)?)?;
    m.add_function(wrap_pyfunction!(fcn, m)?)?;
    m.add_function(wrap_pyfunction!(approximate, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(turn_angle, m)?)?;
    m.add_function(wrap_pyfunction!(load_points, m)?)?;
    Ok(())
}

//! Python bindings: the same construction, driven from Python.
//!
//! Build the importable module with
//! `cargo build -p conchoid-py --features extension-module`, then copy
//! `target/debug/libconchoid_py.so` to `conchoid_py.so` somewhere on
//! `sys.path` (python/smoke_test.py automates this).
//!
//! Points cross the boundary as `(x, y)` tuples. Construction errors
//! (degenerate segments, bad expressions, an all-invalid sample set)
//! raise ValueError; passing the wrong kind of object raises TypeError.

use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;

use conchoid::{
    preset_config, sample_gpc, write_csv, write_json, write_svg, BaseCurve, CircularArcCurve,
    GpcConfig, GpcResult, GpcSample, LineSegmentCurve, OffsetExpr, ParametricCurve, PlotSpec,
    Point2, TableColumn, TableSpec, PRESETS,
};

fn value_error(e: conchoid::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn point(pair: (f64, f64)) -> Point2 {
    Point2::new(pair.0, pair.1)
}

fn pair(p: Point2) -> (f64, f64) {
    (p.x, p.y)
}

/// Offset function d = f(l) over arc length l, using the CLI expression
/// grammar: + - * / ^, sin cos tan ln log exp sqrt abs, pi, e, and the
/// variable l.
#[pyclass(skip_from_py_object)]
#[derive(Debug, Clone)]
pub struct OffsetFunction {
    inner: OffsetExpr,
}

#[pymethods]
impl OffsetFunction {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(OffsetFunction {
            inner: OffsetExpr::parse(text).map_err(value_error)?,
        })
    }

    /// Evaluate f(l). Never raises: out-of-domain inputs yield NaN or ±inf.
    fn __call__(&self, l: f64) -> f64 {
        self.inner.evaluate(l)
    }

    /// Canonical fully parenthesized form; reparses to the same function.
    #[getter]
    fn text(&self) -> String {
        self.inner.render()
    }

    /// True when the expression reads the arc-length variable l.
    fn uses_arc_length(&self) -> bool {
        self.inner.contains_var()
    }

    fn __repr__(&self) -> String {
        format!("OffsetFunction({:?})", self.inner.render())
    }
}

/// Directed line segment from n to s.
#[pyclass(skip_from_py_object)]
#[derive(Debug, Clone)]
pub struct LineSegment {
    inner: LineSegmentCurve,
}

#[pymethods]
impl LineSegment {
    #[new]
    fn new(n: (f64, f64), s: (f64, f64)) -> PyResult<Self> {
        Ok(LineSegment {
            inner: LineSegmentCurve::new(point(n), point(s)).map_err(value_error)?,
        })
    }

    /// Curve point at parameter k in [0, 1].
    fn point_at(&self, k: f64) -> PyResult<(f64, f64)> {
        self.inner.point_at(k).map(pair).map_err(value_error)
    }

    /// Arc length from the start to the point at k.
    fn arc_length_at(&self, k: f64) -> PyResult<f64> {
        self.inner.arc_length_at(k).map_err(value_error)
    }

    #[getter]
    fn length(&self) -> f64 {
        self.inner.length()
    }

    fn __repr__(&self) -> String {
        let (n, s) = (self.inner.start(), self.inner.end());
        format!("LineSegment(({}, {}), ({}, {}))", n.x, n.y, s.x, s.y)
    }
}

/// Circular arc around a centre, between two angles in radians. The sweep
/// may be negative or wider than a full turn.
#[pyclass(skip_from_py_object)]
#[derive(Debug, Clone)]
pub struct CircularArc {
    inner: CircularArcCurve,
}

#[pymethods]
impl CircularArc {
    #[new]
    fn new(center: (f64, f64), radius: f64, theta_start: f64, theta_end: f64) -> PyResult<Self> {
        Ok(CircularArc {
            inner: CircularArcCurve::new(point(center), radius, theta_start, theta_end)
                .map_err(value_error)?,
        })
    }

    /// Curve point at parameter k in [0, 1].
    fn point_at(&self, k: f64) -> PyResult<(f64, f64)> {
        self.inner.point_at(k).map(pair).map_err(value_error)
    }

    /// Arc length from the start to the point at k.
    fn arc_length_at(&self, k: f64) -> PyResult<f64> {
        self.inner.arc_length_at(k).map_err(value_error)
    }

    #[getter]
    fn length(&self) -> f64 {
        self.inner.length()
    }

    fn __repr__(&self) -> String {
        let c = self.inner.centre();
        format!(
            "CircularArc(({}, {}), {}, {}, {})",
            c.x,
            c.y,
            self.inner.radius(),
            self.inner.theta_n(),
            self.inner.theta_s()
        )
    }
}

/// Base curve given by a Python callable t -> (x, y) on [0, 1]; arc length
/// comes from composite Simpson quadrature over `subdivisions` panels.
///
/// A callback that raises, or returns anything but a pair of floats, is
/// treated as non-finite at that t and surfaces as a ValueError when the
/// curve is evaluated there.
#[pyclass]
#[derive(Debug)]
pub struct Parametric {
    inner: ParametricCurve,
}

#[pymethods]
impl Parametric {
    #[new]
    #[pyo3(signature = (position, subdivisions = 1024))]
    fn new(py: Python<'_>, position: Py<PyAny>, subdivisions: usize) -> PyResult<Self> {
        if !position.bind(py).is_callable() {
            return Err(PyTypeError::new_err("position must be callable"));
        }
        let inner = ParametricCurve::new(
            move |t| {
                Python::attach(|py| {
                    position
                        .bind(py)
                        .call1((t,))
                        .and_then(|result| result.extract::<(f64, f64)>())
                        .unwrap_or((f64::NAN, f64::NAN))
                })
            },
            subdivisions,
        )
        .map_err(value_error)?;
        Ok(Parametric { inner })
    }

    /// Curve point at parameter k in [0, 1].
    fn point_at(&self, k: f64) -> PyResult<(f64, f64)> {
        self.inner.point_at(k).map(pair).map_err(value_error)
    }

    /// Quadrature arc length from the start to the point at k.
    fn arc_length_at(&self, k: f64) -> PyResult<f64> {
        self.inner.arc_length_at(k).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!("Parametric(<fn>, {})", self.inner.arclen_subdivisions())
    }
}

/// One grid sample: base point p at parameter k, arc length l, offset d,
/// unit ray u, and the two branch points. Invalid samples carry a reason
/// string and None for the missing geometry.
#[pyclass(skip_from_py_object)]
#[derive(Debug, Clone)]
pub struct Sample {
    inner: GpcSample,
}

#[pymethods]
impl Sample {
    #[getter]
    fn k(&self) -> f64 {
        self.inner.k
    }

    #[getter]
    fn p(&self) -> (f64, f64) {
        pair(self.inner.p)
    }

    #[getter]
    fn l(&self) -> f64 {
        self.inner.l
    }

    #[getter]
    fn d(&self) -> f64 {
        self.inner.d
    }

    #[getter]
    fn u(&self) -> Option<(f64, f64)> {
        self.inner.u.map(|u| (u.dx, u.dy))
    }

    #[getter]
    fn q_inner(&self) -> Option<(f64, f64)> {
        self.inner.q_inner.map(pair)
    }

    #[getter]
    fn q_outer(&self) -> Option<(f64, f64)> {
        self.inner.q_outer.map(pair)
    }

    #[getter]
    fn valid(&self) -> bool {
        self.inner.is_valid()
    }

    #[getter]
    fn reason(&self) -> Option<&'static str> {
        self.inner.reason.map(|r| r.as_str())
    }

    fn __repr__(&self) -> String {
        match self.inner.reason {
            None => format!(
                "Sample(k={}, p={:?}, l={}, d={})",
                self.inner.k,
                pair(self.inner.p),
                self.inner.l,
                self.inner.d
            ),
            Some(reason) => format!("Sample(k={}, invalid: {})", self.inner.k, reason.as_str()),
        }
    }
}

/// Full construction output: every sample in k order plus the invalid count.
#[pyclass]
#[derive(Debug)]
pub struct SampleSet {
    inner: GpcResult,
}

#[pymethods]
impl SampleSet {
    #[getter]
    fn samples(&self) -> Vec<Sample> {
        self.inner
            .samples
            .iter()
            .map(|s| Sample { inner: s.clone() })
            .collect()
    }

    /// Count of invalid samples.
    #[getter]
    fn dropped(&self) -> usize {
        self.inner.dropped
    }

    #[getter]
    fn focus(&self) -> (f64, f64) {
        pair(self.inner.config.focus)
    }

    #[getter]
    fn offset(&self) -> OffsetFunction {
        OffsetFunction {
            inner: self.inner.config.offset.clone(),
        }
    }

    fn __len__(&self) -> usize {
        self.inner.samples.len()
    }

    /// CSV table with all columns, rounded half away from zero.
    #[pyo3(signature = (precision = 3))]
    fn to_csv(&self, precision: u8) -> PyResult<String> {
        let spec = TableSpec::new(precision, TableColumn::ALL.to_vec()).map_err(value_error)?;
        Ok(write_csv(&self.inner, &spec))
    }

    /// SVG plot with the same defaults as the CLI.
    #[pyo3(signature = (width = 800, height = 800, margin = 0.05, rays = false, base = true, focus = true))]
    fn to_svg(
        &self,
        width: u32,
        height: u32,
        margin: f64,
        rays: bool,
        base: bool,
        focus: bool,
    ) -> PyResult<String> {
        let spec = PlotSpec {
            width_px: width,
            height_px: height,
            margin_fraction: margin,
            show_rays: rays,
            show_base: base,
            show_focus: focus,
        };
        write_svg(&self.inner, &spec).map_err(value_error)
    }

    /// JSON document, schema_version 1.
    fn to_json(&self) -> String {
        write_json(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "SampleSet({} samples, {} dropped)",
            self.inner.samples.len(),
            self.inner.dropped
        )
    }
}

fn curve_from_any(curve: &Bound<'_, PyAny>) -> PyResult<BaseCurve> {
    if let Ok(segment) = curve.extract::<PyRef<'_, LineSegment>>() {
        return Ok(segment.inner.into());
    }
    if let Ok(arc) = curve.extract::<PyRef<'_, CircularArc>>() {
        return Ok(arc.inner.into());
    }
    if let Ok(parametric) = curve.extract::<PyRef<'_, Parametric>>() {
        return Ok(parametric.inner.clone().into());
    }
    Err(PyTypeError::new_err(
        "curve must be a LineSegment, CircularArc, or Parametric",
    ))
}

fn offset_from_any(offset: &Bound<'_, PyAny>) -> PyResult<OffsetExpr> {
    if let Ok(function) = offset.extract::<PyRef<'_, OffsetFunction>>() {
        return Ok(function.inner.clone());
    }
    if let Ok(text) = offset.extract::<String>() {
        return OffsetExpr::parse(&text).map_err(value_error);
    }
    Err(PyTypeError::new_err(
        "offset must be an OffsetFunction or a string",
    ))
}

/// Run the construction: m samples of `curve`, each displaced by the offset
/// along the ray from `focus`, producing inner and outer branch points.
///
/// `offset` is an OffsetFunction or an expression string. With
/// drop_invalid=False the first invalid sample raises instead of being
/// marked and kept.
#[pyfunction]
#[pyo3(signature = (focus, curve, offset, m, drop_invalid = true))]
fn sample(
    focus: (f64, f64),
    curve: &Bound<'_, PyAny>,
    offset: &Bound<'_, PyAny>,
    m: usize,
    drop_invalid: bool,
) -> PyResult<SampleSet> {
    let config = GpcConfig::new(
        point(focus),
        curve_from_any(curve)?,
        offset_from_any(offset)?,
        m,
    )
    .map_err(value_error)?
    .with_drop_nonfinite(drop_invalid);
    Ok(SampleSet {
        inner: sample_gpc(config).map_err(value_error)?,
    })
}

/// Sample one of the named example configurations.
#[pyfunction]
fn preset(name: &str) -> PyResult<SampleSet> {
    let config = preset_config(name).map_err(value_error)?;
    Ok(SampleSet {
        inner: sample_gpc(config).map_err(value_error)?,
    })
}

/// Names accepted by preset(), in listing order.
#[pyfunction]
fn preset_names() -> Vec<&'static str> {
    PRESETS.iter().map(|p| p.name).collect()
}

#[pymodule]
fn conchoid_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<OffsetFunction>()?;
    m.add_class::<LineSegment>()?;
    m.add_class::<CircularArc>()?;
    m.add_class::<Parametric>()?;
    m.add_class::<Sample>()?;
    m.add_class::<SampleSet>()?;
    m.add_function(wrap_pyfunction!(sample, m)?)?;
    m.add_function(wrap_pyfunction!(preset, m)?)?;
    m.add_function(wrap_pyfunction!(preset_names, m)?)?;
    Ok(())
}

//! Directed finite base curves: point-at-parameter and arc-length maps.
//!
//! Every curve is traversed by a fraction `k ∈ [0, 1]` running from its start
//! point N (k = 0) to its end point S (k = 1). Arc length is reported as the
//! nonnegative distance travelled along the curve from N, so it is always a
//! valid argument for offset functions such as `ln(l)`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::{Point2, Vec2};

fn check_k(k: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&k) {
        return Err(Error::ParamOutOfRange { k });
    }
    Ok(())
}

fn check_finite_point(p: Point2, name: &'static str) -> Result<()> {
    if !p.is_finite() {
        return Err(Error::NonFiniteInput { name });
    }
    Ok(())
}

/// Directed line segment from `n` to `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineSegmentCurve {
    n: Point2,
    s: Point2,
}

impl LineSegmentCurve {
    pub fn new(n: Point2, s: Point2) -> Result<Self> {
        check_finite_point(n, "segment start")?;
        check_finite_point(s, "segment end")?;
        if n == s {
            return Err(Error::DegenerateSegment);
        }
        Ok(LineSegmentCurve { n, s })
    }

    pub fn start(&self) -> Point2 {
        self.n
    }

    pub fn end(&self) -> Point2 {
        self.s
    }

    /// Total length |s − n|.
    pub fn length(&self) -> f64 {
        (self.s - self.n).norm()
    }

    /// Point n + (s − n)·k.
    pub fn point_at(&self, k: f64) -> Result<Point2> {
        check_k(k)?;
        Ok(self.n + (self.s - self.n) * k)
    }

    /// Arc length from the start, k·|s − n|.
    pub fn arc_length_at(&self, k: f64) -> Result<f64> {
        check_k(k)?;
        Ok(k * self.length())
    }
}

/// Directed circular arc around centre `c` with radius `r`, swept from angle
/// `theta_n` to `theta_s` (radians; `theta_s < theta_n` reverses direction).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircularArcCurve {
    c: Point2,
    r: f64,
    theta_n: f64,
    theta_s: f64,
}

impl CircularArcCurve {
    pub fn new(c: Point2, r: f64, theta_n: f64, theta_s: f64) -> Result<Self> {
        check_finite_point(c, "arc centre")?;
        if !r.is_finite() || r <= 0.0 {
            return Err(Error::InvalidArc {
                reason: format!("radius must be finite and positive, got {r}"),
            });
        }
        if !theta_n.is_finite() || !theta_s.is_finite() {
            return Err(Error::InvalidArc {
                reason: "angles must be finite".to_string(),
            });
        }
        if theta_n == theta_s {
            return Err(Error::InvalidArc {
                reason: "start and end angles coincide".to_string(),
            });
        }
        let total = r * (theta_s - theta_n);
        if !total.is_finite() || total == 0.0 {
            return Err(Error::InvalidArc {
                reason: format!("total arc length r·(θ_S − θ_N) = {total} is not usable"),
            });
        }
        Ok(CircularArcCurve {
            c,
            r,
            theta_n,
            theta_s,
        })
    }

    pub fn centre(&self) -> Point2 {
        self.c
    }

    pub fn radius(&self) -> f64 {
        self.r
    }

    pub fn theta_n(&self) -> f64 {
        self.theta_n
    }

    pub fn theta_s(&self) -> f64 {
        self.theta_s
    }

    /// Unsigned total arc length |r·(θ_S − θ_N)|.
    pub fn length(&self) -> f64 {
        (self.r * (self.theta_s - self.theta_n)).abs()
    }

    /// Point c + r·(cos θ, sin θ) at θ = θ_N + (θ_S − θ_N)·k.
    pub fn point_at(&self, k: f64) -> Result<Point2> {
        check_k(k)?;
        let theta = self.theta_n + (self.theta_s - self.theta_n) * k;
        Ok(self.c + Vec2::new(theta.cos(), theta.sin()) * self.r)
    }

    /// Arc length from the start, |L|·k.
    pub fn arc_length_at(&self, k: f64) -> Result<f64> {
        check_k(k)?;
        Ok(self.length() * k)
    }
}

/// Minimum quadrature resolution accepted for parametric curves.
pub const MIN_ARCLEN_SUBDIVISIONS: usize = 16;

/// A caller-supplied position map `t ∈ [0, 1] → (x, y)` with numerically
/// integrated arc length.
///
/// The position map returns raw components so that misbehaving maps can be
/// detected: any non-finite point on the probed grid surfaces as
/// [`Error::NonFiniteCurve`].
#[derive(Clone)]
pub struct ParametricCurve {
    position: Arc<dyn Fn(f64) -> (f64, f64) + Send + Sync>,
    arclen_subdivisions: usize,
}

impl fmt::Debug for ParametricCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ParametricCurve")
            .field("position", &"<fn>")
            .field("arclen_subdivisions", &self.arclen_subdivisions)
            .finish()
    }
}

impl ParametricCurve {
    pub fn new<F>(position: F, arclen_subdivisions: usize) -> Result<Self>
    where
        F: Fn(f64) -> (f64, f64) + Send + Sync + 'static,
    {
        if arclen_subdivisions < MIN_ARCLEN_SUBDIVISIONS {
            return Err(Error::InvalidConfig {
                reason: format!(
                    "arclen_subdivisions must be at least {MIN_ARCLEN_SUBDIVISIONS}, got {arclen_subdivisions}"
                ),
            });
        }
        Ok(ParametricCurve {
            position: Arc::new(position),
            arclen_subdivisions,
        })
    }

    pub fn arclen_subdivisions(&self) -> usize {
        self.arclen_subdivisions
    }

    fn probe(&self, t: f64) -> Result<Point2> {
        let (x, y) = (self.position)(t);
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::NonFiniteCurve { t });
        }
        Ok(Point2::new(x, y))
    }

    pub fn point_at(&self, k: f64) -> Result<Point2> {
        check_k(k)?;
        self.probe(k)
    }

    /// |dp/dt| at `t`, from second-order finite differences with step
    /// h = 1/(8·arclen_subdivisions). Stencils never leave [0, 1].
    fn speed(&self, t: f64) -> Result<f64> {
        let h = 1.0 / (8.0 * self.arclen_subdivisions as f64);
        let derivative = if t - h < 0.0 {
            let p0 = self.probe(t)?;
            let p1 = self.probe(t + h)?;
            let p2 = self.probe(t + 2.0 * h)?;
            Vec2::new(
                (-3.0 * p0.x + 4.0 * p1.x - p2.x) / (2.0 * h),
                (-3.0 * p0.y + 4.0 * p1.y - p2.y) / (2.0 * h),
            )
        } else if t + h > 1.0 {
            let p0 = self.probe(t)?;
            let p1 = self.probe(t - h)?;
            let p2 = self.probe(t - 2.0 * h)?;
            Vec2::new(
                (3.0 * p0.x - 4.0 * p1.x + p2.x) / (2.0 * h),
                (3.0 * p0.y - 4.0 * p1.y + p2.y) / (2.0 * h),
            )
        } else {
            let ahead = self.probe(t + h)?;
            let behind = self.probe(t - h)?;
            (ahead - behind) * (1.0 / (2.0 * h))
        };
        Ok(derivative.norm())
    }

    /// Cumulative arc length from t = 0 to t = k by composite Simpson
    /// quadrature of the speed over `arclen_subdivisions` uniform panels.
    pub fn arc_length_at(&self, k: f64) -> Result<f64> {
        check_k(k)?;
        if k == 0.0 {
            return Ok(0.0);
        }
        let n = self.arclen_subdivisions;
        let panel = k / n as f64;
        let mut total = 0.0;
        let mut left = self.speed(0.0)?;
        for i in 0..n {
            let a = i as f64 * panel;
            let mid = self.speed(a + 0.5 * panel)?;
            let right = self.speed(if i + 1 == n { k } else { a + panel })?;
            total += panel / 6.0 * (left + 4.0 * mid + right);
            left = right;
        }
        Ok(total)
    }
}

/// Any of the supported base curves.
#[derive(Debug, Clone)]
pub enum BaseCurve {
    Line(LineSegmentCurve),
    Arc(CircularArcCurve),
    Parametric(ParametricCurve),
}

impl BaseCurve {
    pub fn point_at(&self, k: f64) -> Result<Point2> {
        match self {
            BaseCurve::Line(c) => c.point_at(k),
            BaseCurve::Arc(c) => c.point_at(k),
            BaseCurve::Parametric(c) => c.point_at(k),
        }
    }

    pub fn arc_length_at(&self, k: f64) -> Result<f64> {
        match self {
            BaseCurve::Line(c) => c.arc_length_at(k),
            BaseCurve::Arc(c) => c.arc_length_at(k),
            BaseCurve::Parametric(c) => c.arc_length_at(k),
        }
    }

    /// Start point N.
    pub fn start(&self) -> Result<Point2> {
        self.point_at(0.0)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            BaseCurve::Line(_) => "line",
            BaseCurve::Arc(_) => "circular_arc",
            BaseCurve::Parametric(_) => "parametric",
        }
    }
}

impl From<LineSegmentCurve> for BaseCurve {
    fn from(c: LineSegmentCurve) -> Self {
        BaseCurve::Line(c)
    }
}

impl From<CircularArcCurve> for BaseCurve {
    fn from(c: CircularArcCurve) -> Self {
        BaseCurve::Arc(c)
    }
}

impl From<ParametricCurve> for BaseCurve {
    fn from(c: ParametricCurve) -> Self {
        BaseCurve::Parametric(c)
    }
}

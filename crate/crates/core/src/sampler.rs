//! The conchoid construction: sample the base curve, evaluate the offset
//! along arc length, and push each point along its focal ray in both
//! directions.
//!
//! Sampling uses the endpoint-inclusive grid k_i = i/(m−1), i = 0..m−1, so
//! the first sample sits on N (k = 0) and the last on S (k = 1).

use crate::curves::BaseCurve;
use crate::error::{Error, Result};
use crate::expr::OffsetExpr;
use crate::geometry::{branch_points, unit_from_focus, Point2, Vec2};

/// Full description of one construction.
#[derive(Debug, Clone)]
pub struct GpcConfig {
    /// Focus O: all rays pass through it.
    pub focus: Point2,
    /// Directed base curve C, traversed N → S.
    pub curve: BaseCurve,
    /// Offset function d = f(l) of arc length from N.
    pub offset: OffsetExpr,
    /// Sample count, at least 2.
    pub m: usize,
    /// When true (the default), samples with a non-finite offset or a
    /// degenerate ray are marked invalid and skipped downstream; when false,
    /// the first such sample aborts the construction.
    pub drop_nonfinite: bool,
}

impl GpcConfig {
    pub fn new(focus: Point2, curve: BaseCurve, offset: OffsetExpr, m: usize) -> Result<Self> {
        let config = GpcConfig {
            focus,
            curve,
            offset,
            m,
            drop_nonfinite: true,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn with_drop_nonfinite(mut self, drop_nonfinite: bool) -> Self {
        self.drop_nonfinite = drop_nonfinite;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !self.focus.is_finite() {
            return Err(Error::NonFiniteInput { name: "focus" });
        }
        if self.m < 2 {
            return Err(Error::InvalidConfig {
                reason: format!("m must be at least 2, got {}", self.m),
            });
        }
        Ok(())
    }
}

/// Why a sample carries no branch points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvalidReason {
    /// f(l) evaluated to NaN or ±∞.
    NonFiniteOffset,
    /// The curve point coincides with the focus; the ray direction is undefined.
    DegenerateRay,
}

impl InvalidReason {
    pub fn as_str(self) -> &'static str {
        match self {
            InvalidReason::NonFiniteOffset => "non-finite offset",
            InvalidReason::DegenerateRay => "degenerate ray",
        }
    }
}

/// One grid point of the construction. Valid samples have every optional
/// field populated; invalid ones record why instead.
#[derive(Debug, Clone, PartialEq)]
pub struct GpcSample {
    pub k: f64,
    /// Base-curve point P_i.
    pub p: Point2,
    /// Arc length from N to P_i.
    pub l: f64,
    /// Offset d_i = f(l_i); may be non-finite, in which case the sample is invalid.
    pub d: f64,
    /// Unit ray direction from the focus; absent when the ray is degenerate.
    pub u: Option<Vec2>,
    /// Inner branch point Q_i = p − d·u.
    pub q_inner: Option<Point2>,
    /// Outer branch point Q'_i = p + d·u.
    pub q_outer: Option<Point2>,
    pub reason: Option<InvalidReason>,
}

impl GpcSample {
    pub fn is_valid(&self) -> bool {
        self.reason.is_none()
    }
}

/// Result of [`sample_gpc`]: the config echo plus all m samples in k order.
#[derive(Debug, Clone)]
pub struct GpcResult {
    pub config: GpcConfig,
    pub samples: Vec<GpcSample>,
    /// Count of invalid samples.
    pub dropped: usize,
}

impl GpcResult {
    pub fn valid_samples(&self) -> impl Iterator<Item = &GpcSample> {
        self.samples.iter().filter(|s| s.is_valid())
    }
}

/// Run the construction over the k grid.
///
/// Invalid samples (non-finite d, ray through the focus) stay in the output
/// marked invalid unless `drop_nonfinite` is false, in which case the first
/// one is an error. Only a result with no valid samples at all is rejected.
pub fn sample_gpc(config: GpcConfig) -> Result<GpcResult> {
    config.validate()?;
    let m = config.m;
    let mut samples = Vec::with_capacity(m);
    let mut dropped = 0usize;
    for i in 0..m {
        let k = i as f64 / (m - 1) as f64;
        let p = config.curve.point_at(k)?;
        let l = config.curve.arc_length_at(k)?;
        let d = if l.is_finite() {
            config.offset.evaluate(l)
        } else {
            f64::NAN
        };

        let u = match unit_from_focus(config.focus, p) {
            Ok(u) => Some(u),
            Err(Error::DegenerateRay { .. }) => None,
            Err(other) => return Err(other),
        };

        let reason = if u.is_none() {
            Some(InvalidReason::DegenerateRay)
        } else if !d.is_finite() {
            Some(InvalidReason::NonFiniteOffset)
        } else {
            None
        };

        if let Some(reason) = reason {
            if !config.drop_nonfinite {
                return Err(Error::InvalidSample {
                    index: i,
                    k,
                    reason: reason.as_str().to_string(),
                });
            }
            dropped += 1;
            samples.push(GpcSample {
                k,
                p,
                l,
                d,
                u,
                q_inner: None,
                q_outer: None,
                reason: Some(reason),
            });
            continue;
        }

        let (q_inner, q_outer) = branch_points(p, u.unwrap(), d)?;
        samples.push(GpcSample {
            k,
            p,
            l,
            d,
            u,
            q_inner: Some(q_inner),
            q_outer: Some(q_outer),
            reason: None,
        });
    }
    if dropped == m {
        return Err(Error::AllSamplesInvalid { total: m });
    }
    Ok(GpcResult {
        config,
        samples,
        dropped,
    })
}

/// Plot-ready point sequences. Each branch is a list of sub-polylines:
/// invalid samples split the sequence so no segment bridges a singularity.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchPolylines {
    pub inner: Vec<Vec<Point2>>,
    pub outer: Vec<Vec<Point2>>,
    pub base: Vec<Vec<Point2>>,
}

/// Extract polylines from valid samples, in k order, splitting at gaps.
pub fn branch_polylines(result: &GpcResult) -> Result<BranchPolylines> {
    let mut inner = vec![Vec::new()];
    let mut outer = vec![Vec::new()];
    let mut base = vec![Vec::new()];
    let mut any_valid = false;
    for sample in &result.samples {
        if sample.is_valid() {
            any_valid = true;
            inner.last_mut().unwrap().push(sample.q_inner.unwrap());
            outer.last_mut().unwrap().push(sample.q_outer.unwrap());
            base.last_mut().unwrap().push(sample.p);
        } else {
            for runs in [&mut inner, &mut outer, &mut base] {
                if !runs.last().unwrap().is_empty() {
                    runs.push(Vec::new());
                }
            }
        }
    }
    if !any_valid {
        return Err(Error::AllSamplesInvalid {
            total: result.samples.len(),
        });
    }
    for runs in [&mut inner, &mut outer, &mut base] {
        runs.retain(|run| !run.is_empty());
    }
    Ok(BranchPolylines { inner, outer, base })
}

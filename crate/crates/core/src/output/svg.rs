//! SVG plots: branch and base polylines, optional focus marker and rays.
//!
//! Math coordinates are used directly inside a scale(1,-1) group so the
//! y axis points up; the viewBox is the padded bounding box of everything
//! drawn, and the default preserveAspectRatio keeps the aspect ratio equal.

use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::sampler::{branch_polylines, GpcResult};

#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    pub width_px: u32,
    pub height_px: u32,
    /// Padding around the data bounding box, as a fraction of its extent.
    pub margin_fraction: f64,
    /// Draw one focus-to-curve line per valid sample.
    pub show_rays: bool,
    pub show_base: bool,
    pub show_focus: bool,
}

impl Default for PlotSpec {
    fn default() -> Self {
        PlotSpec {
            width_px: 800,
            height_px: 800,
            margin_fraction: 0.05,
            show_rays: false,
            show_base: true,
            show_focus: true,
        }
    }
}

impl PlotSpec {
    pub fn validate(&self) -> Result<()> {
        if self.width_px == 0 || self.height_px == 0 {
            return Err(Error::InvalidPlotSpec {
                reason: "width and height must be positive".to_string(),
            });
        }
        if !(0.0..=0.45).contains(&self.margin_fraction) {
            return Err(Error::InvalidPlotSpec {
                reason: format!(
                    "margin_fraction must lie in [0, 0.45], got {}",
                    self.margin_fraction
                ),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
struct Bounds {
    min_x: f64,
    min_y: f64,
    max_x: f64,
    max_y: f64,
}

impl Bounds {
    fn new() -> Self {
        Bounds {
            min_x: f64::INFINITY,
            min_y: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            max_y: f64::NEG_INFINITY,
        }
    }

    fn include(&mut self, p: Point2) {
        self.min_x = self.min_x.min(p.x);
        self.min_y = self.min_y.min(p.y);
        self.max_x = self.max_x.max(p.x);
        self.max_y = self.max_y.max(p.y);
    }

    fn padded(mut self, fraction: f64) -> Self {
        let pad_x = pad(self.max_x - self.min_x, fraction);
        let pad_y = pad(self.max_y - self.min_y, fraction);
        self.min_x -= pad_x;
        self.max_x += pad_x;
        self.min_y -= pad_y;
        self.max_y += pad_y;
        self
    }
}

/// Degenerate extents (single point, horizontal line) get a unit pad so the
/// viewBox never collapses.
fn pad(extent: f64, fraction: f64) -> f64 {
    if extent > 0.0 {
        extent * fraction
    } else {
        1.0
    }
}

fn points_attr(run: &[Point2]) -> String {
    let mut out = String::new();
    for (i, p) in run.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&format!("{},{}", p.x, p.y));
    }
    out
}

/// Render the valid samples as an SVG document.
pub fn write_svg(result: &GpcResult, spec: &PlotSpec) -> Result<String> {
    spec.validate()?;
    let polylines = branch_polylines(result)?;

    let mut bounds = Bounds::new();
    for runs in [&polylines.inner, &polylines.outer] {
        for run in runs {
            for p in run {
                bounds.include(*p);
            }
        }
    }
    if spec.show_base {
        for run in &polylines.base {
            for p in run {
                bounds.include(*p);
            }
        }
    }
    if spec.show_focus || spec.show_rays {
        bounds.include(result.config.focus);
    }
    if spec.show_rays {
        for sample in result.valid_samples() {
            bounds.include(sample.p);
        }
    }
    let bounds = bounds.padded(spec.margin_fraction);
    let width = bounds.max_x - bounds.min_x;
    let height = bounds.max_y - bounds.min_y;
    let extent = width.max(height);
    let stroke = extent * 0.004;
    let cross = extent * 0.02;

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">\n",
        spec.width_px, spec.height_px, bounds.min_x, -bounds.max_y, width, height
    ));
    svg.push_str(&format!(
        "<style>\n\
         polyline, line {{ fill: none; stroke-width: {stroke}; stroke-linecap: round; stroke-linejoin: round; }}\n\
         .inner {{ stroke: #c0392b; }}\n\
         .outer {{ stroke: #2471a3; }}\n\
         .base {{ stroke: #1e8449; }}\n\
         .focus {{ stroke: #111111; }}\n\
         .ray {{ stroke: #9aa0a6; stroke-opacity: 0.6; }}\n\
         </style>\n"
    ));
    svg.push_str("<g transform=\"scale(1,-1)\">\n");

    if spec.show_rays {
        let o = result.config.focus;
        for sample in result.valid_samples() {
            svg.push_str(&format!(
                "<line class=\"ray\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                o.x, o.y, sample.p.x, sample.p.y
            ));
        }
    }
    if spec.show_base {
        for run in &polylines.base {
            svg.push_str(&format!(
                "<polyline class=\"base\" points=\"{}\"/>\n",
                points_attr(run)
            ));
        }
    }
    for run in &polylines.inner {
        svg.push_str(&format!(
            "<polyline class=\"inner\" points=\"{}\"/>\n",
            points_attr(run)
        ));
    }
    for run in &polylines.outer {
        svg.push_str(&format!(
            "<polyline class=\"outer\" points=\"{}\"/>\n",
            points_attr(run)
        ));
    }
    if spec.show_focus {
        let o = result.config.focus;
        svg.push_str(&format!(
            "<line class=\"focus\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
            o.x - cross,
            o.y,
            o.x + cross,
            o.y
        ));
        svg.push_str(&format!(
            "<line class=\"focus\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
            o.x,
            o.y - cross,
            o.x,
            o.y + cross
        ));
    }
    svg.push_str("</g>\n</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::LineSegmentCurve;
    use crate::expr::OffsetExpr;
    use crate::sampler::{sample_gpc, GpcConfig};

    fn nicomedes_result() -> GpcResult {
        sample_gpc(
            GpcConfig::new(
                Point2::new(0.0, 0.0),
                LineSegmentCurve::new(Point2::new(-3.0, 1.0), Point2::new(3.0, 1.0))
                    .unwrap()
                    .into(),
                OffsetExpr::parse("2").unwrap(),
                18,
            )
            .unwrap(),
        )
        .unwrap()
    }

    fn count(haystack: &str, needle: &str) -> usize {
        haystack.matches(needle).count()
    }

    #[test]
    fn element_counts_for_clean_result() {
        let svg = write_svg(&nicomedes_result(), &PlotSpec::default()).unwrap();
        assert_eq!(count(&svg, "<polyline class=\"inner\""), 1);
        assert_eq!(count(&svg, "<polyline class=\"outer\""), 1);
        assert_eq!(count(&svg, "<polyline class=\"base\""), 1);
        assert_eq!(count(&svg, "<line class=\"focus\""), 2);
        assert_eq!(count(&svg, "<line class=\"ray\""), 0);
    }

    #[test]
    fn rays_one_per_valid_sample() {
        let spec = PlotSpec {
            show_rays: true,
            ..PlotSpec::default()
        };
        let svg = write_svg(&nicomedes_result(), &spec).unwrap();
        assert_eq!(count(&svg, "<line class=\"ray\""), 18);
    }

    #[test]
    fn base_and_focus_can_be_hidden() {
        let spec = PlotSpec {
            show_base: false,
            show_focus: false,
            ..PlotSpec::default()
        };
        let svg = write_svg(&nicomedes_result(), &spec).unwrap();
        assert_eq!(count(&svg, "class=\"base\""), 0);
        assert_eq!(count(&svg, "<line class=\"focus\""), 0);
    }

    #[test]
    fn gaps_split_polylines() {
        let result = sample_gpc(
            GpcConfig::new(
                Point2::new(0.0, 0.0),
                LineSegmentCurve::new(Point2::new(-1.0, 0.0), Point2::new(1.0, 0.0))
                    .unwrap()
                    .into(),
                OffsetExpr::parse("1").unwrap(),
                5,
            )
            .unwrap(),
        )
        .unwrap();
        let svg = write_svg(&result, &PlotSpec::default()).unwrap();
        assert_eq!(count(&svg, "<polyline class=\"inner\""), 2);
        assert_eq!(count(&svg, "<polyline class=\"outer\""), 2);
    }

    #[test]
    fn single_sample_produces_valid_document() {
        let result = sample_gpc(
            GpcConfig::new(
                Point2::new(0.0, 0.0),
                LineSegmentCurve::new(Point2::new(-3.0, 0.0), Point2::new(0.0, 1.5))
                    .unwrap()
                    .into(),
                OffsetExpr::parse("ln(l)").unwrap(),
                2,
            )
            .unwrap(),
        )
        .unwrap();
        let svg = write_svg(&result, &PlotSpec::default()).unwrap();
        assert!(svg.contains("<svg "));
        assert!(svg.contains("viewBox="));
        assert_eq!(count(&svg, "<polyline class=\"inner\""), 1);
    }

    #[test]
    fn coordinates_are_finite_and_aspect_preserved() {
        let svg = write_svg(&nicomedes_result(), &PlotSpec::default()).unwrap();
        assert!(!svg.contains("NaN"));
        assert!(!svg.contains("inf"));
        // Default preserveAspectRatio (xMidYMid meet) keeps aspect equal; the
        // document must not override it.
        assert!(!svg.contains("preserveAspectRatio"));
        assert!(svg.contains("scale(1,-1)"));
    }

    #[test]
    fn spec_validation() {
        let spec = PlotSpec {
            width_px: 0,
            ..PlotSpec::default()
        };
        assert!(write_svg(&nicomedes_result(), &spec).is_err());
        let spec = PlotSpec {
            margin_fraction: 0.5,
            ..PlotSpec::default()
        };
        assert!(write_svg(&nicomedes_result(), &spec).is_err());
    }
}

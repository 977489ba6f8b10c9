//! Named example configurations: the classical Nicomedes conchoid, a limaçon
//! of Pascal, and six further line/circle constructions that exercise
//! constant, linear, sine and logarithm offset functions.
//!
//! Every preset uses focus (0, 0) and m = 180.

use std::f64::consts::PI;

use crate::curves::{CircularArcCurve, LineSegmentCurve};
use crate::error::{Error, Result};
use crate::expr::OffsetExpr;
use crate::geometry::Point2;
use crate::sampler::GpcConfig;

/// Sample count shared by all presets.
pub const PRESET_M: usize = 180;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Preset {
    pub name: &'static str,
    pub description: &'static str,
}

/// All available presets, in listing order.
pub const PRESETS: [Preset; 8] = [
    Preset {
        name: "nicomedes",
        description: "Nicomedes conchoid: line y = 1 for x in [-3, 3], f(l) = 2",
    },
    Preset {
        name: "line-linear",
        description: "line y = 1 for x in [-3, 3], f(l) = l",
    },
    Preset {
        name: "line-sin",
        description: "line y = 1 for x in [-4, 4], f(l) = sin(l)",
    },
    Preset {
        name: "line-ln",
        description: "line y = 1 for x in [-2, 2], f(l) = ln(l)",
    },
    Preset {
        name: "limacon",
        description: "limacon of Pascal: circle c = (0, 113/100), r = 80/100, f(l) = 136/100",
    },
    Preset {
        name: "circ-linear",
        description: "circle c = (0, 7/2), r = 2, f(l) = l",
    },
    Preset {
        name: "circ-sin",
        description: "circle c = (0, 7/2), r = 2, f(l) = 2*sin(l)",
    },
    Preset {
        name: "circ-ln",
        description: "circle c = (0, 7/2), r = 2, f(l) = ln(l)",
    },
];

fn horizontal_line(y: f64, x_from: f64, x_to: f64) -> LineSegmentCurve {
    LineSegmentCurve::new(Point2::new(x_from, y), Point2::new(x_to, y))
        .expect("preset segment is non-degenerate")
}

fn full_circle(cx: f64, cy: f64, r: f64) -> CircularArcCurve {
    CircularArcCurve::new(Point2::new(cx, cy), r, 0.0, 2.0 * PI)
        .expect("preset circle is valid")
}

/// Build the configuration for a preset by name.
pub fn preset_config(name: &str) -> Result<GpcConfig> {
    let origin = Point2::new(0.0, 0.0);
    let (curve, offset): (crate::curves::BaseCurve, &str) = match name {
        "nicomedes" => (horizontal_line(1.0, -3.0, 3.0).into(), "2"),
        "line-linear" => (horizontal_line(1.0, -3.0, 3.0).into(), "l"),
        "line-sin" => (horizontal_line(1.0, -4.0, 4.0).into(), "sin(l)"),
        "line-ln" => (horizontal_line(1.0, -2.0, 2.0).into(), "ln(l)"),
        "limacon" => (full_circle(0.0, 113.0 / 100.0, 80.0 / 100.0).into(), "136/100"),
        "circ-linear" => (full_circle(0.0, 3.5, 2.0).into(), "l"),
        "circ-sin" => (full_circle(0.0, 3.5, 2.0).into(), "2*sin(l)"),
        "circ-ln" => (full_circle(0.0, 3.5, 2.0).into(), "ln(l)"),
        other => return Err(Error::UnknownPreset(other.to_string())),
    };
    let offset = OffsetExpr::parse(offset).expect("preset offset parses");
    GpcConfig::new(origin, curve, offset, PRESET_M)
}

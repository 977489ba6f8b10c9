//! Generalized planar conchoids.
//!
//! Given a focus O, a directed base curve C traversed from N to S, and an
//! offset function d = f(l) of arc length l along C, the construction samples
//! C at m points and displaces each sample P_i by d_i = f(l_i) along the ray
//! O → P_i, producing an inner branch Q_i = P_i − d_i·u and an outer branch
//! Q'_i = P_i + d_i·u, where u is the unit ray direction. The classical
//! conchoid of Nicomedes is the special case of a line base curve with
//! constant f.
//!
//! The crate provides the geometric primitives, line/arc/parametric base
//! curves with analytic or quadrature arc length, a small expression language
//! for f, the sampler itself, named example configurations, and CSV/SVG/JSON
//! serializers for the results.

pub mod curves;
pub mod error;
pub mod expr;
pub mod geometry;
pub mod output;
pub mod presets;
pub mod sampler;

pub use curves::{BaseCurve, CircularArcCurve, LineSegmentCurve, ParametricCurve};
pub use error::{Error, Result};
pub use expr::OffsetExpr;
pub use geometry::{branch_points, unit_from_focus, Point2, Vec2};
pub use output::{write_csv, write_json, write_svg, PlotSpec, TableColumn, TableSpec};
pub use presets::{preset_config, Preset, PRESETS, PRESET_M};
pub use sampler::{
    branch_polylines, sample_gpc, BranchPolylines, GpcConfig, GpcResult, GpcSample, InvalidReason,
};

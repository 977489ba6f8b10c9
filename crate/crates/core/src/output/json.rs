//! JSON exchange format, schema version 1.
//!
//! Column-oriented: `samples` holds one array per field, indexed by sample.
//! Finite floats survive a round-trip bit-exactly (shortest-round-trip
//! formatting); non-finite offsets serialize as null.

use serde_json::{json, Value};

use crate::curves::BaseCurve;
use crate::geometry::Point2;
use crate::sampler::GpcResult;

pub const JSON_SCHEMA_VERSION: u64 = 1;

fn num(v: f64) -> Value {
    serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number)
}

fn point(p: Point2) -> Value {
    json!([p.x, p.y])
}

fn curve_value(curve: &BaseCurve) -> Value {
    match curve {
        BaseCurve::Line(line) => json!({
            "kind": "line",
            "n": point(line.start()),
            "s": point(line.end()),
        }),
        BaseCurve::Arc(arc) => json!({
            "kind": "circular_arc",
            "center": point(arc.centre()),
            "radius": arc.radius(),
            "theta_n": arc.theta_n(),
            "theta_s": arc.theta_s(),
        }),
        BaseCurve::Parametric(par) => json!({
            "kind": "parametric",
            "arclen_subdivisions": par.arclen_subdivisions(),
        }),
    }
}

/// Serialize the result. Never fails; non-representable values become null.
pub fn write_json(result: &GpcResult) -> String {
    let samples = &result.samples;
    let doc = json!({
        "schema_version": JSON_SCHEMA_VERSION,
        "config": {
            "focus": point(result.config.focus),
            "curve": curve_value(&result.config.curve),
            "offset": result.config.offset.render(),
            "m": result.config.m,
            "drop_nonfinite": result.config.drop_nonfinite,
        },
        "samples": {
            "k": samples.iter().map(|s| num(s.k)).collect::<Vec<_>>(),
            "p": samples.iter().map(|s| point(s.p)).collect::<Vec<_>>(),
            "l": samples.iter().map(|s| num(s.l)).collect::<Vec<_>>(),
            "d": samples.iter().map(|s| num(s.d)).collect::<Vec<_>>(),
            "u": samples
                .iter()
                .map(|s| s.u.map_or(Value::Null, |u| json!([u.dx, u.dy])))
                .collect::<Vec<_>>(),
            "q_inner": samples
                .iter()
                .map(|s| s.q_inner.map_or(Value::Null, point))
                .collect::<Vec<_>>(),
            "q_outer": samples
                .iter()
                .map(|s| s.q_outer.map_or(Value::Null, point))
                .collect::<Vec<_>>(),
            "valid": samples.iter().map(|s| s.is_valid()).collect::<Vec<_>>(),
            "reason": samples
                .iter()
                .map(|s| s.reason.map_or(Value::Null, |r| Value::from(r.as_str())))
                .collect::<Vec<_>>(),
        },
        "dropped": result.dropped,
    });
    serde_json::to_string_pretty(&doc).expect("document contains no non-serializable values")
}

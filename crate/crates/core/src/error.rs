use thiserror::Error;

/// Errors produced anywhere in the conchoid pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The sampled base-curve point coincides with the focus, so no ray
    /// direction exists.
    #[error("degenerate ray: point ({x}, {y}) coincides with the focus")]
    DegenerateRay { x: f64, y: f64 },

    /// The offset distance evaluated to NaN or ±∞.
    #[error("offset distance is not finite ({value})")]
    NonFiniteOffset { value: f64 },

    /// A traversal fraction outside the curve's [0, 1] domain.
    #[error("parameter k = {k} is outside [0, 1]")]
    ParamOutOfRange { k: f64 },

    /// A parametric position map produced a non-finite point.
    #[error("curve position is not finite at t = {t}")]
    NonFiniteCurve { t: f64 },

    /// Line segment with coincident endpoints.
    #[error("degenerate line segment: start and end coincide")]
    DegenerateSegment,

    /// Circular arc whose parameters violate r > 0 or θ_N ≠ θ_S.
    #[error("invalid circular arc: {reason}")]
    InvalidArc { reason: String },

    /// A construction parameter that must be finite was NaN or ±∞.
    #[error("{name} must be finite")]
    NonFiniteInput { name: &'static str },

    /// Malformed offset-expression text.
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    /// An identifier outside the expression language's vocabulary.
    #[error("unknown identifier `{name}` at position {position}")]
    UnknownIdentifier { name: String, position: usize },

    /// A sampling configuration that violates its invariants (e.g. m < 2).
    #[error("invalid configuration: {reason}")]
    InvalidConfig { reason: String },

    /// Strict mode (`drop_nonfinite = false`) hit an invalid sample.
    #[error("sample {index} (k = {k}) is invalid: {reason}")]
    InvalidSample {
        index: usize,
        k: f64,
        reason: String,
    },

    /// Every sample of the construction was invalid.
    #[error("all {total} samples are invalid")]
    AllSamplesInvalid { total: usize },

    /// Preset name not in the built-in catalogue.
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    /// Table layout violating precision or column invariants.
    #[error("invalid table spec: {reason}")]
    InvalidTableSpec { reason: String },

    /// Plot layout violating size or margin invariants.
    #[error("invalid plot spec: {reason}")]
    InvalidPlotSpec { reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

//! Serialization of sampled conchoids: CSV calculation tables, SVG plots,
//! JSON exchange documents.

mod csv;
mod json;
mod svg;

pub use csv::{write_csv, TableColumn, TableSpec};
pub use json::{write_json, JSON_SCHEMA_VERSION};
pub use svg::{write_svg, PlotSpec};

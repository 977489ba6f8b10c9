//! CSV calculation tables, one row per sample in k order.
//!
//! Cells are fixed-point with round-half-away-from-zero, "." decimal point,
//! "," separator, "\n" line separator, no locale variation. Vector columns
//! expand to `_x`/`_y` cell pairs. Cells whose value does not exist for an
//! invalid sample are left empty; a trailing `reason` column appears whenever
//! the result contains at least one invalid sample.

use crate::error::{Error, Result};
use crate::sampler::{GpcResult, GpcSample};

/// Selectable table columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableColumn {
    /// Grid parameter k_i.
    K,
    /// Base-curve point P_i (two cells).
    P,
    /// Displacement P_i − N from the curve start (two cells).
    LVec,
    /// Arc length l_i from the curve start.
    LNorm,
    /// Offset d_i = f(l_i).
    D,
    /// Ray vector P_i − O (two cells).
    PMinusO,
    /// Ray length |P_i − O|.
    PMinusONorm,
    /// Unit ray direction (two cells).
    U,
    /// Inner branch point Q_i (two cells).
    QInner,
    /// Outer branch point Q'_i (two cells).
    QOuter,
}

impl TableColumn {
    /// All columns, table order.
    pub const ALL: [TableColumn; 10] = [
        TableColumn::K,
        TableColumn::P,
        TableColumn::LVec,
        TableColumn::LNorm,
        TableColumn::D,
        TableColumn::PMinusO,
        TableColumn::PMinusONorm,
        TableColumn::U,
        TableColumn::QInner,
        TableColumn::QOuter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableColumn::K => "k",
            TableColumn::P => "p",
            TableColumn::LVec => "l_vec",
            TableColumn::LNorm => "l_norm",
            TableColumn::D => "d",
            TableColumn::PMinusO => "p_minus_o",
            TableColumn::PMinusONorm => "p_minus_o_norm",
            TableColumn::U => "u",
            TableColumn::QInner => "q_inner",
            TableColumn::QOuter => "q_outer",
        }
    }

    fn is_vector(self) -> bool {
        matches!(
            self,
            TableColumn::P
                | TableColumn::LVec
                | TableColumn::PMinusO
                | TableColumn::U
                | TableColumn::QInner
                | TableColumn::QOuter
        )
    }
}

/// Maximum supported precision (decimal places).
pub const MAX_PRECISION: u8 = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    precision: u8,
    columns: Vec<TableColumn>,
}

impl TableSpec {
    pub fn new(precision: u8, columns: Vec<TableColumn>) -> Result<Self> {
        if precision > MAX_PRECISION {
            return Err(Error::InvalidTableSpec {
                reason: format!("precision must be at most {MAX_PRECISION}, got {precision}"),
            });
        }
        if columns.is_empty() {
            return Err(Error::InvalidTableSpec {
                reason: "column list is empty".to_string(),
            });
        }
        Ok(TableSpec { precision, columns })
    }

    pub fn precision(&self) -> u8 {
        self.precision
    }

    pub fn columns(&self) -> &[TableColumn] {
        &self.columns
    }
}

impl Default for TableSpec {
    /// Precision 3, every column.
    fn default() -> Self {
        TableSpec {
            precision: 3,
            columns: TableColumn::ALL.to_vec(),
        }
    }
}

/// Fixed-point formatting, round-half-away-from-zero, never "-0".
fn format_number(v: f64, precision: u8) -> String {
    debug_assert!(v.is_finite());
    let factor = 10f64.powi(i32::from(precision));
    let scaled = v.abs() * factor + 0.5;
    if scaled >= 9.2e18 {
        // Out of integer range; magnitude dwarfs any rounding-mode nuance.
        return format!("{:.*}", usize::from(precision), v);
    }
    let units = scaled.floor() as u64;
    let base = 10u64.pow(u32::from(precision));
    let int_part = units / base;
    let frac_part = units % base;
    let sign = if v < 0.0 && units != 0 { "-" } else { "" };
    if precision == 0 {
        format!("{sign}{int_part}")
    } else {
        format!(
            "{sign}{int_part}.{frac_part:0width$}",
            width = usize::from(precision)
        )
    }
}

fn push_scalar(cells: &mut Vec<String>, value: Option<f64>, precision: u8) {
    match value {
        Some(v) if v.is_finite() => cells.push(format_number(v, precision)),
        _ => cells.push(String::new()),
    }
}

fn push_pair(cells: &mut Vec<String>, value: Option<(f64, f64)>, precision: u8) {
    match value {
        Some((x, y)) if x.is_finite() && y.is_finite() => {
            cells.push(format_number(x, precision));
            cells.push(format_number(y, precision));
        }
        _ => {
            cells.push(String::new());
            cells.push(String::new());
        }
    }
}

fn sample_cells(
    result: &GpcResult,
    sample: &GpcSample,
    spec: &TableSpec,
    with_reason: bool,
) -> Vec<String> {
    let start = result
        .config
        .curve
        .start()
        .expect("curve start exists for a sampled result");
    let focus = result.config.focus;
    let p = spec.precision;
    let mut cells = Vec::new();
    for column in spec.columns() {
        match column {
            TableColumn::K => push_scalar(&mut cells, Some(sample.k), p),
            TableColumn::P => push_pair(&mut cells, Some((sample.p.x, sample.p.y)), p),
            TableColumn::LVec => {
                let v = sample.p - start;
                push_pair(&mut cells, Some((v.dx, v.dy)), p);
            }
            TableColumn::LNorm => push_scalar(&mut cells, Some(sample.l), p),
            TableColumn::D => push_scalar(&mut cells, Some(sample.d), p),
            TableColumn::PMinusO => {
                let v = sample.p - focus;
                push_pair(&mut cells, Some((v.dx, v.dy)), p);
            }
            TableColumn::PMinusONorm => push_scalar(&mut cells, Some((sample.p - focus).norm()), p),
            TableColumn::U => push_pair(&mut cells, sample.u.map(|u| (u.dx, u.dy)), p),
            TableColumn::QInner => {
                push_pair(&mut cells, sample.q_inner.map(|q| (q.x, q.y)), p)
            }
            TableColumn::QOuter => {
                push_pair(&mut cells, sample.q_outer.map(|q| (q.x, q.y)), p)
            }
        }
    }
    if with_reason {
        cells.push(
            sample
                .reason
                .map(|r| r.as_str().to_string())
                .unwrap_or_default(),
        );
    }
    cells
}

/// Serialize the result as a CSV table: header plus one row per sample.
pub fn write_csv(result: &GpcResult, spec: &TableSpec) -> String {
    let with_reason = result.dropped > 0;
    let mut text = String::new();
    let mut header = Vec::new();
    for column in spec.columns() {
        if column.is_vector() {
            header.push(format!("{}_x", column.name()));
            header.push(format!("{}_y", column.name()));
        } else {
            header.push(column.name().to_string());
        }
    }
    if with_reason {
        header.push("reason".to_string());
    }
    text.push_str(&header.join(","));
    text.push('\n');
    for sample in &result.samples {
        text.push_str(&sample_cells(result, sample, spec, with_reason).join(","));
        text.push('\n');
    }
    text
}

//! Point-file ingestion and result serialization.
//!
//! Input is one point per line of comma-separated decimals (CSV, the
//! canonical format) or a JSON array of coordinate arrays. `#`-prefixed
//! lines are comments. A fit emits controls.json (B-spline control points
//! and knot vector), samples.csv (global parameter and coordinates of the
//! piecewise-Bezier samples), report.json (one row per fit with m, fraction,
//! square error, per-gap errors), and one SVG per coordinate-plane view.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::PointChain;
use crate::pipeline::{FitConfig, FitResult};
use crate::svg::{self, PlaneView};

/// Supported point-file formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointFormat {
    Csv,
    Json,
}

/// Reads an ordered chain from a file, inferring the dimension from the
/// first record.
pub fn load_points(path: &Path, format: PointFormat) -> Result<PointChain> {
    let text = fs::read_to_string(path)?;
    match format {
        PointFormat::Csv => parse_csv(&text),
        PointFormat::Json => parse_json(&text),
    }
}

/// Parses comma-separated rows; blank lines and `#` comments are skipped.
pub fn parse_csv(text: &str) -> Result<PointChain> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut dim: Option<usize> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let row = trimmed
            .split(',')
            .map(|field| {
                let field = field.trim();
                field.parse::<f64>().map_err(|_| Error::Parse {
                    line,
                    message: format!("invalid number {field:?}"),
                })
            })
            .collect::<Result<Vec<f64>>>()?;
        if row.iter().any(|v| !v.is_finite()) {
            return Err(Error::Parse {
                line,
                message: "coordinates must be finite".into(),
            });
        }
        match dim {
            None => dim = Some(row.len()),
            Some(d) if d != row.len() => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {d} columns, got {}", row.len()),
                });
            }
            _ => {}
        }
        rows.push(row);
    }
    PointChain::from_rows(rows)
}

/// Parses a JSON array of coordinate arrays.
pub fn parse_json(text: &str) -> Result<PointChain> {
    let rows: Vec<Vec<f64>> = serde_json::from_str(text)?;
    PointChain::from_rows(rows)
}

#[derive(Debug, Serialize, Deserialize)]
struct ControlsFile {
    dim: usize,
    order: usize,
    knots: Vec<f64>,
    controls: Vec<Vec<f64>>,
}

/// One row of report.json.
#[derive(Debug, Serialize, Deserialize)]
pub struct ReportRow {
    pub fraction: Option<f64>,
    pub m: Option<usize>,
    pub error: Option<f64>,
    pub per_gap_errors: Vec<f64>,
}

fn report_row(result: &FitResult, fraction: Option<f64>) -> ReportRow {
    ReportRow {
        fraction,
        m: result.selection.as_ref().map(|s| s.m()),
        error: result.error,
        per_gap_errors: result.gap_errors.clone().unwrap_or_default(),
    }
}

fn write_file(path: PathBuf, bytes: &[u8], written: &mut Vec<PathBuf>) -> Result<()> {
    fs::write(&path, bytes)?;
    written.push(path);
    Ok(())
}

fn samples_csv(result: &FitResult, config: &FitConfig) -> Result<String> {
    let mut out = String::from("# parameter");
    for d in 0..result.dim() {
        let _ = write!(out, ",{}", svg::axis_label(d).to_lowercase());
    }
    out.push('\n');
    for (u, p) in result.piecewise.sample(config.samples_per_segment)? {
        let _ = write!(out, "{u:.6}");
        for c in p.coords() {
            let _ = write!(out, ",{c:.6}");
        }
        out.push('\n');
    }
    Ok(out)
}

/// The (independent, dependent) axis pairs a result is plotted over:
/// one pair per non-independent axis, ascending.
fn plane_axes(dim: usize, independent_axis: usize) -> Result<Vec<(usize, usize)>> {
    if independent_axis >= dim {
        return Err(Error::AxisOutOfRange {
            axis: independent_axis,
            dim,
        });
    }
    Ok((0..dim)
        .filter(|&a| a != independent_axis)
        .map(|a| (independent_axis, a))
        .collect())
}

fn plane_view(result: &FitResult, config: &FitConfig, axes: (usize, usize)) -> Result<PlaneView> {
    let (ix, dx) = axes;
    let pick = |p: &crate::geom::Point| (p[ix], p[dx]);
    // Segment endpoints of the piecewise are the (dominant) data points.
    let merged = result.piecewise.merged_controls();
    let data: Vec<(f64, f64)> = merged.iter().step_by(3).map(&pick).collect();
    let control_polygon: Vec<(f64, f64)> = result.curve.controls().iter().map(&pick).collect();
    let curve: Vec<(f64, f64)> = result
        .curve
        .sample(config.samples_per_segment)?
        .iter()
        .map(|(_, p)| pick(p))
        .collect();
    Ok(PlaneView {
        axis_labels: (svg::axis_label(ix), svg::axis_label(dx)),
        data,
        control_polygon,
        curve,
    })
}

/// Writes controls.json, samples.csv, report.json and the per-plane SVGs
/// for one fit. Returns the written paths in a fixed order.
pub fn emit_results(
    result: &FitResult,
    config: &FitConfig,
    out_dir: &Path,
) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(out_dir)?;
    let mut written = Vec::new();

    let controls = ControlsFile {
        dim: result.dim(),
        order: result.curve.order(),
        knots: result.curve.knots().as_slice().to_vec(),
        controls: result
            .curve
            .controls()
            .iter()
            .map(|p| p.coords().to_vec())
            .collect(),
    };
    let mut json = serde_json::to_string_pretty(&controls)?;
    json.push('\n');
    write_file(out_dir.join("controls.json"), json.as_bytes(), &mut written)?;

    write_file(
        out_dir.join("samples.csv"),
        samples_csv(result, config)?.as_bytes(),
        &mut written,
    )?;

    let fraction = result.selection.as_ref().map(|_| config.dominant_fraction);
    let rows = vec![report_row(result, fraction)];
    let mut json = serde_json::to_string_pretty(&rows)?;
    json.push('\n');
    write_file(out_dir.join("report.json"), json.as_bytes(), &mut written)?;

    for axes in plane_axes(result.dim(), config.independent_axis)? {
        let view = plane_view(result, config, axes)?;
        let name = format!(
            "plane_{}{}.svg",
            svg::axis_label(axes.0),
            svg::axis_label(axes.1)
        );
        write_file(
            out_dir.join(name),
            svg::render(&view).as_bytes(),
            &mut written,
        )?;
    }
    Ok(written)
}

/// Writes a sweep's report.json: one row per fraction, in sweep order.
pub fn emit_sweep(rows: &[(f64, FitResult)], out_dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(out_dir)?;
    let report: Vec<ReportRow> = rows
        .iter()
        .map(|(fraction, result)| report_row(result, Some(*fraction)))
        .collect();
    let mut json = serde_json::to_string_pretty(&report)?;
    json.push('\n');
    let mut written = Vec::new();
    write_file(out_dir.join("report.json"), json.as_bytes(), &mut written)?;
    Ok(written)
}

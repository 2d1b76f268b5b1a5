//! Standalone SVG plots of one coordinate-plane view of a fit: data points
//! as circles, the control polygon as a dashed polyline, and the sampled
//! curve as a solid polyline. Output bytes are deterministic: fixed
//! 6-decimal formatting, element order fixed by construction.

use std::fmt::Write;

/// One plane's worth of plot data, all in (independent, dependent) pairs.
#[derive(Clone, Debug)]
pub struct PlaneView {
    /// (horizontal axis label, vertical axis label).
    pub axis_labels: (String, String),
    pub data: Vec<(f64, f64)>,
    pub control_polygon: Vec<(f64, f64)>,
    pub curve: Vec<(f64, f64)>,
}

/// Single-letter axis names for the first four axes, `a<i>` beyond.
pub fn axis_label(axis: usize) -> String {
    match axis {
        0 => "X".to_string(),
        1 => "Y".to_string(),
        2 => "Z".to_string(),
        3 => "W".to_string(),
        i => format!("a{i}"),
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.6}")
}

/// Renders the view to SVG text. The vertical axis is flipped to the usual
/// mathematical orientation inside the fixed view box.
pub fn render(view: &PlaneView) -> String {
    let all = view
        .data
        .iter()
        .chain(&view.control_polygon)
        .chain(&view.curve);
    let mut min = (f64::INFINITY, f64::INFINITY);
    let mut max = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for &(x, y) in all {
        min.0 = min.0.min(x);
        min.1 = min.1.min(y);
        max.0 = max.0.max(x);
        max.1 = max.1.max(y);
    }
    if !min.0.is_finite() {
        min = (0.0, 0.0);
        max = (1.0, 1.0);
    }
    let extent = (max.0 - min.0).max(max.1 - min.1).max(1e-9);
    let margin = 0.05 * extent;
    let width = max.0 - min.0 + 2.0 * margin;
    let height = max.1 - min.1 + 2.0 * margin;
    // Screen y grows downward; reflect about the vertical center.
    let flip = |y: f64| min.1 + max.1 - y;
    let stroke = extent / 250.0;
    let radius = extent / 90.0;
    let font = extent / 18.0;

    let polyline = |points: &[(f64, f64)]| {
        points
            .iter()
            .map(|&(x, y)| format!("{},{}", fmt(x), fmt(flip(y))))
            .collect::<Vec<_>>()
            .join(" ")
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        fmt(min.0 - margin),
        fmt(min.1 - margin),
        fmt(width),
        fmt(height)
    );
    if view.control_polygon.len() > 1 {
        let _ = writeln!(
            svg,
            r##"  <polyline fill="none" stroke="#999999" stroke-width="{}" stroke-dasharray="{} {}" points="{}"/>"##,
            fmt(stroke),
            fmt(3.0 * stroke),
            fmt(2.0 * stroke),
            polyline(&view.control_polygon)
        );
    }
    if view.curve.len() > 1 {
        let _ = writeln!(
            svg,
            r##"  <polyline fill="none" stroke="#1f77b4" stroke-width="{}" points="{}"/>"##,
            fmt(1.5 * stroke),
            polyline(&view.curve)
        );
    }
    for &(x, y) in &view.data {
        let _ = writeln!(
            svg,
            r##"  <circle cx="{}" cy="{}" r="{}" fill="#d62728"/>"##,
            fmt(x),
            fmt(flip(y)),
            fmt(radius)
        );
    }
    let _ = writeln!(
        svg,
        r##"  <text x="{}" y="{}" font-size="{}" fill="#333333">{}</text>"##,
        fmt(max.0 - margin),
        fmt(flip(min.1) + margin),
        fmt(font),
        view.axis_labels.0
    );
    let _ = writeln!(
        svg,
        r##"  <text x="{}" y="{}" font-size="{}" fill="#333333">{}</text>"##,
        fmt(min.0),
        fmt(flip(max.1) + margin),
        fmt(font),
        view.axis_labels.1
    );
    svg.push_str("</svg>\n");
    svg
}

//! Merging piecewise Bezier control points from coordinate planes that share
//! one independent axis into control points in R^n.
//!
//! First and fourth controls of corresponding pieces are data points, so
//! their independent coordinates already agree across planes and the merged
//! point is plain coordinate assembly. The inner controls disagree; each is
//! slid along its own control leg until its independent coordinate sits at
//! the arithmetic mean of the per-plane leg intervals, which preserves every
//! plane's tangent direction and keeps the merged chain C1 at junctions.

use crate::bezier::{BezierSegment, PiecewiseBezier};
use crate::error::{Error, Result};
use crate::geom::Point;

/// Tolerance for the first/fourth independent-coordinate agreement check.
const ENDPOINT_TOL: f64 = 1e-9;
/// Below this independent extent a control leg counts as degenerate.
const DEGENERATE_LEG: f64 = 1e-12;

/// Per-plane independent-coordinate intervals of one segment's control legs
/// and their arithmetic means.
#[derive(Clone, Debug, PartialEq)]
pub struct MergeLeg {
    /// indep(P_{i+1}) - indep(P_i) per plane.
    pub start_intervals: Vec<f64>,
    /// indep(P_{i+2}) - indep(P_{i+3}) per plane.
    pub end_intervals: Vec<f64>,
    /// Mean of `start_intervals` (the slide target offset for second controls).
    pub start_mean: f64,
    /// Mean of `end_intervals` (the slide target offset for third controls).
    pub end_mean: f64,
}

/// Computes the leg intervals and their means for one segment index.
pub fn leg_means(planes: &[PiecewiseBezier], segment: usize) -> Result<MergeLeg> {
    if planes.is_empty() {
        return Err(Error::SegmentCountMismatch);
    }
    let start_intervals: Vec<f64> = planes
        .iter()
        .map(|pw| {
            let c = pw.segments()[segment].controls();
            c[1][0] - c[0][0]
        })
        .collect();
    let end_intervals: Vec<f64> = planes
        .iter()
        .map(|pw| {
            let c = pw.segments()[segment].controls();
            c[2][0] - c[3][0]
        })
        .collect();
    let n = planes.len() as f64;
    Ok(MergeLeg {
        start_mean: start_intervals.iter().sum::<f64>() / n,
        end_mean: end_intervals.iter().sum::<f64>() / n,
        start_intervals,
        end_intervals,
    })
}

/// Slides `ctrl` along the line `anchor` -> `ctrl` to the given independent
/// coordinate. A leg with no independent extent cannot be slid; its dependent
/// coordinate is kept and only the independent coordinate is overwritten.
fn slide(anchor: &Point, ctrl: &Point, target_indep: f64, segment: usize) -> (f64, f64) {
    let interval = ctrl[0] - anchor[0];
    if interval.abs() < DEGENERATE_LEG {
        log::warn!(
            "degenerate control leg in segment {segment}: no independent extent, \
             keeping dependent coordinate"
        );
        return (target_indep, ctrl[1]);
    }
    let s = (target_indep - anchor[0]) / interval;
    (target_indep, anchor[1] + s * (ctrl[1] - anchor[1]))
}

/// Merges per-plane curves (each in plane coordinates (independent,
/// dependent)) into one piecewise Bezier in R^(planes+1). `dependent_axes[j]`
/// names the output coordinate fed by plane j; `independent_axis` names the
/// shared one. Together they must cover 0..planes+1.
pub fn merge_plane_controls(
    planes: &[PiecewiseBezier],
    independent_axis: usize,
    dependent_axes: &[usize],
) -> Result<PiecewiseBezier> {
    let dim = planes.len() + 1;
    if planes.len() < 2 || dependent_axes.len() != planes.len() {
        return Err(Error::DimensionTooLow {
            got: dim.min(2),
            needed: 3,
        });
    }
    let mut seen = vec![false; dim];
    for &axis in dependent_axes.iter().chain([&independent_axis]) {
        if axis >= dim || seen[axis] {
            return Err(Error::AxisOutOfRange { axis, dim });
        }
        seen[axis] = true;
    }
    let segment_count = planes[0].segments().len();
    if planes.iter().any(|pw| pw.segments().len() != segment_count) {
        return Err(Error::SegmentCountMismatch);
    }
    if let Some(bad) = planes.iter().find(|pw| pw.dim() != 2) {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: bad.dim(),
        });
    }

    let mut segments = Vec::with_capacity(segment_count);
    for s in 0..segment_count {
        // Data-point controls must share their independent coordinate.
        for pw in &planes[1..] {
            for c in [0, 3] {
                let delta = (pw.segments()[s].controls()[c][0]
                    - planes[0].segments()[s].controls()[c][0])
                    .abs();
                if delta > ENDPOINT_TOL {
                    return Err(Error::IndependentMismatch { segment: s, delta });
                }
            }
        }

        let leg = leg_means(planes, s)?;
        let assemble = |per_plane: Vec<(f64, f64)>| {
            let mut coords = vec![0.0; dim];
            coords[independent_axis] = per_plane[0].0;
            for (j, &(_, dep)) in per_plane.iter().enumerate() {
                coords[dependent_axes[j]] = dep;
            }
            Point::new(coords)
        };

        let collect = |c: usize| -> Vec<(f64, f64)> {
            planes
                .iter()
                .map(|pw| {
                    let p = &pw.segments()[s].controls()[c];
                    (p[0], p[1])
                })
                .collect()
        };

        let slid_second: Vec<(f64, f64)> = planes
            .iter()
            .map(|pw| {
                let c = pw.segments()[s].controls();
                slide(&c[0], &c[1], c[0][0] + leg.start_mean, s)
            })
            .collect();
        let slid_third: Vec<(f64, f64)> = planes
            .iter()
            .map(|pw| {
                let c = pw.segments()[s].controls();
                slide(&c[3], &c[2], c[3][0] + leg.end_mean, s)
            })
            .collect();

        segments.push(BezierSegment::new([
            assemble(collect(0)),
            assemble(slid_second),
            assemble(slid_third),
            assemble(collect(3)),
        ])?);
    }
    PiecewiseBezier::new(segments)
}

//! Fits C2 cubic B-spline curves to ordered point chains in 2D, 3D and R^n.
//!
//! The planar pipeline interpolates a chain with a cardinal spline, converts
//! each segment to an exact cubic Bezier via the shared boundary conditions,
//! and reads the Bezier control points as a clamped cubic B-spline. Space
//! curves are fitted by splitting the chain into its coordinate planes over
//! one shared independent axis, fitting each plane, and merging the planar
//! control points back into R^n. Chains can also be approximated by a
//! dominant subset of the points selected by turn angle and refined by a
//! least-squares local search.

pub mod bezier;
pub mod bspline;
pub mod cardinal;
pub mod dominant;
pub mod error;
pub mod geom;
pub mod io;
pub mod merge;
pub mod pipeline;
pub mod svg;

pub use bezier::{cardinal_to_bezier, BezierSegment, PiecewiseBezier};
pub use bspline::{basis, bspline_from_bezier_controls, BSplineCurve, KnotVector, Side};
pub use cardinal::{extend_chain, CardinalSegment, CardinalSpline, Tension};
pub use dominant::{
    chain_turn_angles, initial_guess, map_to_curve, optimize, optimize_traced, square_error,
    turn_angle, DominantSelection, GapErrors, Tier, TurnAngleEntry,
};
pub use error::{Error, Result};
pub use geom::{project_to_planes, PlanarChain, Point, PointChain};
pub use io::{emit_results, emit_sweep, load_points, PointFormat, ReportRow};
pub use merge::{leg_means, merge_plane_controls, MergeLeg};
pub use pipeline::{approximate_with_fraction, fc2, fcn, fit, sweep, FitConfig, FitResult};

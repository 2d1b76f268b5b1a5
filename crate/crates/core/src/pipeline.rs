//! The fitting pipelines: planar fits, space fits via per-plane fits plus
//! control-point merging, and fraction-based dominant-point approximation.

use crate::bezier::{cardinal_to_bezier, PiecewiseBezier};
use crate::bspline::{bspline_from_bezier_controls, BSplineCurve};
use crate::cardinal::{CardinalSpline, Tension};
use crate::dominant::{
    self, default_tier_counts, guess_from_angles, optimize_traced, selection_errors,
    sort_by_angle, DominantSelection, GapErrors, TurnAngleEntry,
};
use crate::error::{Error, Result};
use crate::geom::{project_to_planes, PlanarChain, Point, PointChain};
use crate::merge::merge_plane_controls;

/// Knobs shared by every fit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FitConfig {
    pub tension: Tension,
    /// The axis shared by all coordinate planes of a space fit.
    pub independent_axis: usize,
    /// Fraction of the chain kept as dominant points when approximating.
    pub dominant_fraction: f64,
    /// Output sampling density per curve segment.
    pub samples_per_segment: usize,
    /// Use interior knots of multiplicity 3 so the B-spline reproduces the
    /// piecewise Bezier identically (C1 only) instead of smoothing it (C2).
    pub bezier_exact_knots: bool,
}

impl Default for FitConfig {
    fn default() -> Self {
        FitConfig {
            tension: Tension::default(),
            independent_axis: 0,
            dominant_fraction: 1.0,
            samples_per_segment: 32,
            bezier_exact_knots: false,
        }
    }
}

impl FitConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.dominant_fraction > 0.0 && self.dominant_fraction <= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "dominant fraction {} outside (0, 1]",
                self.dominant_fraction
            )));
        }
        if self.samples_per_segment < 2 {
            return Err(Error::InvalidConfig(
                "samples per segment must be at least 2".into(),
            ));
        }
        Ok(())
    }
}

/// Everything a fit produces. The B-spline controls are the piecewise Bezier
/// controls with junction duplicates dropped.
#[derive(Clone, Debug)]
pub struct FitResult {
    pub cardinal_samples: Vec<Point>,
    pub piecewise: PiecewiseBezier,
    pub curve: BSplineCurve,
    pub selection: Option<DominantSelection>,
    pub error: Option<f64>,
    /// Square error per gap between consecutive dominant points.
    pub gap_errors: Option<Vec<f64>>,
}

impl FitResult {
    pub fn dim(&self) -> usize {
        self.curve.dim()
    }
}

/// Planar fit: cardinal interpolation, conversion to tangent-continuous
/// Bezier pieces, then promotion of their controls to a cubic B-spline.
pub fn fc2(chain: &PointChain, config: &FitConfig) -> Result<FitResult> {
    config.validate()?;
    if chain.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: chain.dim(),
        });
    }
    fit_any(chain, config)
}

fn fit_any(chain: &PointChain, config: &FitConfig) -> Result<FitResult> {
    let cardinal = CardinalSpline::interpolate(chain, config.tension)?;
    let piecewise = cardinal_to_bezier(chain, config.tension)?;
    let curve = bspline_from_bezier_controls(&piecewise, config.bezier_exact_knots)?;
    Ok(FitResult {
        cardinal_samples: cardinal.sample(config.samples_per_segment)?,
        piecewise,
        curve,
        selection: None,
        error: None,
        gap_errors: None,
    })
}

/// Space fit for chains of dimension >= 3: fit every coordinate plane over
/// the shared independent axis, merge the planar control points into R^n,
/// and promote the merged controls to a B-spline.
pub fn fcn(chain: &PointChain, config: &FitConfig) -> Result<FitResult> {
    config.validate()?;
    if chain.dim() < 3 {
        return Err(Error::DimensionTooLow {
            got: chain.dim(),
            needed: 3,
        });
    }
    let planes = project_to_planes(chain, config.independent_axis)?;
    let plane_curves = planes
        .iter()
        .map(|p| cardinal_to_bezier(&p.to_chain(), config.tension))
        .collect::<Result<Vec<_>>>()?;
    let dependent_axes: Vec<usize> = planes.iter().map(|p| p.axes().1).collect();
    let merged = merge_plane_controls(&plane_curves, config.independent_axis, &dependent_axes)?;
    let curve = bspline_from_bezier_controls(&merged, config.bezier_exact_knots)?;
    let cardinal = CardinalSpline::interpolate(chain, config.tension)?;
    Ok(FitResult {
        cardinal_samples: cardinal.sample(config.samples_per_segment)?,
        piecewise: merged,
        curve,
        selection: None,
        error: None,
        gap_errors: None,
    })
}

/// Fits a chain with whichever pipeline matches its dimension.
pub fn fit(chain: &PointChain, config: &FitConfig) -> Result<FitResult> {
    if chain.dim() == 2 {
        fc2(chain, config)
    } else {
        fcn(chain, config)
    }
}

/// Turn angles for selection: planar chains use their own vertices; space
/// chains sum the per-plane angles at each index so one subset serves all
/// planes.
fn selection_angles(chain: &PointChain, config: &FitConfig) -> Result<Vec<TurnAngleEntry>> {
    if chain.dim() == 2 {
        return dominant::chain_turn_angles(chain);
    }
    let planes = project_to_planes(chain, config.independent_axis)?;
    let mut summed: Vec<TurnAngleEntry> = Vec::new();
    for plane in &planes {
        let angles = dominant::chain_turn_angles(&plane.to_chain())?;
        if summed.is_empty() {
            summed = angles;
        } else {
            for (s, a) in summed.iter_mut().zip(angles) {
                s.angle += a.angle;
            }
        }
    }
    Ok(summed)
}

fn plane_chains(chain: &PointChain, config: &FitConfig) -> Result<Vec<PointChain>> {
    if chain.dim() == 2 {
        Ok(vec![chain.clone()])
    } else {
        Ok(project_to_planes(chain, config.independent_axis)?
            .iter()
            .map(PlanarChain::to_chain)
            .collect())
    }
}

/// Sum of the per-plane square errors for one candidate selection.
fn multi_plane_errors(
    planes: &[PointChain],
    indices: &[usize],
    tension: Tension,
) -> Result<GapErrors> {
    let mut total: Option<GapErrors> = None;
    for plane in planes {
        let errs = selection_errors(plane, indices, tension)?;
        total = Some(match total {
            None => errs,
            Some(mut acc) => {
                acc.total += errs.total;
                for (a, b) in acc.per_gap.iter_mut().zip(&errs.per_gap) {
                    *a += b;
                }
                for (ga, gb) in acc.per_point.iter_mut().zip(&errs.per_point) {
                    for (pa, pb) in ga.iter_mut().zip(gb) {
                        debug_assert_eq!(pa.0, pb.0);
                        pa.1 += pb.1;
                    }
                }
                acc
            }
        });
    }
    total.ok_or(Error::SegmentCountMismatch)
}

/// Approximates the chain with a dominant subset of round(fraction * length)
/// points: turn-angle guess, local-search refinement, then the full fit over
/// the dominant subchain. The returned error is the refined square error.
pub fn approximate_with_fraction(chain: &PointChain, config: &FitConfig) -> Result<FitResult> {
    config.validate()?;
    let m = ((config.dominant_fraction * chain.len() as f64).round() as usize)
        .clamp(2, chain.len());
    let (m1, m2) = default_tier_counts(m);

    let sorted = sort_by_angle(selection_angles(chain, config)?);
    let (indices, tiers, m1, m2) = guess_from_angles(&sorted, chain.len(), m, m1, m2)?;
    let planes = plane_chains(chain, config)?;
    let model = |idx: &[usize]| multi_plane_errors(&planes, idx, config.tension);
    let guess_error = model(&indices)?.total;
    let guess = DominantSelection::from_parts(indices, tiers, m1, m2, guess_error);
    let (selection, _) = optimize_traced(model, chain.len(), &guess)?;

    let subchain = chain.subchain(selection.indices())?;
    let final_errors = model(selection.indices())?;
    let mut result = fit(&subchain, config)?;
    result.error = Some(selection.error());
    result.gap_errors = Some(final_errors.per_gap);
    result.selection = Some(selection);
    Ok(result)
}

/// Runs the approximation once per fraction, in the given order.
pub fn sweep(
    chain: &PointChain,
    fractions: &[f64],
    config: &FitConfig,
) -> Result<Vec<(f64, FitResult)>> {
    fractions
        .iter()
        .map(|&fraction| {
            let cfg = FitConfig {
                dominant_fraction: fraction,
                ..*config
            };
            Ok((fraction, approximate_with_fraction(chain, &cfg)?))
        })
        .collect()
}

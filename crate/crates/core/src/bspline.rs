//! Cubic B-spline curves: clamped knot construction, the Cox-de Boor basis
//! recursion, curve and derivative evaluation, and promotion of piecewise
//! Bezier control points to a single B-spline.
//!
//! Two knot schedules are supported for a piecewise Bezier with S pieces
//! (3S+1 controls):
//!
//! - the default clamped uniform vector with simple interior knots, which
//!   smooths the C1 Bezier chain into a nearby C2 curve, and
//! - a "bezier exact" vector with interior knots of multiplicity 3, which
//!   reproduces the piecewise Bezier identically (C1 only at junctions).

use serde::{Deserialize, Serialize};

use crate::bezier::PiecewiseBezier;
use crate::error::{Error, Result};
use crate::geom::Point;

/// Which one-sided limit to take where the basis is discontinuous in its
/// pieces (only observable in derivatives at interior knots).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Non-decreasing knot values t_0 .. t_{n+k}.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KnotVector {
    knots: Vec<f64>,
}

impl KnotVector {
    pub fn new(knots: Vec<f64>) -> Result<Self> {
        if knots.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::KnotsNotSorted);
        }
        Ok(KnotVector { knots })
    }

    /// The clamped schedule for `num_controls` points of the given order:
    /// t_i = 0 for i < k, t_i = i-k+1 for k <= i <= n, t_i = n-k+2 for i > n,
    /// with n = num_controls - 1.
    pub fn clamped_uniform(num_controls: usize, order: usize) -> Result<Self> {
        if num_controls < order {
            return Err(Error::TooFewControls {
                got: num_controls,
                order,
            });
        }
        let n = num_controls - 1;
        let knots = (0..num_controls + order)
            .map(|i| {
                if i < order {
                    0.0
                } else if i <= n {
                    (i - order + 1) as f64
                } else {
                    (n + 2 - order) as f64
                }
            })
            .collect();
        Ok(KnotVector { knots })
    }

    /// Interior knots of multiplicity 3 so each unit span is one Bernstein
    /// piece; for `num_segments` cubic pieces (3S+1 controls).
    pub fn bezier_exact(num_segments: usize) -> Result<Self> {
        if num_segments == 0 {
            return Err(Error::TooFewControls { got: 0, order: 4 });
        }
        let mut knots = vec![0.0; 4];
        for j in 1..num_segments {
            knots.extend_from_slice(&[j as f64; 3]);
        }
        knots.extend_from_slice(&[num_segments as f64; 4]);
        Ok(KnotVector { knots })
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.knots
    }

    pub fn len(&self) -> usize {
        self.knots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.knots.is_empty()
    }

    /// Parameter domain [first knot, last knot].
    pub fn domain(&self) -> (f64, f64) {
        (self.knots[0], self.knots[self.knots.len() - 1])
    }

    /// Knot values strictly inside the domain, each listed once.
    pub fn interior(&self) -> Vec<f64> {
        let (lo, hi) = self.domain();
        let mut out: Vec<f64> = Vec::new();
        for &t in &self.knots {
            if t > lo && t < hi && out.last() != Some(&t) {
                out.push(t);
            }
        }
        out
    }
}

/// N_{i,k}(u) by the Cox-de Boor recursion; 0/0 terms count as 0. `side`
/// picks the one-sided limit at piece boundaries; `Right` is the standard
/// half-open convention, closed at the right domain end so the last control
/// is reproduced.
pub fn basis(knots: &KnotVector, i: usize, order: usize, u: f64) -> Result<f64> {
    let (lo, hi) = knots.domain();
    if !(lo..=hi).contains(&u) {
        return Err(Error::ParameterOutOfRange {
            value: u,
            min: lo,
            max: hi,
        });
    }
    Ok(basis_sided(knots.as_slice(), i, order, u, Side::Right))
}

fn basis_sided(knots: &[f64], i: usize, k: usize, u: f64, side: Side) -> f64 {
    if k == 1 {
        let t0 = knots[i];
        let t1 = knots[i + 1];
        if t0 >= t1 {
            return 0.0;
        }
        return match side {
            Side::Right => {
                // Half-open [t_i, t_{i+1}), closed at the right domain end.
                let end = knots[knots.len() - 1];
                if (t0 <= u && u < t1) || (u >= end && t1 >= end) {
                    1.0
                } else {
                    0.0
                }
            }
            Side::Left => {
                let start = knots[0];
                if (t0 < u && u <= t1) || (u <= start && t0 <= start) {
                    1.0
                } else {
                    0.0
                }
            }
        };
    }
    let mut value = 0.0;
    let d1 = knots[i + k - 1] - knots[i];
    if d1 > 0.0 {
        value += (u - knots[i]) / d1 * basis_sided(knots, i, k - 1, u, side);
    }
    let d2 = knots[i + k] - knots[i + 1];
    if d2 > 0.0 {
        value += (knots[i + k] - u) / d2 * basis_sided(knots, i + 1, k - 1, u, side);
    }
    value
}

/// m-th derivative of N_{i,k} at u, one-sided per `side`.
fn basis_derivative_sided(knots: &[f64], i: usize, k: usize, u: f64, m: usize, side: Side) -> f64 {
    if m == 0 {
        return basis_sided(knots, i, k, u, side);
    }
    if k == 1 {
        return 0.0;
    }
    let mut value = 0.0;
    let d1 = knots[i + k - 1] - knots[i];
    if d1 > 0.0 {
        value += basis_derivative_sided(knots, i, k - 1, u, m - 1, side) / d1;
    }
    let d2 = knots[i + k] - knots[i + 1];
    if d2 > 0.0 {
        value -= basis_derivative_sided(knots, i + 1, k - 1, u, m - 1, side) / d2;
    }
    (k - 1) as f64 * value
}

/// A clamped B-spline curve of order 4 (cubic).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BSplineCurve {
    controls: Vec<Point>,
    order: usize,
    knots: KnotVector,
}

impl BSplineCurve {
    pub fn new(controls: Vec<Point>, order: usize, knots: KnotVector) -> Result<Self> {
        if controls.len() < order {
            return Err(Error::TooFewControls {
                got: controls.len(),
                order,
            });
        }
        if knots.len() != controls.len() + order {
            return Err(Error::KnotCountMismatch {
                knots: knots.len(),
                controls: controls.len(),
                order,
            });
        }
        let dim = controls[0].dim();
        if let Some(bad) = controls.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: bad.dim(),
            });
        }
        Ok(BSplineCurve {
            controls,
            order,
            knots,
        })
    }

    pub fn controls(&self) -> &[Point] {
        &self.controls
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn knots(&self) -> &KnotVector {
        &self.knots
    }

    pub fn dim(&self) -> usize {
        self.controls[0].dim()
    }

    pub fn domain(&self) -> (f64, f64) {
        self.knots.domain()
    }

    fn check_domain(&self, u: f64) -> Result<()> {
        let (lo, hi) = self.domain();
        if !(lo..=hi).contains(&u) {
            return Err(Error::ParameterOutOfRange {
                value: u,
                min: lo,
                max: hi,
            });
        }
        Ok(())
    }

    /// Basis-weighted sum of the controls at u.
    pub fn eval(&self, u: f64) -> Result<Point> {
        self.check_domain(u)?;
        Ok(self.combine(|i| {
            basis_sided(self.knots.as_slice(), i, self.order, u, Side::Right)
        }))
    }

    /// m-th derivative at u, taking the one-sided limit from `side`.
    pub fn derivative(&self, u: f64, m: usize, side: Side) -> Result<Point> {
        self.check_domain(u)?;
        Ok(self.combine(|i| {
            basis_derivative_sided(self.knots.as_slice(), i, self.order, u, m, side)
        }))
    }

    fn combine(&self, weight: impl Fn(usize) -> f64) -> Point {
        let mut coords = vec![0.0; self.dim()];
        for (i, p) in self.controls.iter().enumerate() {
            let w = weight(i);
            if w != 0.0 {
                for (c, v) in coords.iter_mut().zip(p.coords()) {
                    *c += w * v;
                }
            }
        }
        Point::new(coords)
    }

    /// Uniform samples across the domain tagged with their parameter.
    pub fn sample(&self, per_span: usize) -> Result<Vec<(f64, Point)>> {
        let per_span = per_span.max(2);
        let (lo, hi) = self.domain();
        let spans = (hi - lo).round().max(1.0) as usize;
        let total = spans * (per_span - 1) + 1;
        (0..total)
            .map(|j| {
                let u = lo + (hi - lo) * j as f64 / (total - 1) as f64;
                Ok((u, self.eval(u)?))
            })
            .collect()
    }
}

/// Reads the piecewise Bezier controls as one B-spline control sequence
/// (junction duplicates dropped) and clamps a knot vector over them.
pub fn bspline_from_bezier_controls(
    pw: &PiecewiseBezier,
    bezier_exact: bool,
) -> Result<BSplineCurve> {
    let controls = pw.merged_controls();
    let knots = if bezier_exact {
        KnotVector::bezier_exact(pw.segments().len())?
    } else {
        KnotVector::clamped_uniform(controls.len(), 4)?
    };
    BSplineCurve::new(controls, 4, knots)
}

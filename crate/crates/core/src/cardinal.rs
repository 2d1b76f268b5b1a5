//! Cardinal (Catmull-Rom class) spline interpolation.
//!
//! Each segment between consecutive data points p_{k-1} and p_k is a cubic
//! with boundary conditions rho(0) = p_{k-1}, rho(1) = p_k,
//! rho'(0) = tau (p_k - p_{k-2}) and rho'(1) = tau (p_{k+1} - p_{k-1}).
//! The first and last chain points are repeated so that end segments have a
//! full four-point window.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Point, PointChain};

/// Tension scalar multiplying the neighbour-difference tangents.
/// 0.5 is the Catmull-Rom value and the default everywhere.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tension(f64);

impl Tension {
    pub fn new(tau: f64) -> Result<Self> {
        if !tau.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(Tension(tau))
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

impl Default for Tension {
    fn default() -> Self {
        Tension(0.5)
    }
}

/// One four-point window (p_{k-2}, p_{k-1}, p_k, p_{k+1}) with its tension.
/// The cubic it describes runs from p_{k-1} to p_k on u in [0, 1].
#[derive(Clone, Debug, PartialEq)]
pub struct CardinalSegment {
    controls: [Point; 4],
    tension: Tension,
}

impl CardinalSegment {
    pub fn new(controls: [Point; 4], tension: Tension) -> Result<Self> {
        let dim = controls[0].dim();
        if let Some(bad) = controls.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: bad.dim(),
            });
        }
        Ok(CardinalSegment { controls, tension })
    }

    pub fn controls(&self) -> &[Point; 4] {
        &self.controls
    }

    pub fn tension(&self) -> Tension {
        self.tension
    }

    pub fn dim(&self) -> usize {
        self.controls[0].dim()
    }

    /// Tangents at the segment ends: (tau (p_k - p_{k-2}), tau (p_{k+1} - p_{k-1})).
    pub fn tangents(&self) -> (Point, Point) {
        let tau = self.tension.value();
        let [p0, p1, p2, p3] = &self.controls;
        ((p2 - p0).scale(tau), (p3 - p1).scale(tau))
    }

    /// Polynomial coefficients (a, b, c, d) of rho(u) = a u^3 + b u^2 + c u + d,
    /// one point-valued coefficient each, from the cardinal geometry matrix.
    fn coefficients(&self) -> [Point; 4] {
        let tau = self.tension.value();
        let [p0, p1, p2, p3] = &self.controls;
        let a = &(&p0.scale(-tau) + &p1.scale(2.0 - tau))
            + &(&p2.scale(tau - 2.0) + &p3.scale(tau));
        let b = &(&p0.scale(2.0 * tau) + &p1.scale(tau - 3.0))
            + &(&p2.scale(3.0 - 2.0 * tau) + &p3.scale(-tau));
        let c = &p0.scale(-tau) + &p2.scale(tau);
        let d = p1.clone();
        [a, b, c, d]
    }

    /// Evaluates the segment at u in [0, 1].
    pub fn eval(&self, u: f64) -> Result<Point> {
        check_unit_range(u)?;
        let [a, b, c, d] = self.coefficients();
        // Horner over point-valued coefficients.
        Ok(&(&(&a.scale(u) + &b).scale(u) + &c).scale(u) + &d)
    }

    /// Analytic first derivative rho'(u) = 3 a u^2 + 2 b u + c.
    pub fn derivative(&self, u: f64) -> Result<Point> {
        check_unit_range(u)?;
        let [a, b, c, _] = self.coefficients();
        Ok(&(&a.scale(3.0 * u) + &b.scale(2.0)).scale(u) + &c)
    }
}

fn check_unit_range(u: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&u) {
        return Err(Error::ParameterOutOfRange {
            value: u,
            min: 0.0,
            max: 1.0,
        });
    }
    Ok(())
}

/// Repeats the first and last chain points so every consecutive data-point
/// pair owns a full four-point window.
pub fn extend_chain(chain: &PointChain) -> PointChain {
    let mut points = Vec::with_capacity(chain.len() + 2);
    points.push(chain[0].clone());
    points.extend(chain.points().iter().cloned());
    points.push(chain[chain.len() - 1].clone());
    PointChain::new(points).expect("extending preserves chain validity")
}

/// The cardinal spline interpolating a chain: one segment per consecutive
/// data-point pair.
#[derive(Clone, Debug)]
pub struct CardinalSpline {
    segments: Vec<CardinalSegment>,
}

impl CardinalSpline {
    pub fn interpolate(chain: &PointChain, tension: Tension) -> Result<Self> {
        let extended = extend_chain(chain);
        let segments = extended
            .points()
            .windows(4)
            .map(|w| {
                CardinalSegment::new(
                    [w[0].clone(), w[1].clone(), w[2].clone(), w[3].clone()],
                    tension,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CardinalSpline { segments })
    }

    pub fn segments(&self) -> &[CardinalSegment] {
        &self.segments
    }

    /// Samples every segment at `per_segment` uniform parameters, skipping
    /// duplicated junction points.
    pub fn sample(&self, per_segment: usize) -> Result<Vec<Point>> {
        let per_segment = per_segment.max(2);
        let mut out = Vec::with_capacity(self.segments.len() * per_segment);
        for (s, seg) in self.segments.iter().enumerate() {
            let start = if s == 0 { 0 } else { 1 };
            for j in start..per_segment {
                let u = j as f64 / (per_segment - 1) as f64;
                out.push(seg.eval(u)?);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(rows: &[&[f64]]) -> PointChain {
        PointChain::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    /// Independent oracle: the full (u^3 u^2 u 1) * M * G product, with M
    /// written out literally.
    fn matrix_product_oracle(seg: &CardinalSegment, u: f64) -> Vec<f64> {
        let t = seg.tension().value();
        let m = [
            [-t, 2.0 - t, t - 2.0, t],
            [2.0 * t, t - 3.0, 3.0 - 2.0 * t, -t],
            [-t, 0.0, t, 0.0],
            [0.0, 1.0, 0.0, 0.0],
        ];
        let uvec = [u * u * u, u * u, u, 1.0];
        let dim = seg.dim();
        let mut out = vec![0.0; dim];
        for d in 0..dim {
            for (row, urow) in m.iter().zip(uvec) {
                for (c, coeff) in row.iter().enumerate() {
                    out[d] += urow * coeff * seg.controls()[c][d];
                }
            }
        }
        out
    }

    /// Second oracle: cubic Hermite form from the stated boundary conditions.
    fn hermite_oracle(seg: &CardinalSegment, u: f64) -> Vec<f64> {
        let (m0, m1) = seg.tangents();
        let p1 = &seg.controls()[1];
        let p2 = &seg.controls()[2];
        let h00 = 2.0 * u.powi(3) - 3.0 * u * u + 1.0;
        let h10 = u.powi(3) - 2.0 * u * u + u;
        let h01 = -2.0 * u.powi(3) + 3.0 * u * u;
        let h11 = u.powi(3) - u * u;
        (0..seg.dim())
            .map(|d| h00 * p1[d] + h10 * m0[d] + h01 * p2[d] + h11 * m1[d])
            .collect()
    }

    #[test]
    fn extend_duplicates_ends() {
        let c = chain(&[&[0.0, 0.0], &[1.0, 1.0]]);
        let e = extend_chain(&c);
        assert_eq!(e.len(), 4);
        assert_eq!(e[0], e[1]);
        assert_eq!(e[2], e[3]);

        let c = chain(&[&[0.0, 0.0], &[1.0, 0.0], &[2.0, 0.0]]);
        let e = extend_chain(&c);
        assert_eq!(e.len(), 5);
        assert_eq!(e[0].coords(), &[0.0, 0.0]);
        assert_eq!(e[1].coords(), &[0.0, 0.0]);
        assert_eq!(e[4].coords(), &[2.0, 0.0]);
    }

    #[test]
    fn single_point_chain_rejected() {
        assert!(PointChain::from_rows(vec![vec![0.0, 0.0]]).is_err());
    }

    #[test]
    fn tangents_formula() {
        let seg = CardinalSegment::new(
            [
                [0.0, 0.0].into(),
                [1.0, 1.0].into(),
                [2.0, 2.0].into(),
                [3.0, 3.0].into(),
            ],
            Tension::new(0.5).unwrap(),
        )
        .unwrap();
        let (m0, m1) = seg.tangents();
        assert_eq!(m0.coords(), &[1.0, 1.0]);
        assert_eq!(m1.coords(), &[1.0, 1.0]);
    }

    #[test]
    fn tangents_collinear_window() {
        let seg = CardinalSegment::new(
            [
                [0.0, 0.0].into(),
                [1.0, 0.0].into(),
                [2.0, 0.0].into(),
                [3.0, 0.0].into(),
            ],
            Tension::default(),
        )
        .unwrap();
        let (m0, m1) = seg.tangents();
        assert_eq!(m0.coords(), &[1.0, 0.0]);
        assert_eq!(m1.coords(), &[1.0, 0.0]);
    }

    #[test]
    fn zero_tension_zero_tangents() {
        let seg = CardinalSegment::new(
            [
                [0.0, 0.0].into(),
                [1.0, 5.0].into(),
                [2.0, -3.0].into(),
                [3.0, 0.0].into(),
            ],
            Tension::new(0.0).unwrap(),
        )
        .unwrap();
        let (m0, m1) = seg.tangents();
        assert_eq!(m0.coords(), &[0.0, 0.0]);
        assert_eq!(m1.coords(), &[0.0, 0.0]);
    }

    #[test]
    fn eval_hits_endpoints() {
        let seg = CardinalSegment::new(
            [
                [0.0, 1.0].into(),
                [1.0, -2.0].into(),
                [2.0, 4.0].into(),
                [5.0, 0.0].into(),
            ],
            Tension::default(),
        )
        .unwrap();
        let start = seg.eval(0.0).unwrap();
        let end = seg.eval(1.0).unwrap();
        assert!(start.dist2(&seg.controls()[1]) < 1e-24);
        assert!(end.dist2(&seg.controls()[2]) < 1e-24);
    }

    #[test]
    fn eval_collinear_midpoint() {
        let seg = CardinalSegment::new(
            [
                [0.0, 0.0].into(),
                [1.0, 0.0].into(),
                [2.0, 0.0].into(),
                [3.0, 0.0].into(),
            ],
            Tension::default(),
        )
        .unwrap();
        let p = seg.eval(0.5).unwrap();
        assert!((p[0] - 1.5).abs() < 1e-12);
        assert!(p[1].abs() < 1e-12);
    }

    #[test]
    fn eval_matches_matrix_product_oracle() {
        let windows: Vec<[Point; 4]> = vec![
            [
                [0.0, 0.0].into(),
                [0.0, 0.0].into(),
                [1.0, 1.0].into(),
                [1.0, 1.0].into(),
            ],
            [
                [0.0, 2.0].into(),
                [1.0, -1.0].into(),
                [3.0, 0.5].into(),
                [4.0, 4.0].into(),
            ],
        ];
        for controls in windows {
            let seg = CardinalSegment::new(controls, Tension::default()).unwrap();
            for j in 0..=10 {
                let u = j as f64 / 10.0;
                let got = seg.eval(u).unwrap();
                let want = matrix_product_oracle(&seg, u);
                let want_h = hermite_oracle(&seg, u);
                for d in 0..seg.dim() {
                    assert!((got[d] - want[d]).abs() < 1e-12, "u={u} d={d}");
                    assert!((got[d] - want_h[d]).abs() < 1e-12, "hermite u={u} d={d}");
                }
            }
        }
    }

    #[test]
    fn derivative_matches_boundary_conditions() {
        let seg = CardinalSegment::new(
            [
                [0.0, 2.0].into(),
                [1.0, -1.0].into(),
                [3.0, 0.5].into(),
                [4.0, 4.0].into(),
            ],
            Tension::default(),
        )
        .unwrap();
        let (m0, m1) = seg.tangents();
        let d0 = seg.derivative(0.0).unwrap();
        let d1 = seg.derivative(1.0).unwrap();
        assert!(d0.dist2(&m0) < 1e-24);
        assert!(d1.dist2(&m1) < 1e-24);
    }

    #[test]
    fn derivative_matches_central_differences() {
        let c = chain(&[
            &[0.2, -1.0],
            &[1.0, 3.0],
            &[2.5, 2.0],
            &[4.0, -2.0],
            &[5.0, 0.5],
        ]);
        let spline = CardinalSpline::interpolate(&c, Tension::default()).unwrap();
        let h = 1e-6;
        for (s, seg) in spline.segments().iter().enumerate() {
            for j in 0..10 {
                let u = 0.05 + 0.1 * j as f64;
                let analytic = seg.derivative(u).unwrap();
                let lo = seg.eval(u - h).unwrap();
                let hi = seg.eval(u + h).unwrap();
                for d in 0..2 {
                    let fd = (hi[d] - lo[d]) / (2.0 * h);
                    let scale = analytic[d].abs().max(1.0);
                    assert!(
                        (analytic[d] - fd).abs() / scale < 1e-5,
                        "segment {s} u={u} d={d}"
                    );
                }
            }
        }
    }

    #[test]
    fn parameter_out_of_range_rejected() {
        let seg = CardinalSegment::new(
            [
                [0.0, 0.0].into(),
                [1.0, 0.0].into(),
                [2.0, 0.0].into(),
                [3.0, 0.0].into(),
            ],
            Tension::default(),
        )
        .unwrap();
        assert!(seg.eval(-0.001).is_err());
        assert!(seg.eval(1.001).is_err());
    }

    #[test]
    fn spline_interpolates_all_points() {
        let c = chain(&[&[0.0, 0.0], &[1.0, 2.0], &[2.0, -1.0], &[3.0, 3.0]]);
        let spline = CardinalSpline::interpolate(&c, Tension::default()).unwrap();
        assert_eq!(spline.segments().len(), 3);
        for (s, seg) in spline.segments().iter().enumerate() {
            assert!(seg.eval(0.0).unwrap().dist2(&c[s]) < 1e-18);
            assert!(seg.eval(1.0).unwrap().dist2(&c[s + 1]) < 1e-18);
        }
    }

    #[test]
    fn c1_across_junctions() {
        let c = chain(&[&[0.0, 0.0], &[1.0, 2.0], &[2.0, -1.0], &[3.0, 3.0], &[4.0, 0.0]]);
        let spline = CardinalSpline::interpolate(&c, Tension::default()).unwrap();
        for pair in spline.segments().windows(2) {
            let end = pair[0].derivative(1.0).unwrap();
            let start = pair[1].derivative(0.0).unwrap();
            assert!(end.dist2(&start) < 1e-18);
        }
    }

    #[test]
    fn eval_commutes_with_projection() {
        let seg3 = CardinalSegment::new(
            [
                [0.0, 2.0, 1.0].into(),
                [1.0, -1.0, 0.5].into(),
                [3.0, 0.5, -2.0].into(),
                [4.0, 4.0, 1.5].into(),
            ],
            Tension::default(),
        )
        .unwrap();
        for j in 0..=8 {
            let u = j as f64 / 8.0;
            let full = seg3.eval(u).unwrap();
            for d in 0..3 {
                let coord_controls: [Point; 4] = [
                    [seg3.controls()[0][d], 0.0].into(),
                    [seg3.controls()[1][d], 0.0].into(),
                    [seg3.controls()[2][d], 0.0].into(),
                    [seg3.controls()[3][d], 0.0].into(),
                ];
                let seg1 = CardinalSegment::new(coord_controls, Tension::default()).unwrap();
                let single = seg1.eval(u).unwrap();
                assert!((full[d] - single[0]).abs() < 1e-12);
            }
        }
    }
}

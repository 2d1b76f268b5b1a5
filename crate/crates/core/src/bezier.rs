//! Cubic Bezier segments and piecewise chains of them, plus the conversion
//! from cardinal segments via the shared boundary conditions.
//!
//! A cardinal segment and the cubic Bezier with the same endpoints and end
//! tangents are the same cubic, so the conversion is exact: the inner
//! controls are the endpoints displaced by a third of the end tangents.

use serde::{Deserialize, Serialize};

use crate::cardinal::{extend_chain, Tension};
use crate::error::{Error, Result};
use crate::geom::{Point, PointChain};

/// Four control points of one cubic Bezier piece.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BezierSegment {
    controls: [Point; 4],
}

impl BezierSegment {
    pub fn new(controls: [Point; 4]) -> Result<Self> {
        let dim = controls[0].dim();
        if let Some(bad) = controls.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: bad.dim(),
            });
        }
        Ok(BezierSegment { controls })
    }

    pub fn controls(&self) -> &[Point; 4] {
        &self.controls
    }

    pub fn dim(&self) -> usize {
        self.controls[0].dim()
    }

    /// Evaluates at u in [0, 1] by de Casteljau subdivision.
    pub fn eval(&self, u: f64) -> Result<Point> {
        check_unit_range(u)?;
        let [p0, p1, p2, p3] = &self.controls;
        let a = lerp(p0, p1, u);
        let b = lerp(p1, p2, u);
        let c = lerp(p2, p3, u);
        let ab = lerp(&a, &b, u);
        let bc = lerp(&b, &c, u);
        Ok(lerp(&ab, &bc, u))
    }

    /// Analytic derivative: b'(u) = 3[(1-u)^2 (P1-P0) + 2(1-u)u (P2-P1) + u^2 (P3-P2)].
    pub fn derivative(&self, u: f64) -> Result<Point> {
        check_unit_range(u)?;
        let [p0, p1, p2, p3] = &self.controls;
        let v = 1.0 - u;
        let d = &(&(p1 - p0).scale(v * v) + &(p2 - p1).scale(2.0 * v * u))
            + &(p3 - p2).scale(u * u);
        Ok(d.scale(3.0))
    }
}

fn lerp(a: &Point, b: &Point, u: f64) -> Point {
    a + &(b - a).scale(u)
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

/// An ordered run of cubic Bezier pieces whose junction controls coincide
/// exactly (bitwise): the last control of a piece is the first of the next.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PiecewiseBezier {
    segments: Vec<BezierSegment>,
}

impl PiecewiseBezier {
    pub fn new(segments: Vec<BezierSegment>) -> Result<Self> {
        if segments.is_empty() {
            return Err(Error::ChainTooShort { got: 0, needed: 1 });
        }
        let dim = segments[0].dim();
        for (s, pair) in segments.windows(2).enumerate() {
            if pair[1].dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: pair[1].dim(),
                });
            }
            if pair[0].controls()[3] != pair[1].controls()[0] {
                return Err(Error::JunctionMismatch(s, s + 1));
            }
        }
        Ok(PiecewiseBezier { segments })
    }

    pub fn segments(&self) -> &[BezierSegment] {
        &self.segments
    }

    pub fn dim(&self) -> usize {
        self.segments[0].dim()
    }

    /// Domain of the global parameter: [0, number of segments].
    pub fn domain(&self) -> (f64, f64) {
        (0.0, self.segments.len() as f64)
    }

    /// Evaluates at a global parameter t in [0, segments]; integer t lands on
    /// the junction points.
    pub fn eval(&self, t: f64) -> Result<Point> {
        let (seg, u) = self.split_parameter(t)?;
        self.segments[seg].eval(u)
    }

    fn split_parameter(&self, t: f64) -> Result<(usize, f64)> {
        let end = self.segments.len() as f64;
        if !(0.0..=end).contains(&t) {
            return Err(Error::ParameterOutOfRange {
                value: t,
                min: 0.0,
                max: end,
            });
        }
        let seg = (t.floor() as usize).min(self.segments.len() - 1);
        Ok((seg, t - seg as f64))
    }

    /// Control points concatenated with junction duplicates dropped:
    /// P_0 .. P_{3S} with segment s starting at index 3s.
    pub fn merged_controls(&self) -> Vec<Point> {
        let mut out = Vec::with_capacity(self.segments.len() * 3 + 1);
        out.push(self.segments[0].controls()[0].clone());
        for seg in &self.segments {
            out.extend(seg.controls()[1..].iter().cloned());
        }
        out
    }

    /// Uniform samples, `per_segment` per piece with shared junctions
    /// emitted once, tagged with their global parameter.
    pub fn sample(&self, per_segment: usize) -> Result<Vec<(f64, Point)>> {
        let per_segment = per_segment.max(2);
        let mut out = Vec::with_capacity(self.segments.len() * per_segment);
        for (s, seg) in self.segments.iter().enumerate() {
            let start = if s == 0 { 0 } else { 1 };
            for j in start..per_segment {
                let u = j as f64 / (per_segment - 1) as f64;
                out.push((s as f64 + u, seg.eval(u)?));
            }
        }
        Ok(out)
    }
}

/// Converts a data chain into the piecewise cubic Bezier matching its
/// cardinal spline exactly: per window, P0 = p_{k-1}, P3 = p_k,
/// P1 = P0 + (tau/3)(p_k - p_{k-2}), P2 = P3 - (tau/3)(p_{k+1} - p_{k-1}).
pub fn cardinal_to_bezier(chain: &PointChain, tension: Tension) -> Result<PiecewiseBezier> {
    let extended = extend_chain(chain);
    let third = tension.value() / 3.0;
    let segments = extended
        .points()
        .windows(4)
        .map(|w| {
            let p0 = w[1].clone();
            let p3 = w[2].clone();
            let p1 = &p0 + &(&w[2] - &w[0]).scale(third);
            let p2 = &p3 - &(&w[3] - &w[1]).scale(third);
            BezierSegment::new([p0, p1, p2, p3])
        })
        .collect::<Result<Vec<_>>>()?;
    PiecewiseBezier::new(segments)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cardinal::CardinalSegment;

    fn chain(rows: &[&[f64]]) -> PointChain {
        PointChain::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    /// Independent oracle: direct Bernstein sum.
    fn bernstein_oracle(seg: &BezierSegment, u: f64) -> Vec<f64> {
        let v = 1.0 - u;
        let w = [v * v * v, 3.0 * v * v * u, 3.0 * v * u * u, u * u * u];
        (0..seg.dim())
            .map(|d| {
                w.iter()
                    .zip(seg.controls())
                    .map(|(wi, p)| wi * p[d])
                    .sum()
            })
            .collect()
    }

    #[test]
    fn eval_endpoints() {
        let seg = BezierSegment::new([
            [0.0, 0.0].into(),
            [0.0, 1.0].into(),
            [1.0, 1.0].into(),
            [1.0, 0.0].into(),
        ])
        .unwrap();
        assert_eq!(seg.eval(0.0).unwrap(), seg.controls()[0]);
        assert_eq!(seg.eval(1.0).unwrap(), seg.controls()[3]);
    }

    #[test]
    fn eval_midpoint_frozen() {
        // Bernstein weights at u = 1/2 are 1/8, 3/8, 3/8, 1/8.
        let seg = BezierSegment::new([
            [0.0, 0.0].into(),
            [0.0, 1.0].into(),
            [1.0, 1.0].into(),
            [1.0, 0.0].into(),
        ])
        .unwrap();
        let p = seg.eval(0.5).unwrap();
        assert!((p[0] - 0.5).abs() < 1e-15);
        assert!((p[1] - 0.75).abs() < 1e-15);
    }

    #[test]
    fn eval_matches_bernstein_sum() {
        let seg = BezierSegment::new([
            [0.3, -1.0].into(),
            [1.4, 2.0].into(),
            [2.0, 2.5].into(),
            [4.0, -0.5].into(),
        ])
        .unwrap();
        for j in 0..=20 {
            let u = j as f64 / 20.0;
            let got = seg.eval(u).unwrap();
            let want = bernstein_oracle(&seg, u);
            for d in 0..2 {
                assert!((got[d] - want[d]).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn constant_segment_stays_constant() {
        let c: Point = [2.0, -3.0].into();
        let seg =
            BezierSegment::new([c.clone(), c.clone(), c.clone(), c.clone()]).unwrap();
        for j in 0..=10 {
            let u = j as f64 / 10.0;
            assert_eq!(seg.eval(u).unwrap(), c);
        }
    }

    #[test]
    fn derivative_at_ends() {
        let seg = BezierSegment::new([
            [0.0, 0.0].into(),
            [1.0, 0.0].into(),
            [2.0, 0.0].into(),
            [3.0, 0.0].into(),
        ])
        .unwrap();
        assert_eq!(seg.derivative(0.0).unwrap().coords(), &[3.0, 0.0]);
        assert_eq!(seg.derivative(1.0).unwrap().coords(), &[3.0, 0.0]);
    }

    #[test]
    fn derivative_matches_central_differences() {
        let seg = BezierSegment::new([
            [0.3, -1.0].into(),
            [1.4, 2.0].into(),
            [2.0, 2.5].into(),
            [4.0, -0.5].into(),
        ])
        .unwrap();
        let h = 1e-6;
        let u = 0.3;
        let analytic = seg.derivative(u).unwrap();
        let lo = seg.eval(u - h).unwrap();
        let hi = seg.eval(u + h).unwrap();
        for d in 0..2 {
            let fd = (hi[d] - lo[d]) / (2.0 * h);
            let scale = analytic[d].abs().max(1.0);
            assert!((analytic[d] - fd).abs() / scale < 1e-5);
        }
    }

    #[test]
    fn conversion_frozen_controls() {
        // Interior window (0,0),(1,1),(2,1),(3,0) at tau = 1/2.
        let c = chain(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 1.0], &[3.0, 0.0]]);
        let pw = cardinal_to_bezier(&c, Tension::default()).unwrap();
        let seg = &pw.segments()[1]; // the (1,1) -> (2,1) piece
        let want: [Point; 4] = [
            [1.0, 1.0].into(),
            [4.0 / 3.0, 7.0 / 6.0].into(),
            [5.0 / 3.0, 7.0 / 6.0].into(),
            [2.0, 1.0].into(),
        ];
        for (got, want) in seg.controls().iter().zip(&want) {
            assert!(got.dist2(want) < 1e-28);
        }
    }

    #[test]
    fn conversion_two_point_chain() {
        let c = chain(&[&[0.0, 0.0], &[3.0, 0.0]]);
        let pw = cardinal_to_bezier(&c, Tension::default()).unwrap();
        assert_eq!(pw.segments().len(), 1);
        let ctrl = pw.segments()[0].controls();
        assert_eq!(ctrl[0].coords(), &[0.0, 0.0]);
        assert_eq!(ctrl[1].coords(), &[0.5, 0.0]);
        assert_eq!(ctrl[2].coords(), &[2.5, 0.0]);
        assert_eq!(ctrl[3].coords(), &[3.0, 0.0]);
    }

    #[test]
    fn conversion_collinear_controls_stay_on_axis() {
        let c = chain(&[&[0.0, 0.0], &[1.0, 0.0], &[2.0, 0.0], &[3.0, 0.0]]);
        let pw = cardinal_to_bezier(&c, Tension::default()).unwrap();
        for seg in pw.segments() {
            for p in seg.controls() {
                assert_eq!(p[1], 0.0);
            }
        }
    }

    #[test]
    fn conversion_matches_cardinal_everywhere() {
        let c = chain(&[
            &[0.0, 0.0],
            &[1.0, 2.0],
            &[2.0, -1.0],
            &[3.5, 3.0],
            &[4.0, 0.0],
        ]);
        let pw = cardinal_to_bezier(&c, Tension::default()).unwrap();
        let extended = extend_chain(&c);
        for (s, w) in extended.points().windows(4).enumerate() {
            let card = CardinalSegment::new(
                [w[0].clone(), w[1].clone(), w[2].clone(), w[3].clone()],
                Tension::default(),
            )
            .unwrap();
            for j in 0..=100 {
                let u = j as f64 / 100.0;
                let a = pw.segments()[s].eval(u).unwrap();
                let b = card.eval(u).unwrap();
                assert!(a.dist2(&b).sqrt() <= 1e-9, "segment {s}, u={u}");
            }
        }
    }

    #[test]
    fn repeated_points_yield_coincident_controls() {
        let c = chain(&[&[0.0, 0.0], &[1.0, 1.0], &[1.0, 1.0], &[2.0, 0.0]]);
        let pw = cardinal_to_bezier(&c, Tension::default()).unwrap();
        assert_eq!(pw.segments().len(), 3);
        // The degenerate middle piece starts and ends at the repeated point.
        let mid = pw.segments()[1].controls();
        assert_eq!(mid[0], mid[3]);
    }

    #[test]
    fn junction_c1_holds() {
        let c = chain(&[&[0.0, 0.0], &[1.0, 2.0], &[2.0, -1.0], &[3.0, 3.0]]);
        let pw = cardinal_to_bezier(&c, Tension::default()).unwrap();
        for pair in pw.segments().windows(2) {
            let out = pair[0].derivative(1.0).unwrap();
            let inc = pair[1].derivative(0.0).unwrap();
            assert!(out.dist2(&inc).sqrt() <= 1e-9);
        }
    }

    #[test]
    fn piecewise_rejects_junction_mismatch() {
        let a = BezierSegment::new([
            [0.0, 0.0].into(),
            [1.0, 0.0].into(),
            [2.0, 0.0].into(),
            [3.0, 0.0].into(),
        ])
        .unwrap();
        let b = BezierSegment::new([
            [3.0, 0.1].into(),
            [4.0, 0.0].into(),
            [5.0, 0.0].into(),
            [6.0, 0.0].into(),
        ])
        .unwrap();
        assert!(matches!(
            PiecewiseBezier::new(vec![a, b]),
            Err(Error::JunctionMismatch(0, 1))
        ));
    }

    #[test]
    fn merged_controls_drop_junction_duplicates() {
        let c = chain(&[&[0.0, 0.0], &[1.0, 2.0], &[2.0, -1.0]]);
        let pw = cardinal_to_bezier(&c, Tension::default()).unwrap();
        let merged = pw.merged_controls();
        assert_eq!(merged.len(), 7);
        assert_eq!(merged[0], pw.segments()[0].controls()[0]);
        assert_eq!(merged[3], pw.segments()[1].controls()[0]);
        assert_eq!(merged[6], pw.segments()[1].controls()[3]);
    }

    #[test]
    fn global_parameter_sampling() {
        let c = chain(&[&[0.0, 0.0], &[1.0, 2.0], &[2.0, -1.0]]);
        let pw = cardinal_to_bezier(&c, Tension::default()).unwrap();
        let samples = pw.sample(5).unwrap();
        assert_eq!(samples.len(), 9);
        assert_eq!(samples[0].0, 0.0);
        assert_eq!(samples.last().unwrap().0, 2.0);
        // Segment-endpoint samples reproduce the data points.
        assert!(samples[0].1.dist2(&c[0]) < 1e-24);
        assert!(samples[4].1.dist2(&c[1]) < 1e-24);
        assert!(samples[8].1.dist2(&c[2]) < 1e-24);
    }
}

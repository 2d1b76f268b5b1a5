//! Dimension-generic points, ordered point chains, and projection of a chain
//! in R^n onto its coordinate planes over a shared independent axis.

use std::ops::{Add, Index, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point (or displacement vector) in R^d.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point {
    coords: Vec<f64>,
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Self {
        Point { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn is_finite(&self) -> bool {
        self.coords.iter().all(|c| c.is_finite())
    }

    pub fn dot(&self, other: &Point) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Squared Euclidean distance to `other`.
    pub fn dist2(&self, other: &Point) -> f64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b) * (a - b))
            .sum()
    }

    pub fn scale(&self, factor: f64) -> Point {
        Point::new(self.coords.iter().map(|c| c * factor).collect())
    }
}

impl From<&[f64]> for Point {
    fn from(coords: &[f64]) -> Self {
        Point::new(coords.to_vec())
    }
}

impl<const N: usize> From<[f64; N]> for Point {
    fn from(coords: [f64; N]) -> Self {
        Point::new(coords.to_vec())
    }
}

impl Index<usize> for Point {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.coords[i]
    }
}

impl Add for &Point {
    type Output = Point;

    fn add(self, rhs: &Point) -> Point {
        debug_assert_eq!(self.dim(), rhs.dim());
        Point::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Point {
    type Output = Point;

    fn sub(self, rhs: &Point) -> Point {
        debug_assert_eq!(self.dim(), rhs.dim());
        Point::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Mul<f64> for &Point {
    type Output = Point;

    fn mul(self, rhs: f64) -> Point {
        self.scale(rhs)
    }
}

/// An ordered chain of points sharing one dimension. Order is significant:
/// the fit follows the chain exactly as given, no reordering ever happens.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointChain {
    points: Vec<Point>,
    dim: usize,
}

impl PointChain {
    /// Builds a chain, validating length, dimension consistency and finiteness.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::ChainTooShort {
                got: points.len(),
                needed: 2,
            });
        }
        let dim = points[0].dim();
        if dim < 2 {
            return Err(Error::DimensionTooLow { got: dim, needed: 2 });
        }
        for p in &points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
            if !p.is_finite() {
                return Err(Error::NonFinite);
            }
        }
        Ok(PointChain { points, dim })
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        PointChain::new(rows.into_iter().map(Point::new).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// The subchain at the given (strictly increasing) indices.
    pub fn subchain(&self, indices: &[usize]) -> Result<PointChain> {
        let points = indices
            .iter()
            .map(|&i| {
                self.points
                    .get(i)
                    .cloned()
                    .ok_or(Error::InvalidSelection(format!("index {i} out of range")))
            })
            .collect::<Result<Vec<_>>>()?;
        PointChain::new(points)
    }
}

impl Index<usize> for PointChain {
    type Output = Point;

    fn index(&self, i: usize) -> &Point {
        &self.points[i]
    }
}

/// A chain reduced to one coordinate plane: the shared independent
/// coordinate paired with a single dependent coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct PlanarChain {
    independent: Vec<f64>,
    dependent: Vec<f64>,
    /// (independent axis id, dependent axis id) in the source chain.
    axes: (usize, usize),
}

impl PlanarChain {
    pub fn new(independent: Vec<f64>, dependent: Vec<f64>, axes: (usize, usize)) -> Result<Self> {
        if independent.len() != dependent.len() {
            return Err(Error::DimensionMismatch {
                expected: independent.len(),
                got: dependent.len(),
            });
        }
        if independent.len() < 2 {
            return Err(Error::ChainTooShort {
                got: independent.len(),
                needed: 2,
            });
        }
        Ok(PlanarChain {
            independent,
            dependent,
            axes,
        })
    }

    pub fn independent(&self) -> &[f64] {
        &self.independent
    }

    pub fn dependent(&self) -> &[f64] {
        &self.dependent
    }

    pub fn axes(&self) -> (usize, usize) {
        self.axes
    }

    pub fn len(&self) -> usize {
        self.independent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.independent.is_empty()
    }

    /// The plane as a 2D chain with coordinate 0 = independent, 1 = dependent.
    pub fn to_chain(&self) -> PointChain {
        let points = self
            .independent
            .iter()
            .zip(&self.dependent)
            .map(|(&i, &d)| Point::new(vec![i, d]))
            .collect();
        PointChain::new(points).expect("planar chain is a valid 2D chain")
    }
}

/// Splits an R^n chain (n >= 3) into its n-1 coordinate planes over the
/// chosen independent axis. Planes are ordered by ascending dependent axis;
/// point order is preserved in every plane.
pub fn project_to_planes(chain: &PointChain, independent_axis: usize) -> Result<Vec<PlanarChain>> {
    if chain.dim() < 3 {
        return Err(Error::DimensionTooLow {
            got: chain.dim(),
            needed: 3,
        });
    }
    if independent_axis >= chain.dim() {
        return Err(Error::AxisOutOfRange {
            axis: independent_axis,
            dim: chain.dim(),
        });
    }
    let independent: Vec<f64> = chain.points().iter().map(|p| p[independent_axis]).collect();
    (0..chain.dim())
        .filter(|&axis| axis != independent_axis)
        .map(|axis| {
            let dependent = chain.points().iter().map(|p| p[axis]).collect();
            PlanarChain::new(independent.clone(), dependent, (independent_axis, axis))
        })
        .collect()
}

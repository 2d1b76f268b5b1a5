//! Shared fixtures for the integration and acceptance suites.
#![allow(dead_code)] // each test target uses its own subset

use splinemerge::PointChain;

pub fn chain(rows: &[[f64; 2]]) -> PointChain {
    PointChain::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

/// 12-point zigzag with varied amplitudes.
pub fn zigzag12() -> PointChain {
    chain(&[
        [0.0, 0.0],
        [1.0, 1.0],
        [2.0, -0.5],
        [3.0, 2.0],
        [4.0, 0.0],
        [5.0, 1.5],
        [6.0, -1.0],
        [7.0, 0.5],
        [8.0, 2.5],
        [9.0, -0.25],
        [10.0, 1.0],
        [11.0, 0.0],
    ])
}

/// 9-point zigzag used against the exhaustive dominant-point oracle.
pub fn zigzag9() -> PointChain {
    chain(&[
        [0.0, 0.0],
        [1.0, 1.0],
        [2.0, 0.0],
        [3.0, 2.0],
        [4.0, 0.0],
        [5.0, 1.5],
        [6.0, 0.0],
        [7.0, 0.5],
        [8.0, 0.0],
    ])
}

/// Square wave with vertical legs.
pub fn square_wave() -> PointChain {
    chain(&[
        [0.0, 0.0],
        [1.0, 0.0],
        [1.0, 1.0],
        [2.0, 1.0],
        [2.0, 0.0],
        [3.0, 0.0],
    ])
}

/// Smooth wave sampled from a damped sine.
pub fn wave() -> PointChain {
    let rows: Vec<Vec<f64>> = (0..12)
        .map(|i| {
            let t = i as f64 * 0.6;
            vec![t, (1.5 * t).sin() * (-0.15 * t).exp() * 2.0]
        })
        .collect();
    PointChain::from_rows(rows).unwrap()
}

/// Planar fixture corpus for the property-style criteria.
pub fn corpus_2d() -> Vec<(&'static str, PointChain)> {
    vec![
        ("zigzag12", zigzag12()),
        ("zigzag9", zigzag9()),
        ("square_wave", square_wave()),
        ("wave", wave()),
    ]
}

/// 10 uniform samples of the helix (cos t, t, sin t).
pub fn helix10() -> PointChain {
    let rows: Vec<Vec<f64>> = (0..10)
        .map(|i| {
            let t = i as f64 / 9.0 * std::f64::consts::TAU;
            vec![t.cos(), t, t.sin()]
        })
        .collect();
    PointChain::from_rows(rows).unwrap()
}

/// An 8-point curve in R^4 over independent axis 0.
pub fn fixture_4d() -> PointChain {
    let rows: Vec<Vec<f64>> = (0..8)
        .map(|i| {
            let t = i as f64 * 0.7;
            vec![t, t.sin(), t.cos(), 0.25 * t * t - t]
        })
        .collect();
    PointChain::from_rows(rows).unwrap()
}

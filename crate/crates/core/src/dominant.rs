//! Dominant-point selection: rank chain vertices by turn angle, seed a
//! selection of a requested size, and refine it with a select/deselect local
//! search that minimizes the chord-projection square error.
//!
//! The fitted curve a selection is scored against is the piecewise Bezier
//! built on the dominant subchain alone, one piece per consecutive dominant
//! pair. Every skipped point is mapped onto its gap's piece at the parameter
//! given by projecting it onto the chord between the two dominant points.

use crate::bezier::{cardinal_to_bezier, BezierSegment, PiecewiseBezier};
use crate::cardinal::Tension;
use crate::error::{Error, Result};
use crate::geom::{Point, PointChain};

/// Tier of a selected point within the initial-guess heuristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tier {
    /// Ranked into the selection by its turn angle.
    Primary,
    /// An immediate chain neighbour of a primary.
    Support,
    /// Fills the remaining slots in sorted-angle order; also the label of
    /// the always-included chain endpoints.
    Secondary,
}

/// Turn angle of one interior vertex. Endpoints have none.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TurnAngleEntry {
    pub index: usize,
    pub angle: f64,
}

/// A dominant subset of a chain: strictly increasing indices that always
/// include both endpoints, with the tier each entry was selected under and
/// the square error of the fit over the subset.
#[derive(Clone, Debug, PartialEq)]
pub struct DominantSelection {
    indices: Vec<usize>,
    tiers: Vec<Tier>,
    m1: usize,
    m2: usize,
    error: f64,
}

impl DominantSelection {
    pub(crate) fn from_parts(
        indices: Vec<usize>,
        tiers: Vec<Tier>,
        m1: usize,
        m2: usize,
        error: f64,
    ) -> Self {
        DominantSelection {
            indices,
            tiers,
            m1,
            m2,
            error,
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn tiers(&self) -> &[Tier] {
        &self.tiers
    }

    pub fn m(&self) -> usize {
        self.indices.len()
    }

    /// Number of primary entries actually selected.
    pub fn m1(&self) -> usize {
        self.m1
    }

    /// Number of support entries actually selected.
    pub fn m2(&self) -> usize {
        self.m2
    }

    pub fn error(&self) -> f64 {
        self.error
    }
}

/// Exterior angle at `cur`: pi minus the angle between `prev - cur` and
/// `next - cur`, in [0, pi]. Collinear pass-through gives 0, a full
/// reversal gives pi.
pub fn turn_angle(prev: &Point, cur: &Point, next: &Point) -> Result<f64> {
    let fs = prev - cur;
    let ts = next - cur;
    let nf = fs.norm();
    let nt = ts.norm();
    if nf == 0.0 || nt == 0.0 {
        return Err(Error::ZeroLengthLeg);
    }
    let cos = (fs.dot(&ts) / (nf * nt)).clamp(-1.0, 1.0);
    Ok(std::f64::consts::PI - cos.acos())
}

/// Turn angles for every interior vertex of the chain.
pub fn chain_turn_angles(chain: &PointChain) -> Result<Vec<TurnAngleEntry>> {
    (1..chain.len() - 1)
        .map(|i| {
            Ok(TurnAngleEntry {
                index: i,
                angle: turn_angle(&chain[i - 1], &chain[i], &chain[i + 1])?,
            })
        })
        .collect()
}

/// Sorts entries by descending angle, ties by ascending index.
pub fn sort_by_angle(mut entries: Vec<TurnAngleEntry>) -> Vec<TurnAngleEntry> {
    entries.sort_by(|a, b| b.angle.total_cmp(&a.angle).then(a.index.cmp(&b.index)));
    entries
}

/// Maps a skipped point onto a fitted piece: the parameter is the clamped
/// ratio of the point's projection onto the chord between the two dominant
/// points to the chord length.
pub fn map_to_curve(
    pt: &Point,
    d_from: &Point,
    d_to: &Point,
    piece: &BezierSegment,
) -> Result<(f64, Point)> {
    let chord = d_to - d_from;
    let len2 = chord.dot(&chord);
    if len2 == 0.0 {
        return Err(Error::CoincidentChord);
    }
    let t = ((pt - d_from).dot(&chord) / len2).clamp(0.0, 1.0);
    Ok((t, piece.eval(t)?))
}

/// Per-gap breakdown of the square error of a selection.
#[derive(Clone, Debug, PartialEq)]
pub struct GapErrors {
    /// Summed squared distances per gap between consecutive dominant points.
    pub per_gap: Vec<f64>,
    /// (chain index, squared distance) of every skipped point, per gap.
    pub per_point: Vec<Vec<(usize, f64)>>,
    pub total: f64,
}

/// Scores an index selection against a fitted piecewise Bezier with one
/// piece per consecutive dominant pair.
pub fn gap_errors(
    chain: &PointChain,
    indices: &[usize],
    fitted: &PiecewiseBezier,
) -> Result<GapErrors> {
    validate_indices(chain, indices)?;
    if fitted.segments().len() != indices.len() - 1 {
        return Err(Error::InvalidSelection(format!(
            "fitted curve has {} pieces for {} gaps",
            fitted.segments().len(),
            indices.len() - 1
        )));
    }
    let mut per_gap = Vec::with_capacity(indices.len() - 1);
    let mut per_point = Vec::with_capacity(indices.len() - 1);
    let mut total = 0.0;
    for (g, pair) in indices.windows(2).enumerate() {
        let (a, b) = (pair[0], pair[1]);
        let mut gap_sum = 0.0;
        let mut points = Vec::new();
        for k in a + 1..b {
            let (_, mapped) = map_to_curve(&chain[k], &chain[a], &chain[b], &fitted.segments()[g])?;
            let d2 = mapped.dist2(&chain[k]);
            gap_sum += d2;
            points.push((k, d2));
        }
        total += gap_sum;
        per_gap.push(gap_sum);
        per_point.push(points);
    }
    Ok(GapErrors {
        per_gap,
        per_point,
        total,
    })
}

/// Total square error of a selection (the sum over all gaps).
pub fn square_error(
    chain: &PointChain,
    selection: &DominantSelection,
    fitted: &PiecewiseBezier,
) -> Result<f64> {
    Ok(gap_errors(chain, selection.indices(), fitted)?.total)
}

fn validate_indices(chain: &PointChain, indices: &[usize]) -> Result<()> {
    if indices.len() < 2 {
        return Err(Error::InvalidSelection(format!(
            "need at least 2 dominant points, got {}",
            indices.len()
        )));
    }
    if indices[0] != 0 || *indices.last().unwrap() != chain.len() - 1 {
        return Err(Error::InvalidSelection(
            "selection must include both chain endpoints".into(),
        ));
    }
    if indices.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidSelection(
            "selection indices must be strictly increasing".into(),
        ));
    }
    Ok(())
}

/// Builds the piecewise Bezier over the dominant subchain and scores the
/// selection with it. This is the error model the local search minimizes.
pub fn selection_errors(
    chain: &PointChain,
    indices: &[usize],
    tension: Tension,
) -> Result<GapErrors> {
    validate_indices(chain, indices)?;
    let fitted = cardinal_to_bezier(&chain.subchain(indices)?, tension)?;
    gap_errors(chain, indices, &fitted)
}

/// Assembles a guess from angle-sorted entries: endpoints first, then up to
/// `m1` primaries in sorted order, then their chain neighbours as supports
/// (up to `m2`, deduplicated), then secondaries in sorted order until `m`
/// points are selected. Returns (indices, tiers, m1 used, m2 used).
pub fn guess_from_angles(
    sorted: &[TurnAngleEntry],
    chain_len: usize,
    m: usize,
    m1: usize,
    m2: usize,
) -> Result<(Vec<usize>, Vec<Tier>, usize, usize)> {
    if m < 2 || m > chain_len {
        return Err(Error::InvalidSelection(format!(
            "m = {m} outside [2, {chain_len}]"
        )));
    }
    if m1 + m2 > m {
        return Err(Error::InvalidSelection(format!(
            "m1 + m2 = {} exceeds m = {m}",
            m1 + m2
        )));
    }
    let last = chain_len - 1;
    let mut tier_of: Vec<Option<Tier>> = vec![None; chain_len];
    tier_of[0] = Some(Tier::Secondary);
    tier_of[last] = Some(Tier::Secondary);
    let mut count = 2;

    let mut primaries = Vec::new();
    for entry in sorted {
        if primaries.len() == m1 || count == m {
            break;
        }
        if tier_of[entry.index].is_none() {
            tier_of[entry.index] = Some(Tier::Primary);
            primaries.push(entry.index);
            count += 1;
        }
    }

    let mut supports = 0;
    'outer: for &p in &primaries {
        for nb in [p.wrapping_sub(1), p + 1] {
            if supports == m2 || count == m {
                break 'outer;
            }
            if nb < chain_len && tier_of[nb].is_none() {
                tier_of[nb] = Some(Tier::Support);
                supports += 1;
                count += 1;
            }
        }
    }

    for entry in sorted {
        if count == m {
            break;
        }
        if tier_of[entry.index].is_none() {
            tier_of[entry.index] = Some(Tier::Secondary);
            count += 1;
        }
    }
    debug_assert_eq!(count, m);

    let mut indices = Vec::with_capacity(m);
    let mut tiers = Vec::with_capacity(m);
    for (i, tier) in tier_of.into_iter().enumerate() {
        if let Some(t) = tier {
            indices.push(i);
            tiers.push(t);
        }
    }
    Ok((indices, tiers, primaries.len(), supports))
}

/// The turn-angle seeded guess for a planar chain, scored with the fit over
/// the selected subchain.
pub fn initial_guess(
    chain: &PointChain,
    m: usize,
    m1: usize,
    m2: usize,
    tension: Tension,
) -> Result<DominantSelection> {
    let sorted = sort_by_angle(chain_turn_angles(chain)?);
    let (indices, tiers, m1, m2) = guess_from_angles(&sorted, chain.len(), m, m1, m2)?;
    let error = selection_errors(chain, &indices, tension)?.total;
    Ok(DominantSelection {
        indices,
        tiers,
        m1,
        m2,
        error,
    })
}

/// Default split of the selection budget: roughly one quarter primaries and
/// two supports per primary.
pub fn default_tier_counts(m: usize) -> (usize, usize) {
    let m1 = m.div_ceil(4);
    let m2 = (2 * m1).min(m - m1);
    (m1, m2)
}

/// One local-search move: insert the worst skipped point of the worst gap,
/// remove whichever member of the cheapest gap (endpoints excluded) costs
/// least, accept only strict improvement. Stops when no move improves.
/// Returns the refined selection and the accepted error trace, starting
/// with the guess error.
pub fn optimize_traced<F>(
    model: F,
    chain_len: usize,
    guess: &DominantSelection,
) -> Result<(DominantSelection, Vec<f64>)>
where
    F: Fn(&[usize]) -> Result<GapErrors>,
{
    let last = chain_len - 1;
    let mut current = guess.clone();
    let mut errors = model(&current.indices)?;
    current.error = errors.total;
    let mut trace = vec![current.error];

    loop {
        if current.error == 0.0 {
            break;
        }
        // Worst gap and its worst skipped point.
        let worst_gap = argmax(&errors.per_gap);
        let Some(&(insert_at, _)) = errors.per_point[worst_gap]
            .iter()
            .max_by(|a, b| a.1.total_cmp(&b.1).then(b.0.cmp(&a.0)))
        else {
            break;
        };
        // Cheapest gap; try deselecting either of its members.
        let best_gap = argmin(&errors.per_gap);
        let mut best: Option<(f64, Vec<usize>, GapErrors)> = None;
        for cand in [current.indices[best_gap], current.indices[best_gap + 1]] {
            if cand == 0 || cand == last {
                continue;
            }
            let mut trial: Vec<usize> = current
                .indices
                .iter()
                .copied()
                .filter(|&i| i != cand)
                .collect();
            let pos = trial.partition_point(|&i| i < insert_at);
            trial.insert(pos, insert_at);
            let trial_errors = model(&trial)?;
            if best
                .as_ref()
                .map(|(e, _, _)| trial_errors.total < *e)
                .unwrap_or(true)
            {
                best = Some((trial_errors.total, trial, trial_errors));
            }
        }
        match best {
            Some((e, indices, trial_errors)) if e < current.error => {
                current.tiers = retier(&current.indices, &current.tiers, &indices);
                current.indices = indices;
                current.error = e;
                errors = trial_errors;
                trace.push(e);
            }
            _ => break,
        }
    }
    let (m1, m2) = tier_counts(&current.tiers);
    current.m1 = m1;
    current.m2 = m2;
    Ok((current, trace))
}

/// Refines a planar guess in place; see [`optimize_traced`].
pub fn optimize(
    chain: &PointChain,
    guess: &DominantSelection,
    tension: Tension,
) -> Result<DominantSelection> {
    let model = |indices: &[usize]| selection_errors(chain, indices, tension);
    Ok(optimize_traced(model, chain.len(), guess)?.0)
}

fn retier(old_indices: &[usize], old_tiers: &[Tier], new_indices: &[usize]) -> Vec<Tier> {
    new_indices
        .iter()
        .map(|idx| {
            old_indices
                .iter()
                .position(|o| o == idx)
                .map(|pos| old_tiers[pos])
                .unwrap_or(Tier::Secondary)
        })
        .collect()
}

fn tier_counts(tiers: &[Tier]) -> (usize, usize) {
    let m1 = tiers.iter().filter(|t| **t == Tier::Primary).count();
    let m2 = tiers.iter().filter(|t| **t == Tier::Support).count();
    (m1, m2)
}

fn argmax(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate().skip(1) {
        if *v > values[best] {
            best = i;
        }
    }
    best
}

fn argmin(values: &[f64]) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate().skip(1) {
        if *v < values[best] {
            best = i;
        }
    }
    best
}

//! Greedy pointwise matching and the metrics derived from it.

use super::{EvalError, Ranges};
use crate::model::Point;
use serde::{Deserialize, Serialize};

/// Min/max over the union of both point sets, per axis.
pub fn combined_ranges(truth: &[Point], extracted: &[Point]) -> Result<Ranges, EvalError> {
    if truth.is_empty() || extracted.is_empty() {
        return Err(EvalError::EmptyPointSet);
    }
    let mut r = Ranges {
        x_min: f64::INFINITY,
        x_max: f64::NEG_INFINITY,
        y_min: f64::INFINITY,
        y_max: f64::NEG_INFINITY,
    };
    for p in truth.iter().chain(extracted) {
        r.x_min = r.x_min.min(p.x);
        r.x_max = r.x_max.max(p.x);
        r.y_min = r.y_min.min(p.y);
        r.y_max = r.y_max.max(p.y);
    }
    Ok(r)
}

/// Result of greedy matching: paired (truth, extracted) points plus
/// the leftovers on each side. Pairs and leftovers partition both
/// inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct Matching {
    pub pairs: Vec<(Point, Point)>,
    pub unmatched_truth: Vec<Point>,
    pub unmatched_extracted: Vec<Point>,
    pub ranges: Ranges,
    /// True when matching halted because the remaining points of one
    /// set all sat below the other set's remaining x values.
    pub early_stopped: bool,
}

/// Greedy matching in range-normalized space: the globally closest
/// (truth, extracted) pair is matched and removed, repeatedly, until
/// one side is exhausted. After every extraction the leftovers are
/// checked for x-disjointness — when the remaining points of one set
/// all lie strictly below the other set's remaining minimum x, the
/// leftovers are obviously unrelated ends of the two datasets and
/// matching stops.
///
/// Ties on distance resolve to the lowest (truth index, extracted
/// index) pair, making the procedure fully deterministic.
pub fn match_points(truth: &[Point], extracted: &[Point], ranges: Ranges) -> Matching {
    let mut truth_left: Vec<usize> = (0..truth.len()).collect();
    let mut ext_left: Vec<usize> = (0..extracted.len()).collect();
    let mut pairs = Vec::new();
    let mut early_stopped = false;

    while !truth_left.is_empty() && !ext_left.is_empty() {
        let mut best: Option<(f64, usize, usize)> = None;
        for (ti_pos, &ti) in truth_left.iter().enumerate() {
            for (ei_pos, &ei) in ext_left.iter().enumerate() {
                let d = ranges.normalized_distance(truth[ti], extracted[ei]);
                if best.map_or(true, |(bd, _, _)| d < bd) {
                    best = Some((d, ti_pos, ei_pos));
                }
            }
        }
        let (_, ti_pos, ei_pos) = best.expect("both sides non-empty");
        let ti = truth_left.remove(ti_pos);
        let ei = ext_left.remove(ei_pos);
        pairs.push((truth[ti], extracted[ei]));

        if x_disjoint(&truth_left, truth, &ext_left, extracted) {
            early_stopped = true;
            break;
        }
    }

    Matching {
        pairs,
        unmatched_truth: truth_left.into_iter().map(|i| truth[i]).collect(),
        unmatched_extracted: ext_left.into_iter().map(|i| extracted[i]).collect(),
        ranges,
        early_stopped,
    }
}

/// True when both leftover sets are non-empty and one sits entirely at
/// strictly lower x than the other.
fn x_disjoint(a_idx: &[usize], a: &[Point], b_idx: &[usize], b: &[Point]) -> bool {
    if a_idx.is_empty() || b_idx.is_empty() {
        return false;
    }
    let a_min = a_idx.iter().map(|&i| a[i].x).fold(f64::INFINITY, f64::min);
    let a_max = a_idx.iter().map(|&i| a[i].x).fold(f64::NEG_INFINITY, f64::max);
    let b_min = b_idx.iter().map(|&i| b[i].x).fold(f64::INFINITY, f64::min);
    let b_max = b_idx.iter().map(|&i| b[i].x).fold(f64::NEG_INFINITY, f64::max);
    a_max < b_min || b_max < a_min
}

/// Metric bundle computed from a [`Matching`]. MAE values are
/// fractions of the combined axis range; absent when nothing matched.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointwiseReport {
    pub mae_x: Option<f64>,
    pub mae_y: Option<f64>,
    pub precision: f64,
    pub recall: f64,
    pub n_matched: usize,
    /// Extracted points with no truth match (false positives).
    pub n_unmatched_extracted: usize,
    /// Truth points with no extracted match (false negatives).
    pub n_unmatched_truth: usize,
}

/// Mean absolute error over matched pairs, normalized by the combined
/// ranges, plus precision (matched / all extracted) and recall
/// (matched / all truth).
pub fn pointwise_metrics(matching: &Matching) -> PointwiseReport {
    let n = matching.pairs.len();
    let n_fp = matching.unmatched_extracted.len();
    let n_fn = matching.unmatched_truth.len();

    let (mae_x, mae_y) = if n > 0 {
        let sum_dx: f64 = matching.pairs.iter().map(|(t, e)| (e.x - t.x).abs()).sum();
        let sum_dy: f64 = matching.pairs.iter().map(|(t, e)| (e.y - t.y).abs()).sum();
        (
            Some(sum_dx / n as f64 / matching.ranges.x_span()),
            Some(sum_dy / n as f64 / matching.ranges.y_span()),
        )
    } else {
        (None, None)
    };

    let precision = if n + n_fp > 0 { n as f64 / (n + n_fp) as f64 } else { 0.0 };
    let recall = if n + n_fn > 0 { n as f64 / (n + n_fn) as f64 } else { 0.0 };

    PointwiseReport {
        mae_x,
        mae_y,
        precision,
        recall,
        n_matched: n,
        n_unmatched_extracted: n_fp,
        n_unmatched_truth: n_fn,
    }
}

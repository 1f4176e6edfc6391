//! Curve-level comparison through linear interpolation on a common grid.

use super::EvalError;
use crate::model::Series;
use serde::{Deserialize, Serialize};

pub const DEFAULT_GRID_SIZE: usize = 1000;

/// Normalization base for the interpolation `mae_y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum YNormBase {
    /// Truth curve's y-range over the overlap grid (default).
    TruthOverlap,
    /// Y-range of both curves over the overlap grid.
    CombinedOverlap,
}

/// Normalization base for the interpolation `mae_dx`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum XNormBase {
    /// Full x-extent of the truth series (default).
    TruthFull,
    /// Full x-extent of both series combined.
    CombinedFull,
}

/// Interpolation comparison result. `mae_y` is the mean absolute
/// difference of the two interpolated curves over the overlapping
/// x-range, as a fraction of the truth y-range there; `mae_dx`
/// averages the endpoint misses as a fraction of the truth x-range.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterpReport {
    pub mae_y: Option<f64>,
    pub mae_dx: f64,
    /// min_x(extracted) − min_x(truth); positive when the extraction
    /// starts late.
    pub left_miss: f64,
    /// max_x(truth) − max_x(extracted); positive when the extraction
    /// ends early.
    pub right_miss: f64,
    /// `[x0, x1]` of the overlapping region; `None` when the x-extents
    /// do not overlap at all.
    pub overlap: Option<(f64, f64)>,
    pub grid_size: usize,
}

/// Compares two series as interpolated curves with the default
/// normalization bases (truth y-range over the overlap for `mae_y`,
/// truth full x-range for `mae_dx`).
pub fn interpolation_metrics(
    truth: &Series,
    extracted: &Series,
    grid_size: usize,
) -> Result<InterpReport, EvalError> {
    interpolation_metrics_with(
        truth,
        extracted,
        grid_size,
        YNormBase::TruthOverlap,
        XNormBase::TruthFull,
    )
}

/// Compares two series as interpolated curves.
///
/// The x-extents that do not overlap are quantified as the left and
/// right misses. Over the overlap `[max of minima, min of maxima]` a
/// uniform grid of `grid_size` points (both ends included) is laid
/// down, both series are linearly interpolated onto it, and the mean
/// absolute y-difference is taken. Duplicate x values within a series
/// collapse to their mean y so interpolation is well defined.
pub fn interpolation_metrics_with(
    truth: &Series,
    extracted: &Series,
    grid_size: usize,
    y_base: YNormBase,
    x_base: XNormBase,
) -> Result<InterpReport, EvalError> {
    if grid_size < 2 {
        return Err(EvalError::BadGridSize(grid_size));
    }
    let t = collapsed_xy(truth)?;
    let e = collapsed_xy(extracted)?;

    let (t_min, t_max) = (t.first().unwrap().0, t.last().unwrap().0);
    let (e_min, e_max) = (e.first().unwrap().0, e.last().unwrap().0);

    let left_miss = e_min - t_min;
    let right_miss = t_max - e_max;
    let x_span = match x_base {
        XNormBase::TruthFull => nonzero(t_max - t_min),
        XNormBase::CombinedFull => nonzero(t_max.max(e_max) - t_min.min(e_min)),
    };
    let mae_dx = (left_miss.abs() + right_miss.abs()) / 2.0 / x_span;

    let x0 = t_min.max(e_min);
    let x1 = t_max.min(e_max);
    if x0 > x1 {
        return Ok(InterpReport {
            mae_y: None,
            mae_dx,
            left_miss,
            right_miss,
            overlap: None,
            grid_size,
        });
    }

    let mut sum_abs_dy = 0.0;
    let mut y_min = f64::INFINITY;
    let mut y_max = f64::NEG_INFINITY;
    for i in 0..grid_size {
        let x = x0 + (x1 - x0) * i as f64 / (grid_size - 1) as f64;
        let ty = interp_at(&t, x);
        let ey = interp_at(&e, x);
        y_min = y_min.min(ty);
        y_max = y_max.max(ty);
        if y_base == YNormBase::CombinedOverlap {
            y_min = y_min.min(ey);
            y_max = y_max.max(ey);
        }
        sum_abs_dy += (ey - ty).abs();
    }
    let mae_y_raw = sum_abs_dy / grid_size as f64;
    let mae_y = mae_y_raw / nonzero(y_max - y_min);

    Ok(InterpReport {
        mae_y: Some(mae_y),
        mae_dx,
        left_miss,
        right_miss,
        overlap: Some((x0, x1)),
        grid_size,
    })
}

/// Sorted (x, y) pairs with duplicate x collapsed to the mean y.
/// Errors when fewer than 2 distinct x values remain.
fn collapsed_xy(series: &Series) -> Result<Vec<(f64, f64)>, EvalError> {
    let mut pts: Vec<(f64, f64)> = series.points.iter().map(|p| (p.x, p.y)).collect();
    pts.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite coordinates"));

    let mut out: Vec<(f64, f64)> = Vec::with_capacity(pts.len());
    let mut i = 0;
    while i < pts.len() {
        let x = pts[i].0;
        let mut sum = 0.0;
        let mut n = 0usize;
        while i < pts.len() && pts[i].0 == x {
            sum += pts[i].1;
            n += 1;
            i += 1;
        }
        out.push((x, sum / n as f64));
    }
    if out.len() < 2 {
        return Err(EvalError::TooFewPoints(series.name.clone()));
    }
    Ok(out)
}

/// Piecewise-linear interpolation at `x`, which callers keep within
/// `[first.x, last.x]` up to floating error; ends clamp.
fn interp_at(pts: &[(f64, f64)], x: f64) -> f64 {
    if x <= pts[0].0 {
        return pts[0].1;
    }
    if x >= pts[pts.len() - 1].0 {
        return pts[pts.len() - 1].1;
    }
    // Binary search for the segment containing x.
    let mut lo = 0usize;
    let mut hi = pts.len() - 1;
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if pts[mid].0 <= x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (x0, y0) = pts[lo];
    let (x1, y1) = pts[hi];
    let t = (x - x0) / (x1 - x0);
    y0 + t * (y1 - y0)
}

fn nonzero(span: f64) -> f64 {
    if span > 0.0 {
        span
    } else {
        1.0
    }
}

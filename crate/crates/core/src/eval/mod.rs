//! Accuracy evaluation of extracted plot data against ground truth.
//!
//! Two complementary comparisons:
//!
//! - pointwise: greedy matching of extracted points to truth points in
//!   range-normalized space, yielding MAE in x and y, precision and
//!   recall ([`match_points`], [`pointwise_metrics`]);
//! - interpolation: both point sets interpolated onto a common uniform
//!   grid over the overlapping x-range, yielding a curve-level MAE and
//!   an endpoint miss metric ([`interpolation_metrics`]).
//!
//! Plot-level classification (was an unextractable plot recognized as
//! such) and per-plot / per-point aggregation sit on top.

mod aggregate;
mod classify;
mod interp;
mod matching;
mod pairing;

pub use aggregate::{
    aggregate_pointwise, evaluate_plot, summarize, AggregateMode, EvalOptions, InterpBlock,
    InterpSummary, PlotEval, PointwiseBlock, PointwiseSummary, SummaryTable, UnpairedStems,
};
pub use classify::{classification_metrics, ClassReport};
pub use interp::{
    interpolation_metrics, interpolation_metrics_with, InterpReport, XNormBase, YNormBase,
    DEFAULT_GRID_SIZE,
};
pub use matching::{combined_ranges, match_points, pointwise_metrics, Matching, PointwiseReport};
pub use pairing::{pair_series, SeriesPairing};

use crate::model::Point;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("cannot compute ranges of an empty point set")]
    EmptyPointSet,
    #[error("series '{0}' has fewer than 2 points with distinct x")]
    TooFewPoints(String),
    #[error("grid size must be at least 2, got {0}")]
    BadGridSize(usize),
    #[error("no reports to aggregate")]
    NothingToAggregate,
}

/// Combined min/max extents of two point sets, used to normalize
/// distances and errors. A degenerate axis (max == min) normalizes
/// with denominator 1, making errors on that axis absolute.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ranges {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Ranges {
    /// Normalization denominator for x; 1 when degenerate.
    pub fn x_span(&self) -> f64 {
        let span = self.x_max - self.x_min;
        if span > 0.0 {
            span
        } else {
            1.0
        }
    }

    /// Normalization denominator for y; 1 when degenerate.
    pub fn y_span(&self) -> f64 {
        let span = self.y_max - self.y_min;
        if span > 0.0 {
            span
        } else {
            1.0
        }
    }

    /// Euclidean distance between two points after scaling each axis
    /// by its combined range.
    pub fn normalized_distance(&self, a: Point, b: Point) -> f64 {
        let dx = (a.x - b.x) / self.x_span();
        let dy = (a.y - b.y) / self.y_span();
        (dx * dx + dy * dy).sqrt()
    }
}

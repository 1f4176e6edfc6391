//! Whole-plot evaluation and summary aggregation.

use super::classify::ClassReport;
use super::interp::{interpolation_metrics_with, XNormBase, YNormBase, DEFAULT_GRID_SIZE};
use super::matching::{combined_ranges, match_points, pointwise_metrics, PointwiseReport};
use super::pairing::pair_series;
use super::EvalError;
use crate::model::PlotData;
use serde::{Deserialize, Serialize};

/// Knobs for the evaluator, surfaced on the CLI and config file.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalOptions {
    pub grid_size: usize,
    pub y_norm_base: YNormBase,
    pub x_norm_base: XNormBase,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            grid_size: DEFAULT_GRID_SIZE,
            y_norm_base: YNormBase::TruthOverlap,
            x_norm_base: XNormBase::TruthFull,
        }
    }
}

/// Evaluation of one extracted plot against its ground truth:
/// pointwise metrics pooled over paired series, interpolation metrics
/// averaged over paired series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlotEval {
    pub stem: String,
    pub pointwise: PointwiseReport,
    /// Mean interpolation mae_y over series pairs with an overlap.
    pub interp_mae_y: Option<f64>,
    /// Mean interpolation mae_dx over interpolatable series pairs.
    pub interp_mae_dx: Option<f64>,
    pub n_series_pairs: usize,
    pub n_unpaired_truth_series: usize,
    pub n_unpaired_extracted_series: usize,
}

/// Compares one (truth, extracted) plot pair.
///
/// Series are paired by [`pair_series`]; each pair is matched and
/// scored on its own combined ranges. Counts pool across pairs, and
/// each point of an unpaired truth series counts as a false negative
/// (unpaired extracted series as false positives). MAE values pool
/// with one normalized error term per matched pair.
pub fn evaluate_plot(
    stem: &str,
    truth: &PlotData,
    extracted: &PlotData,
    opts: &EvalOptions,
) -> PlotEval {
    let pairing = pair_series(truth, extracted);

    let mut n_matched = 0usize;
    let mut n_fp = 0usize;
    let mut n_fn = 0usize;
    let mut err_x_sum = 0.0;
    let mut err_y_sum = 0.0;
    let mut interp_y = Vec::new();
    let mut interp_dx = Vec::new();

    for &(ti, ei) in &pairing.pairs {
        let t = &truth.series[ti];
        let e = &extracted.series[ei];
        let ranges = combined_ranges(&t.points, &e.points).expect("series are non-empty");
        let matching = match_points(&t.points, &e.points, ranges);
        let report = pointwise_metrics(&matching);
        if let (Some(mx), Some(my)) = (report.mae_x, report.mae_y) {
            err_x_sum += mx * report.n_matched as f64;
            err_y_sum += my * report.n_matched as f64;
        }
        n_matched += report.n_matched;
        n_fp += report.n_unmatched_extracted;
        n_fn += report.n_unmatched_truth;

        if let Ok(ir) =
            interpolation_metrics_with(t, e, opts.grid_size, opts.y_norm_base, opts.x_norm_base)
        {
            if let Some(my) = ir.mae_y {
                interp_y.push(my);
            }
            interp_dx.push(ir.mae_dx);
        }
    }
    for &ti in &pairing.unpaired_truth {
        n_fn += truth.series[ti].points.len();
    }
    for &ei in &pairing.unpaired_extracted {
        n_fp += extracted.series[ei].points.len();
    }

    let pointwise = PointwiseReport {
        mae_x: (n_matched > 0).then(|| err_x_sum / n_matched as f64),
        mae_y: (n_matched > 0).then(|| err_y_sum / n_matched as f64),
        precision: ratio(n_matched, n_matched + n_fp),
        recall: ratio(n_matched, n_matched + n_fn),
        n_matched,
        n_unmatched_extracted: n_fp,
        n_unmatched_truth: n_fn,
    };

    PlotEval {
        stem: stem.to_string(),
        pointwise,
        interp_mae_y: mean(&interp_y),
        interp_mae_dx: mean(&interp_dx),
        n_series_pairs: pairing.pairs.len(),
        n_unpaired_truth_series: pairing.unpaired_truth.len(),
        n_unpaired_extracted_series: pairing.unpaired_extracted.len(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AggregateMode {
    PerPlot,
    PerPoint,
    Both,
}

/// Pointwise metrics rolled up over many plots.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointwiseSummary {
    pub precision: f64,
    pub recall: f64,
    pub mae_x: Option<f64>,
    pub mae_y: Option<f64>,
    pub n_plots: usize,
    pub n_matched: usize,
}

/// Rolls up per-plot pointwise reports.
///
/// `PerPlot` takes the unweighted mean of each plot's metrics; plots
/// with undefined MAE are left out of the MAE means but kept in
/// precision and recall. `PerPoint` recomputes every metric from
/// pooled counts, so each matched pair carries equal weight.
pub fn aggregate_pointwise(
    evals: &[PlotEval],
    mode: AggregateMode,
) -> Result<PointwiseSummary, EvalError> {
    if evals.is_empty() {
        return Err(EvalError::NothingToAggregate);
    }
    let n_plots = evals.len();
    let total_matched: usize = evals.iter().map(|e| e.pointwise.n_matched).sum();

    let summary = match mode {
        AggregateMode::PerPlot => {
            let precision = evals.iter().map(|e| e.pointwise.precision).sum::<f64>();
            let recall = evals.iter().map(|e| e.pointwise.recall).sum::<f64>();
            let maes_x: Vec<f64> = evals.iter().filter_map(|e| e.pointwise.mae_x).collect();
            let maes_y: Vec<f64> = evals.iter().filter_map(|e| e.pointwise.mae_y).collect();
            PointwiseSummary {
                precision: precision / n_plots as f64,
                recall: recall / n_plots as f64,
                mae_x: mean(&maes_x),
                mae_y: mean(&maes_y),
                n_plots,
                n_matched: total_matched,
            }
        }
        AggregateMode::PerPoint | AggregateMode::Both => {
            let fp: usize = evals.iter().map(|e| e.pointwise.n_unmatched_extracted).sum();
            let fn_: usize = evals.iter().map(|e| e.pointwise.n_unmatched_truth).sum();
            let mut err_x = 0.0;
            let mut err_y = 0.0;
            let mut n_err = 0usize;
            for e in evals {
                if let (Some(mx), Some(my)) = (e.pointwise.mae_x, e.pointwise.mae_y) {
                    err_x += mx * e.pointwise.n_matched as f64;
                    err_y += my * e.pointwise.n_matched as f64;
                    n_err += e.pointwise.n_matched;
                }
            }
            PointwiseSummary {
                precision: ratio(total_matched, total_matched + fp),
                recall: ratio(total_matched, total_matched + fn_),
                mae_x: (n_err > 0).then(|| err_x / n_err as f64),
                mae_y: (n_err > 0).then(|| err_y / n_err as f64),
                n_plots,
                n_matched: total_matched,
            }
        }
    };
    Ok(summary)
}

/// Interpolation metrics rolled up per plot (unweighted mean).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterpSummary {
    pub mae_y: Option<f64>,
    pub mae_dx: Option<f64>,
    pub n_plots: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InterpBlock {
    pub per_plot: InterpSummary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointwiseBlock {
    pub per_plot: Option<PointwiseSummary>,
    pub per_point: Option<PointwiseSummary>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct UnpairedStems {
    pub truth_only: Vec<String>,
    pub extracted_only: Vec<String>,
}

/// The full report document, keyed like the accuracy table: plot
/// classification, interpolation comparison (per plot), pointwise
/// comparison per plot and per point. All metric values are fractions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryTable {
    pub classification: Option<ClassReport>,
    pub interpolation: InterpBlock,
    pub pointwise: PointwiseBlock,
    pub n_plots: usize,
    pub unpaired: UnpairedStems,
}

/// Builds the summary table from per-plot evaluations.
pub fn summarize(
    evals: &[PlotEval],
    classification: Option<ClassReport>,
    mode: AggregateMode,
    unpaired: UnpairedStems,
) -> Result<SummaryTable, EvalError> {
    if evals.is_empty() {
        return Err(EvalError::NothingToAggregate);
    }
    let ys: Vec<f64> = evals.iter().filter_map(|e| e.interp_mae_y).collect();
    let dxs: Vec<f64> = evals.iter().filter_map(|e| e.interp_mae_dx).collect();
    let interpolation = InterpBlock {
        per_plot: InterpSummary { mae_y: mean(&ys), mae_dx: mean(&dxs), n_plots: evals.len() },
    };

    let per_plot = matches!(mode, AggregateMode::PerPlot | AggregateMode::Both)
        .then(|| aggregate_pointwise(evals, AggregateMode::PerPlot))
        .transpose()?;
    let per_point = matches!(mode, AggregateMode::PerPoint | AggregateMode::Both)
        .then(|| aggregate_pointwise(evals, AggregateMode::PerPoint))
        .transpose()?;

    Ok(SummaryTable {
        classification,
        interpolation,
        pointwise: PointwiseBlock { per_plot, per_point },
        n_plots: evals.len(),
        unpaired,
    })
}

fn mean(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        None
    } else {
        Some(values.iter().sum::<f64>() / values.len() as f64)
    }
}

fn ratio(num: usize, den: usize) -> f64 {
    if den > 0 {
        num as f64 / den as f64
    } else {
        0.0
    }
}

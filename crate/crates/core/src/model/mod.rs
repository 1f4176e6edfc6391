//! Canonical model for two-axis plot content and extraction results.
//!
//! Everything downstream (pipeline, evaluator, renderer, benchmark
//! generator) speaks these types. Values are plain data space: a log
//! axis stores actual values, the [`AxisScale`] only records how the
//! axis is presented.

mod codec;
mod numfmt;

pub use codec::{decode_json, encode_csv, encode_json};
pub use numfmt::{fmt_sig, round_sig12};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A single datapoint in plot-space units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

// Points serialize as a two-element array `[x, y]`, with coordinates
// rounded to 12 significant digits so encoded files are bit-stable.
impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pair = (round_sig12(self.x), round_sig12(self.y));
        pair.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [x, y] = <[f64; 2]>::deserialize(deserializer)?;
        Ok(Point { x, y })
    }
}

/// One named data series. Canonical form is sorted ascending by x.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Series {
    pub name: String,
    pub points: Vec<Point>,
}

impl Series {
    pub fn new(name: impl Into<String>, points: Vec<Point>) -> Self {
        Series { name: name.into(), points }
    }

    pub fn xs(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.x)
    }

    pub fn ys(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.y)
    }
}

/// Axis presentation: `Log` means the axis is drawn with logarithmic
/// spacing; stored values stay in data space either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AxisScale {
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxisSpec {
    pub label: String,
    pub unit: String,
    pub scale: AxisScale,
}

impl AxisSpec {
    pub fn linear(label: impl Into<String>, unit: impl Into<String>) -> Self {
        AxisSpec { label: label.into(), unit: unit.into(), scale: AxisScale::Linear }
    }

    pub fn log(label: impl Into<String>, unit: impl Into<String>) -> Self {
        AxisSpec { label: label.into(), unit: unit.into(), scale: AxisScale::Log }
    }
}

/// Full plot content: axes, series, optional title.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlotData {
    pub title: Option<String>,
    pub x_axis: AxisSpec,
    pub y_axis: AxisSpec,
    pub series: Vec<Series>,
}

impl PlotData {
    /// All points of all series, flattened.
    pub fn all_points(&self) -> impl Iterator<Item = Point> + '_ {
        self.series.iter().flat_map(|s| s.points.iter().copied())
    }

    pub fn point_count(&self) -> usize {
        self.series.iter().map(|s| s.points.len()).sum()
    }
}

/// Status of one pipeline run over one image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutcomeStatus {
    /// Data extracted and confirmed by the visual comparison.
    Accepted,
    /// The model reported nothing extractable at step 1.
    NoData,
    /// Data extracted but the visual comparison said no; kept for review.
    VisualMismatch,
    /// Unrecoverable error anywhere in the workflow.
    Failure,
}

/// Result of the extraction pipeline for one image.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtractionOutcome {
    pub status: OutcomeStatus,
    pub data: Option<PlotData>,
    pub diagnostics: Vec<String>,
    pub transcript_id: String,
}

impl ExtractionOutcome {
    /// Structural invariants: data present iff status carries data.
    pub fn is_consistent(&self) -> bool {
        match self.status {
            OutcomeStatus::Accepted | OutcomeStatus::VisualMismatch => self.data.is_some(),
            OutcomeStatus::NoData => self.data.is_none(),
            OutcomeStatus::Failure => true,
        }
    }
}

/// One invariant violation found by [`validate_plot_data`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Where in the plot the problem is, e.g. `series[2].points[0]`.
    pub path: String,
    pub message: String,
}

/// All violations for a candidate plot; empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, path: impl Into<String>, message: impl Into<String>) {
        self.violations.push(Violation { path: path.into(), message: message.into() });
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let msgs: Vec<String> =
            self.violations.iter().map(|v| format!("{}: {}", v.path, v.message)).collect();
        write!(f, "{}", msgs.join("; "))
    }
}

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("invalid plot data: {0}")]
    Invalid(ValidationReport),
    #[error("malformed plot JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Checks every model invariant and returns the full list of
/// violations. Violations are data, not errors: an invalid candidate
/// still yields `Ok`-shaped output.
pub fn validate_plot_data(candidate: &PlotData) -> ValidationReport {
    let mut report = ValidationReport::default();
    if candidate.x_axis.label.trim().is_empty() {
        report.push("x_axis.label", "missing axis label");
    }
    if candidate.y_axis.label.trim().is_empty() {
        report.push("y_axis.label", "missing axis label");
    }
    if candidate.series.is_empty() {
        report.push("series", "plot must contain at least one series");
    }
    for (i, series) in candidate.series.iter().enumerate() {
        if series.points.is_empty() {
            report.push(format!("series[{i}].points"), "series must contain at least one point");
        }
        for (j, point) in series.points.iter().enumerate() {
            if !point.is_finite() {
                report.push(format!("series[{i}].points[{j}]"), "non-finite coordinate");
            }
        }
    }
    report
}

/// Produces the canonical form: points sorted ascending by x (stable
/// for ties), unnamed series given `series N` names, duplicate names
/// disambiguated with ` (2)`, ` (3)`, ... suffixes.
///
/// Succeeds exactly when [`validate_plot_data`] reports no violations.
pub fn canonicalize(raw: &PlotData) -> Result<PlotData, ModelError> {
    let report = validate_plot_data(raw);
    if !report.is_valid() {
        return Err(ModelError::Invalid(report));
    }

    let mut out = raw.clone();
    for (i, series) in out.series.iter_mut().enumerate() {
        series.points.sort_by(|a, b| a.x.partial_cmp(&b.x).expect("finite after validation"));
        if series.name.trim().is_empty() {
            series.name = format!("series {}", i + 1);
        }
    }

    let mut used: Vec<String> = Vec::with_capacity(out.series.len());
    for series in out.series.iter_mut() {
        if used.contains(&series.name) {
            let mut k = 2usize;
            while used.contains(&format!("{} ({k})", series.name)) {
                k += 1;
            }
            series.name = format!("{} ({k})", series.name);
        }
        used.push(series.name.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests;

//! Batch toolkit for digitizing two-axis research plots with a
//! vision-capable LLM, scoring the extractions against ground truth,
//! and generating randomized synthetic plot benchmarks.
//!
//! The pieces:
//!
//! - [`model`] — canonical plot data types and the JSON/CSV formats.
//! - [`gateway`] — chat client for vision LLM APIs with deterministic
//!   record/replay of transcripts.
//! - [`pipeline`] — the four-step extract / replot / execute / compare
//!   workflow per image.
//! - [`sandbox`] — isolated execution of model-generated replot
//!   scripts with a repair loop.
//! - [`render`] — deterministic native plot rasterizer.
//! - [`eval`] — pointwise and interpolation accuracy comparisons,
//!   classification metrics and aggregation.
//! - [`synth`] — randomized synthetic benchmark generator with known
//!   ground truth.

pub mod eval;
pub mod gateway;
pub mod model;
pub mod pipeline;
pub mod render;
pub mod sandbox;
pub mod synth;

pub use model::{
    canonicalize, decode_json, encode_csv, encode_json, validate_plot_data, AxisScale, AxisSpec,
    ExtractionOutcome, ModelError, OutcomeStatus, PlotData, Point, Series, ValidationReport,
};

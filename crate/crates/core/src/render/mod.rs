//! Deterministic native rendering of plot data to PNG.
//!
//! Used by the benchmark generator to produce images with known pixel
//! geometry, and by the pipeline as the offline replot backend. The
//! data-to-pixel affine transform is returned alongside the image so
//! tests can map pixels back to data coordinates.

mod font;
mod raster;
mod ticks;

pub use font::{FontFamily, GLYPH_H, GLYPH_W};
pub use raster::{Canvas, LineStyle, MarkerShape, Rgb};
pub use ticks::{linear_ticks, log_ticks, tick_labels, TickLabelMode};

use crate::model::{validate_plot_data, AxisScale, PlotData, Point, ValidationReport};
use font::{draw_text, draw_text_rot90, text_height, text_width};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("style has {style} series styles but data has {data} series")]
    StyleMismatch { style: usize, data: usize },
    #[error("image dimensions {0}x{1} outside [320, 2400]")]
    BadDimensions(u32, u32),
    #[error("invalid plot data: {0}")]
    InvalidData(ValidationReport),
    #[error("{axis} axis is log-scaled but data contains values <= 0")]
    LogDomain { axis: char },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlotType {
    Points,
    Lines,
    LinesPoints,
}

/// Whether axis label text is written at all; corrupted benchmark
/// plots hide it while the ground truth keeps the real labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AxisTextMode {
    Normal,
    Hidden,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesStyle {
    pub color: Rgb,
    pub marker: MarkerShape,
    pub marker_size: f64,
    pub line_width: f64,
    pub line_style: LineStyle,
}

/// Full appearance of one rendered plot.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StyleSpec {
    pub plot_type: PlotType,
    pub series: Vec<SeriesStyle>,
    pub font_family: FontFamily,
    /// Nominal size in points; maps to an integer glyph scale.
    pub font_size: u32,
    pub show_grid: bool,
    pub show_top_right_axes: bool,
    pub width: u32,
    pub height: u32,
    pub axis_label_mode: AxisTextMode,
    pub tick_label_mode: TickLabelMode,
}

pub const PALETTE: [Rgb; 8] = [
    Rgb(31, 119, 180),
    Rgb(214, 39, 40),
    Rgb(44, 160, 44),
    Rgb(148, 103, 189),
    Rgb(255, 127, 14),
    Rgb(23, 190, 207),
    Rgb(140, 86, 75),
    Rgb(227, 119, 194),
];

impl StyleSpec {
    /// Plain style with palette colors, used by the native replot
    /// backend and as a test fixture base.
    pub fn default_for(n_series: usize) -> StyleSpec {
        let series = (0..n_series)
            .map(|i| SeriesStyle {
                color: PALETTE[i % PALETTE.len()],
                marker: MarkerShape::Circle,
                marker_size: 3.0,
                line_width: 2.0,
                line_style: LineStyle::Solid,
            })
            .collect();
        StyleSpec {
            plot_type: PlotType::LinesPoints,
            series,
            font_family: FontFamily::Sans,
            font_size: 12,
            show_grid: true,
            show_top_right_axes: false,
            width: 800,
            height: 560,
            axis_label_mode: AxisTextMode::Normal,
            tick_label_mode: TickLabelMode::Normal,
        }
    }

    fn font_scale(&self) -> usize {
        ((self.font_size as f64 / 7.0).round() as usize).clamp(1, 4)
    }
}

/// Data-to-pixel mapping: `px = a * t(v) + b` per axis, where `t` is
/// the identity for linear axes and log10 for log axes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RenderTransform {
    pub x_scale: AxisScale,
    pub y_scale: AxisScale,
    pub x_a: f64,
    pub x_b: f64,
    pub y_a: f64,
    pub y_b: f64,
}

impl RenderTransform {
    pub fn data_to_px(&self, p: Point) -> (f64, f64) {
        (
            self.x_a * axis_t(p.x, self.x_scale) + self.x_b,
            self.y_a * axis_t(p.y, self.y_scale) + self.y_b,
        )
    }

    pub fn px_to_data(&self, px: f64, py: f64) -> Point {
        Point::new(
            axis_t_inv((px - self.x_b) / self.x_a, self.x_scale),
            axis_t_inv((py - self.y_b) / self.y_a, self.y_scale),
        )
    }
}

fn axis_t(v: f64, scale: AxisScale) -> f64 {
    match scale {
        AxisScale::Linear => v,
        AxisScale::Log => v.log10(),
    }
}

fn axis_t_inv(t: f64, scale: AxisScale) -> f64 {
    match scale {
        AxisScale::Linear => t,
        AxisScale::Log => 10f64.powf(t),
    }
}

/// A rendered plot: PNG bytes plus the transform that produced them.
#[derive(Debug, Clone)]
pub struct Rendered {
    pub png: Vec<u8>,
    pub transform: RenderTransform,
}

/// Renders plot data to a PNG. Identical inputs produce identical
/// bytes on the same build. Axes span the data with 5% padding; tick
/// values come from data space.
pub fn render_plot(data: &PlotData, style: &StyleSpec) -> Result<Rendered, RenderError> {
    let report = validate_plot_data(data);
    if !report.is_valid() {
        return Err(RenderError::InvalidData(report));
    }
    if style.series.len() != data.series.len() {
        return Err(RenderError::StyleMismatch {
            style: style.series.len(),
            data: data.series.len(),
        });
    }
    let (w, h) = (style.width, style.height);
    if !(320..=2400).contains(&w) || !(320..=2400).contains(&h) {
        return Err(RenderError::BadDimensions(w, h));
    }

    let xs: Vec<f64> = data.all_points().map(|p| p.x).collect();
    let ys: Vec<f64> = data.all_points().map(|p| p.y).collect();
    let x_range = padded_range(&xs, data.x_axis.scale, 'x')?;
    let y_range = padded_range(&ys, data.y_axis.scale, 'y')?;

    let scale = style.font_scale();
    let ch = text_height(scale) as i64;
    let pad = (3 * scale) as i64;
    let tick_len = 4i64;

    // Tick values live in data space; positions in transformed space.
    let x_ticks = axis_ticks(x_range, data.x_axis.scale);
    let y_ticks = axis_ticks(y_range, data.y_axis.scale);
    let x_labels = tick_labels(&x_ticks, style.tick_label_mode);
    let y_labels = tick_labels(&y_ticks, style.tick_label_mode);

    let draw_axis_text = style.axis_label_mode == AxisTextMode::Normal;
    let y_tick_w = y_labels
        .as_ref()
        .map(|ls| ls.iter().map(|l| text_width(l, style.font_family, scale)).max().unwrap_or(0))
        .unwrap_or(0) as i64;

    let left = pad
        + if draw_axis_text { ch + pad } else { 0 }
        + y_tick_w
        + if y_labels.is_some() { pad } else { 0 }
        + tick_len;
    let bottom = pad
        + if draw_axis_text { ch + pad } else { 0 }
        + if x_labels.is_some() { ch + pad } else { 0 }
        + tick_len;
    let top = if data.title.is_some() { ch + 2 * pad } else { 2 * pad };
    let right = 4 * pad;

    let px_left = left;
    let px_right = w as i64 - right;
    let px_top = top;
    let px_bottom = h as i64 - bottom;
    let plot_w = (px_right - px_left).max(40) as f64;
    let plot_h = (px_bottom - px_top).max(40) as f64;

    let x_a = plot_w / (x_range.1 - x_range.0);
    let x_b = px_left as f64 - x_range.0 * x_a;
    let y_a = -plot_h / (y_range.1 - y_range.0);
    let y_b = px_bottom as f64 - y_range.0 * y_a;
    let transform = RenderTransform {
        x_scale: data.x_axis.scale,
        y_scale: data.y_axis.scale,
        x_a,
        x_b,
        y_a,
        y_b,
    };

    let mut canvas = Canvas::new(w, h, Rgb::WHITE);
    let grid_color = Rgb(221, 221, 221);
    let axis_color = Rgb::BLACK;

    // Grid under everything else.
    if style.show_grid {
        for &t in &x_ticks {
            let px = (x_a * axis_t(t, data.x_axis.scale) + x_b).round() as i64;
            if px > px_left && px < px_right {
                canvas.fill_rect(px, px_top, px, px_bottom, grid_color);
            }
        }
        for &t in &y_ticks {
            let py = (y_a * axis_t(t, data.y_axis.scale) + y_b).round() as i64;
            if py > px_top && py < px_bottom {
                canvas.fill_rect(px_left, py, px_right, py, grid_color);
            }
        }
    }

    // Axes box.
    canvas.fill_rect(px_left, px_top, px_left, px_bottom, axis_color);
    canvas.fill_rect(px_left, px_bottom, px_right, px_bottom, axis_color);
    if style.show_top_right_axes {
        canvas.fill_rect(px_left, px_top, px_right, px_top, axis_color);
        canvas.fill_rect(px_right, px_top, px_right, px_bottom, axis_color);
    }

    // Ticks and tick labels.
    for (i, &t) in x_ticks.iter().enumerate() {
        let px = (x_a * axis_t(t, data.x_axis.scale) + x_b).round() as i64;
        if px < px_left || px > px_right {
            continue;
        }
        canvas.fill_rect(px, px_bottom, px, px_bottom + tick_len, axis_color);
        if let Some(labels) = &x_labels {
            let lw = text_width(&labels[i], style.font_family, scale) as i64;
            draw_text(
                &mut canvas,
                px - lw / 2,
                px_bottom + tick_len + pad / 2,
                &labels[i],
                style.font_family,
                scale,
                axis_color,
            );
        }
    }
    for (i, &t) in y_ticks.iter().enumerate() {
        let py = (y_a * axis_t(t, data.y_axis.scale) + y_b).round() as i64;
        if py < px_top || py > px_bottom {
            continue;
        }
        canvas.fill_rect(px_left - tick_len, py, px_left, py, axis_color);
        if let Some(labels) = &y_labels {
            let lw = text_width(&labels[i], style.font_family, scale) as i64;
            draw_text(
                &mut canvas,
                px_left - tick_len - pad / 2 - lw,
                py - ch / 2,
                &labels[i],
                style.font_family,
                scale,
                axis_color,
            );
        }
    }

    // Axis labels and title.
    if draw_axis_text {
        let x_text = axis_caption(&data.x_axis.label, &data.x_axis.unit);
        let lw = text_width(&x_text, style.font_family, scale) as i64;
        draw_text(
            &mut canvas,
            (px_left + px_right) / 2 - lw / 2,
            h as i64 - pad - ch,
            &x_text,
            style.font_family,
            scale,
            axis_color,
        );
        let y_text = axis_caption(&data.y_axis.label, &data.y_axis.unit);
        let lh = text_width(&y_text, style.font_family, scale) as i64;
        draw_text_rot90(
            &mut canvas,
            pad,
            (px_top + px_bottom) / 2 - lh / 2,
            &y_text,
            style.font_family,
            scale,
            axis_color,
        );
    }
    if let Some(title) = &data.title {
        let lw = text_width(title, style.font_family, scale) as i64;
        draw_text(
            &mut canvas,
            (px_left + px_right) / 2 - lw / 2,
            pad,
            title,
            style.font_family,
            scale,
            axis_color,
        );
    }

    // Series.
    let draw_lines = matches!(style.plot_type, PlotType::Lines | PlotType::LinesPoints);
    let draw_points = matches!(style.plot_type, PlotType::Points | PlotType::LinesPoints);
    for (series, sstyle) in data.series.iter().zip(&style.series) {
        let px_pts: Vec<(f64, f64)> =
            series.points.iter().map(|&p| transform.data_to_px(p)).collect();
        if draw_lines {
            let mut phase = 0.0;
            for seg in px_pts.windows(2) {
                phase = canvas.line(
                    seg[0].0,
                    seg[0].1,
                    seg[1].0,
                    seg[1].1,
                    sstyle.line_width,
                    sstyle.line_style,
                    phase,
                    sstyle.color,
                );
            }
        }
        if draw_points {
            for &(px, py) in &px_pts {
                canvas.marker(px, py, sstyle.marker, sstyle.marker_size, sstyle.color);
            }
        }
    }

    // Legend for named series, top-right inside the plot area.
    let named: Vec<usize> =
        (0..data.series.len()).filter(|&i| !data.series[i].name.trim().is_empty()).collect();
    if !named.is_empty() {
        let swatch = 7 * scale as i64;
        let entry_h = ch + pad / 2;
        let max_name = named
            .iter()
            .map(|&i| text_width(&data.series[i].name, style.font_family, scale))
            .max()
            .unwrap() as i64;
        let box_w = swatch + pad + max_name + 2 * pad;
        let box_h = entry_h * named.len() as i64 + pad;
        let bx = px_right - box_w - pad;
        let by = px_top + pad;
        canvas.fill_rect(bx, by, bx + box_w, by + box_h, Rgb::WHITE);
        canvas.fill_rect(bx, by, bx + box_w, by, axis_color);
        canvas.fill_rect(bx, by + box_h, bx + box_w, by + box_h, axis_color);
        canvas.fill_rect(bx, by, bx, by + box_h, axis_color);
        canvas.fill_rect(bx + box_w, by, bx + box_w, by + box_h, axis_color);
        for (row, &i) in named.iter().enumerate() {
            let cy = by + pad / 2 + entry_h * row as i64 + ch / 2;
            let sstyle = &style.series[i];
            if draw_lines {
                canvas.line(
                    (bx + pad) as f64,
                    cy as f64,
                    (bx + pad + swatch) as f64,
                    cy as f64,
                    sstyle.line_width,
                    sstyle.line_style,
                    0.0,
                    sstyle.color,
                );
            }
            if draw_points {
                canvas.marker(
                    (bx + pad + swatch / 2) as f64,
                    cy as f64,
                    sstyle.marker,
                    sstyle.marker_size,
                    sstyle.color,
                );
            }
            draw_text(
                &mut canvas,
                bx + pad + swatch + pad,
                cy - ch / 2,
                &data.series[i].name,
                style.font_family,
                scale,
                axis_color,
            );
        }
    }

    Ok(Rendered { png: canvas.to_png(), transform })
}

fn axis_caption(label: &str, unit: &str) -> String {
    if unit.trim().is_empty() {
        label.to_string()
    } else {
        format!("{label} ({unit})")
    }
}

/// Padded (min, max) in transform space (log10 units for log axes).
fn padded_range(values: &[f64], scale: AxisScale, axis: char) -> Result<(f64, f64), RenderError> {
    let transformed: Vec<f64> = match scale {
        AxisScale::Linear => values.to_vec(),
        AxisScale::Log => {
            if values.iter().any(|&v| v <= 0.0) {
                return Err(RenderError::LogDomain { axis });
            }
            values.iter().map(|&v| v.log10()).collect()
        }
    };
    let min = transformed.iter().copied().fold(f64::INFINITY, f64::min);
    let max = transformed.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let span = max - min;
    let pad = if span > 0.0 {
        span * 0.05
    } else {
        match scale {
            AxisScale::Linear => (min.abs() * 0.05).max(1.0),
            AxisScale::Log => 0.5,
        }
    };
    Ok((min - pad, max + pad))
}

/// Tick values in data space for a transform-space range.
fn axis_ticks(range: (f64, f64), scale: AxisScale) -> Vec<f64> {
    match scale {
        AxisScale::Linear => linear_ticks(range.0, range.1),
        AxisScale::Log => log_ticks(10f64.powf(range.0), 10f64.powf(range.1)),
    }
}

#[cfg(test)]
mod tests;

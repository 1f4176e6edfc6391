//! Minimal RGB raster canvas: pixels, thick dashed lines, markers,
//! PNG encoding. Everything is integer/float arithmetic in a fixed
//! order, so output bytes depend only on the inputs.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rgb(pub u8, pub u8, pub u8);

impl Rgb {
    pub const BLACK: Rgb = Rgb(0, 0, 0);
    pub const WHITE: Rgb = Rgb(255, 255, 255);
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MarkerShape {
    Circle,
    Square,
    TriangleUp,
    Diamond,
    Plus,
    Cross,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LineStyle {
    Solid,
    Dashed,
    Dotted,
    DashDot,
}

impl LineStyle {
    /// Dash pattern as (on, off, on, off, ...) lengths in pixels.
    fn pattern(self) -> &'static [f64] {
        match self {
            LineStyle::Solid => &[1.0, 0.0],
            LineStyle::Dashed => &[7.0, 4.0],
            LineStyle::Dotted => &[1.5, 3.0],
            LineStyle::DashDot => &[7.0, 3.0, 1.5, 3.0],
        }
    }

    fn on_at(self, dist: f64) -> bool {
        let pat = self.pattern();
        let total: f64 = pat.iter().sum();
        if total <= 0.0 {
            return true;
        }
        let mut t = dist % total;
        for (i, seg) in pat.iter().enumerate() {
            if t < *seg {
                return i % 2 == 0;
            }
            t -= seg;
        }
        true
    }
}

pub struct Canvas {
    width: u32,
    height: u32,
    buf: Vec<u8>,
}

impl Canvas {
    pub fn new(width: u32, height: u32, background: Rgb) -> Self {
        let mut buf = Vec::with_capacity(width as usize * height as usize * 3);
        for _ in 0..width as usize * height as usize {
            buf.extend_from_slice(&[background.0, background.1, background.2]);
        }
        Canvas { width, height, buf }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn set(&mut self, x: i64, y: i64, color: Rgb) {
        if x < 0 || y < 0 || x >= self.width as i64 || y >= self.height as i64 {
            return;
        }
        let idx = (y as usize * self.width as usize + x as usize) * 3;
        self.buf[idx] = color.0;
        self.buf[idx + 1] = color.1;
        self.buf[idx + 2] = color.2;
    }

    pub fn get(&self, x: u32, y: u32) -> Rgb {
        let idx = (y as usize * self.width as usize + x as usize) * 3;
        Rgb(self.buf[idx], self.buf[idx + 1], self.buf[idx + 2])
    }

    pub fn fill_rect(&mut self, x0: i64, y0: i64, x1: i64, y1: i64, color: Rgb) {
        for y in y0.min(y1)..=y0.max(y1) {
            for x in x0.min(x1)..=x0.max(x1) {
                self.set(x, y, color);
            }
        }
    }

    /// Filled disc used as the stamp for thick lines and round markers.
    pub fn disc(&mut self, cx: f64, cy: f64, radius: f64, color: Rgb) {
        let r = radius.max(0.4);
        let x_lo = (cx - r).floor() as i64;
        let x_hi = (cx + r).ceil() as i64;
        let y_lo = (cy - r).floor() as i64;
        let y_hi = (cy + r).ceil() as i64;
        for y in y_lo..=y_hi {
            for x in x_lo..=x_hi {
                let dx = x as f64 + 0.5 - cx;
                let dy = y as f64 + 0.5 - cy;
                if dx * dx + dy * dy <= r * r {
                    self.set(x, y, color);
                }
            }
        }
    }

    /// Thick line with dash pattern, drawn by stamping discs along the
    /// segment at sub-pixel steps; dash phase starts at `phase` and the
    /// accumulated length is returned so polylines dash continuously.
    pub fn line(
        &mut self,
        x0: f64,
        y0: f64,
        x1: f64,
        y1: f64,
        width: f64,
        style: LineStyle,
        phase: f64,
        color: Rgb,
    ) -> f64 {
        let len = ((x1 - x0).powi(2) + (y1 - y0).powi(2)).sqrt();
        if len == 0.0 {
            if style.on_at(phase) {
                self.disc(x0, y0, width / 2.0, color);
            }
            return phase;
        }
        let step = 0.5;
        let n = (len / step).ceil() as usize;
        for i in 0..=n {
            let t = i as f64 / n as f64;
            let d = phase + t * len;
            if style.on_at(d) {
                self.disc(x0 + t * (x1 - x0), y0 + t * (y1 - y0), width / 2.0, color);
            }
        }
        phase + len
    }

    pub fn marker(&mut self, cx: f64, cy: f64, shape: MarkerShape, size: f64, color: Rgb) {
        let s = size.max(1.0);
        match shape {
            MarkerShape::Circle => self.disc(cx, cy, s, color),
            MarkerShape::Square => {
                self.fill_rect(
                    (cx - s).round() as i64,
                    (cy - s).round() as i64,
                    (cx + s).round() as i64,
                    (cy + s).round() as i64,
                    color,
                );
            }
            MarkerShape::TriangleUp => {
                let top = cy - s;
                let bottom = cy + s;
                let y_lo = top.floor() as i64;
                let y_hi = bottom.ceil() as i64;
                for y in y_lo..=y_hi {
                    let t = ((y as f64 + 0.5 - top) / (bottom - top)).clamp(0.0, 1.0);
                    let half = t * s;
                    for x in (cx - half).round() as i64..=(cx + half).round() as i64 {
                        self.set(x, y, color);
                    }
                }
            }
            MarkerShape::Diamond => {
                let y_lo = (cy - s).floor() as i64;
                let y_hi = (cy + s).ceil() as i64;
                for y in y_lo..=y_hi {
                    let dy = (y as f64 + 0.5 - cy).abs();
                    let half = (s - dy).max(0.0);
                    for x in (cx - half).round() as i64..=(cx + half).round() as i64 {
                        self.set(x, y, color);
                    }
                }
            }
            MarkerShape::Plus => {
                let w = (s / 3.0).max(0.8);
                self.line(cx - s, cy, cx + s, cy, w * 2.0, LineStyle::Solid, 0.0, color);
                self.line(cx, cy - s, cx, cy + s, w * 2.0, LineStyle::Solid, 0.0, color);
            }
            MarkerShape::Cross => {
                let w = (s / 3.0).max(0.8);
                let d = s * std::f64::consts::FRAC_1_SQRT_2;
                self.line(cx - d, cy - d, cx + d, cy + d, w * 2.0, LineStyle::Solid, 0.0, color);
                self.line(cx - d, cy + d, cx + d, cy - d, w * 2.0, LineStyle::Solid, 0.0, color);
            }
        }
    }

    pub fn to_png(&self) -> Vec<u8> {
        let mut out = Vec::new();
        {
            let mut encoder = png::Encoder::new(&mut out, self.width, self.height);
            encoder.set_color(png::ColorType::Rgb);
            encoder.set_depth(png::BitDepth::Eight);
            encoder.set_compression(png::Compression::Balanced);
            let mut writer = encoder.write_header().expect("in-memory PNG header");
            writer.write_image_data(&self.buf).expect("in-memory PNG data");
        }
        out
    }
}

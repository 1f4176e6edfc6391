use super::*;
use crate::model::{AxisSpec, PlotData, Series};

fn data_with_points(coords: &[(f64, f64)]) -> PlotData {
    PlotData {
        title: None,
        x_axis: AxisSpec::linear("time", "s"),
        y_axis: AxisSpec::linear("signal", "mV"),
        series: vec![Series::new("", coords.iter().map(|&(x, y)| Point::new(x, y)).collect())],
    }
}

fn decode_png(bytes: &[u8]) -> (u32, u32, Vec<u8>) {
    let decoder = png::Decoder::new(std::io::Cursor::new(bytes));
    let mut reader = decoder.read_info().unwrap();
    let mut buf = vec![0; reader.output_buffer_size().unwrap()];
    let info = reader.next_frame(&mut buf).unwrap();
    buf.truncate(info.buffer_size());
    (info.width, info.height, buf)
}

#[test]
fn identical_inputs_render_identical_bytes() {
    let data = data_with_points(&[(0.0, 0.0), (1.0, 2.0), (2.0, 1.0)]);
    let style = StyleSpec::default_for(1);
    let a = render_plot(&data, &style).unwrap();
    let b = render_plot(&data, &style).unwrap();
    assert_eq!(a.png, b.png);
    assert_eq!(a.transform, b.transform);

    let other = data_with_points(&[(0.0, 0.0), (1.0, 2.0), (2.0, 1.5)]);
    let c = render_plot(&other, &style).unwrap();
    assert_ne!(a.png, c.png);
}

#[test]
fn style_series_count_must_match() {
    let data = PlotData {
        series: vec![
            Series::new("a", vec![Point::new(0.0, 0.0)]),
            Series::new("b", vec![Point::new(1.0, 1.0)]),
        ],
        ..data_with_points(&[(0.0, 0.0)])
    };
    let style = StyleSpec::default_for(1);
    assert!(matches!(
        render_plot(&data, &style),
        Err(RenderError::StyleMismatch { style: 1, data: 2 })
    ));
}

#[test]
fn dimensions_are_bounded() {
    let data = data_with_points(&[(0.0, 0.0), (1.0, 1.0)]);
    let mut style = StyleSpec::default_for(1);
    style.width = 100;
    assert!(matches!(render_plot(&data, &style), Err(RenderError::BadDimensions(100, _))));
    style.width = 800;
    style.height = 4000;
    assert!(matches!(render_plot(&data, &style), Err(RenderError::BadDimensions(_, 4000))));
}

#[test]
fn log_scale_requires_positive_values() {
    let mut data = data_with_points(&[(0.0, 1.0), (1.0, 2.0)]);
    data.x_axis.scale = AxisScale::Log;
    let style = StyleSpec::default_for(1);
    assert!(matches!(render_plot(&data, &style), Err(RenderError::LogDomain { axis: 'x' })));
}

#[test]
fn png_has_declared_dimensions() {
    let data = data_with_points(&[(0.0, 0.0), (5.0, 3.0), (9.0, 1.0)]);
    let mut style = StyleSpec::default_for(1);
    style.width = 480;
    style.height = 360;
    let rendered = render_plot(&data, &style).unwrap();
    let (w, h, _) = decode_png(&rendered.png);
    assert_eq!((w, h), (480, 360));
}

#[test]
fn log_decades_map_to_even_pixel_spacing() {
    let mut data = data_with_points(&[(1.0, 1.0), (10.0, 5.0), (100.0, 2.0), (1000.0, 8.0)]);
    data.x_axis.scale = AxisScale::Log;
    let style = StyleSpec::default_for(1);
    let rendered = render_plot(&data, &style).unwrap();
    let t = rendered.transform;
    let px: Vec<f64> =
        [1.0, 10.0, 100.0, 1000.0].iter().map(|&v| t.data_to_px(Point::new(v, 1.0)).0).collect();
    let gaps: Vec<f64> = px.windows(2).map(|w| w[1] - w[0]).collect();
    for g in &gaps {
        assert!((g - gaps[0]).abs() < 1e-6, "uneven decade spacing: {gaps:?}");
    }
}

#[test]
fn transform_round_trips_points() {
    let data = data_with_points(&[(0.5, -2.0), (3.25, 4.5)]);
    let style = StyleSpec::default_for(1);
    let rendered = render_plot(&data, &style).unwrap();
    for p in data.all_points() {
        let (px, py) = rendered.transform.data_to_px(p);
        let back = rendered.transform.px_to_data(px, py);
        assert!((back.x - p.x).abs() < 1e-9);
        assert!((back.y - p.y).abs() < 1e-9);
    }
}

/// Collects connected clusters of pixels matching `color` exactly.
fn color_clusters(w: u32, h: u32, rgb: &[u8], color: Rgb) -> Vec<(f64, f64)> {
    let at = |x: u32, y: u32| {
        let i = (y as usize * w as usize + x as usize) * 3;
        Rgb(rgb[i], rgb[i + 1], rgb[i + 2])
    };
    let mut seen = vec![false; w as usize * h as usize];
    let mut centroids = Vec::new();
    for y in 0..h {
        for x in 0..w {
            let idx = y as usize * w as usize + x as usize;
            if seen[idx] || at(x, y) != color {
                continue;
            }
            let mut stack = vec![(x, y)];
            seen[idx] = true;
            let mut sx = 0.0;
            let mut sy = 0.0;
            let mut n = 0.0;
            while let Some((cx, cy)) = stack.pop() {
                sx += cx as f64;
                sy += cy as f64;
                n += 1.0;
                for dy in -1i64..=1 {
                    for dx in -1i64..=1 {
                        let nx = cx as i64 + dx;
                        let ny = cy as i64 + dy;
                        if nx < 0 || ny < 0 || nx >= w as i64 || ny >= h as i64 {
                            continue;
                        }
                        let nidx = ny as usize * w as usize + nx as usize;
                        if !seen[nidx] && at(nx as u32, ny as u32) == color {
                            seen[nidx] = true;
                            stack.push((nx as u32, ny as u32));
                        }
                    }
                }
            }
            centroids.push((sx / n + 0.5, sy / n + 0.5));
        }
    }
    centroids
}

#[test]
fn digitizing_rendered_markers_recovers_data_within_half_percent() {
    let coords = [(1.0, 3.0), (4.0, 7.5), (8.0, 2.0)];
    let data = data_with_points(&coords);
    let mut style = StyleSpec::default_for(1);
    style.plot_type = PlotType::Points;
    style.show_grid = false;
    style.series[0].marker = MarkerShape::Circle;
    style.series[0].marker_size = 4.0;
    let rendered = render_plot(&data, &style).unwrap();

    let (w, h, rgb) = decode_png(&rendered.png);
    let found = color_clusters(w, h, &rgb, style.series[0].color);
    assert_eq!(found.len(), coords.len(), "expected one cluster per marker");

    let x_range = 8.0 - 1.0;
    let y_range = 7.5 - 2.0;
    for &(x, y) in &coords {
        let recovered = found
            .iter()
            .map(|&(px, py)| rendered.transform.px_to_data(px, py))
            .min_by(|a, b| {
                let da = (a.x - x).abs() + (a.y - y).abs();
                let db = (b.x - x).abs() + (b.y - y).abs();
                da.partial_cmp(&db).unwrap()
            })
            .unwrap();
        assert!(
            (recovered.x - x).abs() <= 0.005 * x_range,
            "x recovery off: {} vs {}",
            recovered.x,
            x
        );
        assert!(
            (recovered.y - y).abs() <= 0.005 * y_range,
            "y recovery off: {} vs {}",
            recovered.y,
            y
        );
    }
}

#[test]
fn hidden_axis_text_leaves_no_black_label_rows() {
    let data = data_with_points(&[(0.0, 0.0), (1.0, 1.0)]);
    let mut style = StyleSpec::default_for(1);
    style.axis_label_mode = AxisTextMode::Hidden;
    style.tick_label_mode = TickLabelMode::Hidden;
    let with_text = render_plot(&data, &StyleSpec::default_for(1)).unwrap();
    let without = render_plot(&data, &style).unwrap();
    assert_ne!(with_text.png, without.png);

    // Hiding text shrinks the margins to axis + ticks only, so far
    // fewer black pixels overall and clean outermost rows/columns.
    let count_black = |png: &[u8]| {
        let (w, h, rgb) = decode_png(png);
        let mut n = 0usize;
        for y in 0..h {
            for x in 0..w {
                let i = (y as usize * w as usize + x as usize) * 3;
                if rgb[i] == 0 && rgb[i + 1] == 0 && rgb[i + 2] == 0 {
                    n += 1;
                }
            }
        }
        n
    };
    assert!(count_black(&without.png) < count_black(&with_text.png) * 7 / 10);

    let (w, h, rgb) = decode_png(&without.png);
    for y in [0, h - 1] {
        for x in 0..w {
            let i = (y as usize * w as usize + x as usize) * 3;
            assert_eq!(&rgb[i..i + 3], &[255, 255, 255], "text pixel at edge row {y}");
        }
    }
}

use plotextract_core::model::{AxisSpec, PlotData, Point, Series};
use plotextract_core::render::*;
fn main() {
    let data = PlotData {
        title: Some("Thermal response of sample B".into()),
        x_axis: AxisSpec::linear("Temperature", "K"),
        y_axis: AxisSpec::linear("Conductivity", "S/m"),
        series: vec![
            Series::new("heating", vec![
                Point::new(10.0, 1.2), Point::new(25.0, 2.8), Point::new(40.0, 4.1),
                Point::new(55.0, 4.9), Point::new(70.0, 6.3), Point::new(85.0, 7.0),
            ]),
            Series::new("cooling", vec![
                Point::new(10.0, 0.8), Point::new(30.0, 1.9), Point::new(50.0, 3.4),
                Point::new(70.0, 4.2), Point::new(90.0, 5.1),
            ]),
        ],
    };
    let mut style = StyleSpec::default_for(2);
    style.series[1].marker = MarkerShape::Square;
    style.series[1].line_style = LineStyle::Dashed;
    style.font_size = 12;
    let r = render_plot(&data, &style).unwrap();
    std::fs::write("/tmp/view1.png", &r.png).unwrap();

    let mut d2 = data.clone();
    d2.x_axis.scale = plotextract_core::model::AxisScale::Log;
    let mut s2 = StyleSpec::default_for(2);
    s2.plot_type = PlotType::Points;
    s2.show_top_right_axes = true;
    s2.font_family = FontFamily::Mono;
    s2.font_size = 16;
    s2.tick_label_mode = TickLabelMode::Shuffled { seed: 9 };
    let r2 = render_plot(&d2, &s2).unwrap();
    std::fs::write("/tmp/view2.png", &r2.png).unwrap();
    println!("ok");
}

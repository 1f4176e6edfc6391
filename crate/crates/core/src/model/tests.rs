use super::*;
use proptest::prelude::*;

fn sample_plot() -> PlotData {
    PlotData {
        title: Some("Test plot".into()),
        x_axis: AxisSpec::linear("Temperature", "K"),
        y_axis: AxisSpec::linear("Resistance", "Ohm"),
        series: vec![Series::new(
            "run 1",
            vec![Point::new(1.0, 2.0), Point::new(2.0, 4.0), Point::new(3.0, 8.0)],
        )],
    }
}

#[test]
fn valid_plot_has_empty_report() {
    assert!(validate_plot_data(&sample_plot()).is_valid());
}

#[test]
fn nan_coordinate_is_reported() {
    let mut plot = sample_plot();
    plot.series[0].points[1].y = f64::NAN;
    let report = validate_plot_data(&plot);
    assert_eq!(report.violations.len(), 1);
    assert_eq!(report.violations[0].message, "non-finite coordinate");
    assert_eq!(report.violations[0].path, "series[0].points[1]");
}

#[test]
fn empty_axis_label_is_reported() {
    let mut plot = sample_plot();
    plot.x_axis.label.clear();
    let report = validate_plot_data(&plot);
    assert!(report.violations.iter().any(|v| v.message == "missing axis label"));
}

#[test]
fn canonicalize_sorts_points_by_x() {
    let mut plot = sample_plot();
    plot.series[0].points = vec![Point::new(2.0, 0.0), Point::new(1.0, 0.0)];
    let canon = canonicalize(&plot).unwrap();
    assert_eq!(canon.series[0].points, vec![Point::new(1.0, 0.0), Point::new(2.0, 0.0)]);
}

#[test]
fn canonicalize_suffixes_duplicate_names() {
    let mut plot = sample_plot();
    plot.series = vec![
        Series::new("A", vec![Point::new(0.0, 0.0)]),
        Series::new("A", vec![Point::new(0.0, 1.0)]),
    ];
    let canon = canonicalize(&plot).unwrap();
    assert_eq!(canon.series[0].name, "A");
    assert_eq!(canon.series[1].name, "A (2)");
}

#[test]
fn canonicalize_names_unnamed_series() {
    let mut plot = sample_plot();
    plot.series = vec![
        Series::new("", vec![Point::new(0.0, 0.0)]),
        Series::new("", vec![Point::new(0.0, 1.0)]),
    ];
    let canon = canonicalize(&plot).unwrap();
    assert_eq!(canon.series[0].name, "series 1");
    assert_eq!(canon.series[1].name, "series 2");
}

#[test]
fn canonical_input_is_unchanged() {
    let plot = sample_plot();
    assert_eq!(canonicalize(&plot).unwrap(), plot);
}

#[test]
fn canonicalize_rejects_non_finite() {
    let mut plot = sample_plot();
    plot.series[0].points[0].x = f64::INFINITY;
    assert!(matches!(canonicalize(&plot), Err(ModelError::Invalid(_))));
}

#[test]
fn json_schema_is_pinned() {
    let plot = PlotData {
        title: None,
        x_axis: AxisSpec::linear("t", "s"),
        y_axis: AxisSpec::log("v", ""),
        series: vec![Series::new("a", vec![Point::new(0.5, 10.0)])],
    };
    let expected = r#"{
  "title": null,
  "x_axis": {
    "label": "t",
    "unit": "s",
    "scale": "linear"
  },
  "y_axis": {
    "label": "v",
    "unit": "",
    "scale": "log"
  },
  "series": [
    {
      "name": "a",
      "points": [
        [
          0.5,
          10.0
        ]
      ]
    }
  ]
}
"#;
    assert_eq!(encode_json(&plot).unwrap(), expected);
    assert_eq!(decode_json(expected).unwrap(), plot);
}

#[test]
fn decode_rejects_unknown_keys_and_invalid_data() {
    let with_extra = r#"{"title": null, "x_axis": {"label": "t", "unit": "", "scale": "linear"},
        "y_axis": {"label": "v", "unit": "", "scale": "linear"}, "series": [], "extra": 1}"#;
    assert!(matches!(decode_json(with_extra), Err(ModelError::Json { .. })));

    let empty_series = r#"{"title": null, "x_axis": {"label": "t", "unit": "", "scale": "linear"},
        "y_axis": {"label": "v", "unit": "", "scale": "linear"}, "series": []}"#;
    assert!(matches!(decode_json(empty_series), Err(ModelError::Invalid(_))));
}

#[test]
fn csv_export_quotes_and_uses_lf() {
    let plot = PlotData {
        title: None,
        x_axis: AxisSpec::linear("t", "s"),
        y_axis: AxisSpec::linear("v", ""),
        series: vec![
            Series::new("plain", vec![Point::new(2.0, 3.0), Point::new(1.0, 0.25)]),
            Series::new("a,b \"q\"", vec![Point::new(0.125, -4.0)]),
        ],
    };
    let csv = encode_csv(&plot).unwrap();
    assert_eq!(csv, "series,x,y\nplain,1,0.25\nplain,2,3\n\"a,b \"\"q\"\"\",0.125,-4\n");
    assert!(!csv.contains('\r'));
}

#[test]
fn outcome_consistency_rules() {
    let data = Some(sample_plot());
    let ok = ExtractionOutcome {
        status: OutcomeStatus::Accepted,
        data: data.clone(),
        diagnostics: vec![],
        transcript_id: "t".into(),
    };
    assert!(ok.is_consistent());
    let bad = ExtractionOutcome {
        status: OutcomeStatus::NoData,
        data,
        diagnostics: vec![],
        transcript_id: "t".into(),
    };
    assert!(!bad.is_consistent());
}

/// Coordinates representable in 12 significant digits, so that one
/// encode/decode cycle is lossless.
fn coord() -> impl Strategy<Value = f64> {
    (-999_999i64..=999_999i64, -6i32..=6i32)
        .prop_map(|(m, e)| (m as f64) * 10f64.powi(e))
        .prop_map(round_sig12)
}

fn arb_plot() -> impl Strategy<Value = PlotData> {
    let point = (coord(), coord()).prop_map(|(x, y)| Point::new(x, y));
    let series = ("[a-zA-Z ]{0,8}", prop::collection::vec(point, 1..6))
        .prop_map(|(name, points)| Series::new(name, points));
    (
        prop::option::of("[a-zA-Z ]{1,12}"),
        "[a-zA-Z]{1,8}",
        "[a-zA-Z]{1,8}",
        prop::collection::vec(series, 1..4),
    )
        .prop_map(|(title, xl, yl, series)| PlotData {
            title,
            x_axis: AxisSpec::linear(xl, "u"),
            y_axis: AxisSpec::linear(yl, ""),
            series,
        })
}

proptest! {
    #[test]
    fn canonicalize_is_idempotent(plot in arb_plot()) {
        let once = canonicalize(&plot).unwrap();
        let twice = canonicalize(&once).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn json_round_trip_is_exact(plot in arb_plot()) {
        let canon = canonicalize(&plot).unwrap();
        let decoded = decode_json(&encode_json(&canon).unwrap()).unwrap();
        prop_assert_eq!(decoded, canon);
    }

    #[test]
    fn one_encode_cycle_stabilizes_arbitrary_floats(
        xs in prop::collection::vec((any::<f64>(), any::<f64>()), 1..6)
    ) {
        let finite: Vec<Point> = xs
            .into_iter()
            .map(|(x, y)| Point::new(
                if x.is_finite() { x } else { 0.0 },
                if y.is_finite() { y } else { 0.0 },
            ))
            .collect();
        let plot = PlotData {
            title: None,
            x_axis: AxisSpec::linear("x", ""),
            y_axis: AxisSpec::linear("y", ""),
            series: vec![Series::new("s", finite)],
        };
        let once = decode_json(&encode_json(&plot).unwrap()).unwrap();
        let twice = decode_json(&encode_json(&once).unwrap()).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn empty_validation_iff_canonicalize_succeeds(
        plot in arb_plot(),
        poison in prop::option::of(0usize..3)
    ) {
        let mut plot = plot;
        if let Some(kind) = poison {
            match kind {
                0 => plot.series[0].points[0].x = f64::NAN,
                1 => plot.x_axis.label.clear(),
                _ => plot.series[0].points.clear(),
            }
        }
        let valid = validate_plot_data(&plot).is_valid();
        prop_assert_eq!(valid, canonicalize(&plot).is_ok());
    }
}

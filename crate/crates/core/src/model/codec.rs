//! On-disk formats: canonical plot JSON and the three-column CSV export.

use super::{canonicalize, fmt_sig, validate_plot_data, ModelError, PlotData};

/// Encodes to the canonical JSON document. Key names are fixed:
/// `title`, `x_axis`/`y_axis` (`label`, `unit`, `scale`), `series`
/// (`name`, `points` as `[x, y]` pairs). Rejects invalid data.
pub fn encode_json(data: &PlotData) -> Result<String, ModelError> {
    let report = validate_plot_data(data);
    if !report.is_valid() {
        return Err(ModelError::Invalid(report));
    }
    let mut text = serde_json::to_string_pretty(data).expect("valid plot data serializes");
    text.push('\n');
    Ok(text)
}

/// Strict parse of the canonical JSON document plus invariant
/// validation. Unknown keys are rejected.
pub fn decode_json(text: &str) -> Result<PlotData, ModelError> {
    let data: PlotData = serde_json::from_str(text).map_err(|e| ModelError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let report = validate_plot_data(&data);
    if !report.is_valid() {
        return Err(ModelError::Invalid(report));
    }
    Ok(data)
}

/// CSV export: header `series,x,y`, one row per point, LF endings,
/// RFC 4180 quoting for names that need it. Data is canonicalized
/// first so the row order is stable.
pub fn encode_csv(data: &PlotData) -> Result<String, ModelError> {
    let canon = canonicalize(data)?;
    let mut out = String::from("series,x,y\n");
    for series in &canon.series {
        let name = csv_field(&series.name);
        for p in &series.points {
            out.push_str(&name);
            out.push(',');
            out.push_str(&fmt_sig(p.x, 12));
            out.push(',');
            out.push_str(&fmt_sig(p.y, 12));
            out.push('\n');
        }
    }
    Ok(out)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

//! Pairing the series of two plots before comparison.

use super::matching::combined_ranges;
use crate::model::{PlotData, Point};

/// Index pairs into (truth, extracted) series lists, plus the series
/// left unpaired on each side.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesPairing {
    pub pairs: Vec<(usize, usize)>,
    pub unpaired_truth: Vec<usize>,
    pub unpaired_extracted: Vec<usize>,
}

/// Pairs series by case-insensitive name match first; whatever remains
/// is paired greedily by smallest centroid distance in space
/// normalized by the combined ranges of both plots. Leftover series
/// stay unpaired and are scored as wholesale false negatives (truth
/// side) or false positives (extracted side) by the caller.
pub fn pair_series(truth: &PlotData, extracted: &PlotData) -> SeriesPairing {
    let mut pairs = Vec::new();
    let mut truth_left: Vec<usize> = (0..truth.series.len()).collect();
    let mut ext_left: Vec<usize> = (0..extracted.series.len()).collect();

    // Name pass.
    let mut ti = 0;
    while ti < truth_left.len() {
        let t_idx = truth_left[ti];
        let t_name = truth.series[t_idx].name.trim().to_lowercase();
        let hit = (!t_name.is_empty())
            .then(|| {
                ext_left.iter().position(|&e_idx| {
                    extracted.series[e_idx].name.trim().to_lowercase() == t_name
                })
            })
            .flatten();
        if let Some(ei) = hit {
            pairs.push((t_idx, ext_left.remove(ei)));
            truth_left.remove(ti);
        } else {
            ti += 1;
        }
    }

    // Centroid pass over the remainder.
    if !truth_left.is_empty() && !ext_left.is_empty() {
        let all_truth: Vec<Point> = truth.all_points().collect();
        let all_ext: Vec<Point> = extracted.all_points().collect();
        let ranges = combined_ranges(&all_truth, &all_ext).expect("both plots have points");

        while !truth_left.is_empty() && !ext_left.is_empty() {
            let mut best: Option<(f64, usize, usize)> = None;
            for (tp, &t_idx) in truth_left.iter().enumerate() {
                let tc = centroid(&truth.series[t_idx].points);
                for (ep, &e_idx) in ext_left.iter().enumerate() {
                    let ec = centroid(&extracted.series[e_idx].points);
                    let d = ranges.normalized_distance(tc, ec);
                    if best.map_or(true, |(bd, _, _)| d < bd) {
                        best = Some((d, tp, ep));
                    }
                }
            }
            let (_, tp, ep) = best.unwrap();
            pairs.push((truth_left.remove(tp), ext_left.remove(ep)));
        }
    }

    SeriesPairing { pairs, unpaired_truth: truth_left, unpaired_extracted: ext_left }
}

fn centroid(points: &[Point]) -> Point {
    let n = points.len() as f64;
    Point::new(
        points.iter().map(|p| p.x).sum::<f64>() / n,
        points.iter().map(|p| p.y).sum::<f64>() / n,
    )
}

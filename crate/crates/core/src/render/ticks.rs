//! Tick placement and label generation, including the deliberately
//! broken label schemes used by corrupted benchmark plots.

use crate::model::fmt_sig;
use serde::{Deserialize, Serialize};

/// Nice linear ticks with a 1/2/5 step covering [min, max].
pub fn linear_ticks(min: f64, max: f64) -> Vec<f64> {
    debug_assert!(max > min);
    let span = max - min;
    let raw_step = span / 4.0;
    let mag = 10f64.powf(raw_step.log10().floor());
    let norm = raw_step / mag;
    let step = if norm <= 1.0 {
        1.0
    } else if norm <= 2.0 {
        2.0
    } else if norm <= 5.0 {
        5.0
    } else {
        10.0
    } * mag;

    let mut ticks = Vec::new();
    let first = (min / step).ceil() * step;
    let mut v = first;
    while v <= max + step * 1e-9 && ticks.len() < 12 {
        // Snap near-zero accumulation error to a clean zero.
        let snapped = if v.abs() < step * 1e-9 { 0.0 } else { v };
        ticks.push(snapped);
        v += step;
    }
    ticks
}

/// Decade ticks 10^k within [min, max]; both bounds must be positive.
/// Falls back to the endpoints when no decade falls inside.
pub fn log_ticks(min: f64, max: f64) -> Vec<f64> {
    debug_assert!(min > 0.0 && max > min);
    let lo = min.log10().ceil() as i32;
    let hi = max.log10().floor() as i32;
    if lo > hi {
        return vec![min, max];
    }
    (lo..=hi).map(|k| 10f64.powi(k)).collect()
}

pub fn tick_label(v: f64) -> String {
    fmt_sig(v, 4)
}

/// How tick labels are written next to the marks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum TickLabelMode {
    /// True values.
    Normal,
    /// Marks without any numbers.
    Hidden,
    /// Numbers from an unrelated skipping integer sequence.
    NonConsecutive { seed: u64 },
    /// True values permuted out of order.
    Shuffled { seed: u64 },
}

/// Labels for the given tick values, or `None` when hidden.
pub fn tick_labels(ticks: &[f64], mode: TickLabelMode) -> Option<Vec<String>> {
    match mode {
        TickLabelMode::Hidden => None,
        TickLabelMode::Normal => Some(ticks.iter().map(|&v| tick_label(v)).collect()),
        TickLabelMode::NonConsecutive { seed } => {
            let mut rng = XorShift64::new(seed);
            let mut v = (rng.next() % 7) as i64;
            let jumps = [1i64, 2, 5, 9];
            let labels = ticks
                .iter()
                .map(|_| {
                    v += jumps[(rng.next() % jumps.len() as u64) as usize];
                    v.to_string()
                })
                .collect();
            Some(labels)
        }
        TickLabelMode::Shuffled { seed } => {
            let mut labels: Vec<String> = ticks.iter().map(|&v| tick_label(v)).collect();
            let mut rng = XorShift64::new(seed);
            let n = labels.len();
            for i in (1..n).rev() {
                let j = (rng.next() % (i as u64 + 1)) as usize;
                labels.swap(i, j);
            }
            // A shuffle that lands on the identity is not a corruption.
            if n >= 2 && labels.iter().zip(ticks).all(|(l, &t)| *l == tick_label(t)) {
                labels.swap(0, 1);
            }
            Some(labels)
        }
    }
}

/// Tiny deterministic generator for label corruption; not for
/// statistics, just reproducible scrambling.
struct XorShift64 {
    state: u64,
}

impl XorShift64 {
    fn new(seed: u64) -> Self {
        XorShift64 { state: seed | 1 }
    }

    fn next(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.state = x;
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_ticks_cover_range_with_nice_steps() {
        let ticks = linear_ticks(0.0, 10.0);
        assert!(ticks.len() >= 3 && ticks.len() <= 12);
        assert!(ticks.iter().all(|&t| (0.0..=10.0 + 1e-9).contains(&t)));
        let step = ticks[1] - ticks[0];
        for w in ticks.windows(2) {
            assert!((w[1] - w[0] - step).abs() < 1e-9);
        }
    }

    #[test]
    fn log_ticks_are_decades() {
        assert_eq!(log_ticks(0.5, 2000.0), vec![1.0, 10.0, 100.0, 1000.0]);
        assert_eq!(log_ticks(2.0, 8.0), vec![2.0, 8.0]);
    }

    #[test]
    fn shuffled_labels_differ_from_normal() {
        let ticks = [1.0, 2.0, 3.0, 4.0];
        let normal = tick_labels(&ticks, TickLabelMode::Normal).unwrap();
        let shuffled = tick_labels(&ticks, TickLabelMode::Shuffled { seed: 7 }).unwrap();
        assert_ne!(normal, shuffled);
        let mut sorted = shuffled.clone();
        sorted.sort();
        let mut normal_sorted = normal.clone();
        normal_sorted.sort();
        assert_eq!(sorted, normal_sorted);
    }

    #[test]
    fn corruption_labels_are_seed_deterministic() {
        let ticks = [0.0, 1.0, 2.0];
        let a = tick_labels(&ticks, TickLabelMode::NonConsecutive { seed: 42 });
        let b = tick_labels(&ticks, TickLabelMode::NonConsecutive { seed: 42 });
        assert_eq!(a, b);
        assert_eq!(tick_labels(&ticks, TickLabelMode::Hidden), None);
    }
}

//! Plot-classification metrics: did the pipeline accept exactly the
//! extractable plots?

use crate::model::OutcomeStatus;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassReport {
    pub tp: usize,
    pub fp: usize,
    #[serde(rename = "fn")]
    pub fn_: usize,
    pub tn: usize,
    pub precision: Option<f64>,
    pub recall: Option<f64>,
}

/// Positive class = extractable. A plot counts as predicted positive
/// exactly when its outcome is `Accepted`; rejection at step 1,
/// flagging at step 4, and hard failures all predict negative.
pub fn classification_metrics(records: &[(bool, OutcomeStatus)]) -> ClassReport {
    let mut tp = 0;
    let mut fp = 0;
    let mut fn_ = 0;
    let mut tn = 0;
    for &(extractable, status) in records {
        let predicted = status == OutcomeStatus::Accepted;
        match (extractable, predicted) {
            (true, true) => tp += 1,
            (false, true) => fp += 1,
            (true, false) => fn_ += 1,
            (false, false) => tn += 1,
        }
    }
    let precision = (tp + fp > 0).then(|| tp as f64 / (tp + fp) as f64);
    let recall = (tp + fn_ > 0).then(|| tp as f64 / (tp + fn_) as f64);
    ClassReport { tp, fp, fn_, tn, precision, recall }
}

//! Reference results for the six preset cases and the tolerances the
//! reproduction reports are checked against.

use crate::config::ScenarioId;

pub const DELTA_F_TOL: f64 = 0.002;
pub const COST_REL_TOL: f64 = 0.05;
pub const MIN_DISTANCE_REL_TOL: f64 = 0.10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CaseValues {
    pub scenario: ScenarioId,
    pub e: f64,
    /// Final distance on capture, minimum distance otherwise (m).
    pub distance: f64,
    /// `None` when the case does not end in capture.
    pub delta_f: Option<f64>,
    pub cost: Option<f64>,
}

const fn hit(scenario: ScenarioId, e: f64, distance: f64, delta_f: f64, cost: f64) -> CaseValues {
    CaseValues { scenario, e, distance, delta_f: Some(delta_f), cost: Some(cost) }
}

const fn miss(scenario: ScenarioId, e: f64, distance: f64) -> CaseValues {
    CaseValues { scenario, e, distance, delta_f: None, cost: None }
}

use ScenarioId::{I, II};

pub const TH_ANALYTICAL: [CaseValues; 6] = [
    hit(I, 0.2, 0.9755, 0.17615, 0.2282),
    hit(I, 1.0, 0.9820, 0.17620, 3.9560),
    hit(I, 1.5, 0.9772, 0.17623, 14.9894),
    hit(II, 0.2, 0.9731, 0.26249, 1.2439),
    hit(II, 1.0, 0.9990, 0.26254, 15.7472),
    hit(II, 1.5, 0.9520, 0.26255, 57.2428),
];

pub const TH_NUMERICAL: [CaseValues; 6] = [
    hit(I, 0.2, 0.9914, 0.17621, 0.2298),
    hit(I, 1.0, 0.9541, 0.17625, 3.9538),
    hit(I, 1.5, 0.9790, 0.17627, 14.9915),
    hit(II, 0.2, 0.9689, 0.26255, 1.2399),
    hit(II, 1.0, 0.9380, 0.26259, 15.6849),
    hit(II, 1.5, 0.9288, 0.26259, 57.2257),
];

pub const CW_BASELINE: [CaseValues; 6] = [
    hit(I, 0.2, 0.9574, 0.18914, 0.3442),
    miss(I, 1.0, 589.9189),
    miss(I, 1.5, 656.1038),
    hit(II, 0.2, 0.9253, 0.26270, 1.7730),
    miss(II, 1.0, 212.6866),
    miss(II, 1.5, 329.2829),
];

/// Outcome of checking one run against its reference row.
#[derive(Clone, Debug, PartialEq)]
pub struct CaseCheck {
    pub pass: bool,
    pub notes: Vec<String>,
}

/// Compares a run's (captured, Δf, J, min distance) with a reference row.
pub fn check_case(reference: &CaseValues, captured: bool, delta_f: f64, cost: f64, min_distance: f64) -> CaseCheck {
    let mut notes = Vec::new();
    match (reference.delta_f, reference.cost) {
        (Some(df), Some(j)) => {
            if !captured {
                notes.push("no capture".to_string());
            }
            if (delta_f - df).abs() > DELTA_F_TOL {
                notes.push(format!("delta_f off by {:.5}", delta_f - df));
            }
            if (cost - j).abs() > COST_REL_TOL * j.abs() {
                notes.push(format!("J off by {:.2}%", 100.0 * (cost - j) / j));
            }
        }
        _ => {
            if captured {
                notes.push("captured, expected a miss".to_string());
            }
            if (min_distance - reference.distance).abs() > MIN_DISTANCE_REL_TOL * reference.distance {
                notes.push(format!("min distance off by {:.2}%", 100.0 * (min_distance / reference.distance - 1.0)));
            }
        }
    }
    CaseCheck { pass: notes.is_empty(), notes }
}

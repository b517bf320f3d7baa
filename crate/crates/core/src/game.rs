//! Right-hand sides, saddle-point controls, cost terms and disturbances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::linalg::Vec6;
use crate::orbit::{ReferenceOrbit, RelState};
use crate::riccati::{analytical_p, GameWeights, RiccatiGain};
use crate::stm::input_gain;

/// Acceleration command (m/s²).
pub type ControlInput = [f64; 3];

/// Constant forcing applied to the velocity slots of each player (m/rad²).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Disturbance {
    pub d_p: [f64; 3],
    pub d_e: [f64; 3],
}

impl Disturbance {
    pub const NONE: Disturbance = Disturbance { d_p: [0.0; 3], d_e: [0.0; 3] };

    pub fn relative(&self) -> [f64; 3] {
        [self.d_p[0] - self.d_e[0], self.d_p[1] - self.d_e[1], self.d_p[2] - self.d_e[2]]
    }
}

/// Draws all six components uniformly from `[−bound, bound]`.
pub fn make_disturbance(seed: u64, bound: f64) -> Disturbance {
    if !(bound > 0.0) {
        return Disturbance::NONE;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    draw_disturbance(&mut rng, bound)
}

pub(crate) fn draw_disturbance(rng: &mut ChaCha8Rng, bound: f64) -> Disturbance {
    let mut d = Disturbance::NONE;
    for v in d.d_p.iter_mut().chain(d.d_e.iter_mut()) {
        *v = rng.random_range(-bound..=bound);
    }
    d
}

/// Saddle-point controls from λ = P·x: `u = −(1/r)(β/ρ³) λ_vel` for each player.
pub fn control_inputs(
    gain: &RiccatiGain,
    x: &RelState,
    orbit: &ReferenceOrbit,
    weights: &GameWeights,
    f: f64,
) -> (ControlInput, ControlInput) {
    let lambda = gain.p.mul_vec(&x.0);
    let b = input_gain(orbit, f);
    let mut u_p = [0.0; 3];
    let mut u_e = [0.0; 3];
    for i in 0..3 {
        let bl = b * lambda[i + 3];
        u_p[i] = -bl / weights.r_p;
        u_e[i] = -bl / weights.r_e;
    }
    (u_p, u_e)
}

fn homogeneous(orbit: &ReferenceOrbit, f: f64, x: &Vec6) -> Vec6 {
    [x[3], x[4], x[5], 3.0 * x[0] / orbit.rho(f) + 2.0 * x[4], -2.0 * x[3], -x[2]]
}

/// Single-player dynamics `A X + B u + d`.
pub fn player_derivative(orbit: &ReferenceOrbit, f: f64, x: &RelState, u: &ControlInput, d: &[f64; 3]) -> Vec6 {
    let mut out = homogeneous(orbit, f, &x.0);
    let b = input_gain(orbit, f);
    for i in 0..3 {
        out[i + 3] += b * u[i] + d[i];
    }
    out
}

/// Relative dynamics `A x + B u_p − B u_e + d_p − d_e`.
pub fn relative_derivative(
    orbit: &ReferenceOrbit,
    f: f64,
    x: &RelState,
    u_p: &ControlInput,
    u_e: &ControlInput,
    d_p: &[f64; 3],
    d_e: &[f64; 3],
) -> Vec6 {
    let mut out = homogeneous(orbit, f, &x.0);
    let b = input_gain(orbit, f);
    for i in 0..3 {
        out[i + 3] += b * (u_p[i] - u_e[i]) + d_p[i] - d_e[i];
    }
    out
}

/// Running cost `½(r_p|u_p|² − r_e|u_e|²)` per radian.
pub fn cost_rate(u_p: &ControlInput, u_e: &ControlInput, weights: &GameWeights) -> f64 {
    let sq = |u: &ControlInput| u.iter().map(|v| v * v).sum::<f64>();
    let evader = if u_e.iter().all(|v| *v == 0.0) { 0.0 } else { weights.r_e * sq(u_e) };
    0.5 * (weights.r_p * sq(u_p) - evader)
}

/// Terminal cost `½ s_r |r|²`.
pub fn terminal_cost(x_f: &RelState, weights: &GameWeights) -> f64 {
    let d = x_f.distance();
    0.5 * weights.s_r * d * d
}

/// Gain the circular-orbit strategy would use: the closed form on a circular
/// orbit sharing `p` and `μ` with the true reference.
pub fn cw_gain(orbit: &ReferenceOrbit, weights: &GameWeights, f: f64, f_f: f64) -> Result<RiccatiGain> {
    analytical_p(&orbit.circular_surrogate(), weights, f, f_f)
}

//! Fixed-step propagation and the receding-horizon game loop.

use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::game::{
    control_inputs, cost_rate, draw_disturbance, player_derivative, relative_derivative, terminal_cost, ControlInput,
    Disturbance,
};
use crate::linalg::Vec6;
use crate::orbit::{ReferenceOrbit, RelState};
use crate::riccati::{analytical_p, defense_p, numerical_p_oracle, GameWeights, RiccatiGain, TimeToGo};

pub const DEFAULT_STEP: f64 = 1e-5;
pub const DEFAULT_CAPTURE_RADIUS: f64 = 1.0;
pub const DEFAULT_MAX_STEPS: usize = 100_000;
pub const DEFAULT_DECIMATION: usize = 100;
pub const DEFAULT_ORACLE_STEPS: usize = 2_000;

/// Monotonic time source in seconds. The core crate has no clock of its own.
pub trait Clock {
    fn now(&self) -> f64;
}

/// Clock that always reads zero; timings come out as zero.
#[derive(Clone, Copy, Debug, Default)]
pub struct NullClock;

impl Clock for NullClock {
    fn now(&self) -> f64 {
        0.0
    }
}

/// Classical fourth-order Runge–Kutta step.
pub fn rk4_step(g: impl Fn(f64, &Vec6) -> Vec6, f: f64, x: &Vec6, h: f64) -> Vec6 {
    let shift = |k: &Vec6, s: f64| {
        let mut o = *x;
        for i in 0..6 {
            o[i] += s * k[i];
        }
        o
    };
    let k1 = g(f, x);
    let k2 = g(f + 0.5 * h, &shift(&k1, 0.5 * h));
    let k3 = g(f + 0.5 * h, &shift(&k2, 0.5 * h));
    let k4 = g(f + h, &shift(&k3, h));
    let mut out = *x;
    for i in 0..6 {
        out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    out
}

/// How the pursuer's and evader's gains are obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Closed-form gain on the true reference orbit.
    ThAnalytical,
    /// Backward-RK4 DRE with the given number of steps per refresh.
    Numerical { oracle_steps: usize },
    /// Closed-form gain on a circular orbit with the same `p`.
    CwBaseline,
    /// One-sided gain against a non-manoeuvring target.
    Defense,
}

impl Strategy {
    pub fn name(&self) -> &'static str {
        match self {
            Strategy::ThAnalytical => "th",
            Strategy::Numerical { .. } => "numerical",
            Strategy::CwBaseline => "cw",
            Strategy::Defense => "defense",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DisturbanceSpec {
    pub seed: u64,
    /// Component bound (m/rad²).
    pub bound: f64,
    /// Redraw every step instead of once per run.
    pub resample_each_step: bool,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GameConfig {
    pub orbit: ReferenceOrbit,
    pub weights: GameWeights,
    pub pursuer: RelState,
    pub evader: RelState,
    pub f0: f64,
    pub h_f: f64,
    pub capture_radius: f64,
    pub strategy: Strategy,
    pub disturbance: Option<DisturbanceSpec>,
    pub max_steps: usize,
    /// Recompute the gain every `refresh_every` steps.
    pub refresh_every: usize,
    /// Keep every `decimation`-th step in the trajectory.
    pub decimation: usize,
    /// End the run as a miss once the range starts opening after having closed.
    pub stop_when_receding: bool,
}

impl GameConfig {
    pub fn new(
        orbit: ReferenceOrbit,
        weights: GameWeights,
        pursuer: RelState,
        evader: RelState,
        strategy: Strategy,
    ) -> Self {
        Self {
            orbit,
            weights,
            pursuer,
            evader,
            f0: 0.0,
            h_f: DEFAULT_STEP,
            capture_radius: DEFAULT_CAPTURE_RADIUS,
            strategy,
            disturbance: None,
            max_steps: DEFAULT_MAX_STEPS,
            refresh_every: 1,
            decimation: DEFAULT_DECIMATION,
            stop_when_receding: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.weights.validate()?;
        if !(self.h_f > 0.0 && self.h_f.is_finite()) {
            return Err(Error::InvalidConfig("h_f must be positive"));
        }
        if !(self.capture_radius > 0.0) {
            return Err(Error::InvalidConfig("capture radius must be positive"));
        }
        if self.max_steps == 0 || self.refresh_every == 0 || self.decimation == 0 {
            return Err(Error::InvalidConfig("max_steps, refresh_every and decimation must be at least 1"));
        }
        if let Strategy::Numerical { oracle_steps: 0 } = self.strategy {
            return Err(Error::InvalidConfig("oracle step count must be at least 1"));
        }
        if !(self.pursuer.is_finite() && self.evader.is_finite() && self.f0.is_finite()) {
            return Err(Error::InvalidConfig("initial states must be finite"));
        }
        if let Some(d) = self.disturbance {
            if !(d.bound >= 0.0 && d.bound.is_finite()) {
                return Err(Error::InvalidConfig("disturbance bound must be non-negative"));
            }
        }
        self.orbit.check_anomaly(self.f0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sample {
    pub f: f64,
    pub pursuer: RelState,
    pub evader: RelState,
    pub relative: RelState,
    pub u_p: ControlInput,
    pub u_e: ControlInput,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Termination {
    Captured,
    /// Closest approach passed outside the capture radius.
    Receding,
    MaxSteps,
    /// The gain inverse became ill-conditioned (conjugate point on the horizon).
    GainBreakdown {
        condition: f64,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct GameResult {
    pub strategy: Strategy,
    pub captured: bool,
    pub termination: Termination,
    /// Anomaly elapsed (rad).
    pub delta_f: f64,
    pub final_distance: f64,
    pub min_distance: f64,
    /// Game cost J, running plus terminal.
    pub cost: f64,
    /// Terminal share of `cost`; zero without capture.
    pub terminal_cost: f64,
    pub steps: usize,
    /// Disturbance in effect at the end of the run.
    pub disturbance: Disturbance,
    pub samples: Vec<Sample>,
    pub gain_evaluations: usize,
    pub gain_seconds: f64,
    pub wall_seconds: f64,
}

struct Gains {
    orbit: ReferenceOrbit,
    control_orbit: ReferenceOrbit,
    weights: GameWeights,
    strategy: Strategy,
    ttg: TimeToGo,
    limit: Option<f64>,
}

impl Gains {
    fn new(cfg: &GameConfig) -> Self {
        let control_orbit = match cfg.strategy {
            Strategy::CwBaseline => cfg.orbit.circular_surrogate(),
            _ => cfg.orbit,
        };
        Self {
            orbit: cfg.orbit,
            control_orbit,
            weights: cfg.weights,
            strategy: cfg.strategy,
            ttg: TimeToGo::for_orbit(&control_orbit, cfg.h_f),
            limit: control_orbit.anomaly_limit(),
        }
    }

    fn gain(&self, f: f64, x: &RelState) -> Result<RiccatiGain> {
        let mut f_f = f + self.ttg.estimate(x);
        if let Some(limit) = self.limit {
            f_f = f_f.min(limit * (1.0 - f64::EPSILON));
        }
        let w = &self.weights;
        match self.strategy {
            Strategy::ThAnalytical => analytical_p(&self.orbit, w, f, f_f),
            Strategy::Numerical { oracle_steps } => numerical_p_oracle(&self.orbit, w, f, f_f, oracle_steps),
            Strategy::CwBaseline => analytical_p(&self.control_orbit, w, f, f_f),
            Strategy::Defense => defense_p(&self.orbit, w.r_p, w.s_r, f, f_f),
        }
    }

    fn controls(&self, gain: &RiccatiGain, x: &RelState, f: f64) -> (ControlInput, ControlInput) {
        let (u_p, u_e) = control_inputs(gain, x, &self.control_orbit, &self.weights, f);
        match self.strategy {
            Strategy::Defense => (u_p, [0.0; 3]),
            _ => (u_p, u_e),
        }
    }
}

/// Plays one game: each step re-estimates the horizon, refreshes the gain,
/// holds both controls over an RK4 step of each player, and checks capture.
pub fn run_game(cfg: &GameConfig) -> Result<GameResult> {
    run_game_timed(cfg, &NullClock)
}

pub fn run_game_timed(cfg: &GameConfig, clock: &dyn Clock) -> Result<GameResult> {
    cfg.validate()?;
    let t_start = clock.now();
    let gains = Gains::new(cfg);
    let orbit = cfg.orbit;
    let h = cfg.h_f;

    let mut rng = cfg.disturbance.map(|d| (ChaCha8Rng::seed_from_u64(d.seed), d));
    let mut dist = match rng.as_mut() {
        Some((r, d)) if d.bound > 0.0 => draw_disturbance(r, d.bound),
        _ => Disturbance::NONE,
    };

    let mut xp = cfg.pursuer;
    let mut xe = cfg.evader;
    let mut x = xp - xe;
    let mut f = cfg.f0;
    let mut steps = 0usize;
    let mut cost = 0.0;
    let mut min_distance = x.distance();
    let mut was_closing = false;
    let mut gain: Option<RiccatiGain> = None;
    let mut gain_evaluations = 0usize;
    let mut gain_seconds = 0.0;
    let mut samples = Vec::new();
    let mut last_u = ([0.0; 3], [0.0; 3]);

    let termination = loop {
        let d = x.distance();
        min_distance = min_distance.min(d);
        if d < cfg.capture_radius {
            break Termination::Captured;
        }
        if steps >= cfg.max_steps {
            break Termination::MaxSteps;
        }
        let rr = x.range_rate_product();
        if cfg.stop_when_receding && was_closing && rr >= 0.0 {
            break Termination::Receding;
        }
        was_closing |= rr < 0.0;
        orbit.check_anomaly(f + h)?;

        if gain.is_none() || steps.is_multiple_of(cfg.refresh_every) {
            let t0 = clock.now();
            match gains.gain(f, &x) {
                Ok(g) => gain = Some(g),
                Err(Error::Singular { condition }) => break Termination::GainBreakdown { condition },
                Err(e) => return Err(e),
            }
            gain_seconds += clock.now() - t0;
            gain_evaluations += 1;
        }
        let g = gain.as_ref().expect("gain computed above");
        let (u_p, u_e) = gains.controls(g, &x, f);
        last_u = (u_p, u_e);
        if steps.is_multiple_of(cfg.decimation) {
            samples.push(Sample { f, pursuer: xp, evader: xe, relative: x, u_p, u_e });
        }
        if let Some((r, spec)) = rng.as_mut() {
            if spec.resample_each_step && spec.bound > 0.0 {
                dist = draw_disturbance(r, spec.bound);
            }
        }

        let rate = cost_rate(&u_p, &u_e, &cfg.weights);
        let (dp, de) = (dist.d_p, dist.d_e);
        xp = RelState(rk4_step(|s, v| player_derivative(&orbit, s, &RelState(*v), &u_p, &dp), f, &xp.0, h));
        xe = RelState(rk4_step(|s, v| player_derivative(&orbit, s, &RelState(*v), &u_e, &de), f, &xe.0, h));
        x = RelState(rk4_step(|s, v| relative_derivative(&orbit, s, &RelState(*v), &u_p, &u_e, &dp, &de), f, &x.0, h));
        // controls are held over the step, so the rate is exact on it
        cost += rate * h;
        steps += 1;
        f = cfg.f0 + steps as f64 * h;
        if !x.is_finite() {
            return Err(Error::Singular { condition: f64::INFINITY });
        }
    };

    let captured = termination == Termination::Captured;
    let terminal = if captured { terminal_cost(&x, &cfg.weights) } else { 0.0 };
    samples.push(Sample { f, pursuer: xp, evader: xe, relative: x, u_p: last_u.0, u_e: last_u.1 });
    Ok(GameResult {
        strategy: cfg.strategy,
        captured,
        termination,
        delta_f: f - cfg.f0,
        final_distance: x.distance(),
        min_distance,
        cost: cost + terminal,
        terminal_cost: terminal,
        steps,
        disturbance: dist,
        samples,
        gain_evaluations,
        gain_seconds,
        wall_seconds: clock.now() - t_start,
    })
}

/// [`run_game`] against a coasting target with the one-sided gain.
pub fn run_defense(cfg: &GameConfig) -> Result<GameResult> {
    run_game(&GameConfig { strategy: Strategy::Defense, ..*cfg })
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairwiseComparison {
    pub a: Strategy,
    pub b: Strategy,
    /// Largest |r_a − r_b| between relative positions at common sample anomalies (m).
    pub max_position_divergence: f64,
    /// Mean gain-evaluation time of `a` over that of `b`.
    pub gain_time_ratio: f64,
}

#[derive(Clone, Debug)]
pub struct Comparison {
    pub runs: Vec<(Strategy, Result<GameResult>)>,
    pub pairs: Vec<PairwiseComparison>,
}

/// Runs the same configuration under each strategy and compares the runs pairwise.
pub fn compare_strategies(cfg: &GameConfig, strategies: &[Strategy], clock: &dyn Clock) -> Result<Comparison> {
    if strategies.len() < 2 {
        return Err(Error::InvalidConfig("comparison needs at least two strategies"));
    }
    let runs: Vec<_> =
        strategies.iter().map(|s| (*s, run_game_timed(&GameConfig { strategy: *s, ..*cfg }, clock))).collect();
    let mut pairs = Vec::new();
    for (i, (sa, ra)) in runs.iter().enumerate() {
        for (sb, rb) in runs.iter().skip(i + 1) {
            let (Ok(a), Ok(b)) = (ra, rb) else { continue };
            pairs.push(PairwiseComparison {
                a: *sa,
                b: *sb,
                max_position_divergence: position_divergence(a, b),
                gain_time_ratio: mean_gain_time(a) / mean_gain_time(b),
            });
        }
    }
    Ok(Comparison { runs, pairs })
}

fn mean_gain_time(r: &GameResult) -> f64 {
    r.gain_seconds / r.gain_evaluations.max(1) as f64
}

fn position_divergence(a: &GameResult, b: &GameResult) -> f64 {
    let tol = 1e-9;
    let mut worst = 0.0_f64;
    let mut j = 0;
    for sa in &a.samples {
        while j < b.samples.len() && b.samples[j].f < sa.f - tol {
            j += 1;
        }
        if let Some(sb) = b.samples.get(j) {
            if (sb.f - sa.f).abs() <= tol {
                worst = worst.max((sa.relative - sb.relative).distance());
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::MU_EARTH;

    fn scenario_one(e: f64, strategy: Strategy) -> GameConfig {
        GameConfig::new(
            ReferenceOrbit::new(4.2241e7, e, MU_EARTH).unwrap(),
            GameWeights::new(0.1, 1e6, 1.1e6).unwrap(),
            RelState::new([1500.0, 500.0, 0.0], [-10000.0, 0.0, 1000.0]),
            RelState::ZERO,
            strategy,
        )
    }

    #[test]
    fn rk4_constant_derivative() {
        let c = [1.0, -2.0, 3.0, 0.5, 0.0, 4.0];
        let x = rk4_step(|_, _| c, 0.0, &[1.0; 6], 0.25);
        for i in 0..6 {
            assert_eq!(x[i], 1.0 + 0.25 * c[i]);
        }
    }

    #[test]
    fn coincident_start_is_immediate_capture() {
        let mut cfg = scenario_one(0.2, Strategy::ThAnalytical);
        cfg.pursuer = RelState::ZERO;
        let r = run_game(&cfg).unwrap();
        assert!(r.captured);
        assert_eq!(r.steps, 0);
        assert_eq!(r.delta_f, 0.0);
        assert_eq!(r.cost, 0.0);
    }

    #[test]
    fn invalid_config_rejected() {
        let mut cfg = scenario_one(0.2, Strategy::ThAnalytical);
        cfg.h_f = 0.0;
        assert!(run_game(&cfg).is_err());
        let mut cfg = scenario_one(0.2, Strategy::ThAnalytical);
        cfg.capture_radius = -1.0;
        assert!(run_game(&cfg).is_err());
    }

    #[test]
    fn max_steps_reported_not_error() {
        let mut cfg = scenario_one(0.2, Strategy::ThAnalytical);
        cfg.max_steps = 50;
        let r = run_game(&cfg).unwrap();
        assert!(!r.captured);
        assert_eq!(r.termination, Termination::MaxSteps);
        assert_eq!(r.steps, 50);
        assert!(r.min_distance <= r.final_distance);
    }

    #[test]
    fn comparison_needs_two() {
        let cfg = scenario_one(0.2, Strategy::ThAnalytical);
        assert!(compare_strategies(&cfg, &[Strategy::ThAnalytical], &NullClock).is_err());
    }
}

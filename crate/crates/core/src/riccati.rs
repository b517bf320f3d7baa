//! Solutions of the game's differential Riccati equation and the
//! time-to-go estimate that sets each receding horizon.

use core::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::linalg::{Lu6, Mat6};
use crate::orbit::{ReferenceOrbit, Regime, RelState};
use crate::stm::{defense_omega12, input_gain, omega11, omega12, omega22, system_matrix};

/// Condition number above which the gain inverse is treated as singular.
pub const MAX_CONDITION: f64 = 1e12;

/// Scalar weights: terminal position `s_r`, pursuer control `r_p`, evader control `r_e`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GameWeights {
    pub s_r: f64,
    pub r_p: f64,
    pub r_e: f64,
}

impl GameWeights {
    pub fn new(s_r: f64, r_p: f64, r_e: f64) -> Result<Self> {
        let w = Self { s_r, r_p, r_e };
        w.validate()?;
        Ok(w)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.s_r.is_finite() && self.s_r >= 0.0) {
            return Err(Error::InvalidWeights("s_r must be finite and non-negative"));
        }
        if !(self.r_p.is_finite() && self.r_p > 0.0) {
            return Err(Error::InvalidWeights("r_p must be positive"));
        }
        if !(self.r_e > 0.0) {
            return Err(Error::InvalidWeights("r_e must be positive"));
        }
        Ok(())
    }

    /// Terminal weight `S = diag(s_r I₃, 0)`.
    pub fn s_matrix(&self) -> Mat6 {
        terminal_weight(self.s_r)
    }

    /// Coefficient `1/r_p − 1/r_e` of the quadratic DRE term.
    pub fn coupling(&self) -> f64 {
        1.0 / self.r_p - 1.0 / self.r_e
    }
}

fn terminal_weight(s_r: f64) -> Mat6 {
    Mat6::from_diagonal(&[s_r, s_r, s_r, 0.0, 0.0, 0.0])
}

/// Gain matrix `P` at `f_eval` for a horizon ending at `f_terminal`; costate λ = P·x.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RiccatiGain {
    pub p: Mat6,
    pub f_eval: f64,
    pub f_terminal: f64,
}

fn check_horizon(orbit: &ReferenceOrbit, f: f64, f_f: f64) -> Result<()> {
    if !(f <= f_f) {
        return Err(Error::Domain { what: "horizon end before evaluation anomaly", value: f_f, limit: f });
    }
    orbit.check_anomaly(f)?;
    orbit.check_anomaly(f_f)
}

fn solve_gain(s: &Mat6, o11: Mat6, o12: Mat6, o22: Mat6) -> Result<Mat6> {
    let m = o22 - *s * o12;
    let lu = Lu6::new(&m)?;
    let condition = lu.condition_1();
    if !(condition <= MAX_CONDITION) {
        return Err(Error::Singular { condition });
    }
    Ok(lu.solve(&(*s * o11)))
}

/// Closed-form gain `P(f) = (Ω₂₂ − S Ω₁₂)⁻¹ S Ω₁₁`, all transitions taken from `f` to `f_f`.
pub fn analytical_p(orbit: &ReferenceOrbit, weights: &GameWeights, f: f64, f_f: f64) -> Result<RiccatiGain> {
    check_horizon(orbit, f, f_f)?;
    let s = weights.s_matrix();
    if f == f_f {
        return Ok(RiccatiGain { p: s, f_eval: f, f_terminal: f_f });
    }
    let p = solve_gain(
        &s,
        omega11(orbit, f_f, f)?,
        omega12(orbit, weights.r_p, weights.r_e, f_f, f)?,
        omega22(orbit, f_f, f)?,
    )?;
    Ok(RiccatiGain { p, f_eval: f, f_terminal: f_f })
}

/// Gain for a non-manoeuvring target (evader weight taken to infinity).
pub fn defense_p(orbit: &ReferenceOrbit, r_p: f64, s_r: f64, f: f64, f_f: f64) -> Result<RiccatiGain> {
    GameWeights::new(s_r, r_p, f64::INFINITY)?;
    check_horizon(orbit, f, f_f)?;
    let s = terminal_weight(s_r);
    if f == f_f {
        return Ok(RiccatiGain { p: s, f_eval: f, f_terminal: f_f });
    }
    let p = solve_gain(&s, omega11(orbit, f_f, f)?, defense_omega12(orbit, r_p, f_f, f)?, omega22(orbit, f_f, f)?)?;
    Ok(RiccatiGain { p, f_eval: f, f_terminal: f_f })
}

/// dP/df = −AᵀP − PA + k·P B Bᵀ P with `k = 1/r_p − 1/r_e`.
pub fn dre_rhs(orbit: &ReferenceOrbit, f: f64, p: &Mat6, coupling: f64) -> Mat6 {
    let a = system_matrix(orbit, f);
    let b = input_gain(orbit, f);
    let k = coupling * b * b;
    let mut out = -(a.transpose() * *p) - *p * a;
    // B Bᵀ is b²·diag(0, I₃), so P B Bᵀ P only touches the velocity columns/rows of P
    for i in 0..6 {
        for j in 0..6 {
            let q: f64 = (3..6).map(|m| p.0[i][m] * p.0[m][j]).sum();
            out.0[i][j] += k * q;
        }
    }
    out
}

fn integrate_backward(orbit: &ReferenceOrbit, s: Mat6, coupling: f64, f: f64, f_f: f64, steps: usize) -> Mat6 {
    let h = (f - f_f) / steps as f64;
    let mut p = s;
    for k in 0..steps {
        let g = f_f + k as f64 * h;
        let k1 = dre_rhs(orbit, g, &p, coupling);
        let k2 = dre_rhs(orbit, g + 0.5 * h, &(p + k1.scale(0.5 * h)), coupling);
        let k3 = dre_rhs(orbit, g + 0.5 * h, &(p + k2.scale(0.5 * h)), coupling);
        let k4 = dre_rhs(orbit, g + h, &(p + k3.scale(h)), coupling);
        p += (k1 + k2.scale(2.0) + k3.scale(2.0) + k4).scale(h / 6.0);
    }
    p
}

/// Gain from fixed-step RK4 integration of the DRE backward from `P(f_f) = S`.
pub fn numerical_p_oracle(
    orbit: &ReferenceOrbit,
    weights: &GameWeights,
    f: f64,
    f_f: f64,
    steps: usize,
) -> Result<RiccatiGain> {
    if steps == 0 {
        return Err(Error::InvalidConfig("oracle step count must be at least 1"));
    }
    check_horizon(orbit, f, f_f)?;
    let p = integrate_backward(orbit, weights.s_matrix(), weights.coupling(), f, f_f, steps);
    if !p.is_finite() {
        return Err(Error::Singular { condition: f64::INFINITY });
    }
    Ok(RiccatiGain { p, f_eval: f, f_terminal: f_f })
}

/// Backward-RK4 counterpart of [`defense_p`].
pub fn numerical_defense_p(
    orbit: &ReferenceOrbit,
    r_p: f64,
    s_r: f64,
    f: f64,
    f_f: f64,
    steps: usize,
) -> Result<RiccatiGain> {
    GameWeights::new(s_r, r_p, f64::INFINITY)?;
    if steps == 0 {
        return Err(Error::InvalidConfig("oracle step count must be at least 1"));
    }
    check_horizon(orbit, f, f_f)?;
    let p = integrate_backward(orbit, terminal_weight(s_r), 1.0 / r_p, f, f_f, steps);
    Ok(RiccatiGain { p, f_eval: f, f_terminal: f_f })
}

/// Clamping rule for the time-to-go estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TimeToGo {
    /// Returned when the range is not closing.
    pub floor: f64,
    /// Upper bound, if any.
    pub ceiling: Option<f64>,
    /// Closing rates `r·r' ≥ −eps` count as non-closing.
    pub eps: f64,
}

impl TimeToGo {
    /// Floor of ten integration steps; a π/2 ceiling when the gain is computed
    /// on a parabolic or hyperbolic orbit, whose anomaly domain is bounded.
    pub fn for_orbit(gain_orbit: &ReferenceOrbit, h_f: f64) -> Self {
        let ceiling = match gain_orbit.regime() {
            Regime::Elliptic => None,
            Regime::Parabolic | Regime::Hyperbolic => Some(FRAC_PI_2),
        };
        Self { floor: 10.0 * h_f, ceiling, eps: 1e-12 }
    }

    /// `−|r|² / (r·r')`, clamped.
    pub fn estimate(&self, x: &RelState) -> f64 {
        let [px, py, pz] = x.position();
        let num = px * px + py * py + pz * pz;
        let den = x.range_rate_product();
        let raw = if den >= -self.eps { self.floor } else { (-num / den).max(self.floor) };
        match self.ceiling {
            Some(c) => raw.min(c),
            None => raw,
        }
    }
}

/// [`TimeToGo::estimate`] with the default rule for step `h_f` and no ceiling.
pub fn time_to_go(x: &RelState, h_f: f64) -> f64 {
    TimeToGo { floor: 10.0 * h_f, ceiling: None, eps: 1e-12 }.estimate(x)
}

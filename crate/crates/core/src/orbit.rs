//! Reference-orbit geometry: regime classification, anomaly conversions and
//! the mapping between physical LVLH states and the ρ-scaled, true-anomaly
//! parameterised states the guidance works in.

use core::f64::consts::PI;
use core::ops::{Add, Sub};

use libm::{atan2, atanh, cos, fabs, sin, sinh, sqrt, tan};

use crate::error::{Error, Result};
use crate::linalg::Vec6;

/// Band around `e = 1` treated as a parabola.
pub const PARABOLIC_TOLERANCE: f64 = 1e-9;

/// Distance kept from the asymptote (hyperbola) or `f = ±π` (parabola).
pub const DOMAIN_MARGIN: f64 = 1e-6;

/// Earth gravitational parameter used throughout the reference scenarios (m³/s²).
pub const MU_EARTH: f64 = 3.98603e14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl Regime {
    pub fn classify(e: f64) -> Self {
        if fabs(e - 1.0) <= PARABOLIC_TOLERANCE {
            Regime::Parabolic
        } else if e < 1.0 {
            Regime::Elliptic
        } else {
            Regime::Hyperbolic
        }
    }
}

/// Keplerian reference orbit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReferenceOrbit {
    p: f64,
    e: f64,
    mu: f64,
    n: f64,
    beta: f64,
}

impl ReferenceOrbit {
    /// Builds an orbit from semilatus rectum (m), eccentricity and μ (m³/s²).
    ///
    /// Eccentricities in the advisory bands are accepted; see
    /// [`ReferenceOrbit::advisory`] and [`ReferenceOrbit::new_strict`].
    pub fn new(p: f64, e: f64, mu: f64) -> Result<Self> {
        if !(p.is_finite() && p > 0.0) {
            return Err(Error::InvalidOrbit("semilatus rectum must be positive"));
        }
        if !(mu.is_finite() && mu > 0.0) {
            return Err(Error::InvalidOrbit("gravitational parameter must be positive"));
        }
        if !(e.is_finite() && e >= 0.0) {
            return Err(Error::InvalidOrbit("eccentricity must be non-negative"));
        }
        // snap the parabolic band so every downstream formula sees e = 1 exactly
        let e = if Regime::classify(e) == Regime::Parabolic { 1.0 } else { e };
        let n = sqrt(mu / (p * p * p));
        Ok(Self { p, e, mu, n, beta: 1.0 / (n * n) })
    }

    /// Like [`ReferenceOrbit::new`] but rejects advisory-band eccentricities.
    pub fn new_strict(p: f64, e: f64, mu: f64) -> Result<Self> {
        let orbit = Self::new(p, e, mu)?;
        if orbit.advisory() {
            return Err(Error::EccentricityAdvisory { e });
        }
        Ok(orbit)
    }

    pub fn p(&self) -> f64 {
        self.p
    }
    pub fn e(&self) -> f64 {
        self.e
    }
    pub fn mu(&self) -> f64 {
        self.mu
    }
    /// `sqrt(μ/p³)`, 1/s.
    pub fn n(&self) -> f64 {
        self.n
    }
    /// `1/n²`, s².
    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn regime(&self) -> Regime {
        Regime::classify(self.e)
    }

    /// True when `0.8 < e < 1` or `1 < e < 1.2`: the closed forms lose
    /// accuracy there through their `(1 - e²)` powers.
    pub fn advisory(&self) -> bool {
        match self.regime() {
            Regime::Parabolic => false,
            Regime::Elliptic => self.e > 0.8,
            Regime::Hyperbolic => self.e < 1.2,
        }
    }

    /// Circular orbit with the same `p` and `μ` (hence the same `n`).
    pub fn circular_surrogate(&self) -> Self {
        Self { e: 0.0, ..*self }
    }

    pub fn rho(&self, f: f64) -> f64 {
        rho(self.e, f)
    }

    /// dρ/df.
    pub fn rho_prime(&self, f: f64) -> f64 {
        -self.e * sin(f)
    }

    /// Largest |f| (with margin) the closed forms accept; `None` when unbounded.
    pub fn anomaly_limit(&self) -> Option<f64> {
        match self.regime() {
            Regime::Elliptic => None,
            Regime::Parabolic => Some(PI - DOMAIN_MARGIN),
            Regime::Hyperbolic => Some(libm::acos(-1.0 / self.e) - DOMAIN_MARGIN),
        }
    }

    pub fn check_anomaly(&self, f: f64) -> Result<()> {
        if !f.is_finite() {
            return Err(Error::Domain { what: "true anomaly", value: f, limit: f64::INFINITY });
        }
        match self.anomaly_limit() {
            Some(limit) if fabs(f) >= limit => Err(Error::Domain { what: "true anomaly", value: f, limit }),
            _ => Ok(()),
        }
    }
}

/// `ρ(f) = 1 + e·cos f`.
pub fn rho(e: f64, f: f64) -> f64 {
    1.0 + e * cos(f)
}

/// Eccentric anomaly on the same revolution as `f` (|f − E| < 2π).
pub fn true_to_eccentric(e: f64, f: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&e) {
        return Err(Error::Regime("eccentric anomaly"));
    }
    let (s, c) = (sin(f), cos(f));
    let r = 1.0 + e * c;
    let principal = atan2(sqrt(1.0 - e * e) * s / r, (c + e) / r);
    Ok(principal + f - atan2(s, c))
}

/// Hyperbolic anomaly; `|f|` must stay inside the asymptote angle.
pub fn true_to_hyperbolic(e: f64, f: f64) -> Result<f64> {
    if e <= 1.0 || Regime::classify(e) != Regime::Hyperbolic {
        return Err(Error::Regime("hyperbolic anomaly"));
    }
    let limit = libm::acos(-1.0 / e) - DOMAIN_MARGIN;
    if !(fabs(f) < limit) {
        return Err(Error::Domain { what: "hyperbolic true anomaly", value: f, limit });
    }
    Ok(atanh(sqrt(e * e - 1.0) * sin(f) / (e + cos(f))))
}

/// `L(f) = ∫ρ⁻² df = n·t` measured from periapsis (elliptic and hyperbolic only).
pub fn l_of_anomaly(orbit: &ReferenceOrbit, f: f64) -> Result<f64> {
    let e = orbit.e();
    match orbit.regime() {
        Regime::Elliptic => {
            let big_e = true_to_eccentric(e, f)?;
            let q = 1.0 - e * e;
            Ok((big_e - e * sin(big_e)) / (q * sqrt(q)))
        }
        Regime::Hyperbolic => {
            let h = true_to_hyperbolic(e, f)?;
            let q = e * e - 1.0;
            Ok((e * sinh(h) - h) / (q * sqrt(q)))
        }
        Regime::Parabolic => Err(Error::Regime("L(f) is undefined for a parabola; use C(f)")),
    }
}

/// Parabolic basis term `C(f) = tan(f/2)/4 − tan⁵(f/2)/20`.
pub fn c_of_f(f: f64) -> Result<f64> {
    let limit = PI - DOMAIN_MARGIN;
    if !(fabs(f) < limit) {
        return Err(Error::Domain { what: "parabolic true anomaly", value: f, limit });
    }
    let t = tan(0.5 * f);
    let t2 = t * t;
    Ok(0.25 * t - t2 * t2 * t / 20.0)
}

/// Physical LVLH state: position (m) and time-derivative velocity (m/s).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct PhysState(pub Vec6);

/// ρ-scaled LVLH state: position (m) and true-anomaly derivative (m/rad).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct RelState(pub Vec6);

impl RelState {
    pub const ZERO: RelState = RelState([0.0; 6]);

    pub fn new(position: [f64; 3], velocity: [f64; 3]) -> Self {
        let [x, y, z] = position;
        let [vx, vy, vz] = velocity;
        RelState([x, y, z, vx, vy, vz])
    }

    pub fn position(&self) -> [f64; 3] {
        [self.0[0], self.0[1], self.0[2]]
    }

    pub fn velocity(&self) -> [f64; 3] {
        [self.0[3], self.0[4], self.0[5]]
    }

    /// Euclidean norm of the position part.
    pub fn distance(&self) -> f64 {
        let [x, y, z] = self.position();
        sqrt(x * x + y * y + z * z)
    }

    /// `x·x' + y·y' + z·z'`; negative while the range is closing.
    pub fn range_rate_product(&self) -> f64 {
        (0..3).map(|i| self.0[i] * self.0[i + 3]).sum()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }

    pub fn axpy(&self, h: f64, d: &Vec6) -> RelState {
        let mut out = *self;
        for (o, v) in out.0.iter_mut().zip(d) {
            *o += h * v;
        }
        out
    }
}

impl Sub for RelState {
    type Output = RelState;
    fn sub(self, rhs: RelState) -> RelState {
        let mut out = self;
        for (o, r) in out.0.iter_mut().zip(rhs.0) {
            *o -= r;
        }
        out
    }
}

impl Add for RelState {
    type Output = RelState;
    fn add(self, rhs: RelState) -> RelState {
        self.axpy(1.0, &rhs.0)
    }
}

/// Physical → transformed state at anomaly `f`.
pub fn to_tilde(orbit: &ReferenceOrbit, f: f64, s: &PhysState) -> RelState {
    let r = orbit.rho(f);
    let rp = orbit.rho_prime(f);
    let to_prime = 1.0 / (orbit.n() * r * r);
    let mut out = [0.0; 6];
    for i in 0..3 {
        let pos = s.0[i];
        out[i] = r * pos;
        out[i + 3] = rp * pos + r * s.0[i + 3] * to_prime;
    }
    RelState(out)
}

/// Transformed → physical state at anomaly `f`.
pub fn from_tilde(orbit: &ReferenceOrbit, f: f64, x: &RelState) -> PhysState {
    let r = orbit.rho(f);
    let rp = orbit.rho_prime(f);
    let to_dot = orbit.n() * r * r;
    let mut out = [0.0; 6];
    for i in 0..3 {
        let pos = x.0[i] / r;
        out[i] = pos;
        out[i + 3] = (x.0[i + 3] - rp * pos) / r * to_dot;
    }
    PhysState(out)
}

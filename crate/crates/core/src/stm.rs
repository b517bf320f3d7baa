//! Closed-form fundamental matrix of the true-anomaly Tschauner–Hempel
//! equations and the transition matrices built from it.
//!
//! State ordering is `[x, y, z, x', y', z']` with x radial, y along-track and
//! z orbit-normal, all in transformed (ρ-scaled) coordinates.

mod elliptic;
mod hyperbolic;
mod parabolic;

use libm::{cos, sin};

use crate::dd::Dd;
use crate::error::Result;
use crate::linalg::Mat6;
use crate::orbit::{c_of_f, l_of_anomaly, true_to_eccentric, true_to_hyperbolic, ReferenceOrbit, Regime};

/// 6×6 transition-type matrix.
pub type Stm6 = Mat6;

/// Scalar basis functions at one anomaly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Basis {
    pub phi1: f64,
    pub phi2: f64,
    pub phi3: f64,
    pub dphi1: f64,
    pub dphi2: f64,
    pub dphi3: f64,
    /// S(φ₁)
    pub s1: f64,
    /// S(φ₂)
    pub s2: f64,
    /// S(2φ₃ + 1)
    pub s3: f64,
    pub sin_f: f64,
    pub cos_f: f64,
}

impl Basis {
    pub fn new(orbit: &ReferenceOrbit, f: f64) -> Result<Self> {
        orbit.check_anomaly(f)?;
        let e = orbit.e();
        let (s, c) = (sin(f), cos(f));
        let r = 1.0 + e * c;
        let phi1 = r * s;
        let dphi1 = r * c - e * s * s;
        let s1 = -c - 0.5 * e * c * c;

        let (phi2, phi3, dphi2, s2, s3) = match orbit.regime() {
            Regime::Parabolic => {
                let cf = c_of_f(f)?;
                (
                    2.0 * phi1 * cf - c / r,
                    -2.0 * phi1 * cf - c * c / r - c * c,
                    2.0 * dphi1 * cf + s * c / (r * r) + s / r,
                    -r * r * cf,
                    2.0 * (r * r * cf - s) - s * c,
                )
            }
            Regime::Elliptic | Regime::Hyperbolic => {
                let l = l_of_anomaly(orbit, f)?;
                let q = 1.0 - e * e;
                let d = s * (2.0 + e * c) / (r * r);
                let k = d - 3.0 * e * l;
                (
                    e * phi1 * k / q - c / r,
                    -phi1 * k / q - c * c / r - c * c,
                    e * dphi1 * k / q + e * s * c / (r * r) + s / r,
                    -r * r * k / (2.0 * q),
                    e * s * (2.0 + e * c) / q - 3.0 * r * r * l / q,
                )
            }
        };
        let dphi3 = 2.0 * (dphi1 * s2 - dphi2 * s1);
        Ok(Self { phi1, phi2, phi3, dphi1, dphi2, dphi3, s1, s2, s3, sin_f: s, cos_f: c })
    }

    pub fn phi(&self) -> Stm6 {
        let b = self;
        let (s, c) = (b.sin_f, b.cos_f);
        Mat6([
            [b.phi1, b.phi2, b.phi3, 0.0, 0.0, 0.0],
            [-2.0 * b.s1, -2.0 * b.s2, -b.s3, 1.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, c, s],
            [b.dphi1, b.dphi2, b.dphi3, 0.0, 0.0, 0.0],
            [-2.0 * b.phi1, -2.0 * b.phi2, -2.0 * b.phi3 - 1.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, -s, c],
        ])
    }

    pub fn phi_inv(&self) -> Stm6 {
        let b = self;
        let (s, c) = (b.sin_f, b.cos_f);
        Mat6([
            [4.0 * b.s2 + b.dphi2, 0.0, 0.0, -b.phi2, 2.0 * b.s2, 0.0],
            [-4.0 * b.s1 - b.dphi1, 0.0, 0.0, b.phi1, -2.0 * b.s1, 0.0],
            [-2.0, 0.0, 0.0, 0.0, -1.0, 0.0],
            [-2.0 * b.s3 - b.dphi3, 1.0, 0.0, b.phi3, -b.s3, 0.0],
            [0.0, 0.0, c, 0.0, 0.0, -s],
            [0.0, 0.0, s, 0.0, 0.0, c],
        ])
    }
}

/// Fundamental matrix φ(f).
pub fn phi(orbit: &ReferenceOrbit, f: f64) -> Result<Stm6> {
    Ok(Basis::new(orbit, f)?.phi())
}

/// Closed-form inverse φ⁻¹(f).
pub fn phi_inv(orbit: &ReferenceOrbit, f: f64) -> Result<Stm6> {
    Ok(Basis::new(orbit, f)?.phi_inv())
}

/// Homogeneous transition from `f1` to `f2`: φ(f2)·φ⁻¹(f1).
pub fn omega11(orbit: &ReferenceOrbit, f2: f64, f1: f64) -> Result<Stm6> {
    Ok(phi(orbit, f2)? * phi_inv(orbit, f1)?)
}

/// Adjoint transition: φ⁻ᵀ(f2)·φᵀ(f1), the inverse-transpose of [`omega11`].
pub fn omega22(orbit: &ReferenceOrbit, f2: f64, f1: f64) -> Result<Stm6> {
    Ok(phi_inv(orbit, f2)?.transpose() * phi(orbit, f1)?.transpose())
}

/// Symmetric antiderivative of φ⁻¹·diag(0, 0, 0, ρ⁻⁶, ρ⁻⁶, ρ⁻⁶)·φ⁻ᵀ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JTable {
    pub regime: Regime,
    pub m: Mat6,
}

impl JTable {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.m.0[i][j]
    }
}

fn j_upper(orbit: &ReferenceOrbit, f: f64) -> Result<[[Dd; 6]; 6]> {
    orbit.check_anomaly(f)?;
    let e = orbit.e();
    Ok(match orbit.regime() {
        Regime::Elliptic => elliptic::upper(e, true_to_eccentric(e, f)?),
        Regime::Parabolic => parabolic::upper(f),
        Regime::Hyperbolic => hyperbolic::upper(e, true_to_hyperbolic(e, f)?),
    })
}

fn symmetric(upper: impl Fn(usize, usize) -> f64) -> Mat6 {
    let mut m = Mat6::zeros();
    for i in 0..6 {
        for j in i..6 {
            m.0[i][j] = upper(i, j);
            m.0[j][i] = m.0[i][j];
        }
    }
    m
}

/// J(f) for the orbit's regime; only the upper triangle is evaluated.
pub fn j_matrix(orbit: &ReferenceOrbit, f: f64) -> Result<JTable> {
    let u = j_upper(orbit, f)?;
    Ok(JTable { regime: orbit.regime(), m: symmetric(|i, j| u[i][j].to_f64()) })
}

/// J(f2) − J(f1), differenced before rounding to double precision.
pub fn j_difference(orbit: &ReferenceOrbit, f2: f64, f1: f64) -> Result<Mat6> {
    let (u2, u1) = (j_upper(orbit, f2)?, j_upper(orbit, f1)?);
    Ok(symmetric(|i, j| (u2[i][j] - u1[i][j]).to_f64()))
}

/// φ(f2)·(J(f2) − J(f1))·φᵀ(f1).
fn coupling_sandwich(orbit: &ReferenceOrbit, f2: f64, f1: f64) -> Result<Stm6> {
    let b2 = Basis::new(orbit, f2)?;
    let b1 = Basis::new(orbit, f1)?;
    Ok(b2.phi() * j_difference(orbit, f2, f1)? * b1.phi().transpose())
}

/// Control-coupling transition `(1/n⁴)(1/r_e − 1/r_p)·φ(f2)(J(f2) − J(f1))φᵀ(f1)`.
pub fn omega12(orbit: &ReferenceOrbit, r_p: f64, r_e: f64, f2: f64, f1: f64) -> Result<Stm6> {
    let n2 = orbit.n() * orbit.n();
    let k = (1.0 / r_e - 1.0 / r_p) / (n2 * n2);
    Ok(coupling_sandwich(orbit, f2, f1)?.scale(k))
}

/// [`omega12`] for a non-manoeuvring evader: factor `−1/(n⁴ r_p)`.
pub fn defense_omega12(orbit: &ReferenceOrbit, r_p: f64, f2: f64, f1: f64) -> Result<Stm6> {
    let n2 = orbit.n() * orbit.n();
    Ok(coupling_sandwich(orbit, f2, f1)?.scale(-1.0 / (r_p * n2 * n2)))
}

/// System matrix A(f) of the homogeneous dynamics.
pub fn system_matrix(orbit: &ReferenceOrbit, f: f64) -> Stm6 {
    let mut a = Mat6::zeros();
    a.0[0][3] = 1.0;
    a.0[1][4] = 1.0;
    a.0[2][5] = 1.0;
    a.0[3][0] = 3.0 / orbit.rho(f);
    a.0[3][4] = 2.0;
    a.0[4][3] = -2.0;
    a.0[5][2] = -1.0;
    a
}

/// Scalar `β/ρ³` multiplying the identity block of the input matrix B(f).
pub fn input_gain(orbit: &ReferenceOrbit, f: f64) -> f64 {
    let r = orbit.rho(f);
    orbit.beta() / (r * r * r)
}

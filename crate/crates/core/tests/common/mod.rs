#![allow(dead_code, clippy::excessive_precision)]

//! Independent numerical oracles shared by the integration tests.

use nalgebra::Matrix6;
use pegame_core::linalg::Mat6;
use pegame_core::orbit::{ReferenceOrbit, RelState, MU_EARTH};
use pegame_core::riccati::{dre_rhs, GameWeights};
use pegame_core::sim::{GameConfig, Strategy};
use pegame_core::stm;

pub const P_SCENARIO_I: f64 = 4.2241e7;
pub const P_SCENARIO_II: f64 = 1.8339e7;

pub fn orbit(e: f64) -> ReferenceOrbit {
    ReferenceOrbit::new(P_SCENARIO_I, e, MU_EARTH).unwrap()
}

const GK_NODES: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const GK_WK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const GK_WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gk15<const N: usize>(g: &impl Fn(f64) -> [f64; N], a: f64, b: f64) -> ([f64; N], f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut k = [0.0; N];
    let mut gs = [0.0; N];
    for (i, x) in GK_NODES.iter().enumerate() {
        let pts: &[f64] = if i == 7 { &[0.0] } else { &[-1.0, 1.0] };
        for sgn in pts {
            let v = g(c + sgn * x * h);
            for m in 0..N {
                k[m] += GK_WK[i] * v[m];
                if i % 2 == 1 {
                    gs[m] += GK_WG[i / 2] * v[m];
                }
            }
        }
    }
    let mut diff = 0.0_f64;
    let mut size = 0.0_f64;
    for m in 0..N {
        k[m] *= h;
        gs[m] *= h;
        diff = diff.max((k[m] - gs[m]).abs());
        size = size.max(k[m].abs());
    }
    (k, diff / (size + 1e-300))
}

/// Adaptive Gauss–Kronrod (7/15) quadrature of a vector-valued integrand,
/// refining until the Kronrod–Gauss difference on each panel is below
/// `rel_tol` times that panel's largest component.
pub fn integrate<const N: usize>(g: &impl Fn(f64) -> [f64; N], a: f64, b: f64, rel_tol: f64) -> [f64; N] {
    fn rec<const N: usize>(g: &impl Fn(f64) -> [f64; N], a: f64, b: f64, tol: f64, depth: u32) -> [f64; N] {
        let (v, err) = gk15(g, a, b);
        if err < tol || depth > 40 {
            return v;
        }
        let m = 0.5 * (a + b);
        let l = rec(g, a, m, tol, depth + 1);
        let r = rec(g, m, b, tol, depth + 1);
        let mut out = [0.0; N];
        for i in 0..N {
            out[i] = l[i] + r[i];
        }
        out
    }
    rec(g, a, b, rel_tol, 0)
}

/// φ⁻¹·diag(0, 0, 0, ρ⁻⁶, ρ⁻⁶, ρ⁻⁶)·φ⁻ᵀ, flattened row-major.
pub fn j_integrand(o: &ReferenceOrbit, f: f64) -> [f64; 36] {
    let mi = stm::phi_inv(o, f).unwrap();
    let w = o.rho(f).powi(-6);
    let mut out = [0.0; 36];
    for i in 0..6 {
        for j in 0..6 {
            out[6 * i + j] = (3..6).map(|k| mi[(i, k)] * mi[(j, k)]).sum::<f64>() * w;
        }
    }
    out
}

/// Five-point central difference of J, built from the exactly differenced
/// pairs so that rounding of J itself never enters.
pub fn j_stencil(o: &ReferenceOrbit, f: f64, h: f64) -> Mat6 {
    let inner = stm::j_difference(o, f + h, f - h).unwrap();
    let outer = stm::j_difference(o, f + 2.0 * h, f - 2.0 * h).unwrap();
    (inner.scale(8.0) - outer).scale(1.0 / (12.0 * h))
}

pub fn quadrature_j_difference(o: &ReferenceOrbit, f1: f64, f2: f64) -> Mat6 {
    let v = integrate(&|f| j_integrand(o, f), f1, f2, 1e-13);
    let mut m = Mat6::zeros();
    for i in 0..6 {
        for j in 0..6 {
            m.0[i][j] = v[6 * i + j];
        }
    }
    m
}

pub fn to_na(m: &Mat6) -> Matrix6<f64> {
    Matrix6::from_fn(|i, j| m.0[i][j])
}

pub fn from_na(m: &Matrix6<f64>) -> Mat6 {
    let mut out = Mat6::zeros();
    for i in 0..6 {
        for j in 0..6 {
            out.0[i][j] = m[(i, j)];
        }
    }
    out
}

/// Max elementwise |a − b| / (|b| + floor·max|b|).
pub fn rel_dev(a: &Mat6, b: &Mat6, floor: f64) -> f64 {
    let scale = b.max_abs();
    let mut worst = 0.0_f64;
    for i in 0..6 {
        for j in 0..6 {
            let d = (a.0[i][j] - b.0[i][j]).abs() / (b.0[i][j].abs() + floor * scale + 1e-300);
            worst = worst.max(d);
        }
    }
    worst
}

/// Classical RK4 for x' = g(f, x), fixed step.
pub fn rk4_propagate(g: impl Fn(f64, &[f64; 6]) -> [f64; 6], x0: [f64; 6], f0: f64, f1: f64, steps: usize) -> [f64; 6] {
    let h = (f1 - f0) / steps as f64;
    let mut x = x0;
    let add = |x: &[f64; 6], k: &[f64; 6], s: f64| {
        let mut o = *x;
        for i in 0..6 {
            o[i] += s * k[i];
        }
        o
    };
    for n in 0..steps {
        let f = f0 + n as f64 * h;
        let k1 = g(f, &x);
        let k2 = g(f + 0.5 * h, &add(&x, &k1, 0.5 * h));
        let k3 = g(f + 0.5 * h, &add(&x, &k2, 0.5 * h));
        let k4 = g(f + h, &add(&x, &k3, h));
        for i in 0..6 {
            x[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }
    x
}

pub struct Scenario {
    pub p: f64,
    pub weights: GameWeights,
    pub pursuer: RelState,
}

pub fn scenario_one() -> Scenario {
    Scenario {
        p: P_SCENARIO_I,
        weights: GameWeights::new(0.1, 1e6, 1.1e6).unwrap(),
        pursuer: RelState([1500.0, 500.0, 0.0, -10000.0, 0.0, 1000.0]),
    }
}

pub fn scenario_two() -> Scenario {
    Scenario {
        p: P_SCENARIO_II,
        weights: GameWeights::new(1.0, 1e6, 1.5e6).unwrap(),
        pursuer: RelState([1500.0, 0.0, -2500.0, -5000.0, 0.0, 10000.0]),
    }
}

pub fn game(s: &Scenario, e: f64, strategy: Strategy) -> GameConfig {
    let o = ReferenceOrbit::new(s.p, e, MU_EARTH).unwrap();
    GameConfig::new(o, s.weights, s.pursuer, RelState::ZERO, strategy)
}

/// dP/df by Richardson-extrapolated five-point differences (sixth order). The
/// step is chosen where successive step halvings agree best, balancing
/// truncation against the rounding noise of P.
pub fn derivative(f: f64, horizon: f64, gain: &dyn Fn(f64) -> Mat6) -> Mat6 {
    let d5 = |h: f64| {
        (gain(f - 2.0 * h) - gain(f - h).scale(8.0) + gain(f + h).scale(8.0) - gain(f + 2.0 * h))
            .scale(1.0 / (12.0 * h))
    };
    let d6 = |h: f64| (d5(0.5 * h).scale(16.0) - d5(h)).scale(1.0 / 15.0);
    let estimates: Vec<Mat6> = (0..6).map(|k| d6(0.2 * horizon / 2f64.powi(k))).collect();
    estimates
        .windows(2)
        .min_by(|a, b| (a[0] - a[1]).max_abs().total_cmp(&(b[0] - b[1]).max_abs()))
        .map(|w| w[1])
        .unwrap()
}

/// Worst elementwise relative DRE residual. Denominators are floored at 1e-6 of
/// the largest entry, below which the difference quotient is rounding noise.
pub fn residual(o: &ReferenceOrbit, f: f64, horizon: f64, coupling: f64, gain: &dyn Fn(f64) -> Mat6) -> f64 {
    let dp = derivative(f, horizon, gain);
    let rhs = dre_rhs(o, f, &gain(f), coupling);
    rel_dev(&dp, &rhs, 1e-6)
}

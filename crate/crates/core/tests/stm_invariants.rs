mod common;

use std::f64::consts::PI;

use common::{from_na, integrate, j_integrand, j_stencil, orbit, rel_dev, rk4_propagate, to_na};
use pegame_core::game::relative_derivative;
use pegame_core::linalg::Mat6;
use pegame_core::orbit::{ReferenceOrbit, RelState, MU_EARTH};
use pegame_core::stm::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug)]
enum Kind {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

const KINDS: [Kind; 3] = [Kind::Elliptic, Kind::Parabolic, Kind::Hyperbolic];

fn sample(rng: &mut ChaCha8Rng, kind: Kind) -> (ReferenceOrbit, f64) {
    let e = match kind {
        Kind::Elliptic => rng.random_range(0.0..0.8),
        Kind::Parabolic => 1.0,
        Kind::Hyperbolic => rng.random_range(1.2..3.0),
    };
    let o = orbit(e);
    let f = sample_f(rng, &o);
    (o, f)
}

fn sample_f(rng: &mut ChaCha8Rng, o: &ReferenceOrbit) -> f64 {
    let lim = o.anomaly_limit().map(|l| 0.9 * l).unwrap_or(2.0 * PI);
    rng.random_range(-lim..lim)
}

/// ‖a − b‖max / ‖b‖max.
fn normwise(a: &Mat6, b: &Mat6) -> f64 {
    (*a - *b).max_abs() / b.max_abs()
}

fn max_abs_dev(a: &Mat6, b: &Mat6) -> f64 {
    (*a - *b).max_abs()
}

#[test]
fn phi_times_inverse_is_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for kind in KINDS {
        for _ in 0..100 {
            let (o, f) = sample(&mut rng, kind);
            let prod = phi(&o, f).unwrap() * phi_inv(&o, f).unwrap();
            let dev = max_abs_dev(&prod, &Mat6::identity());
            assert!(dev < 1e-9, "{kind:?} e={} f={f} dev={dev}", o.e());
        }
    }
}

#[test]
fn closed_form_inverse_matches_lu() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for kind in KINDS {
        for _ in 0..50 {
            let (o, f) = sample(&mut rng, kind);
            let oracle = from_na(&to_na(&phi(&o, f).unwrap()).try_inverse().unwrap());
            // LU on an ill-conditioned φ is only accurate normwise
            let dev = normwise(&phi_inv(&o, f).unwrap(), &oracle);
            assert!(dev < 1e-9, "{kind:?} e={} f={f} dev={dev}", o.e());
        }
    }
}

#[test]
fn columns_solve_homogeneous_ode() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let h = 1e-5;
    for kind in KINDS {
        for _ in 0..100 {
            let (o, f) = sample(&mut rng, kind);
            let d = (phi(&o, f + h).unwrap() - phi(&o, f - h).unwrap()).scale(0.5 / h);
            let rhs = system_matrix(&o, f) * phi(&o, f).unwrap();
            for j in 0..6 {
                let scale = 1.0 + (0..6).map(|i| rhs[(i, j)].abs()).fold(0.0, f64::max);
                for i in 0..6 {
                    let r = (d[(i, j)] - rhs[(i, j)]).abs() / scale;
                    assert!(r < 1e-6, "{kind:?} e={} f={f} ({i},{j}) residual {r}", o.e());
                }
            }
        }
    }
}

#[test]
fn phi_at_e02_f07_columns_satisfy_dynamics() {
    let o = orbit(0.2);
    let (f, h) = (0.7, 1e-5);
    let m = phi(&o, f).unwrap();
    for j in 0..6 {
        let col = RelState(std::array::from_fn(|i| m[(i, j)]));
        let z = [0.0; 3];
        let rhs = relative_derivative(&o, f, &col, &z, &z, &z, &z);
        for (i, r) in rhs.iter().enumerate() {
            let fd = (phi(&o, f + h).unwrap()[(i, j)] - phi(&o, f - h).unwrap()[(i, j)]) / (2.0 * h);
            assert!((fd - r).abs() < 1e-6);
        }
    }
}

#[test]
fn omega11_group_property() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for kind in KINDS {
        for _ in 0..100 {
            let (o, f1) = sample(&mut rng, kind);
            let f2 = sample_f(&mut rng, &o);
            let f3 = sample_f(&mut rng, &o);
            let direct = omega11(&o, f3, f1).unwrap();
            let composed = omega11(&o, f3, f2).unwrap() * omega11(&o, f2, f1).unwrap();
            let dev = max_abs_dev(&direct, &composed) / (1.0 + direct.max_abs());
            assert!(dev < 1e-9, "{kind:?} e={} dev={dev}", o.e());
            assert!(max_abs_dev(&omega11(&o, f1, f1).unwrap(), &Mat6::identity()) < 1e-9);
        }
    }
}

#[test]
fn omega22_is_inverse_transpose() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for kind in KINDS {
        for _ in 0..30 {
            let (o, f1) = sample(&mut rng, kind);
            let f2 = sample_f(&mut rng, &o);
            let o22 = omega22(&o, f2, f1).unwrap();
            let o11 = omega11(&o, f2, f1).unwrap();
            assert!(max_abs_dev(&(o22.transpose() * o11), &Mat6::identity()) < 1e-9);
            let oracle = from_na(&to_na(&o11).try_inverse().unwrap().transpose());
            assert!(normwise(&o22, &oracle) < 1e-9);
        }
    }
}

#[test]
fn j_derivative_matches_integrand() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let h = 1e-4;
    for kind in KINDS {
        for _ in 0..100 {
            let (o, f) = sample(&mut rng, kind);
            let fd = j_stencil(&o, f, h);
            let g = j_integrand(&o, f);
            let scale = g.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
            for i in 0..6 {
                for j in 0..6 {
                    let d = (fd.0[i][j] - g[6 * i + j]).abs() / (g[6 * i + j].abs() + 1e-9 * scale + 1e-300);
                    assert!(d < 1e-6, "{kind:?} e={} f={f} J{}{} rel {d}", o.e(), i + 1, j + 1);
                }
            }
        }
    }
}

fn homogeneous_rk4(o: &ReferenceOrbit, x0: [f64; 6], f1: f64, f2: f64, steps: usize) -> [f64; 6] {
    let z = [0.0; 3];
    rk4_propagate(|f, x| relative_derivative(o, f, &RelState(*x), &z, &z, &z, &z), x0, f1, f2, steps)
}

#[test]
fn omega11_matches_rk4_propagation() {
    let o = orbit(0.2);
    let x0 = [120.0, -40.0, 15.0, -900.0, 300.0, 80.0];
    let rk = homogeneous_rk4(&o, x0, 0.0, 0.3, 30_000);
    let st = omega11(&o, 0.3, 0.0).unwrap().mul_vec(&x0);
    for i in 0..6 {
        assert!((rk[i] - st[i]).abs() < 1e-6 * st[i].abs().max(1.0), "{i}: {} vs {}", rk[i], st[i]);
    }
}

#[test]
fn circular_orbit_reduces_to_cw_transition() {
    let o = ReferenceOrbit::new(7.0e6, 0.0, MU_EARTH).unwrap();
    let x0 = [10.0, 20.0, -5.0, 1.0, -3.0, 2.0];
    let rk = homogeneous_rk4(&o, x0, 0.4, 1.9, 20_000);
    let st = omega11(&o, 1.9, 0.4).unwrap().mul_vec(&x0);
    for i in 0..6 {
        assert!((rk[i] - st[i]).abs() < 1e-8 * st[i].abs().max(1.0));
    }
}

/// ∫ Ω₁₁(f2,s) B(s)(1/r_e − 1/r_p)Bᵀ(s) Ω₂₂(s,f1) ds, assembled from the transitions.
fn omega12_quadrature(o: &ReferenceOrbit, k: f64, f2: f64, f1: f64) -> Mat6 {
    let v = integrate(
        &|s| {
            let left = omega11(o, f2, s).unwrap();
            let right = omega22(o, s, f1).unwrap();
            let b = input_gain(o, s);
            let mut mid = Mat6::zeros();
            for i in 3..6 {
                mid.0[i][i] = b * b * k;
            }
            let m = left * mid * right;
            let mut out = [0.0; 36];
            for i in 0..6 {
                for j in 0..6 {
                    out[6 * i + j] = m.0[i][j];
                }
            }
            out
        },
        f1,
        f2,
        1e-13,
    );
    Mat6(std::array::from_fn(|i| std::array::from_fn(|j| v[6 * i + j])))
}

#[test]
fn omega12_matches_variation_of_parameters() {
    let (rp, re) = (1e6, 1.1e6);
    let o = orbit(0.2);
    let q = omega12_quadrature(&o, 1.0 / re - 1.0 / rp, 0.15, 0.0);
    let a = omega12(&o, rp, re, 0.15, 0.0).unwrap();
    assert!(rel_dev(&a, &q, 1e-12) < 1e-7);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for kind in KINDS {
        for _ in 0..5 {
            let (o, f1) = sample(&mut rng, kind);
            let f2 =
                f1 + rng.random_range(0.01..0.5) * o.anomaly_limit().map(|l| (0.9 * l - f1).max(0.0)).unwrap_or(1.0);
            let q = omega12_quadrature(&o, 1.0 / re - 1.0 / rp, f2, f1);
            let a = omega12(&o, rp, re, f2, f1).unwrap();
            let dev = rel_dev(&a, &q, 1e-10);
            assert!(dev < 1e-7, "{kind:?} e={} [{f1},{f2}] dev {dev}", o.e());
        }
    }
}

#[test]
fn omega12_degenerate_cases() {
    let o = orbit(1.5);
    assert_eq!(omega12(&o, 2.0, 2.0, 0.5, 0.1).unwrap().max_abs(), 0.0);
    assert_eq!(omega12(&o, 1.0, 2.0, 0.3, 0.3).unwrap().max_abs(), 0.0);
    assert_eq!(defense_omega12(&o, 1.0, 0.3, 0.3).unwrap().max_abs(), 0.0);
}

#[test]
fn defense_coupling_is_evader_weight_limit() {
    let rp = 1e6;
    for e in [0.2, 1.0, 1.5] {
        let o = orbit(e);
        let d = defense_omega12(&o, rp, 0.4, 0.1).unwrap();
        let lim = omega12(&o, rp, 1e15 * rp, 0.4, 0.1).unwrap();
        assert!(rel_dev(&d, &lim, 1e-12) < 1e-6);
        let q = omega12_quadrature(&o, -1.0 / rp, 0.4, 0.1);
        assert!(rel_dev(&d, &q, 1e-10) < 1e-7);
    }
}

mod common;

use common::{from_na, orbit, rel_dev, residual, to_na, P_SCENARIO_I, P_SCENARIO_II};
use pegame_core::orbit::{ReferenceOrbit, MU_EARTH};
use pegame_core::riccati::*;
use pegame_core::stm::{omega11, omega22};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn w1() -> GameWeights {
    GameWeights::new(0.1, 1e6, 1.1e6).unwrap()
}

fn w2() -> GameWeights {
    GameWeights::new(1.0, 1e6, 1.5e6).unwrap()
}

#[test]
fn analytical_matches_backward_rk4_scenario_one() {
    let o = orbit(0.2);
    let a = analytical_p(&o, &w1(), 0.0, 0.17615).unwrap();
    let n = numerical_p_oracle(&o, &w1(), 0.0, 0.17615, 10_000).unwrap();
    assert!(rel_dev(&a.p, &n.p, 1e-12) < 1e-4);
    assert_eq!(a.f_terminal, 0.17615);
}

#[test]
fn equal_control_weights_drop_quadratic_term() {
    let o = orbit(0.2);
    let w = GameWeights::new(0.1, 1e6, 1e6).unwrap();
    let a = analytical_p(&o, &w, 0.05, 0.3).unwrap();
    let direct = from_na(&to_na(&omega22(&o, 0.3, 0.05).unwrap()).try_inverse().unwrap())
        * w.s_matrix()
        * omega11(&o, 0.3, 0.05).unwrap();
    assert!(rel_dev(&a.p, &direct, 1e-12) < 1e-9);
    let n = numerical_p_oracle(&o, &w, 0.05, 0.3, 4_000).unwrap();
    assert!(rel_dev(&a.p, &n.p, 1e-12) < 1e-6);
}

#[test]
fn oracle_converges_at_fourth_order() {
    let o = orbit(0.5);
    let w = w2();
    let p = |n| numerical_p_oracle(&o, &w, 0.0, 0.3, n).unwrap().p;
    let (p1, p2, p4) = (p(2000), p(4000), p(8000));
    // Richardson limit from the two finest solutions
    let limit = p4 + (p4 - p2).scale(1.0 / 15.0);
    let e1 = (p1 - limit).max_abs();
    let e2 = (p2 - limit).max_abs();
    let ratio = e1 / e2;
    assert!((12.0..20.0).contains(&ratio), "error ratio {ratio}");
}

fn regime_eccentricity(rng: &mut ChaCha8Rng, regime: usize) -> f64 {
    match regime {
        0 => rng.random_range(0.0..0.8),
        1 => 1.0,
        _ => rng.random_range(1.2..3.0),
    }
}

#[test]
fn analytical_gain_satisfies_dre() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for regime in 0..3 {
        for k in 0..20 {
            let e = regime_eccentricity(&mut rng, regime);
            let (p, w) = if k % 2 == 0 { (P_SCENARIO_I, w1()) } else { (P_SCENARIO_II, w2()) };
            let o = ReferenceOrbit::new(p, e, MU_EARTH).unwrap();
            let f = rng.random_range(-0.5..0.5);
            let f_f = f + rng.random_range(0.05..0.4);
            let r = residual(&o, f, f_f - f, w.coupling(), &|x| analytical_p(&o, &w, x, f_f).unwrap().p);
            assert!(r < 1e-5, "e={e} f={f} f_f={f_f} residual {r}");
        }
    }
}

#[test]
fn analytical_matches_oracle_across_regimes() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for regime in 0..3 {
        for k in 0..20 {
            let e = regime_eccentricity(&mut rng, regime);
            let (p, w) = if k % 2 == 0 { (P_SCENARIO_I, w1()) } else { (P_SCENARIO_II, w2()) };
            let o = ReferenceOrbit::new(p, e, MU_EARTH).unwrap();
            let f = rng.random_range(-0.5..0.5);
            let f_f = f + rng.random_range(0.02..0.4);
            let a = analytical_p(&o, &w, f, f_f).unwrap();
            let n = numerical_p_oracle(&o, &w, f, f_f, 10_000).unwrap();
            let dev = rel_dev(&a.p, &n.p, 1e-12);
            assert!(dev < 1e-4, "e={e} [{f},{f_f}] deviation {dev}");
        }
    }
}

#[test]
fn defense_gain_is_limit_and_satisfies_its_dre() {
    for e in [0.2, 1.0, 1.5] {
        let o = orbit(e);
        let d = defense_p(&o, 1e6, 0.1, 0.02, 0.2).unwrap();
        let lim = analytical_p(&o, &GameWeights::new(0.1, 1e6, 1e21).unwrap(), 0.02, 0.2).unwrap();
        assert!(rel_dev(&d.p, &lim.p, 1e-12) < 1e-6);
        let r = residual(&o, 0.02, 0.18, 1e-6, &|x| defense_p(&o, 1e6, 0.1, x, 0.2).unwrap().p);
        assert!(r < 1e-5, "e={e} residual {r}");
        let n = numerical_defense_p(&o, 1e6, 0.1, 0.02, 0.2, 10_000).unwrap();
        assert!(rel_dev(&d.p, &n.p, 1e-12) < 1e-4);
    }
}

#[test]
fn ill_conditioned_horizon_is_reported() {
    // a circular orbit with a near-full-revolution horizon approaches a conjugate point
    let o = orbit(0.0);
    let w = w2();
    let mut saw_error = false;
    for k in 0..400 {
        let f_f = 2.0 + k as f64 * 0.01;
        match analytical_p(&o, &w, 0.0, f_f) {
            Err(pegame_core::Error::Singular { condition }) => {
                assert!(condition > MAX_CONDITION);
                saw_error = true;
            }
            Err(e) => panic!("unexpected {e}"),
            Ok(g) => assert!(g.p.is_finite()),
        }
    }
    assert!(saw_error);
}

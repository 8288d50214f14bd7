use std::f64::consts::PI;

use num_complex::Complex64;

use super::*;
use crate::classical::ParamSet;
use crate::exceptional::{hermiticity_l1, norm_h_ell};
use crate::library::{aw_deformable, wilson_deformable};
use crate::numfield::{rat, GaussianRational as G};
use crate::{ExactParams, FloatParams};

fn g(s: &str) -> G {
    s.parse().unwrap()
}

fn wilson(a: [&str; 4]) -> ExactParams {
    ParamSet::wilson(a.map(g)).unwrap()
}

fn aw(a: [&str; 4]) -> ExactParams {
    ParamSet::askey_wilson_q(a.map(g), &rat(1, 4)).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn complex_expm1_is_accurate_near_zero() {
    let t = Complex64::new(1e-9, -2e-9);
    let got = expm1_complex(t);
    let want = t + t * t / 2.0;
    assert!((got - want).norm() < 1e-24);
    let t = Complex64::new(0.3, 1.2);
    assert!((expm1_complex(t) - (t.exp() - 1.0)).norm() < 1e-15);
}

#[test]
fn aw_one_minus_eta_agrees_with_cosine() {
    let p: FloatParams = aw(["1/2", "1/2", "1/4", "1/4"]).to_c64();
    for k in -2..3 {
        for j in 1..10 {
            let x = Complex64::new(0.3 * j as f64, 0.0);
            let e = eta_at(&p, x, k);
            let z = Complex64::new(0.0, 1.0) * x + (k as f64) * 0.5f64.ln();
            let want = (z.exp() + (-z).exp()) / 2.0;
            assert!((e.eta - want).norm() < 1e-14);
            assert!((e.one_minus - (1.0 - want)).norm() < 1e-14);
        }
    }
}

#[test]
fn wilson_groundstate_closed_form() {
    // φ₀² = (πx / sinh πx)⁴ · 2x sinh(2πx) / π at a = (1,1,1,1)
    let p = wilson(["1", "1", "1", "1"]).to_c64();
    for k in 1..=20 {
        let x = 0.15 * k as f64;
        let want = (PI * x / (PI * x).sinh()).powi(4) * 2.0 * x * (2.0 * PI * x).sinh() / PI;
        let got = groundstate_eval(&p, x).unwrap().powi(2);
        assert!(rel(got, want) < 1e-10, "x={x}: {got} vs {want}");
    }
}

#[test]
fn groundstate_vanishes_at_origin_and_is_finite_mid_interval() {
    let p = wilson(["1", "1", "1", "1"]).to_c64();
    assert!(groundstate_eval(&p, 1e-6).unwrap() < 1e-5);
    for q in aw_deformable() {
        let v = groundstate_eval(&q.to_c64(), PI / 2.0).unwrap();
        assert!(v.is_finite() && v > 0.0);
    }
    assert!(groundstate_eval(&p, -1.0).is_err());
    assert!(groundstate_eval(&aw_deformable()[0].to_c64(), 4.0).is_err());
}

#[test]
fn psi_examples() {
    let p = wilson(["1", "1", "2", "2"]);
    let f = p.to_c64();
    for x in [0.3, 1.0, 2.5] {
        assert_eq!(psi_ell_eval(0, &f, x).unwrap(), groundstate_eval(&f, x).unwrap());
    }
    // |ξ₁(η(1 − i/2))| = 2 |11/4 − i|
    let den = 2.0 * Complex64::new(2.75, -1.0).norm();
    let want = groundstate_eval(&f.plus_delta(1), 1.0).unwrap() / den;
    assert!(rel(psi_ell_eval(1, &f, 1.0).unwrap(), want) < 1e-14);
}

#[test]
fn psi_is_positive_on_a_grid() {
    for p in wilson_deformable().into_iter().chain(aw_deformable()) {
        let f = p.to_c64();
        let (_, hi) = domain(&f);
        let top = if hi.is_finite() { hi } else { 10.0 };
        for ell in 0..3 {
            for k in 1..100 {
                let v = psi_ell_eval(ell, &f, top * k as f64 / 100.0).unwrap();
                assert!(v > 0.0 && v.is_finite(), "{p:?} ell={ell}");
            }
        }
    }
}

#[test]
fn norm_of_the_ground_state() {
    let i = orthogonality_integral(0, 0, 0, &wilson(["1", "1", "1", "1"]), &QuadratureConfig::default()).unwrap();
    assert!(rel(i.value, PI / 3.0) < 1e-10, "{}", i.value);
}

#[test]
fn deformed_norm_matches_prefactor() {
    let p = wilson(["1", "1", "2", "2"]);
    let i = orthogonality_integral(1, 1, 1, &p, &QuadratureConfig::default()).unwrap();
    assert!(rel(i.value, norm_h_ell(1, 1, &p).to_f64()) < 1e-9);
    let off = orthogonality_integral(1, 0, 2, &p, &QuadratureConfig::default()).unwrap();
    assert!(off.value.abs() < 1e-9 * i.value);
}

#[test]
fn gram_matrices_are_diagonal() {
    let cfg = QuadratureConfig::default();
    for p in [wilson(["1", "3/2", "2", "5/2"]), aw(["1/2", "3/4", "3/8", "3/8"])] {
        let r = check_orthogonality(1, 3, &p, &cfg, 1e-8).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}

#[test]
fn rectangle_examples() {
    let p = wilson(["1", "1", "2", "2"]);
    let r = zero_free_rectangle(1, &p).unwrap();
    assert_eq!(r.zero_free(), Some(true));
    // ξ₁ = −2η − 4 vanishes at x = ±i√2
    assert_eq!(companion_count(1, &p, 0.0).unwrap(), 0);

    let q = aw(["3/4", "3/4", "1/4", "1/4"]);
    assert!(!hermiticity_l1(&q));
    let r = zero_free_rectangle(1, &q).unwrap();
    assert_eq!(r.zero_free(), Some(false));
    assert_eq!(r.count, Some(companion_count(1, &q, 0.0).unwrap()));
}

#[test]
fn rectangle_counts_agree_with_companion_roots() {
    for p in wilson_deformable().into_iter().chain(aw_deformable()) {
        for ell in 1..4 {
            let r = zero_free_rectangle(ell, &p).unwrap();
            assert_eq!(r.count, Some(companion_count(ell, &p, 0.0).unwrap()), "{p:?} ell={ell}");
        }
    }
}

#[test]
fn rectangle_counts_a_zero_inside() {
    // ξ₁ = −2η − 4 at (1,1,2,2); shrinking a₃, a₄ moves the root towards η = 0
    let p = wilson(["1", "1", "1/4", "1/4"]);
    let r = zero_free_rectangle(1, &p).unwrap();
    assert_eq!(r.count, Some(companion_count(1, &p, 0.0).unwrap()));
}

#[test]
fn polynomial_roots_of_a_quadratic() {
    let p = crate::polycore::Poly::new(
        crate::polycore::Var::Eta,
        vec![Complex64::new(2.0, 0.0), Complex64::new(-3.0, 0.0), Complex64::new(1.0, 0.0)],
    );
    let mut r: Vec<f64> = polynomial_roots(&p).iter().map(|z| z.re).collect();
    r.sort_by(f64::total_cmp);
    assert!((r[0] - 1.0).abs() < 1e-12 && (r[1] - 2.0).abs() < 1e-12);
}

#[test]
fn real_zero_examples() {
    let p = wilson(["1", "1", "2", "2"]);
    for ell in 0..4 {
        assert_eq!(count_real_zeros(ell, 0, &p).unwrap(), 0);
    }
    assert_eq!(count_real_zeros(1, 1, &p).unwrap(), 1);
    assert_eq!(count_real_zeros(2, 3, &aw(["3/4", "3/4", "1/4", "1/4"])).unwrap(), 3);
}

fn limit_params() -> FloatParams {
    wilson(["1", "1", "2", "2"]).to_c64()
}

#[test]
fn classical_limit_converges() {
    let t = aw_to_w_limit(0, 1, &limit_params(), &[20.0, 40.0, 80.0, 160.0], &LimitConfig::default()).unwrap();
    assert!(t.converges(1.5), "{t:?}");
    assert!(t.rows[3].poly < t.rows[0].poly);
}

#[test]
fn deformed_limit_converges() {
    let ls = [20.0, 40.0, 80.0, 160.0];
    for ell in 1..3 {
        for n in 0..3 {
            let t = aw_to_w_limit(ell, n, &limit_params(), &ls, &LimitConfig::default()).unwrap();
            assert!(t.converges(1.5), "{t:?}");
        }
    }
}

#[test]
fn wrong_scaling_diverges() {
    let cfg = LimitConfig { exponent_offset: -1, ..LimitConfig::default() };
    let t = aw_to_w_limit(1, 1, &limit_params(), &[20.0, 40.0, 80.0, 160.0], &cfg).unwrap();
    assert!(!t.converges(1.5));
    assert!(t.rows[3].xi > 0.5);
}

#[test]
fn extended_precision_agrees() {
    let ls = [20.0, 40.0];
    let d = aw_to_w_limit(1, 1, &limit_params(), &ls, &LimitConfig::default()).unwrap();
    let cfg = LimitConfig { precision: Precision::Extended, ..LimitConfig::default() };
    let e = aw_to_w_limit(1, 1, &limit_params(), &ls, &cfg).unwrap();
    for (a, b) in d.rows.iter().zip(&e.rows) {
        assert!(rel(a.max(), b.max()) < 1e-6, "{a:?} {b:?}");
    }
}

#[test]
fn limit_rejects_bad_input() {
    let cfg = LimitConfig::default();
    assert!(aw_to_w_limit(1, 1, &limit_params(), &[40.0, 20.0], &cfg).is_err());
    assert!(aw_to_w_limit(1, 1, &aw(["1/2", "1/2", "1/4", "1/4"]).to_c64(), &[20.0], &cfg).is_err());
}

#[test]
fn gram_matrix_is_nondegenerate_to_degree_eight() {
    let cfg = QuadratureConfig::default();
    for p in [wilson(["1", "1", "2", "2"]), aw(["1/2", "3/4", "3/8", "3/8"])] {
        let g = match gram_matrix(1, 8, &p, &cfg) {
            Ok(g) => g,
            Err(e) => panic!("{p:?}: {e}"),
        };
        for n in 0..=8 {
            assert!(g[n][n] > 0.0);
            let off: f64 = (0..=8).filter(|&m| m != n).map(|m| g[n][m].abs() / (g[n][n] * g[m][m]).sqrt()).sum();
            assert!(off < 1e-6, "{p:?} row {n}: {off:e}");
        }
    }
}

use num_traits::Zero;

use super::*;
use crate::classical::{apply_forward, potential};
use crate::library::{aw_deformable, wilson_deformable};
use crate::numfield::{rat, GaussianRational as G};
use crate::polycore::{Poly, Var};

fn g(s: &str) -> G {
    s.parse().unwrap()
}

fn wilson(a: [&str; 4]) -> ParamSet<G> {
    ParamSet::wilson(a.map(g)).unwrap()
}

fn aw(a: [&str; 4]) -> ParamSet<G> {
    ParamSet::askey_wilson_q(a.map(g), &rat(1, 4)).unwrap()
}

fn eta(cs: &[G]) -> Poly<G> {
    Poly::new(Var::Eta, cs.to_vec())
}

fn deformable() -> Vec<ParamSet<G>> {
    let mut v = wilson_deformable();
    v.extend(aw_deformable());
    v
}

#[test]
fn twist_examples() {
    let p = wilson(["1", "2", "3", "4"]);
    assert_eq!(twist(&p).a(), &["-1", "-2", "3", "4"].map(g));
    assert_eq!(twist(&twist(&p)), p);
    let p = aw(["3/4", "1/2", "1/4", "1/8"]);
    assert_eq!(twist(&p).a(), &["4/3", "2", "1/4", "1/8"].map(g));
}

#[test]
fn xi_one_wilson() {
    let p = wilson(["1", "1", "2", "2"]);
    assert_eq!(xi_poly(1, &p), eta(&[G::from(-4), G::from(-2)]));
    assert_eq!(xi_poly(1, &p.plus_delta(1)), eta(&[G::ratio(-15, 2), G::from(-2)]));
    assert_eq!(xi_poly(0, &p), Poly::one(Var::Eta));
}

#[test]
fn xi_degree_and_symmetry() {
    for p in deformable() {
        for ell in 1..4 {
            let xi = xi_poly(ell, &p);
            assert_eq!(xi.degree(), Some(ell));
            let [a1, a2, a3, a4] = p.a().clone();
            assert_eq!(xi_poly(ell, &p.with_a([a2, a1, a4, a3])), xi);
        }
    }
}

#[test]
fn coefficients_vanish_at_ground_level() {
    for p in deformable() {
        for ell in 0..4 {
            let c = exceptional_coeffs(ell, 0, &p).unwrap();
            assert!(c.a1.is_zero() && c.a2.is_zero() && c.b1.is_zero());
        }
    }
}

#[test]
fn coefficient_example() {
    let c = exceptional_coeffs(1, 1, &wilson(["1", "1", "2", "2"])).unwrap();
    assert_eq!(c.a1, G::from(-1));
    assert!(c.a2.is_zero());
}

#[test]
fn a2_vanishes_for_ell_one() {
    for p in deformable() {
        for n in 0..6 {
            assert!(exceptional_coeffs(1, n, &p).unwrap().a2.is_zero());
        }
    }
}

#[test]
fn coefficients_are_real() {
    for p in deformable() {
        for ell in 1..4 {
            for n in 0..6 {
                assert!(exceptional_coeffs(ell, n, &p).unwrap().is_real(), "{p:?} ell={ell} n={n}");
            }
        }
    }
}

#[test]
fn degenerate_denominator_is_an_error() {
    // a1 + a2 − a3 − a4 − 2(ℓ−1) = 0 at ℓ = 1
    let p = wilson(["1", "2", "3/2", "3/2"]);
    assert!(matches!(exceptional_coeffs(1, 1, &p), Err(crate::Error::Degenerate(_))));
    assert!(exceptional_coeffs(1, 0, &p).is_ok());
}

#[test]
fn ground_member_and_degeneration() {
    for p in deformable() {
        for ell in 0..4 {
            assert_eq!(exceptional_poly(ell, 0, &p).unwrap(), xi_poly(ell, &p.plus_delta(1)));
        }
        for n in 0..5 {
            assert_eq!(exceptional_poly(0, n, &p).unwrap(), classical_poly(n, &p));
        }
        assert_eq!(deformed_potential(0, &p).unwrap().v, potential(&p).v);
        assert_eq!(p.energy_ell(0, 3), p.energy(3));
    }
}

#[test]
fn degree_and_reality() {
    for p in deformable() {
        for ell in 1..4 {
            for n in 0..5 {
                let q = exceptional_poly(ell, n, &p).unwrap();
                assert_eq!(q.degree(), Some(ell + n));
                assert!(q.is_real(), "{p:?} ell={ell} n={n}");
            }
        }
    }
}

#[test]
fn first_excited_energy() {
    let p = wilson(["1", "1", "2", "2"]);
    assert_eq!(p.energy_ell(1, 1), G::from(8));
    assert!(htilde_eigencheck(1, 1, &p).unwrap().passed());
}

#[test]
fn ladder_relation() {
    for p in deformable() {
        for ell in 0..4 {
            for n in 1..6 {
                assert_eq!(p.forward_coeff_ell(ell, n) * p.backward_coeff_ell(ell, n - 1), p.energy_ell(ell, n));
            }
        }
    }
}

#[test]
fn forward_annihilates_ground_member() {
    for p in deformable() {
        for ell in 1..3 {
            let p0 = exceptional_poly(ell, 0, &p).unwrap();
            assert!(apply_forward_ell(ell, &p, &p0).unwrap().is_zero());
        }
    }
}

#[test]
fn backward_example() {
    let p = wilson(["1", "1", "2", "2"]);
    let up = exceptional_poly(1, 0, &p.plus_delta(1)).unwrap();
    assert_eq!(apply_backward_ell(1, &p, &up).unwrap(), -&exceptional_poly(1, 1, &p).unwrap());
}

#[test]
fn shift_operator_actions() {
    for p in deformable() {
        for ell in 1..3 {
            for n in 1..4 {
                let here = exceptional_poly(ell, n, &p).unwrap();
                let next = exceptional_poly(ell, n - 1, &p.plus_delta(1)).unwrap();
                let f = apply_forward_ell(ell, &p, &here).unwrap();
                assert_eq!(f, next.scale(&p.forward_coeff_ell(ell, n)), "{p:?} ell={ell} n={n}");
                let b = apply_backward_ell(ell, &p, &next).unwrap();
                assert_eq!(b, here.scale(&p.backward_coeff_ell(ell, n - 1)), "{p:?} ell={ell} n={n}");
                let bf = apply_backward_ell(ell, &p, &f).unwrap();
                assert_eq!(bf, here.scale(&p.energy_ell(ell, n)));
            }
        }
    }
}

#[test]
fn ell_zero_operators_are_classical() {
    let p = wilson(["1", "1", "2", "2"]);
    let p2 = classical_poly(2, &p);
    assert_eq!(apply_forward_ell(0, &p, &p2).unwrap(), apply_forward(&p, &p2).unwrap());
}

#[test]
fn deformed_eigen_identity() {
    for p in deformable() {
        for ell in 0..3 {
            for n in 0..4 {
                let r = htilde_eigencheck(ell, n, &p).unwrap();
                assert!(r.passed(), "{r:?}");
            }
        }
    }
}

#[test]
fn deformed_eigen_identity_rejects_wrong_energy() {
    let p = aw(["3/4", "3/4", "1/4", "1/4"]);
    let q = exceptional_poly(1, 2, &p).unwrap();
    let r = htilde_residual(1, &p, &q, &p.energy_ell(1, 1)).unwrap();
    assert!(!r.is_zero());
}

#[test]
fn deformed_shape_invariance() {
    for p in deformable() {
        for ell in 0..3 {
            let r = check_shape_invariance_ell(ell, &p).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}

#[test]
fn shape_invariance_fails_for_undeformed_energy() {
    let p = wilson(["1", "1", "2", "2"]);
    let r = crate::classical::check_shape_invariance_with(
        "x",
        &p,
        p.summary(),
        |mu| deformed_potential(1, mu),
        &p.energy(1),
    )
    .unwrap();
    assert!(!r.passed());
}

#[test]
fn conjugate_potential_on_real_line_is_conjugate() {
    let p = wilson(["1", "1", "2+i", "2-i"]);
    let pot = deformed_potential(1, &p).unwrap();
    for k in 1..6 {
        let x = G::ratio(k, 3);
        assert_eq!(pot.v_star.eval(&x).unwrap(), pot.v.eval(&x).unwrap().conj());
    }
}

#[test]
fn rodrigues_examples() {
    let w = wilson(["1", "1", "2", "2"]);
    assert_eq!(rodrigues_construct(1, 1, &w).unwrap(), exceptional_poly(1, 1, &w).unwrap());
    assert_eq!(rodrigues_construct(2, 0, &w).unwrap(), exceptional_poly(2, 0, &w).unwrap());
    let a = aw(["3/4", "3/4", "1/4", "1/4"]);
    assert!(check_rodrigues(2, 3, &a).unwrap().passed());
}

#[test]
fn rodrigues_matches_closed_form() {
    for p in deformable() {
        for ell in 1..3 {
            for n in 1..4 {
                let r = check_rodrigues(ell, n, &p).unwrap();
                assert!(r.passed(), "{r:?}");
            }
        }
    }
}

#[test]
fn rank_of_small_matrices() {
    let m = |rows: &[&[i64]]| rows.iter().map(|r| r.iter().map(|&x| G::from(x)).collect()).collect::<Vec<Vec<G>>>();
    assert_eq!(exact_rank(&m(&[&[1, 2], &[2, 4]])), 1);
    assert_eq!(exact_rank(&m(&[&[0, 1], &[1, 0], &[1, 1]])), 2);
    assert_eq!(exact_rank::<G>(&[]), 0);
}

#[test]
fn missing_degrees() {
    for p in deformable() {
        for ell in 1..4 {
            let r = check_missing_degrees(ell, &p).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}

#[test]
fn hermiticity_examples() {
    assert!(hermiticity_l1(&wilson(["1", "1", "2", "2"])));
    // a₃ grows with a₄ fixed small; growing both keeps the inequality
    assert!(!hermiticity_l1(&wilson(["1", "1", "40", "1/2"])));
    assert!(hermiticity_l1(&wilson(["1", "1", "40", "40"])));
    let p = aw(["3/4", "3/4", "1/4", "1/4"]);
    assert!(!hermiticity_l1(&p));
    assert_eq!(hermiticity_l1_margin(&p), rat(-1, 16));
}

#[test]
fn norm_prefactor_reduces_at_ell_zero() {
    for p in deformable() {
        assert_eq!(p.norm_ratio_ell(0, 3), G::from(1));
    }
    let p = wilson(["1", "1", "2", "2"]);
    assert!(matches!(norm_h_ell(1, 0, &p), NormValue::PiTimes(_) | NormValue::Numeric(_)));
}

#[test]
fn pointwise_evaluation_matches_expansion() {
    for p in deformable() {
        for ell in 0..4 {
            for n in 0..4 {
                let poly = exceptional_poly(ell, n, &p).unwrap();
                for k in -2..3 {
                    let x = G::ratio(k, 3);
                    let one_minus = G::from(1) - x.clone();
                    assert_eq!(exceptional_eval(ell, n, &p, &x, &one_minus).unwrap(), poly.eval(&x));
                    if n == 0 {
                        assert_eq!(xi_eval(ell, &p.plus_delta(1), &x, &one_minus), poly.eval(&x));
                    }
                }
            }
        }
    }
}

#[test]
fn forward_backward_reports() {
    for p in deformable() {
        for n in 0..3 {
            let r = check_forward_backward(1, n, &p).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}

#[test]
fn norm_ratio_is_one_at_ell_zero() {
    let p = aw(["1/2", "1/2", "1/2", "1/2"]);
    assert_eq!(p.norm_ratio_ell(0, 0), G::from(1));
    assert_eq!(norm_h_ell(0, 0, &p), crate::classical::norm_h(0, &p));
}

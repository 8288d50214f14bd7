use super::{apply_backward_ell, exceptional_poly, xi_poly};
use crate::classical::ParamSet;
use crate::error::{Error, Result};
use crate::numfield::Scalar;
use crate::polycore::{Poly, RatFunc};
use crate::report::{Residual, Status, Timer, VerificationReport};

/// `P_{ℓ,n}(λ)` built from `P_{ℓ,0}(λ+nδ) = ξ_ℓ(λ+(n+1)δ)` by the chain
/// `B_ℓ(λ) B_ℓ(λ+δ) ⋯ B_ℓ(λ+(n−1)δ)`, divided by `Π_k b_{ℓ,n−1−k}(λ+kδ)`.
pub fn rodrigues_construct<T: Scalar>(ell: usize, n: usize, lambda: &ParamSet<T>) -> Result<Poly<T>> {
    let mut p = xi_poly(ell, &lambda.plus_delta(n as i32 + 1));
    let mut norm = T::one();
    for k in (0..n).rev() {
        let mu = lambda.plus_delta(k as i32);
        p = apply_backward_ell(ell, &mu, &p)?;
        norm = norm * mu.backward_coeff_ell(ell, n - 1 - k);
    }
    if norm.is_zero() {
        return Err(Error::Degenerate(format!("backward coefficients vanish at {lambda:?}")));
    }
    Ok(p.scale(&(T::one() / norm)))
}

/// The Rodrigues chain against the closed form; the difference polynomial
/// is attached on mismatch.
pub fn check_rodrigues<T: Scalar>(ell: usize, n: usize, lambda: &ParamSet<T>) -> Result<VerificationReport> {
    let timer = Timer::start();
    let diff = &rodrigues_construct(ell, n, lambda)? - &exceptional_poly(ell, n, lambda)?;
    let mut params = lambda.summary();
    params["ell"] = ell.into();
    params["n"] = n.into();
    Ok(timer.exact("rodrigues_chain", params, &RatFunc::from_poly(diff)))
}

/// Rank of a matrix given by rows (short rows are zero-padded), by
/// Gaussian elimination; meaningful for exact scalars.
pub fn exact_rank<T: Scalar>(rows: &[Vec<T>]) -> usize {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut m: Vec<Vec<T>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.resize(cols, T::zero());
            r
        })
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = T::one() / m[rank][c].clone();
        for r in rank + 1..m.len() {
            if m[r][c].is_zero() {
                continue;
            }
            let f = m[r][c].clone() * inv.clone();
            let (top, rest) = m.split_at_mut(r);
            for (x, p) in rest[0][c..cols].iter_mut().zip(&top[rank][c..cols]) {
                *x = x.clone() - p.clone() * f.clone();
            }
        }
        rank += 1;
    }
    rank
}

/// Exact check that `span{P_{ℓ,0}, …, P_{ℓ,ℓ+3}}` holds no nonzero
/// polynomial of degree below `ℓ`: the coefficients of degrees `ℓ..=2ℓ+3`
/// must have full rank.
pub fn check_missing_degrees<T: Scalar>(ell: usize, lambda: &ParamSet<T>) -> Result<VerificationReport> {
    let timer = Timer::start();
    let count = ell + 4;
    let rows = (0..count)
        .map(|n| {
            let p = exceptional_poly(ell, n, lambda)?;
            Ok((ell..ell + count).map(|k| p.coeff(k)).collect())
        })
        .collect::<Result<Vec<Vec<T>>>>()?;
    let rank = exact_rank(&rows);
    let mut params = lambda.summary();
    params["ell"] = ell.into();
    let status = if rank == count { Status::Pass } else { Status::Fail };
    let report = timer
        .finish("missing_degrees", params, status, (rank != count).then_some(Residual::Numeric { value: rank as f64 }))
        .with_detail(format!("rank {rank} of {count}"));
    Ok(report)
}

//! Scalar maximization over the correlation coefficient `rho ∈ [-1, 1]`.

use crate::{Error, Result};

/// Points of the coarse grid, endpoints included.
pub const GRID_POINTS: usize = 4001;

/// Default refinement tolerance on `rho`.
pub const DEFAULT_TOL: f64 = 1e-10;

const INV_PHI: f64 = 0.618_033_988_749_894_8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhoResult {
    pub rho: f64,
    pub value: f64,
}

fn eval<F: Fn(f64) -> f64>(f: &F, rho: f64) -> Result<f64> {
    let v = f(rho);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Numeric(format!("objective is {v} at rho = {rho}")))
    }
}

/// Coarse grid search followed by golden-section refinement inside the
/// neighbourhood of the best grid point.
///
/// Ties on the grid go to the smallest `rho`. The refined point replaces the
/// grid point only if it is strictly better, so the result never falls below
/// the grid optimum.
pub fn maximize_over_rho<F: Fn(f64) -> f64>(objective: F, tol: f64) -> Result<RhoResult> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Numeric(format!("tolerance must be positive, got {tol}")));
    }
    let step = 2.0 / (GRID_POINTS - 1) as f64;
    let grid = |i: usize| (-1.0 + i as f64 * step).clamp(-1.0, 1.0);

    let mut best_i = 0;
    let mut best = eval(&objective, grid(0))?;
    for i in 1..GRID_POINTS {
        let v = eval(&objective, grid(i))?;
        if v > best {
            best = v;
            best_i = i;
        }
    }

    let mut lo = grid(best_i.saturating_sub(1));
    let mut hi = grid((best_i + 1).min(GRID_POINTS - 1));
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = eval(&objective, x1)?;
    let mut f2 = eval(&objective, x2)?;
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = eval(&objective, x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = eval(&objective, x1)?;
        }
    }
    let mid = 0.5 * (lo + hi);
    let refined = eval(&objective, mid)?;
    if refined > best {
        Ok(RhoResult {
            rho: mid,
            value: refined,
        })
    } else {
        Ok(RhoResult {
            rho: grid(best_i),
            value: best,
        })
    }
}

//! Bracketed scalar solver for the front equations.
//!
//! Both front equations have the form `m(x) = x` with `m` strictly
//! decreasing on (0, inf), so `m(x) - x` changes sign exactly once. The
//! solver maintains a sign-change bracket the whole way: secant steps give
//! the speed, a forced bisection every other iteration guarantees the
//! bracket halves, and the returned certificate proves where the root lives.

use serde::Serialize;

use crate::Error;

/// Convergence targets for a front solve: `residual` bounds |m(x) - x| at
/// the returned point, `width` bounds the final bracket.
#[derive(Debug, Clone, Copy)]
pub struct RootTolerance {
    pub residual: f64,
    pub width: f64,
}

impl Default for RootTolerance {
    fn default() -> Self {
        Self { residual: 1e-12, width: 1e-13 }
    }
}

impl RootTolerance {
    /// Default widths with a caller-chosen residual target.
    pub fn with_residual(residual: f64) -> Result<Self, Error> {
        if !residual.is_finite() || residual <= 0.0 {
            return Err(Error::Domain(format!(
                "residual tolerance must be finite and > 0, got {residual}"
            )));
        }
        Ok(Self { residual, ..Self::default() })
    }
}

/// A solved front coefficient plus its convergence evidence: the fixed-point
/// residual |m(coeff) - coeff| and the final bracket (lo, hi) on which the
/// map was verified to cross the diagonal.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct FrontSolve {
    pub coeff: f64,
    pub residual: f64,
    pub bracket: (f64, f64),
    pub iterations: u32,
}

/// Solve `m(x) = x` for a strictly decreasing map on (0, inf).
///
/// Starts from the bracket [1e-8, 1]; the upper end doubles while the map
/// is still above the diagonal (failing past 100 means no physical front),
/// and the lower end shrinks if the root lies below 1e-8, which happens for
/// film coefficients barely past critical.
pub(crate) fn solve_decreasing_map<F>(map: F, tol: RootTolerance) -> Result<FrontSolve, Error>
where
    F: Fn(f64) -> Result<f64, Error>,
{
    let phi = |x: f64| -> Result<f64, Error> { Ok(map(x)? - x) };

    let mut lo = 1e-8;
    let mut phi_lo = phi(lo)?;
    while phi_lo <= 0.0 {
        lo *= 1e-2;
        if lo < 1e-280 {
            return Err(Error::Solver(
                "map is below the diagonal arbitrarily close to 0; no positive root".into(),
            ));
        }
        phi_lo = phi(lo)?;
    }

    let mut hi = 1.0;
    let mut phi_hi = phi(hi)?;
    while phi_hi >= 0.0 {
        hi *= 2.0;
        if hi > 100.0 {
            return Err(Error::Solver(
                "front coefficient bracket exceeded 100; data out of physical range".into(),
            ));
        }
        phi_hi = phi(hi)?;
    }

    let mut best_x = if phi_lo.abs() <= phi_hi.abs() { lo } else { hi };
    let mut best_phi = phi_lo.abs().min(phi_hi.abs());
    let mut iterations = 0u32;

    for k in 0..200u32 {
        iterations = k + 1;
        let width = hi - lo;
        if best_phi <= tol.residual && width <= tol.width {
            break;
        }
        // alternate: secant for speed, bisection for the width guarantee
        let mid = 0.5 * (lo + hi);
        let mut x = if k % 2 == 0 {
            let s = hi - phi_hi * (hi - lo) / (phi_hi - phi_lo);
            if s.is_finite() && s > lo && s < hi {
                s
            } else {
                mid
            }
        } else {
            mid
        };
        if x <= lo || x >= hi {
            x = mid;
        }
        if x <= lo || x >= hi {
            // bracket has collapsed to adjacent floats
            break;
        }
        let phi_x = phi(x)?;
        if phi_x.abs() < best_phi {
            best_phi = phi_x.abs();
            best_x = x;
        }
        if phi_x > 0.0 {
            lo = x;
            phi_lo = phi_x;
        } else if phi_x < 0.0 {
            hi = x;
            phi_hi = phi_x;
        } else {
            lo = x;
            hi = x;
            break;
        }
    }

    if best_phi > tol.residual || (hi - lo) > tol.width {
        return Err(Error::Solver(format!(
            "front solve stalled: residual {best_phi:e} (target {:e}), bracket width {:e} \
             (target {:e})",
            tol.residual,
            hi - lo,
            tol.width
        )));
    }

    Ok(FrontSolve { coeff: best_x, residual: best_phi, bracket: (lo, hi), iterations })
}

//! Similarity solution under a convective film whose coefficient decays as
//! `h(t) = h_0 / sqrt(t)`.
//!
//! That decay law is the one shape that keeps the problem self-similar, so
//! the front again moves as `s(t) = 2 lambda sqrt(alpha_l t)`. Unlike the
//! imposed-temperature case the film can be too weak to freeze anything:
//! solid appears only when `h_0` exceeds the threshold of
//! [`crate::model::critical_h0`], and below (or exactly at) the threshold
//! the slab stays liquid with a constant face temperature at or above the
//! freezing point.

use crate::model::{self, BoundaryCondition, DimensionlessGroups, ProblemSpec};
use crate::neumann::{Regime, SimilaritySolution};
use crate::solver::{solve_decreasing_map, FrontSolve, RootTolerance};
use crate::special::{erf, f1};
use crate::Error;

/// Fixed-point map of the convective front equation,
/// `b1 exp(-b x^2) / (1 + b2 erf(x sqrt(b))) - b3 F1(x)`.
///
/// Defined for x >= 0 and strictly decreasing; its value at 0 is `b1 - b3`,
/// so a positive fixed point exists exactly when `b1 > b3`, which is the
/// same statement as `h_0` exceeding the freezing threshold.
pub fn front_map(x: f64, groups: &DimensionlessGroups) -> Result<f64, Error> {
    let b1 = groups
        .b1
        .ok_or_else(|| Error::Spec("groups carry no convective data (b1)".into()))?;
    let b2 = groups.b2.expect("b1 and b2 are built together");
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!("front map needs x >= 0, got {x}")));
    }
    let xb = x * groups.b.sqrt();
    Ok(b1 * (-groups.b * x * x).exp() / (1.0 + b2 * erf(xb)) - groups.b3 * f1(x))
}

/// Decide whether a convective spec freezes the slab. Strictly above the
/// threshold grows solid; at or below it the face never reaches the
/// freezing point and the slab stays liquid.
pub fn classify_regime(spec: &ProblemSpec) -> Result<Regime, Error> {
    let BoundaryCondition::Convective { h_0, .. } = spec.bc else {
        return Err(Error::Spec(
            "regime classification applies to convective conditions only".into(),
        ));
    };
    if h_0 > model::critical_h0(spec)? {
        Ok(Regime::TwoPhase)
    } else {
        Ok(Regime::PureConduction)
    }
}

/// Solve the convective front equation for `lambda`.
pub fn solve_lambda(groups: &DimensionlessGroups) -> Result<FrontSolve, Error> {
    solve_lambda_with(groups, RootTolerance::default())
}

/// [`solve_lambda`] with caller-chosen tolerances.
pub fn solve_lambda_with(
    groups: &DimensionlessGroups,
    tol: RootTolerance,
) -> Result<FrontSolve, Error> {
    let b1 = groups
        .b1
        .ok_or_else(|| Error::Spec("groups carry no convective data (b1)".into()))?;
    if b1 <= groups.b3 {
        return Err(Error::Regime(
            "film is at or below the freezing threshold; no front to solve for".into(),
        ));
    }
    solve_decreasing_map(|x| front_map(x, groups), tol)
}

/// Build the solved container for a convective spec, classifying the
/// regime first. Pure-conduction solutions carry no front and evaluate the
/// single-phase liquid profile.
pub(crate) fn solve_convective(
    spec: &ProblemSpec,
    tol: RootTolerance,
) -> Result<SimilaritySolution, Error> {
    let groups = model::convective_groups(spec)?;
    let front = match classify_regime(spec)? {
        Regime::TwoPhase => Some(solve_lambda_with(&groups, tol)?),
        Regime::PureConduction => None,
    };
    Ok(SimilaritySolution { spec: *spec, groups, front })
}

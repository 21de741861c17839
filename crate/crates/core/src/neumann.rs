//! Similarity solution for the imposed-face-temperature problem and the
//! shared solution container.
//!
//! A semi-infinite liquid slab at `T_i >= T_f` starts freezing at t = 0
//! through the face x = 0 held at `T_0 < T_f`. The front sits at
//! `s(t) = 2 xi sqrt(alpha_l t)`; both phase profiles are error functions of
//! the similarity variable, and `xi` is the unique fixed point of
//! [`front_map`], which is exactly the latent-heat balance at the front.

use serde::Serialize;

use crate::model::{self, BoundaryCondition, DimensionlessGroups, ProblemSpec};
use crate::solver::{solve_decreasing_map, FrontSolve, RootTolerance};
use crate::special::{erf, erfcx, f1, f2};
use crate::Error;

/// Whether the data actually freezes the slab.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// a solid layer grows behind a moving front
    TwoPhase,
    /// convective data too weak to nucleate solid; the slab stays liquid
    PureConduction,
}

/// Phase at a sampled point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    Solid,
    Interface,
    Liquid,
}

/// A solved similarity problem: the validated spec, its dimensionless
/// groups, and the front coefficient when one exists (`None` exactly in the
/// pure-conduction regime).
#[derive(Debug, Clone)]
pub struct SimilaritySolution {
    pub spec: ProblemSpec,
    pub groups: DimensionlessGroups,
    pub front: Option<FrontSolve>,
}

/// Fixed-point map of the imposed-temperature front equation,
/// `b4 F2(sqrt(b) x) - b3 F1(x)`. Strictly decreasing from +inf at 0+ to
/// -inf, so it crosses the diagonal exactly once.
pub fn front_map(x: f64, groups: &DimensionlessGroups) -> Result<f64, Error> {
    let b4 = groups
        .b4
        .ok_or_else(|| Error::Spec("groups carry no imposed-temperature data (b4)".into()))?;
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("front map needs x > 0, got {x}")));
    }
    Ok(b4 * f2(groups.b.sqrt() * x) - groups.b3 * f1(x))
}

/// Solve the front equation for the imposed-temperature problem.
pub fn solve_xi(groups: &DimensionlessGroups) -> Result<FrontSolve, Error> {
    solve_xi_with(groups, RootTolerance::default())
}

/// [`solve_xi`] with caller-chosen tolerances.
pub fn solve_xi_with(
    groups: &DimensionlessGroups,
    tol: RootTolerance,
) -> Result<FrontSolve, Error> {
    let b4 = groups
        .b4
        .ok_or_else(|| Error::Spec("groups carry no imposed-temperature data (b4)".into()))?;
    if b4 <= 0.0 {
        return Err(Error::Spec(
            "face is not below the freezing point; no phase change under imposed temperature"
                .into(),
        ));
    }
    solve_decreasing_map(|x| front_map(x, groups), tol)
}

/// erfc(u)/erfc(c) for u >= c >= 0 without underflow: switches to the
/// scaled complement once erfc(c) itself is at risk.
pub(crate) fn erfc_ratio(u: f64, c: f64) -> f64 {
    if c <= 20.0 {
        crate::special::erfc(u) / crate::special::erfc(c)
    } else {
        erfcx(u) / erfcx(c) * (c * c - u * u).exp()
    }
}

impl SimilaritySolution {
    pub fn regime(&self) -> Regime {
        if self.front.is_some() {
            Regime::TwoPhase
        } else {
            Regime::PureConduction
        }
    }

    /// Front coefficient (the fixed point); `None` in pure conduction.
    pub fn front_coefficient(&self) -> Option<f64> {
        self.front.map(|f| f.coeff)
    }

    /// Front position `s(t) = 2 c sqrt(alpha_l t)`. The liquid diffusivity
    /// sets the similarity scale under both face conditions.
    pub fn front_position(&self, t: f64) -> Result<f64, Error> {
        let front = self
            .front
            .ok_or_else(|| Error::Regime("pure-conduction solution has no front".into()))?;
        if !t.is_finite() || t < 0.0 {
            return Err(Error::Domain(format!("front position needs t >= 0, got {t}")));
        }
        Ok(2.0 * front.coeff * (self.spec.material.alpha_l() * t).sqrt())
    }

    /// Temperature and phase at (x, t), x >= 0, t > 0. Points within
    /// 1e-12 max(1, s(t)) of the front report the freezing temperature and
    /// `Phase::Interface` exactly.
    pub fn temperature(&self, x: f64, t: f64) -> Result<(f64, Phase), Error> {
        check_point(x, t)?;
        match self.front {
            None => Ok((self.pure_conduction_branch(x, t)?, Phase::Liquid)),
            Some(front) => {
                let s = 2.0 * front.coeff * (self.spec.material.alpha_l() * t).sqrt();
                if (x - s).abs() <= 1e-12 * s.max(1.0) {
                    Ok((self.spec.material.t_f, Phase::Interface))
                } else if x < s {
                    Ok((self.solid_branch(x, t)?, Phase::Solid))
                } else {
                    Ok((self.liquid_branch(x, t)?, Phase::Liquid))
                }
            }
        }
    }

    /// Solid-phase closed form evaluated as a formula, with no front
    /// classification. The profile is analytic in x, so verification
    /// stencils may probe it slightly outside [0, s(t)] (for one-sided and
    /// centered differences at the face and the front).
    pub fn solid_branch(&self, x: f64, t: f64) -> Result<f64, Error> {
        check_stencil_point(x, t)?;
        let front = self
            .front
            .ok_or_else(|| Error::Regime("pure-conduction solution has no solid phase".into()))?;
        let m = &self.spec.material;
        let c = front.coeff;
        let u = x / (2.0 * (m.alpha_s() * t).sqrt());
        let erf_front = erf(c * self.groups.b.sqrt());
        match self.spec.bc {
            BoundaryCondition::Dirichlet { t_0 } => {
                Ok(t_0 + (m.t_f - t_0) * erf(u) / erf_front)
            }
            BoundaryCondition::Convective { h_0: _, t_inf } => {
                let b2 = self.groups.b2.expect("convective groups carry b2");
                let big = b2 * erf_front;
                if big >= 1.0 {
                    // subtractive form: stable when the film term dominates
                    Ok(m.t_f - b2 * (m.t_f - t_inf) * (erf_front - erf(u)) / (1.0 + big))
                } else {
                    Ok(t_inf + (m.t_f - t_inf) * (1.0 + b2 * erf(u)) / (1.0 + big))
                }
            }
            BoundaryCondition::Flux { .. } => {
                Err(Error::Unsupported("no solution path for an imposed-flux spec".into()))
            }
        }
    }

    /// Liquid-phase closed form as a formula (same caveats as
    /// [`SimilaritySolution::solid_branch`]). In the pure-conduction regime
    /// this is the whole solution.
    pub fn liquid_branch(&self, x: f64, t: f64) -> Result<f64, Error> {
        check_stencil_point(x, t)?;
        match self.front {
            None => self.pure_conduction_branch(x, t),
            Some(front) => {
                let m = &self.spec.material;
                let u = x / (2.0 * (m.alpha_l() * t).sqrt());
                Ok(self.spec.t_i - (self.spec.t_i - m.t_f) * erfc_ratio(u, front.coeff))
            }
        }
    }

    /// Liquid profile when the film never freezes the slab: an erfc decay
    /// from the constant face value toward `T_i`, with the face value set
    /// by the film/conduction balance.
    fn pure_conduction_branch(&self, x: f64, t: f64) -> Result<f64, Error> {
        let BoundaryCondition::Convective { h_0, t_inf } = self.spec.bc else {
            return Err(Error::Regime(
                "pure conduction only arises under a convective condition".into(),
            ));
        };
        let m = &self.spec.material;
        let kappa = m.k_l / (h_0 * (m.alpha_l() * std::f64::consts::PI).sqrt());
        let u = x / (2.0 * (m.alpha_l() * t).sqrt());
        Ok(self.spec.t_i - (self.spec.t_i - t_inf) / (1.0 + kappa) * crate::special::erfc(u))
    }

    /// Face temperature `T(0, t)`: the imposed value, the constant value a
    /// convective film maintains in the two-phase regime, or the constant
    /// pure-conduction face value. Constant in t in all three cases.
    pub fn face_temperature(&self) -> f64 {
        let m = &self.spec.material;
        match (self.spec.bc, self.front) {
            (BoundaryCondition::Dirichlet { t_0 }, _) => t_0,
            (BoundaryCondition::Convective { t_inf, .. }, Some(front)) => {
                let b2 = self.groups.b2.expect("convective groups carry b2");
                let big = b2 * erf(front.coeff * self.groups.b.sqrt());
                t_inf + (m.t_f - t_inf) / (1.0 + big)
            }
            (BoundaryCondition::Convective { h_0, t_inf }, None) => {
                let kappa = m.k_l / (h_0 * (m.alpha_l() * std::f64::consts::PI).sqrt());
                self.spec.t_i - (self.spec.t_i - t_inf) / (1.0 + kappa)
            }
            (BoundaryCondition::Flux { .. }, _) => f64::NAN,
        }
    }

    /// Coefficient `q0` of the face heat-flux law `sqrt(t) k ∂T/∂x(0,t)`,
    /// which the similarity form makes time-invariant. For two-phase
    /// solutions it equals `k_s (T_f - T(0,t)) / (sqrt(pi alpha_s) erf(c sqrt(b)))`;
    /// in pure conduction the liquid-side analogue applies.
    pub fn face_flux_coefficient(&self) -> Result<f64, Error> {
        let m = &self.spec.material;
        match self.front {
            Some(front) => {
                let erf_front = erf(front.coeff * self.groups.b.sqrt());
                let t_face = self.face_temperature();
                Ok(m.k_s * (m.t_f - t_face) / ((std::f64::consts::PI * m.alpha_s()).sqrt() * erf_front))
            }
            None => {
                let BoundaryCondition::Convective { h_0, t_inf } = self.spec.bc else {
                    return Err(Error::Regime("flux coefficient needs a solved regime".into()));
                };
                // k_l T_x(0,t) = h(t) (T(0,t) - T_inf) holds here too
                Ok(h_0 * (self.face_temperature() - t_inf))
            }
        }
    }
}

fn check_point(x: f64, t: f64) -> Result<(), Error> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!("temperature needs x >= 0, got {x}")));
    }
    check_time(t)
}

fn check_stencil_point(x: f64, t: f64) -> Result<(), Error> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("branch evaluation needs finite x, got {x}")));
    }
    check_time(t)
}

fn check_time(t: f64) -> Result<(), Error> {
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::Domain(format!("temperature needs t > 0, got {t}")));
    }
    Ok(())
}

/// Build the solved container for an imposed-temperature spec.
pub(crate) fn solve_dirichlet(
    spec: &ProblemSpec,
    tol: RootTolerance,
) -> Result<SimilaritySolution, Error> {
    let groups = model::dirichlet_groups(spec)?;
    let front = solve_xi_with(&groups, tol)?;
    Ok(SimilaritySolution { spec: *spec, groups, front: Some(front) })
}

//! Independent checks of the closed-form solutions: a dimensionless
//! reformulation solved separately and mapped back, finite-difference
//! residuals of the governing equations, and an enthalpy-method marching
//! oracle (see [`enthalpy`]).
//!
//! Nothing here trusts the similarity derivation. The residual functions
//! difference the temperature fields numerically against the heat
//! equation, the front balance, and the film balance; the dimensionless
//! path re-solves the transcendental front equation from scratch out of
//! pure numbers.

pub mod enthalpy;

use serde::Serialize;

use crate::model::{BoundaryCondition, DimensionlessGroups, ProblemSpec};
use crate::neumann::{erfc_ratio, Phase};
use crate::solver::{FrontSolve, RootTolerance};
use crate::special::{erf, erfc};
use crate::{convective, neumann, Error};

const PI: f64 = std::f64::consts::PI;

/// The problem restated in dimensionless variables `eta = x/L`,
/// `tau = alpha_s t / L^2`, `theta = (T - T_f)/(T_i - T_f)`, carrying only
/// pure numbers. The front equation is re-solved from these numbers alone,
/// so agreement with the dimensional path is a real consistency check.
#[derive(Debug, Clone)]
pub struct DimensionlessProblem {
    /// characteristic length L, in meters; a pure gauge
    pub scale: f64,
    /// solid Stefan number `c_s (T_i - T_f) / latent_heat`
    pub ste: f64,
    /// diffusivity ratio alpha_l / alpha_s
    pub alpha_ratio: f64,
    /// conductivity ratio k_l / k_s
    pub k_ratio: f64,
    /// film number `h_0 sqrt(alpha_s) / k_s`; convective specs only
    pub biot: Option<f64>,
    /// `(T_f - T_inf)/(T_i - T_f)`; convective specs only
    pub theta_inf: Option<f64>,
    /// `(T_f - T_0)/(T_i - T_f)`; imposed-temperature specs only
    pub theta_0: Option<f64>,
    /// film number above which solid grows; convective specs only
    pub film_threshold: Option<f64>,
    /// regime decided purely from dimensionless numbers
    pub two_phase: bool,
    /// front coefficient re-solved in dimensionless variables
    pub front: Option<FrontSolve>,
}

/// Restate a problem in dimensionless form and re-solve it there.
/// Requires genuine superheat (`T_i > T_f`): the temperature normalization
/// divides by `T_i - T_f`.
pub fn to_dimensionless(spec: &ProblemSpec, scale: f64) -> Result<DimensionlessProblem, Error> {
    if !scale.is_finite() || scale <= 0.0 {
        return Err(Error::Domain(format!("characteristic length must be positive, got {scale}")));
    }
    let m = &spec.material;
    let span = spec.t_i - m.t_f;
    if span <= 0.0 {
        return Err(Error::Domain(
            "dimensionless form needs superheat: the temperature unit is T_i - T_f".into(),
        ));
    }
    let ste = m.c_s * span / m.latent_heat;
    let b = m.alpha_l() / m.alpha_s();
    let k_ratio = m.k_l / m.k_s;
    match spec.bc {
        BoundaryCondition::Dirichlet { t_0 } => {
            let theta_0 = (m.t_f - t_0) / span;
            let groups = rebuild_dirichlet_groups(ste, b, k_ratio, theta_0);
            let front = neumann::solve_xi_with(&groups, RootTolerance::default())?;
            Ok(DimensionlessProblem {
                scale,
                ste,
                alpha_ratio: b,
                k_ratio,
                biot: None,
                theta_inf: None,
                theta_0: Some(theta_0),
                film_threshold: None,
                two_phase: true,
                front: Some(front),
            })
        }
        BoundaryCondition::Convective { h_0, t_inf } => {
            let biot = h_0 * m.alpha_s().sqrt() / m.k_s;
            let theta_inf = (m.t_f - t_inf) / span;
            // film number above which the face reaches freezing; the same
            // dichotomy as the dimensional threshold, decided here from
            // pure numbers
            let threshold = k_ratio / (theta_inf * (PI * b).sqrt());
            let two_phase = biot > threshold;
            let front = if two_phase {
                let groups = rebuild_convective_groups(ste, b, k_ratio, biot, theta_inf);
                Some(convective::solve_lambda_with(&groups, RootTolerance::default())?)
            } else {
                None
            };
            Ok(DimensionlessProblem {
                scale,
                ste,
                alpha_ratio: b,
                k_ratio,
                biot: Some(biot),
                theta_inf: Some(theta_inf),
                theta_0: None,
                film_threshold: Some(threshold),
                two_phase,
                front,
            })
        }
        BoundaryCondition::Flux { .. } => {
            Err(Error::Unsupported("no dimensionless path for an imposed-flux spec".into()))
        }
    }
}

fn rebuild_dirichlet_groups(ste: f64, b: f64, k_ratio: f64, theta_0: f64) -> DimensionlessGroups {
    DimensionlessGroups {
        b,
        b3: ste * k_ratio / (b * PI.sqrt()),
        ste,
        b4: Some(ste * theta_0 / (PI * b).sqrt()),
        b1: None,
        b2: None,
        biot: None,
        theta_inf: None,
    }
}

fn rebuild_convective_groups(
    ste: f64,
    b: f64,
    k_ratio: f64,
    biot: f64,
    theta_inf: f64,
) -> DimensionlessGroups {
    DimensionlessGroups {
        b,
        b3: ste * k_ratio / (b * PI.sqrt()),
        ste,
        b4: None,
        b1: Some(biot * theta_inf * ste / b.sqrt()),
        b2: Some(biot * PI.sqrt()),
        biot: Some(biot),
        theta_inf: Some(theta_inf),
    }
}

impl DimensionlessProblem {
    /// Dimensionless front position `r(tau) = 2 lambda sqrt(alpha_ratio tau)`,
    /// with `r(0) = 0`.
    pub fn front_radius(&self, tau: f64) -> Result<f64, Error> {
        let front = self
            .front
            .ok_or_else(|| Error::Regime("pure-conduction problem has no front".into()))?;
        if !tau.is_finite() || tau < 0.0 {
            return Err(Error::Domain(format!("front radius needs tau >= 0, got {tau}")));
        }
        Ok(2.0 * front.coeff * (self.alpha_ratio * tau).sqrt())
    }

    /// Dimensionless temperature and phase at `(eta, tau)`. Zero on the
    /// front, negative in the solid, rising to 1 far into the liquid.
    pub fn theta(&self, eta: f64, tau: f64) -> Result<(f64, Phase), Error> {
        if !eta.is_finite() || eta < 0.0 {
            return Err(Error::Domain(format!("theta needs eta >= 0, got {eta}")));
        }
        if !tau.is_finite() || tau <= 0.0 {
            return Err(Error::Domain(format!("theta needs tau > 0, got {tau}")));
        }
        let b = self.alpha_ratio;
        match self.front {
            None => {
                // liquid slab under a weak film
                let biot = self.biot.expect("pure conduction only arises with a film");
                let theta_inf = self.theta_inf.expect("film data carries theta_inf");
                let kappa = self.k_ratio / (biot * (PI * b).sqrt());
                let v = eta / (2.0 * (b * tau).sqrt());
                Ok((1.0 - (1.0 + theta_inf) * erfc(v) / (1.0 + kappa), Phase::Liquid))
            }
            Some(front) => {
                let c = front.coeff;
                let r = 2.0 * c * (b * tau).sqrt();
                if (eta - r).abs() <= 1e-12 * r.max(1.0) {
                    return Ok((0.0, Phase::Interface));
                }
                if eta < r {
                    let u = eta / (2.0 * tau.sqrt());
                    let erf_front = erf(c * b.sqrt());
                    let value = match (self.theta_0, self.biot, self.theta_inf) {
                        (Some(theta_0), _, _) => -theta_0 * (1.0 - erf(u) / erf_front),
                        (None, Some(biot), Some(theta_inf)) => {
                            let b2 = biot * PI.sqrt();
                            let film = b2 * erf_front;
                            -theta_inf * b2 * (erf_front - erf(u)) / (1.0 + film)
                        }
                        _ => unreachable!("a solved front implies one face datum"),
                    };
                    Ok((value, Phase::Solid))
                } else {
                    let v = eta / (2.0 * (b * tau).sqrt());
                    Ok((1.0 - erfc_ratio(v, c), Phase::Liquid))
                }
            }
        }
    }
}

/// Agreement between the dimensional solution and the dimensionless one
/// mapped back through `x = eta L`, `t = tau L^2 / alpha_s`,
/// `T = T_f + theta (T_i - T_f)`.
#[derive(Debug, Clone, Serialize)]
pub struct RoundTrip {
    pub scale: f64,
    /// |front coefficient (dimensionless) - front coefficient (dimensional)|
    pub coefficient_gap: f64,
    /// max relative gap between r(tau) and s(t)/L over the sample times
    pub front_gap: f64,
    /// max back-mapped temperature gap over the sample grid, relative to
    /// the full temperature span of the data
    pub field_gap: f64,
}

/// Solve a two-phase problem both dimensionally and in dimensionless form,
/// map the latter back, and measure the disagreement. The scale L is a
/// gauge: any positive value must give the same dimensional fields.
pub fn dimensionless_roundtrip(spec: &ProblemSpec, scale: f64) -> Result<RoundTrip, Error> {
    let sol = crate::solve(spec)?;
    let front = sol
        .front
        .ok_or_else(|| Error::Regime("round trip needs a two-phase solution".into()))?;
    let dp = to_dimensionless(spec, scale)?;
    if !dp.two_phase {
        return Err(Error::Regime(
            "dimensionless classification disagrees: no front found".into(),
        ));
    }
    let dp_front = dp.front.expect("two-phase dimensionless problem carries a front");
    let coefficient_gap = (dp_front.coeff - front.coeff).abs();

    let m = &spec.material;
    let span = temp_span(spec);
    let taus = [0.01, 0.1, 1.0, 10.0];
    let mut front_gap = 0.0f64;
    let mut field_gap = 0.0f64;
    for &tau in &taus {
        let t = tau * scale * scale / m.alpha_s();
        let r = dp.front_radius(tau)?;
        let s = sol.front_position(t)?;
        front_gap = front_gap.max((r - s / scale).abs() / r);
        for i in 0..30 {
            let eta = 4.0 * r * i as f64 / 29.0;
            let (theta, _) = dp.theta(eta, tau)?;
            let mapped = m.t_f + theta * (spec.t_i - m.t_f);
            let (direct, _) = sol.temperature(eta * scale, t)?;
            field_gap = field_gap.max((mapped - direct).abs() / span);
        }
    }
    Ok(RoundTrip { scale, coefficient_gap, front_gap, field_gap })
}

/// Full temperature span of the data: initial value minus the coldest
/// datum.
fn temp_span(spec: &ProblemSpec) -> f64 {
    let cold = match spec.bc {
        BoundaryCondition::Dirichlet { t_0 } => t_0,
        BoundaryCondition::Convective { t_inf, .. } => t_inf,
        BoundaryCondition::Flux { .. } => spec.material.t_f,
    };
    spec.t_i - cold
}

/// Observed convergence orders and the steps that produced them.
#[derive(Debug, Clone, Serialize)]
pub struct OrderEstimate {
    pub coarse_step: f64,
    pub fine_step: f64,
    pub heat_order_solid: f64,
    pub heat_order_liquid: f64,
    pub stefan_step: f64,
    pub stefan_order: f64,
}

/// Finite-difference residuals of an analytic solution against the
/// governing equations, all dimensionless.
#[derive(Debug, Clone, Serialize)]
pub struct ResidualReport {
    /// max heat-equation residual in the solid, at the fine step
    pub heat_residual_solid: f64,
    /// max heat-equation residual in the liquid, at the fine step
    pub heat_residual_liquid: f64,
    /// front energy-balance residual relative to the latent term, at the
    /// fine step
    pub stefan_residual: f64,
    /// film-balance residual at the face, relative; convective specs only
    pub robin_residual: Option<f64>,
    pub orders: OrderEstimate,
    /// sample points dropped because a stencil would straddle the front
    pub skipped_points: usize,
}

/// Central-difference heat-equation residual of a field closure at one
/// point, normalized to a pure number by `t / span`. The time step is tied
/// to the space step so the total truncation error scales as the square of
/// the space step.
fn heat_residual_at<F>(field: &F, alpha: f64, span: f64, x: f64, t: f64, h: f64) -> Result<f64, Error>
where
    F: Fn(f64, f64) -> Result<f64, Error>,
{
    let dt = 0.25 * h * h / alpha;
    let t_t = (field(x, t + dt)? - field(x, t - dt)?) / (2.0 * dt);
    let t_xx = (field(x - h, t)? - 2.0 * field(x, t)? + field(x + h, t)?) / (h * h);
    Ok((t_t - alpha * t_xx) * t / span)
}

/// Max heat-equation residuals of a two-phase solution over sample points
/// in each phase, at one space step. Points whose stencil would cross the
/// moving front are skipped and counted.
fn heat_residual_pass(
    sol: &neumann::SimilaritySolution,
    h: f64,
    times: &[f64],
) -> Result<(f64, f64, usize), Error> {
    let m = &sol.spec.material;
    let span = temp_span(&sol.spec);
    let alpha_max = m.alpha_s().max(m.alpha_l());
    let dt = 0.25 * h * h / alpha_max;
    let solid = |x: f64, t: f64| sol.solid_branch(x, t);
    let liquid = |x: f64, t: f64| sol.liquid_branch(x, t);
    let mut max_solid = 0.0f64;
    let mut max_liquid = 0.0f64;
    let mut skipped = 0usize;
    const POINTS: usize = 24;
    for &t in times {
        let s_mid = sol.front_position(t)?;
        if s_mid <= 4.0 * h {
            return Err(Error::Grid(format!(
                "step {h} too coarse for the solid layer {s_mid} at t = {t}"
            )));
        }
        if dt >= 0.1 * t {
            return Err(Error::Grid(format!(
                "time stencil {dt} too wide for the sample time {t}; shrink the step"
            )));
        }
        let s_lo = sol.front_position(t - dt)?;
        let s_hi = sol.front_position(t + dt)?;
        // samples live where the whole stencil stays in one phase over the
        // stencil's time window; the straddle check below is a safety net
        for i in 0..POINTS {
            let x = h + (s_lo - 3.0 * h) * i as f64 / (POINTS - 1) as f64;
            if x + h >= s_lo {
                skipped += 1;
                continue;
            }
            let r = heat_residual_at(&solid, m.alpha_s(), span, x, t, h)?;
            max_solid = max_solid.max(r.abs());
        }
        for i in 0..POINTS {
            let x = s_hi + 2.0 * h + (5.0 * s_mid - s_hi - 2.0 * h) * i as f64 / (POINTS - 1) as f64;
            if x - h <= s_hi {
                skipped += 1;
                continue;
            }
            let r = heat_residual_at(&liquid, m.alpha_l(), span, x, t, h)?;
            max_liquid = max_liquid.max(r.abs());
        }
    }
    Ok((max_solid, max_liquid, skipped))
}

/// One-sided front energy-balance residual at time t with step h, relative
/// to the latent term. First-order by construction: the gradients on each
/// side are one-sided differences anchored at the exact front.
pub fn stefan_residual(
    sol: &neumann::SimilaritySolution,
    t: f64,
    h: f64,
) -> Result<f64, Error> {
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::Domain(format!("front balance needs t > 0, got {t}")));
    }
    if !h.is_finite() || h <= 0.0 {
        return Err(Error::Domain(format!("front balance needs h > 0, got {h}")));
    }
    let front = sol
        .front
        .ok_or_else(|| Error::Regime("front balance needs a two-phase solution".into()))?;
    let m = &sol.spec.material;
    let s = sol.front_position(t)?;
    if s < 10.0 * h {
        return Err(Error::Grid(format!(
            "front layer {s} thinner than ten steps {h}; shrink h or grow t"
        )));
    }
    let t_f = m.t_f;
    let grad_solid = (t_f - sol.solid_branch(s - h, t)?) / h;
    let grad_liquid = (sol.liquid_branch(s + h, t)? - t_f) / h;
    let front_speed = front.coeff * (m.alpha_l() / t).sqrt();
    let latent = m.rho * m.latent_heat * front_speed;
    Ok((m.k_s * grad_solid - m.k_l * grad_liquid - latent).abs() / latent)
}

/// Film-balance residual at the face: conductive flux from a centered
/// difference against the film draw `(h_0/sqrt(t)) (T(0,t) - T_inf)`,
/// relative to the draw. Works in both regimes of a convective spec.
pub fn robin_residual(
    sol: &neumann::SimilaritySolution,
    t: f64,
    h: f64,
) -> Result<f64, Error> {
    let BoundaryCondition::Convective { h_0, t_inf } = sol.spec.bc else {
        return Err(Error::Spec("film balance applies to convective specs".into()));
    };
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::Domain(format!("film balance needs t > 0, got {t}")));
    }
    if !h.is_finite() || h <= 0.0 {
        return Err(Error::Domain(format!("film balance needs h > 0, got {h}")));
    }
    let m = &sol.spec.material;
    let (k, grad) = match sol.front {
        Some(_) => {
            (m.k_s, (sol.solid_branch(h, t)? - sol.solid_branch(-h, t)?) / (2.0 * h))
        }
        None => {
            (m.k_l, (sol.liquid_branch(h, t)? - sol.liquid_branch(-h, t)?) / (2.0 * h))
        }
    };
    let draw = h_0 / t.sqrt() * (sol.face_temperature() - t_inf);
    Ok((k * grad - draw).abs() / draw.abs())
}

/// Difference the analytic fields against the governing equations at two
/// space steps (the given one and its half) and report residuals, observed
/// orders, and the film balance where one exists.
pub fn pde_residual(
    sol: &neumann::SimilaritySolution,
    x_step: f64,
    times: &[f64],
) -> Result<ResidualReport, Error> {
    if sol.front.is_none() {
        return Err(Error::Regime("residual pass needs a two-phase solution".into()));
    }
    if !x_step.is_finite() || x_step <= 0.0 {
        return Err(Error::Grid(format!("space step must be positive, got {x_step}")));
    }
    if times.is_empty() {
        return Err(Error::Grid("no sample times".into()));
    }
    for &t in times {
        if !t.is_finite() || t <= 0.0 {
            return Err(Error::Grid(format!("sample times must be positive, got {t}")));
        }
    }
    let (solid_coarse, liquid_coarse, skipped_a) = heat_residual_pass(sol, x_step, times)?;
    let (solid_fine, liquid_fine, skipped_b) = heat_residual_pass(sol, x_step / 2.0, times)?;

    let stefan_step = x_step / 10.0;
    let mut stefan_coarse = 0.0f64;
    let mut stefan_fine = 0.0f64;
    for &t in times {
        stefan_coarse = stefan_coarse.max(stefan_residual(sol, t, stefan_step)?);
        stefan_fine = stefan_fine.max(stefan_residual(sol, t, stefan_step / 2.0)?);
    }

    let robin = match sol.spec.bc {
        BoundaryCondition::Convective { .. } => {
            // the face sits in the solid here, so its diffusion length sets
            // the curvature scale; this step keeps the relative truncation
            // near 2e-9 for any material
            let alpha_s = sol.spec.material.alpha_s();
            let mut worst = 0.0f64;
            for &t in times {
                worst = worst.max(robin_residual(sol, t, 1.7e-4 * (alpha_s * t).sqrt())?);
            }
            Some(worst)
        }
        _ => None,
    };

    Ok(ResidualReport {
        heat_residual_solid: solid_fine,
        heat_residual_liquid: liquid_fine,
        stefan_residual: stefan_fine,
        robin_residual: robin,
        orders: OrderEstimate {
            coarse_step: x_step,
            fine_step: x_step / 2.0,
            heat_order_solid: (solid_coarse / solid_fine).log2(),
            heat_order_liquid: (liquid_coarse / liquid_fine).log2(),
            stefan_step,
            stefan_order: (stefan_coarse / stefan_fine).log2(),
        },
        skipped_points: skipped_a + skipped_b,
    })
}

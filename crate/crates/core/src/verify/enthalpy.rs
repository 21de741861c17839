//! Explicit enthalpy-method marching oracle for front propagation.
//!
//! The march is seeded from the analytic field at a positive start time
//! (the front starts at zero thickness with unbounded face flux, so t = 0
//! itself is not steppable) and never consults the analytic solution
//! again. Cell enthalpy is the conserved quantity; the front is read back
//! from the latent-heat content, so it moves with first-order smearing of
//! one cell. The scheme is deliberately the simplest stable one: its
//! correctness is meant to be auditable by eye.

use serde::Serialize;

use crate::model::BoundaryCondition;
use crate::neumann::{Phase, SimilaritySolution};
use crate::Error;

/// March window and resolution.
#[derive(Debug, Clone, Serialize)]
pub struct MarchConfig {
    /// seed time, strictly positive
    pub t_start: f64,
    /// end time; at least twice the seed time so the reporting window
    /// `[2 t_start, t_end]` is nonempty
    pub t_end: f64,
    /// cell count across the truncated slab
    pub cells: usize,
    /// explicit time step; `None` picks 0.4 dx^2 / max diffusivity. A value
    /// above the diffusion stability limit is refused.
    pub dt_override: Option<f64>,
}

/// Front trajectory from the march against the similarity law.
#[derive(Debug, Clone, Serialize)]
pub struct FrontPath {
    pub cells: usize,
    pub x_step: f64,
    pub dt: f64,
    /// sample times, ending exactly at the configured end time
    pub times: Vec<f64>,
    /// front position read from the latent-heat content
    pub numeric: Vec<f64>,
    /// front position of the analytic solution at the same times
    pub analytic: Vec<f64>,
    /// max |numeric - analytic| / analytic over samples with
    /// t >= 2 t_start
    pub max_rel_error: f64,
}

/// March the enthalpy field from the seeded state to the end time and
/// report the front trajectory.
pub fn enthalpy_march(
    sol: &SimilaritySolution,
    config: &MarchConfig,
) -> Result<FrontPath, Error> {
    if sol.front.is_none() {
        return Err(Error::Regime("march needs a two-phase solution".into()));
    }
    let (t0, t1, n) = (config.t_start, config.t_end, config.cells);
    if !t0.is_finite() || t0 <= 0.0 {
        return Err(Error::Grid(format!("seed time must be positive, got {t0}")));
    }
    if !t1.is_finite() || t1 < 2.0 * t0 {
        return Err(Error::Grid(format!(
            "end time {t1} leaves the reporting window [2 t_start, t_end] empty"
        )));
    }
    if n < 16 {
        return Err(Error::Grid(format!("need at least 16 cells, got {n}")));
    }

    let m = &sol.spec.material;
    let (alpha_s, alpha_l) = (m.alpha_s(), m.alpha_l());
    let alpha_max = alpha_s.max(alpha_l);
    // reach past the final front and past the thermal penetration depth so
    // the pinned far edge stays at the initial value to high accuracy
    let x_max = (6.0 * sol.front_position(t1)?).max(8.0 * (alpha_l * t1).sqrt());
    let dx = x_max / n as f64;
    let stability_limit = 0.5 * dx * dx / alpha_max;
    let dt_nominal = match config.dt_override {
        None => 0.4 * dx * dx / alpha_max,
        Some(v) => {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::Grid(format!("time step must be positive, got {v}")));
            }
            if v > stability_limit {
                return Err(Error::Grid(format!(
                    "time step {v} above the diffusion limit {stability_limit}; refusing to run"
                )));
            }
            v
        }
    };
    let steps = ((t1 - t0) / dt_nominal).ceil().max(1.0) as usize;
    let dt = (t1 - t0) / steps as f64;

    let (rho, t_f, t_i) = (m.rho, m.t_f, sol.spec.t_i);
    let e_latent = rho * m.latent_heat;
    let inv_latent = 1.0 / e_latent;
    let (cap_solid, cap_liquid) = (rho * m.c_s, rho * m.c_l);
    let (inv_cap_solid, inv_cap_liquid) = (1.0 / cap_solid, 1.0 / cap_liquid);
    let (k_s, k_l) = (m.k_s, m.k_l);
    let e_far = e_latent + cap_liquid * (t_i - t_f);

    // seed from the analytic field at cell centers, then place the front
    // inside its cell by latent fraction
    let mut e = vec![0.0f64; n];
    for (j, ej) in e.iter_mut().enumerate() {
        let x = (j as f64 + 0.5) * dx;
        let (tv, phase) = sol.temperature(x, t0)?;
        *ej = match phase {
            Phase::Solid => cap_solid * (tv - t_f),
            Phase::Liquid => e_latent + cap_liquid * (tv - t_f),
            Phase::Interface => 0.5 * e_latent,
        };
    }
    let s0 = sol.front_position(t0)?;
    let j0 = (s0 / dx).floor() as usize;
    if j0 < n {
        let solid_frac = (s0 - j0 as f64 * dx) / dx;
        e[j0] = (1.0 - solid_frac) * e_latent;
    }
    e[n - 1] = e_far;

    let mut temp = vec![0.0f64; n];
    let mut cond = vec![0.0f64; n];
    let dt_dx = dt / dx;
    let every = (steps / 1024).max(1);
    let mut times = Vec::new();
    let mut numeric = Vec::new();
    let mut analytic = Vec::new();
    let mut max_rel_error = 0.0f64;

    for step in 0..steps {
        let t_now = t0 + step as f64 * dt;
        for j in 0..n {
            let ej = e[j];
            let (tv, phi) = if ej <= 0.0 {
                (t_f + ej * inv_cap_solid, 1.0)
            } else if ej >= e_latent {
                (t_f + (ej - e_latent) * inv_cap_liquid, 0.0)
            } else {
                (t_f, 1.0 - ej * inv_latent)
            };
            temp[j] = tv;
            cond[j] = k_l + phi * (k_s - k_l);
        }
        // heat flux in the +x direction at the face, then across each
        // interior cell boundary
        let mut q_left = match sol.spec.bc {
            BoundaryCondition::Dirichlet { t_0 } => -cond[0] * (temp[0] - t_0) / (0.5 * dx),
            BoundaryCondition::Convective { h_0, t_inf } => {
                let h_now = h_0 / (t_now + 0.5 * dt).sqrt();
                -(temp[0] - t_inf) / (1.0 / h_now + 0.5 * dx / cond[0])
            }
            BoundaryCondition::Flux { .. } => {
                return Err(Error::Unsupported("no march path for an imposed-flux spec".into()))
            }
        };
        for j in 0..n - 1 {
            let (ka, kb) = (cond[j], cond[j + 1]);
            let k_face = if ka == kb { ka } else { 2.0 * ka * kb / (ka + kb) };
            let q_right = -k_face * (temp[j + 1] - temp[j]) / dx;
            e[j] += dt_dx * (q_left - q_right);
            q_left = q_right;
        }
        e[n - 1] = e_far;

        if (step + 1) % every == 0 || step + 1 == steps {
            let t_next = t0 + (step + 1) as f64 * dt;
            let mut solid_depth = 0.0f64;
            for &ej in &e {
                solid_depth += if ej <= 0.0 {
                    1.0
                } else if ej >= e_latent {
                    0.0
                } else {
                    1.0 - ej * inv_latent
                };
            }
            let s_num = solid_depth * dx;
            let s_ref = sol.front_position(t_next)?;
            if t_next >= 2.0 * t0 * (1.0 - 1e-12) {
                max_rel_error = max_rel_error.max((s_num - s_ref).abs() / s_ref);
            }
            times.push(t_next);
            numeric.push(s_num);
            analytic.push(s_ref);
        }
    }

    Ok(FrontPath { cells: n, x_step: dx, dt, times, numeric, analytic, max_rel_error })
}

//! Closed-form solutions for one-dimensional solidification of a
//! semi-infinite slab of phase-change material, with independent numerical
//! verification.
//!
//! A liquid slab at or above its freezing temperature starts to solidify
//! through the face at x = 0. Two face conditions are covered: an imposed
//! constant temperature below freezing, and a convective film against a
//! cold bulk whose coefficient decays as `h_0 / sqrt(t)` (the one decay law
//! that preserves similarity). In both cases the front moves as
//! `s(t) = 2 c sqrt(alpha_l t)` and the temperature profiles are error
//! functions of `x / sqrt(t)`; the coefficient `c` solves a scalar
//! transcendental equation.
//!
//! The film case has a genuine dichotomy: below a threshold film strength
//! the face never reaches the freezing point and the slab stays liquid
//! ([`model::critical_h0`]). Above it, the two face conditions are two
//! views of one problem: every two-phase film solution maintains a
//! constant face temperature, and imposing that temperature reproduces the
//! solution exactly ([`equivalence`]).
//!
//! [`verify`] checks all of this without trusting the derivations:
//! finite-difference residuals of the governing equations, a re-solve in
//! dimensionless variables, and an enthalpy-method marching oracle.
//!
//! ```
//! use stefan_kit::{solve, BoundaryCondition, MaterialProperties, ProblemSpec};
//!
//! let ice = MaterialProperties {
//!     rho: 1000.0,
//!     c_s: 2100.0,
//!     c_l: 4200.0,
//!     k_s: 2.1,
//!     k_l: 0.6,
//!     latent_heat: 334_000.0,
//!     t_f: 0.0,
//! };
//! let spec = ProblemSpec::new(ice, 10.0, BoundaryCondition::Dirichlet { t_0: -20.0 })?;
//! let sol = solve(&spec)?;
//! let front = sol.front_position(3600.0)?;
//! assert!((0.02..0.03).contains(&front));
//! # Ok::<(), stefan_kit::Error>(())
//! ```

// special-function coefficients and frozen test anchors are transcribed at
// full 17-digit length, one past the shortest round trip
#![allow(clippy::excessive_precision)]

pub mod convective;
pub mod equivalence;
mod error;
pub mod model;
pub mod neumann;
mod solver;
pub mod special;
pub mod verify;

pub use error::Error;
pub use model::{BoundaryCondition, DimensionlessGroups, MaterialProperties, ProblemSpec};
pub use neumann::{Phase, Regime, SimilaritySolution};
pub use solver::{FrontSolve, RootTolerance};

/// Solve a spec with default root tolerances. Imposed-temperature specs
/// always produce a front; convective specs are classified first and may
/// come back as pure conduction (no front, liquid everywhere). Imposed-flux
/// specs have no solution path here.
pub fn solve(spec: &ProblemSpec) -> Result<SimilaritySolution, Error> {
    solve_with(spec, RootTolerance::default())
}

/// [`solve`] with caller-chosen root tolerances.
pub fn solve_with(spec: &ProblemSpec, tol: RootTolerance) -> Result<SimilaritySolution, Error> {
    match spec.bc {
        BoundaryCondition::Dirichlet { .. } => neumann::solve_dirichlet(spec, tol),
        BoundaryCondition::Convective { .. } => convective::solve_convective(spec, tol),
        BoundaryCondition::Flux { .. } => {
            Err(Error::Unsupported("no solution path for an imposed-flux spec".into()))
        }
    }
}
